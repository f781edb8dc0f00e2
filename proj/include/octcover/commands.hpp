// Subcommands of the octcover tool. Each writes a JSON report to `out` (and
// to `out_path` when set), diagnostics to `err`, and returns the exit code.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace octcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct ColorArgs {
  std::string input;
  std::string out_path;
  std::string trace_path;
  std::string trace_svg;
  std::size_t oracle_limit = 400;
  bool check_invariants = false;
};

struct VerifyArgs {
  std::string points;
  std::string colors; // a report holding "colors"
  std::string out_path;
  std::size_t threshold = 12;
  std::size_t oracle_limit = 400;
};

struct DecomposeArgs {
  std::string input;
  std::string out_path;
  std::size_t threshold = 12;
  std::size_t oracle_limit = 400;
};

struct LowerBoundArgs {
  std::optional<std::string> realization;
  std::string write_realization;
  std::string out_path;
};

struct BottomlessArgs {
  std::string input;
  std::string out_path;
};

struct RenderArgs {
  std::string trace;
  std::string svg;
};

std::string default_realization_path();

int cmd_color(const ColorArgs &args, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyArgs &args, std::ostream &out, std::ostream &err);
int cmd_decompose(const DecomposeArgs &args, std::ostream &out, std::ostream &err);
int cmd_lowerbound(const LowerBoundArgs &args, std::ostream &out, std::ostream &err);
int cmd_bottomless(const BottomlessArgs &args, std::ostream &out, std::ostream &err);
int cmd_render(const RenderArgs &args, std::ostream &out, std::ostream &err);

} // namespace octcover::cli
