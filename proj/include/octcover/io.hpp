// File formats for the command-line front end.
//
// Points:     CSV rows "x,y,z" (or "x,y" for planar input), optional header
//             row, blank lines and '#' comments ignored; or JSON
//             {"points": [[x, y, z], ...]}.
// Octants:    CSV rows of apex coordinates, or JSON {"octants": [[x, y, z], ...]}.
// Triangles:  JSON {"frame": [[x, y], [x, y], [x, y]],
//                   "homothets": [{"scale": s, "t": [tx, ty]}, ...]};
//             a homothet may instead be given as {"vertices": [[..], [..], [..]]}
//             listed in frame order.
// Trace:      JSON written by `color --trace`, read by `render`.
// Fixture:    JSON {"labels": [1..n], "points": [[x, y, z], ...],
//                   "triples": [[a, b, c], ...]} with 1-based labels.
//
// JSON input is recognized by a leading '{'; anything else is CSV.

#pragma once

#include "octcover/duality.hpp"
#include "octcover/special_cases.hpp"
#include "octcover/staircase.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace octcover::io {

/// Malformed input. `line` is 1-based for CSV and 0 for JSON.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::string where, const std::string &what);

  std::size_t line() const { return line_; }
  const std::string &where() const { return where_; }

private:
  std::size_t line_;
  std::string where_;
};

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

PointSet3 parse_points3(std::string_view text);
std::vector<Point2> parse_points2(std::string_view text);

using FamilyInput = std::variant<OctantFamily, HomothetFamily>;

/// Octants from CSV or {"octants"}; triangles from {"frame", "homothets"}.
/// Invalid frames and non-positive scales raise ParseError.
FamilyInput parse_family(std::string_view text);

nlohmann::json colors_to_json(std::span<const Color> colors);
Coloring colors_from_json(const nlohmann::json &j);

nlohmann::json witness_to_json(const VerifyWitness &w);

struct TraceDocument {
  Trace trace;
  Coloring colors; // by input index, may be empty
};

nlohmann::json trace_to_json(const Trace &trace, std::span<const Color> colors);
TraceDocument trace_from_json(std::string_view text);

nlohmann::json fixture_to_json(const LowerBoundFixture &fixture);
LowerBoundFixture fixture_from_json(std::string_view text);

} // namespace octcover::io
