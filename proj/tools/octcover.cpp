#include "octcover/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace octcover::cli;

int main(int argc, char **argv) {
  CLI::App app{"Two-color point sets against octants and split octant or triangle covers"};
  app.require_subcommand(1);

  ColorArgs color;
  auto *c = app.add_subcommand("color", "2-color a 3D point set and verify it at threshold 12");
  c->add_option("input", color.input, "points (CSV x,y,z or JSON)")->required();
  c->add_option("--out", color.out_path, "write the report here as well");
  c->add_option("--trace", color.trace_path, "write the sweep trace as JSON");
  c->add_option("--trace-svg", color.trace_svg, "render the sweep trace as SVG");
  c->add_option("--oracle-limit", color.oracle_limit, "largest input the verifier accepts");
  c->add_flag("--check-invariants", color.check_invariants, "audit the sweep invariants after every insertion");

  VerifyArgs verify;
  auto *v = app.add_subcommand("verify", "check a coloring report against a point set");
  v->add_option("points", verify.points, "points (CSV x,y,z or JSON)")->required();
  v->add_option("colors", verify.colors, "JSON document with a \"colors\" array")->required();
  v->add_option("--threshold", verify.threshold);
  v->add_option("--out", verify.out_path);
  v->add_option("--oracle-limit", verify.oracle_limit);

  DecomposeArgs decompose;
  auto *d = app.add_subcommand("decompose", "split an octant or triangle-homothet family into two classes");
  d->add_option("input", decompose.input, "JSON with \"octants\" or \"frame\" and \"homothets\"")->required();
  d->add_option("--threshold", decompose.threshold, "depth checked by the verifier");
  d->add_option("--out", decompose.out_path);
  d->add_option("--oracle-limit", decompose.oracle_limit);

  LowerBoundArgs lower;
  std::string realization;
  auto *l = app.add_subcommand("lowerbound", "exhaust all 2-colorings of the 12-triple hypergraph");
  auto *real_opt = l->add_option("--realization", realization, "validate a point realization (default fixture)")
                       ->expected(0, 1);
  l->add_option("--write-realization", lower.write_realization, "search for a realization and write it");
  l->add_option("--out", lower.out_path);

  BottomlessArgs bottomless;
  auto *b = app.add_subcommand("bottomless", "color a planar antichain against bottomless rectangles");
  b->add_option("input", bottomless.input, "sequence of x,y rows in arrival order")->required();
  b->add_option("--out", bottomless.out_path);

  RenderArgs render;
  auto *r = app.add_subcommand("render", "render a trace written by color --trace");
  r->add_option("trace", render.trace)->required();
  r->add_option("--svg", render.svg, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (*c)
    return cmd_color(color, std::cout, std::cerr);
  if (*v)
    return cmd_verify(verify, std::cout, std::cerr);
  if (*d)
    return cmd_decompose(decompose, std::cout, std::cerr);
  if (*l) {
    if (real_opt->count() > 0)
      lower.realization = realization;
    return cmd_lowerbound(lower, std::cout, std::cerr);
  }
  if (*b)
    return cmd_bottomless(bottomless, std::cout, std::cerr);
  return cmd_render(render, std::cout, std::cerr);
}
