// Static SVG rendering of sweep traces: one panel per trace step, laid out
// in a grid. Each panel shows the processed points (filled by final color,
// grey when uncolored), the region on or below the staircase (shaded), the
// staircase outline, all edges so far and the edges added by the step.
// Output is byte-identical for identical input.

#pragma once

#include "octcover/staircase.hpp"

#include <span>
#include <string>

namespace octcover::svg {

struct RenderOptions {
  double panel_size = 240;
  std::size_t columns = 4;
};

std::string render_trace(const Trace &trace, std::span<const Color> colors, const RenderOptions &options = {});

} // namespace octcover::svg
