#include "octcover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace octcover::svg {

namespace {

constexpr double kCaption = 20;
constexpr double kGap = 10;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Box {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
};

Box bounds(const std::vector<Point2> &pts) {
  Box b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
        -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto &p : pts) {
    b.x0 = std::min(b.x0, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.x1 = std::max(b.x1, p.x);
    b.y1 = std::max(b.y1, p.y);
  }
  const double wx = b.x1 > b.x0 ? b.x1 - b.x0 : 1.0;
  const double wy = b.y1 > b.y0 ? b.y1 - b.y0 : 1.0;
  b.x0 -= 0.05 * wx;
  b.x1 += 0.05 * wx;
  b.y0 -= 0.05 * wy;
  b.y1 += 0.05 * wy;
  return b;
}

class Panel {
public:
  Panel(const Box &box, double size, double left, double top) : box_(box), size_(size), left_(left), top_(top) {}

  std::string x(double v) const { return num(left_ + (v - box_.x0) / (box_.x1 - box_.x0) * size_); }
  std::string y(double v) const { return num(top_ + size_ - (v - box_.y0) / (box_.y1 - box_.y0) * size_); }
  std::string at(Point2 p) const { return x(p.x) + "," + y(p.y); }

private:
  Box box_;
  double size_, left_, top_;
};

const char *fill_for(std::span<const Color> colors, const Trace &trace, std::size_t rank) {
  if (colors.empty() || rank >= trace.original_index.size() || trace.original_index[rank] >= colors.size())
    return "#9e9e9e";
  return colors[trace.original_index[rank]] == Color::Red ? "#d32f2f" : "#1976d2";
}

} // namespace

std::string render_trace(const Trace &trace, std::span<const Color> colors, const RenderOptions &options) {
  std::ostringstream out;
  const std::size_t steps = trace.steps.size();
  const std::size_t cols = std::max<std::size_t>(1, std::min(options.columns, steps));
  const std::size_t rows = (steps + cols - 1) / cols;
  const double cell_w = options.panel_size + kGap;
  const double cell_h = options.panel_size + kCaption + kGap;
  const double width = steps == 0 ? 0 : static_cast<double>(cols) * cell_w + kGap;
  const double height = steps == 0 ? 0 : static_cast<double>(rows) * cell_h + kGap;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "<style>text{font-family:monospace;font-size:11px}</style>\n";

  const Box box = bounds(trace.points);
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto &step = trace.steps[s];
    const double left = kGap + static_cast<double>(s % cols) * cell_w;
    const double top = kGap + static_cast<double>(s / cols) * cell_h;
    const Panel pv(box, options.panel_size, left, top + kCaption);
    edges.insert(edges.end(), step.new_edges.begin(), step.new_edges.end());

    out << "<g id=\"step-" << s << "\" class=\"step-" << static_cast<char>(step.kind) << "\">\n";
    out << "<text x=\"" << num(left) << "\" y=\"" << num(top + 14) << "\">step " << s << " point " << step.point
        << " (" << static_cast<char>(step.kind) << ")</text>\n";
    out << "<rect x=\"" << num(left) << "\" y=\"" << num(top + kCaption) << "\" width=\"" << num(options.panel_size)
        << "\" height=\"" << num(options.panel_size) << "\" fill=\"none\" stroke=\"#424242\"/>\n";

    // Region on or below the staircase.
    std::vector<Point2> stairs;
    for (std::size_t id : step.staircase)
      stairs.push_back(trace.points[id]);
    std::string outline;
    for (std::size_t k = 0; k < stairs.size(); ++k) {
      const double top_y = k == 0 ? box.y1 : stairs[k - 1].y;
      outline += pv.at({stairs[k].x, top_y}) + " " + pv.at(stairs[k]) + " ";
    }
    outline += stairs.empty() ? pv.at({box.x1, box.y1}) : pv.at({box.x1, stairs.back().y});
    out << "<polygon class=\"below\" fill=\"#eeeeee\" points=\"" << pv.at({box.x0, box.y1}) << " " << outline << " "
        << pv.at({box.x1, box.y0}) << " " << pv.at({box.x0, box.y0}) << "\"/>\n";
    if (!stairs.empty())
      out << "<polyline class=\"staircase\" fill=\"none\" stroke=\"#757575\" stroke-width=\"1.5\" points=\""
          << outline << "\"/>\n";

    for (const auto &e : edges) {
      const bool fresh = std::find(step.new_edges.begin(), step.new_edges.end(), e) != step.new_edges.end();
      out << "<line class=\"" << (fresh ? "edge new" : "edge") << "\" x1=\"" << pv.x(trace.points[e.u].x)
          << "\" y1=\"" << pv.y(trace.points[e.u].y) << "\" x2=\"" << pv.x(trace.points[e.v].x) << "\" y2=\""
          << pv.y(trace.points[e.v].y) << "\" stroke=\"" << (fresh ? "#000000" : "#616161")
          << "\" stroke-width=\"" << (fresh ? "2" : "1") << "\"/>\n";
    }

    for (std::size_t r = 0; r <= step.point && r < trace.points.size(); ++r) {
      const bool on_stairs = std::find(step.staircase.begin(), step.staircase.end(), r) != step.staircase.end();
      const bool promoted = std::find(step.promoted.begin(), step.promoted.end(), r) != step.promoted.end();
      out << "<circle class=\"point" << (on_stairs ? " staircase" : "") << (promoted ? " promoted" : "")
          << "\" cx=\"" << pv.x(trace.points[r].x) << "\" cy=\"" << pv.y(trace.points[r].y) << "\" r=\"4\" fill=\""
          << fill_for(colors, trace, r) << "\" stroke=\"" << (on_stairs ? "#757575" : "none") << "\" stroke-width=\""
          << (promoted ? "3" : "2") << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace octcover::svg
