#include "octcover/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace octcover::io {

using nlohmann::json;

ParseError::ParseError(std::size_t line, std::string where, const std::string &what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", " + where + ": " + what
                                  : where + ": " + what),
      line_(line), where_(std::move(where)) {}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << contents;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

bool is_json(std::string_view text) {
  const auto t = trim(text);
  const auto first = t.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && t[first] == '{';
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(0, "json", e.what());
  }
}

// Rows of exactly `dims` numbers.
std::vector<std::vector<double>> parse_csv(std::string_view text, std::size_t dims) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    std::vector<std::string_view> fields;
    for (std::size_t start = 0;;) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }

    const bool first_row = !seen_row;
    seen_row = true;
    if (first_row && !to_number(fields.front()))
      continue; // header
    if (fields.size() != dims)
      throw ParseError(line_no, "row", "expected " + std::to_string(dims) + " fields, got " +
                                           std::to_string(fields.size()));
    std::vector<double> row;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      const auto v = to_number(fields[f]);
      if (!v)
        throw ParseError(line_no, "field " + std::to_string(f + 1),
                         "expected a finite number, got '" + std::string(trim(fields[f])) + "'");
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> json_numbers(const json &j, std::size_t dims, const std::string &where) {
  if (!j.is_array() || j.size() != dims)
    throw ParseError(0, where, "expected an array of " + std::to_string(dims) + " numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < dims; ++k) {
    if (!j[k].is_number() || !std::isfinite(j[k].get<double>()))
      throw ParseError(0, where + "[" + std::to_string(k) + "]", "expected a finite number");
    out.push_back(j[k].get<double>());
  }
  return out;
}

std::vector<std::vector<double>> json_rows(const json &doc, const char *key, std::size_t dims) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array())
    throw ParseError(0, key, "missing array");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < doc[key].size(); ++i)
    rows.push_back(json_numbers(doc[key][i], dims, std::string(key) + "[" + std::to_string(i) + "]"));
  return rows;
}

Point2 to_point2(const std::vector<double> &r) { return {r[0], r[1]}; }
Point3 to_point3(const std::vector<double> &r) { return {r[0], r[1], r[2]}; }

} // namespace

PointSet3 parse_points3(std::string_view text) {
  const auto rows = is_json(text) ? json_rows(parse_json(text), "points", 3) : parse_csv(text, 3);
  PointSet3 out;
  for (const auto &r : rows)
    out.push_back(to_point3(r));
  return out;
}

std::vector<Point2> parse_points2(std::string_view text) {
  const auto rows = is_json(text) ? json_rows(parse_json(text), "points", 2) : parse_csv(text, 2);
  std::vector<Point2> out;
  for (const auto &r : rows)
    out.push_back(to_point2(r));
  return out;
}

FamilyInput parse_family(std::string_view text) {
  if (!is_json(text)) {
    OctantFamily f;
    for (const auto &r : parse_csv(text, 3))
      f.push_back(Octant{to_point3(r)});
    return f;
  }
  const json doc = parse_json(text);
  if (doc.is_object() && doc.contains("octants")) {
    OctantFamily f;
    for (const auto &r : json_rows(doc, "octants", 3))
      f.push_back(Octant{to_point3(r)});
    return f;
  }
  if (!doc.is_object() || !doc.contains("frame"))
    throw ParseError(0, "json", "expected an \"octants\" array or a \"frame\" with \"homothets\"");

  const auto frame_rows = json_rows(doc, "frame", 2);
  if (frame_rows.size() != 3)
    throw ParseError(0, "frame", "expected 3 vertices");
  HomothetFamily fam{[&] {
    try {
      return TriangleFrame::from_vertices({to_point2(frame_rows[0]), to_point2(frame_rows[1]), to_point2(frame_rows[2])});
    } catch (const std::invalid_argument &e) {
      throw ParseError(0, "frame", e.what());
    }
  }(), {}};

  if (!doc.contains("homothets") || !doc["homothets"].is_array())
    throw ParseError(0, "homothets", "missing array");
  const auto &list = doc["homothets"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "homothets[" + std::to_string(i) + "]";
    const auto &h = list[i];
    if (!h.is_object())
      throw ParseError(0, where, "expected an object");
    try {
      if (h.contains("vertices")) {
        const auto &vs = h["vertices"];
        if (!vs.is_array() || vs.size() != 3)
          throw ParseError(0, where + ".vertices", "expected 3 vertices");
        std::array<Point2, 3> v;
        for (std::size_t k = 0; k < 3; ++k)
          v[k] = to_point2(json_numbers(vs[k], 2, where + ".vertices[" + std::to_string(k) + "]"));
        fam.homothets.push_back(homothet_from_vertices(fam.frame, v));
        continue;
      }
      if (!h.contains("scale") || !h["scale"].is_number())
        throw ParseError(0, where + ".scale", "expected a number");
      const double scale = h["scale"].get<double>();
      if (!std::isfinite(scale) || !(scale > 0))
        throw ParseError(0, where + ".scale", "scale must be positive, got " + h["scale"].dump());
      const auto t = h.contains("t") ? json_numbers(h["t"], 2, where + ".t") : std::vector<double>{0, 0};
      fam.homothets.push_back(Homothet{scale, to_point2(t)});
    } catch (const std::invalid_argument &e) {
      throw ParseError(0, where, e.what());
    }
  }
  return fam;
}

json colors_to_json(std::span<const Color> colors) {
  json arr = json::array();
  for (Color c : colors)
    arr.push_back(std::string(to_string(c)));
  return arr;
}

Coloring colors_from_json(const json &j) {
  if (!j.is_array())
    throw ParseError(0, "colors", "expected an array");
  Coloring out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] == "red")
      out.push_back(Color::Red);
    else if (j[i] == "blue")
      out.push_back(Color::Blue);
    else
      throw ParseError(0, "colors[" + std::to_string(i) + "]", "expected \"red\" or \"blue\"");
  }
  return out;
}

json witness_to_json(const VerifyWitness &w) {
  json j;
  j["location"] = w.location;
  j["members"] = w.members;
  j["red"] = w.red;
  j["blue"] = w.blue;
  if (w.step > 0)
    j["step"] = w.step;
  return j;
}

json trace_to_json(const Trace &trace, std::span<const Color> colors) {
  json j;
  json pts = json::array();
  for (const auto &p : trace.points)
    pts.push_back({p.x, p.y});
  j["points"] = std::move(pts);
  j["original_index"] = trace.original_index;
  j["colors"] = colors_to_json(colors);
  json steps = json::array();
  for (const auto &s : trace.steps) {
    json e = json::array();
    for (const auto &edge : s.new_edges)
      e.push_back({edge.u, edge.v});
    steps.push_back({{"point", s.point},
                     {"kind", std::string(1, static_cast<char>(s.kind))},
                     {"new_edges", std::move(e)},
                     {"promoted", s.promoted},
                     {"staircase", s.staircase},
                     {"below", s.below}});
  }
  j["steps"] = std::move(steps);
  return j;
}

TraceDocument trace_from_json(std::string_view text) {
  const json doc = parse_json(text);
  TraceDocument out;
  try {
    for (const auto &r : json_rows(doc, "points", 2))
      out.trace.points.push_back(to_point2(r));
    out.trace.original_index = doc.at("original_index").get<std::vector<std::size_t>>();
    if (doc.contains("colors"))
      out.colors = colors_from_json(doc["colors"]);
    for (const auto &s : doc.at("steps")) {
      TraceStep step;
      step.point = s.at("point").get<std::size_t>();
      const auto kind = s.at("kind").get<std::string>();
      if (kind.size() != 1 || kind.find_first_of("abcd") != 0)
        throw ParseError(0, "steps.kind", "unknown step kind '" + kind + "'");
      step.kind = static_cast<StepKind>(kind[0]);
      for (const auto &e : s.at("new_edges"))
        step.new_edges.push_back(Edge{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()});
      step.promoted = s.at("promoted").get<std::vector<std::size_t>>();
      step.staircase = s.at("staircase").get<std::vector<std::size_t>>();
      step.below = s.at("below").get<std::vector<std::size_t>>();
      out.trace.steps.push_back(std::move(step));
    }
  } catch (const json::exception &e) {
    throw ParseError(0, "trace", e.what());
  }
  if (out.trace.original_index.size() != out.trace.points.size())
    throw ParseError(0, "original_index", "length differs from points");
  return out;
}

json fixture_to_json(const LowerBoundFixture &fixture) {
  json j;
  json triples = json::array();
  for (const auto &t : fixture.hypergraph.triples)
    triples.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  std::vector<std::size_t> labels;
  json pts = json::array();
  if (fixture.realization) {
    for (std::size_t i = 0; i < fixture.realization->size(); ++i) {
      const auto &p = (*fixture.realization)[i];
      labels.push_back(i + 1);
      pts.push_back({p.x, p.y, p.z});
    }
  }
  j["labels"] = labels;
  j["points"] = std::move(pts);
  j["triples"] = std::move(triples);
  return j;
}

LowerBoundFixture fixture_from_json(std::string_view text) {
  const json doc = parse_json(text);
  LowerBoundFixture f;
  const auto rows = json_rows(doc, "points", 3);
  std::vector<std::size_t> labels;
  try {
    labels = doc.at("labels").get<std::vector<std::size_t>>();
  } catch (const json::exception &e) {
    throw ParseError(0, "labels", e.what());
  }
  if (labels.size() != rows.size())
    throw ParseError(0, "labels", "expected one label per point");
  PointSet3 pts(rows.size());
  std::vector<bool> used(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (labels[i] < 1 || labels[i] > rows.size() || used[labels[i] - 1])
      throw ParseError(0, "labels[" + std::to_string(i) + "]", "labels must be a permutation of 1..n");
    used[labels[i] - 1] = true;
    pts[labels[i] - 1] = to_point3(rows[i]);
  }
  f.hypergraph.n = rows.size();
  f.realization = std::move(pts);
  if (!doc.contains("triples") || !doc["triples"].is_array())
    throw ParseError(0, "triples", "missing array");
  for (std::size_t i = 0; i < doc["triples"].size(); ++i) {
    const auto r = json_numbers(doc["triples"][i], 3, "triples[" + std::to_string(i) + "]");
    std::array<std::size_t, 3> t{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (r[k] < 1 || r[k] > static_cast<double>(rows.size()) || r[k] != std::floor(r[k]))
        throw ParseError(0, "triples[" + std::to_string(i) + "]", "label out of range");
      t[k] = static_cast<std::size_t>(r[k]) - 1;
    }
    std::sort(t.begin(), t.end());
    f.hypergraph.triples.push_back(t);
  }
  return f;
}

} // namespace octcover::io
