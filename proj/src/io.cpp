#include "hullpart/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hullpart/errors.hpp"

namespace hullpart {

namespace {

using ordered_json = nlohmann::ordered_json;

double round12(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return std::strtod(buf.data(), nullptr);
}

double number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("non-finite ") + what);
  return v;
}

ordered_json points_json(std::span<const Point> pts, bool rounded) {
  ordered_json out = ordered_json::array();
  for (const Point& p : pts) {
    out.push_back(rounded ? ordered_json::array({round12(p.x), round12(p.y)})
                          : ordered_json::array({p.x, p.y}));
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("polygons") || !doc["polygons"].is_array()) {
    throw ParseError("instance must be an object with a \"polygons\" array");
  }
  Instance out;
  const auto& polys = doc["polygons"];
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& poly = polys[i];
    if (!poly.is_array()) throw ParseError("polygon " + std::to_string(i) + " is not an array");
    std::vector<Point> pts;
    for (const auto& v : poly) {
      if (!v.is_array() || v.size() != 2) {
        throw ParseError("polygon " + std::to_string(i) + ": vertices must be [x, y] pairs");
      }
      pts.push_back({number(v[0], "x"), number(v[1], "y")});
    }
    try {
      out.polygons.push_back(convex_hull(pts));
    } catch (const DegenerateInput& e) {
      throw DegenerateInput("polygon " + std::to_string(i) + ": " + e.what());
    }
  }
  if (doc.contains("meta") && doc["meta"].is_object()) {
    const auto& meta = doc["meta"];
    if (meta.contains("name") && meta["name"].is_string()) out.name = meta["name"].get<std::string>();
    if (meta.contains("expected_total")) out.expected_total = number(meta["expected_total"], "expected_total");
  }
  return out;
}

std::string write_instance(const Instance& instance) {
  ordered_json doc;
  doc["polygons"] = ordered_json::array();
  for (const ConvexPolygon& p : instance.polygons) doc["polygons"].push_back(points_json(p.vertices(), false));
  if (instance.name || instance.expected_total) {
    ordered_json meta = ordered_json::object();
    if (instance.name) meta["name"] = *instance.name;
    if (instance.expected_total) meta["expected_total"] = *instance.expected_total;
    doc["meta"] = meta;
  }
  return doc.dump() + "\n";
}

std::string write_result(const Partition& partition) {
  ordered_json doc;
  doc["total_perimeter"] = round12(partition.total);
  doc["components"] = partition.components;
  doc["hulls"] = ordered_json::array();
  for (const ConvexPolygon& h : partition.hulls) doc["hulls"].push_back(points_json(h.vertices(), true));
  doc["mode"] = std::string(to_string(partition.mode));
  doc["merge_trace"] = ordered_json::array();
  for (const MergeEvent& ev : partition.merge_trace) {
    ordered_json e;
    e["after_input"] = ev.after_input;
    e["merged"] = ev.merged;
    e["delta"] = round12(ev.delta);
    doc["merge_trace"].push_back(e);
  }
  return doc.dump(2) + "\n";
}

std::string render_svg(const Instance& instance, const Partition& partition) {
  static constexpr std::array<const char*, 8> kColors = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                         "#66a61e", "#e6ab02", "#a6761d", "#1f78b4"};
  BoundingBox box{0, 0, 1, 1};
  bool first = true;
  for (const ConvexPolygon& p : instance.polygons) {
    const BoundingBox& b = p.bounds();
    if (first) {
      box = b;
      first = false;
    }
    box.min_x = std::min(box.min_x, b.min_x);
    box.min_y = std::min(box.min_y, b.min_y);
    box.max_x = std::max(box.max_x, b.max_x);
    box.max_y = std::max(box.max_y, b.max_y);
  }
  const double w = box.max_x - box.min_x;
  const double h = box.max_y - box.min_y;
  const double mx = 0.05 * w;
  const double my = 0.05 * h;

  auto num = [](double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", v == 0.0 ? 0.0 : v);
    return std::string(buf.data());
  };
  // SVG's y axis points down; negate y so the picture is upright.
  auto path = [&](const ConvexPolygon& p) {
    std::string d;
    for (std::size_t i = 0; i < p.size(); ++i) {
      d += (i == 0 ? "M" : " L") + num(p.vertex(i).x) + " " + num(-p.vertex(i).y);
    }
    return d + " Z";
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.min_x - mx) << " "
      << num(-box.max_y - my) << " " << num(w + 2 * mx) << " " << num(h + 2 * my) << "\">\n";
  out << "  <g id=\"inputs\">\n";
  for (const ConvexPolygon& p : instance.polygons) {
    out << "    <path d=\"" << path(p)
        << "\" fill=\"#cccccc\" stroke=\"#888888\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "  </g>\n  <g id=\"hulls\">\n";
  for (std::size_t k = 0; k < partition.hulls.size(); ++k) {
    out << "    <path d=\"" << path(partition.hulls[k]) << "\" fill=\"none\" stroke=\""
        << kColors[k % kColors.size()]
        << "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

Instance generate_instance(std::size_t n, std::size_t m, GenMode mode, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  m = std::max<std::size_t>(m, 3);
  const double span = 6.0 * std::sqrt(static_cast<double>(n));
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  constexpr double kCell = 10.0;

  Instance out;
  for (std::size_t i = 0; i < n; ++i) {
    double cx = 0.0;
    double cy = 0.0;
    double rmax = 4.0;
    if (mode == GenMode::Disjoint) {
      cx = (static_cast<double>(i % cols) + 0.5) * kCell + (unit(rng) - 0.5);
      cy = (static_cast<double>(i / cols) + 0.5) * kCell + (unit(rng) - 0.5);
      rmax = 0.5 * kCell - 1.0;
    } else {
      cx = span * unit(rng);
      cy = span * unit(rng);
    }
    for (;;) {
      const double a = 0.5 + (rmax - 0.5) * unit(rng);
      const double b = 0.5 + (rmax - 0.5) * unit(rng);
      const double rot = std::numbers::pi * unit(rng);
      const std::size_t lo = std::max<std::size_t>(3, (m + 1) / 2);
      const std::size_t k = lo + static_cast<std::size_t>(unit(rng) * static_cast<double>(m - lo + 1));
      std::vector<Point> pts;
      for (std::size_t j = 0; j < std::min(k, m); ++j) {
        const double t = 2.0 * std::numbers::pi * unit(rng);
        const double ex = a * std::cos(t);
        const double ey = b * std::sin(t);
        pts.push_back({cx + ex * std::cos(rot) - ey * std::sin(rot),
                       cy + ex * std::sin(rot) + ey * std::cos(rot)});
      }
      try {
        out.polygons.push_back(convex_hull(pts));
        break;
      } catch (const DegenerateInput&) {
        // Too few distinct directions drawn; draw again.
      }
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace hullpart
