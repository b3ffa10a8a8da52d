#include "hullpart/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hullpart/errors.hpp"

namespace hullpart {

namespace {

constexpr std::size_t kTickInterval = 512;

}  // namespace

void check_table_size(std::size_t vertices) {
  if (vertices > 1 && vertices * (vertices - 1) / 2 > kMaxTablePairs) {
    throw TooLarge("general mode pair tables would exceed memory (" + std::to_string(vertices) +
                   " vertices); use disjoint mode");
  }
}

void WorkingSet::tick(std::size_t& counter) const {
  if (!deadline_ || ++counter % kTickInterval != 0) return;
  if (Clock::now() > *deadline_) throw SolveCancelled("solve exceeded its deadline");
}

double WorkingSet::pickup(std::size_t a, std::size_t b) const noexcept {
  return a < b ? pickup_[b][a] : -pickup_[a][b];
}

bool WorkingSet::is_free(std::size_t a, std::size_t b) const noexcept {
  return a < b ? blockers_[b][a] == 0 : blockers_[a][b] == 0;
}

double WorkingSet::table_gamma(std::size_t a, std::size_t b) const noexcept {
  return distance(slots_[a].p, slots_[b].p) - pickup(a, b);
}

bool WorkingSet::hits(std::size_t a, std::size_t b, const Element& e) const noexcept {
  const Slot& sa = slots_[a];
  const Slot& sb = slots_[b];
  if (sa.owner == e.uid && sb.owner == e.uid) {
    // Two vertices of one strictly convex polygon: a chord unless adjacent.
    const std::size_t n = e.hull.size();
    const std::size_t d = sa.vertex > sb.vertex ? sa.vertex - sb.vertex : sb.vertex - sa.vertex;
    return d != 1 && d != n - 1;
  }
  return segment_intersects_interior({sa.p, sb.p}, e.hull);
}

void WorkingSet::add_polygon(const ConvexPolygon& p, std::size_t index) {
  const Point& low = p.min_vertex();
  for (const Slot& s : slots_) {
    if (s.alive && point_lt(s.p, low)) {
      throw OrderViolation("polygon added out of decreasing min-vertex order");
    }
  }
  if (alive_elements_ + 1 >= std::numeric_limits<std::uint16_t>::max()) {
    throw Error("too many elements");
  }
  check_table_size(slots_.size() + p.size());

  const auto uid = static_cast<std::uint32_t>(elements_.size());
  elements_.push_back(Element{uid, p, {index}});
  ++alive_elements_;
  const Point& c = p.interior_point();
  const double len = p.perimeter();

  std::size_t counter = 0;
  const std::size_t old = slots_.size();
  for (std::size_t hi = 0; hi < old; ++hi) {
    if (!slots_[hi].alive) continue;
    for (std::size_t lo = 0; lo < hi; ++lo) {
      if (!slots_[lo].alive) continue;
      tick(counter);
      const Segment s{slots_[lo].p, slots_[hi].p};
      pickup_[hi][lo] += ray_crossing_sign(s, c) * len;
      if (segment_intersects_interior(s, p)) ++blockers_[hi][lo];
    }
  }

  for (std::size_t i = 0; i < p.size(); ++i) {
    slots_.push_back({p.vertex(i), uid, i, true});
    ++alive_slots_;
    const std::size_t hi = slots_.size() - 1;
    pickup_.emplace_back(hi, 0.0);
    blockers_.emplace_back(hi, std::uint16_t{0});
    for (std::size_t lo = 0; lo < hi; ++lo) {
      if (!slots_[lo].alive) continue;
      tick(counter);
      const Segment s{slots_[lo].p, slots_[hi].p};
      double y = 0.0;
      std::uint16_t count = 0;
      for (const auto& e : elements_) {
        if (!e) continue;
        y += ray_crossing_sign(s, e->hull.interior_point()) * e->hull.perimeter();
        count += hits(lo, hi, *e) ? 1 : 0;
      }
      pickup_[hi][lo] = y;
      blockers_[hi][lo] = count;
    }
  }
  anchor_slot_ = old;
}

std::uint32_t WorkingSet::apply_merge(std::span<const std::uint32_t> uids) {
  if (uids.size() < 2) throw Error("a merge needs at least two elements");
  std::vector<const ConvexPolygon*> hulls;
  std::vector<std::size_t> members;
  for (std::uint32_t u : uids) {
    const Element& e = element(u);
    hulls.push_back(&e.hull);
    members.insert(members.end(), e.members.begin(), e.members.end());
  }
  std::sort(members.begin(), members.end());
  ConvexPolygon merged = convex_hull_of(hulls);
  const auto uid = static_cast<std::uint32_t>(elements_.size());

  // Surviving slots: one per merged-hull vertex; every other member slot dies.
  std::vector<Point> order(merged.vertices().begin(), merged.vertices().end());
  std::vector<std::size_t> vertex_of(order.size());
  std::iota(vertex_of.begin(), vertex_of.end(), std::size_t{0});
  std::sort(vertex_of.begin(), vertex_of.end(),
            [&](std::size_t a, std::size_t b) { return point_lt(order[a], order[b]); });
  std::vector<bool> taken(order.size(), false);
  for (Slot& s : slots_) {
    if (!s.alive || std::find(uids.begin(), uids.end(), s.owner) == uids.end()) continue;
    const auto it = std::lower_bound(vertex_of.begin(), vertex_of.end(), s.p,
                                     [&](std::size_t k, const Point& q) { return point_lt(order[k], q); });
    if (it != vertex_of.end() && order[*it] == s.p && !taken[*it]) {
      taken[*it] = true;
      s.owner = uid;
      s.vertex = *it;
    } else {
      s.alive = false;
      --alive_slots_;
    }
  }
  if (!slots_[anchor_slot_].alive) {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (slots_[k].alive && slots_[k].p == slots_[anchor_slot_].p) {
        anchor_slot_ = k;
        break;
      }
    }
  }

  std::vector<Element> removed;
  for (std::uint32_t u : uids) {
    removed.push_back(std::move(*elements_[u]));
    elements_[u].reset();
    --alive_elements_;
  }
  elements_.push_back(Element{uid, std::move(merged), std::move(members)});
  ++alive_elements_;
  const Element& fused = *elements_.back();

  std::size_t counter = 0;
  for (std::size_t hi = 0; hi < slots_.size(); ++hi) {
    if (!slots_[hi].alive) continue;
    for (std::size_t lo = 0; lo < hi; ++lo) {
      if (!slots_[lo].alive) continue;
      tick(counter);
      const Segment s{slots_[lo].p, slots_[hi].p};
      double y = ray_crossing_sign(s, fused.hull.interior_point()) * fused.hull.perimeter();
      int count = hits(lo, hi, fused) ? 1 : 0;
      for (const Element& e : removed) {
        y -= ray_crossing_sign(s, e.hull.interior_point()) * e.hull.perimeter();
        count -= segment_intersects_interior(s, e.hull) ? 1 : 0;
      }
      pickup_[hi][lo] += y;
      blockers_[hi][lo] = static_cast<std::uint16_t>(blockers_[hi][lo] + count);
    }
  }
  return uid;
}

double WorkingSet::gamma(const Point& u, const Point& v) const {
  const Segment s{u, v};
  double y = 0.0;
  for (const auto& e : elements_) {
    if (e) y += ray_crossing_sign(s, e->hull.interior_point()) * e->hull.perimeter();
  }
  return distance(u, v) - y;
}

double WorkingSet::delta(std::span<const std::uint32_t> uids) const {
  std::vector<const ConvexPolygon*> hulls;
  double sum = 0.0;
  for (std::uint32_t u : uids) {
    hulls.push_back(&element(u).hull);
    sum += element(u).hull.perimeter();
  }
  return convex_hull_of(hulls).perimeter() - sum;
}

std::vector<const Element*> WorkingSet::elements() const {
  std::vector<const Element*> out;
  for (const auto& e : elements_) {
    if (e) out.push_back(&*e);
  }
  return out;
}

MinResult WorkingSet::find_min() const {
  const Point anchor = slots_[anchor_slot_].p;
  std::vector<std::size_t> p;
  p.reserve(alive_slots_ + 1);
  p.push_back(anchor_slot_);
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    if (slots_[k].alive && slots_[k].p != anchor) p.push_back(k);
  }
  std::sort(p.begin() + 1, p.end(), [&](std::size_t a, std::size_t b) {
    const int c = angle_compare(anchor, slots_[a].p, slots_[b].p);
    return c != 0 ? c < 0 : a < b;
  });
  p.push_back(anchor_slot_);
  const std::size_t k_end = p.size() - 1;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> f(p.size(), kInf);
  std::vector<std::size_t> r(p.size(), 0);
  f[0] = 0.0;
  std::size_t counter = 0;
  for (std::size_t i = 1; i <= k_end; ++i) {
    const std::size_t vi = p[i];
    for (std::size_t j = (i == k_end ? 1 : 0); j < i; ++j) {
      if (f[j] == kInf) continue;
      const std::size_t vj = p[j];
      if (slots_[vj].p == slots_[vi].p || !is_free(vj, vi)) continue;
      tick(counter);
      const double g = source_ == GammaSource::Table ? table_gamma(vj, vi)
                                                     : gamma(slots_[vj].p, slots_[vi].p);
      if (f[j] + g < f[i]) {
        f[i] = f[j] + g;
        r[i] = j;
      }
    }
  }

  MinResult out;
  out.delta = f[k_end];
  if (f[k_end] == kInf) throw Error("no closed curve through the anchor");
  std::vector<std::size_t> path{k_end};
  while (path.back() != 0) path.push_back(r[path.back()]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.curve.push_back(slots_[p[*it]].p);

  for (const auto& e : elements_) {
    if (!e) continue;
    int winding = 0;
    for (std::size_t k = 0; k + 1 < out.curve.size(); ++k) {
      winding += ray_crossing_sign({out.curve[k], out.curve[k + 1]}, e->hull.interior_point());
    }
    if (winding == 1) out.elements.push_back(e->uid);
  }
  return out;
}

TableCheck WorkingSet::check_tables() const {
  TableCheck check;
  for (std::size_t hi = 0; hi < slots_.size(); ++hi) {
    if (!slots_[hi].alive) continue;
    for (std::size_t lo = 0; lo < hi; ++lo) {
      if (!slots_[lo].alive) continue;
      ++check.pairs;
      const Point& a = slots_[lo].p;
      const Point& b = slots_[hi].p;
      std::size_t count = 0;
      for (const auto& e : elements_) {
        if (e && segment_intersects_interior({a, b}, e->hull)) ++count;
      }
      const double err = std::fabs(gamma(a, b) - table_gamma(lo, hi));
      check.max_gamma_error = std::max(check.max_gamma_error, err);
      if ((count == 0) != is_free(lo, hi)) ++check.free_mismatches;
      if (count != blockers_[hi][lo]) ++check.count_mismatches;
    }
  }
  return check;
}

double merge_tolerance(std::span<const ConvexPolygon> polygons) noexcept {
  if (polygons.empty()) return 0.0;
  BoundingBox box = polygons.front().bounds();
  for (const ConvexPolygon& p : polygons) {
    box.min_x = std::min(box.min_x, p.bounds().min_x);
    box.min_y = std::min(box.min_y, p.bounds().min_y);
    box.max_x = std::max(box.max_x, p.bounds().max_x);
    box.max_y = std::max(box.max_y, p.bounds().max_y);
  }
  return 1e-9 * std::hypot(box.max_x - box.min_x, box.max_y - box.min_y);
}

std::vector<std::size_t> insertion_order(std::span<const ConvexPolygon> polygons) {
  std::vector<std::size_t> order(polygons.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return point_lt(polygons[b].min_vertex(), polygons[a].min_vertex());
  });
  return order;
}

Partition solve(std::span<const ConvexPolygon> polygons, const SolveOptions& options) {
  std::size_t vertices = 0;
  for (const ConvexPolygon& p : polygons) vertices += p.size();
  check_table_size(vertices);
  WorkingSet ws(options.gamma_source);
  ws.set_deadline(options.deadline);
  const double eps = merge_tolerance(polygons);
  std::vector<MergeEvent> trace;

  for (std::size_t index : insertion_order(polygons)) {
    ws.add_polygon(polygons[index], index);
    if (options.on_event) options.on_event(ws, {EngineEvent::Kind::Added, index});
    while (ws.element_count() > 1) {
      const MinResult best = ws.find_min();
      if (best.elements.size() < 2 || best.delta > eps) break;
      MergeEvent ev{index, {}, best.delta};
      for (std::uint32_t u : best.elements) ev.merged.push_back(ws.element(u).members);
      std::sort(ev.merged.begin(), ev.merged.end());
      trace.push_back(std::move(ev));
      ws.apply_merge(best.elements);
      if (options.on_event) options.on_event(ws, {EngineEvent::Kind::Merged, index});
    }
  }

  std::vector<std::vector<std::size_t>> components;
  for (const Element* e : ws.elements()) components.push_back(e->members);
  Partition out = make_partition(polygons, std::move(components));
  out.mode = SolveMode::General;
  out.merge_trace = std::move(trace);
  return out;
}

}  // namespace hullpart
