#include "hullpart/disjoint.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hullpart/errors.hpp"

namespace hullpart {

namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const noexcept { return point_lt(a, b); }
};

// ccw[i]: edges before i that turn counterclockwise as seen from the anchor,
// i.e. along which the angle around the anchor decreases.
std::vector<std::size_t> backward_prefix(const ConvexPolygon& p, const Point& anchor) {
  std::vector<std::size_t> ccw(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    ccw[i + 1] = ccw[i] + (orientation(anchor, p.vertex(i), p.vertex(i + 1)) == Orientation::CCW);
  }
  return ccw;
}

std::size_t backward_edges(const std::vector<std::size_t>& ccw, const Arc& a) {
  const std::size_t n = ccw.size() - 1;
  if (a.full) return ccw[n];
  if (a.start <= a.end) return ccw[a.end] - ccw[a.start];
  return ccw[n] - ccw[a.start] + ccw[a.end];
}

}  // namespace

TangentGraph build_tangent_graph(std::span<const Element* const> elements, const Point& anchor,
                                 TangentSearch search, TangentCache* cache) {
  TangentGraph g;
  std::map<Point, std::size_t, PointLess> node_of;
  auto node = [&](const Point& p) {
    const auto [it, inserted] = node_of.emplace(p, g.nodes.size());
    if (inserted) g.nodes.push_back(p);
    return it->second;
  };
  g.anchor = node(anchor);

  const std::size_t k = elements.size();
  std::vector<std::vector<std::size_t>> interest(k, std::vector<std::size_t>{0});
  std::set<std::size_t> endpoint_nodes;

  auto pickup_of_segment = [&](const Segment& s) {
    double y = 0.0;
    for (const Element* z : elements) {
      y += ray_crossing_sign(s, z->hull.interior_point()) * z->hull.perimeter();
    }
    return y;
  };

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::size_t pi = i;
      std::size_t qi = j;
      if (elements[qi]->uid < elements[pi]->uid) std::swap(pi, qi);
      const ConvexPolygon& p = elements[pi]->hull;
      const ConvexPolygon& q = elements[qi]->hull;
      OuterTangents ot;
      const auto key = std::make_pair(elements[pi]->uid, elements[qi]->uid);
      if (cache != nullptr && cache->count(key) != 0) {
        ot = cache->at(key);
      } else {
        ot = common_outer_tangents(p, q, search);
        if (cache != nullptr) cache->emplace(key, ot);
      }
      for (const Tangent& t : {ot.forward, ot.backward}) {
        interest[pi].push_back(t.p_vertex);
        interest[qi].push_back(t.q_vertex);
        const Point& a = p.vertex(t.p_vertex);
        const Point& b = q.vertex(t.q_vertex);
        const std::size_t na = node(a);
        const std::size_t nb = node(b);
        endpoint_nodes.insert(na);
        endpoint_nodes.insert(nb);
        if (a == b) continue;
        GraphEdge e;
        e.from = na;
        e.to = nb;
        e.length = t.length;
        const Segment s{a, b};
        e.pickup = pickup_of_segment(s);
        for (std::size_t z = 0; z < k && e.free; ++z) {
          if (z != pi && z != qi && segment_intersects_interior(s, elements[z]->hull)) e.free = false;
        }
        g.edges.push_back(e);
      }
    }
  }
  g.tangent_endpoints = endpoint_nodes.size();

  for (std::size_t i = 0; i < k; ++i) {
    const Element& el = *elements[i];
    const ConvexPolygon& h = el.hull;
    auto& idx = interest[i];
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    const auto ccw = backward_prefix(h, anchor);
    auto add_arc = [&](const Arc& arc) {
      GraphEdge e;
      e.from = node(h.vertex(arc.start));
      e.to = node(h.vertex(arc.end));
      e.is_arc = true;
      e.element = el.uid;
      e.arc = arc;
      e.length = arc_length(h, arc);
      for (const Element* z : elements) {
        e.pickup += ray_arc_crossings(h, arc, z->hull.interior_point()) * z->hull.perimeter();
      }
      e.monotone = backward_edges(ccw, arc) == 0;
      g.edges.push_back(e);
    };
    if (idx.size() == 1) {
      if (h.vertex(idx[0]) == anchor) add_arc({idx[0], idx[0], true});
      continue;
    }
    for (std::size_t t = 0; t < idx.size(); ++t) add_arc({idx[t], idx[(t + 1) % idx.size()], false});
  }
  return g;
}

MinResult find_min(const TangentGraph& g, std::span<const Element* const> elements) {
  const Point& anchor = g.nodes[g.anchor];
  const std::size_t nn = g.nodes.size();

  // Nodes other than the anchor by angle, then distance. Each gets an "out"
  // copy (reached while moving away from the anchor along its ray) and an
  // "in" copy (moving back towards it), so runs collinear with the anchor can
  // be walked in either sense.
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < nn; ++v) {
    if (v != g.anchor) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angle_compare(anchor, g.nodes[a], g.nodes[b]) < 0;
  });
  std::vector<std::size_t> group(nn, 0);
  std::vector<std::size_t> out_id(nn, 0);
  std::vector<std::size_t> in_id(nn, 0);
  std::size_t next = 1;
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s + 1;
    while (e < order.size() &&
           cross_sign(anchor, g.nodes[order[s]], anchor, g.nodes[order[e]]) == 0) {
      ++e;
    }
    for (std::size_t t = s; t < e; ++t) {
      group[order[t]] = s + 1;
      out_id[order[t]] = next++;
    }
    for (std::size_t t = e; t-- > s;) in_id[order[t]] = next++;
    s = e;
  }
  const std::size_t sink = next;

  struct Step {
    std::size_t from;
    std::size_t to;
    double cost;
    std::size_t edge;
    bool forward;
  };
  std::vector<Step> steps;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const GraphEdge& e = g.edges[ei];
    if (!e.free || (e.is_arc && !e.monotone)) continue;
    for (bool forward : {true, false}) {
      if (!forward && e.is_arc) break;
      const std::size_t x = forward ? e.from : e.to;
      const std::size_t y = forward ? e.to : e.from;
      const double cost = e.length - (forward ? e.pickup : -e.pickup);
      auto add = [&](std::size_t a, std::size_t b) { steps.push_back({a, b, cost, ei, forward}); };
      if (x == g.anchor && y == g.anchor) {
        if (e.is_arc && e.arc.full) add(0, sink);
      } else if (x == g.anchor) {
        add(0, out_id[y]);
        add(0, in_id[y]);
      } else if (y == g.anchor) {
        add(out_id[x], sink);
        add(in_id[x], sink);
      } else if (group[x] < group[y]) {
        for (std::size_t a : {out_id[x], in_id[x]}) {
          for (std::size_t b : {out_id[y], in_id[y]}) add(a, b);
        }
      } else if (group[x] == group[y]) {
        if (out_id[x] < out_id[y]) {
          add(out_id[x], out_id[y]);
        } else {
          add(in_id[x], in_id[y]);
        }
      }
    }
  }
  std::sort(steps.begin(), steps.end(),
            [](const Step& a, const Step& b) { return a.from < b.from; });

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> f(sink + 1, kInf);
  std::vector<std::size_t> via(sink + 1, steps.size());
  f[0] = 0.0;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const Step& st = steps[s];
    if (f[st.from] == kInf) continue;
    if (f[st.from] + st.cost < f[st.to]) {
      f[st.to] = f[st.from] + st.cost;
      via[st.to] = s;
    }
  }
  if (f[sink] == kInf) throw Error("no closed curve through the anchor");

  std::vector<std::size_t> path;
  for (std::size_t at = sink; at != 0; at = steps[via[at]].from) path.push_back(via[at]);
  std::reverse(path.begin(), path.end());

  MinResult out;
  out.delta = f[sink];
  out.curve.push_back(anchor);
  const Element* owner = nullptr;
  for (std::size_t s : path) {
    const GraphEdge& e = g.edges[steps[s].edge];
    if (!e.is_arc) {
      out.curve.push_back(g.nodes[steps[s].forward ? e.to : e.from]);
      continue;
    }
    for (const Element* el : elements) {
      if (el->uid == e.element) owner = el;
    }
    const std::size_t n = owner->hull.size();
    std::size_t len = e.arc.full ? n : (e.arc.end + n - e.arc.start) % n;
    for (std::size_t t = 1; t <= len; ++t) out.curve.push_back(owner->hull.vertex(e.arc.start + t));
  }

  for (const Element* el : elements) {
    const Point& c = el->hull.interior_point();
    int winding = 0;
    for (std::size_t k = 0; k + 1 < out.curve.size(); ++k) {
      winding += ray_crossing_sign({out.curve[k], out.curve[k + 1]}, c);
    }
    if (winding == 1) out.elements.push_back(el->uid);
  }
  return out;
}

bool pairwise_disjoint(std::span<const ConvexPolygon> polygons) {
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    for (std::size_t j = i + 1; j < polygons.size(); ++j) {
      if (interiors_overlap(polygons[i], polygons[j])) return false;
    }
  }
  return true;
}

Partition solve_disjoint(std::span<const ConvexPolygon> polygons, const SolveOptions& options) {
  auto fallback = [&](const char* why) {
    if (options.strict_disjoint) throw NotDisjoint(why);
    return solve(polygons, options);
  };
  if (!pairwise_disjoint(polygons)) return fallback("input polygons have overlapping interiors");

  auto check_deadline = [&] {
    if (options.deadline && Clock::now() > *options.deadline) {
      throw SolveCancelled("solve exceeded its deadline");
    }
  };
  const double eps = merge_tolerance(polygons);
  std::vector<std::optional<Element>> store;
  TangentCache cache;
  std::vector<MergeEvent> trace;
  auto alive = [&] {
    std::vector<const Element*> out;
    for (const auto& e : store) {
      if (e) out.push_back(&*e);
    }
    return out;
  };

  for (std::size_t index : insertion_order(polygons)) {
    const auto uid = static_cast<std::uint32_t>(store.size());
    store.push_back(Element{uid, polygons[index], {index}});
    const Point anchor = polygons[index].min_vertex();
    for (;;) {
      check_deadline();
      const std::vector<const Element*> live = alive();
      if (live.size() < 2) break;
      const TangentGraph g = build_tangent_graph(live, anchor, options.tangent_search, &cache);
      const MinResult best = find_min(g, live);
      if (best.elements.size() < 2 || best.delta > eps) break;

      std::vector<const ConvexPolygon*> hulls;
      std::vector<std::size_t> members;
      MergeEvent ev{index, {}, best.delta};
      for (std::uint32_t u : best.elements) {
        hulls.push_back(&store[u]->hull);
        members.insert(members.end(), store[u]->members.begin(), store[u]->members.end());
        ev.merged.push_back(store[u]->members);
      }
      std::sort(ev.merged.begin(), ev.merged.end());
      std::sort(members.begin(), members.end());
      ConvexPolygon merged = convex_hull_of(hulls);
      for (const Element* e : live) {
        const bool in_s =
            std::find(best.elements.begin(), best.elements.end(), e->uid) != best.elements.end();
        if (!in_s && interiors_overlap(merged, e->hull)) {
          return fallback("a merged hull overlaps another element");
        }
      }
      for (std::uint32_t u : best.elements) store[u].reset();
      store.push_back(Element{static_cast<std::uint32_t>(store.size()), std::move(merged),
                              std::move(members)});
      trace.push_back(std::move(ev));
    }
  }

  std::vector<std::vector<std::size_t>> components;
  for (const Element* e : alive()) components.push_back(e->members);
  Partition out = make_partition(polygons, std::move(components));
  out.mode = SolveMode::Disjoint;
  out.merge_trace = std::move(trace);
  return out;
}

}  // namespace hullpart
