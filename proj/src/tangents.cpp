#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hullpart/disjoint.hpp"
#include "hullpart/errors.hpp"

namespace hullpart {

namespace {

// A direction is the vector b - a of a point pair; all comparisons are exact.
struct Dir {
  Point a;
  Point b;
};

Dir edge_dir(const ConvexPolygon& p, std::size_t i) { return {p.vertex(i), p.vertex(i + 1)}; }

// 0 for clockwise angles from r in [0, pi), 1 for [pi, 2 pi).
int half(const Dir& r, const Dir& d) {
  const int c = cross_sign(r.a, r.b, d.a, d.b);
  if (c < 0) return 0;
  if (c == 0 && dot_sign(r.a, r.b, d.a, d.b) > 0) return 0;
  return 1;
}

// Clockwise angle from r: d before e.
bool key_less(const Dir& r, const Dir& d, const Dir& e) {
  const int hd = half(r, d);
  const int he = half(r, e);
  if (hd != he) return hd < he;
  return cross_sign(d.a, d.b, e.a, e.b) < 0;
}

bool same_dir(const Dir& d, const Dir& e) {
  return cross_sign(d.a, d.b, e.a, e.b) == 0 && dot_sign(d.a, d.b, e.a, e.b) > 0;
}

// Index of the last edge of p whose direction is at or before d, clockwise
// from edge 0. The support vertex for d is the end of that edge.
std::size_t last_edge_upto(const ConvexPolygon& p, const Dir& d) {
  const Dir r = edge_dir(p, 0);
  std::size_t lo = 1;
  std::size_t hi = p.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (key_less(r, d, edge_dir(p, mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo - 1;
}

std::size_t support(const ConvexPolygon& p, const Dir& d) {
  return (last_edge_upto(p, d) + 1) % p.size();
}

// Sign of cross(d, sq - sp): positive when q reaches further left of d.
int phi(const Dir& d, const Point& sp, const Point& sq) { return cross_sign(d.a, d.b, sp, sq); }

struct Bridge {
  std::size_t u = 0;  // on the polygon the bridge leaves
  std::size_t v = 0;  // on the polygon it enters
};

// Slides u and v along collinear contact edges to the vertices nearest each
// other.
Bridge normalize(const ConvexPolygon& from, const ConvexPolygon& to, Bridge br) {
  const Point& pu = from.vertex(br.u);
  const Point& pv = to.vertex(br.v);
  if (pu == pv) return br;
  const std::size_t nf = from.size();
  for (std::size_t w : {(br.u + 1) % nf, (br.u + nf - 1) % nf}) {
    const Point& pw = from.vertex(w);
    if (orientation(pu, pv, pw) == Orientation::Collinear && dot_sign(pu, pv, pu, pw) > 0 &&
        dot_sign(pu, pv, pw, pv) >= 0) {
      br.u = w;
      break;
    }
  }
  const Point& nu = from.vertex(br.u);
  const std::size_t nt = to.size();
  for (std::size_t w : {(br.v + 1) % nt, (br.v + nt - 1) % nt}) {
    const Point& pw = to.vertex(w);
    if (orientation(pu, pv, pw) == Orientation::Collinear && dot_sign(pu, pv, pv, pw) < 0 &&
        dot_sign(pu, pv, nu, pw) >= 0) {
      br.v = w;
      break;
    }
  }
  return br;
}

// Both bridges by one clockwise sweep over the merged edge directions.
std::pair<Bridge, Bridge> bridges_linear(const ConvexPolygon& p, const ConvexPolygon& q) {
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  const Dir r = edge_dir(p, 0);

  // First edge of q clockwise from p's edge 0.
  std::size_t q0 = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (key_less(r, edge_dir(q, j), edge_dir(q, q0))) q0 = j;
  }

  struct Step {
    Dir d;
    std::size_t sp;
    std::size_t sq;
    int sign;
  };
  std::vector<Step> steps;
  steps.reserve(n + m);
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t sp = 0;                // support before any p edge: end of the last edge
  std::size_t sq = q0;               // end of the edge preceding q0
  while (i < n || j < m) {
    Dir d;
    if (j == m || (i < n && !key_less(r, edge_dir(q, q0 + j), edge_dir(p, i)))) {
      d = edge_dir(p, i);
    } else {
      d = edge_dir(q, q0 + j);
    }
    // Consume every edge sharing this direction.
    while (i < n && same_dir(edge_dir(p, i), d)) sp = (++i) % n;
    while (j < m && same_dir(edge_dir(q, q0 + j), d)) sq = (q0 + ++j) % m;
    steps.push_back({d, sp, sq, phi(d, p.vertex(sp), q.vertex(sq))});
  }

  std::optional<Bridge> pq;
  std::optional<Bridge> qp;
  const std::size_t k = steps.size();
  for (std::size_t s = 0; s < k; ++s) {
    const Step& cur = steps[s];
    const Step& next = steps[(s + 1) % k];
    if (cur.sign <= 0 && next.sign > 0) pq = Bridge{cur.sp, cur.sq};
    if (cur.sign > 0 && next.sign <= 0) qp = Bridge{cur.sq, cur.sp};
  }
  if (!pq || !qp) throw NotDisjoint("polygons overlap: no outer tangents");
  return {*pq, *qp};
}

// Edge of p crossed by the ray from c through `toward` (c strictly inside p).
std::size_t exit_edge(const ConvexPolygon& p, const Point& c, const Point& toward) {
  const Dir r{c, p.vertex(0)};
  const Dir w{c, toward};
  std::size_t lo = 1;
  std::size_t hi = p.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (key_less(r, w, Dir{c, p.vertex(mid)})) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo - 1;
}

// Largest t in [0, count) with pred(t) true, or -1; pred is true on a prefix.
template <typename Pred>
long last_true(std::size_t count, Pred pred) {
  std::size_t lo = 0;
  std::size_t hi = count;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return static_cast<long>(lo) - 1;
}

// Bridge from p to q, given q's edge a with phi < 0 and p's edge b with
// phi > 0. Two nested binary searches over the directions between them.
Bridge bridge_binary(const ConvexPolygon& p, const ConvexPolygon& q, std::size_t a, std::size_t b) {
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  const Dir da = edge_dir(q, a);

  // p edges from the first one at or after da, through b.
  std::size_t s = last_edge_upto(p, da);
  if (!same_dir(edge_dir(p, s), da)) s = (s + 1) % n;
  const std::size_t count_p = (b + n - s) % n + 1;
  const long tp = last_true(count_p, [&](std::size_t t) {
    const std::size_t e = (s + t) % n;
    const Dir d = edge_dir(p, e);
    return phi(d, p.vertex(e + 1), q.vertex(support(q, d))) <= 0;
  });

  const Dir lo_dir = tp >= 0 ? edge_dir(p, s + static_cast<std::size_t>(tp)) : da;
  const Dir hi_dir = edge_dir(p, s + static_cast<std::size_t>(tp + 1));
  const std::size_t up = tp >= 0 ? (s + static_cast<std::size_t>(tp) + 1) % n : support(p, da);

  // q edges strictly between lo_dir and hi_dir; p's support is fixed there.
  const std::size_t qs = (last_edge_upto(q, lo_dir) + 1) % m;
  const std::size_t count_q = static_cast<std::size_t>(
      last_true(m, [&](std::size_t t) { return key_less(lo_dir, edge_dir(q, qs + t), hi_dir) &&
                                               !same_dir(edge_dir(q, qs + t), lo_dir); }) + 1);
  const long tq = last_true(count_q, [&](std::size_t t) {
    const std::size_t e = (qs + t) % m;
    return phi(edge_dir(q, e), p.vertex(up), q.vertex(e + 1)) <= 0;
  });
  const std::size_t vq = tq >= 0 ? (qs + static_cast<std::size_t>(tq) + 1) % m : support(q, lo_dir);
  return {up, vq};
}

std::pair<Bridge, Bridge> bridges_binary(const ConvexPolygon& p, const ConvexPolygon& q) {
  const Point& cp = p.interior_point();
  const Point& cq = q.interior_point();
  const std::size_t b = exit_edge(p, cp, cq);
  const std::size_t a = exit_edge(q, cq, cp);
  return {bridge_binary(p, q, a, b), bridge_binary(q, p, b, a)};
}

}  // namespace

OuterTangents common_outer_tangents(const ConvexPolygon& p, const ConvexPolygon& q,
                                    TangentSearch search) {
  auto [pq, qp] = search == TangentSearch::Binary ? bridges_binary(p, q) : bridges_linear(p, q);
  pq = normalize(p, q, pq);
  qp = normalize(q, p, qp);
  OuterTangents out;
  out.forward = {pq.u, pq.v, distance(p.vertex(pq.u), q.vertex(pq.v))};
  out.backward = {qp.v, qp.u, distance(p.vertex(qp.v), q.vertex(qp.u))};
  return out;
}

double arc_length(const ConvexPolygon& p, const Arc& a) noexcept {
  if (a.full) return p.perimeter();
  return p.arc_length(a.start, a.end);
}

namespace {

// Crossings along vertices [i, j] (unwrapped indices) of one x-monotone chain:
// x non-decreasing on the upper chain, non-increasing on the lower. Only the
// edge leaving the last vertex on the near side of origin.x can cross.
int chain_crossings(const ConvexPolygon& p, std::size_t i, std::size_t j, bool upper,
                    const Point& o) noexcept {
  auto near = [&](std::size_t k) {
    const double x = p.vertex(k).x;
    return upper ? x <= o.x : x > o.x;
  };
  std::size_t lo = i;
  std::size_t hi = j + 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (near(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == i || lo > j) return 0;
  return ray_crossing_sign({p.vertex(lo - 1), p.vertex(lo)}, o);
}

}  // namespace

int ray_arc_crossings(const ConvexPolygon& p, const Arc& a, const Point& origin) noexcept {
  const std::size_t n = p.size();
  const std::size_t s = a.start % n;
  std::size_t e = a.end % n;
  if (a.full) {
    e = s + n;
  } else if (e < s) {
    e += n;
  }
  if (s == e) return 0;
  const std::size_t mx = p.max_index();
  const std::size_t cuts[] = {0, mx, n, n + mx, 2 * n};
  int total = 0;
  for (std::size_t k = 0; k + 1 < std::size(cuts); ++k) {
    const std::size_t lo = std::max(s, cuts[k]);
    const std::size_t hi = std::min(e, cuts[k + 1]);
    if (lo < hi) total += chain_crossings(p, lo, hi, k % 2 == 0, origin);
  }
  return total;
}

}  // namespace hullpart
