// Acceptance checks: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "hullpart/cli.hpp"
#include "hullpart/disjoint.hpp"
#include "hullpart/engine.hpp"
#include "hullpart/errors.hpp"
#include "hullpart/io.hpp"
#include "hullpart/oracle.hpp"
#include "support.hpp"

namespace hp = hullpart;
namespace fs = std::filesystem;

namespace {

double seconds_since(hp::Clock::time_point start) {
  return std::chrono::duration<double>(hp::Clock::now() - start).count();
}

template <typename F>
double timed(F&& f) {
  const auto start = hp::Clock::now();
  f();
  return seconds_since(start);
}

bool rel_close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void criterion1() {
  struct Case {
    const char* file;
    std::vector<std::vector<std::size_t>> components;
    double total;
    double tol;
    double split_or_merged;
  };
  const Case cases[] = {
      {"fig1.json", {{0, 1}}, 11 + 2 * std::sqrt(16.25), 1e-6, 22.0},
      {"fig2.json", {{0}, {1}}, 8.0, 1e-9, 16.0},
      {"fig3.json", {{0, 1}, {2}}, 4 + 5 * std::sqrt(2.0), 1e-6, 0.0},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    hp::Partition p;
    const double t = timed([&] {
      const hp::Instance inst = hp::parse_instance(hp::read_file(std::string(HULLPART_DATA_DIR "/") + c.file));
      p = hp::solve(inst.polygons);
    });
    const bool this_ok = p.components == c.components && std::fabs(p.total - c.total) <= c.tol &&
                         (c.split_or_merged == 0.0 || p.total < c.split_or_merged) && t < 1.0;
    ok &= this_ok;
    detail += std::string(c.file) + " " + fmt("%.9f", p.total) + fmt(" in %.3fs; ", t);
  }
  report(1, "reference instances", ok, detail);
}

struct Corpus {
  std::vector<hp::Instance> instances;
};

Corpus oracle_corpus() {
  Corpus c;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 5;
    const std::size_t m = 3 + (i / 5) % 6;
    const auto mode = i % 2 == 0 ? hp::GenMode::General : hp::GenMode::Disjoint;
    c.instances.push_back(hp::generate_instance(n, m, mode, 1000 + i));
  }
  return c;
}

void criterion2_and_4(const Corpus& corpus) {
  std::size_t total_mismatch = 0;
  std::size_t structure_mismatch = 0;
  std::size_t ties = 0;
  std::size_t overlapping = 0;
  std::size_t enclosure_violations = 0;
  std::size_t split_pairs = 0;
  std::size_t overlapping_pairs = 0;
  const double t = timed([&] {
    for (const hp::Instance& inst : corpus.instances) {
      const auto& polys = inst.polygons;
      const hp::Partition p = hp::solve(polys);
      const hp::OracleResult o = hp::brute_force_optimal(polys);
      if (!rel_close(p.total, o.partition.total, 1e-6)) ++total_mismatch;
      if (o.tie) {
        ++ties;
      } else if (p.components != o.partition.components) {
        ++structure_mismatch;
      }
      if (!hp::pairwise_disjoint(polys)) ++overlapping;

      std::vector<std::size_t> comp(polys.size());
      for (std::size_t c = 0; c < p.components.size(); ++c) {
        for (std::size_t i : p.components[c]) comp[i] = c;
      }
      for (std::size_t c = 0; c < p.components.size(); ++c) {
        for (std::size_t i = 0; i < polys.size(); ++i) {
          if (comp[i] != c && hp::interiors_overlap(p.hulls[c], polys[i])) ++enclosure_violations;
        }
      }
      for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i + 1; j < polys.size(); ++j) {
          if (!hp::interiors_overlap(polys[i], polys[j])) continue;
          ++overlapping_pairs;
          if (comp[i] != comp[j]) ++split_pairs;
        }
      }
    }
  });
  report(2, "oracle equivalence",
         total_mismatch == 0 && structure_mismatch == 0 && t < 120.0,
         std::to_string(corpus.instances.size()) + " instances, " + std::to_string(overlapping) +
             " with overlaps; total mismatches " + std::to_string(total_mismatch) +
             ", structure mismatches " + std::to_string(structure_mismatch) + ", oracle ties " +
             std::to_string(ties) + fmt(", %.1fs", t));
  report(4, "structural invariants", enclosure_violations == 0 && split_pairs == 0,
         "partial enclosures " + std::to_string(enclosure_violations) + ", split overlapping pairs " +
             std::to_string(split_pairs) + " of " + std::to_string(overlapping_pairs));
}

void criterion3() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 12.0);
  std::uniform_int_distribution<int> coin(0, 1);
  double worst = std::numeric_limits<double>::infinity();
  const auto hull = [](const std::vector<const hp::ConvexPolygon*>& s) {
    return hp::convex_hull_of(s).perimeter();
  };
  const double t = timed([&] {
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<hp::ConvexPolygon> polys;
      for (int i = 0; i < 7; ++i) polys.push_back(hp::testing::random_convex(rng, u(rng), u(rng), 3.0, 3 + trial % 8));
      // polys[0] is x; Y draws from the rest, X is a nonempty subset of Y.
      // With X empty the inequality fails whenever x is far from Y.
      std::vector<const hp::ConvexPolygon*> x_set;
      std::vector<const hp::ConvexPolygon*> y_set;
      for (int i = 1; i < 7; ++i) {
        if (!coin(rng)) continue;
        y_set.push_back(&polys[i]);
        if (coin(rng)) x_set.push_back(&polys[i]);
      }
      if (y_set.empty()) y_set.push_back(&polys[1]);
      if (x_set.empty()) x_set.push_back(y_set.front());
      auto xx = x_set;
      xx.push_back(&polys[0]);
      auto yx = y_set;
      yx.push_back(&polys[0]);
      const double slack = (hull(xx) - hull(x_set)) - (hull(yx) - hull(y_set));
      worst = std::min(worst, slack);
    }
  });
  report(3, "submodularity", worst >= -1e-7 && t < 30.0,
         "500 triples, minimum slack " + fmt("%.3e", worst) + fmt(", %.2fs", t));
}

void criterion5() {
  double worst = 0.0;
  std::size_t fallbacks = 0;
  const double t = timed([&] {
    for (std::uint64_t i = 0; i < 100; ++i) {
      const std::size_t n = 2 + i % 5;
      const std::size_t m = 8 + (i * 37) % 57;
      const hp::Instance inst = hp::generate_instance(n, m, hp::GenMode::Disjoint, 5000 + i);
      const hp::Partition d = hp::solve_disjoint(inst.polygons);
      const hp::Partition g = hp::solve(inst.polygons);
      if (d.mode != hp::SolveMode::Disjoint) ++fallbacks;
      worst = std::max(worst, std::fabs(d.total - g.total) / g.total);
    }
  });
  report(5, "mode equivalence", worst <= 1e-9 && fallbacks == 0 && t < 120.0,
         "100 disjoint instances, max relative difference " + fmt("%.2e", worst) + ", fallbacks " +
             std::to_string(fallbacks) + fmt(", %.1fs", t));
}

void criterion6() {
  std::size_t events = 0;
  std::size_t merges = 0;
  std::size_t t_mismatch = 0;
  double g_error = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const hp::Instance inst =
        hp::generate_instance(3 + i % 4, 4 + i % 5, i % 3 == 0 ? hp::GenMode::Disjoint : hp::GenMode::General, 7000 + i);
    hp::SolveOptions opt;
    opt.on_event = [&](const hp::WorkingSet& w, const hp::EngineEvent& ev) {
      ++events;
      merges += ev.kind == hp::EngineEvent::Kind::Merged;
      const hp::TableCheck c = w.check_tables();
      t_mismatch += c.free_mismatches + c.count_mismatches;
      g_error = std::max(g_error, c.max_gamma_error);
    };
    hp::solve(inst.polygons, opt);
  }
  report(6, "table maintenance", t_mismatch == 0 && g_error <= 1e-12,
         std::to_string(events) + " events (" + std::to_string(merges) + " merges), t mismatches " +
             std::to_string(t_mismatch) + ", max g error " + fmt("%.2e", g_error));
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hullpart");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  return hp::cli_main(static_cast<int>(argv.size()), argv.data());
}

std::vector<hp::ConvexPolygon> regular_grid(std::size_t m) {
  std::vector<hp::ConvexPolygon> polys;
  for (int i = 0; i < 4; ++i) {
    polys.push_back(hp::testing::regular(2.5 * (i % 2), 2.5 * (i / 2), 1.0, m, 0.1 * i + 0.05));
  }
  return polys;
}

double best_general_time(const std::vector<hp::ConvexPolygon>& polys, int runs) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < runs; ++r) best = std::min(best, timed([&] { hp::solve(polys); }));
  return best;
}

void criterion7() {
  const fs::path dir = fs::temp_directory_path() / ("hullpart_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::string detail;
  bool ok = true;

  // Large instance: disjoint mode end to end through the command line.
  const hp::Instance big = hp::generate_instance(4, 20000, hp::GenMode::Disjoint, 20000);
  std::size_t big_vertices = 0;
  for (const auto& p : big.polygons) big_vertices += p.size();
  const std::string in = (dir / "big.json").string();
  hp::write_file(in, hp::write_instance(big));
  int code = -1;
  const double t_disjoint =
      timed([&] { code = run_cli({"solve", in, "--mode", "disjoint", "--out", (dir / "out.json").string()}); });
  ok &= code == 0 && t_disjoint < 10.0;
  detail += "n=4 m=20000 (" + std::to_string(big_vertices) + " vertices): disjoint " + fmt("%.3fs", t_disjoint);

  // General mode on the same instance, cancelled at ten times that.
  hp::SolveOptions opt;
  opt.deadline = hp::Clock::now() + std::chrono::duration_cast<hp::Clock::duration>(
                                        std::chrono::duration<double>(10.0 * t_disjoint));
  std::string outcome;
  const double t_general = timed([&] {
    try {
      hp::solve(big.polygons, opt);
      outcome = "completed";
    } catch (const hp::SolveCancelled&) {
      outcome = "cancelled at deadline";
    } catch (const hp::TooLarge&) {
      outcome = "refused: pair tables exceed memory";
    }
  });
  ok &= outcome != "completed";
  detail += "; general " + outcome + fmt(" after %.3fs", t_general);

  // Largest size where general mode fits: measured speedup.
  const hp::Instance mid = hp::generate_instance(4, 1000, hp::GenMode::Disjoint, 20000);
  double t_mid_d = std::numeric_limits<double>::infinity();
  for (int r = 0; r < 3; ++r) t_mid_d = std::min(t_mid_d, timed([&] { hp::solve_disjoint(mid.polygons); }));
  const double t_mid_g = timed([&] { hp::solve(mid.polygons); });
  ok &= t_mid_g >= 10.0 * t_mid_d;
  detail += fmt("; m=1000 general %.2fs", t_mid_g) + fmt(" vs disjoint %.4fs", t_mid_d) +
            fmt(" (%.0fx)", t_mid_g / t_mid_d);

  // Doubling N at fixed n = 4.
  detail += "; doubling ratios";
  double prev = 0.0;
  for (std::size_t m : {64u, 128u, 256u, 512u}) {
    const double t = best_general_time(regular_grid(m), m < 512 ? 3 : 1);
    if (prev > 0.0) {
      ok &= t / prev <= 10.0;
      detail += fmt(" %.2f", t / prev);
    }
    prev = t;
  }
  fs::remove_all(dir);
  report(7, "performance", ok, detail);
}

void criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-7.0, 7.0);
  std::size_t cases = 0;
  std::size_t disagreements = 0;
  std::size_t inside = 0;
  while (cases < 1000) {
    const hp::ConvexPolygon p = hp::testing::random_convex(rng, u(rng) / 3, u(rng) / 3, 5.0, 3 + cases % 30);
    const hp::Point q{u(rng), u(rng)};
    bool boundary = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      boundary |= hp::orientation(p.vertex(i), p.vertex(i + 1), q) == hp::Orientation::Collinear;
    }
    if (boundary) continue;
    ++cases;
    const bool expected = hp::testing::winding_by_angles(q, p) != 0;
    inside += expected;
    if (hp::point_in_polygon(q, p) != expected) ++disagreements;
  }
  report(8, "non-zero rule", disagreements == 0,
         std::to_string(cases) + " cases (" + std::to_string(inside) + " inside), disagreements " +
             std::to_string(disagreements));
}

}  // namespace

int main() {
  try {
    criterion1();
    const Corpus corpus = oracle_corpus();
    criterion2_and_4(corpus);
    criterion3();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
