#include "hullpart/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hullpart/disjoint.hpp"
#include "hullpart/engine.hpp"
#include "hullpart/errors.hpp"
#include "hullpart/io.hpp"
#include "hullpart/oracle.hpp"

namespace hullpart {

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

struct SolveArgs {
  std::string input;
  std::string mode = "auto";
  bool oracle_check = false;
  std::string svg;
  std::string out;
  bool trace = false;
};

int run_solve(const SolveArgs& args) {
  const Instance inst = parse_instance(read_file(args.input));
  if (args.oracle_check && inst.polygons.size() > kOracleMaxPolygons) {
    std::cerr << "error: --oracle-check supports at most " << kOracleMaxPolygons << " polygons\n";
    return kExitInfeasible;
  }

  Partition result;
  if (args.mode == "general") {
    try {
      result = solve(inst.polygons);
    } catch (const TooLarge& e) {
      std::cerr << "error: --mode general: " << e.what() << "\n";
      return kExitInfeasible;
    }
  } else if (args.mode == "disjoint") {
    SolveOptions opts;
    opts.strict_disjoint = true;
    try {
      result = solve_disjoint(inst.polygons, opts);
    } catch (const NotDisjoint& e) {
      std::cerr << "error: --mode disjoint: " << e.what() << "\n";
      return kExitInfeasible;
    }
  } else {
    result = solve_disjoint(inst.polygons);
    if (result.mode != SolveMode::Disjoint && inst.polygons.size() > 1) {
      std::cerr << "note: input is not interior-disjoint; used the general solver\n";
    }
  }

  if (args.trace) {
    for (const MergeEvent& ev : result.merge_trace) {
      std::cerr << "merge after input " << ev.after_input << ": delta " << ev.delta << ", parts";
      for (const auto& part : ev.merged) {
        std::cerr << " {";
        for (std::size_t k = 0; k < part.size(); ++k) std::cerr << (k ? "," : "") << part[k];
        std::cerr << "}";
      }
      std::cerr << "\n";
    }
  }
  emit(args.out, write_result(result));
  if (!args.svg.empty()) write_file(args.svg, render_svg(inst, result));

  if (args.oracle_check) {
    const OracleResult truth = brute_force_optimal(inst.polygons);
    const double diff = std::fabs(truth.partition.total - result.total);
    if (diff > 1e-6 * std::max(1.0, std::fabs(truth.partition.total))) {
      std::cerr << "oracle mismatch: solver " << result.total << ", oracle "
                << truth.partition.total << "\n";
      return kExitMismatch;
    }
    std::cerr << "oracle check passed (" << truth.partition.total << ")\n";
  }
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Minimum total perimeter convex hull partition"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("input", solve_args.input, "Instance JSON")->required();
  solve_cmd->add_option("--mode", solve_args.mode, "auto, general or disjoint")
      ->check(CLI::IsMember({"auto", "general", "disjoint"}));
  solve_cmd->add_flag("--oracle-check", solve_args.oracle_check, "Compare against brute force");
  solve_cmd->add_option("--svg", solve_args.svg, "Write an SVG rendering");
  solve_cmd->add_option("--out", solve_args.out, "Result path (default stdout)");
  solve_cmd->add_flag("--trace", solve_args.trace, "Log merges to stderr");

  std::string oracle_input;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum (at most 12 polygons)");
  oracle_cmd->add_option("input", oracle_input, "Instance JSON")->required();
  oracle_cmd->add_option("--out", oracle_out, "Result path (default stdout)");

  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  bool gen_disjoint = false;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--n", gen_n, "Polygon count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen_m, "Maximum vertices per polygon")->required()->check(CLI::Range(3, 1 << 24));
  gen_cmd->add_flag("--disjoint", gen_disjoint, "Pairwise disjoint interiors");
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen_out, "Instance path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInfeasible;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*oracle_cmd) {
      const Instance inst = parse_instance(read_file(oracle_input));
      if (inst.polygons.size() > kOracleMaxPolygons) {
        std::cerr << "error: oracle supports at most " << kOracleMaxPolygons << " polygons\n";
        return kExitInfeasible;
      }
      OracleResult r = brute_force_optimal(inst.polygons);
      if (r.tie) std::cerr << "note: another partition ties the optimum\n";
      emit(oracle_out, write_result(r.partition));
      return 0;
    }
    if (*gen_cmd) {
      Instance inst = generate_instance(gen_n, gen_m, gen_disjoint ? GenMode::Disjoint : GenMode::General,
                                        gen_seed);
      emit(gen_out, write_instance(inst));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace hullpart
