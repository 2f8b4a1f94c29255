#include "rst/io.hpp"
#include "rst/ksteiner.hpp"
#include "rst/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>

namespace {

using namespace rst;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonArgs {
  std::string input;
  int k = 0;  // 0: take the instance's value
  int threads = 1;
  int samples = 10000;
  std::uint64_t seed = 1;
  std::string svg;
  bool verify = false;
};

Solution run_solver(const io::Instance& inst, const CommonArgs& args) {
  int k = args.k != 0 ? args.k : inst.k;
  SolveOptions opts;
  opts.threads = args.threads;
  if (k == 1) return solve_multi_lines(inst.points, inst.constraints, opts);
  return solve_k(inst.points, inst.constraints, 2, opts);
}

bool verify_solution(const io::Instance& inst, const Solution& sol, int samples) {
  bool ok = true;
  auto check = [&ok](bool cond, const std::string& what) {
    std::cerr << "verify: " << what << ": " << (cond ? "ok" : "FAIL") << "\n";
    ok = ok && cond;
  };

  PointList all = inst.points;
  for (const Point& s : sol.steiner_points) all.push_back(s);
  Tree reference = oracle::prim_mst(all);
  check(std::abs(reference.total_weight - sol.total_weight) <= 1e-9,
        "total matches a from-scratch MST on P plus S");

  check(sol.total_weight <= sol.baseline_mst_weight + 1e-9, "total never exceeds the MST");

  for (size_t i = 0; i < inst.constraints.size(); ++i) {
    oracle::SampledBest best =
        oracle::sampled_best_steiner(inst.points, inst.constraints[i], samples);
    check(sol.total_weight <= best.weight + 1e-6,
          "no sampled point on constraint " + std::to_string(i) + " beats the solution");
  }

  for (const Candidate& w : sol.winners) {
    double claimed = sol.baseline_mst_weight + w.sigma - w.delta;
    check(std::abs(claimed - sol.total_weight) <= 1e-9,
          "savings identity for the adopted candidate");
  }
  return ok;
}

int cmd_solve(const CommonArgs& args, bool force_verify) {
  io::Instance inst = io::load_instance(args.input);
  Solution sol = run_solver(inst, args);
  CostReport report = cost_report(sol.tree, inst.costs);
  std::cout << io::solution_json(inst, sol, report).dump(2) << "\n";
  if (!args.svg.empty()) io::write_svg(args.svg, inst, sol);
  if (args.verify || force_verify) {
    if (!verify_solution(inst, sol, args.samples)) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_render(const CommonArgs& args) {
  io::Instance inst = io::load_instance(args.input);
  Solution sol = run_solver(inst, args);
  io::write_svg(args.svg.empty() ? "out.svg" : args.svg, inst, sol);
  return kExitOk;
}

int cmd_bench(const std::vector<int>& sizes, const std::vector<std::uint64_t>& seeds,
              int threads) {
  std::cout << "n,seed,build_ms,solve_ms,interval_count\n";
  for (int n : sizes) {
    if (n < 2) throw io::ParseError("bench: sizes must be >= 2");
    for (std::uint64_t seed : seeds) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      PointList pts(n);
      for (Point& p : pts) p = Point{uni(rng), uni(rng)};
      Gamma line = Gamma::line({0.0, 0.5}, {1.0, 0.0});

      auto t0 = std::chrono::steady_clock::now();
      Tree mst = emst(pts);
      BottleneckTree aux(mst);
      auto t1 = std::chrono::steady_clock::now();
      detail::ScanResult scan = detail::scan_line(pts, line, 0, aux, threads);
      auto t2 = std::chrono::steady_clock::now();

      double build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      double solve_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
      std::cout << n << "," << seed << "," << build_ms << "," << solve_ms << ","
                << scan.interval_count << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum spanning trees with Steiner points constrained to lines"};
  app.require_subcommand(1);

  CommonArgs args;
  std::vector<int> bench_sizes{1000};
  std::vector<std::uint64_t> bench_seeds{1};

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", args.input, "instance JSON file")->required();
    cmd->add_option("--k", args.k, "Steiner budget override (1 or 2)")
        ->check(CLI::Range(1, 2));
    cmd->add_option("--threads", args.threads, "worker threads for the interval scan")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--samples", args.samples, "verification sampling density")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "random seed");
    cmd->add_option("--svg", args.svg, "also write an SVG figure to this path");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve an instance, print solution JSON");
  add_common(solve, true);
  solve->add_flag("--verify", args.verify, "cross-check against the brute-force oracles");

  CLI::App* verify = app.add_subcommand("verify", "solve and cross-check via the oracles");
  add_common(verify, true);

  CLI::App* bench = app.add_subcommand("bench", "timings on seeded random instances (CSV)");
  bench->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "seeds, one run per (size, seed)")->delimiter(',');
  bench->add_option("--threads", args.threads, "worker threads")->check(CLI::PositiveNumber);

  CLI::App* render = app.add_subcommand("render", "solve and write an SVG figure");
  add_common(render, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(args, false);
    if (verify->parsed()) return cmd_solve(args, true);
    if (bench->parsed()) return cmd_bench(bench_sizes, bench_seeds, args.threads);
    if (render->parsed()) return cmd_render(args);
  } catch (const io::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
