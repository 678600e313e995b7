#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "pcmax/bench.hpp"
#include "pcmax/instance_gen.hpp"
#include "pcmax/instance_io.hpp"
#include "pcmax/lp_battery.hpp"

namespace {

using pcmax::Time;

// "lo:hi" or a single value "v" meaning v:v.
std::pair<long long, long long> parse_span(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    const long long lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const long long hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError(flag, "expected lo:hi, got '" + text + "'");
  }
}

struct GenerateArgs {
  std::string cls = "uniform";
  std::string range = "1:100";
  int m = 5;
  int n = 10;
  std::uint64_t seed = 1;
  int count = 10;
  bool benchmark = false;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  std::vector<pcmax::GenSpec> specs;
  if (args.benchmark) {
    specs = pcmax::benchmark_suite_specs(args.seed, args.count);
  } else {
    const auto [a, b] = parse_span(args.range, "--range");
    specs.push_back({pcmax::parse_instance_class(args.cls), a, b, args.m, args.n, args.seed, args.count});
  }
  const pcmax::Suite suite = pcmax::build_suite(specs);
  pcmax::write_suite(args.out, suite);
  std::cout << "wrote " << suite.instances.size() << " instances to " << args.out << " ("
            << pcmax::kPrngId << ")\n";
  return 0;
}

struct SolveArgs {
  std::string path;
  std::string family;
  int m = 3;
  std::string algo = "lpt";
  pcmax::RunOptions run;
};

int cmd_solve(const SolveArgs& args) {
  std::optional<pcmax::Instance> instance;
  if (!args.family.empty()) {
    pcmax::GenSpec spec;
    spec.cls = pcmax::parse_instance_class(args.family);
    spec.m = args.m;
    if (spec.cls != pcmax::InstanceClass::graham_family && spec.cls != pcmax::InstanceClass::lptrev_family) {
      throw CLI::ValidationError("--family", "only graham_family and lptrev_family are fixed instances");
    }
    instance = pcmax::generate(spec).front();
  } else if (!args.path.empty()) {
    instance = pcmax::load_instance(args.path);
  } else {
    throw CLI::ValidationError("solve", "give an instance file or --family");
  }

  const pcmax::RunRecord r = pcmax::run_algorithm(pcmax::parse_algorithm(args.algo), *instance, args.run);
  const pcmax::Rational& lb = r.bounds.lb_best;
  std::cout << "algo=" << pcmax::to_string(r.algo) << " m=" << instance->machines()
            << " n=" << instance->size() << " makespan=" << r.makespan() << " lb_best=" << lb
            << " ratio_to_lb=" << (lb.is_zero() ? std::string("-") : (pcmax::Rational(r.makespan()) / lb).to_string())
            << " ratio_bound=" << (r.ratio_bound ? r.ratio_bound->to_string() : std::string("-"));
  if (r.algo == pcmax::Algorithm::exact) std::cout << " proven=" << (r.proven_optimal ? "yes" : "no");
  std::cout << " elapsed_us=" << r.elapsed_us << '\n';
  return r.algo == pcmax::Algorithm::exact && !r.proven_optimal ? 3 : 0;
}

struct CompareArgs {
  std::string suite_dir;
  bool benchmark = false;
  std::uint64_t seed = 1;
  std::string algo = "slack";
  std::string vs = "lpt";
  std::string out = "text";
  std::string csv_file;
  pcmax::RunOptions run;
};

int cmd_compare(const CompareArgs& args) {
  pcmax::Suite suite;
  if (args.benchmark) {
    suite = pcmax::build_suite(pcmax::benchmark_suite_specs(args.seed));
  } else if (!args.suite_dir.empty()) {
    suite = pcmax::read_suite(args.suite_dir);
  } else {
    throw CLI::ValidationError("compare", "give a suite directory or --benchmark");
  }
  const pcmax::Comparison cmp =
      pcmax::compare(suite, pcmax::parse_algorithm(args.algo), pcmax::parse_algorithm(args.vs), args.run);
  if (args.out == "csv") {
    std::cout << pcmax::format_csv(cmp);
  } else {
    std::cout << pcmax::format_table(cmp);
  }
  if (!args.csv_file.empty()) {
    std::ofstream csv(args.csv_file);
    if (!csv) throw std::runtime_error("cannot write " + args.csv_file);
    csv << pcmax::format_csv(cmp);
  }
  return 0;
}

int cmd_verify_lp(const pcmax::lp::BatteryOptions& options) {
  int failures = 0;
  const auto lines = pcmax::lp::run_lp_battery(options);
  for (const auto& line : lines) {
    std::cout << line.to_string() << '\n';
    if (!line.ok) ++failures;
  }
  std::cout << lines.size() << " models, " << failures << " mismatches\n";
  return failures == 0 ? 0 : 1;
}

struct ConformanceArgs {
  std::string m = "2:3";
  std::string n = "1:8";
  std::string range = "1:6";
  pcmax::ConformanceOptions options;
};

int cmd_conformance(ConformanceArgs args) {
  auto& o = args.options;
  const auto [m_lo, m_hi] = parse_span(args.m, "--m");
  const auto [n_lo, n_hi] = parse_span(args.n, "--n");
  const auto [t_lo, t_hi] = parse_span(args.range, "--range");
  o.m_min = static_cast<int>(m_lo);
  o.m_max = static_cast<int>(m_hi);
  o.n_min = static_cast<int>(n_lo);
  o.n_max = static_cast<int>(n_hi);
  o.t_min = t_lo;
  o.t_max = t_hi;

  const pcmax::ConformanceReport report = pcmax::conformance_sweep(o);
  for (const auto& v : report.violations) std::cout << "VIOLATION " << v << '\n';
  std::cout << "exhaustive=" << report.exhaustive_instances << " random=" << report.random_instances
            << " checks=" << report.checks << " unsolved=" << report.unsolved
            << " violations=" << report.violations.size() << '\n';
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Makespan scheduling on identical parallel machines"};
  app.require_subcommand(1);
  const std::vector<std::string> algos{"lpt", "lpt_rev", "slack", "multifit", "combine", "exact"};
  const std::vector<std::string> classes{"uniform", "nonuniform", "graham_family", "lptrev_family"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an instance suite and its manifest");
  generate->add_option("--class", gen.cls, "Instance class")->check(CLI::IsMember(classes));
  generate->add_option("--range", gen.range, "Processing time range a:b");
  generate->add_option("--m", gen.m, "Machines");
  generate->add_option("--n", gen.n, "Jobs");
  generate->add_option("--seed", gen.seed, "Suite seed");
  generate->add_option("--count", gen.count, "Instances per cell");
  generate->add_flag("--benchmark", gen.benchmark, "Full 780-instance benchmark layout");
  generate->add_option("--out", gen.out, "Output directory")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on one instance");
  solve_cmd->add_option("instance", solve.path, "Instance file");
  solve_cmd->add_option("--family", solve.family, "Use a fixed family instance instead of a file")
      ->check(CLI::IsMember(classes));
  solve_cmd->add_option("--m", solve.m, "Machines for --family");
  solve_cmd->add_option("--algo", solve.algo, "Algorithm")->check(CLI::IsMember(algos));
  solve_cmd->add_option("--iterations", solve.run.multifit_iterations, "MULTIFIT binary search iterations")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--node-limit", solve.run.node_limit, "Exact solver node limit");

  CompareArgs cmp;
  bool no_timing = false;
  auto* compare_cmd = app.add_subcommand("compare", "Win/draw/loss table of two algorithms over a suite");
  compare_cmd->add_option("suite", cmp.suite_dir, "Suite directory written by generate");
  compare_cmd->add_flag("--benchmark", cmp.benchmark, "Regenerate the 780-instance benchmark in memory");
  compare_cmd->add_option("--seed", cmp.seed, "Seed for --benchmark");
  compare_cmd->add_option("--algo", cmp.algo, "Algorithm A")->check(CLI::IsMember(algos));
  compare_cmd->add_option("--vs", cmp.vs, "Algorithm B")->check(CLI::IsMember(algos));
  compare_cmd->add_option("--out", cmp.out, "Output format")->check(CLI::IsMember({"text", "csv"}));
  compare_cmd->add_option("--csv-file", cmp.csv_file, "Also write per-instance CSV here");
  compare_cmd->add_option("--iterations", cmp.run.multifit_iterations, "MULTIFIT binary search iterations")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--node-limit", cmp.run.node_limit, "Exact solver node limit");
  compare_cmd->add_flag("--no-timing", no_timing, "Report elapsed_us as 0 for byte-stable CSV");

  pcmax::lp::BatteryOptions battery;
  auto* verify = app.add_subcommand("verify-lp", "Solve every LP model exactly and check certificates");
  verify->add_option("--m-max", battery.certificate_m_max, "Largest m for the certified families")
      ->check(CLI::Range(4, 200));
  verify->add_option("--k-max", battery.k_max, "Largest k for the non-critical family")->check(CLI::Range(1, 50));

  ConformanceArgs conf;
  auto* conformance = app.add_subcommand("conformance", "Check every bound against exact optima");
  conformance->add_option("--m", conf.m, "Machine range lo:hi for the exhaustive part");
  conformance->add_option("--n", conf.n, "Job count range lo:hi for the exhaustive part");
  conformance->add_option("--range", conf.range, "Processing time range lo:hi for the exhaustive part");
  conformance->add_option("--trials", conf.options.trials, "Random instances");
  conformance->add_option("--random-m-max", conf.options.random_m_max, "Largest m of random instances");
  conformance->add_option("--random-n-max", conf.options.random_n_max, "Largest n of random instances");
  conformance->add_option("--seed", conf.options.seed, "Seed of the random part");
  conformance->add_option("--node-limit", conf.options.node_limit, "Exact solver node limit");

  CLI11_PARSE(app, argc, argv);
  cmp.run.timing = !no_timing;

  try {
    if (*generate) return cmd_generate(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*compare_cmd) return cmd_compare(cmp);
    if (*verify) return cmd_verify_lp(battery);
    if (*conformance) return cmd_conformance(conf);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
