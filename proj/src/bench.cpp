#include "pcmax/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pcmax/formulas.hpp"
#include "pcmax/heuristics.hpp"

namespace pcmax {

std::string to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::lpt: return "lpt";
    case Algorithm::lpt_rev: return "lpt_rev";
    case Algorithm::slack: return "slack";
    case Algorithm::multifit: return "multifit";
    case Algorithm::combine: return "combine";
    case Algorithm::exact: return "exact";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::lpt, Algorithm::lpt_rev, Algorithm::slack, Algorithm::multifit,
                 Algorithm::combine, Algorithm::exact}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

RunRecord run_algorithm(Algorithm algo, const Instance& instance, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<Schedule> schedule;
  bool proven = false;
  switch (algo) {
    case Algorithm::lpt: schedule = lpt(instance); break;
    case Algorithm::lpt_rev: schedule = lpt_rev(instance).schedule; break;
    case Algorithm::slack: schedule = slack_heuristic(instance); break;
    case Algorithm::multifit: schedule = multifit(instance, options.multifit_iterations); break;
    case Algorithm::combine: schedule = combine(instance, options.multifit_iterations); break;
    case Algorithm::exact: {
      ExactResult r = exact_opt(instance, options.node_limit);
      proven = r.solved();
      schedule = std::move(r.schedule);
      break;
    }
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  RunRecord record{algo, std::move(*schedule), lower_bounds(instance), std::nullopt, 0, proven};
  if (options.timing) {
    record.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
  }
  const auto& ceilings = record.bounds.ratio_ceilings;
  if (auto it = ceilings.find(to_string(algo)); it != ceilings.end()) {
    record.ratio_bound = it->second;
  } else if (algo == Algorithm::exact && proven) {
    record.ratio_bound = Rational(1);
  }
  return record;
}

namespace {

// Report order of the instance classes: the benchmark classes first.
int class_rank(InstanceClass cls) {
  switch (cls) {
    case InstanceClass::nonuniform: return 0;
    case InstanceClass::uniform: return 1;
    case InstanceClass::graham_family: return 2;
    case InstanceClass::lptrev_family: return 3;
  }
  return 4;
}

}  // namespace

Comparison compare(const Suite& suite, Algorithm algo_a, Algorithm algo_b, const RunOptions& options) {
  Comparison cmp{algo_a, algo_b, {}, {}};
  using Key = std::tuple<int, Time, Time, int>;
  std::map<Key, ComparisonRow> groups;
  std::map<Key, double> ratio_sums;

  for (std::size_t i = 0; i < suite.instances.size(); ++i) {
    const auto& entry = suite.entries[i];
    RunRecord ra = run_algorithm(algo_a, suite.instances[i], options);
    RunRecord rb = run_algorithm(algo_b, suite.instances[i], options);

    const Key key{class_rank(entry.cls), entry.a, entry.b, entry.m};
    auto [it, fresh] = groups.try_emplace(key, ComparisonRow{entry.cls, entry.a, entry.b, entry.m});
    ComparisonRow& row = it->second;
    ++row.count;
    if (ra.makespan() < rb.makespan()) {
      ++row.wins;
    } else if (ra.makespan() == rb.makespan()) {
      ++row.draws;
    } else {
      ++row.losses;
    }
    if (rb.makespan() > 0) {
      ratio_sums[key] += static_cast<double>(ra.makespan()) / static_cast<double>(rb.makespan());
    } else {
      ratio_sums[key] += 1.0;
    }
    cmp.records.push_back({entry, std::move(ra)});
    cmp.records.push_back({entry, std::move(rb)});
  }
  for (auto& [key, row] : groups) {
    row.mean_ratio = ratio_sums[key] / row.count;
    cmp.rows.push_back(row);
  }
  auto record_key = [](const CsvRecord& r) {
    return std::tuple(class_rank(r.entry.cls), r.entry.a, r.entry.b, r.entry.m, r.entry.instance_id);
  };
  std::stable_sort(cmp.records.begin(), cmp.records.end(),
                   [&](const CsvRecord& x, const CsvRecord& y) { return record_key(x) < record_key(y); });
  return cmp;
}

ComparisonRow aggregate(const Comparison& cmp, std::optional<InstanceClass> cls) {
  ComparisonRow total{cls.value_or(InstanceClass::uniform), 0, 0, 0};
  double ratio_sum = 0.0;
  for (const auto& row : cmp.rows) {
    if (cls && row.cls != *cls) continue;
    total.count += row.count;
    total.wins += row.wins;
    total.draws += row.draws;
    total.losses += row.losses;
    ratio_sum += row.mean_ratio * row.count;
  }
  if (total.count > 0) total.mean_ratio = ratio_sum / total.count;
  return total;
}

std::string format_table(const Comparison& cmp) {
  const std::string a = to_string(cmp.algo_a);
  const std::string b = to_string(cmp.algo_b);
  std::ostringstream os;
  char buf[160];
  std::optional<InstanceClass> current;
  for (const auto& row : cmp.rows) {
    if (current != row.cls) {
      current = row.cls;
      std::snprintf(buf, sizeof buf, "%-13s %4s %5s  %-14s %-14s %-14s %s\n", to_string(row.cls).c_str(), "m",
                    "#", (a + " wins").c_str(), "draws", (b + " wins").c_str(), ("mean " + a + "/" + b).c_str());
      os << buf;
    }
    const std::string range = std::to_string(row.a) + "-" + std::to_string(row.b);
    std::snprintf(buf, sizeof buf, "%-13s %4d %5d  %4d (%5.1f)   %4d (%5.1f)   %4d (%5.1f)   %.6f\n",
                  range.c_str(), row.m, row.count, row.wins, row.pct(row.wins), row.draws, row.pct(row.draws),
                  row.losses, row.pct(row.losses), row.mean_ratio);
    os << buf;
  }
  const ComparisonRow total = aggregate(cmp, std::nullopt);
  std::snprintf(buf, sizeof buf, "%-13s %4s %5d  %4d (%5.1f)   %4d (%5.1f)   %4d (%5.1f)   %.6f\n",
                "total", "", total.count, total.wins, total.pct(total.wins), total.draws,
                total.pct(total.draws), total.losses, total.pct(total.losses), total.mean_ratio);
  os << buf;
  return os.str();
}

std::string csv_header() {
  return "class,a,b,m,n,instance_id,algo,makespan,lb_best,ratio_bound_applicable,elapsed_us";
}

std::string format_csv_row(const CsvRecord& record) {
  const auto& e = record.entry;
  const auto& r = record.run;
  std::ostringstream os;
  os << to_string(e.cls) << ',' << e.a << ',' << e.b << ',' << e.m << ',' << e.n << ','
     << e.instance_id << ',' << to_string(r.algo) << ',' << r.makespan() << ','
     << r.bounds.lb_best << ',' << (r.ratio_bound ? r.ratio_bound->to_string() : "") << ','
     << r.elapsed_us;
  return os.str();
}

std::string format_csv(const Comparison& cmp) {
  std::string out = csv_header() + "\n";
  for (const auto& rec : cmp.records) out += format_csv_row(rec) + "\n";
  return out;
}

std::vector<std::string> check_bounds(const Instance& instance, Time opt, std::size_t& checks) {
  std::vector<std::string> violations;
  const int m = instance.machines();
  const std::size_t n = instance.size();
  const Rational optimum(opt);

  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) violations.push_back(what + " on " + std::to_string(n) + " jobs, m=" + std::to_string(m) +
                                  ", opt=" + std::to_string(opt));
  };
  auto ratio_at_most = [&](Time makespan, const Rational& ceiling, const std::string& what) {
    expect(Rational(makespan) <= ceiling * optimum,
           what + " makespan " + std::to_string(makespan) + " above " + ceiling.to_string() + " * opt");
  };

  const BoundReport bounds = lower_bounds(instance);
  const Schedule by_lpt = lpt(instance);
  const LptRevResult by_rev = lpt_rev(instance);
  const Schedule by_slack = slack_heuristic(instance);
  const Schedule by_multifit = multifit(instance);
  const Schedule by_combine = combine(instance);

  expect(Rational(opt) >= bounds.lb_best, "optimum below lb_best");
  for (const Schedule* s : {&by_lpt, &by_rev.schedule, &by_slack, &by_multifit, &by_combine}) {
    expect(s->makespan() >= opt, "heuristic beats the optimum");
    expect(Rational(s->makespan()) >= bounds.lb_best, "heuristic below lb_best");
  }
  expect(by_combine.makespan() <= by_lpt.makespan(), "combine worse than lpt");
  expect(by_rev.z1 == by_lpt.makespan(), "lpt_rev z1 differs from lpt");

  ratio_at_most(by_lpt.makespan(), graham_bound(m), "lpt");
  if (m >= 2) ratio_at_most(by_rev.schedule.makespan(), lpt_rev_bound(m), "lpt_rev");
  if (m == 2 && n == 5) expect(by_rev.schedule.makespan() == opt, "lpt_rev not optimal for m=2, n=5");
  if (m >= 2 && n <= 2 * static_cast<std::size_t>(m)) {
    ratio_at_most(by_lpt.makespan(), r2_bound(m), "lpt with n <= 2m");
  }

  const AposterioriReport post = aposteriori_check(instance, by_lpt, opt);
  checks += 4;
  for (const auto& v : post.violations) violations.push_back("lpt a-posteriori: " + v);
  return violations;
}

namespace {

// Calls visit(times) for every non-increasing sequence of length n over
// [lo, hi].
template <typename Visit>
void for_each_multiset(std::size_t n, Time lo, Time hi, Visit&& visit) {
  std::vector<Time> times(n, hi);
  for (;;) {
    visit(times);
    // Decrement the rightmost position that can still go down and reset the
    // tail to the same value.
    std::size_t pos = n;
    while (pos > 0 && times[pos - 1] == lo) --pos;
    if (pos == 0) return;
    --times[pos - 1];
    for (std::size_t q = pos; q < n; ++q) times[q] = times[pos - 1];
  }
}

}  // namespace

ConformanceReport conformance_sweep(const ConformanceOptions& options) {
  if (options.m_min < 1 || options.m_min > options.m_max || options.n_min < 1 ||
      options.n_min > options.n_max || options.t_min < 0 || options.t_min > options.t_max ||
      options.trials < 0 || options.random_m_max < 2 || options.random_n_max < 1) {
    throw std::invalid_argument("invalid conformance ranges");
  }
  ConformanceReport report;
  auto run = [&](const Instance& instance) {
    const ExactResult exact = exact_opt(instance, options.node_limit);
    if (!exact.solved()) {
      ++report.unsolved;
      return;
    }
    for (auto& v : check_bounds(instance, exact.opt(), report.checks)) {
      report.violations.push_back(std::move(v));
    }
  };

  for (int m = options.m_min; m <= options.m_max; ++m) {
    for (int n = options.n_min; n <= options.n_max; ++n) {
      for_each_multiset(static_cast<std::size_t>(n), options.t_min, options.t_max,
                        [&](const std::vector<Time>& times) {
                          // Skip the degenerate all-zero instance.
                          if (times.front() == 0) return;
                          ++report.exhaustive_instances;
                          run(Instance(m, times));
                        });
    }
  }

  std::mt19937_64 rng(options.seed);
  constexpr Time kRanges[] = {5, 10, 20, 100, 1000};
  for (int trial = 0; trial < options.trials; ++trial) {
    const auto m = static_cast<int>(uniform_int(rng, 2, options.random_m_max));
    const auto n = static_cast<int>(uniform_int(rng, 1, options.random_n_max));
    const Time hi = kRanges[uniform_int(rng, 0, std::size(kRanges) - 1)];
    std::vector<Time> times(static_cast<std::size_t>(n));
    for (auto& t : times) t = uniform_int(rng, 1, hi);
    ++report.random_instances;
    run(Instance(m, std::move(times)));
  }
  return report;
}

}  // namespace pcmax
