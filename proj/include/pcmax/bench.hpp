#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcmax/competitors.hpp"
#include "pcmax/exact.hpp"
#include "pcmax/instance_io.hpp"
#include "pcmax/model.hpp"

namespace pcmax {

enum class Algorithm { lpt, lpt_rev, slack, multifit, combine, exact };

std::string to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view name);

struct RunOptions {
  int multifit_iterations = kDefaultMultifitIterations;
  std::uint64_t node_limit = kDefaultNodeLimit;
  bool timing = true;  ///< when false elapsed_us is reported as 0
};

struct RunRecord {
  Algorithm algo;
  Schedule schedule;
  BoundReport bounds;
  /// Worst-case ratio ceiling of the algorithm, when one is known.
  std::optional<Rational> ratio_bound;
  std::int64_t elapsed_us = 0;
  /// Only meaningful for Algorithm::exact.
  bool proven_optimal = false;

  Time makespan() const { return schedule.makespan(); }
};

RunRecord run_algorithm(Algorithm algo, const Instance& instance, const RunOptions& options = {});

/// Win/draw/loss of algorithm A against B over one (class, range, m) group.
/// A wins when its makespan is strictly smaller.
struct ComparisonRow {
  InstanceClass cls;
  Time a;
  Time b;
  int m;
  int count = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double mean_ratio = 0.0;  ///< mean of makespan(A) / makespan(B)

  double pct(int part) const { return count == 0 ? 0.0 : 100.0 * part / count; }
};

struct CsvRecord {
  SuiteEntry entry;
  RunRecord run;
};

struct Comparison {
  Algorithm algo_a;
  Algorithm algo_b;
  /// Classes in the order nonuniform, uniform, graham_family, lptrev_family;
  /// rows by class, range, m and records additionally by instance id, with A
  /// before B.
  std::vector<ComparisonRow> rows;
  std::vector<CsvRecord> records;
};

Comparison compare(const Suite& suite, Algorithm algo_a, Algorithm algo_b,
                   const RunOptions& options = {});

/// Totals over the rows selected by `cls` (all rows when nullopt).
ComparisonRow aggregate(const Comparison& cmp, std::optional<InstanceClass> cls);

std::string format_table(const Comparison& cmp);
std::string csv_header();
std::string format_csv_row(const CsvRecord& record);
std::string format_csv(const Comparison& cmp);

struct ConformanceOptions {
  int m_min = 2;
  int m_max = 3;
  int n_min = 1;
  int n_max = 8;
  Time t_min = 1;
  Time t_max = 6;
  int trials = 10000;
  int random_m_max = 4;
  int random_n_max = 12;
  std::uint64_t seed = 1;
  std::uint64_t node_limit = kDefaultNodeLimit;
};

struct ConformanceReport {
  std::size_t exhaustive_instances = 0;
  std::size_t random_instances = 0;
  std::size_t checks = 0;
  std::size_t unsolved = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty() && unsolved == 0; }
};

/// Every bound check for one instance against its exact optimum. Returns a
/// description per violated check and adds the number of checks performed to
/// `checks`.
std::vector<std::string> check_bounds(const Instance& instance, Time opt, std::size_t& checks);

/// Exhaustive sweep over all multisets of times in [t_min, t_max] with n in
/// [n_min, n_max] and m in [m_min, m_max], then `trials` random instances with
/// m in [2, random_m_max] and n in [1, random_n_max].
ConformanceReport conformance_sweep(const ConformanceOptions& options);

}  // namespace pcmax
