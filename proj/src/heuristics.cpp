#include "pcmax/heuristics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace pcmax {

Schedule list_scheduling(const Instance& instance, std::span<const JobIndex> job_list,
                         const Assignment& seed) {
  const auto m = static_cast<std::size_t>(instance.machines());
  const std::size_t n = instance.size();

  Assignment assignment = seed.empty() ? Assignment(m) : seed;
  if (assignment.size() != m) throw std::invalid_argument("seed has wrong machine count");

  std::vector<bool> placed(n, false);
  for (const auto& jobs : assignment) {
    for (JobIndex j : jobs) {
      if (j >= n) throw std::invalid_argument("seed job out of range");
      placed[j] = true;
    }
  }

  using Entry = std::pair<Time, MachineIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (MachineIndex i = 0; i < m; ++i) {
    Time load = 0;
    for (JobIndex j : assignment[i]) load += instance.time(j);
    heap.emplace(load, i);
  }

  for (JobIndex j : job_list) {
    if (j >= n) throw std::invalid_argument("listed job " + std::to_string(j) + " out of range");
    if (placed[j]) throw std::invalid_argument("job " + std::to_string(j) + " listed twice");
    placed[j] = true;
    auto [load, i] = heap.top();
    heap.pop();
    assignment[i].push_back(j);
    heap.emplace(load + instance.time(j), i);
  }
  return evaluate(instance, std::move(assignment));
}

Schedule lpt(const Instance& instance) {
  JobList order(instance.size());
  std::iota(order.begin(), order.end(), JobIndex{0});
  return list_scheduling(instance, order);
}

Schedule lpt_prefix(const Instance& instance, std::span<const JobIndex> prefix) {
  const std::size_t n = instance.size();
  std::vector<bool> in_prefix(n, false);
  for (JobIndex j : prefix) {
    if (j >= n) throw std::invalid_argument("prefix job out of range");
    if (in_prefix[j]) throw std::invalid_argument("prefix job repeated");
    in_prefix[j] = true;
  }

  Assignment seed(static_cast<std::size_t>(instance.machines()));
  JobList rest;
  rest.reserve(n - prefix.size());
  for (JobIndex j = 0; j < n; ++j) {
    if (in_prefix[j]) {
      seed[0].push_back(j);
    } else {
      rest.push_back(j);
    }
  }
  return list_scheduling(instance, rest, seed);
}

LptRevResult lpt_rev(const Instance& instance) {
  Schedule first = lpt(instance);
  const JobIndex crit = first.critical_job();
  const std::size_t k = first.critical_pos();

  const JobIndex single[] = {crit};
  Schedule second = lpt_prefix(instance, single);

  // Truncate at job 0 if the block would start before it.
  const JobIndex block_start = crit + 1 >= k ? crit + 1 - k : 0;
  JobList block(crit - block_start + 1);
  std::iota(block.begin(), block.end(), block_start);
  Schedule third = lpt_prefix(instance, block);

  const Time z1 = first.makespan();
  const Time z2 = second.makespan();
  const Time z3 = third.makespan();
  if (z1 <= z2 && z1 <= z3) return {std::move(first), z1, z2, z3};
  if (z2 <= z3) return {std::move(second), z1, z2, z3};
  return {std::move(third), z1, z2, z3};
}

std::vector<TupleSlack> slack_tuples(const Instance& instance) {
  const auto m = static_cast<std::size_t>(instance.machines());
  const std::size_t n = instance.size();
  std::vector<TupleSlack> tuples;
  for (std::size_t start = 0, idx = 0; start < n; start += m, ++idx) {
    TupleSlack t{idx, {}, 0, 0};
    const std::size_t end = std::min(start + m, n);
    for (JobIndex j = start; j < end; ++j) t.members.push_back(j);
    t.padding = m - t.members.size();
    const Time smallest = t.padding > 0 ? 0 : instance.time(end - 1);
    t.slack = instance.time(start) - smallest;
    tuples.push_back(std::move(t));
  }
  return tuples;
}

Schedule slack_heuristic(const Instance& instance) {
  auto tuples = slack_tuples(instance);
  std::stable_sort(tuples.begin(), tuples.end(),
                   [](const TupleSlack& a, const TupleSlack& b) { return a.slack > b.slack; });
  JobList order;
  order.reserve(instance.size());
  for (const auto& t : tuples) order.insert(order.end(), t.members.begin(), t.members.end());
  return list_scheduling(instance, order);
}

CriticalInfo critical_info(const Schedule& schedule) {
  if (schedule.machines() == 0) throw std::invalid_argument("schedule has no machines");
  return {schedule.critical_job(), schedule.critical_pos(), schedule.critical_machine()};
}

}  // namespace pcmax
