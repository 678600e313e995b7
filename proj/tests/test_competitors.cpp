#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pcmax/competitors.hpp"
#include "pcmax/heuristics.hpp"

using namespace pcmax;

namespace {

// First-fit decreasing bin count, written directly from the definition.
std::size_t ffd_bins(oracle::Times times, Time capacity) {
  times = oracle::sorted_desc(times);
  std::vector<Time> bins;
  for (auto t : times) {
    bool placed = false;
    for (auto& b : bins) {
      if (b + t <= capacity) {
        b += t;
        placed = true;
        break;
      }
    }
    if (!placed) bins.push_back(t);
  }
  return bins.size();
}

Time packed_max(const Instance& inst, const FfdPacking& p) {
  Time worst = 0;
  for (const auto& bin : p.bins) {
    Time load = 0;
    for (auto j : bin) load += inst.time(j);
    worst = std::max(worst, load);
  }
  return worst;
}

}  // namespace

TEST_CASE("ffd packs the small example at capacity 6") {
  const Instance inst(2, {3, 3, 2, 2, 2});
  const FfdPacking p = ffd_pack(inst, 6);
  CHECK(p.fits);
  REQUIRE(p.bins.size() == 2);
  CHECK(p.bins[0] == std::vector<JobIndex>{0, 1});
  CHECK(p.bins[1] == std::vector<JobIndex>{2, 3, 4});
}

TEST_CASE("ffd needs three bins at capacity 5") {
  const Instance inst(2, {3, 3, 2, 2, 2});
  const FfdPacking p = ffd_pack(inst, 5);
  CHECK_FALSE(p.fits);
  CHECK(p.bins.size() == 3);
}

TEST_CASE("capacity equal to the total fits in one bin") {
  const Instance inst(3, {8, 5, 5, 1});
  const FfdPacking p = ffd_pack(inst, inst.total());
  CHECK(p.fits);
  CHECK(p.bins.size() == 1);
}

TEST_CASE("ffd rejects a capacity below the largest job") {
  CHECK_THROWS_AS(ffd_pack(Instance(2, {9, 1}), 8), std::invalid_argument);
}

TEST_CASE("ffd agrees with the reference bin count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto times = oracle::random_times(rng, 1 + trial % 30, 1, 60);
    const Instance inst(1 + trial % 5, times);
    const Time capacity = inst.max_time() + trial % 50;
    const FfdPacking p = ffd_pack(inst, capacity);
    CHECK(p.bins.size() == ffd_bins(times, capacity));
    CHECK(packed_max(inst, p) <= capacity);
    CHECK(p.fits == (p.bins.size() <= static_cast<std::size_t>(inst.machines())));
  }
}

TEST_CASE("multifit examples") {
  CHECK(multifit(Instance(2, {3, 3, 2, 2, 2})).makespan() == 6);
  CHECK(multifit(Instance(3, {5, 5, 4, 4, 3, 3, 3})).makespan() == 9);
  CHECK(multifit(Instance(5, {4, 9, 2})).makespan() == 9);
  CHECK_THROWS_AS(multifit(Instance(2, {1, 2}), -1), std::invalid_argument);
}

TEST_CASE("combine examples") {
  CHECK(combine(Instance(2, {3, 3, 2, 2, 2})).makespan() == 6);
  CHECK(combine(Instance(4, {6})).makespan() == 6);
  CHECK(combine(Instance(2, {6, 5})).makespan() == 6);
  CHECK(combine(Instance(1, {6, 5})).makespan() == 11);
}

TEST_CASE("multifit and combine against brute force and lpt") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1500; ++trial) {
    const int m = 1 + trial % 4;
    const auto times = oracle::random_times(rng, 1 + trial % 9, 1, 30);
    CAPTURE(m);
    CAPTURE(times);
    const Instance inst(m, times);
    const auto opt = oracle::brute_force_opt(times, m);
    const Time l = lpt(inst).makespan();
    const Time mf = multifit(inst).makespan();
    const Time cb = combine(inst).makespan();
    CHECK(mf >= opt);
    CHECK(cb >= opt);
    CHECK(cb <= l);
    if (times.size() <= 2) CHECK(cb == opt);
  }
}

TEST_CASE("more iterations never hurt multifit") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst(3 + trial % 5, oracle::random_times(rng, 20 + trial % 40, 1, 1000));
    CHECK(multifit(inst, 12).makespan() <= multifit(inst, 0).makespan());
    CHECK(multifit(inst, 7).makespan() <= multifit(inst, 3).makespan());
  }
}
