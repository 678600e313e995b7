#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pcmax/heuristics.hpp"

using namespace pcmax;

namespace {

std::vector<Time> loads_of(const Schedule& s) { return {s.loads().begin(), s.loads().end()}; }

const std::vector<Time> kSmall{3, 3, 2, 2, 2};
const std::vector<Time> kFamily3{5, 5, 4, 4, 3, 3, 3, 3};

}  // namespace

TEST_CASE("list scheduling in the given order") {
  const Instance inst(2, kSmall);
  const std::vector<JobIndex> order{0, 1, 2, 3, 4};
  const Schedule s = list_scheduling(inst, order);
  CHECK(loads_of(s) == std::vector<Time>{7, 5});
  CHECK(s.makespan() == 7);
  const auto ref = oracle::list_schedule(kSmall, 2);
  CHECK(ref.loads == loads_of(s));
}

TEST_CASE("list scheduling spreads equal jobs") {
  const Instance inst(3, {4, 4, 4});
  const std::vector<JobIndex> order{0, 1, 2};
  const Schedule s = list_scheduling(inst, order);
  CHECK(s.makespan() == 4);
  CHECK(loads_of(s) == std::vector<Time>{4, 4, 4});
}

TEST_CASE("list scheduling with an empty list keeps the seed") {
  const Instance inst(2, {5, 4});
  const Schedule s = list_scheduling(inst, {}, {{0, 1}, {}});
  CHECK(loads_of(s) == std::vector<Time>{9, 0});
  CHECK(s.makespan() == 9);
}

TEST_CASE("list scheduling rejects repeated and seeded jobs") {
  const Instance inst(2, {5, 4, 1});
  const std::vector<JobIndex> twice{0, 0, 1, 2};
  CHECK_THROWS_AS(list_scheduling(inst, twice), std::invalid_argument);
  const std::vector<JobIndex> seeded{0, 1, 2};
  CHECK_THROWS_AS(list_scheduling(inst, seeded, {{0}, {}}), std::invalid_argument);
  const std::vector<JobIndex> missing{0, 1};
  CHECK_THROWS_AS(list_scheduling(inst, missing), std::invalid_argument);
}

TEST_CASE("lpt examples") {
  CHECK(lpt(Instance(2, kSmall)).makespan() == 7);
  CHECK(oracle::brute_force_opt(kSmall, 2) == 6);

  const Schedule g = lpt(Instance(3, {5, 5, 4, 4, 3, 3, 3}));
  CHECK(g.makespan() == 11);
  CHECK(oracle::brute_force_opt({5, 5, 4, 4, 3, 3, 3}, 3) == 9);
  CHECK(Rational(g.makespan(), 9) == Rational(4, 3) - Rational(1, 9));

  CHECK(lpt(Instance(3, kFamily3)).makespan() == 11);
}

TEST_CASE("lpt prefix") {
  const Instance inst(2, kSmall);
  const std::vector<JobIndex> critical_alone{4};
  CHECK(lpt_prefix(inst, critical_alone).makespan() == 7);
  CHECK(oracle::lpt_with_prefix(kSmall, 2, 4, 4) == 7);
  const std::vector<JobIndex> critical_tuple{2, 3, 4};
  CHECK(lpt_prefix(inst, critical_tuple).makespan() == 6);

  CHECK(loads_of(lpt_prefix(inst, {})) == loads_of(lpt(inst)));

  const Instance fam(3, kFamily3);
  const std::vector<JobIndex> tuple{4, 5, 6};
  CHECK(lpt_prefix(fam, tuple).makespan() == 12);
  CHECK(oracle::lpt_with_prefix(kFamily3, 3, 4, 6) == 12);

  const std::vector<JobIndex> repeated{1, 1};
  CHECK_THROWS_AS(lpt_prefix(inst, repeated), std::invalid_argument);
}

TEST_CASE("lpt_rev on the 3m+1 family") {
  const LptRevResult r = lpt_rev(Instance(3, kFamily3));
  CHECK(r.z1 == 11);
  CHECK(r.z2 == 11);
  CHECK(r.z3 == 12);
  CHECK(r.schedule.makespan() == 11);
  CHECK(oracle::brute_force_opt(kFamily3, 3) == 10);
  CHECK(Rational(11, 10) <= Rational(4, 3) - Rational(7, 30));
}

TEST_CASE("lpt_rev on the small example reaches the optimum through the tuple") {
  const LptRevResult r = lpt_rev(Instance(2, kSmall));
  CHECK(r.z1 == 7);
  CHECK(r.z2 == 7);
  CHECK(r.z3 == 6);
  CHECK(r.schedule.makespan() == 6);
}

TEST_CASE("lpt_rev is optimal for two machines and five jobs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto times = oracle::random_times(rng, 5, 1, 1 + trial % 60);
    CAPTURE(times);
    CHECK(lpt_rev(Instance(2, times)).schedule.makespan() == oracle::brute_force_opt(times, 2));
  }
}

TEST_CASE("slack example") {
  const Instance inst(2, {5, 4, 4, 1});
  const auto tuples = slack_tuples(inst);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0].slack == 1);
  CHECK(tuples[1].slack == 3);
  const Schedule s = slack_heuristic(inst);
  CHECK(s.makespan() == 8);
  CHECK(oracle::brute_force_opt({5, 4, 4, 1}, 2) == 8);
  CHECK(s.assignment()[0] == std::vector<JobIndex>{2, 1});
  CHECK(s.assignment()[1] == std::vector<JobIndex>{3, 0});
}

TEST_CASE("slack pads the last tuple with dummies") {
  const Instance inst(3, {9, 8, 7, 6, 2});
  const auto tuples = slack_tuples(inst);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[1].members == std::vector<JobIndex>{3, 4});
  CHECK(tuples[1].padding == 1);
  CHECK(tuples[1].slack == 6);
  CHECK(slack_heuristic(inst).makespan() == oracle::slack_makespan({9, 8, 7, 6, 2}, 3));
}

TEST_CASE("slack with n <= m places one job per machine") {
  const Instance inst(4, {7, 3, 2});
  const Schedule s = slack_heuristic(inst);
  CHECK(s.makespan() == 7);
  for (std::size_t i = 0; i < 3; ++i) CHECK(s.assignment()[i].size() == 1);
}

TEST_CASE("slack with equal slacks reproduces lpt") {
  // Every full tuple has slack 1.
  const Instance inst(2, {10, 9, 8, 7, 6, 5});
  CHECK(loads_of(slack_heuristic(inst)) == loads_of(lpt(inst)));
  CHECK(slack_heuristic(inst).assignment() == lpt(inst).assignment());
}

TEST_CASE("critical info") {
  const CriticalInfo small = critical_info(lpt(Instance(2, kSmall)));
  CHECK(small.job == 4);
  CHECK(small.k == 3);
  CHECK(small.machine == 0);

  const CriticalInfo single = critical_info(lpt(Instance(3, {6})));
  CHECK(single.job == 0);
  CHECK(single.k == 1);

  const Schedule fam = lpt(Instance(3, kFamily3));
  const CriticalInfo f = critical_info(fam);
  CHECK(fam.load(f.machine) == 11);
  CHECK(f.k == 3);
  CHECK(f.job == 6);
}

TEST_CASE("heuristics agree with the reference implementations") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const int m = 1 + trial % 6;
    const auto times = oracle::random_times(rng, 1 + (trial * 7) % 30, 0, trial % 2 ? 9 : 1000);
    CAPTURE(m);
    CAPTURE(times);
    const Instance inst(m, times);
    CHECK(lpt(inst).makespan() == oracle::lpt_makespan(times, m));
    CHECK(lpt_rev(inst).schedule.makespan() == oracle::lpt_rev_makespan(times, m));
    CHECK(slack_heuristic(inst).makespan() == oracle::slack_makespan(times, m));
    CHECK(loads_of(lpt(inst)) == oracle::list_schedule(oracle::sorted_desc(times), m).loads);
  }
}

TEST_CASE("lpt_rev never worse than lpt and z1 is lpt") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto times = oracle::random_times(rng, 2 + trial % 25, 1, 50);
    const Instance inst(2 + trial % 5, times);
    const LptRevResult r = lpt_rev(inst);
    CHECK(r.z1 == lpt(inst).makespan());
    CHECK(r.schedule.makespan() == std::min({r.z1, r.z2, r.z3}));
  }
}

TEST_CASE("makespans do not depend on input order and scale linearly") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + trial % 4;
    auto times = oracle::random_times(rng, 3 + trial % 15, 1, 40);
    const Instance base(m, times);
    std::shuffle(times.begin(), times.end(), rng);
    const Instance shuffled(m, times);
    CHECK(lpt(base).makespan() == lpt(shuffled).makespan());
    CHECK(lpt_rev(base).schedule.makespan() == lpt_rev(shuffled).schedule.makespan());
    CHECK(slack_heuristic(base).makespan() == slack_heuristic(shuffled).makespan());

    std::vector<Time> scaled(times);
    for (auto& t : scaled) t *= 7;
    const Instance big(m, scaled);
    CHECK(lpt(big).makespan() == 7 * lpt(shuffled).makespan());
    CHECK(lpt_rev(big).schedule.makespan() == 7 * lpt_rev(shuffled).schedule.makespan());
    CHECK(slack_heuristic(big).makespan() == 7 * slack_heuristic(shuffled).makespan());
  }
}
