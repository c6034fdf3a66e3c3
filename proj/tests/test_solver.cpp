#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "taskgroup/solver.hpp"
#include "test_util.hpp"

using namespace taskgroup;
using testutil::make_table;

namespace {

// Hand-rolled total used by the reference checks below; per-task min over the
// chosen networks, summed in task-set order.
double brute_total(const PerformanceTable& table, const std::vector<std::size_t>& chosen) {
  double total = 0.0;
  for (const auto& task : table.task_set().tasks()) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : chosen) {
      const double* v = table.networks()[i].find_loss(task);
      if (v != nullptr && *v < best) best = *v;
    }
    if (best == std::numeric_limits<double>::infinity()) return best;
    total += best;
  }
  return total;
}

bool covers(const PerformanceTable& table, const std::vector<std::size_t>& chosen) {
  return std::isfinite(brute_total(table, chosen));
}

std::int64_t subset_cost(const PerformanceTable& table, const std::vector<std::size_t>& chosen) {
  std::int64_t cost = 0;
  for (std::size_t i : chosen) cost += table.networks()[i].cost_msnt;
  return cost;
}

}  // namespace

TEST_CASE("budget-1 forces the all-in-one network on a template instance") {
  auto table = synthetic_template_table(testutil::paper_tasks(), 1000, 500, 42);
  Solution sol = solve_optimal(table, Budget{1000});
  CHECK(sol.network_ids == std::vector<std::string>{"sdnke@1000"});
  CHECK(sol.cost_msnt == 1000);
}

TEST_CASE("unlimited budget reaches the per-task minimum over all candidates") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto table = testutil::random_instance(seed);
    std::int64_t everything = 0;
    for (const auto& n : table.networks()) everything += n.cost_msnt;

    double floor_total = 0.0;
    for (const auto& task : table.task_set().tasks()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& n : table.networks()) {
        const double* v = n.find_loss(task);
        if (v != nullptr && *v < best) best = *v;
      }
      floor_total += best;
    }
    Solution sol = solve_optimal(table, Budget{everything});
    CHECK(sol.total_loss == floor_total);
  }
}

TEST_CASE("oracle: single candidate at exact budget") {
  auto table = make_table({"s", "d"}, {{"sd", 1500, {{"s", 0.4}, {"d", 0.5}}}});
  Solution sol = solve_oracle(table, Budget{1500});
  CHECK(sol.network_ids == std::vector<std::string>{"sd"});
  CHECK_THROWS_AS(solve_oracle(table, Budget{1499}), BudgetInfeasible);
}

TEST_CASE("oracle id choice is invariant to scaling every loss") {
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    auto table = testutil::random_instance(seed);
    std::vector<CandidateNetwork> scaled(table.networks().begin(), table.networks().end());
    for (auto& n : scaled)
      for (auto& [task, loss] : n.losses) loss *= 3.0;
    PerformanceTable scaled_table(table.task_set(), std::move(scaled));
    CHECK(solve_oracle(table, Budget{2000}).network_ids ==
          solve_oracle(scaled_table, Budget{2000}).network_ids);
  }
}

TEST_CASE("branch and bound matches the exhaustive oracle on random instances") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto table = testutil::random_instance(seed);
    for (std::int64_t budget : {1000, 1500, 2500, 4000}) {
      Solution fast, slow;
      bool fast_infeasible = false, slow_infeasible = false;
      std::int64_t fast_min = -2, slow_min = -2;
      try {
        fast = solve_optimal(table, Budget{budget});
      } catch (const BudgetInfeasible& e) {
        fast_infeasible = true;
        fast_min = e.min_required_cost_msnt();
      }
      try {
        slow = solve_oracle(table, Budget{budget});
      } catch (const BudgetInfeasible& e) {
        slow_infeasible = true;
        slow_min = e.min_required_cost_msnt();
      }
      REQUIRE(fast_infeasible == slow_infeasible);
      if (fast_infeasible) {
        CHECK(fast_min == slow_min);
        continue;
      }
      CHECK(fast.total_loss == slow.total_loss);  // exact, same arithmetic
      CHECK(fast.network_ids == slow.network_ids);
      CHECK(fast.cost_msnt == slow.cost_msnt);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("branch and bound matches the oracle on the 36-candidate template instance") {
  for (std::uint64_t seed : {7ull, 1234ull}) {
    auto table = synthetic_template_table(testutil::paper_tasks(), 1000, 500, seed);
    for (std::int64_t budget = 1000; budget <= 5000; budget += 500) {
      Solution fast = solve_optimal(table, Budget{budget});
      Solution slow = solve_oracle(table, Budget{budget});
      CHECK(fast.total_loss == slow.total_loss);
      CHECK(fast.network_ids == slow.network_ids);
    }
  }
}

TEST_CASE("returned solutions are prune_dominated fixed points") {
  for (std::uint64_t seed = 30; seed < 45; ++seed) {
    auto table = testutil::random_instance(seed);
    for (std::int64_t budget : {1500, 3000}) {
      try {
        Solution sol = solve_optimal(table, Budget{budget});
        CHECK(prune_dominated(table, sol.network_ids) == sol.network_ids);
        Solution worst = solve_pessimal(table, Budget{budget});
        CHECK(prune_dominated(table, worst.network_ids) == worst.network_ids);
      } catch (const BudgetInfeasible&) {
      }
    }
  }
}

TEST_CASE("pessimal: unique cover, ordering against optimal") {
  auto table = make_table({"s", "d"}, {{"bad", 1000, {{"s", 0.9}, {"d", 0.9}}},
                                       {"s-", 1000, {{"s", 0.1}}},
                                       {"d-", 1000, {{"d", 0.1}}}});
  // only one cover fits a 1000 budget
  CHECK(solve_pessimal(table, Budget{1000}).network_ids == std::vector<std::string>{"bad"});

  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    auto inst = testutil::random_instance(seed);
    for (std::int64_t budget : {2000, 4000}) {
      try {
        CHECK(solve_pessimal(inst, Budget{budget}).total_loss >=
              solve_optimal(inst, Budget{budget}).total_loss);
      } catch (const BudgetInfeasible&) {
      }
    }
  }
}

TEST_CASE("pessimal equals the exhaustive max over minimal covers") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    auto table = testutil::random_instance(seed, 4, 6, 10);
    const std::size_t m = table.size();
    for (std::int64_t budget : {1500, 2500}) {
      // reference: enumerate every subset, keep budget-feasible minimal covers
      double worst = -1.0;
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < m; ++i)
          if (mask & (std::uint64_t(1) << i)) chosen.push_back(i);
        if (subset_cost(table, chosen) > budget) continue;
        if (!covers(table, chosen)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < chosen.size() && minimal; ++drop) {
          std::vector<std::size_t> rest = chosen;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
          if (!rest.empty() && covers(table, rest)) minimal = false;
          if (rest.empty()) minimal = true;
        }
        if (chosen.size() == 1 || minimal) worst = std::max(worst, brute_total(table, chosen));
      }
      if (worst < 0.0) {
        CHECK_THROWS_AS(solve_pessimal(table, Budget{budget}), BudgetInfeasible);
        continue;
      }
      CHECK(solve_pessimal(table, Budget{budget}).total_loss == worst);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("min_cover_cost is exact on a constructed instance") {
  auto table = make_table({"s", "d", "n"}, {{"sd", 900, {{"s", .5}, {"d", .5}}},
                                            {"n", 400, {{"n", .5}}},
                                            {"sdn", 1400, {{"s", .9}, {"d", .9}, {"n", .9}}}});
  CHECK(min_cover_cost(table) == 1300);
  CHECK_THROWS_AS(solve_optimal(table, Budget{1299}), BudgetInfeasible);
  try {
    solve_optimal(table, Budget{1200});
  } catch (const BudgetInfeasible& e) {
    CHECK(e.min_required_cost_msnt() == 1300);
  }
}

TEST_CASE("oracle work guard rejects oversized instances") {
  std::vector<std::string> tasks;
  for (int t = 0; t < 8; ++t) tasks.push_back(std::string(1, char('a' + t)));
  auto table = synthetic_template_table(TaskSet(tasks), 1000, 500, 5);
  CHECK(table.size() == 263);
  CHECK_THROWS_AS(solve_oracle(table, Budget{4000}), TooManyCandidates);
}

TEST_CASE("random mean: identical losses give the common value, runs are reproducible") {
  TaskSet tasks({"a", "b", "c"});
  std::vector<CandidateNetwork> nets;
  for (const auto& tmpl : generate_candidate_ids(tasks, 1000, 500)) {
    CandidateNetwork n;
    n.id = canonical_id(tasks, tmpl.tasks, tmpl.cost_msnt);
    n.cost_msnt = tmpl.cost_msnt;
    for (const auto& t : tmpl.tasks) n.losses[t] = 0.4;
    nets.push_back(std::move(n));
  }
  PerformanceTable table(tasks, std::move(nets));

  auto a = solve_random_mean(table, Budget{3000}, 20000, 17);
  CHECK(a.solution->total_loss == doctest::Approx(1.2).epsilon(1e-12));

  auto b = solve_random_mean(table, Budget{3000}, 20000, 17);
  CHECK(a.solution->total_loss == b.solution->total_loss);  // bit-identical

  RandomMeanConfig threaded;
  threaded.trials = 20000;
  threaded.seed = 17;
  threaded.threads = 4;
  auto c = solve_random_mean(table, Budget{3000}, threaded);
  CHECK(c.solution->total_loss == a.solution->total_loss);
}

TEST_CASE("random mean converges to the exhaustive partition expectation") {
  auto table = synthetic_template_table(TaskSet({"a", "b", "c", "d"}), 1000, 500, 2024);
  const std::int64_t budget = 2500;
  double expectation = testutil::exhaustive_partition_expectation(table, budget);
  auto mc = solve_random_mean(table, Budget{budget}, 1'000'000, 99);
  CHECK(std::fabs(mc.solution->total_loss - expectation) / expectation < 0.01);
}

TEST_CASE("random mean reports infeasibility") {
  auto table = make_table({"s", "d"}, {{"sd", 2000, {{"s", .1}, {"d", .1}}},
                                       {"s1", 900, {{"s", .2}}},
                                       {"d1", 900, {{"d", .2}}}});
  CHECK_THROWS_AS(solve_random_mean(table, Budget{1500}, 100, 1), BudgetInfeasible);
  // no candidate has exact support {s}+{d} pairing removed: drop singles
  auto only_joint = make_table({"s", "d"}, {{"sd", 2000, {{"s", .1}, {"d", .1}}}});
  CHECK_NOTHROW(solve_random_mean(only_joint, Budget{2000}, 100, 1));
}

TEST_CASE("baseline ordering: pessimal >= random mean >= optimal") {
  int checked = 0;
  for (std::uint64_t seed : {11ull, 22ull, 33ull, 44ull}) {
    auto table = synthetic_template_table(testutil::paper_tasks(), 1000, 500, seed);
    for (std::int64_t budget : {2000, 3000, 5000}) {
      Solution best = solve_optimal(table, Budget{budget});
      Solution worst = solve_pessimal(table, Budget{budget});
      auto mean = solve_random_mean(table, Budget{budget}, 20000, seed);
      // the mean carries Monte Carlo summation rounding, hence the guard
      double guard = 1e-9 * std::max(1.0, worst.total_loss);
      CHECK(worst.total_loss + guard >= mean.solution->total_loss);
      CHECK(mean.solution->total_loss + guard >= best.total_loss);
      ++checked;
    }
  }
  CHECK(checked == 12);
}

TEST_CASE("all-in-one baseline") {
  auto table = synthetic_template_table(testutil::paper_tasks(), 1000, 500, 8);
  Solution sol = solve_all_in_one(table, Budget{2000});
  CHECK(sol.network_ids == std::vector<std::string>{"sdnke@1000"});
  CHECK_THROWS_AS(solve_all_in_one(table, Budget{999}), BudgetInfeasible);

  auto no_joint = make_table({"s", "d"}, {{"s1", 1000, {{"s", .1}}},
                                          {"d1", 1000, {{"d", .1}}}});
  CHECK_THROWS_AS(solve_all_in_one(no_joint, Budget{5000}), InfeasibleError);
}

TEST_CASE("independent baseline picks the full-size singles") {
  auto table = synthetic_template_table(testutil::paper_tasks(), 1000, 500, 8);
  Solution sol = solve_independent(table, Budget{5000});
  CHECK(sol.network_ids == std::vector<std::string>{"d@1000", "e@1000", "k@1000",
                                                    "n@1000", "s@1000"});
  CHECK(sol.cost_msnt == 5000);
  CHECK_THROWS_AS(solve_independent(table, Budget{4999}), BudgetInfeasible);
}

TEST_CASE("sweep emits one point per budget and method, optimal is monotone") {
  auto table = synthetic_template_table(testutil::paper_tasks(), 1000, 500, 21);
  SweepConfig config;
  config.trials = 5000;
  config.seed = 5;
  auto points = sweep(table, Budget{1000}, Budget{5000}, 500,
                      {Method::optimal, Method::pessimal, Method::random_mean}, config);
  CHECK(points.size() == 27);

  double previous = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    if (p.method != Method::optimal) continue;
    REQUIRE(p.solution.has_value());
    CHECK(p.solution->total_loss <= previous);
    previous = p.solution->total_loss;
  }
}

TEST_CASE("sweep marks infeasible points instead of aborting") {
  auto table = make_table({"s", "d"}, {{"sd", 2000, {{"s", .3}, {"d", .3}}},
                                       {"s1", 1000, {{"s", .2}}},
                                       {"d1", 1000, {{"d", .2}}}});
  auto points = sweep(table, Budget{1000}, Budget{2000}, 500, {Method::optimal});
  REQUIRE(points.size() == 3);
  CHECK(!points[0].solution.has_value());
  CHECK(!points[0].note.empty());
  CHECK(points[2].solution.has_value());
}

TEST_CASE("method names round-trip") {
  for (Method m : {Method::optimal, Method::pessimal, Method::random_mean,
                   Method::all_in_one, Method::independent})
    CHECK(method_from_string(to_string(m)) == m);
  CHECK(method_from_string("random") == Method::random_mean);
  CHECK_THROWS_AS(method_from_string("greedy"), ValidationError);
}
