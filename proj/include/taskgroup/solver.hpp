#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taskgroup/model.hpp"

namespace taskgroup {

/// Inference-time budget in milli-SNT.
struct Budget {
  std::int64_t msnt = 0;
};

enum class Method { optimal, pessimal, random_mean, all_in_one, independent };

std::string_view to_string(Method method);
Method method_from_string(std::string_view name);  // accepts "random" for random_mean

/// One point of a budget sweep. `solution` is empty when the method is
/// infeasible at this budget; `note` then carries the reason. For
/// random_mean the solution holds the mean total loss and no network ids.
struct SweepPoint {
  Budget budget;
  Method method = Method::optimal;
  std::optional<Solution> solution;
  std::string note;
};

/// Exact budgeted selection: the covering subset with minimum total loss
/// among all subsets with cost <= budget. Depth-first branch and bound over
/// subsets of at most |task_set| networks; ties broken by smaller cost, then
/// lexicographically smallest sorted id list. Deterministic.
Solution solve_optimal(const PerformanceTable& table, Budget budget);

/// Same contract as solve_optimal via exhaustive enumeration of all covering
/// subsets of size <= |task_set| within budget. Used to certify the
/// branch-and-bound search. Throws TooManyCandidates when the enumeration
/// would exceed the work guard.
Solution solve_oracle(const PerformanceTable& table, Budget budget);

/// Worst covering selection: maximizes total loss over covering subsets with
/// cost <= budget (each task still scored by the best member network). Ties
/// broken like solve_optimal.
Solution solve_pessimal(const PerformanceTable& table, Budget budget);

struct RandomMeanConfig {
  std::int64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  int threads = 1;
  std::int64_t max_attempts_per_trial = 10'000;  // rejection bound
};

/// Monte Carlo mean loss of uniformly random task partitions mapped to their
/// exact-support candidates (half-cost variant chosen uniformly for singleton
/// groups that have one), rejection-sampled to cost <= budget. Reproducible
/// from the seed; trials are sharded into fixed blocks with per-block
/// substreams, so the result does not depend on the thread count.
SweepPoint solve_random_mean(const PerformanceTable& table, Budget budget,
                             const RandomMeanConfig& config);
SweepPoint solve_random_mean(const PerformanceTable& table, Budget budget,
                             std::int64_t trials, std::uint64_t seed);

/// All-tasks-in-one-network baseline: the cheapest candidate whose support is
/// the whole task set.
Solution solve_all_in_one(const PerformanceTable& table, Budget budget);

/// One-network-per-task baseline: for each task, its full-size single-task
/// candidate (the most expensive singleton-support entry; ties resolved by
/// lower loss, then id).
Solution solve_independent(const PerformanceTable& table, Budget budget);

struct SweepConfig {
  std::int64_t trials = 100'000;  // for random_mean points
  std::uint64_t seed = 0;
  int threads = 1;
};

/// One SweepPoint per (budget, method), budgets stepping inclusively from
/// `from` to `to`. Infeasible points become explicit markers instead of
/// aborting the sweep.
std::vector<SweepPoint> sweep(const PerformanceTable& table, Budget from, Budget to,
                              std::int64_t step_msnt, const std::vector<Method>& methods,
                              const SweepConfig& config = {});

/// Exact cheapest covering cost, ignoring losses. Throws TooManyCandidates
/// for task sets too large for the subset DP.
std::int64_t min_cover_cost(const PerformanceTable& table);

}  // namespace taskgroup
