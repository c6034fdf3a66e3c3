#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taskgroup/model.hpp"
#include "taskgroup/solver.hpp"

namespace taskgroup {

/// A fully trained base table (singles and pairs) together with predicted
/// candidates for every task group of three or more tasks.
struct PredictedTable {
  PerformanceTable base;
  std::vector<CandidateNetwork> predicted;

  PerformanceTable combined() const;
};

/// Predicts a >= 3-task network from the group's pair networks: the loss on
/// each task is the arithmetic mean of that task's losses across the group's
/// pairwise networks (g-1 values for a group of size g). The returned
/// candidate is flagged as predicted and carries the given cost.
CandidateNetwork hoa_predict(const PerformanceTable& base, const std::vector<std::string>& group,
                             std::int64_t cost_msnt);

/// Extends a base table of fully trained networks with predicted candidates
/// for every task subset of size >= 3 that has no trained entry. The
/// predicted cost is the (uniform) cost of the base's pair networks.
PredictedTable hoa_extend(const PerformanceTable& base);

struct HoaPipelineResult {
  Solution solution;                                  // over trained + predicted candidates
  std::vector<std::vector<std::string>> retrain_groups;  // selected predicted groups
};

/// Runs exact selection over the base networks plus all predicted higher-order
/// candidates; the selected predicted groups are returned as the networks
/// that still require real training.
HoaPipelineResult hoa_pipeline(const PerformanceTable& base, Budget budget);

struct EsaResult {
  Solution chosen_on_proxy;    // optimum of the proxy table
  Solution realized_on_final;  // the same ids evaluated on the final table
};

/// Select on a cheaply obtained proxy table, evaluate on the final table.
/// The realized loss is never below the final table's true optimum.
EsaResult esa_pipeline(const PerformanceTable& proxy, const PerformanceTable& final_table,
                       Budget budget);

/// Synthetic proxy for experiments: adds seeded Gaussian noise (sigma) to
/// every loss, clamped at zero. The noise model is synthetic, not a model of
/// real partially-trained networks.
PerformanceTable make_noisy_proxy(const PerformanceTable& table, double sigma,
                                  std::uint64_t seed);

struct TrainingStrategy {
  enum class Kind { full, hoa, esa };
  Kind kind = Kind::full;
  double esa_fraction = 0.0;       // fraction of full training per candidate, in (0,1)
  std::int64_t esa_selected = 0;   // selected networks that get trained to convergence
};

/// Fraction of the full-search training effort a strategy needs, counting
/// fully trained candidates against the 2^k - 1 + k total. For HOA this is
/// (2k + k(k-1)/2) / (2^k - 1 + k), before retraining the selected groups;
/// for ESA it is f + selected / (2^k - 1 + k).
double training_budget_report(int task_count, const TrainingStrategy& strategy);

}  // namespace taskgroup
