#include "taskgroup/approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace taskgroup {

namespace {

// Resolves the trained pair network for {a, b}: the candidate whose support
// is exactly the pair. Several variants resolve to the largest cost, then id.
const CandidateNetwork* find_pair_network(const PerformanceTable& base, const std::string& a,
                                          const std::string& b) {
  const CandidateNetwork* pick = nullptr;
  for (const CandidateNetwork& n : base.networks()) {
    if (n.losses.size() != 2 || !n.solves(a) || !n.solves(b)) continue;
    if (pick == nullptr || n.cost_msnt > pick->cost_msnt ||
        (n.cost_msnt == pick->cost_msnt && n.id < pick->id))
      pick = &n;
  }
  return pick;
}

std::vector<std::string> canonical_group(const TaskSet& task_set,
                                         const std::vector<std::string>& group) {
  std::vector<std::size_t> idx;
  for (const auto& t : group) idx.push_back(task_set.index_of(t));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw ValidationError("duplicate task in group");
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(task_set.tasks()[i]);
  return out;
}

const CandidateNetwork* find_exact_support(const PerformanceTable& table,
                                           const std::vector<std::string>& tasks) {
  for (const CandidateNetwork& n : table.networks()) {
    if (n.losses.size() != tasks.size()) continue;
    bool all = std::all_of(tasks.begin(), tasks.end(),
                           [&](const std::string& t) { return n.solves(t); });
    if (all) return &n;
  }
  return nullptr;
}

}  // namespace

PerformanceTable PredictedTable::combined() const {
  std::vector<CandidateNetwork> nets(base.networks().begin(), base.networks().end());
  nets.insert(nets.end(), predicted.begin(), predicted.end());
  return PerformanceTable(base.task_set(), std::move(nets));
}

CandidateNetwork hoa_predict(const PerformanceTable& base, const std::vector<std::string>& group,
                             std::int64_t cost_msnt) {
  if (cost_msnt <= 0) throw ValidationError("predicted network cost must be positive");
  std::vector<std::string> tasks = canonical_group(base.task_set(), group);
  if (tasks.size() < 3)
    throw ValidationError("higher-order prediction needs a group of at least 3 tasks");

  CandidateNetwork out;
  out.id = canonical_id(base.task_set(), tasks, cost_msnt);
  out.cost_msnt = cost_msnt;
  out.predicted = true;
  for (const auto& task : tasks) {
    double sum = 0.0;
    for (const auto& partner : tasks) {
      if (partner == task) continue;
      const CandidateNetwork* pair = find_pair_network(base, task, partner);
      if (pair == nullptr) throw MissingPairNetwork(task, partner);
      sum += pair->loss_on(task);
    }
    out.losses[task] = sum / static_cast<double>(tasks.size() - 1);
  }
  return out;
}

PredictedTable hoa_extend(const PerformanceTable& base) {
  const TaskSet& task_set = base.task_set();
  const std::size_t k = task_set.size();
  if (k < 2) throw ValidationError("higher-order extension needs at least 2 tasks");

  // All pair networks must exist and share one (full-size) cost.
  std::int64_t full_cost = -1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::string& a = task_set.tasks()[i];
      const std::string& b = task_set.tasks()[j];
      const CandidateNetwork* pair = find_pair_network(base, a, b);
      if (pair == nullptr) throw MissingPairNetwork(a, b);
      if (full_cost < 0) full_cost = pair->cost_msnt;
      if (pair->cost_msnt != full_cost)
        throw ValidationError("pair networks have mixed costs; cannot infer the full-size cost");
    }
  }

  // Singles: one full-size and at least one cheaper variant per task.
  for (const auto& task : task_set.tasks()) {
    bool has_full = false, has_reduced = false;
    for (const CandidateNetwork& n : base.networks()) {
      if (n.losses.size() != 1 || !n.solves(task)) continue;
      if (n.cost_msnt == full_cost) has_full = true;
      if (n.cost_msnt < full_cost) has_reduced = true;
    }
    if (!has_full)
      throw ValidationError("base table lacks a full-size single-task network for " + task);
    if (!has_reduced)
      throw ValidationError("base table lacks a reduced-size single-task network for " + task);
  }

  PredictedTable out{base, {}};
  for (const auto& tmpl : generate_candidate_ids(task_set, full_cost, 1)) {
    if (tmpl.tasks.size() < 3) continue;
    if (tmpl.cost_msnt != full_cost) continue;  // skip the half-cost singleton templates
    if (find_exact_support(base, tmpl.tasks) != nullptr) continue;  // already trained
    out.predicted.push_back(hoa_predict(base, tmpl.tasks, full_cost));
  }
  return out;
}

HoaPipelineResult hoa_pipeline(const PerformanceTable& base, Budget budget) {
  PredictedTable predicted = hoa_extend(base);
  PerformanceTable combined = predicted.combined();
  HoaPipelineResult result;
  result.solution = solve_optimal(combined, budget);
  for (const auto& id : result.solution.network_ids) {
    const CandidateNetwork& n = combined.network(id);
    if (n.predicted) result.retrain_groups.push_back(n.support(combined.task_set()));
  }
  return result;
}

EsaResult esa_pipeline(const PerformanceTable& proxy, const PerformanceTable& final_table,
                       Budget budget) {
  if (proxy.task_set() != final_table.task_set())
    throw TableMismatch("proxy and final tables cover different task sets");
  if (proxy.size() != final_table.size())
    throw TableMismatch("proxy and final tables have different candidate sets");
  for (const CandidateNetwork& p : proxy.networks()) {
    const CandidateNetwork* f = final_table.find(p.id);
    if (f == nullptr)
      throw TableMismatch("network " + p.id + " missing from the final table");
    if (f->cost_msnt != p.cost_msnt)
      throw TableMismatch("network " + p.id + " has different costs in the two tables");
    if (f->losses.size() != p.losses.size() ||
        !std::all_of(p.losses.begin(), p.losses.end(),
                     [&](const auto& kv) { return f->solves(kv.first); }))
      throw TableMismatch("network " + p.id + " solves different tasks in the two tables");
  }

  EsaResult result;
  result.chosen_on_proxy = solve_optimal(proxy, budget);
  result.realized_on_final = evaluate(final_table, result.chosen_on_proxy.network_ids);
  result.realized_on_final.budget_msnt = budget.msnt;
  return result;
}

PerformanceTable make_noisy_proxy(const PerformanceTable& table, double sigma,
                                  std::uint64_t seed) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma))
    throw ValidationError("noise sigma must be finite and non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);

  std::vector<CandidateNetwork> nets(table.networks().begin(), table.networks().end());
  std::sort(nets.begin(), nets.end(),
            [](const CandidateNetwork& a, const CandidateNetwork& b) { return a.id < b.id; });
  for (CandidateNetwork& n : nets)
    for (const auto& task : table.task_set().tasks()) {
      auto it = n.losses.find(task);
      if (it != n.losses.end()) it->second = std::max(0.0, it->second + noise(rng));
    }
  return PerformanceTable(table.task_set(), std::move(nets));
}

double training_budget_report(int task_count, const TrainingStrategy& strategy) {
  if (task_count < 2) throw ValidationError("training budget report needs at least 2 tasks");
  if (task_count > 62) throw ValidationError("task count too large");
  const auto k = static_cast<double>(task_count);
  const double total = std::pow(2.0, k) - 1.0 + k;  // full candidate count, 2^k - 1 + k

  switch (strategy.kind) {
    case TrainingStrategy::Kind::full:
      return 1.0;
    case TrainingStrategy::Kind::hoa:
      // fully trained candidates: k full singles, k reduced singles, all pairs
      return (2.0 * k + k * (k - 1.0) / 2.0) / total;
    case TrainingStrategy::Kind::esa: {
      if (!(strategy.esa_fraction > 0.0 && strategy.esa_fraction < 1.0))
        throw ValidationError("esa fraction must be in (0, 1)");
      if (strategy.esa_selected < 0 || static_cast<double>(strategy.esa_selected) > total)
        throw ValidationError("esa selected-network count out of range");
      return strategy.esa_fraction + static_cast<double>(strategy.esa_selected) / total;
    }
  }
  throw ValidationError("unknown training strategy");
}

}  // namespace taskgroup
