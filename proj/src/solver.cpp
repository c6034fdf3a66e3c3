#include "taskgroup/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace taskgroup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kNoCost = std::numeric_limits<std::int64_t>::max();
constexpr double kEnumerationWorkLimit = 2e7;  // subsets visited by the exhaustive path

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Dense instance view: loss[n][t] with +inf for tasks a network does not
// solve. Infinities only ever participate in min/comparison, never in sums.
struct Dense {
  const PerformanceTable* table = nullptr;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<std::string> id;
  std::vector<std::int64_t> cost;
  std::vector<std::vector<double>> loss;
};

enum class NetOrder { by_best_loss, by_id };

Dense make_dense(const PerformanceTable& table, NetOrder order) {
  Dense d;
  d.table = &table;
  d.k = table.task_set().size();
  d.m = table.size();

  std::vector<std::size_t> perm(d.m);
  std::iota(perm.begin(), perm.end(), 0);
  if (order == NetOrder::by_best_loss) {
    std::vector<double> best(d.m, kInf);
    for (std::size_t i = 0; i < d.m; ++i)
      for (const auto& [task, loss] : table.networks()[i].losses)
        best[i] = std::min(best[i], loss);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (best[a] != best[b]) return best[a] < best[b];
      return table.networks()[a].id < table.networks()[b].id;
    });
  } else {
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return table.networks()[a].id < table.networks()[b].id;
    });
  }

  for (std::size_t p : perm) {
    const CandidateNetwork& n = table.networks()[p];
    d.id.push_back(n.id);
    d.cost.push_back(n.cost_msnt);
    std::vector<double> row(d.k, kInf);
    for (std::size_t t = 0; t < d.k; ++t) {
      const double* v = n.find_loss(table.task_set().tasks()[t]);
      if (v != nullptr) row[t] = *v;
    }
    d.loss.push_back(std::move(row));
  }
  return d;
}

// Total loss in canonical arithmetic: per-task values summed left to right in
// task-set order. Every total compared anywhere in this module goes through
// this exact summation.
double canonical_total(const std::vector<double>& per_task) {
  double total = 0.0;
  for (double v : per_task) total += v;
  return total;
}

std::vector<std::string> sorted_ids(const Dense& d, const std::vector<std::size_t>& chosen) {
  std::vector<std::string> ids;
  ids.reserve(chosen.size());
  for (std::size_t i : chosen) ids.push_back(d.id[i]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

struct Incumbent {
  bool found = false;
  double loss = kInf;
  std::int64_t cost = 0;
  std::vector<std::string> ids;

  // Tie order: loss, then cost, then lexicographically smallest id list.
  // `maximize` flips only the loss sense (used by the pessimal search).
  void offer(double cand_loss, std::int64_t cand_cost,
             const Dense& d, const std::vector<std::size_t>& chosen, bool maximize) {
    if (found) {
      if (cand_loss != loss) {
        bool better = maximize ? cand_loss > loss : cand_loss < loss;
        if (!better) return;
      } else if (cand_cost != cost) {
        if (cand_cost > cost) return;
      } else {
        std::vector<std::string> cand_ids = sorted_ids(d, chosen);
        if (!(cand_ids < ids)) return;
        loss = cand_loss;
        cost = cand_cost;
        ids = std::move(cand_ids);
        return;
      }
    }
    found = true;
    loss = cand_loss;
    cost = cand_cost;
    ids = sorted_ids(d, chosen);
  }
};

std::int64_t min_cover_cost_dense(const Dense& d) {
  const std::size_t k = d.k;
  std::vector<std::uint32_t> net_mask(d.m, 0);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (d.loss[i][t] != kInf) net_mask[i] |= (1u << t);

  std::vector<std::vector<std::size_t>> nets_by_task(k);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (net_mask[i] & (1u << t)) nets_by_task[t].push_back(i);

  const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  std::vector<std::int64_t> dp(std::size_t(full) + 1, kNoCost);
  dp[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::size_t t = static_cast<std::size_t>(std::countr_zero(mask));
    for (std::size_t i : nets_by_task[t]) {
      std::int64_t prev = dp[mask & ~net_mask[i]];
      if (prev != kNoCost) dp[mask] = std::min(dp[mask], prev + d.cost[i]);
    }
  }
  return dp[full];  // kNoCost cannot happen: table construction requires coverage
}

// Greedy warm start for the branch-and-bound: repeatedly add the in-budget
// network with the largest loss reduction, scoring uncovered tasks at a
// penalty above the worst finite loss.
void greedy_seed(const Dense& d, std::int64_t budget, Incumbent& inc) {
  double penalty = 1.0;
  for (const auto& row : d.loss)
    for (double v : row)
      if (v != kInf) penalty = std::max(penalty, v + 1.0);

  std::vector<double> best(d.k, kInf);
  std::vector<std::size_t> chosen;
  std::int64_t cost = 0;
  auto clamp = [&](double v) { return v == kInf ? penalty : v; };

  while (chosen.size() < d.k) {
    std::size_t pick = d.m;
    double pick_gain = 0.0;
    for (std::size_t i = 0; i < d.m; ++i) {
      if (cost + d.cost[i] > budget) continue;
      double gain = 0.0;
      for (std::size_t t = 0; t < d.k; ++t)
        if (d.loss[i][t] < clamp(best[t])) gain += clamp(best[t]) - d.loss[i][t];
      if (gain > pick_gain) {
        pick_gain = gain;
        pick = i;
      }
    }
    if (pick == d.m) break;
    chosen.push_back(pick);
    cost += d.cost[pick];
    for (std::size_t t = 0; t < d.k; ++t) best[t] = std::min(best[t], d.loss[pick][t]);
  }

  if (std::any_of(best.begin(), best.end(), [](double v) { return v == kInf; })) return;
  inc.offer(canonical_total(best), cost, d, chosen, /*maximize=*/false);
}

struct BranchAndBound {
  const Dense& d;
  std::int64_t budget;
  std::size_t max_size;
  // suffix[i][t]: optimum over networks with index >= i
  std::vector<std::vector<double>> suffix_min_loss;
  std::vector<std::vector<std::int64_t>> suffix_cover_cost;
  std::vector<double> best;
  std::vector<std::size_t> chosen;
  std::int64_t cost = 0;
  Incumbent inc;

  BranchAndBound(const Dense& dense, std::int64_t budget_msnt)
      : d(dense), budget(budget_msnt), max_size(std::min(d.k, d.m)), best(d.k, kInf) {
    suffix_min_loss.assign(d.m + 1, std::vector<double>(d.k, kInf));
    suffix_cover_cost.assign(d.m + 1, std::vector<std::int64_t>(d.k, kNoCost));
    for (std::size_t i = d.m; i-- > 0;) {
      suffix_min_loss[i] = suffix_min_loss[i + 1];
      suffix_cover_cost[i] = suffix_cover_cost[i + 1];
      for (std::size_t t = 0; t < d.k; ++t) {
        if (d.loss[i][t] != kInf) {
          suffix_min_loss[i][t] = std::min(suffix_min_loss[i][t], d.loss[i][t]);
          suffix_cover_cost[i][t] = std::min(suffix_cover_cost[i][t], d.cost[i]);
        }
      }
    }
  }

  void run() {
    greedy_seed(d, budget, inc);
    dfs(0);
  }

  void dfs(std::size_t idx) {
    if (std::all_of(best.begin(), best.end(), [](double v) { return v != kInf; }))
      inc.offer(canonical_total(best), cost, d, chosen, /*maximize=*/false);
    if (chosen.size() == max_size || idx == d.m) return;

    // Admissible bound: each task can at best reach the minimum over the
    // remaining candidates; summed with the same arithmetic as a real total,
    // so bound <= any completion's total holds exactly.
    double bound = 0.0;
    std::int64_t extra_cost = 0;
    for (std::size_t t = 0; t < d.k; ++t) {
      double term = std::min(best[t], suffix_min_loss[idx][t]);
      if (term == kInf) return;  // some task can never be covered from here
      bound += term;
      if (best[t] == kInf) {
        std::int64_t c = suffix_cover_cost[idx][t];
        if (c == kNoCost) return;
        extra_cost = std::max(extra_cost, c);
      }
    }
    if (cost > budget - extra_cost) return;
    if (inc.found) {
      if (bound > inc.loss) return;
      if (bound == inc.loss && cost + extra_cost > inc.cost) return;
    }

    std::vector<double> saved = best;
    for (std::size_t i = idx; i < d.m; ++i) {
      if (cost + d.cost[i] > budget) continue;
      bool improves = false;
      for (std::size_t t = 0; t < d.k; ++t) {
        if (d.loss[i][t] < best[t]) {
          improves = true;
          break;
        }
      }
      if (!improves) continue;  // would never win a task; only adds cost

      chosen.push_back(i);
      cost += d.cost[i];
      for (std::size_t t = 0; t < d.k; ++t) best[t] = std::min(best[t], d.loss[i][t]);
      dfs(i + 1);
      best = saved;
      cost -= d.cost[i];
      chosen.pop_back();
    }
  }
};

// Exhaustive reference search shared by solve_oracle and solve_pessimal:
// every subset of size <= max_size is visited, pruned only by the budget.
struct ExhaustiveSearch {
  const Dense& d;
  std::int64_t budget;
  std::size_t max_size;
  bool maximize;
  std::vector<double> best;
  std::vector<std::size_t> chosen;
  std::int64_t cost = 0;
  Incumbent inc;

  ExhaustiveSearch(const Dense& dense, std::int64_t budget_msnt, bool maximize_loss)
      : d(dense),
        budget(budget_msnt),
        max_size(std::min(d.k, d.m)),
        maximize(maximize_loss),
        best(d.k, kInf) {}

  void run() {
    double work = 0.0;
    double comb = 1.0;
    for (std::size_t j = 1; j <= max_size; ++j) {
      comb = comb * double(d.m - j + 1) / double(j);
      work += comb;
    }
    if (work > kEnumerationWorkLimit)
      throw TooManyCandidates("exhaustive enumeration over " + std::to_string(d.m) +
                              " candidates is too large");
    rec(0);
  }

  void rec(std::size_t idx) {
    if (!chosen.empty() &&
        std::all_of(best.begin(), best.end(), [](double v) { return v != kInf; }))
      inc.offer(canonical_total(best), cost, d, chosen, maximize);
    if (chosen.size() == max_size || idx == d.m) return;

    std::vector<double> saved = best;
    for (std::size_t i = idx; i < d.m; ++i) {
      if (cost + d.cost[i] > budget) continue;
      chosen.push_back(i);
      cost += d.cost[i];
      for (std::size_t t = 0; t < d.k; ++t) best[t] = std::min(best[t], d.loss[i][t]);
      rec(i + 1);
      best = saved;
      cost -= d.cost[i];
      chosen.pop_back();
    }
  }
};

void require_positive_budget(Budget budget) {
  if (budget.msnt <= 0) throw ValidationError("budget must be positive");
}

std::int64_t min_cover_or_unknown(const Dense& d) {
  return d.k <= 22 ? min_cover_cost_dense(d) : -1;
}

Solution finalize(const PerformanceTable& table, Budget budget,
                  const std::vector<std::string>& ids) {
  Solution sol = evaluate(table, ids);
  sol.budget_msnt = budget.msnt;
  return sol;
}

}  // namespace

std::int64_t min_cover_cost(const PerformanceTable& table) {
  if (table.task_set().size() > 22)
    throw TooManyCandidates("task set too large for the covering-cost DP");
  Dense d = make_dense(table, NetOrder::by_id);
  return min_cover_cost_dense(d);
}

Solution solve_optimal(const PerformanceTable& table, Budget budget) {
  require_positive_budget(budget);
  Dense d = make_dense(table, NetOrder::by_best_loss);
  std::int64_t min_cover = min_cover_or_unknown(d);
  if (min_cover >= 0 && min_cover > budget.msnt)
    throw BudgetInfeasible(budget.msnt, min_cover);

  BranchAndBound search(d, budget.msnt);
  search.run();
  if (!search.inc.found) throw BudgetInfeasible(budget.msnt, min_cover);
  return finalize(table, budget, search.inc.ids);
}

Solution solve_oracle(const PerformanceTable& table, Budget budget) {
  require_positive_budget(budget);
  Dense d = make_dense(table, NetOrder::by_id);
  ExhaustiveSearch search(d, budget.msnt, /*maximize_loss=*/false);
  search.run();
  if (!search.inc.found) throw BudgetInfeasible(budget.msnt, min_cover_or_unknown(d));
  return finalize(table, budget, search.inc.ids);
}

Solution solve_pessimal(const PerformanceTable& table, Budget budget) {
  require_positive_budget(budget);
  Dense d = make_dense(table, NetOrder::by_id);
  ExhaustiveSearch search(d, budget.msnt, /*maximize_loss=*/true);
  search.run();
  if (!search.inc.found) throw BudgetInfeasible(budget.msnt, min_cover_or_unknown(d));
  return finalize(table, budget, search.inc.ids);
}

namespace {

// Uniform sampler over set partitions via restricted-growth strings. The
// label of element i is drawn proportionally to the number of completions,
// which makes every partition equally likely.
class PartitionSampler {
 public:
  explicit PartitionSampler(std::size_t k) : k_(k) {
    ways_.assign(k_ + 1, std::vector<long double>(k_ + 2, 0.0L));
    for (std::size_t m = 0; m <= k_ + 1; ++m) ways_[0][m] = 1.0L;
    for (std::size_t n = 1; n <= k_; ++n)
      for (std::size_t m = 0; m <= k_; ++m)
        ways_[n][m] = static_cast<long double>(m) * ways_[n - 1][m] + ways_[n - 1][m + 1];
  }

  void sample(std::mt19937_64& rng, std::vector<int>& labels) const {
    labels.assign(k_, 0);
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      std::size_t remaining = k_ - i - 1;
      long double w_existing = ways_[remaining][blocks];
      long double w_new = ways_[remaining][blocks + 1];
      long double total = static_cast<long double>(blocks) * w_existing + w_new;
      long double u = std::uniform_real_distribution<long double>(0.0L, 1.0L)(rng) * total;
      if (blocks > 0 && u < static_cast<long double>(blocks) * w_existing) {
        auto j = static_cast<std::size_t>(u / w_existing);
        labels[i] = static_cast<int>(std::min(j, blocks - 1));
      } else {
        labels[i] = static_cast<int>(blocks);
        ++blocks;
      }
    }
  }

 private:
  std::size_t k_;
  std::vector<std::vector<long double>> ways_;
};

struct GroupedCandidates {
  // exact-support mask -> candidate indices (sorted by id for determinism)
  std::map<std::uint64_t, std::vector<std::size_t>> by_support;
  std::vector<std::uint64_t> net_mask;
};

GroupedCandidates group_by_support(const Dense& d) {
  GroupedCandidates g;
  g.net_mask.assign(d.m, 0);
  for (std::size_t i = 0; i < d.m; ++i) {
    for (std::size_t t = 0; t < d.k; ++t)
      if (d.loss[i][t] != kInf) g.net_mask[i] |= (std::uint64_t(1) << t);
    g.by_support[g.net_mask[i]].push_back(i);  // dense nets already in id order
  }
  return g;
}

// Cheapest partition-style grouping cost, or kNoCost when no partition of the
// task set maps onto exact-support candidates. O(3^k); callers guard k.
std::int64_t min_partition_cost(const Dense& d, const GroupedCandidates& g) {
  const std::uint64_t full = (std::uint64_t(1) << d.k) - 1;
  std::vector<std::int64_t> group_cost(full + 1, kNoCost);
  for (const auto& [mask, nets] : g.by_support)
    for (std::size_t i : nets) group_cost[mask] = std::min(group_cost[mask], d.cost[i]);

  std::vector<std::int64_t> dp(full + 1, kNoCost);
  dp[0] = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t low = mask & (~mask + 1);
    for (std::uint64_t s = mask; s != 0; s = (s - 1) & mask) {
      if (!(s & low) || group_cost[s] == kNoCost) continue;
      if (dp[mask ^ s] == kNoCost) continue;
      dp[mask] = std::min(dp[mask], dp[mask ^ s] + group_cost[s]);
    }
  }
  return dp[full];
}

}  // namespace

SweepPoint solve_random_mean(const PerformanceTable& table, Budget budget,
                             const RandomMeanConfig& config) {
  require_positive_budget(budget);
  if (config.trials <= 0) throw ValidationError("trials must be positive");
  if (config.max_attempts_per_trial <= 0)
    throw ValidationError("rejection bound must be positive");
  if (table.task_set().size() > 62)
    throw ValidationError("task set too large for partition sampling");

  Dense d = make_dense(table, NetOrder::by_id);
  GroupedCandidates grouped = group_by_support(d);

  if (d.k <= 15) {
    std::int64_t cheapest = min_partition_cost(d, grouped);
    if (cheapest == kNoCost)
      throw NoFeasiblePartition("no partition of the task set maps to candidate networks");
    if (cheapest > budget.msnt) throw BudgetInfeasible(budget.msnt, cheapest);
  }

  PartitionSampler sampler(d.k);

  const std::int64_t block_size = 4096;
  const std::int64_t n_blocks = (config.trials + block_size - 1) / block_size;
  std::vector<double> block_sum(static_cast<std::size_t>(n_blocks), 0.0);
  std::vector<std::uint8_t> block_failed(static_cast<std::size_t>(n_blocks), 0);

  auto run_block = [&](std::int64_t b) {
    std::mt19937_64 rng(splitmix64(config.seed ^ (0x9E3779B97F4A7C15ULL * (std::uint64_t(b) + 1))));
    std::int64_t first = b * block_size;
    std::int64_t last = std::min(config.trials, first + block_size);
    std::vector<int> labels;
    std::vector<std::uint64_t> group_mask;
    std::vector<std::size_t> group_net;
    double sum = 0.0;

    for (std::int64_t trial = first; trial < last; ++trial) {
      bool accepted = false;
      for (std::int64_t attempt = 0; attempt < config.max_attempts_per_trial; ++attempt) {
        sampler.sample(rng, labels);
        int n_groups = 1 + *std::max_element(labels.begin(), labels.end());
        group_mask.assign(static_cast<std::size_t>(n_groups), 0);
        for (std::size_t t = 0; t < d.k; ++t)
          group_mask[static_cast<std::size_t>(labels[t])] |= (std::uint64_t(1) << t);

        group_net.clear();
        std::int64_t cost = 0;
        bool mapped = true;
        for (std::uint64_t mask : group_mask) {
          auto it = grouped.by_support.find(mask);
          if (it == grouped.by_support.end()) {
            mapped = false;
            break;
          }
          const auto& variants = it->second;
          std::size_t pick = variants.size() == 1
                                 ? variants[0]
                                 : variants[std::uniform_int_distribution<std::size_t>(
                                       0, variants.size() - 1)(rng)];
          group_net.push_back(pick);
          cost += d.cost[pick];
        }
        if (!mapped || cost > budget.msnt) continue;

        double total = 0.0;
        for (std::size_t t = 0; t < d.k; ++t)
          total += d.loss[group_net[static_cast<std::size_t>(labels[t])]][t];
        sum += total;
        accepted = true;
        break;
      }
      if (!accepted) {
        block_failed[static_cast<std::size_t>(b)] = 1;
        return;
      }
    }
    block_sum[static_cast<std::size_t>(b)] = sum;
  };

  int threads = std::max(1, config.threads);
  if (threads == 1 || n_blocks == 1) {
    for (std::int64_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1))
          run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::int64_t b = 0; b < n_blocks; ++b) {
    if (block_failed[static_cast<std::size_t>(b)])
      throw NoFeasiblePartition("rejection bound exhausted while sampling feasible partitions");
  }

  double sum = 0.0;
  for (std::int64_t b = 0; b < n_blocks; ++b) sum += block_sum[static_cast<std::size_t>(b)];

  SweepPoint point;
  point.budget = budget;
  point.method = Method::random_mean;
  Solution sol;
  sol.budget_msnt = budget.msnt;
  sol.total_loss = sum / static_cast<double>(config.trials);
  sol.cost_msnt = 0;
  point.solution = std::move(sol);
  point.note = "trials=" + std::to_string(config.trials) + " seed=" + std::to_string(config.seed);
  return point;
}

SweepPoint solve_random_mean(const PerformanceTable& table, Budget budget,
                             std::int64_t trials, std::uint64_t seed) {
  RandomMeanConfig config;
  config.trials = trials;
  config.seed = seed;
  return solve_random_mean(table, budget, config);
}

Solution solve_all_in_one(const PerformanceTable& table, Budget budget) {
  require_positive_budget(budget);
  const std::size_t k = table.task_set().size();
  const CandidateNetwork* pick = nullptr;
  for (const CandidateNetwork& n : table.networks()) {
    if (n.losses.size() != k) continue;
    if (pick == nullptr || n.cost_msnt < pick->cost_msnt ||
        (n.cost_msnt == pick->cost_msnt && n.id < pick->id))
      pick = &n;
  }
  if (pick == nullptr) throw InfeasibleError("no all-task candidate network in the table");
  if (pick->cost_msnt > budget.msnt) throw BudgetInfeasible(budget.msnt, pick->cost_msnt);
  return finalize(table, budget, {pick->id});
}

Solution solve_independent(const PerformanceTable& table, Budget budget) {
  require_positive_budget(budget);
  std::vector<std::string> ids;
  std::int64_t total_cost = 0;
  for (const auto& task : table.task_set().tasks()) {
    const CandidateNetwork* pick = nullptr;
    for (const CandidateNetwork& n : table.networks()) {
      if (n.losses.size() != 1 || !n.solves(task)) continue;
      if (pick == nullptr) {
        pick = &n;
        continue;
      }
      // full-size convention: most expensive singleton, then lowest loss, then id
      if (n.cost_msnt != pick->cost_msnt) {
        if (n.cost_msnt > pick->cost_msnt) pick = &n;
      } else if (n.loss_on(task) != pick->loss_on(task)) {
        if (n.loss_on(task) < pick->loss_on(task)) pick = &n;
      } else if (n.id < pick->id) {
        pick = &n;
      }
    }
    if (pick == nullptr)
      throw InfeasibleError("no single-task candidate network for task " + task);
    ids.push_back(pick->id);
    total_cost += pick->cost_msnt;
  }
  if (total_cost > budget.msnt) throw BudgetInfeasible(budget.msnt, total_cost);
  return finalize(table, budget, ids);
}

std::vector<SweepPoint> sweep(const PerformanceTable& table, Budget from, Budget to,
                              std::int64_t step_msnt, const std::vector<Method>& methods,
                              const SweepConfig& config) {
  require_positive_budget(from);
  if (step_msnt <= 0) throw ValidationError("sweep step must be positive");
  if (from.msnt > to.msnt) throw ValidationError("sweep range is empty (from > to)");
  if (methods.empty()) throw ValidationError("no sweep methods given");

  std::vector<SweepPoint> points;
  for (std::int64_t b = from.msnt; b <= to.msnt; b += step_msnt) {
    Budget budget{b};
    for (Method method : methods) {
      SweepPoint point;
      point.budget = budget;
      point.method = method;
      try {
        switch (method) {
          case Method::optimal:
            point.solution = solve_optimal(table, budget);
            break;
          case Method::pessimal:
            point.solution = solve_pessimal(table, budget);
            break;
          case Method::random_mean: {
            RandomMeanConfig rc;
            rc.trials = config.trials;
            rc.seed = splitmix64(config.seed ^ static_cast<std::uint64_t>(b));
            rc.threads = config.threads;
            point = solve_random_mean(table, budget, rc);
            break;
          }
          case Method::all_in_one:
            point.solution = solve_all_in_one(table, budget);
            break;
          case Method::independent:
            point.solution = solve_independent(table, budget);
            break;
        }
      } catch (const InfeasibleError& e) {
        point.solution.reset();
        point.note = e.what();
      }
      points.push_back(std::move(point));
    }
  }
  return points;
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::optimal: return "optimal";
    case Method::pessimal: return "pessimal";
    case Method::random_mean: return "random_mean";
    case Method::all_in_one: return "all_in_one";
    case Method::independent: return "independent";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "optimal") return Method::optimal;
  if (name == "pessimal") return Method::pessimal;
  if (name == "random" || name == "random_mean") return Method::random_mean;
  if (name == "all_in_one") return Method::all_in_one;
  if (name == "independent") return Method::independent;
  throw ValidationError("unknown method: " + std::string(name));
}

}  // namespace taskgroup
