#include "taskgroup/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace taskgroup {

TaskSet::TaskSet(std::vector<std::string> tasks) : tasks_(std::move(tasks)) {
  if (tasks_.empty()) throw ValidationError("task set must not be empty");
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    if (tasks_[i].empty()) throw ValidationError("task identifiers must not be empty");
    if (!index_.emplace(tasks_[i], i).second)
      throw ValidationError("duplicate task identifier: " + tasks_[i]);
  }
}

bool TaskSet::contains(std::string_view task) const {
  return index_.find(task) != index_.end();
}

std::size_t TaskSet::index_of(std::string_view task) const {
  auto it = index_.find(task);
  if (it == index_.end()) throw UnknownTask(std::string(task));
  return it->second;
}

bool CandidateNetwork::solves(std::string_view task) const {
  return losses.find(std::string(task)) != losses.end();
}

const double* CandidateNetwork::find_loss(std::string_view task) const {
  auto it = losses.find(std::string(task));
  return it == losses.end() ? nullptr : &it->second;
}

double CandidateNetwork::loss_on(std::string_view task) const {
  const double* v = find_loss(task);
  if (v == nullptr) throw UnknownTask(std::string(task));
  return *v;
}

std::vector<std::string> CandidateNetwork::support(const TaskSet& task_set) const {
  std::vector<std::string> out;
  for (const auto& task : task_set.tasks())
    if (solves(task)) out.push_back(task);
  return out;
}

PerformanceTable::PerformanceTable(TaskSet task_set, std::vector<CandidateNetwork> networks)
    : task_set_(std::move(task_set)), networks_(std::move(networks)) {
  for (std::size_t i = 0; i < networks_.size(); ++i) {
    const CandidateNetwork& n = networks_[i];
    if (n.id.empty()) throw ValidationError("network id must not be empty");
    if (!by_id_.emplace(n.id, i).second)
      throw ValidationError("duplicate network id: " + n.id);
    if (n.cost_msnt <= 0)
      throw ValidationError("network " + n.id + " has non-positive cost");
    if (n.losses.empty())
      throw ValidationError("network " + n.id + " solves no task");
    for (const auto& [task, loss] : n.losses) {
      if (!task_set_.contains(task))
        throw UnknownTask(task + " (in network " + n.id + ")");
      if (!std::isfinite(loss) || loss < 0.0)
        throw ValidationError("network " + n.id + " has invalid loss on task " + task);
    }
  }
  for (const auto& task : task_set_.tasks()) {
    bool solvable = std::any_of(networks_.begin(), networks_.end(),
                                [&](const CandidateNetwork& n) { return n.solves(task); });
    if (!solvable)
      throw ValidationError("unsolvable instance: no network solves task " + task);
  }
}

const CandidateNetwork* PerformanceTable::find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &networks_[it->second];
}

const CandidateNetwork& PerformanceTable::network(std::string_view id) const {
  const CandidateNetwork* n = find(id);
  if (n == nullptr) throw UnknownNetworkId(std::string(id));
  return *n;
}

Solution evaluate(const PerformanceTable& table, const std::vector<std::string>& ids) {
  std::vector<const CandidateNetwork*> members;
  {
    std::set<std::string> seen;
    for (const auto& id : ids) {
      const CandidateNetwork& n = table.network(id);
      if (seen.insert(n.id).second) members.push_back(&n);
    }
  }
  // Iterate members in id order so an argmin tie resolves to the smallest id.
  std::sort(members.begin(), members.end(),
            [](const CandidateNetwork* a, const CandidateNetwork* b) { return a->id < b->id; });

  Solution sol;
  for (const CandidateNetwork* m : members) {
    sol.network_ids.push_back(m->id);
    sol.cost_msnt += m->cost_msnt;
  }

  double total = 0.0;
  for (const auto& task : table.task_set().tasks()) {
    const CandidateNetwork* winner = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const CandidateNetwork* m : members) {
      const double* loss = m->find_loss(task);
      if (loss != nullptr && *loss < best) {
        best = *loss;
        winner = m;
      }
    }
    if (winner == nullptr) throw UncoveredTask(task);
    sol.per_task.push_back({task, winner->id, best});
    total += best;
  }
  sol.total_loss = total;
  sol.budget_msnt = sol.cost_msnt;
  return sol;
}

std::vector<std::string> prune_dominated(const PerformanceTable& table,
                                         const std::vector<std::string>& ids) {
  Solution sol = evaluate(table, ids);
  std::set<std::string> winners;
  for (const auto& score : sol.per_task) winners.insert(score.network_id);
  return {winners.begin(), winners.end()};
}

namespace {

void emit_combinations(const TaskSet& task_set, std::size_t size, std::int64_t cost,
                       std::vector<CandidateTemplate>& out) {
  const std::size_t k = task_set.size();
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    CandidateTemplate t;
    t.cost_msnt = cost;
    for (std::size_t i : pick) t.tasks.push_back(task_set.tasks()[i]);
    out.push_back(std::move(t));
    // advance to the next combination in lexicographic index order
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == k - size + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<CandidateTemplate> generate_candidate_ids(const TaskSet& task_set,
                                                      std::int64_t full_cost_msnt,
                                                      std::int64_t half_cost_msnt) {
  if (full_cost_msnt <= 0 || half_cost_msnt <= 0)
    throw ValidationError("template costs must be positive");
  const std::size_t k = task_set.size();
  if (k > 20) throw ValidationError("task set too large for exhaustive template enumeration");

  std::vector<CandidateTemplate> out;
  for (std::size_t size = 1; size <= k; ++size)
    emit_combinations(task_set, size, full_cost_msnt, out);
  for (const auto& task : task_set.tasks())
    out.push_back({{task}, half_cost_msnt});
  return out;
}

std::string canonical_id(const TaskSet& task_set, const std::vector<std::string>& tasks,
                         std::int64_t cost_msnt) {
  std::vector<std::size_t> idx;
  for (const auto& t : tasks) idx.push_back(task_set.index_of(t));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw ValidationError("duplicate task in candidate id");

  bool multi_char = std::any_of(task_set.tasks().begin(), task_set.tasks().end(),
                                [](const std::string& t) { return t.size() > 1; });
  std::string id;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (multi_char && i > 0) id += '+';
    id += task_set.tasks()[idx[i]];
  }
  id += '@';
  id += std::to_string(cost_msnt);
  return id;
}

PerformanceTable synthetic_template_table(const TaskSet& task_set,
                                          std::int64_t full_cost_msnt,
                                          std::int64_t half_cost_msnt,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<CandidateNetwork> nets;
  for (const auto& tmpl : generate_candidate_ids(task_set, full_cost_msnt, half_cost_msnt)) {
    CandidateNetwork n;
    n.id = canonical_id(task_set, tmpl.tasks, tmpl.cost_msnt);
    n.cost_msnt = tmpl.cost_msnt;
    for (const auto& task : tmpl.tasks) n.losses[task] = uniform(rng);
    nets.push_back(std::move(n));
  }
  return PerformanceTable(task_set, std::move(nets));
}

}  // namespace taskgroup
