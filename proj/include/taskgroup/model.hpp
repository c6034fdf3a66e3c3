#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "taskgroup/errors.hpp"

namespace taskgroup {

/// Ordered collection of unique task identifiers. The order is fixed at
/// construction and used for all matrix indexing and canonical output.
class TaskSet {
 public:
  explicit TaskSet(std::vector<std::string> tasks);

  const std::vector<std::string>& tasks() const { return tasks_; }
  std::size_t size() const { return tasks_.size(); }
  bool contains(std::string_view task) const;
  std::size_t index_of(std::string_view task) const;  // throws UnknownTask

  bool operator==(const TaskSet& other) const { return tasks_ == other.tasks_; }
  bool operator!=(const TaskSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> tasks_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// One trained-or-predicted predictor. A task absent from `losses` is a task
/// this network does not attempt to solve; absence is the representation,
/// no infinities are ever stored.
struct CandidateNetwork {
  std::string id;
  std::int64_t cost_msnt = 0;               // 1000 mSNT = 1 SNT
  std::map<std::string, double> losses;     // task id -> loss, partial
  bool predicted = false;                   // true for estimated entries

  bool solves(std::string_view task) const;
  const double* find_loss(std::string_view task) const;  // nullptr if absent
  double loss_on(std::string_view task) const;           // throws UnknownTask
  std::vector<std::string> support(const TaskSet& task_set) const;  // tasks solved, in task-set order
};

/// Immutable collection of candidate networks over one task set. Construction
/// validates the instance: unique ids, known tasks, finite non-negative
/// losses, positive costs, and every task solvable by at least one network.
class PerformanceTable {
 public:
  PerformanceTable(TaskSet task_set, std::vector<CandidateNetwork> networks);

  const TaskSet& task_set() const { return task_set_; }
  std::span<const CandidateNetwork> networks() const { return networks_; }
  std::size_t size() const { return networks_.size(); }

  const CandidateNetwork* find(std::string_view id) const;
  const CandidateNetwork& network(std::string_view id) const;  // throws UnknownNetworkId

 private:
  TaskSet task_set_;
  std::vector<CandidateNetwork> networks_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

struct PerTaskScore {
  std::string task;
  std::string network_id;  // argmin network, ties broken by smallest id
  double loss = 0.0;
};

/// A covering subset of candidates with its derived arithmetic. Per-task loss
/// is the minimum over member networks; total loss sums the per-task values
/// in task-set order.
struct Solution {
  std::vector<std::string> network_ids;  // sorted ascending
  std::int64_t budget_msnt = 0;          // budget this was solved for
  std::vector<PerTaskScore> per_task;    // task-set order
  double total_loss = 0.0;
  std::int64_t cost_msnt = 0;
};

/// Scores a candidate subset. Fails with UncoveredTask if the ids leave a
/// task without a finite loss; duplicate ids are collapsed.
Solution evaluate(const PerformanceTable& table, const std::vector<std::string>& ids);

/// Drops every member that wins no task. The result has identical per-task
/// winners and total loss, and at most |task_set| members.
std::vector<std::string> prune_dominated(const PerformanceTable& table,
                                         const std::vector<std::string>& ids);

struct CandidateTemplate {
  std::vector<std::string> tasks;  // task-set order
  std::int64_t cost_msnt = 0;
};

/// All 2^k - 1 full-cost task subsets plus k half-cost singletons, in
/// size-major order. For five tasks this is 36 templates.
std::vector<CandidateTemplate> generate_candidate_ids(const TaskSet& task_set,
                                                      std::int64_t full_cost_msnt,
                                                      std::int64_t half_cost_msnt);

/// Canonical candidate id: member tasks joined in task-set order, then "@",
/// then the cost in mSNT (e.g. "dnk@1000"). Multi-character task ids are
/// joined with '+' to keep the id unambiguous.
std::string canonical_id(const TaskSet& task_set, const std::vector<std::string>& tasks,
                         std::int64_t cost_msnt);

/// Full template instance with losses drawn uniformly from (0,1), seeded.
PerformanceTable synthetic_template_table(const TaskSet& task_set,
                                          std::int64_t full_cost_msnt,
                                          std::int64_t half_cost_msnt,
                                          std::uint64_t seed);

}  // namespace taskgroup
