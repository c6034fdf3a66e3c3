#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taskgroup/model.hpp"

namespace taskgroup {

struct DirectedEntry {
  std::string trained_with;
  std::string performance_on;
  double value = 0.0;
};

/// Directed |T|x|T| matrix of relative-performance percentages: entry
/// (trained_with, performance_on) is the percentage change on the second task
/// when co-trained with the first, relative to training it alone. Diagonal
/// entries do not exist.
class PairwiseRelationMatrix {
 public:
  explicit PairwiseRelationMatrix(TaskSet task_set, std::string label = "");

  void set(const std::string& trained_with, const std::string& performance_on, double value);
  bool has(const std::string& trained_with, const std::string& performance_on) const;
  double at(const std::string& trained_with, const std::string& performance_on) const;

  bool complete() const;
  std::size_t entry_count() const { return values_.size(); }
  const TaskSet& task_set() const { return task_set_; }
  const std::string& label() const { return label_; }

  /// Entries in canonical row-major order (requires a complete matrix).
  std::vector<DirectedEntry> entries() const;
  std::vector<double> directed_values() const;

 private:
  TaskSet task_set_;
  std::string label_;
  std::map<std::pair<std::size_t, std::size_t>, double> values_;
};

struct PairEntry {
  std::string task_a;
  std::string task_b;
  double value = 0.0;
};

/// Symmetric task-pair affinities: one value per unordered pair.
class AffinityMatrix {
 public:
  explicit AffinityMatrix(TaskSet task_set, std::string label = "");

  void set(const std::string& task_a, const std::string& task_b, double value);
  bool has(const std::string& task_a, const std::string& task_b) const;
  double at(const std::string& task_a, const std::string& task_b) const;

  bool complete() const;
  std::size_t entry_count() const { return values_.size(); }
  const TaskSet& task_set() const { return task_set_; }
  const std::string& label() const { return label_; }

  std::vector<PairEntry> entries() const;  // canonical pair order, complete required
  std::vector<double> pair_values() const;

 private:
  TaskSet task_set_;
  std::string label_;
  std::map<std::pair<std::size_t, std::size_t>, double> values_;
};

/// Percentage improvement of an observed loss against a reference loss:
/// 100 * (reference - observed) / reference. Positive means the observed
/// model beats the reference.
double relative_performance(double observed_loss, double reference_loss);

/// Same formula applied to solution totals.
double relative_total_performance(double mtl_solution_loss, double reference_loss);

/// Affinity between each pair as the mean of the two directed entries,
/// i.e. the average of the matrix and its transpose.
AffinityMatrix symmetrize(const PairwiseRelationMatrix& matrix);

struct Correlation {
  double r = 0.0;
  double p = 1.0;
  std::size_t n = 0;
};

/// Sample Pearson correlation with a two-sided p-value from the t
/// distribution with n-2 degrees of freedom.
Correlation pearson(std::span<const double> x, std::span<const double> y);

/// Pearson over the 2*C(k,2) directed off-diagonal entries, paired by
/// (trained_with, performance_on). Both matrices must be complete and share
/// the same tasks.
Correlation correlate_directed(const PairwiseRelationMatrix& a, const PairwiseRelationMatrix& b);

/// Pearson over the C(k,2) unordered pairs, paired by pair key.
Correlation correlate_symmetric(const AffinityMatrix& a, const AffinityMatrix& b);

struct TaskEffect {
  std::string task;
  double as_helper_mean = 0.0;  // mean of the task's row: its effect on others
  double as_helped_mean = 0.0;  // mean of the task's column: others' effect on it
};

/// Row and column means per task, matching the printed table margins.
/// Requires a complete matrix.
std::vector<TaskEffect> row_effect_summary(const PairwiseRelationMatrix& matrix);

}  // namespace taskgroup
