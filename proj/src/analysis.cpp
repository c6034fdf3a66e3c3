#include "taskgroup/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "taskgroup/stats.hpp"

namespace taskgroup {

PairwiseRelationMatrix::PairwiseRelationMatrix(TaskSet task_set, std::string label)
    : task_set_(std::move(task_set)), label_(std::move(label)) {}

void PairwiseRelationMatrix::set(const std::string& trained_with,
                                 const std::string& performance_on, double value) {
  std::size_t row = task_set_.index_of(trained_with);
  std::size_t col = task_set_.index_of(performance_on);
  if (row == col)
    throw ValidationError("diagonal entry not allowed: " + trained_with);
  if (!std::isfinite(value))
    throw ValidationError("matrix entries must be finite");
  if (!values_.emplace(std::make_pair(row, col), value).second)
    throw ValidationError("duplicate entry (" + trained_with + " -> " + performance_on + ")");
}

bool PairwiseRelationMatrix::has(const std::string& trained_with,
                                 const std::string& performance_on) const {
  return values_.count({task_set_.index_of(trained_with), task_set_.index_of(performance_on)}) > 0;
}

double PairwiseRelationMatrix::at(const std::string& trained_with,
                                  const std::string& performance_on) const {
  auto it = values_.find({task_set_.index_of(trained_with), task_set_.index_of(performance_on)});
  if (it == values_.end()) throw MissingDirectedEntry(trained_with, performance_on);
  return it->second;
}

bool PairwiseRelationMatrix::complete() const {
  return values_.size() == task_set_.size() * (task_set_.size() - 1);
}

std::vector<DirectedEntry> PairwiseRelationMatrix::entries() const {
  if (!complete()) throw ValidationError("matrix is incomplete");
  std::vector<DirectedEntry> out;
  const auto& tasks = task_set_.tasks();
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (std::size_t j = 0; j < tasks.size(); ++j)
      if (i != j) out.push_back({tasks[i], tasks[j], values_.at({i, j})});
  return out;
}

std::vector<double> PairwiseRelationMatrix::directed_values() const {
  std::vector<double> out;
  for (const auto& e : entries()) out.push_back(e.value);
  return out;
}

AffinityMatrix::AffinityMatrix(TaskSet task_set, std::string label)
    : task_set_(std::move(task_set)), label_(std::move(label)) {}

void AffinityMatrix::set(const std::string& task_a, const std::string& task_b, double value) {
  std::size_t i = task_set_.index_of(task_a);
  std::size_t j = task_set_.index_of(task_b);
  if (i == j) throw ValidationError("affinity of a task with itself not allowed: " + task_a);
  if (i > j) std::swap(i, j);
  if (!std::isfinite(value)) throw ValidationError("matrix entries must be finite");
  if (!values_.emplace(std::make_pair(i, j), value).second)
    throw ValidationError("duplicate pair entry (" + task_a + ", " + task_b + ")");
}

bool AffinityMatrix::has(const std::string& task_a, const std::string& task_b) const {
  std::size_t i = task_set_.index_of(task_a);
  std::size_t j = task_set_.index_of(task_b);
  if (i > j) std::swap(i, j);
  return values_.count({i, j}) > 0;
}

double AffinityMatrix::at(const std::string& task_a, const std::string& task_b) const {
  std::size_t i = task_set_.index_of(task_a);
  std::size_t j = task_set_.index_of(task_b);
  if (i > j) std::swap(i, j);
  auto it = values_.find({i, j});
  if (it == values_.end()) throw MissingDirectedEntry(task_a, task_b);
  return it->second;
}

bool AffinityMatrix::complete() const {
  return values_.size() == task_set_.size() * (task_set_.size() - 1) / 2;
}

std::vector<PairEntry> AffinityMatrix::entries() const {
  if (!complete()) throw ValidationError("affinity matrix is incomplete");
  std::vector<PairEntry> out;
  const auto& tasks = task_set_.tasks();
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (std::size_t j = i + 1; j < tasks.size(); ++j)
      out.push_back({tasks[i], tasks[j], values_.at({i, j})});
  return out;
}

std::vector<double> AffinityMatrix::pair_values() const {
  std::vector<double> out;
  for (const auto& e : entries()) out.push_back(e.value);
  return out;
}

double relative_performance(double observed_loss, double reference_loss) {
  if (!std::isfinite(reference_loss) || reference_loss <= 0.0)
    throw NonPositiveReference("reference loss must be positive and finite");
  if (!std::isfinite(observed_loss))
    throw ValidationError("observed loss must be finite");
  return 100.0 * (reference_loss - observed_loss) / reference_loss;
}

double relative_total_performance(double mtl_solution_loss, double reference_loss) {
  return relative_performance(mtl_solution_loss, reference_loss);
}

AffinityMatrix symmetrize(const PairwiseRelationMatrix& matrix) {
  AffinityMatrix out(matrix.task_set(), matrix.label());
  const auto& tasks = matrix.task_set().tasks();
  for (std::size_t i = 0; i < tasks.size(); ++i)
    for (std::size_t j = i + 1; j < tasks.size(); ++j)
      out.set(tasks[i], tasks[j], (matrix.at(tasks[i], tasks[j]) + matrix.at(tasks[j], tasks[i])) / 2.0);
  return out;
}

Correlation pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw LengthMismatch("vectors have different lengths: " + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()));
  const std::size_t n = x.size();
  if (n < 3) throw ValidationError("correlation requires at least 3 samples");

  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
  };
  if (constant(x) || constant(y)) throw ZeroVariance("input vector has zero variance");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mean_x;
    double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw ZeroVariance("input vector has zero variance");

  double r = sxy / std::sqrt(sxx * syy);
  r = std::clamp(r, -1.0, 1.0);
  return {r, pearson_two_sided_pvalue(r, n), n};
}

namespace {

void require_same_tasks(const TaskSet& a, const TaskSet& b) {
  if (a.size() != b.size())
    throw TableMismatch("matrices cover different task sets");
  for (const auto& task : a.tasks())
    if (!b.contains(task)) throw TableMismatch("matrices cover different task sets");
}

}  // namespace

Correlation correlate_directed(const PairwiseRelationMatrix& a, const PairwiseRelationMatrix& b) {
  require_same_tasks(a.task_set(), b.task_set());
  std::vector<double> xs, ys;
  for (const auto& e : a.entries()) {
    xs.push_back(e.value);
    ys.push_back(b.at(e.trained_with, e.performance_on));
  }
  return pearson(xs, ys);
}

Correlation correlate_symmetric(const AffinityMatrix& a, const AffinityMatrix& b) {
  require_same_tasks(a.task_set(), b.task_set());
  std::vector<double> xs, ys;
  for (const auto& e : a.entries()) {
    xs.push_back(e.value);
    ys.push_back(b.at(e.task_a, e.task_b));
  }
  return pearson(xs, ys);
}

std::vector<TaskEffect> row_effect_summary(const PairwiseRelationMatrix& matrix) {
  if (!matrix.complete()) throw ValidationError("matrix is incomplete");
  const auto& tasks = matrix.task_set().tasks();
  const double denom = static_cast<double>(tasks.size() - 1);
  std::vector<TaskEffect> out;
  for (const auto& task : tasks) {
    TaskEffect effect;
    effect.task = task;
    double row = 0.0, col = 0.0;
    for (const auto& other : tasks) {
      if (other == task) continue;
      row += matrix.at(task, other);
      col += matrix.at(other, task);
    }
    effect.as_helper_mean = row / denom;
    effect.as_helped_mean = col / denom;
    out.push_back(std::move(effect));
  }
  return out;
}

}  // namespace taskgroup
