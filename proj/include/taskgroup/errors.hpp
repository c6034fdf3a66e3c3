#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taskgroup {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, unknown identifiers, contract violations.
// The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The instance admits no solution under the given constraints.
// The CLI maps these to exit code 1.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnknownTask : public ValidationError {
 public:
  explicit UnknownTask(const std::string& task)
      : ValidationError("unknown task: " + task), task_(task) {}
  const std::string& task() const { return task_; }

 private:
  std::string task_;
};

class UnknownNetworkId : public ValidationError {
 public:
  explicit UnknownNetworkId(const std::string& id)
      : ValidationError("unknown network id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class UncoveredTask : public ValidationError {
 public:
  explicit UncoveredTask(const std::string& task)
      : ValidationError("no selected network solves task: " + task), task_(task) {}
  const std::string& task() const { return task_; }

 private:
  std::string task_;
};

class TooManyCandidates : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MissingPairNetwork : public ValidationError {
 public:
  MissingPairNetwork(const std::string& task_a, const std::string& task_b)
      : ValidationError("no pair network trained on {" + task_a + ", " + task_b + "}") {}
};

class TableMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonPositiveReference : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LengthMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZeroVariance : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MissingDirectedEntry : public ValidationError {
 public:
  MissingDirectedEntry(const std::string& trained_with, const std::string& performance_on)
      : ValidationError("missing directed entry (" + trained_with + " -> " + performance_on + ")") {}
};

class UnknownFixture : public ValidationError {
 public:
  explicit UnknownFixture(const std::string& name)
      : ValidationError("unknown fixture: " + name) {}
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& location, const std::string& reason)
      : ValidationError("parse error at " + location + ": " + reason),
        location_(location),
        reason_(reason) {}
  const std::string& location() const { return location_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string location_;
  std::string reason_;
};

// min_required_cost_msnt is the cheapest covering cost when it could be
// computed exactly, -1 otherwise.
class BudgetInfeasible : public InfeasibleError {
 public:
  BudgetInfeasible(std::int64_t budget_msnt, std::int64_t min_required_cost_msnt)
      : InfeasibleError("budget " + std::to_string(budget_msnt) +
                        " mSNT infeasible; cheapest cover costs " +
                        (min_required_cost_msnt < 0
                             ? std::string("more")
                             : std::to_string(min_required_cost_msnt) + " mSNT")),
        min_required_cost_msnt_(min_required_cost_msnt) {}
  std::int64_t min_required_cost_msnt() const { return min_required_cost_msnt_; }

 private:
  std::int64_t min_required_cost_msnt_;
};

class NoFeasiblePartition : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

}  // namespace taskgroup
