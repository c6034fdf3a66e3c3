#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "taskgroup/model.hpp"

namespace testutil {

struct NetSpec {
  std::string id;
  std::int64_t cost;
  std::map<std::string, double> losses;
};

inline taskgroup::PerformanceTable make_table(std::vector<std::string> tasks,
                                              const std::vector<NetSpec>& specs) {
  std::vector<taskgroup::CandidateNetwork> nets;
  for (const auto& s : specs) {
    taskgroup::CandidateNetwork n;
    n.id = s.id;
    n.cost_msnt = s.cost;
    n.losses = s.losses;
    nets.push_back(std::move(n));
  }
  return taskgroup::PerformanceTable(taskgroup::TaskSet(std::move(tasks)), std::move(nets));
}

// Random instance in the style used throughout the solver checks: `k` tasks,
// candidate count in [min_nets, max_nets], costs from {500, 1000} mSNT,
// losses uniform on (0,1). Regenerated until every task is covered.
inline taskgroup::PerformanceTable random_instance(std::uint64_t seed, std::size_t k = 5,
                                                   std::size_t min_nets = 8,
                                                   std::size_t max_nets = 16) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<std::string> tasks;
  for (std::size_t t = 0; t < k; ++t) tasks.push_back(std::string(1, char('a' + t)));

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::size_t m = min_nets + rng() % (max_nets - min_nets + 1);
    std::vector<taskgroup::CandidateNetwork> nets;
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < m; ++i) {
      std::uint64_t mask = 1 + rng() % ((std::uint64_t(1) << k) - 1);
      taskgroup::CandidateNetwork n;
      char buf[32];
      std::snprintf(buf, sizeof(buf), "c%02u", static_cast<unsigned>(i));
      n.id = buf;
      n.cost_msnt = (rng() % 2 == 0) ? 500 : 1000;
      for (std::size_t t = 0; t < k; ++t)
        if (mask & (std::uint64_t(1) << t)) n.losses[tasks[t]] = uniform(rng);
      covered |= mask;
      nets.push_back(std::move(n));
    }
    if (covered == (std::uint64_t(1) << k) - 1)
      return taskgroup::PerformanceTable(taskgroup::TaskSet(tasks), std::move(nets));
  }
  throw std::logic_error("random_instance failed to cover all tasks");
}

inline taskgroup::TaskSet paper_tasks() {
  return taskgroup::TaskSet({"s", "d", "n", "k", "e"});
}

// Independent reference for the random-partition baseline: exact expectation
// over all set partitions, each mapped to its exact-support candidates with
// uniform variant choices, conditioned on cost <= budget. Only sensible for
// small task sets (Bell-number blowup).
inline double exhaustive_partition_expectation(const taskgroup::PerformanceTable& table,
                                               std::int64_t budget) {
  const auto& tasks = table.task_set().tasks();
  const std::size_t k = tasks.size();
  double weighted_loss = 0.0, weight_total = 0.0;

  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::size_t)> recurse = [&](std::size_t next) {
    if (next < k) {
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i].push_back(next);
        recurse(next + 1);
        blocks[i].pop_back();
      }
      blocks.push_back({next});
      recurse(next + 1);
      blocks.pop_back();
      return;
    }
    // candidates per block: exact-support matches
    std::vector<std::vector<const taskgroup::CandidateNetwork*>> options;
    for (const auto& block : blocks) {
      std::vector<const taskgroup::CandidateNetwork*> variants;
      for (const auto& n : table.networks()) {
        if (n.losses.size() != block.size()) continue;
        bool match = true;
        for (std::size_t t : block)
          if (!n.solves(tasks[t])) { match = false; break; }
        if (match) variants.push_back(&n);
      }
      if (variants.empty()) return;  // partition not representable
      options.push_back(std::move(variants));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      double w = 1.0;
      std::int64_t cost = 0;
      for (std::size_t b = 0; b < options.size(); ++b) {
        w /= static_cast<double>(options[b].size());
        cost += options[b][pick[b]]->cost_msnt;
      }
      if (cost <= budget) {
        double loss = 0.0;
        for (std::size_t b = 0; b < blocks.size(); ++b)
          for (std::size_t t : blocks[b]) loss += options[b][pick[b]]->loss_on(tasks[t]);
        weighted_loss += w * loss;
        weight_total += w;
      }
      std::size_t b = 0;
      while (b < pick.size() && ++pick[b] == options[b].size()) pick[b++] = 0;
      if (b == pick.size()) break;
    }
  };
  recurse(0);
  if (weight_total == 0.0) throw std::logic_error("no feasible partition in the reference");
  return weighted_loss / weight_total;
}

}  // namespace testutil
