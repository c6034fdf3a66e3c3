#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "taskgroup/approx.hpp"
#include "taskgroup/fixtures.hpp"
#include "taskgroup/solver.hpp"
#include "taskgroup/table_io.hpp"

namespace taskgroup::cli {

namespace {

// Fixed output precision, so downstream scripts stay stable: losses and
// means 6 decimals, percentages 2, correlation statistics 4, SNT amounts 3.
std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(text);
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

int default_threads() {
  const char* env = std::getenv("TASKGROUP_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1 || v > 4096)
    throw ValidationError("bad TASKGROUP_THREADS value");
  return static_cast<int>(v);
}

Matrix load_matrix_arg(const std::string& spec) {
  constexpr std::string_view prefix = "fixtures:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string name = spec.substr(prefix.size());
    Fixture f = load_fixture(name);
    if (auto* m = std::get_if<PairwiseRelationMatrix>(&f)) return *m;
    return std::get<AffinityMatrix>(f);
  }
  return load_matrix_file(spec);
}

struct SolutionPrinter {
  std::ostream& out;
  bool machine;

  void print(const Solution& sol, const std::string& heading) const {
    if (machine) {
      out << "budget_snt\t" << format_msnt_as_snt(sol.budget_msnt) << "\n";
      out << "total_loss\t" << fixed(sol.total_loss, 6) << "\n";
      out << "cost_snt\t" << format_msnt_as_snt(sol.cost_msnt) << "\n";
      out << "networks\t" << join(sol.network_ids, ",") << "\n";
      for (const auto& score : sol.per_task)
        out << "task\t" << score.task << "\t" << score.network_id << "\t"
            << fixed(score.loss, 6) << "\n";
      return;
    }
    out << heading << " (budget " << format_msnt_as_snt(sol.budget_msnt) << " SNT)\n";
    out << "  total loss  " << fixed(sol.total_loss, 6) << "\n";
    out << "  cost        " << format_msnt_as_snt(sol.cost_msnt) << " SNT\n";
    out << "  networks    " << join(sol.network_ids, ", ") << "\n";
    for (const auto& score : sol.per_task)
      out << "    " << score.task << " <- " << score.network_id << "  (loss "
          << fixed(score.loss, 6) << ")\n";
  }
};

void print_sweep(std::ostream& out, const std::vector<SweepPoint>& points, bool machine) {
  if (machine)
    out << "budget_snt\tmethod\tstatus\ttotal_loss\tcost_snt\tnetworks\n";
  else
    out << "budget  method       status      total_loss  cost   networks\n";
  for (const auto& p : points) {
    std::string budget = format_msnt_as_snt(p.budget.msnt);
    std::string method(to_string(p.method));
    std::string status = p.solution ? "ok" : "infeasible";
    std::string loss = p.solution ? fixed(p.solution->total_loss, 6) : "-";
    bool has_cost = p.solution && p.method != Method::random_mean;
    std::string cost = has_cost ? format_msnt_as_snt(p.solution->cost_msnt) : "-";
    std::string ids = has_cost ? join(p.solution->network_ids, ",") : "-";
    if (machine) {
      out << budget << "\t" << method << "\t" << status << "\t" << loss << "\t" << cost
          << "\t" << ids << "\n";
    } else {
      char line[160];
      std::snprintf(line, sizeof(line), "%-7s %-12s %-11s %-11s %-6s %s", budget.c_str(),
                    method.c_str(), status.c_str(), loss.c_str(), cost.c_str(), ids.c_str());
      out << line << "\n";
    }
  }
}

void print_correlation(std::ostream& out, const Correlation& c, const std::string& mode,
                       bool machine) {
  if (machine) {
    out << "mode\t" << mode << "\n";
    out << "n\t" << c.n << "\n";
    out << "r\t" << fixed(c.r, 4) << "\n";
    out << "p\t" << fixed(c.p, 4) << "\n";
  } else {
    out << "r = " << fixed(c.r, 4) << "  (n = " << c.n << ", two-sided p = " << fixed(c.p, 4)
        << ", " << mode << " pairing)\n";
  }
}

struct CommonOpts {
  std::string format = "human";
  bool machine() const { return format == "machine"; }
};

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Budgeted task-grouping solver toolkit"};
  app.require_subcommand(1);

  // ---- solve ----------------------------------------------------------
  struct {
    std::string table, budget;
    CommonOpts common;
  } solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Exact selection for one budget");
  solve_cmd->add_option("--table", solve_opts.table, "Performance table (JSON)")->required();
  solve_cmd->add_option("--budget", solve_opts.budget, "Budget in SNT, e.g. 2.5")->required();
  add_format_flag(solve_cmd, solve_opts.common);
  solve_cmd->callback([&] {
    PerformanceTable table = load_table_file(solve_opts.table);
    Solution sol = solve_optimal(table, Budget{parse_snt_to_msnt(solve_opts.budget)});
    SolutionPrinter{out, solve_opts.common.machine()}.print(sol, "optimal solution");
  });

  // ---- oracle ---------------------------------------------------------
  struct {
    std::string table, budget;
    CommonOpts common;
  } oracle_opts;
  int oracle_status = 0;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Certify the search against exhaustive enumeration");
  oracle_cmd->add_option("--table", oracle_opts.table, "Performance table (JSON)")->required();
  oracle_cmd->add_option("--budget", oracle_opts.budget, "Budget in SNT")->required();
  add_format_flag(oracle_cmd, oracle_opts.common);
  oracle_cmd->callback([&] {
    PerformanceTable table = load_table_file(oracle_opts.table);
    Budget budget{parse_snt_to_msnt(oracle_opts.budget)};
    Solution fast = solve_optimal(table, budget);
    Solution slow = solve_oracle(table, budget);
    bool same = fast.total_loss == slow.total_loss && fast.network_ids == slow.network_ids;
    bool machine = oracle_opts.common.machine();
    for (const auto& [name, sol] :
         {std::pair<const char*, const Solution*>{"branch_and_bound", &fast},
          {"exhaustive", &slow}}) {
      if (machine)
        out << name << "\t" << fixed(sol->total_loss, 6) << "\t"
            << format_msnt_as_snt(sol->cost_msnt) << "\t" << join(sol->network_ids, ",") << "\n";
      else
        out << name << ": loss " << fixed(sol->total_loss, 6) << ", cost "
            << format_msnt_as_snt(sol->cost_msnt) << " SNT, networks "
            << join(sol->network_ids, ", ") << "\n";
    }
    if (machine)
      out << "certified\t" << (same ? "true" : "false") << "\n";
    else
      out << (same ? "certified: both searches agree" : "MISMATCH between the two searches")
          << "\n";
    if (!same) oracle_status = 3;
  });

  // ---- sweep ----------------------------------------------------------
  struct {
    std::string table, from, to, step = "0.5", methods = "optimal";
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    int threads = 0;
    CommonOpts common;
  } sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Budget sweep producing trade-off curve data");
  sweep_cmd->add_option("--table", sweep_opts.table, "Performance table (JSON)")->required();
  sweep_cmd->add_option("--from", sweep_opts.from, "First budget in SNT")->required();
  sweep_cmd->add_option("--to", sweep_opts.to, "Last budget in SNT")->required();
  sweep_cmd->add_option("--step", sweep_opts.step, "Budget step in SNT")->capture_default_str();
  sweep_cmd->add_option("--methods", sweep_opts.methods,
                        "Comma list: optimal,pessimal,random,all_in_one,independent")
      ->capture_default_str();
  sweep_cmd->add_option("--trials", sweep_opts.trials, "Random-mean trials per point")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_opts.seed, "Random-mean seed")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_opts.threads, "Worker threads (default: env)");
  add_format_flag(sweep_cmd, sweep_opts.common);
  sweep_cmd->callback([&] {
    PerformanceTable table = load_table_file(sweep_opts.table);
    std::vector<Method> methods;
    for (const auto& name : split_commas(sweep_opts.methods))
      methods.push_back(method_from_string(name));
    SweepConfig config;
    config.trials = sweep_opts.trials;
    config.seed = sweep_opts.seed;
    config.threads = sweep_opts.threads > 0 ? sweep_opts.threads : default_threads();
    auto points = sweep(table, Budget{parse_snt_to_msnt(sweep_opts.from)},
                        Budget{parse_snt_to_msnt(sweep_opts.to)},
                        parse_snt_to_msnt(sweep_opts.step), methods, config);
    print_sweep(out, points, sweep_opts.common.machine());
  });

  // ---- baselines ------------------------------------------------------
  struct {
    std::string table, budget;
    std::int64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 0;
    CommonOpts common;
  } base_opts;
  auto* base_cmd = app.add_subcommand("baselines", "Pessimal and random baselines at one budget");
  base_cmd->add_option("--table", base_opts.table, "Performance table (JSON)")->required();
  base_cmd->add_option("--budget", base_opts.budget, "Budget in SNT")->required();
  base_cmd->add_option("--trials", base_opts.trials, "Random trials")->capture_default_str();
  base_cmd->add_option("--seed", base_opts.seed, "Random seed")->capture_default_str();
  base_cmd->add_option("--threads", base_opts.threads, "Worker threads (default: env)");
  add_format_flag(base_cmd, base_opts.common);
  base_cmd->callback([&] {
    PerformanceTable table = load_table_file(base_opts.table);
    Budget budget{parse_snt_to_msnt(base_opts.budget)};
    RandomMeanConfig config;
    config.trials = base_opts.trials;
    config.seed = base_opts.seed;
    config.threads = base_opts.threads > 0 ? base_opts.threads : default_threads();

    Solution worst = solve_pessimal(table, budget);
    SweepPoint mean = solve_random_mean(table, budget, config);
    bool machine = base_opts.common.machine();
    if (machine) {
      out << "method\ttotal_loss\tcost_snt\tnetworks\n";
      out << "pessimal\t" << fixed(worst.total_loss, 6) << "\t"
          << format_msnt_as_snt(worst.cost_msnt) << "\t" << join(worst.network_ids, ",") << "\n";
      out << "random_mean\t" << fixed(mean.solution->total_loss, 6) << "\t-\t-\n";
    } else {
      out << "pessimal:    loss " << fixed(worst.total_loss, 6) << ", cost "
          << format_msnt_as_snt(worst.cost_msnt) << " SNT, networks "
          << join(worst.network_ids, ", ") << "\n";
      out << "random mean: loss " << fixed(mean.solution->total_loss, 6) << "  ("
          << mean.note << ")\n";
    }
  });

  // ---- hoa ------------------------------------------------------------
  auto* hoa_cmd = app.add_subcommand("hoa", "Higher-order approximation");
  hoa_cmd->require_subcommand(1);

  struct {
    std::string table, group, cost;
    CommonOpts common;
  } predict_opts;
  auto* predict_cmd =
      hoa_cmd->add_subcommand("predict", "Predict one group from its pair networks");
  predict_cmd->add_option("--table", predict_opts.table, "Base table (singles and pairs)")
      ->required();
  predict_cmd->add_option("--group", predict_opts.group, "Comma list of at least 3 tasks")
      ->required();
  predict_cmd->add_option("--cost", predict_opts.cost,
                          "Cost of the predicted network in SNT (default: pair cost)");
  add_format_flag(predict_cmd, predict_opts.common);
  predict_cmd->callback([&] {
    PerformanceTable table = load_table_file(predict_opts.table);
    std::vector<std::string> group = split_commas(predict_opts.group);
    std::int64_t cost;
    if (!predict_opts.cost.empty()) {
      cost = parse_snt_to_msnt(predict_opts.cost);
    } else {
      cost = -1;  // infer from the group's pair networks
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j)
          for (const CandidateNetwork& n : table.networks())
            if (n.losses.size() == 2 && n.solves(group[i]) && n.solves(group[j]))
              cost = std::max(cost, n.cost_msnt);
      if (cost <= 0)
        throw ValidationError("cannot infer --cost: the table has no pair networks over the group");
    }
    CandidateNetwork predicted = hoa_predict(table, group, cost);
    bool machine = predict_opts.common.machine();
    if (machine) {
      out << "id\t" << predicted.id << "\n";
      out << "cost_snt\t" << format_msnt_as_snt(predicted.cost_msnt) << "\n";
      out << "predicted\ttrue\n";
      for (const auto& [task, loss] : predicted.losses)
        out << "loss\t" << task << "\t" << fixed(loss, 6) << "\n";
    } else {
      out << "predicted network " << predicted.id << " (cost "
          << format_msnt_as_snt(predicted.cost_msnt) << " SNT)\n";
      for (const auto& [task, loss] : predicted.losses)
        out << "  " << task << "  " << fixed(loss, 6) << "\n";
    }
  });

  struct {
    std::string table, budget;
    CommonOpts common;
  } pipeline_opts;
  auto* pipeline_cmd =
      hoa_cmd->add_subcommand("pipeline", "Select over trained plus predicted candidates");
  pipeline_cmd->add_option("--table", pipeline_opts.table, "Base table (singles and pairs)")
      ->required();
  pipeline_cmd->add_option("--budget", pipeline_opts.budget, "Budget in SNT")->required();
  add_format_flag(pipeline_cmd, pipeline_opts.common);
  pipeline_cmd->callback([&] {
    PerformanceTable table = load_table_file(pipeline_opts.table);
    HoaPipelineResult result =
        hoa_pipeline(table, Budget{parse_snt_to_msnt(pipeline_opts.budget)});
    bool machine = pipeline_opts.common.machine();
    SolutionPrinter{out, machine}.print(result.solution, "selection over predicted candidates");
    if (machine) {
      for (const auto& group : result.retrain_groups)
        out << "retrain\t" << join(group, ",") << "\n";
    } else if (result.retrain_groups.empty()) {
      out << "  nothing to retrain: the selection uses only trained networks\n";
    } else {
      out << "  groups to retrain from scratch:\n";
      for (const auto& group : result.retrain_groups)
        out << "    {" << join(group, ", ") << "}\n";
    }
  });

  // ---- esa ------------------------------------------------------------
  struct {
    std::string final_table, proxy, budget;
    double sigma = -1.0;
    std::uint64_t seed = 0;
    CommonOpts common;
  } esa_opts;
  auto* esa_cmd = app.add_subcommand("esa", "Select on a proxy table, evaluate on the final one");
  esa_cmd->add_option("--final", esa_opts.final_table, "Final (fully trained) table")->required();
  auto* proxy_opt = esa_cmd->add_option("--proxy", esa_opts.proxy, "Proxy table");
  auto* sigma_opt = esa_cmd->add_option(
      "--synth-sigma", esa_opts.sigma, "Synthesize the proxy with Gaussian noise of this sigma");
  esa_cmd->add_option("--seed", esa_opts.seed, "Seed for proxy synthesis")->capture_default_str();
  esa_cmd->add_option("--budget", esa_opts.budget, "Budget in SNT")->required();
  proxy_opt->excludes(sigma_opt);
  add_format_flag(esa_cmd, esa_opts.common);
  esa_cmd->callback([&] {
    PerformanceTable final_table = load_table_file(esa_opts.final_table);
    std::optional<PerformanceTable> proxy;
    if (!esa_opts.proxy.empty())
      proxy = load_table_file(esa_opts.proxy);
    else if (esa_opts.sigma >= 0.0)
      proxy = make_noisy_proxy(final_table, esa_opts.sigma, esa_opts.seed);
    else
      throw ValidationError("esa needs either --proxy or --synth-sigma");

    Budget budget{parse_snt_to_msnt(esa_opts.budget)};
    EsaResult result = esa_pipeline(*proxy, final_table, budget);
    Solution best = solve_optimal(final_table, budget);
    double gap = result.realized_on_final.total_loss - best.total_loss;
    bool machine = esa_opts.common.machine();
    if (machine) {
      out << "chosen_networks\t" << join(result.chosen_on_proxy.network_ids, ",") << "\n";
      out << "proxy_loss\t" << fixed(result.chosen_on_proxy.total_loss, 6) << "\n";
      out << "realized_loss\t" << fixed(result.realized_on_final.total_loss, 6) << "\n";
      out << "optimal_loss\t" << fixed(best.total_loss, 6) << "\n";
      out << "gap\t" << fixed(gap, 6) << "\n";
    } else {
      out << "chosen on proxy:   " << join(result.chosen_on_proxy.network_ids, ", ")
          << "  (proxy loss " << fixed(result.chosen_on_proxy.total_loss, 6) << ")\n";
      out << "realized on final: " << fixed(result.realized_on_final.total_loss, 6) << "\n";
      out << "true optimum:      " << fixed(best.total_loss, 6) << "\n";
      out << "gap:               " << fixed(gap, 6) << "\n";
    }
  });

  // ---- affinity -------------------------------------------------------
  struct {
    std::string input;
  } affinity_opts;
  auto* affinity_cmd =
      app.add_subcommand("affinity", "Symmetrize a directed matrix into pair affinities");
  affinity_cmd
      ->add_option("--input", affinity_opts.input, "Directed matrix (path or fixtures:NAME)")
      ->required();
  affinity_cmd->callback([&] {
    Matrix m = load_matrix_arg(affinity_opts.input);
    auto* directed = std::get_if<PairwiseRelationMatrix>(&m);
    if (directed == nullptr)
      throw ValidationError("affinity expects a directed matrix as input");
    out << serialize_matrix(symmetrize(*directed));
  });

  // ---- corr -----------------------------------------------------------
  struct {
    std::string a, b;
    bool directed = false, symmetric = false;
    CommonOpts common;
  } corr_opts;
  auto* corr_cmd = app.add_subcommand("corr", "Pearson correlation between two matrices");
  corr_cmd->add_option("matrix_a", corr_opts.a, "Matrix (path or fixtures:NAME)")->required();
  corr_cmd->add_option("matrix_b", corr_opts.b, "Matrix (path or fixtures:NAME)")->required();
  auto* dir_flag = corr_cmd->add_flag("--directed", corr_opts.directed,
                                      "Pair the directed off-diagonal entries");
  auto* sym_flag = corr_cmd->add_flag("--symmetric", corr_opts.symmetric,
                                      "Pair the symmetrized per-pair affinities");
  dir_flag->excludes(sym_flag);
  add_format_flag(corr_cmd, corr_opts.common);
  corr_cmd->callback([&] {
    Matrix ma = load_matrix_arg(corr_opts.a);
    Matrix mb = load_matrix_arg(corr_opts.b);
    bool has_affinity = std::holds_alternative<AffinityMatrix>(ma) ||
                        std::holds_alternative<AffinityMatrix>(mb);
    bool symmetric = corr_opts.symmetric || (!corr_opts.directed && has_affinity);

    Correlation c;
    if (symmetric) {
      auto to_affinity = [](const Matrix& m) {
        if (const auto* d = std::get_if<PairwiseRelationMatrix>(&m)) return symmetrize(*d);
        return std::get<AffinityMatrix>(m);
      };
      c = correlate_symmetric(to_affinity(ma), to_affinity(mb));
    } else {
      auto* da = std::get_if<PairwiseRelationMatrix>(&ma);
      auto* db = std::get_if<PairwiseRelationMatrix>(&mb);
      if (da == nullptr || db == nullptr)
        throw ValidationError("--directed needs two directed matrices");
      c = correlate_directed(*da, *db);
    }
    print_correlation(out, c, symmetric ? "symmetric" : "directed", corr_opts.common.machine());
  });

  // ---- fixtures -------------------------------------------------------
  struct {
    std::string name;
  } fixture_opts;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List or dump the embedded study tables");
  fixtures_cmd->add_option("--name", fixture_opts.name, "Dump one fixture as matrix CSV");
  fixtures_cmd->callback([&] {
    if (fixture_opts.name.empty()) {
      for (const auto& name : fixture_names()) out << name << "\n";
      return;
    }
    out << serialize_matrix(load_fixture(fixture_opts.name));
  });

  // ---- report ---------------------------------------------------------
  struct {
    std::string table, budget;
    double reference = -1.0;
    CommonOpts common;
  } report_opts;
  auto* report_cmd =
      app.add_subcommand("report", "Totals and percentages relative to a reference");
  report_cmd->add_option("--table", report_opts.table, "Performance table (JSON)")->required();
  report_cmd->add_option("--budget", report_opts.budget, "Budget in SNT")->required();
  report_cmd->add_option("--reference-loss", report_opts.reference,
                         "Reference total loss (default: the independent baseline)");
  add_format_flag(report_cmd, report_opts.common);
  report_cmd->callback([&] {
    PerformanceTable table = load_table_file(report_opts.table);
    Budget budget{parse_snt_to_msnt(report_opts.budget)};

    std::vector<std::pair<std::string, std::optional<Solution>>> rows;
    auto attempt = [&](const std::string& name, auto&& fn) {
      try {
        rows.emplace_back(name, fn());
      } catch (const InfeasibleError&) {
        rows.emplace_back(name, std::nullopt);
      }
    };
    attempt("optimal", [&] { return solve_optimal(table, budget); });
    attempt("all_in_one", [&] { return solve_all_in_one(table, budget); });
    attempt("independent", [&] { return solve_independent(table, budget); });

    double reference = report_opts.reference;
    if (reference <= 0.0) {
      // The default reference is the independent-singles total regardless of
      // the budget; the table row still reports its feasibility at the budget.
      std::int64_t everything = 0;
      for (const CandidateNetwork& n : table.networks()) everything += n.cost_msnt;
      try {
        reference = solve_independent(table, Budget{everything}).total_loss;
      } catch (const InfeasibleError&) {
        throw ValidationError(
            "no independent baseline in the table; pass --reference-loss explicitly");
      }
    }

    bool machine = report_opts.common.machine();
    if (machine)
      out << "method\ttotal_loss\tcost_snt\trelative_pct\n";
    else
      out << "budget " << format_msnt_as_snt(budget.msnt) << " SNT, reference loss "
          << fixed(reference, 6) << "\n";
    for (const auto& [name, sol] : rows) {
      std::string loss = sol ? fixed(sol->total_loss, 6) : "-";
      std::string cost = sol ? format_msnt_as_snt(sol->cost_msnt) : "-";
      std::string rel =
          sol ? fixed(relative_total_performance(sol->total_loss, reference), 2) + "%" : "-";
      if (machine) {
        out << name << "\t" << loss << "\t" << cost << "\t"
            << (sol ? rel.substr(0, rel.size() - 1) : rel) << "\n";
      } else {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-12s loss %-10s cost %-7s rel %s", name.c_str(),
                      loss.c_str(), cost.c_str(), rel.c_str());
        out << line << "\n";
      }
    }
  });

  // ---- synth ----------------------------------------------------------
  struct {
    std::string tasks = "s,d,n,k,e", full = "1", half = "0.5", out_path;
    std::uint64_t seed = 0;
  } synth_opts;
  auto* synth_cmd =
      app.add_subcommand("synth", "Emit a synthetic full-template table (losses uniform in (0,1))");
  synth_cmd->add_option("--tasks", synth_opts.tasks, "Comma list of task ids")
      ->capture_default_str();
  synth_cmd->add_option("--full", synth_opts.full, "Full-size cost in SNT")->capture_default_str();
  synth_cmd->add_option("--half", synth_opts.half, "Reduced-size cost in SNT")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_opts.seed, "Loss seed")->capture_default_str();
  synth_cmd->add_option("--out", synth_opts.out_path, "Write to a file instead of stdout");
  synth_cmd->callback([&] {
    TaskSet tasks(split_commas(synth_opts.tasks));
    PerformanceTable table =
        synthetic_template_table(tasks, parse_snt_to_msnt(synth_opts.full),
                                 parse_snt_to_msnt(synth_opts.half), synth_opts.seed);
    if (synth_opts.out_path.empty())
      out << serialize_table(table);
    else
      save_table_file(table, synth_opts.out_path);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return oracle_status;
}

}  // namespace taskgroup::cli
