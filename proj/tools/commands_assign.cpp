#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "cli_common.hpp"
#include "gatekit/error.hpp"
#include "gatekit/rng.hpp"

namespace gatekit::cli {
namespace {

using io::fixed;

struct SolveOpts {
  std::string schedule;
  int gates = 0;
  std::string curve;
  std::string ramp;
  std::string transfers;
  SolverConfig solver;
  std::string neighborhood = "both";
};

void add_solver_options(CLI::App* cmd, SolveOpts& o) {
  cmd->add_option("--schedule", o.schedule, "Schedule CSV")->required();
  cmd->add_option("--gates", o.gates, "Number of gates")->required();
  cmd->add_option("--curve", o.curve, "conflict_curve.json (default: reported surrogate)");
  cmd->add_option("--buffer", o.solver.buffer_min, "Minimum gate separation, minutes")
      ->capture_default_str();
  cmd->add_option("--tenure", o.solver.tabu_tenure, "Tabu tenure, 0 for automatic")
      ->capture_default_str();
  cmd->add_option("--iterations", o.solver.max_iterations, "Iteration cap per restart")
      ->capture_default_str();
  cmd->add_option("--non-improving", o.solver.max_non_improving,
                  "Stop a restart after this many iterations without improvement")
      ->capture_default_str();
  cmd->add_option("--restarts", o.solver.restarts, "Tabu restarts")->capture_default_str();
  cmd->add_option("--neighborhood", o.neighborhood, "move, swap or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"move", "swap", "both"}));
}

void finalize_solver(SolveOpts& o, Run& run, const char* stage) {
  o.solver.neighborhood = neighborhood_from_string(o.neighborhood);
  o.solver.seed = run.stage_seed(stage);
  o.solver.validate();
}

void add_assign(CLI::App& app, Context& ctx) {
  struct Opts : SolveOpts {
    std::string policy = "tabu";
    std::string initial;
  };
  auto o = std::make_shared<Opts>();
  o->solver.alpha = 0.0;
  auto* cmd = app.add_subcommand("assign", "Assign flights to gates");
  add_solver_options(cmd, *o);
  cmd->add_option("--policy", o->policy, "greedy, tabu or exhaustive")
      ->capture_default_str()
      ->check(CLI::IsMember({"greedy", "tabu", "exhaustive"}));
  cmd->add_option("--alpha", o->solver.alpha, "Robust weight when a ramp is given")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--ramp", o->ramp, "ramp.json; enables the combined objective");
  cmd->add_option("--transfers", o->transfers, "Transfer CSV");
  cmd->add_option("--initial", o->initial, "Starting assignment JSON for tabu");
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    finalize_solver(*o, run, "assign");
    const Schedule s = load_schedule(run, o->schedule, o->gates);
    const ConflictCurve curve = load_curve(run, o->curve);
    std::optional<RampConfig> ramp;
    if (!o->ramp.empty()) ramp = io::ramp_from_json(run.read_json_input(o->ramp));
    const TransferMatrix transfers = load_transfers(run, o->transfers, s);

    auto objective = [&](const Assignment& a) {
      return ramp ? combined_objective(s, a, curve, *ramp, transfers, o->solver.alpha)
                  : objective_robust(s, a, curve, false);
    };
    Assignment result;
    std::vector<double> trace;
    if (o->policy == "greedy") {
      result = greedy_assign(s, o->solver.buffer_min);
    } else if (o->policy == "exhaustive") {
      result = exhaustive_solve(s, o->solver.buffer_min, objective).assignment;
    } else {
      std::optional<Assignment> initial;
      if (!o->initial.empty()) initial = io::assignment_from_json(run.read_json_input(o->initial), s);
      TabuResult tr = tabu_search(s, o->solver, curve, ramp ? &*ramp : nullptr, &transfers,
                                  initial ? &*initial : nullptr);
      result = std::move(tr.assignment);
      trace = std::move(tr.trace);
    }

    const AssignmentSummary summary = summarize(s, result);
    std::ostringstream csv;
    csv << "policy,flights,gates_used,min_separation,objective_robust,objective_robust_weighted,"
           "objective_transit,objective\n";
    csv << o->policy << ',' << s.size() << ',' << summary.gates_used << ','
        << (std::isinf(summary.min_separation) ? "" : fixed(summary.min_separation, 2)) << ','
        << fixed(objective_robust(s, result, curve, false), 6) << ','
        << fixed(objective_robust(s, result, curve, true), 6) << ','
        << (ramp ? fixed(objective_transit(s, result, *ramp, transfers), 6) : "") << ','
        << fixed(objective(result), 6) << '\n';
    run.write("assignment.json", io::assignment_to_json(s, result).dump(2) + "\n");
    run.write("objective.csv", csv.str());
    if (!trace.empty()) {
      std::ostringstream t;
      t << "iteration,best_objective\n";
      for (std::size_t i = 0; i < trace.size(); ++i) t << i << ',' << fixed(trace[i], 6) << '\n';
      run.write("trace.csv", t.str());
    }
    std::cout << o->policy << ": objective " << fixed(objective(result), 4) << ", "
              << summary.gates_used << " gates used\n";
    run.finish();
  });
}

void add_simulate(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string schedule;
    int gates = 0;
    std::string assignment;
    std::string delay_model;
    std::string turn_model;
    int runs = 100;
    bool no_residual = false;
    bool independent = false;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("simulate", "Monte Carlo replay of an assignment");
  cmd->add_option("--schedule", o->schedule, "Schedule CSV")->required();
  cmd->add_option("--gates", o->gates, "Number of gates")->required();
  cmd->add_option("--assignment", o->assignment, "Assignment JSON")->required();
  cmd->add_option("--delay-model", o->delay_model, "delay_model.json (default: built-in fits)");
  cmd->add_option("--turn-model", o->turn_model, "turn_model.json (default: built-in fit)");
  cmd->add_option("--runs", o->runs, "Number of runs")->capture_default_str()->check(
      CLI::PositiveNumber);
  cmd->add_flag("--no-residual", o->no_residual, "Propagate departures without residual noise");
  cmd->add_flag("--independent-departures", o->independent,
                "Draw departure delays from the departure distribution instead");
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    const Schedule s = load_schedule(run, o->schedule, o->gates);
    const Assignment a = io::assignment_from_json(run.read_json_input(o->assignment), s);
    SimConfig cfg;
    DelayDistribution dep;
    load_delay_model(run, o->delay_model, dep, cfg.arrival);
    cfg.turn = load_turn_model(run, o->turn_model);
    cfg.draw_residual = !o->no_residual;
    if (o->independent) cfg.independent_departure = dep;
    const SimOutcome out = simulate_many(s, a, cfg, o->runs, run.stage_seed("simulate"));
    std::ostringstream csv;
    csv << "run,total_conflict_minutes,conflict_count\n";
    for (std::size_t r = 0; r < out.runs.size(); ++r)
      csv << r << ',' << fixed(out.runs[r].total_conflict_minutes, 6) << ','
          << out.runs[r].conflict_count << '\n';
    run.write("sim_outcome.json", io::to_json(out).dump(2) + "\n");
    run.write("sim_runs.csv", csv.str());
    std::cout << "mean conflict " << fixed(out.mean_conflict_minutes, 3) << " min, "
              << fixed(out.mean_conflict_count, 3) << " events over " << o->runs << " runs\n";
    run.finish();
  });
}

void add_tradeoff(CLI::App& app, Context& ctx) {
  struct Opts : SolveOpts {
    std::vector<double> alphas{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    int seeds = 1;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("tradeoff", "Sweep the robust/transit weight");
  add_solver_options(cmd, *o);
  cmd->add_option("--ramp", o->ramp, "ramp.json")->required();
  cmd->add_option("--transfers", o->transfers, "Transfer CSV");
  cmd->add_option("--alphas", o->alphas, "Weights to sweep")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seeds", o->seeds, "Solves per weight; the best combined objective is kept")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    finalize_solver(*o, run, "tradeoff");
    const Schedule s = load_schedule(run, o->schedule, o->gates);
    const ConflictCurve curve = load_curve(run, o->curve);
    const RampConfig ramp = io::ramp_from_json(run.read_json_input(o->ramp));
    const TransferMatrix transfers = load_transfers(run, o->transfers, s);

    std::vector<TradeoffPoint> best;
    std::vector<int> best_seed;
    for (int k = 0; k < o->seeds; ++k) {
      SolverConfig cfg = o->solver;
      cfg.seed = Rng::derive(o->solver.seed, static_cast<std::uint64_t>(k));
      const auto pts = alpha_sweep(s, cfg, curve, ramp, transfers, o->alphas);
      if (best.empty()) {
        best = pts;
        best_seed.assign(pts.size(), 0);
        continue;
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double a = pts[i].alpha;
        const double cand = (1 - a) * pts[i].transit + a * pts[i].robust;
        const double cur = (1 - a) * best[i].transit + a * best[i].robust;
        if (cand < cur) {
          best[i] = pts[i];
          best_seed[i] = k;
        }
      }
    }
    std::ostringstream csv;
    csv << "alpha,transit,robust,sum,gates_used,seed_index\n";
    for (std::size_t i = 0; i < best.size(); ++i)
      csv << fixed(best[i].alpha, 3) << ',' << fixed(best[i].transit, 6) << ','
          << fixed(best[i].robust, 6) << ',' << fixed(best[i].sum, 6) << ','
          << best[i].assignment.gates_used() << ',' << best_seed[i] << '\n';
    run.write("tradeoff.csv", csv.str());
    run.finish();
  });
}

}  // namespace

void add_assign_commands(CLI::App& app, Context& ctx) {
  add_assign(app, ctx);
  add_simulate(app, ctx);
  add_tradeoff(app, ctx);
}

}  // namespace gatekit::cli
