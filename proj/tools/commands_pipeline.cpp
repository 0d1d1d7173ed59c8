#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli_common.hpp"
#include "gatekit/error.hpp"
#include "gatekit/rng.hpp"

namespace gatekit::cli {
namespace {

using io::fixed;

struct PolicyResult {
  std::string policy;
  double scale = 1.0;
  Assignment assignment;
  std::optional<double> objective;
  std::size_t buffer_violations = 0;
  SeparationStats separation;
  SimOutcome sim;
};

std::string scale_tag(double f) { return fixed(f, 2); }

}  // namespace

void add_pipeline_command(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string schedule;
    int gates = 0;
    std::string baseline;
    std::string delay_model;
    std::string turn_model;
    std::string curve;
    std::vector<double> scales{1.0};
    int runs = 100;
    double buffer = 15.0;
    int restarts = 3;
    int iterations = 5000;
    bool no_residual = false;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("pipeline",
                                 "Conflict curve, greedy and tabu assignment, simulation");
  cmd->add_option("--schedule", o->schedule, "Schedule CSV")->required();
  cmd->add_option("--gates", o->gates, "Number of gates")->required();
  cmd->add_option("--baseline", o->baseline, "Existing assignment JSON, compared at scale 1");
  cmd->add_option("--delay-model", o->delay_model, "delay_model.json (default: built-in fits)");
  cmd->add_option("--turn-model", o->turn_model, "turn_model.json (default: built-in fit)");
  cmd->add_option("--curve", o->curve, "conflict_curve.json; skips the curve fit");
  cmd->add_option("--scales", o->scales, "Traffic factors")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::Range(1.0, 2.0));
  cmd->add_option("--runs", o->runs, "Simulation runs per assignment")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--buffer", o->buffer, "Minimum gate separation, minutes")->capture_default_str();
  cmd->add_option("--restarts", o->restarts, "Tabu restarts")->capture_default_str();
  cmd->add_option("--iterations", o->iterations, "Tabu iterations per restart")
      ->capture_default_str();
  cmd->add_flag("--no-residual", o->no_residual, "Simulate without departure residual noise");
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    const Schedule base = load_schedule(run, o->schedule, o->gates);

    DelayDistribution dep, arr;
    load_delay_model(run, o->delay_model, dep, arr);
    ConflictCurve curve;
    if (o->curve.empty()) {
      curve = fit_conflict_curve(dep, arr, default_separation_grid());
    } else {
      curve = load_curve(run, o->curve);
    }
    std::cout << "curve a=" << fixed(curve.intercept_a, 4) << " b=" << fixed(curve.base_b, 5)
              << "\n";
    run.write("conflict_curve.json", io::to_json(curve).dump(2) + "\n");

    SimConfig sim;
    sim.arrival = arr;
    sim.turn = load_turn_model(run, o->turn_model);
    sim.draw_residual = !o->no_residual;
    SolverConfig solver;
    solver.buffer_min = o->buffer;
    solver.restarts = o->restarts;
    solver.max_iterations = o->iterations;
    solver.validate();
    std::optional<Assignment> baseline;
    if (!o->baseline.empty())
      baseline = io::assignment_from_json(run.read_json_input(o->baseline), base);

    const std::uint64_t scale_seed = run.stage_seed("scale");
    const std::uint64_t tabu_seed = run.stage_seed("tabu");
    const std::uint64_t sim_seed = run.stage_seed("simulate");

    std::vector<PolicyResult> results;
    for (std::size_t si = 0; si < o->scales.size(); ++si) {
      const double f = o->scales[si];
      const Schedule s = f == 1.0 ? base : scale_traffic(base, f, Rng::derive(scale_seed, si));
      auto evaluate = [&](const std::string& policy, Assignment a, bool check_buffer) {
        PolicyResult r;
        r.policy = policy;
        r.scale = f;
        if (check_buffer || is_feasible(s, a, 0.0).feasible)
          r.objective = objective_robust(s, a, curve, false, check_buffer ? o->buffer : 0.0);
        r.buffer_violations = is_feasible(s, a, o->buffer).violations.size();
        r.separation = separation_stats(s, a);
        r.sim = simulate_many(s, a, sim, o->runs, Rng::derive(sim_seed, si));
        r.assignment = std::move(a);
        run.write("assignment_" + policy + "_" + scale_tag(f) + ".json",
                  io::assignment_to_json(s, r.assignment).dump(2) + "\n");
        results.push_back(std::move(r));
      };
      if (baseline && f == 1.0) evaluate("baseline", *baseline, false);
      evaluate("greedy", greedy_assign(s, o->buffer), true);
      SolverConfig cfg = solver;
      cfg.seed = Rng::derive(tabu_seed, si);
      evaluate("tabu", tabu_search(s, cfg, curve).assignment, true);
    }

    std::ostringstream table, series;
    table << "scale,policy,flights,gates_used,mean_separation,std_separation,objective_robust,"
             "mean_conflict_minutes,std_conflict_minutes,mean_conflict_count,std_conflict_count,"
             "conflict_minutes_per_aircraft,conflict_count_per_aircraft\n";
    series << "scale,policy,run,total_conflict_minutes,conflict_count\n";
    io::json report = io::json::array();
    for (const auto& r : results) {
      table << scale_tag(r.scale) << ',' << r.policy << ',' << r.sim.flights << ','
            << r.assignment.gates_used() << ',' << fixed(r.separation.mean, 4) << ','
            << fixed(r.separation.std, 4) << ',' << (r.objective ? fixed(*r.objective, 6) : "")
            << ',' << fixed(r.sim.mean_conflict_minutes, 6) << ','
            << fixed(r.sim.std_conflict_minutes, 6) << ',' << fixed(r.sim.mean_conflict_count, 6)
            << ',' << fixed(r.sim.std_conflict_count, 6) << ','
            << fixed(r.sim.minutes_per_aircraft, 8) << ',' << fixed(r.sim.count_per_aircraft, 8)
            << '\n';
      for (std::size_t k = 0; k < r.sim.runs.size(); ++k)
        series << scale_tag(r.scale) << ',' << r.policy << ',' << k << ','
               << fixed(r.sim.runs[k].total_conflict_minutes, 6) << ','
               << r.sim.runs[k].conflict_count << '\n';
      io::json entry = {{"scale", r.scale},
                        {"policy", r.policy},
                        {"gates_used", r.assignment.gates_used()},
                        {"buffer_violations", r.buffer_violations},
                        {"separation", {{"mean", r.separation.mean}, {"std", r.separation.std}}},
                        {"simulation", io::to_json(r.sim)}};
      entry["objective_robust"] = r.objective ? io::json(*r.objective) : io::json(nullptr);
      report.push_back(entry);
      std::cout << scale_tag(r.scale) << ' ' << r.policy << ": "
                << fixed(r.sim.mean_conflict_minutes, 3) << " conflict min/day, "
                << r.assignment.gates_used() << " gates\n";
    }
    run.write("comparison.csv", table.str());
    run.write("conflict_series.csv", series.str());
    run.write("report.json",
              io::json({{"curve", io::to_json(curve)}, {"results", report}}).dump(2) + "\n");
    run.finish();
  });
}

}  // namespace gatekit::cli
