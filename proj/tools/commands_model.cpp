#include <cmath>
#include <iostream>
#include <sstream>

#include "cli_common.hpp"
#include "gatekit/error.hpp"

namespace gatekit::cli {
namespace {

using io::fixed;

std::vector<DelayRecord> load_delays(Run& run, const std::string& path) {
  std::istringstream in(run.read_input(path));
  return io::read_delay_csv(in, path);
}

void add_fit(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string delays;
    double bin_width = 5.0;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("fit", "Fit shifted log-normal delay distributions");
  cmd->add_option("--delays", o->delays, "Delay records CSV")->required();
  cmd->add_option("--bin-width", o->bin_width, "Histogram bin width, minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    const auto records = load_delays(run, o->delays);
    std::vector<double> dep, arr;
    for (const auto& r : records) {
      if (r.is_departure()) dep.push_back(*r.act_dep - *r.sched_dep);
      if (r.is_arrival()) arr.push_back(*r.act_arr - *r.sched_arr);
    }
    if (records.empty()) throw TooFewSamples(o->delays + ": no delay records");
    const DelayDistribution fd = fit_shifted_lognormal(dep);
    const DelayDistribution fa = fit_shifted_lognormal(arr);
    io::json doc = {{"departure", io::to_json(fd)},
                    {"arrival", io::to_json(fa)},
                    {"samples", {{"departure", dep.size()}, {"arrival", arr.size()}}}};
    run.write("delay_model.json", doc.dump(2) + "\n");

    std::ostringstream csv;
    csv << "kind,bin_lo_min,bin_hi_min,count,density,fitted_density\n";
    auto emit = [&](const char* kind, const std::vector<double>& v, const DelayDistribution& d) {
      for (const auto& b : histogram(v, o->bin_width)) {
        const double density =
            static_cast<double>(b.count) / (static_cast<double>(v.size()) * o->bin_width);
        csv << kind << ',' << fixed(b.lo, 1) << ',' << fixed(b.hi, 1) << ',' << b.count << ','
            << fixed(density, 8) << ',' << fixed(pdf(d, 0.5 * (b.lo + b.hi)), 8) << '\n';
      }
    };
    emit("departure", dep, fd);
    emit("arrival", arr, fa);
    run.write("delay_histogram.csv", csv.str());
    std::cout << "departure mu=" << fixed(fd.mu, 4) << " sigma=" << fixed(fd.sigma, 4)
              << " shift_c=" << fixed(fd.shift_c, 3) << " (" << dep.size() << " samples)\n"
              << "arrival   mu=" << fixed(fa.mu, 4) << " sigma=" << fixed(fa.sigma, 4)
              << " shift_c=" << fixed(fa.shift_c, 3) << " (" << arr.size() << " samples)\n";
    run.finish();
  });
}

void add_turnfit(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string delays;
    double min_turn = 20.0;
    double max_turn = 200.0;
    double bin_width = 10.0;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("turnfit", "Pair turns by tail and fit the turn model");
  cmd->add_option("--delays", o->delays, "Delay records CSV")->required();
  cmd->add_option("--min-turn", o->min_turn, "Shortest plausible turn, minutes")
      ->capture_default_str();
  cmd->add_option("--max-turn", o->max_turn, "Longest scheduled turn kept, minutes")
      ->capture_default_str();
  cmd->add_option("--bin-width", o->bin_width, "Turn histogram bin width, minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    const auto records = load_delays(run, o->delays);
    std::vector<DelayRecord> arrivals, departures;
    for (const auto& r : records) {
      if (r.is_arrival()) arrivals.push_back(r);
      if (r.is_departure()) departures.push_back(r);
    }
    const PairingReport report = pair_turns(arrivals, departures, {o->min_turn, o->max_turn});
    if (report.matched == 0)
      throw TooFewSamples(o->delays + ": no arrival and departure share a tail");
    const std::size_t dropped = report.filtered_scheduled + report.filtered_actual;
    std::cout << report.matched << " arrival-departure pairs identified, " << dropped
              << " filtered out (" << report.filtered_scheduled << " scheduled turn, "
              << report.filtered_actual << " actual turn)\n";

    std::vector<TurnObservation> obs;
    std::vector<double> turns;
    for (const auto& p : report.pairs) {
      obs.push_back(p.observation());
      turns.push_back(p.scheduled_turn());
    }
    const TurnFit fit = fit_turn_model(obs);
    io::json doc = io::to_json(fit.model);
    doc["slope_identified"] = fit.slope_identified;
    doc["observations"] = fit.observations;
    doc["sse"] = fit.sse;
    doc["pairing"] = {{"matched", report.matched},
                      {"filtered_scheduled", report.filtered_scheduled},
                      {"filtered_actual", report.filtered_actual},
                      {"kept", report.pairs.size()},
                      {"unmatched_arrivals", report.unmatched_arrivals},
                      {"unmatched_departures", report.unmatched_departures}};
    run.write("turn_model.json", doc.dump(2) + "\n");

    std::ostringstream csv;
    csv << "turn_lo_min,turn_hi_min,count\n";
    for (const auto& b : histogram(turns, o->bin_width))
      csv << fixed(b.lo, 1) << ',' << fixed(b.hi, 1) << ',' << b.count << '\n';
    run.write("turn_histogram.csv", csv.str());
    std::cout << "C=" << fixed(fit.model.fixed_delay_C, 3)
              << " b=" << fixed(fit.model.propagation_ratio_b, 3)
              << " m=" << fixed(fit.model.min_turn_m, 0)
              << " residual_sigma=" << fixed(fit.model.residual_sigma, 3) << "\n";
    run.finish();
  });
}

void add_conflict_curve(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string delay_model;
    double max_sep = 120.0;
    double step = 5.0;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("conflict-curve",
                                 "Expected conflict duration versus separation and its fit");
  cmd->add_option("--delay-model", o->delay_model, "delay_model.json (default: built-in fits)");
  cmd->add_option("--max-sep", o->max_sep, "Largest separation, minutes")->capture_default_str();
  cmd->add_option("--step", o->step, "Grid step, minutes")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    DelayDistribution dep, arr;
    load_delay_model(run, o->delay_model, dep, arr);
    std::vector<double> grid;
    for (double s = 0.0; s <= o->max_sep + 1e-9; s += o->step) grid.push_back(s);
    const ConflictCurve curve = fit_conflict_curve(dep, arr, grid);
    std::ostringstream csv;
    csv << "sep_min,exact_min,fitted_min\n";
    for (double s : grid)
      csv << fixed(s, 2) << ',' << fixed(expected_conflict_duration_exact(dep, arr, s), 6) << ','
          << fixed(expected_conflict_duration_fast(curve, s), 6) << '\n';
    run.write("conflict_curve.csv", csv.str());
    run.write("conflict_curve.json", io::to_json(curve).dump(2) + "\n");
    std::cout << "a=" << fixed(curve.intercept_a, 4) << " b=" << fixed(curve.base_b, 5) << "\n";
    run.finish();
  });
}

void add_gen_schedule(CLI::App& app, Context& ctx) {
  struct Opts {
    GeneratorOptions gen;
    double scale = 1.0;
    TransferOptions transfers;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("gen-schedule", "Generate a synthetic hub schedule");
  cmd->add_option("--flights", o->gen.flights, "Number of flights")->capture_default_str();
  cmd->add_option("--gates", o->gen.gates, "Gate count (recorded for reference)")
      ->capture_default_str();
  cmd->add_option("--banks", o->gen.banks, "Arrival banks")->capture_default_str();
  cmd->add_option("--scale", o->scale, "Traffic factor in [1, 2]")->capture_default_str();
  cmd->add_option("--max-partners", o->transfers.max_partners, "Connections per arrival")
      ->capture_default_str();
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    Schedule s = generate_schedule(o->gen, run.stage_seed("schedule"));
    if (o->scale != 1.0) s = scale_traffic(s, o->scale, run.stage_seed("scale"));
    const TransferMatrix t = generate_transfers(s, o->transfers, run.stage_seed("transfers"));
    std::ostringstream sched, trans;
    io::write_schedule_csv(sched, s);
    io::write_transfers_csv(trans, s, t);
    run.write("schedule.csv", sched.str());
    run.write("transfers.csv", trans.str());
    std::cout << s.size() << " flights, " << t.size() << " transfer pairs\n";
    run.finish();
  });
}

void add_gen_ramp(CLI::App& app, Context& ctx) {
  struct Opts {
    std::string layout = "parallel";
    ParallelRampOptions parallel;
    HorseshoeRampOptions horseshoe;
    double walk_speed = 60.0;
    double distance_scale = 1.0;
  };
  auto o = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("gen-ramp", "Generate ramp geometry");
  cmd->add_option("--layout", o->layout, "parallel or horseshoe")
      ->capture_default_str()
      ->check(CLI::IsMember({"parallel", "horseshoe"}));
  cmd->add_option("--gates-per-concourse", o->parallel.gates_per_concourse, "Parallel layout")
      ->capture_default_str();
  cmd->add_option("--concourses", o->parallel.concourses, "Parallel layout")
      ->capture_default_str();
  cmd->add_option("--gates", o->horseshoe.gates, "Horseshoe layout")->capture_default_str();
  cmd->add_option("--walk-speed", o->walk_speed, "Meters per minute")->capture_default_str();
  cmd->add_option("--distance-scale", o->distance_scale, "Multiplies every distance")
      ->capture_default_str();
  cmd->callback([cmd, o, &ctx] {
    Run run(ctx, *cmd);
    o->parallel.walk_speed = o->walk_speed;
    o->horseshoe.walk_speed = o->walk_speed;
    RampConfig ramp = o->layout == "parallel" ? make_parallel_ramp(o->parallel)
                                              : make_horseshoe_ramp(o->horseshoe);
    if (o->distance_scale != 1.0) ramp = scale_distances(ramp, o->distance_scale);
    run.write("ramp.json", io::to_json(ramp).dump(2) + "\n");
    std::cout << ramp.gate_count() << " gates, layout " << to_string(ramp.layout) << "\n";
    run.finish();
  });
}

}  // namespace

void add_model_commands(CLI::App& app, Context& ctx) {
  add_fit(app, ctx);
  add_turnfit(app, ctx);
  add_conflict_curve(app, ctx);
  add_gen_schedule(app, ctx);
  add_gen_ramp(app, ctx);
}

}  // namespace gatekit::cli
