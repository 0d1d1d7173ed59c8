// Acceptance checks. Prints one PASS/FAIL line per criterion; exits 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gatekit/conflict.hpp"
#include "gatekit/delay_model.hpp"
#include "gatekit/error.hpp"
#include "gatekit/optimizer.hpp"
#include "gatekit/rng.hpp"
#include "gatekit/schedule.hpp"
#include "gatekit/simulator.hpp"
#include "gatekit/transit.hpp"

using namespace gatekit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct MonteCarlo {
  double mean = 0.0;
  double se = 0.0;
};

// E[max(0, D - A - sep)] with D, A drawn from the shifted distributions.
MonteCarlo conflict_monte_carlo(const DelayDistribution& dep, const DelayDistribution& arr,
                                double sep, int draws, std::uint64_t seed) {
  Rng rng(seed);
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double v = std::max(0.0, sample_delay(dep, rng) - sample_delay(arr, rng) - sep);
    sum += v;
    sum2 += v * v;
  }
  const double mean = sum / draws;
  const double var = (sum2 - draws * mean * mean) / (draws - 1);
  return {mean, std::sqrt(std::max(var, 0.0) / draws)};
}

const std::vector<double>& fit_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g;
    for (int s = 0; s <= 120; s += 5) g.push_back(s);
    return g;
  }();
  return grid;
}

Outcome criterion_1() {
  const double v = expected_conflict_duration_exact(DelayDistribution::dtw_departure(),
                                                    DelayDistribution::dtw_arrival(), 0.0);
  return {v >= 10.5 && v <= 13.0, fmt("E[conflict | sep=0] = %.4f min, target [10.5, 13.0]", v)};
}

Outcome criterion_2() {
  const auto c = fit_conflict_curve(DelayDistribution::dtw_departure(),
                                    DelayDistribution::dtw_arrival(), fit_grid());
  const bool ok = c.intercept_a >= 11.0 && c.intercept_a <= 12.3 && c.base_b >= 0.94 &&
                  c.base_b <= 0.955;
  return {ok, fmt("a = %.4f (target [11.0, 12.3]), b = %.5f (target [0.94, 0.955])",
                  c.intercept_a, c.base_b)};
}

Outcome criterion_3() {
  Rng pick(2024);
  int agree = 0;
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const DelayDistribution dep{pick.uniform(1.0, 3.5), pick.uniform(0.3, 1.3),
                                pick.uniform(-30.0, 0.0)};
    const DelayDistribution arr{pick.uniform(1.5, 4.0), pick.uniform(0.2, 0.9),
                                pick.uniform(-50.0, -5.0)};
    const double sep = pick.uniform(-10.0, 90.0);
    const double exact = expected_conflict_duration_exact(dep, arr, sep);
    const auto mc = conflict_monte_carlo(dep, arr, sep, 1'000'000, Rng::derive(77, t));
    const double z = mc.se > 0 ? std::abs(exact - mc.mean) / mc.se : std::abs(exact - mc.mean) * 1e12;
    worst = std::max(worst, z);
    if (std::abs(exact - mc.mean) <= 3.0 * mc.se + 1e-12) ++agree;
  }
  return {agree == 10, fmt("%d/10 triples within 3 SE, worst |z| = %.2f", agree, worst)};
}

Outcome criterion_4() {
  const TurnModel truth{3.379, 0.96, 48.0, 0.0};
  std::vector<TurnObservation> obs;
  for (int i = 0; i < 400; ++i) {
    const double sched_dep = 600.0 + i;
    const double available = -20.0 + 0.4 * i;
    const double act_arr = sched_dep - available;
    obs.push_back({sched_dep, act_arr, propagate_delay(truth, sched_dep, act_arr, 0.0)});
  }
  const TurnFit fit = fit_turn_model(obs);
  const auto& m = fit.model;
  const bool ok = std::abs(m.fixed_delay_C - truth.fixed_delay_C) < 1e-6 &&
                  std::abs(m.propagation_ratio_b - truth.propagation_ratio_b) < 1e-6 &&
                  std::abs(m.min_turn_m - truth.min_turn_m) <= 1.0;
  return {ok, fmt("C = %.6f, b = %.6f, m = %.0f", m.fixed_delay_C, m.propagation_ratio_b,
                  m.min_turn_m)};
}

Schedule small_instance(Rng& rng, std::size_t flights, int gates) {
  std::vector<Flight> f;
  for (std::size_t i = 0; i < flights; ++i) {
    const double arr = std::floor(rng.uniform(0.0, 300.0));
    const double dep = arr + std::floor(rng.uniform(30.0, 110.0));
    f.push_back({"F" + std::to_string(i), "T" + std::to_string(i), arr, dep,
                 static_cast<int>(rng.uniform_int(60, 180)), 0, 0});
  }
  return Schedule(f, gates);
}

Outcome criterion_5() {
  const auto curve = ConflictCurve::dtw_reported();
  Rng rng(5);
  int matched = 0, instances = 0, attempts = 0;
  while (instances < 20 && attempts < 1000) {
    ++attempts;
    const auto n = static_cast<std::size_t>(rng.uniform_int(4, 8));
    const int g = static_cast<int>(rng.uniform_int(2, 3));
    const Schedule s = small_instance(rng, n, g);
    ExhaustiveResult ex;
    try {
      ex = exhaustive_solve(s, 15.0, [&](const Assignment& a) {
        return objective_robust(s, a, curve, false);
      });
    } catch (const NoFeasibleAssignment&) {
      continue;
    }
    ++instances;
    SolverConfig cfg;
    cfg.seed = Rng::derive(99, static_cast<std::uint64_t>(instances));
    const auto ts = tabu_search(s, cfg, curve);
    if (is_feasible(s, ts.assignment, 15.0).feasible &&
        ts.objective <= ex.objective * 1.05 + 1e-12)
      ++matched;
  }
  return {instances == 20 && matched >= 18,
          fmt("%d/%d instances within 5%% of the enumerated optimum (need 18/20)", matched,
              instances)};
}

Outcome criterion_6() {
  const Schedule s = generate_schedule({}, 7);
  const auto curve = ConflictCurve::dtw_reported();
  const Assignment greedy = greedy_assign(s, 15.0);
  SolverConfig cfg;
  const auto ts = tabu_search(s, cfg, curve);
  const SimConfig sim;
  const auto sg = simulate_many(s, greedy, sim, 100, 11);
  const auto st = simulate_many(s, ts.assignment, sim, 100, 11);
  const double ratio = st.mean_conflict_minutes / sg.mean_conflict_minutes;
  const bool ok = is_feasible(s, ts.assignment, 15.0).feasible && ratio <= 0.25;
  return {ok, fmt("%zu flights / %d gates: greedy %.3f min, tabu %.3f min, ratio %.4f (limit 0.25)",
                  s.size(), s.gate_count(), sg.mean_conflict_minutes, st.mean_conflict_minutes,
                  ratio)};
}

Outcome criterion_7() {
  const Schedule base = generate_schedule({}, 7);
  const auto curve = ConflictCurve::dtw_reported();
  const SimConfig sim;
  std::vector<double> seps, norm;
  std::string detail;
  for (double factor : {1.0, 1.1, 1.2, 1.3}) {
    const Schedule s = scale_traffic(base, factor, 3);
    const auto ts = tabu_search(s, SolverConfig{}, curve);
    const auto stats = separation_stats(s, ts.assignment);
    const auto out = simulate_many(s, ts.assignment, sim, 100, 11);
    seps.push_back(stats.mean);
    norm.push_back(out.minutes_per_aircraft);
    detail += fmt("%.1fx sep %.2f conflict/ac %.5f; ", factor, stats.mean, out.minutes_per_aircraft);
  }
  bool ok = true;
  for (std::size_t i = 1; i < seps.size(); ++i)
    ok = ok && seps[i] < seps[i - 1] && norm[i] > norm[i - 1];
  return {ok, detail};
}

Outcome criterion_8() {
  GeneratorOptions gen;
  gen.flights = 40;
  gen.gates = 36;
  const Schedule s = generate_schedule(gen, 8);
  const TransferMatrix t = generate_transfers(s, {}, 9);
  const RampConfig ramp = make_parallel_ramp({});
  const auto curve = ConflictCurve::dtw_reported();
  const std::vector<double> alphas{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};

  std::vector<TradeoffPoint> best;
  for (std::uint64_t k = 0; k < 5; ++k) {
    SolverConfig cfg;
    cfg.seed = Rng::derive(8, k);
    const auto pts = alpha_sweep(s, cfg, curve, ramp, t, alphas);
    if (best.empty()) {
      best = pts;
      continue;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double a = alphas[i];
      if ((1 - a) * pts[i].transit + a * pts[i].robust <
          (1 - a) * best[i].transit + a * best[i].robust)
        best[i] = pts[i];
    }
  }
  const double tol = 1e-9;
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < best.size(); ++i) {
    ok = ok && best.front().transit <= best[i].transit * (1 + tol) &&
         best.back().robust <= best[i].robust * (1 + tol) + tol;
    detail += fmt("a=%.1f T=%.1f R=%.2f; ", alphas[i], best[i].transit, best[i].robust);
  }
  return {ok, detail};
}

// Invariant suites ----------------------------------------------------------

struct Suite {
  int passed = 0;
  std::vector<std::string> failed;

  void check(bool ok, const std::string& name) {
    if (ok)
      ++passed;
    else
      failed.push_back(name);
  }
};

double pdf_mass(const DelayDistribution& d) {
  using boost::math::quadrature::gauss_kronrod;
  const double lo = d.shift_c;
  const double hi = d.shift_c + 10.0 * std::exp(d.mu + 5.0 * d.sigma);
  const double mode = std::exp(d.mu);
  std::vector<double> cuts{lo};
  for (double k = -12; k <= 0; k += 1.0) {
    const double x = lo + mode * std::exp(d.sigma * k);
    if (x > cuts.back() && x < hi) cuts.push_back(x);
  }
  for (double off = 2 * mode; lo + off < hi; off *= 2.0) cuts.push_back(lo + off);
  cuts.push_back(hi);
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i)
    total += gauss_kronrod<double, 61>::integrate([&](double x) { return pdf(d, x); }, cuts[i - 1],
                                                  cuts[i], 15, 1e-13);
  return total;
}

void delay_model_invariants(Suite& suite) {
  Rng rng(91);
  for (int rep = 0; rep < 20; ++rep) {
    const DelayDistribution d{rng.uniform(0.5, 4.0), rng.uniform(0.1, 1.4), rng.uniform(-60, 0)};
    bool nonneg = pdf(d, d.shift_c) == 0.0 && pdf(d, d.shift_c - 5.0) == 0.0;
    for (int i = 0; i < 200; ++i) nonneg = nonneg && pdf(d, d.shift_c + rng.uniform(0, 500)) >= 0.0;
    suite.check(nonneg, "pdf nonnegative and zero at or below the shift");
    suite.check(std::abs(pdf_mass(d) - 1.0) <= 1e-6, "pdf integrates to one");
    bool above = true;
    for (int i = 0; i < 1000; ++i) above = above && sample_delay(d, rng) > d.shift_c;
    suite.check(above, "samples exceed the shift");
  }
  const TurnModel turn = TurnModel::dtw();
  bool monotone = true;
  for (double arr = 0; arr < 300; arr += 0.5)
    monotone = monotone && propagate_delay(turn, 200, arr + 0.5, 0) >= propagate_delay(turn, 200, arr, 0);
  suite.check(monotone, "propagated delay nondecreasing in actual arrival");

  const auto truth = DelayDistribution::dtw_departure();
  Rng draw(4);
  std::vector<double> x(100'000);
  for (double& v : x) v = sample_delay(truth, draw);
  const auto fit = fit_shifted_lognormal(x);
  suite.check(std::abs(fit.mu - truth.mu) <= 0.05 && std::abs(fit.sigma - truth.sigma) <= 0.05 &&
                  std::abs(fit.shift_c - truth.shift_c) <= 0.5,
              "fit recovers generating parameters");
}

void conflict_invariants(Suite& suite) {
  const auto dep = DelayDistribution::dtw_departure();
  const auto arr = DelayDistribution::dtw_arrival();
  double prev = std::numeric_limits<double>::infinity();
  bool shape = true;
  for (double s = -30; s <= 300; s += 10) {
    const double v = expected_conflict_duration_exact(dep, arr, s);
    shape = shape && v >= 0.0 && v <= prev + 1e-9;
    prev = v;
  }
  shape = shape && expected_conflict_duration_exact(dep, arr, 20000.0) < 1e-6;
  suite.check(shape, "exact conflict nonnegative, nonincreasing, vanishing");

  bool translation = true;
  for (double delta : {-7.0, 3.5, 20.0}) {
    DelayDistribution moved = dep;
    moved.shift_c += delta;
    translation = translation && std::abs(expected_conflict_duration_exact(moved, arr, 30 + delta) -
                                          expected_conflict_duration_exact(dep, arr, 30)) < 1e-6;
  }
  suite.check(translation, "value depends only on z");

  const auto curve = fit_conflict_curve(dep, arr, fit_grid());
  double sup = 0.0;
  for (double s = 0; s <= 90; s += 1) {
    const double exact = expected_conflict_duration_exact(dep, arr, s);
    sup = std::max(sup, std::abs(curve.intercept_a * std::pow(curve.base_b, s) - exact) / exact);
  }
  suite.check(sup < 0.10, fmt("surrogate sup relative error on [0, 90] below 10%% (got %.1f%%)",
                              100 * sup));

  Rng pick(31);
  int agree = 0;
  for (int t = 0; t < 10; ++t) {
    const DelayDistribution d{pick.uniform(1.0, 3.0), pick.uniform(0.3, 1.2), pick.uniform(-20, 0)};
    const DelayDistribution a{pick.uniform(2.0, 4.0), pick.uniform(0.2, 0.8), pick.uniform(-50, -5)};
    const double sep = pick.uniform(-10, 60);
    const auto mc = conflict_monte_carlo(d, a, sep, 200'000, Rng::derive(31, t));
    if (std::abs(expected_conflict_duration_exact(d, a, sep) - mc.mean) <= 3 * mc.se + 1e-12) ++agree;
  }
  suite.check(agree == 10, "exact value within 3 SE of Monte Carlo");
}

void schedule_invariants(Suite& suite) {
  Rng rng(12);
  bool symmetric = true;
  const Schedule s = generate_schedule({}, 12);
  for (int i = 0; i < 5000; ++i) {
    const auto a = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(s.size()) - 1));
    const auto b = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(s.size()) - 1));
    if (a == b) continue;
    symmetric = symmetric && gate_separation(s[a], s[b]) == gate_separation(s[b], s[a]);
  }
  suite.check(symmetric, "gate separation symmetric");

  std::vector<DelayRecord> arrivals, departures;
  for (int t = 0; t < 300; ++t) {
    const double sa = rng.uniform(300, 1000);
    const double sd = sa + rng.uniform(0, 260);
    arrivals.push_back({"A" + std::to_string(t), "N" + std::to_string(t % 120), std::nullopt,
                        std::nullopt, sa, sa + rng.uniform(-20, 90)});
    departures.push_back({"D" + std::to_string(t), "N" + std::to_string(t % 120), sd,
                          sd + rng.uniform(-5, 60), std::nullopt, std::nullopt});
  }
  const auto report = pair_turns(arrivals, departures);
  suite.check(report.pairs.size() + report.filtered_scheduled + report.filtered_actual ==
                  report.matched,
              "pairing conserves matched pairs");

  bool preserved = true;
  for (double f : {1.1, 1.3, 2.0}) {
    const Schedule scaled = scale_traffic(s, f, 5);
    for (std::size_t i = 0; i < s.size(); ++i)
      preserved = preserved && scaled[i].id == s[i].id && scaled[i].sched_arr == s[i].sched_arr &&
                  scaled[i].sched_dep == s[i].sched_dep && scaled[i].pax_in == s[i].pax_in;
  }
  suite.check(preserved, "traffic scaling keeps base flights");
}

void optimizer_invariants(Suite& suite) {
  const auto curve = ConflictCurve::dtw_reported();
  Rng rng(44);
  bool feasible = true, nonneg = true, zero_iff = true, trace = true, min_sep = true,
       relabel = true;
  for (int rep = 0; rep < 12; ++rep) {
    const Schedule s = small_instance(rng, 7, 3);
    Assignment g;
    try {
      g = greedy_assign(s, 15.0);
    } catch (const NoFeasibleGate&) {
      continue;
    }
    SolverConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(rep);
    const auto ts = tabu_search(s, cfg, curve);
    const auto ex = exhaustive_solve(s, 15.0, [&](const Assignment& a) {
      return objective_robust(s, a, curve, false);
    });
    for (const Assignment* a : std::vector<const Assignment*>{&g, &ts.assignment, &ex.assignment}) {
      feasible = feasible && is_feasible(s, *a, 15.0).feasible;
      const double v = objective_robust(s, *a, curve, false);
      nonneg = nonneg && v >= 0.0;
      zero_iff = zero_iff && ((v == 0.0) == (a->gates_used() == static_cast<int>(s.size())));
      min_sep = min_sep && summarize(s, *a).min_separation >= 15.0;
      Assignment perm = *a;
      for (int& gate : perm.gate_of) gate = (gate + 1) % s.gate_count();
      relabel = relabel && std::abs(objective_robust(s, perm, curve, false) - v) <= 1e-12 * (1 + v);
    }
    for (std::size_t i = 1; i < ts.trace.size(); ++i) trace = trace && ts.trace[i] <= ts.trace[i - 1];
  }
  const Schedule day = generate_schedule({}, 3);
  const auto ts = tabu_search(day, SolverConfig{}, curve);
  feasible = feasible && is_feasible(day, ts.assignment, 15.0).feasible &&
             is_feasible(day, greedy_assign(day, 15.0), 15.0).feasible;
  for (std::size_t i = 1; i < ts.trace.size(); ++i) trace = trace && ts.trace[i] <= ts.trace[i - 1];

  std::vector<Flight> chain;
  for (int i = 0; i < 8; ++i) chain.push_back({"C" + std::to_string(i), "T", 75.0 * i, 75.0 * i + 60, 100, 0, 0});
  const Schedule packed(chain, 2);
  min_sep = min_sep && summarize(packed, greedy_assign(packed, 15.0)).min_separation == 15.0;

  suite.check(feasible, "solver outputs feasible");
  suite.check(nonneg, "robust objective nonnegative");
  suite.check(zero_iff, "robust objective zero iff no shared gate");
  suite.check(trace, "tabu trace nonincreasing");
  suite.check(min_sep, "minimum separation at least the buffer, exactly 15 when packed");
  suite.check(relabel, "robust objective invariant to gate labels");
}

void transit_invariants(Suite& suite) {
  const Schedule s = generate_schedule({.flights = 60, .gates = 36}, 2);
  const TransferMatrix t = generate_transfers(s, {}, 2);
  for (const RampConfig& ramp : {make_parallel_ramp({}), make_horseshoe_ramp({.gates = 36})}) {
    const std::size_t g = ramp.gate_count();
    bool metric = true;
    for (std::size_t j = 0; j < g; ++j) {
      metric = metric && ramp.checkpoint_dist[j] >= 0 && ramp.baggage_dist[j] >= 0 &&
               ramp.distance(j, j) == 0.0;
      for (std::size_t l = 0; l < g; ++l)
        metric = metric && ramp.distance(j, l) >= 0 && ramp.distance(j, l) == ramp.distance(l, j);
    }
    suite.check(metric, "distances nonnegative, symmetric, zero diagonal");

    Rng rng(6);
    Assignment a;
    for (std::size_t i = 0; i < s.size(); ++i)
      a.gate_of.push_back(static_cast<int>(rng.uniform_int(0, static_cast<std::int64_t>(g) - 1)));
    const double base = objective_transit(s, a, ramp, t);
    const double scaled = objective_transit(s, a, scale_distances(ramp, 2.5), t);
    RampConfig faster = ramp;
    faster.walk_speed *= 2.0;
    const double halved = objective_transit(s, a, faster, t);
    suite.check(std::abs(scaled - 2.5 * base) <= 1e-9 * base, "transit linear in distance");
    suite.check(std::abs(2.0 * halved - base) <= 1e-9 * base, "doubling walk speed halves transit");
  }
}

void simulator_invariants(Suite& suite) {
  const Schedule s = generate_schedule({}, 17);
  const Assignment a = greedy_assign(s, 15.0);

  SimConfig still;
  still.arrival = {0.0, 1e-9, -1.0};
  still.turn = {0.0, 0.0, 0.0, 0.0};
  const auto quiet = simulate_run(s, a, still, 1);
  suite.check(quiet.conflict_count == 0 && quiet.total_conflict_minutes == 0.0,
              "no conflicts when delays fit inside separations");

  bool later = true, ordered = true;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::vector<FlightTimes> times;
    simulate_run(s, a, {}, seed, &times);
    std::vector<double> last(static_cast<std::size_t>(s.gate_count()),
                             -std::numeric_limits<double>::infinity());
    for (std::size_t f : s.arrival_order()) {
      later = later && times[f].effective_arr >= times[f].nominal_arr;
      const auto g = static_cast<std::size_t>(a.gate_of[f]);
      ordered = ordered && times[f].effective_arr >= last[g];
      last[g] = times[f].effective_arr;
    }
  }
  suite.check(later, "effective arrival never before nominal");
  suite.check(ordered, "effective arrivals nondecreasing along each gate");

  const auto r1 = simulate_many(s, a, {}, 20, 5);
  const auto r2 = simulate_many(s, a, {}, 20, 5);
  bool same = r1.mean_conflict_minutes == r2.mean_conflict_minutes;
  for (std::size_t i = 0; i < r1.runs.size(); ++i)
    same = same && r1.runs[i].total_conflict_minutes == r2.runs[i].total_conflict_minutes &&
           r1.runs[i].realized_separations == r2.runs[i].realized_separations;
  suite.check(same, "same seed gives identical outcomes");

  const auto dep = DelayDistribution::dtw_departure();
  const auto arr = DelayDistribution::dtw_arrival();
  SimConfig iid;
  iid.arrival = arr;
  iid.independent_departure = dep;
  bool cross = true;
  for (double sep : {15.0, 45.0}) {
    const Schedule pair({{"A", "T", 0, 100, 100, 0, 0}, {"B", "T", 100 + sep, 200 + sep, 100, 0, 0}}, 1);
    const int runs = 100'000;
    const auto out = simulate_many(pair, {{0, 0}}, iid, runs, 21);
    const double se = out.std_conflict_minutes / std::sqrt(static_cast<double>(runs));
    cross = cross && std::abs(out.mean_conflict_minutes -
                              expected_conflict_duration_exact(dep, arr, sep)) <= 3 * se;
  }
  suite.check(cross, "two-flight simulation matches the conflict integral");
}

Outcome criterion_9() {
  Suite suite;
  delay_model_invariants(suite);
  conflict_invariants(suite);
  schedule_invariants(suite);
  optimizer_invariants(suite);
  transit_invariants(suite);
  simulator_invariants(suite);
  std::string detail = fmt("%d checks passed, %zu failed", suite.passed, suite.failed.size());
  std::vector<std::string> names = suite.failed;
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const auto& n : names) detail += "; failed: " + n;
  return {suite.failed.empty(), detail};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks");
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9); all by default")
      ->check(CLI::Range(0, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "conflict integral at zero separation", criterion_1},
      {2, "exponential fit parameters", criterion_2},
      {3, "integral versus Monte Carlo", criterion_3},
      {4, "turn model recovery", criterion_4},
      {5, "small-instance optimality", criterion_5},
      {6, "robustness dominance over greedy", criterion_6},
      {7, "traffic density trend", criterion_7},
      {8, "trade-off endpoints", criterion_8},
      {9, "invariant suites", criterion_9},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %s: %s [%.1f s] %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
