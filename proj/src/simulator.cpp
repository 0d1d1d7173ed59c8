#include "gatekit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gatekit/error.hpp"
#include "gatekit/rng.hpp"

namespace gatekit {
namespace {

std::vector<std::vector<std::size_t>> gate_sequences(const Schedule& schedule,
                                                     const Assignment& assignment) {
  if (assignment.gate_of.size() != schedule.size())
    throw IncompleteAssignment("assignment does not cover the schedule");
  std::vector<std::vector<std::size_t>> seq(static_cast<std::size_t>(schedule.gate_count()));
  for (std::size_t f : schedule.arrival_order()) {
    const int g = assignment.gate_of[f];
    if (g < 0 || g >= schedule.gate_count())
      throw IncompleteAssignment("flight " + schedule[f].id + " has no valid gate");
    seq[static_cast<std::size_t>(g)].push_back(f);
  }
  return seq;
}

}  // namespace

RunOutcome simulate_run(const Schedule& schedule, const Assignment& assignment,
                        const SimConfig& config, std::uint64_t seed,
                        std::vector<FlightTimes>* times) {
  Rng rng(seed);
  RunOutcome out;
  if (times != nullptr) times->assign(schedule.size(), {});
  const bool residual = config.draw_residual && config.turn.residual_sigma > 0.0;
  for (const auto& seq : gate_sequences(schedule, assignment)) {
    double gate_free = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < seq.size(); ++j) {
      const Flight& f = schedule[seq[j]];
      const double nominal = f.sched_arr + sample_delay(config.arrival, rng);
      const double effective = std::max(nominal, gate_free);
      if (gate_free > nominal) {
        out.total_conflict_minutes += gate_free - nominal;
        ++out.conflict_count;
      }
      if (j > 0) out.realized_separations.push_back(effective - gate_free);

      double act_dep;
      if (config.independent_departure) {
        act_dep = f.sched_dep + sample_delay(*config.independent_departure, rng);
      } else {
        const double e = residual ? rng.normal(0.0, config.turn.residual_sigma) : 0.0;
        act_dep = f.sched_dep + propagate_delay(config.turn, f.sched_dep, effective, e);
        act_dep = std::max(act_dep, effective);
      }
      gate_free = std::max(gate_free, act_dep);
      if (times != nullptr) (*times)[seq[j]] = {nominal, effective, act_dep};
    }
  }
  return out;
}

SimOutcome simulate_many(const Schedule& schedule, const Assignment& assignment,
                         const SimConfig& config, int runs, std::uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  SimOutcome out;
  out.flights = schedule.size();
  const auto seq = gate_sequences(schedule, assignment);
  std::vector<double> sep_sum(seq.size(), 0.0);
  std::vector<std::size_t> sep_n(seq.size(), 0);

  out.runs.reserve(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r) {
    RunOutcome run =
        simulate_run(schedule, assignment, config, Rng::derive(seed, static_cast<std::uint64_t>(r)));
    std::size_t pos = 0;
    for (std::size_t g = 0; g < seq.size(); ++g) {
      for (std::size_t j = 1; j < seq[g].size(); ++j, ++pos) {
        sep_sum[g] += run.realized_separations[pos];
        ++sep_n[g];
      }
    }
    out.runs.push_back(std::move(run));
  }

  double sum_m = 0.0, sum_c = 0.0;
  for (const auto& r : out.runs) {
    sum_m += r.total_conflict_minutes;
    sum_c += r.conflict_count;
  }
  const double n = runs;
  out.mean_conflict_minutes = sum_m / n;
  out.mean_conflict_count = sum_c / n;
  if (runs > 1) {
    double ss_m = 0.0, ss_c = 0.0;
    for (const auto& r : out.runs) {
      ss_m += (r.total_conflict_minutes - out.mean_conflict_minutes) *
              (r.total_conflict_minutes - out.mean_conflict_minutes);
      ss_c += (r.conflict_count - out.mean_conflict_count) *
              (r.conflict_count - out.mean_conflict_count);
    }
    out.std_conflict_minutes = std::sqrt(ss_m / (n - 1.0));
    out.std_conflict_count = std::sqrt(ss_c / (n - 1.0));
  }
  if (out.flights > 0) {
    out.minutes_per_aircraft = out.mean_conflict_minutes / static_cast<double>(out.flights);
    out.count_per_aircraft = out.mean_conflict_count / static_cast<double>(out.flights);
  }
  out.gate_mean_separation.resize(seq.size());
  for (std::size_t g = 0; g < seq.size(); ++g)
    out.gate_mean_separation[g] = sep_n[g] > 0 ? sep_sum[g] / static_cast<double>(sep_n[g])
                                               : std::numeric_limits<double>::quiet_NaN();
  return out;
}

SeparationStats separation_stats(const Schedule& schedule, const Assignment& assignment) {
  std::vector<double> seps;
  for (const auto& seq : gate_sequences(schedule, assignment))
    for (std::size_t j = 1; j < seq.size(); ++j)
      seps.push_back(gate_separation(schedule[seq[j - 1]], schedule[seq[j]]));
  SeparationStats st;
  st.pairs = seps.size();
  if (seps.empty()) return st;
  double sum = 0.0;
  for (double s : seps) sum += s;
  st.mean = sum / static_cast<double>(seps.size());
  double ss = 0.0;
  for (double s : seps) ss += (s - st.mean) * (s - st.mean);
  st.std = std::sqrt(ss / static_cast<double>(seps.size()));
  return st;
}

}  // namespace gatekit
