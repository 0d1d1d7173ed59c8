#pragma once
// Monte Carlo replay of a gate assignment under sampled delays.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gatekit/delay_model.hpp"
#include "gatekit/optimizer.hpp"
#include "gatekit/schedule.hpp"

namespace gatekit {

struct SimConfig {
  DelayDistribution arrival = DelayDistribution::dtw_arrival();
  TurnModel turn = TurnModel::dtw();
  bool draw_residual = true;
  /// When set, departure delays are drawn i.i.d. from this distribution
  /// instead of being propagated through the turn model.
  std::optional<DelayDistribution> independent_departure;
};

struct RunOutcome {
  double total_conflict_minutes = 0.0;
  int conflict_count = 0;
  /// effective act_a(next) - act_d(prev) for consecutive same-gate flights,
  /// gate by gate.
  std::vector<double> realized_separations;
};

struct FlightTimes {
  double nominal_arr = 0.0;
  double effective_arr = 0.0;
  double actual_dep = 0.0;
};

/// Replays one day. Flights on each gate are taken in scheduled arrival
/// order; an arrival waits until the gate's previous occupant has left.
/// `times`, when given, receives the realized times per flight.
RunOutcome simulate_run(const Schedule& schedule, const Assignment& assignment,
                        const SimConfig& config, std::uint64_t seed,
                        std::vector<FlightTimes>* times = nullptr);

struct SimOutcome {
  std::vector<RunOutcome> runs;
  std::size_t flights = 0;
  double mean_conflict_minutes = 0.0;
  double std_conflict_minutes = 0.0;  ///< sample std, 0 for one run
  double mean_conflict_count = 0.0;
  double std_conflict_count = 0.0;
  /// Means divided by the number of flights.
  double minutes_per_aircraft = 0.0;
  double count_per_aircraft = 0.0;
  /// Mean realized separation per gate over all runs; NaN for gates
  /// holding fewer than two flights.
  std::vector<double> gate_mean_separation;
};

/// Run r uses seed Rng::derive(seed, r). Throws std::invalid_argument when
/// runs < 1.
SimOutcome simulate_many(const Schedule& schedule, const Assignment& assignment,
                         const SimConfig& config, int runs, std::uint64_t seed);

struct SeparationStats {
  double mean = 0.0;
  double std = 0.0;  ///< population std
  std::size_t pairs = 0;
};

/// Scheduled separations of consecutive same-gate flights.
SeparationStats separation_stats(const Schedule& schedule, const Assignment& assignment);

}  // namespace gatekit
