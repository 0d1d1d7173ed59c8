#pragma once
// Flights, gate occupancy schedules, tail pairing and traffic scaling.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gatekit/delay_model.hpp"

namespace gatekit {

/// One gate occupancy: the arrival of an aircraft and its tail departure.
/// Times are minutes since midnight.
struct Flight {
  std::string id;
  std::string tail;
  double sched_arr = 0.0;
  double sched_dep = 0.0;
  int pax_in = 0;      ///< arriving passengers
  int pax_origin = 0;  ///< passengers starting their trip on the departure
  int pax_dest = 0;    ///< passengers ending their trip on the arrival

  bool operator==(const Flight&) const = default;
};

/// Flights competing for `gate_count` interchangeable gates.
class Schedule {
public:
  Schedule() = default;
  /// Throws InvalidSchedule on duplicate ids, sched_arr >= sched_dep,
  /// negative passenger counts or a non-positive gate count.
  Schedule(std::vector<Flight> flights, int gate_count);

  const std::vector<Flight>& flights() const { return flights_; }
  const Flight& operator[](std::size_t i) const { return flights_[i]; }
  std::size_t size() const { return flights_.size(); }
  int gate_count() const { return gate_count_; }
  std::optional<std::size_t> index_of(const std::string& id) const;

  /// Flight indices ordered by (sched_arr, sched_dep, index).
  std::vector<std::size_t> arrival_order() const;

  Schedule with_gate_count(int gates) const { return Schedule(flights_, gates); }

private:
  std::vector<Flight> flights_;
  int gate_count_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Transfer passengers between flight pairs, stored by unordered index pair.
class TransferMatrix {
public:
  struct Entry {
    std::size_t i;
    std::size_t k;
    int pax;
  };

  /// Adds `pax` to the (i, k) entry. Throws InvalidSchedule on i == k or pax < 0.
  void add(std::size_t i, std::size_t k, int pax);
  int get(std::size_t i, std::size_t k) const;
  /// Entries with i < k, ordered.
  std::vector<Entry> entries() const;
  std::size_t size() const { return pax_.size(); }
  bool empty() const { return pax_.empty(); }

private:
  std::map<std::pair<std::size_t, std::size_t>, int> pax_;
};

/// True when occupancy i precedes k on a shared gate: earlier departure,
/// ties broken by earlier arrival.
inline bool leaves_first(const Flight& i, const Flight& k) {
  return i.sched_dep < k.sched_dep || (i.sched_dep == k.sched_dep && i.sched_arr <= k.sched_arr);
}

/// sch_a(k) - sch_d(i) if i leaves first, otherwise sch_a(i) - sch_d(k).
/// Equal departures are ordered by arrival so the result is symmetric in
/// its arguments. Throws SameFlight when both ids match.
double gate_separation(const Flight& i, const Flight& k);

// Tail pairing -------------------------------------------------------------

/// One row of on-time data. A row is an arrival record when its arrival
/// fields are present and a departure record when its departure fields are.
struct DelayRecord {
  std::string flight_id;
  std::string tail;
  std::optional<double> sched_dep;
  std::optional<double> act_dep;
  std::optional<double> sched_arr;
  std::optional<double> act_arr;

  bool is_arrival() const { return sched_arr && act_arr; }
  bool is_departure() const { return sched_dep && act_dep; }
};

struct TurnPair {
  std::string arrival_id;
  std::string departure_id;
  std::string tail;
  double sched_arr = 0.0;
  double act_arr = 0.0;
  double sched_dep = 0.0;
  double act_dep = 0.0;

  double scheduled_turn() const { return sched_dep - sched_arr; }
  double actual_turn() const { return act_dep - act_arr; }
  TurnObservation observation() const { return {sched_dep, act_arr, act_dep - sched_dep}; }
};

struct PairingFilter {
  double min_turn = 20.0;
  double max_turn = 200.0;
};

struct PairingReport {
  std::vector<TurnPair> pairs;          ///< pairs surviving both filters
  std::size_t matched = 0;              ///< arrival-departure pairs identified
  std::size_t filtered_scheduled = 0;   ///< scheduled turn outside [min, max]
  std::size_t filtered_actual = 0;      ///< actual turn below min
  std::size_t unmatched_arrivals = 0;
  std::size_t unmatched_departures = 0;
};

/// Matches each arrival with the next departure of the same tail that leaves
/// before that tail's next arrival, then drops pairs whose scheduled turn is
/// outside [min_turn, max_turn] and, of the rest, those whose actual turn is
/// below min_turn.
PairingReport pair_turns(std::span<const DelayRecord> arrivals,
                         std::span<const DelayRecord> departures,
                         const PairingFilter& filter = {});

// Traffic scaling and synthetic instances ---------------------------------

/// Adds round((factor - 1) * |F|) flights, each a copy of a uniformly chosen
/// base flight shifted by a uniform integer offset in [-30, 30] minutes and
/// kept inside [0, 1440]. Base flights are untouched; gate count is kept.
/// Throws BadFactor unless factor is in [1, 2].
Schedule scale_traffic(const Schedule& base, double factor, std::uint64_t seed);

struct GeneratorOptions {
  std::size_t flights = 226;
  int gates = 44;
  double day_start = 360.0;   ///< 06:00
  double day_end = 1380.0;    ///< 23:00, latest scheduled departure
  int banks = 9;              ///< arrival banks spread across the day
  double bank_spread = 30.0;  ///< std of arrival times around a bank, minutes
  double turn_median = 60.0;
  double turn_log_sd = 0.2;
  double long_turn_fraction = 0.08;  ///< turns drawn uniformly from [100, 200]
  int seats_min = 76;
  int seats_max = 180;
};

/// Hub-like single-day schedule: banked arrivals, log-normal turn times and
/// load-factor passenger counts. Integer minutes throughout.
Schedule generate_schedule(const GeneratorOptions& options, std::uint64_t seed);

struct TransferOptions {
  double min_connection = 30.0;
  double max_connection = 180.0;
  int max_partners = 4;
};

/// Spreads each arrival's connecting passengers (pax_in - pax_dest) over up
/// to `max_partners` flights departing within the connection window.
TransferMatrix generate_transfers(const Schedule& schedule, const TransferOptions& options,
                                  std::uint64_t seed);

}  // namespace gatekit
