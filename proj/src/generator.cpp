#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gatekit/rng.hpp"
#include "gatekit/schedule.hpp"

namespace gatekit {
namespace {

std::string numbered(const char* prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%03zu", prefix, n);
  return buf;
}

}  // namespace

Schedule generate_schedule(const GeneratorOptions& options, std::uint64_t seed) {
  Rng rng(seed);
  const int banks = std::max(options.banks, 1);
  // Bank centres leave room for a median turn before the end of the day.
  const double first = options.day_start + options.bank_spread;
  const double last = options.day_end - options.turn_median - 2.0 * options.bank_spread;
  std::vector<double> centres;
  for (int b = 0; b < banks; ++b)
    centres.push_back(banks == 1 ? first : first + (last - first) * b / (banks - 1));

  std::vector<Flight> flights;
  flights.reserve(options.flights);
  for (std::size_t n = 0; n < options.flights; ++n) {
    double turn;
    if (rng.uniform() < options.long_turn_fraction) {
      turn = std::round(rng.uniform(100.0, 200.0));
    } else {
      turn = std::round(options.turn_median * std::exp(options.turn_log_sd * rng.normal()));
      turn = std::clamp(turn, 30.0, 200.0);
    }
    const double centre = centres[static_cast<std::size_t>(rng.uniform_int(0, banks - 1))];
    double arr = std::round(centre + options.bank_spread * rng.normal());
    arr = std::clamp(arr, options.day_start, options.day_end - turn);

    const int seats = static_cast<int>(rng.uniform_int(options.seats_min, options.seats_max));
    const int pax_in = static_cast<int>(std::lround(seats * rng.uniform(0.6, 0.95)));
    const int pax_dest = static_cast<int>(std::lround(pax_in * rng.uniform(0.3, 0.7)));
    const int pax_out = static_cast<int>(std::lround(seats * rng.uniform(0.6, 0.95)));
    const int pax_origin = static_cast<int>(std::lround(pax_out * rng.uniform(0.3, 0.7)));

    flights.push_back(Flight{numbered("F", n + 1), numbered("N", n + 1), arr, arr + turn,
                             pax_in, pax_origin, pax_dest});
  }
  return Schedule(std::move(flights), options.gates);
}

TransferMatrix generate_transfers(const Schedule& schedule, const TransferOptions& options,
                                  std::uint64_t seed) {
  Rng rng(seed);
  TransferMatrix transfers;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Flight& in = schedule[i];
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      if (k == i) continue;
      const double wait = schedule[k].sched_dep - in.sched_arr;
      if (wait >= options.min_connection && wait <= options.max_connection) candidates.push_back(k);
    }
    int connecting = std::max(in.pax_in - in.pax_dest, 0);
    if (candidates.empty() || connecting == 0) continue;
    // Partial Fisher-Yates for the partner set.
    const auto partners = std::min<std::size_t>(candidates.size(),
                                                static_cast<std::size_t>(options.max_partners));
    for (std::size_t p = 0; p < partners; ++p) {
      const auto j = static_cast<std::size_t>(
          rng.uniform_int(static_cast<std::int64_t>(p), static_cast<std::int64_t>(candidates.size()) - 1));
      std::swap(candidates[p], candidates[j]);
    }
    for (std::size_t p = 0; p < partners && connecting > 0; ++p) {
      const int share = p + 1 == partners
                            ? connecting
                            : static_cast<int>(rng.uniform_int(0, connecting));
      transfers.add(i, candidates[p], share);
      connecting -= share;
    }
  }
  return transfers;
}

}  // namespace gatekit
