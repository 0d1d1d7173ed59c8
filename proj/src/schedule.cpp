#include "gatekit/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gatekit/error.hpp"
#include "gatekit/rng.hpp"

namespace gatekit {

Schedule::Schedule(std::vector<Flight> flights, int gate_count)
    : flights_(std::move(flights)), gate_count_(gate_count) {
  if (gate_count_ <= 0) throw InvalidSchedule("gate count must be positive");
  index_.reserve(flights_.size());
  for (std::size_t i = 0; i < flights_.size(); ++i) {
    const Flight& f = flights_[i];
    if (!(f.sched_arr < f.sched_dep))
      throw InvalidSchedule("flight " + f.id + ": scheduled arrival must precede departure");
    if (f.pax_in < 0 || f.pax_origin < 0 || f.pax_dest < 0)
      throw InvalidSchedule("flight " + f.id + ": negative passenger count");
    if (!index_.emplace(f.id, i).second)
      throw InvalidSchedule("duplicate flight id " + f.id);
  }
}

std::optional<std::size_t> Schedule::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Schedule::arrival_order() const {
  std::vector<std::size_t> order(flights_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (flights_[a].sched_arr != flights_[b].sched_arr)
      return flights_[a].sched_arr < flights_[b].sched_arr;
    return flights_[a].sched_dep < flights_[b].sched_dep;
  });
  return order;
}

void TransferMatrix::add(std::size_t i, std::size_t k, int pax) {
  if (i == k) throw InvalidSchedule("transfer matrix: self-transfer entry");
  if (pax < 0) throw InvalidSchedule("transfer matrix: negative passenger count");
  if (pax == 0) return;
  pax_[{std::min(i, k), std::max(i, k)}] += pax;
}

int TransferMatrix::get(std::size_t i, std::size_t k) const {
  const auto it = pax_.find({std::min(i, k), std::max(i, k)});
  return it == pax_.end() ? 0 : it->second;
}

std::vector<TransferMatrix::Entry> TransferMatrix::entries() const {
  std::vector<Entry> out;
  out.reserve(pax_.size());
  for (const auto& [key, pax] : pax_) out.push_back({key.first, key.second, pax});
  return out;
}

double gate_separation(const Flight& i, const Flight& k) {
  if (i.id == k.id) throw SameFlight("gate_separation: flight " + i.id + " paired with itself");
  return leaves_first(i, k) ? k.sched_arr - i.sched_dep : i.sched_arr - k.sched_dep;
}

PairingReport pair_turns(std::span<const DelayRecord> arrivals,
                         std::span<const DelayRecord> departures,
                         const PairingFilter& filter) {
  struct Event {
    double time;
    bool arrival;
    const DelayRecord* record;
  };
  std::map<std::string, std::vector<Event>> by_tail;
  for (const auto& r : arrivals)
    if (r.is_arrival()) by_tail[r.tail].push_back({*r.sched_arr, true, &r});
  for (const auto& r : departures)
    if (r.is_departure()) by_tail[r.tail].push_back({*r.sched_dep, false, &r});

  PairingReport report;
  for (auto& [tail, events] : by_tail) {
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
      if (a.time != b.time) return a.time < b.time;
      return a.arrival && !b.arrival;
    });
    const DelayRecord* pending = nullptr;
    for (const Event& e : events) {
      if (e.arrival) {
        if (pending) ++report.unmatched_arrivals;
        pending = e.record;
        continue;
      }
      if (!pending) {
        ++report.unmatched_departures;
        continue;
      }
      ++report.matched;
      TurnPair pair{pending->flight_id, e.record->flight_id, tail,
                    *pending->sched_arr,  *pending->act_arr,  *e.record->sched_dep,
                    *e.record->act_dep};
      pending = nullptr;
      const double turn = pair.scheduled_turn();
      if (turn < filter.min_turn || turn > filter.max_turn) {
        ++report.filtered_scheduled;
      } else if (pair.actual_turn() < filter.min_turn) {
        ++report.filtered_actual;
      } else {
        report.pairs.push_back(std::move(pair));
      }
    }
    if (pending) ++report.unmatched_arrivals;
  }
  return report;
}

Schedule scale_traffic(const Schedule& base, double factor, std::uint64_t seed) {
  if (!(factor >= 1.0 && factor <= 2.0))
    throw BadFactor("scale_traffic: factor must be in [1, 2], got " + std::to_string(factor));
  std::vector<Flight> flights = base.flights();
  const auto extra = static_cast<std::size_t>(
      std::llround((factor - 1.0) * static_cast<double>(base.size())));
  if (extra > 0 && base.size() == 0) throw BadFactor("scale_traffic: empty base schedule");
  Rng rng(seed);
  for (std::size_t n = 1; n <= extra; ++n) {
    const auto& src = base[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(base.size()) - 1))];
    double offset = static_cast<double>(rng.uniform_int(-30, 30));
    offset = std::max(offset, -src.sched_arr);
    offset = std::min(offset, 1440.0 - src.sched_dep);
    Flight copy = src;
    copy.id = src.id + "#" + std::to_string(n);
    copy.tail = src.tail + "#" + std::to_string(n);
    copy.sched_arr += offset;
    copy.sched_dep += offset;
    flights.push_back(std::move(copy));
  }
  return Schedule(std::move(flights), base.gate_count());
}

}  // namespace gatekit
