#include <algorithm>
#include <limits>
#include <vector>

#include "gatekit/error.hpp"
#include "gatekit/optimizer.hpp"

namespace gatekit {

Assignment greedy_assign(const Schedule& schedule, double buffer_min) {
  const auto gates = static_cast<std::size_t>(schedule.gate_count());
  std::vector<double> free_at(gates, -std::numeric_limits<double>::infinity());
  Assignment out;
  out.gate_of.assign(schedule.size(), -1);
  for (std::size_t f : schedule.arrival_order()) {
    const Flight& flight = schedule[f];
    std::size_t g = 0;
    while (g < gates && free_at[g] + buffer_min > flight.sched_arr) ++g;
    if (g == gates)
      throw NoFeasibleGate("no gate free for flight " + flight.id + " arriving at " +
                           std::to_string(flight.sched_arr) + " with " +
                           std::to_string(gates) + " gates");
    out.gate_of[f] = static_cast<int>(g);
    free_at[g] = std::max(free_at[g], flight.sched_dep);
  }
  return out;
}

}  // namespace gatekit
