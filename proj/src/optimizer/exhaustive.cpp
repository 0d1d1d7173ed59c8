#include <cmath>
#include <limits>
#include <vector>

#include "gatekit/error.hpp"
#include "gatekit/optimizer.hpp"

namespace gatekit {

ExhaustiveResult exhaustive_solve(const Schedule& schedule, double buffer_min,
                                  const ObjectiveFn& objective) {
  const std::size_t n = schedule.size();
  const int gates = schedule.gate_count();
  const double space = std::pow(static_cast<double>(gates), static_cast<double>(n));
  if (space > 1e7)
    throw TooLarge(std::to_string(gates) + "^" + std::to_string(n) +
                   " assignments exceed the enumeration limit of 1e7");

  std::vector<std::uint8_t> clash(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != k)
        clash[i * n + k] = (schedule[i].sched_dep - schedule[k].sched_arr + buffer_min) *
                               (schedule[k].sched_dep - schedule[i].sched_arr + buffer_min) >
                           0.0;

  ExhaustiveResult best;
  best.objective = std::numeric_limits<double>::infinity();
  Assignment current;
  current.gate_of.assign(n, -1);

  auto recurse = [&](auto&& self, std::size_t f) -> void {
    if (f == n) {
      ++best.feasible_assignments;
      const double value = objective(current);
      if (value < best.objective) {
        best.objective = value;
        best.assignment = current;
      }
      return;
    }
    for (int g = 0; g < gates; ++g) {
      bool ok = true;
      for (std::size_t k = 0; k < f && ok; ++k)
        ok = !(current.gate_of[k] == g && clash[f * n + k]);
      if (!ok) continue;
      current.gate_of[f] = g;
      self(self, f + 1);
    }
    current.gate_of[f] = -1;
  };
  recurse(recurse, 0);

  if (best.feasible_assignments == 0)
    throw NoFeasibleAssignment("no assignment of " + std::to_string(n) + " flights to " +
                               std::to_string(gates) + " gates meets the buffer");
  return best;
}

}  // namespace gatekit
