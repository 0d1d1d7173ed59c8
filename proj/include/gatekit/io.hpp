#pragma once
// CSV and JSON readers/writers for the command-line pipeline.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gatekit/conflict.hpp"
#include "gatekit/delay_model.hpp"
#include "gatekit/optimizer.hpp"
#include "gatekit/schedule.hpp"
#include "gatekit/simulator.hpp"
#include "gatekit/transit.hpp"

namespace gatekit::io {

using json = nlohmann::json;

// Delay records: flight_id,tail,sched_dep_min,act_dep_min,sched_arr_min,act_arr_min
// Blank fields are allowed; a row may carry an arrival, a departure or both.
std::vector<DelayRecord> read_delay_csv(std::istream& in, const std::string& source = "<input>");
void write_delay_csv(std::ostream& out, std::span<const DelayRecord> records);

struct ScheduleRows {
  std::vector<Flight> flights;
  std::size_t skipped_overnight = 0;  ///< rows with sched_dep <= sched_arr
};

// flight_id,tail,sched_arr_min,sched_dep_min,pax_in,pax_origin,pax_dest
ScheduleRows read_schedule_csv(std::istream& in, const std::string& source = "<input>");
void write_schedule_csv(std::ostream& out, const Schedule& schedule);

// flight_i,flight_k,pax
TransferMatrix read_transfers_csv(std::istream& in, const Schedule& schedule,
                                  const std::string& source = "<input>");
void write_transfers_csv(std::ostream& out, const Schedule& schedule,
                         const TransferMatrix& transfers);

json to_json(const DelayDistribution& d);
DelayDistribution delay_distribution_from_json(const json& j);
json to_json(const TurnModel& m);
TurnModel turn_model_from_json(const json& j);
json to_json(const ConflictCurve& c);
ConflictCurve conflict_curve_from_json(const json& j);
json to_json(const RampConfig& r);
RampConfig ramp_from_json(const json& j);

/// {"gates": N, "assignment": {"<flight_id>": gate}}
json assignment_to_json(const Schedule& schedule, const Assignment& a);
/// Throws IncompleteAssignment when a scheduled flight is missing and
/// ParseError for ids not in the schedule.
Assignment assignment_from_json(const json& j, const Schedule& schedule);

json to_json(const SimOutcome& s);

/// Throws ParseError with the file name on I/O or JSON syntax errors.
std::string read_text(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);
/// printf("%.*f") without locale surprises; "-0" is normalized to "0".
std::string fixed(double value, int digits);

}  // namespace gatekit::io
