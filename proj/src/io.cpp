#include "gatekit/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "gatekit/error.hpp"

namespace gatekit::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view field, const std::string& source, std::size_t line,
                    const char* column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value))
    fail(source, line, std::string("column ") + column + ": not a number: '" + std::string(field) + "'");
  return value;
}

std::optional<double> parse_optional(std::string_view field, const std::string& source,
                                     std::size_t line, const char* column) {
  if (field.empty()) return std::nullopt;
  return parse_number(field, source, line, column);
}

int parse_count(std::string_view field, const std::string& source, std::size_t line,
                const char* column) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    fail(source, line, std::string("column ") + column + ": not an integer: '" + std::string(field) + "'");
  if (value < 0) fail(source, line, std::string("column ") + column + " is negative");
  return value;
}

// Reads the header and yields data rows with their line numbers.
template <class RowFn>
void read_csv(std::istream& in, const std::string& source,
              const std::vector<std::string_view>& header, RowFn&& on_row) {
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (!seen_header) {
      if (fields != header) {
        std::string expected;
        for (auto h : header) expected += (expected.empty() ? "" : ",") + std::string(h);
        fail(source, line_no, "expected header '" + expected + "'");
      }
      seen_header = true;
      continue;
    }
    if (fields.size() != header.size())
      fail(source, line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                std::to_string(fields.size()));
    on_row(fields, line_no);
  }
  if (!seen_header) throw ParseError(source + ": empty file");
}

std::string opt(const std::optional<double>& v) { return v ? fixed(*v, 2) : std::string(); }

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw ParseError(std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("missing array field '") + key + "'");
  return j.at(key).get<std::vector<double>>();
}

}  // namespace

std::vector<DelayRecord> read_delay_csv(std::istream& in, const std::string& source) {
  std::vector<DelayRecord> records;
  read_csv(in, source,
           {"flight_id", "tail", "sched_dep_min", "act_dep_min", "sched_arr_min", "act_arr_min"},
           [&](const std::vector<std::string_view>& f, std::size_t line) {
             DelayRecord r;
             r.flight_id = std::string(f[0]);
             r.tail = std::string(f[1]);
             if (r.flight_id.empty()) fail(source, line, "empty flight_id");
             r.sched_dep = parse_optional(f[2], source, line, "sched_dep_min");
             r.act_dep = parse_optional(f[3], source, line, "act_dep_min");
             r.sched_arr = parse_optional(f[4], source, line, "sched_arr_min");
             r.act_arr = parse_optional(f[5], source, line, "act_arr_min");
             if (r.sched_dep.has_value() != r.act_dep.has_value())
               fail(source, line, "departure needs both scheduled and actual times");
             if (r.sched_arr.has_value() != r.act_arr.has_value())
               fail(source, line, "arrival needs both scheduled and actual times");
             if (!r.is_arrival() && !r.is_departure()) fail(source, line, "row has no times");
             records.push_back(std::move(r));
           });
  return records;
}

void write_delay_csv(std::ostream& out, std::span<const DelayRecord> records) {
  out << "flight_id,tail,sched_dep_min,act_dep_min,sched_arr_min,act_arr_min\n";
  for (const auto& r : records)
    out << r.flight_id << ',' << r.tail << ',' << opt(r.sched_dep) << ',' << opt(r.act_dep)
        << ',' << opt(r.sched_arr) << ',' << opt(r.act_arr) << '\n';
}

ScheduleRows read_schedule_csv(std::istream& in, const std::string& source) {
  ScheduleRows rows;
  read_csv(in, source,
           {"flight_id", "tail", "sched_arr_min", "sched_dep_min", "pax_in", "pax_origin",
            "pax_dest"},
           [&](const std::vector<std::string_view>& f, std::size_t line) {
             Flight fl;
             fl.id = std::string(f[0]);
             fl.tail = std::string(f[1]);
             if (fl.id.empty()) fail(source, line, "empty flight_id");
             fl.sched_arr = parse_number(f[2], source, line, "sched_arr_min");
             fl.sched_dep = parse_number(f[3], source, line, "sched_dep_min");
             fl.pax_in = parse_count(f[4], source, line, "pax_in");
             fl.pax_origin = parse_count(f[5], source, line, "pax_origin");
             fl.pax_dest = parse_count(f[6], source, line, "pax_dest");
             if (fl.sched_dep <= fl.sched_arr) {
               ++rows.skipped_overnight;
               return;
             }
             rows.flights.push_back(std::move(fl));
           });
  return rows;
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule) {
  out << "flight_id,tail,sched_arr_min,sched_dep_min,pax_in,pax_origin,pax_dest\n";
  for (const auto& f : schedule.flights())
    out << f.id << ',' << f.tail << ',' << fixed(f.sched_arr, 0) << ',' << fixed(f.sched_dep, 0)
        << ',' << f.pax_in << ',' << f.pax_origin << ',' << f.pax_dest << '\n';
}

TransferMatrix read_transfers_csv(std::istream& in, const Schedule& schedule,
                                  const std::string& source) {
  TransferMatrix m;
  read_csv(in, source, {"flight_i", "flight_k", "pax"},
           [&](const std::vector<std::string_view>& f, std::size_t line) {
             const auto i = schedule.index_of(std::string(f[0]));
             const auto k = schedule.index_of(std::string(f[1]));
             if (!i) fail(source, line, "unknown flight '" + std::string(f[0]) + "'");
             if (!k) fail(source, line, "unknown flight '" + std::string(f[1]) + "'");
             if (*i == *k) fail(source, line, "transfer from a flight to itself");
             m.add(*i, *k, parse_count(f[2], source, line, "pax"));
           });
  return m;
}

void write_transfers_csv(std::ostream& out, const Schedule& schedule,
                         const TransferMatrix& transfers) {
  out << "flight_i,flight_k,pax\n";
  for (const auto& e : transfers.entries())
    out << schedule[e.i].id << ',' << schedule[e.k].id << ',' << e.pax << '\n';
}

json to_json(const DelayDistribution& d) {
  return {{"mu", d.mu}, {"sigma", d.sigma}, {"shift_c", d.shift_c}};
}

DelayDistribution delay_distribution_from_json(const json& j) {
  DelayDistribution d{number(j, "mu"), number(j, "sigma"), number(j, "shift_c")};
  if (!(d.sigma > 0.0)) throw ParseError("sigma must be positive");
  return d;
}

json to_json(const TurnModel& m) {
  return {{"C", m.fixed_delay_C},
          {"b", m.propagation_ratio_b},
          {"m", m.min_turn_m},
          {"residual_sigma", m.residual_sigma}};
}

TurnModel turn_model_from_json(const json& j) {
  TurnModel m{number(j, "C"), number(j, "b"), number(j, "m"), 0.0};
  if (j.contains("residual_sigma")) m.residual_sigma = number(j, "residual_sigma");
  if (m.residual_sigma < 0.0) throw ParseError("residual_sigma must be >= 0");
  return m;
}

json to_json(const ConflictCurve& c) {
  return {{"a", c.intercept_a},
          {"b", c.base_b},
          {"departure", to_json(c.dep_dist)},
          {"arrival", to_json(c.arr_dist)}};
}

ConflictCurve conflict_curve_from_json(const json& j) {
  ConflictCurve c;
  c.intercept_a = number(j, "a");
  c.base_b = number(j, "b");
  if (!(c.intercept_a >= 0.0) || !(c.base_b > 0.0 && c.base_b < 1.0))
    throw ParseError("conflict curve needs a >= 0 and 0 < b < 1");
  if (j.contains("departure")) c.dep_dist = delay_distribution_from_json(j.at("departure"));
  if (j.contains("arrival")) c.arr_dist = delay_distribution_from_json(j.at("arrival"));
  return c;
}

json to_json(const RampConfig& r) {
  const std::size_t g = r.gate_count();
  json positions = json::array();
  for (const auto& p : r.gate_positions) positions.push_back({p.x, p.y});
  json matrix = json::array();
  for (std::size_t j = 0; j < g; ++j)
    matrix.push_back(std::vector<double>(r.gate_to_gate.begin() + static_cast<std::ptrdiff_t>(j * g),
                                         r.gate_to_gate.begin() + static_cast<std::ptrdiff_t>((j + 1) * g)));
  return {{"layout", to_string(r.layout)},
          {"walk_speed", r.walk_speed},
          {"gate_positions", positions},
          {"checkpoint_dist", r.checkpoint_dist},
          {"baggage_dist", r.baggage_dist},
          {"gate_to_gate", matrix}};
}

RampConfig ramp_from_json(const json& j) {
  RampConfig r;
  try {
    r.layout = j.contains("layout") ? ramp_layout_from_string(j.at("layout").get<std::string>())
                                    : RampLayout::custom;
    r.walk_speed = number(j, "walk_speed");
    r.checkpoint_dist = numbers(j, "checkpoint_dist");
    r.baggage_dist = numbers(j, "baggage_dist");
    if (j.contains("gate_positions"))
      for (const auto& p : j.at("gate_positions")) r.gate_positions.push_back({p.at(0), p.at(1)});
    if (!j.contains("gate_to_gate") || !j.at("gate_to_gate").is_array())
      throw ParseError("missing array field 'gate_to_gate'");
    for (const auto& row : j.at("gate_to_gate"))
      for (const auto& v : row) r.gate_to_gate.push_back(v.get<double>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("ramp: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ramp: ") + e.what());
  }
  r.validate();
  return r;
}

json assignment_to_json(const Schedule& schedule, const Assignment& a) {
  json map = json::object();
  for (std::size_t i = 0; i < schedule.size(); ++i) map[schedule[i].id] = a.gate_of.at(i);
  return {{"gates", schedule.gate_count()}, {"assignment", map}};
}

Assignment assignment_from_json(const json& j, const Schedule& schedule) {
  if (!j.contains("assignment") || !j.at("assignment").is_object())
    throw ParseError("assignment document needs an 'assignment' object");
  Assignment a;
  a.gate_of.assign(schedule.size(), -1);
  for (const auto& [id, gate] : j.at("assignment").items()) {
    const auto idx = schedule.index_of(id);
    if (!idx) throw ParseError("assignment names unknown flight '" + id + "'");
    if (!gate.is_number_integer()) throw ParseError("gate of '" + id + "' is not an integer");
    a.gate_of[*idx] = gate.get<int>();
  }
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (a.gate_of[i] < 0 || a.gate_of[i] >= schedule.gate_count())
      throw IncompleteAssignment("flight " + schedule[i].id + " has no valid gate");
  }
  return a;
}

json to_json(const SimOutcome& s) {
  json gates = json::array();
  for (double v : s.gate_mean_separation)
    gates.push_back(std::isnan(v) ? json(nullptr) : json(v));
  return {{"runs", s.runs.size()},
          {"flights", s.flights},
          {"mean_conflict_minutes", s.mean_conflict_minutes},
          {"std_conflict_minutes", s.std_conflict_minutes},
          {"mean_conflict_count", s.mean_conflict_count},
          {"std_conflict_count", s.std_conflict_count},
          {"conflict_minutes_per_aircraft", s.minutes_per_aircraft},
          {"conflict_count_per_aircraft", s.count_per_aircraft},
          {"gate_mean_separation", gates}};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError(path.string() + ": cannot write");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

}  // namespace gatekit::io
