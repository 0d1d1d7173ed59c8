#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "cli_common.hpp"
#include "gatekit/error.hpp"
#include "gatekit/rng.hpp"

namespace gatekit::cli {
namespace {

std::string scalar_text(const io::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void flatten(const io::json& node, std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& items) {
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      parents.push_back(key);
      flatten(value, parents, items);
      parents.pop_back();
      continue;
    }
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = key;
    if (value.is_array())
      for (const auto& v : value) item.inputs.push_back(scalar_text(v));
    else
      item.inputs.push_back(scalar_text(value));
    items.push_back(std::move(item));
  }
}

io::json option_values(const CLI::App& app, bool default_also) {
  io::json out = io::json::object();
  for (const CLI::Option* opt : app.get_options()) {
    if (!opt->get_configurable() || opt->get_single_name().empty()) continue;
    if (opt->get_single_name() == "help" || opt->get_single_name() == "config") continue;
    const auto& res = opt->results();
    if (!res.empty()) {
      out[opt->get_single_name()] = res.size() == 1 ? io::json(res.front()) : io::json(res);
    } else if (default_also && !opt->get_default_str().empty()) {
      out[opt->get_single_name()] = opt->get_default_str();
    }
  }
  return out;
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool,
                                  std::string) const {
  io::json out = option_values(*app, default_also);
  for (const CLI::App* sub : app->get_subcommands({})) {
    io::json child = option_values(*sub, default_also);
    if (!child.empty()) out[sub->get_name()] = child;
  }
  return out.dump(2) + "\n";
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  io::json doc;
  try {
    input >> doc;
  } catch (const io::json::exception& e) {
    throw CLI::ConversionError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw CLI::ConversionError("config: top level must be an object");
  std::vector<CLI::ConfigItem> items;
  std::vector<std::string> parents;
  flatten(doc, parents, items);
  return items;
}

Run::Run(const Context& ctx, const CLI::App& command)
    : ctx_(ctx), command_(command.get_name()), out_dir_(ctx.out_dir) {
  config_ = option_values(command, true);
  std::filesystem::create_directories(out_dir_);
}

std::uint64_t Run::stage_seed(std::string_view stage) {
  const std::uint64_t s = Rng::derive(ctx_.seed, io::fnv1a64(stage));
  stages_[std::string(stage)] = s;
  return s;
}

std::string Run::read_input(const std::string& path) {
  std::string text = io::read_text(path);
  inputs_.push_back({{"path", path}, {"fnv1a64", io::hex64(io::fnv1a64(text))}});
  return text;
}

io::json Run::read_json_input(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return io::json::parse(text);
  } catch (const io::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void Run::write(const std::string& name, const std::string& content) {
  io::write_text(out_dir_ / name, content);
  outputs_.push_back({{"path", name}, {"fnv1a64", io::hex64(io::fnv1a64(content))}});
  std::cout << "wrote " << (out_dir_ / name).string() << "\n";
}

void Run::finish() {
  io::json manifest = {{"tool", "gatekit"},
                       {"version", GATEKIT_VERSION},
                       {"command", command_},
                       {"seed", ctx_.seed},
                       {"stage_seeds", stages_},
                       {"config", config_},
                       {"inputs", inputs_},
                       {"outputs", outputs_}};
  if (!notes_.empty()) manifest["notes"] = notes_;
  io::write_text(out_dir_ / ("manifest_" + command_ + ".json"), manifest.dump(2) + "\n");
}

Schedule load_schedule(Run& run, const std::string& path, int gates) {
  if (gates <= 0) throw InvalidSchedule("--gates must be a positive gate count");
  std::istringstream in(run.read_input(path));
  io::ScheduleRows rows = io::read_schedule_csv(in, path);
  if (rows.skipped_overnight > 0)
    std::cerr << path << ": skipped " << rows.skipped_overnight << " overnight row(s)\n";
  run.note("skipped_overnight", rows.skipped_overnight);
  return Schedule(std::move(rows.flights), gates);
}

TransferMatrix load_transfers(Run& run, const std::string& path, const Schedule& schedule) {
  if (path.empty()) return {};
  std::istringstream in(run.read_input(path));
  return io::read_transfers_csv(in, schedule, path);
}

void load_delay_model(Run& run, const std::string& path, DelayDistribution& dep,
                      DelayDistribution& arr) {
  dep = DelayDistribution::dtw_departure();
  arr = DelayDistribution::dtw_arrival();
  if (path.empty()) return;
  const io::json j = run.read_json_input(path);
  try {
    dep = io::delay_distribution_from_json(j.at("departure"));
    arr = io::delay_distribution_from_json(j.at("arrival"));
  } catch (const io::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

TurnModel load_turn_model(Run& run, const std::string& path) {
  if (path.empty()) return TurnModel::dtw();
  return io::turn_model_from_json(run.read_json_input(path));
}

ConflictCurve load_curve(Run& run, const std::string& path) {
  if (path.empty()) return ConflictCurve::dtw_reported();
  return io::conflict_curve_from_json(run.read_json_input(path));
}

std::vector<HistogramBin> histogram(const std::vector<double>& values, double width) {
  std::vector<HistogramBin> bins;
  if (values.empty() || !(width > 0.0)) return bins;
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double lo = std::floor(*mn / width) * width;
  const auto n = static_cast<std::size_t>(std::floor((*mx - lo) / width)) + 1;
  bins.resize(n);
  for (std::size_t b = 0; b < n; ++b) {
    bins[b].lo = lo + static_cast<double>(b) * width;
    bins[b].hi = bins[b].lo + width;
  }
  for (double v : values) {
    auto b = static_cast<std::size_t>(std::floor((v - lo) / width));
    ++bins[std::min(b, n - 1)].count;
  }
  return bins;
}

}  // namespace gatekit::cli
