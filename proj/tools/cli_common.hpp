#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "gatekit/io.hpp"

namespace gatekit::cli {

struct Context {
  std::uint64_t seed = 1;
  std::string out_dir = "out";
};

/// Reads a JSON document into CLI11 config items. Nested objects address
/// subcommands: {"seed": 3, "assign": {"policy": "tabu"}}.
class JsonConfig : public CLI::Config {
public:
  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

/// One command execution: records inputs, outputs and stage seeds, then
/// writes manifest_<command>.json next to the outputs.
class Run {
public:
  Run(const Context& ctx, const CLI::App& command);

  const std::filesystem::path& out_dir() const { return out_dir_; }
  std::uint64_t stage_seed(std::string_view stage);
  std::string read_input(const std::string& path);
  io::json read_json_input(const std::string& path);
  void write(const std::string& name, const std::string& content);
  void note(const std::string& key, io::json value) { notes_[key] = std::move(value); }
  void finish();

private:
  const Context& ctx_;
  std::string command_;
  std::filesystem::path out_dir_;
  io::json config_ = io::json::object();
  io::json inputs_ = io::json::array();
  io::json outputs_ = io::json::array();
  io::json stages_ = io::json::object();
  io::json notes_ = io::json::object();
};

Schedule load_schedule(Run& run, const std::string& path, int gates);
TransferMatrix load_transfers(Run& run, const std::string& path, const Schedule& schedule);
/// {"departure": ..., "arrival": ...}; empty path gives the built-in fits.
void load_delay_model(Run& run, const std::string& path, DelayDistribution& dep,
                      DelayDistribution& arr);
TurnModel load_turn_model(Run& run, const std::string& path);
ConflictCurve load_curve(Run& run, const std::string& path);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

std::vector<HistogramBin> histogram(const std::vector<double>& values, double width);

void add_model_commands(CLI::App& app, Context& ctx);
void add_assign_commands(CLI::App& app, Context& ctx);
void add_pipeline_command(CLI::App& app, Context& ctx);

}  // namespace gatekit::cli
