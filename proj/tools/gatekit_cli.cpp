#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "gatekit/error.hpp"

int main(int argc, char** argv) {
  using namespace gatekit;
  CLI::App app{"Robust gate assignment toolkit", "gatekit"};
  app.set_version_flag("--version", GATEKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  cli::Context ctx;
  app.add_option("--seed", ctx.seed, "Master seed; every stage derives its own stream")
      ->capture_default_str();
  app.add_option("--out-dir", ctx.out_dir, "Directory for outputs and manifests")
      ->capture_default_str();
  app.set_config("--config", "", "JSON file with option values");
  app.config_formatter(std::make_shared<cli::JsonConfig>());

  cli::add_model_commands(app, ctx);
  cli::add_assign_commands(app, ctx);
  cli::add_pipeline_command(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "gatekit: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
