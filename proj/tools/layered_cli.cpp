#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layered/cases.hpp"
#include "layered/config.hpp"
#include "layered/errors.hpp"
#include "layered/run.hpp"

namespace {

// Turns the trailing `--key value` / `--key=value` arguments into overrides.
std::vector<layered::KeyValue> parse_overrides(const std::vector<std::string>& args) {
  std::vector<layered::KeyValue> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a.rfind("--", 0) != 0 || a.size() == 2) {
      throw layered::ConfigError("unexpected argument '" + a + "'; expected --key value");
    }
    const std::string body = a.substr(2);
    const auto eq = body.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(body.substr(0, eq), body.substr(eq + 1));
    } else if (k + 1 < args.size()) {
      out.emplace_back(body, args[++k]);
    } else {
      throw layered::ConfigError("--" + body + ": missing value");
    }
  }
  return out;
}

void print_catalog() {
  for (const layered::CatalogEntry& e : layered::case_catalog()) {
    const layered::CaseConfig& c = e.config;
    std::cout << layered::to_string(e.id) << ": x=[" << c.x_min << ", " << c.x_max
              << "] ly=" << c.ly << " lz=" << c.lz << " tf=" << c.tf << " grid=" << c.nx << "x"
              << c.nz << " layers=" << c.n_layers << " bc_x=" << layered::to_string(c.bc_x)
              << " snapshots=" << c.snapshot_times.size() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered compressible Euler dynamical core"};
  app.set_version_flag("--version", std::string(layered::version()));
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run a case from a config file");
  std::string config_path;
  run_cmd->add_option("config", config_path, "Config file (key = value per line)")->required();
  run_cmd->allow_extras();
  bool quiet = false;
  run_cmd->add_flag("-q,--quiet", quiet, "Suppress progress output");

  app.add_subcommand("cases", "Print the built-in case catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(layered::ExitStatus::config_error);
  }

  if (app.got_subcommand("cases")) {
    print_catalog();
    return 0;
  }

  layered::RunConfig config;
  try {
    config = layered::parse_config_file(config_path, parse_overrides(run_cmd->remaining()));
  } catch (const layered::ConfigError& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return static_cast<int>(layered::ExitStatus::config_error);
  } catch (const layered::IoError& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return static_cast<int>(layered::ExitStatus::config_error);
  }
  return static_cast<int>(layered::run_with_status(config, std::cerr, quiet ? nullptr : &std::cout));
}
