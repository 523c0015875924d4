#include "layered/run.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "layered/diagnostics.hpp"
#include "layered/errors.hpp"
#include "layered/integrate.hpp"
#include "layered/output.hpp"

#ifndef LAYERED_VERSION
#define LAYERED_VERSION "0.0.0"
#endif

namespace layered {

namespace fs = std::filesystem;

const char* version() { return LAYERED_VERSION; }

namespace {

std::string utc_timestamp(std::chrono::system_clock::time_point tp) {
  const std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const RunConfig& config, const RunSummary& summary, const fs::path& dir,
                    std::chrono::system_clock::time_point started, double wall_seconds) {
  const CaseConfig& c = config.case_config;
  nlohmann::ordered_json j;
  j["version"] = version();
  j["case"] = {
      {"case", to_string(c.case_id)},
      {"run_variant", to_string(c.run_variant)},
      {"x_min", c.x_min},
      {"x_max", c.x_max},
      {"ly", c.ly},
      {"lz", c.lz},
      {"tf", c.tf},
      {"nx", c.nx},
      {"nz", c.nz},
      {"n_layers", c.n_layers},
      {"cfl", c.cfl},
      {"bc_x", to_string(c.bc_x)},
      {"bc_z", to_string(c.bc_z)},
      {"coupling_form", to_string(c.coupling_form)},
      {"snapshot_times", c.snapshot_times},
      {"output_dir", c.output_dir},
  };
  j["scheme"] = {
      {"epsilon", config.weno.epsilon},
      {"r_exponent", config.weno.r_exponent},
      {"lambda_center", config.weno.lambda_center},
      {"lambda_side", config.weno.lambda_side},
      {"omega", config.flux.omega},
      {"limiter", to_string(config.flux.limiter)},
  };
  nlohmann::ordered_json snaps = nlohmann::ordered_json::array();
  for (const SnapshotEntry& s : summary.snapshots) {
    snaps.push_back({{"file", s.file}, {"scheduled_t", s.scheduled_t}, {"actual_t", s.actual_t}});
  }
  j["snapshots"] = snaps;
  j["diagnostics"] = "diagnostics.csv";
  j["steps"] = summary.steps;
  j["rejections"] = summary.rejections;
  j["low_mach_violations"] = summary.low_mach_violations;
  j["t_final"] = summary.t_final;
  j["wall_clock"] = {{"started_utc", utc_timestamp(started)}, {"elapsed_s", wall_seconds}};

  const fs::path path = dir / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace

RunSummary run(const RunConfig& config, std::ostream* log) {
  const CaseConfig& c = config.case_config;
  c.validate();
  config.weno.validate();
  config.flux.validate();

  const auto started = std::chrono::system_clock::now();
  const auto clock0 = std::chrono::steady_clock::now();

  SolverSetup setup;
  setup.weno = config.weno;
  setup.flux = config.flux;
  setup.coupling = c.coupling_form;
  setup.bc_x = c.bc_x;
  setup.bc_z = c.bc_z;
  const PhysicalConstants& pc = setup.constants;

  LayerStack stack = init_case(c, pc);

  RunSummary summary;
  summary.output_dir = c.output_dir;
  std::error_code ec;
  fs::create_directories(summary.output_dir, ec);
  if (ec) throw IoError("cannot create '" + summary.output_dir.string() + "': " + ec.message());

  std::vector<double> schedule;
  for (double ts : c.snapshot_times) {
    if (ts <= c.tf) schedule.push_back(ts);
  }
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
  std::size_t next = 0;

  double t = 0.0;
  auto take_due_snapshots = [&] {
    while (next < schedule.size() && t >= schedule[next]) {
      const fs::path p = write_snapshot(stack, schedule[next], summary.output_dir, pc);
      summary.snapshots.push_back({schedule[next], t, p.filename().string()});
      ++next;
    }
  };

  std::vector<DiagnosticsRecord> records;
  records.push_back(audit(stack, t, pc));
  take_due_snapshots();

  while (t < c.tf) {
    const double dt = compute_dt(stack, pc, c.cfl);
    const StepResult step = advance(stack, setup, dt);
    t += step.dt_used;
    ++summary.steps;
    summary.rejections += step.rejections;
    summary.low_mach_violations += step.low_mach_violations;
    records.push_back(audit(stack, t, pc));
    take_due_snapshots();
    if (log && summary.steps % 100 == 0) {
      *log << "step " << summary.steps << " t=" << t << " dt=" << step.dt_used << '\n';
    }
  }
  summary.t_final = t;

  write_diagnostics(records, summary.output_dir);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - clock0).count();
  write_manifest(config, summary, summary.output_dir, started, wall);
  if (log && summary.low_mach_violations > 0) {
    *log << "warning: " << summary.low_mach_violations
         << " cell evaluations had |v| >= cs/sqrt(gamma); the y splitting assumes low Mach\n";
  }
  if (log) {
    *log << "done: " << summary.steps << " steps, t=" << t << ", " << summary.snapshots.size()
         << " snapshots in " << summary.output_dir.string() << '\n';
  }
  return summary;
}

ExitStatus run_with_status(const RunConfig& config, std::ostream& err, std::ostream* log) {
  try {
    run(config, log);
    return ExitStatus::ok;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << '\n';
    return ExitStatus::config_error;
  } catch (const StepRejected& e) {
    err << "error: step_rejected: " << e.what() << '\n';
    return ExitStatus::step_rejected;
  } catch (const DomainError& e) {
    err << "error: step_rejected: " << e.what() << '\n';
    return ExitStatus::step_rejected;
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << '\n';
    return ExitStatus::io_error;
  }
}

}  // namespace layered
