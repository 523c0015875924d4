#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "layered/config.hpp"

namespace layered {

/// Exit statuses of a run.
enum class ExitStatus : int { ok = 0, config_error = 1, step_rejected = 2, io_error = 3 };

struct SnapshotEntry {
  double scheduled_t = 0.0;
  double actual_t = 0.0;
  std::string file;  // name relative to the output directory
};

struct RunSummary {
  long steps = 0;
  long rejections = 0;
  long low_mach_violations = 0;
  double t_final = 0.0;
  std::vector<SnapshotEntry> snapshots;
  std::filesystem::path output_dir;
};

/// Integrates a case from t = 0 to tf. Snapshots are written at the first step
/// reaching each scheduled time (dt is never shortened to hit it) and carry the
/// scheduled time in their name; the manifest records the actual time.
/// Writes snapshots, diagnostics.csv and manifest.json into the output directory.
/// Throws ConfigError, StepRejected or IoError. No file is created when the
/// configuration is invalid.
RunSummary run(const RunConfig& config, std::ostream* log = nullptr);

/// Runs and maps failures to an exit status, printing one `error: <kind>: <reason>`
/// line to `err` on failure.
ExitStatus run_with_status(const RunConfig& config, std::ostream& err, std::ostream* log = nullptr);

/// Semantic version compiled into the library.
const char* version();

}  // namespace layered
