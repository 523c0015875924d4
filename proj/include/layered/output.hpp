#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "layered/coupling.hpp"
#include "layered/diagnostics.hpp"
#include "layered/thermo.hpp"

namespace layered {

inline constexpr const char* kSnapshotHeader = "x,z,layer,rho,u,v,w,theta,theta_pert,pressure";

/// snap_t<seconds, 6 digits zero-padded>.csv
std::string snapshot_file_name(double t);

/// Writes one snapshot CSV: layer-major, then z, then x; 17 significant digits.
/// Layers are numbered from 1. Returns the written path.
std::filesystem::path write_snapshot(const LayerStack& stack, double t,
                                     const std::filesystem::path& dir,
                                     const PhysicalConstants& pc = {});

/// A snapshot as read back from disk.
struct SnapshotRow {
  double x = 0.0;
  double z = 0.0;
  int layer = 1;
  double rho = 0.0, u = 0.0, v = 0.0, w = 0.0, theta = 0.0, theta_pert = 0.0, pressure = 0.0;
};

std::vector<SnapshotRow> read_snapshot(const std::filesystem::path& path);
void write_snapshot_rows(const std::vector<SnapshotRow>& rows, const std::filesystem::path& path);

/// Header line of diagnostics.csv for n layers.
std::string diagnostics_header(int n_layers);

/// Writes diagnostics.csv with one row per record. Returns the written path.
std::filesystem::path write_diagnostics(const std::vector<DiagnosticsRecord>& records,
                                        const std::filesystem::path& dir);

/// %.17g rendering used by every CSV writer.
std::string format_double(double v);

}  // namespace layered
