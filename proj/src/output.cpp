#include "layered/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "layered/errors.hpp"

namespace layered {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string snapshot_file_name(double t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "snap_t%06ld.csv", static_cast<long>(std::floor(t + 1e-9)));
  return buf;
}

namespace {

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_row(std::ostream& out, const SnapshotRow& r) {
  out << format_double(r.x) << ',' << format_double(r.z) << ',' << r.layer << ','
      << format_double(r.rho) << ',' << format_double(r.u) << ',' << format_double(r.v) << ','
      << format_double(r.w) << ',' << format_double(r.theta) << ','
      << format_double(r.theta_pert) << ',' << format_double(r.pressure) << '\n';
}

}  // namespace

fs::path write_snapshot(const LayerStack& stack, double t, const fs::path& dir,
                        const PhysicalConstants& pc) {
  const fs::path path = dir / snapshot_file_name(t);
  std::ofstream out = open_for_write(path);
  out << kSnapshotHeader << '\n';
  const Grid& g = stack.grid;
  for (int k = 0; k < stack.n_layers(); ++k) {
    const LayerField& layer = stack.layers[k];
    for (int j = 0; j < g.nz; ++j) {
      const double z = g.z_center(j);
      const double theta_bar = stack.background[k].theta(z, pc);
      for (int i = 0; i < g.nx; ++i) {
        const State5& q = layer.at(i, j);
        SnapshotRow r;
        r.x = g.x_center(i);
        r.z = z;
        r.layer = k + 1;
        r.rho = q[kRho];
        r.u = q[kRhoU] / q[kRho];
        r.v = q[kRhoV] / q[kRho];
        r.w = q[kRhoW] / q[kRho];
        r.theta = q[kRhoTheta] / q[kRho];
        r.theta_pert = r.theta - theta_bar;
        r.pressure = pressure(q[kRhoTheta], pc);
        write_row(out, r);
      }
    }
  }
  finish(out, path);
  return path;
}

std::vector<SnapshotRow> read_snapshot(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::string line;
  if (!std::getline(in, line) || line != kSnapshotHeader) {
    throw IoError("'" + path.string() + "' does not start with the snapshot header");
  }
  std::vector<SnapshotRow> rows;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    std::vector<std::string> parts;
    while (std::getline(fields, cell, ',')) parts.push_back(cell);
    if (parts.size() != 10) {
      throw IoError(path.string() + ":" + std::to_string(number) + ": expected 10 columns");
    }
    auto num = [&](std::size_t k) { return std::strtod(parts[k].c_str(), nullptr); };
    SnapshotRow r;
    r.x = num(0);
    r.z = num(1);
    r.layer = std::stoi(parts[2]);
    r.rho = num(3);
    r.u = num(4);
    r.v = num(5);
    r.w = num(6);
    r.theta = num(7);
    r.theta_pert = num(8);
    r.pressure = num(9);
    rows.push_back(r);
  }
  return rows;
}

void write_snapshot_rows(const std::vector<SnapshotRow>& rows, const fs::path& path) {
  std::ofstream out = open_for_write(path);
  out << kSnapshotHeader << '\n';
  for (const SnapshotRow& r : rows) write_row(out, r);
  finish(out, path);
}

std::string diagnostics_header(int n) {
  std::string h = "t,total_mass,total_energy";
  for (const char* prefix : {"energy_l", "theta_min_l", "theta_max_l", "u_min_l", "u_max_l"}) {
    for (int k = 1; k <= n; ++k) h += std::string(",") + prefix + std::to_string(k);
  }
  return h + ",max_abs_dtheta";
}

fs::path write_diagnostics(const std::vector<DiagnosticsRecord>& records, const fs::path& dir) {
  if (records.empty()) throw IoError("write_diagnostics: no records");
  const fs::path path = dir / "diagnostics.csv";
  std::ofstream out = open_for_write(path);
  const int n = static_cast<int>(records.front().energy_per_layer.size());
  out << diagnostics_header(n) << '\n';
  for (const DiagnosticsRecord& r : records) {
    out << format_double(r.t) << ',' << format_double(r.total_mass) << ','
        << format_double(r.total_energy);
    for (const auto* column : {&r.energy_per_layer, &r.theta_min, &r.theta_max, &r.u_min, &r.u_max}) {
      for (double v : *column) out << ',' << format_double(v);
    }
    out << ',' << format_double(r.max_abs_residual_theta) << '\n';
  }
  finish(out, path);
  return path;
}

}  // namespace layered
