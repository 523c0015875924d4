#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "layered/cases.hpp"
#include "layered/diagnostics.hpp"
#include "layered/euler.hpp"

using namespace layered;
using testing_support::uniform_stack;

namespace {

const Grid kSmall{6, 4, 0.0, 0.0, 100.0, 50.0};

}  // namespace

TEST_CASE("audit: identical layers have zero theta residual") {
  const LayerStack init = init_case(default_config(CaseId::bubble));
  LayerStack s = init;
  s.layers[1] = s.layers[0];
  CHECK(audit(s, 0.0).max_abs_residual_theta == 0.0);
  CHECK(audit(init, 0.0).max_abs_residual_theta > 9.0);
}

TEST_CASE("audit: a uniform rest state has theta_min = theta_max per layer") {
  LayerStack s = uniform_stack(kSmall, 3, from_primitive(1.1, 0.0, 0.0, 0.0, 300.0));
  for (int i = 0; i < kSmall.nx; ++i) {
    for (int j = 0; j < kSmall.nz; ++j) s.layers[2].at(i, j) = from_primitive(1.0, 0.0, 0.0, 0.0, 305.0);
  }
  const DiagnosticsRecord r = audit(s, 3.5);
  CHECK(r.t == 3.5);
  REQUIRE(r.theta_min.size() == 3);
  for (int k = 0; k < 2; ++k) {
    CHECK(r.theta_min[k] == r.theta_max[k]);
    CHECK(r.theta_min[k] == doctest::Approx(300.0).epsilon(1e-15));
    CHECK(r.u_min[k] == 0.0);
    CHECK(r.u_max[k] == 0.0);
  }
  CHECK(r.theta_max[2] == doctest::Approx(305.0).epsilon(1e-15));
  CHECK(r.max_abs_residual_theta == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("audit: bubble start peaks near 310 K in layer 1 and 300 K in layer 2") {
  const CaseConfig c = default_config(CaseId::bubble);
  const DiagnosticsRecord r = audit(init_case(c), 0.0);
  // The nearest cell centres sit at (+-62.5, 2000 +- 62.5).
  const double l = std::hypot(62.5, 62.5) / 2000.0;
  const double sampled = 300.0 + 10.0 * std::cos(std::numbers::pi * l / 2.0);
  CHECK(r.theta_max[0] == doctest::Approx(sampled).epsilon(1e-14));
  CHECK(r.theta_max[0] <= 310.0);
  CHECK(r.theta_max[0] >= 309.9);
  CHECK(r.theta_max[1] == doctest::Approx(300.0).epsilon(1e-15));
  CHECK(r.theta_min[0] == doctest::Approx(300.0).epsilon(1e-15));
}

TEST_CASE("audit: extensive totals integrate rho and rho e over dx dz dy") {
  const LayerStack s = init_case(default_config(CaseId::hot_cold));
  const Grid& g = s.grid;
  const double volume = g.dx * g.dz * s.dy();
  double mass = 0.0;
  std::vector<double> energy(2, 0.0);
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < g.nz; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        const State5& q = s.layers[k].at(i, j);
        const double rho = q[kRho];
        const double u = q[kRhoU] / rho;
        const double theta = q[kRhoTheta] / rho;
        const double p = pressure(q[kRhoTheta]);
        const PhysicalConstants pc;
        const double pi = std::pow(p / pc.p0, pc.rd / (pc.rd + pc.cv));
        mass += rho * volume;
        energy[k] += rho * (pc.cv * theta * pi + 0.5 * u * u + pc.g * g.z_center(j)) * volume;
      }
    }
  }
  const DiagnosticsRecord r = audit(s, 0.0);
  CHECK(r.total_mass == doctest::Approx(mass).epsilon(1e-12));
  CHECK(r.energy_per_layer[0] == doctest::Approx(energy[0]).epsilon(1e-12));
  CHECK(r.energy_per_layer[1] == doctest::Approx(energy[1]).epsilon(1e-12));
  CHECK(r.total_energy == r.energy_per_layer[0] + r.energy_per_layer[1]);
  CHECK(conserved_totals(s)[kRho] == doctest::Approx(mass).epsilon(1e-12));
  CHECK(r.u_min[0] == doctest::Approx(20.0).epsilon(1e-15));
  CHECK(r.u_max[1] == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("audit is a pure read of the stack") {
  const LayerStack s = init_case(default_config(CaseId::shear));
  const LayerStack copy = s;
  (void)audit(s, 1.0);
  (void)conserved_totals(s);
  (void)theta_peak_height(s, 0);
  (void)theta_x_asymmetry(s, 1);
  for (std::size_t k = 0; k < s.layers.size(); ++k) CHECK(s.layers[k] == copy.layers[k]);
}

TEST_CASE("theta_x_asymmetry pairs mirrored cells") {
  LayerStack s = uniform_stack(kSmall, 1, from_primitive(1.0, 0.0, 0.0, 0.0, 300.0));
  CHECK(theta_x_asymmetry(s, 0) == 0.0);
  s.layers[0].at(1, 2) = from_primitive(1.0, 0.0, 0.0, 0.0, 300.5);
  CHECK(theta_x_asymmetry(s, 0) == doctest::Approx(0.5).epsilon(1e-12));
  s.layers[0].at(4, 2) = s.layers[0].at(1, 2);
  CHECK(theta_x_asymmetry(s, 0) == 0.0);
}

TEST_CASE("theta_peak_height: exact for a parabola in z") {
  const Grid g{3, 9, 0.0, 0.0, 100.0, 100.0};
  LayerStack s = uniform_stack(g, 1, from_primitive(1.0, 0.0, 0.0, 0.0, 300.0));
  const double z_peak = 437.0;
  for (int j = 0; j < g.nz; ++j) {
    const double dz = (g.z_center(j) - z_peak) / 100.0;
    for (int i = 0; i < g.nx; ++i) {
      s.layers[0].at(i, j) = from_primitive(1.0, 0.0, 0.0, 0.0, 305.0 - (i == 1 ? 1.0 : 2.0) * dz * dz);
    }
  }
  CHECK(theta_peak_height(s, 0) == doctest::Approx(z_peak).epsilon(1e-10));
}
