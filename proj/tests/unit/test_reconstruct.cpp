#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "layered/errors.hpp"
#include "layered/reconstruct.hpp"

using namespace layered;

namespace {

// Exact cell average of a polynomial in span{1, x, x^2, z, z^2, xz} over
// [x0, x0 + h] x [z0, z0 + h], via the moments of x and x^2.
struct Quadratic {
  double c, a, b, d, e, f;  // c + a x + b x^2 + d z + e z^2 + f x z
  double operator()(double x, double z) const { return c + a * x + b * x * x + d * z + e * z * z + f * x * z; }
  double average(double x0, double z0, double h) const {
    const double mx = x0 + h / 2;
    const double mz = z0 + h / 2;
    const double mxx = mx * mx + h * h / 12;
    const double mzz = mz * mz + h * h / 12;
    return c + a * mx + b * mxx + d * mz + e * mzz + f * mx * mz;
  }
};

Field<1> sample(const Quadratic& q, int n, double h) {
  Field<1> field(n, n);
  for (int j = -2; j < n + 2; ++j) {
    for (int i = -2; i < n + 2; ++i) field.at(i, j) = Vec<1>{{q.average(i * h, j * h, h)}};
  }
  return field;
}

// 5-point Gauss-Legendre on [-1/2, 1/2].
constexpr std::array<double, 5> kNodes = {-0.4530899229693320, -0.2692346550528416, 0.0,
                                          0.2692346550528416, 0.4530899229693320};
constexpr std::array<double, 5> kWeights = {0.1184634425280945, 0.2393143352496832,
                                            0.2844444444444444, 0.2393143352496832,
                                            0.1184634425280945};

}  // namespace

TEST_CASE("weno_1d: constant data gives zero coefficients and linear weights") {
  const Weno1d w = weno_1d(4.0, 4.0, 4.0, 4.0, 4.0);
  CHECK(w.qx == 0.0);
  CHECK(w.qxx == 0.0);
  CHECK(w.weights[0] == doctest::Approx(1.0 / 102.0).epsilon(1e-14));
  CHECK(w.weights[1] == doctest::Approx(100.0 / 102.0).epsilon(1e-14));
  CHECK(w.weights[2] == doctest::Approx(1.0 / 102.0).epsilon(1e-14));
}

TEST_CASE("weno_1d: linear data is reproduced by every stencil") {
  const Weno1d w = weno_1d(-2.0, -1.0, 0.0, 1.0, 2.0);
  CHECK(w.qx == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(w.qxx) < 1e-14);
  for (double is : w.smoothness) CHECK(is == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("weno_1d: global quadratic cell averages are reproduced exactly") {
  // x^2 on unit cells centred at -2..2: averages k^2 + 1/12.
  auto avg = [](double k) { return k * k + 1.0 / 12.0; };
  const Weno1d w = weno_1d(avg(-2), avg(-1), avg(0), avg(1), avg(2));
  CHECK(std::abs(w.qx) < 1e-12);
  CHECK(w.qxx == doctest::Approx(1.0).epsilon(1e-12));
  // Shifted centre: x^2 around x = 3 has slope 6 and curvature 1.
  const Weno1d s = weno_1d(avg(1), avg(2), avg(3), avg(4), avg(5));
  CHECK(s.qx == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(s.qxx == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weno_1d: weights are non-negative and sum to one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int n = 0; n < 1000; ++n) {
    const Weno1d w = weno_1d(u(rng), u(rng), u(rng), u(rng), u(rng));
    double sum = 0.0;
    for (double x : w.weights) {
      REQUIRE(x >= 0.0);
      sum += x;
    }
    REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("weno_1d: a step is reconstructed without new extrema") {
  const std::array<std::array<double, 5>, 4> steps = {{{0, 0, 0, 1, 1},
                                                       {0, 0, 1, 1, 1},
                                                       {1, 1, 0, 0, 0},
                                                       {0, 1, 1, 1, 1}}};
  for (const auto& s : steps) {
    const Weno1d w = weno_1d(s[0], s[1], s[2], s[3], s[4]);
    for (double x : {-0.5, 0.5}) {
      const double v = s[2] + w.qx * x + w.qxx * (x * x - 1.0 / 12.0);
      CHECK(v >= -1e-6);
      CHECK(v <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("weno_cross_term: xz, separable and constant data") {
  // q = x z on unit cells centred at (di, dk): averages di * dk.
  Neighborhood3x3 xz{};
  Neighborhood3x3 sep{};
  Neighborhood3x3 flat{};
  for (int di = -1; di <= 1; ++di) {
    for (int dk = -1; dk <= 1; ++dk) {
      xz[di + 1][dk + 1] = di * dk;
      sep[di + 1][dk + 1] = di * di + dk * dk + 2.0 / 12.0;
      flat[di + 1][dk + 1] = 3.0;
    }
  }
  const CrossTerm a = weno_cross_term(xz, 0.0, 0.0, 0.0, 0.0);
  for (double c : a.candidates) CHECK(c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.qxz == doctest::Approx(1.0).epsilon(1e-12));

  const CrossTerm b = weno_cross_term(sep, 0.0, 0.0, 1.0, 1.0);
  for (double c : b.candidates) CHECK(std::abs(c) < 1e-12);

  const CrossTerm c = weno_cross_term(flat, 0.0, 0.0, 0.0, 0.0);
  CHECK(c.qxz == 0.0);
  for (double is : c.smoothness) CHECK(is == c.smoothness[0]);
  for (double w : c.weights) CHECK(w == doctest::Approx(0.25));
}

TEST_CASE("eval_poly: basis values and bounds") {
  CellPoly p{};
  p.q0 = State5{{2.0, 2.0, 2.0, 2.0, 2.0}};
  CHECK(eval_poly(p, 0.3, -0.2) == p.q0);
  CellPoly px = p;
  px.qx = State5{{1.0, 1.0, 1.0, 1.0, 1.0}};
  CHECK(eval_poly(px, 0.5, 0.0)[0] == doctest::Approx(2.5));
  CellPoly pxx = p;
  pxx.qxx = State5{{1.0, 1.0, 1.0, 1.0, 1.0}};
  CHECK(eval_poly(pxx, 0.5, 0.0)[0] == doctest::Approx(2.0 + 1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(eval_poly(p, 0.6, 0.0), DomainError);
  CHECK_THROWS_AS(eval_poly(p, 0.0, -0.51), DomainError);
}

TEST_CASE("reconstruct_field: uniform and x-linear fields") {
  Field<1> uniform(6, 5);
  for (auto& v : uniform.data()) v = Vec<1>{{7.0}};
  const PolyGrid<1> pu = reconstruct_field(uniform);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 6; ++i) {
      const Poly<1>& p = pu.at(i, j);
      CHECK(p.q0[0] == 7.0);
      CHECK(p.qx[0] == 0.0);
      CHECK(p.qxx[0] == 0.0);
      CHECK(p.qz[0] == 0.0);
      CHECK(p.qzz[0] == 0.0);
      CHECK(p.qxz[0] == 0.0);
    }
  }
  const double h = 0.25;
  const Field<1> linear = sample(Quadratic{1.0, 3.0, 0.0, 0.0, 0.0, 0.0}, 6, h);
  const PolyGrid<1> pl = reconstruct_field(linear);
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) {
      CHECK(pl.at(i, j).qx[0] == doctest::Approx(3.0 * h).epsilon(1e-12));
      CHECK(std::abs(pl.at(i, j).qz[0]) < 1e-12);
      CHECK(std::abs(pl.at(i, j).qxz[0]) < 1e-12);
    }
  }
  CHECK_THROWS_AS(reconstruct_field(Field<1>(4, 4, 1)), ConfigError);
}

TEST_CASE("reconstruct_field: global quadratics with an xz term are reproduced exactly") {
  const double h = 0.1;
  const Quadratic q{0.7, -1.3, 2.1, 0.4, -0.9, 1.7};
  const Field<1> field = sample(q, 6, h);
  const PolyGrid<1> polys = reconstruct_field(field);
  double worst = 0.0;
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) {
      for (double xl : {-0.5, -0.2, 0.0, 0.35, 0.5}) {
        for (double zl : {-0.5, 0.1, 0.5}) {
          const double exact = q((i + 0.5 + xl) * h, (j + 0.5 + zl) * h);
          worst = std::max(worst, std::abs(eval_poly(polys.at(i, j), xl, zl)[0] - exact));
        }
      }
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("reconstruct_field: the polynomial mean equals the cell average") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Field<1> field(5, 5);
  for (auto& v : field.data()) v = Vec<1>{{u(rng)}};
  const PolyGrid<1> polys = reconstruct_field(field);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) {
      double mean = 0.0;
      for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
          mean += kWeights[a] * kWeights[b] * eval_poly(polys.at(i, j), kNodes[a], kNodes[b])[0];
        }
      }
      REQUIRE(mean == doctest::Approx(field.at(i, j)[0]).epsilon(1e-12));
    }
  }
}

TEST_CASE("reconstruct_field: smooth data converges at third order on interfaces") {
  const double two_pi = 2.0 * std::numbers::pi;
  // Cell averages of sin(2 pi x) sin(2 pi z) on the periodic unit square.
  auto average = [&](int i, int k, double h) {
    auto prim = [&](int m) { return -std::cos(two_pi * m * h) / two_pi; };
    return (prim(i + 1) - prim(i)) * (prim(k + 1) - prim(k)) / (h * h);
  };
  std::vector<double> errors;
  for (int n : {16, 32, 64}) {
    const double h = 1.0 / n;
    Field<1> field(n, n);
    for (int j = -2; j < n + 2; ++j) {
      for (int i = -2; i < n + 2; ++i) field.at(i, j) = Vec<1>{{average(i, j, h)}};
    }
    const PolyGrid<1> polys = reconstruct_field(field);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        for (double g : {-0.28867513459481287, 0.28867513459481287}) {
          for (const auto& [xl, zl] : {std::pair{0.5, g}, std::pair{-0.5, g}, std::pair{g, 0.5}, std::pair{g, -0.5}}) {
            const double exact = std::sin(two_pi * (i + 0.5 + xl) * h) * std::sin(two_pi * (j + 0.5 + zl) * h);
            worst = std::max(worst, std::abs(eval_poly(polys.at(i, j), xl, zl)[0] - exact));
          }
        }
      }
    }
    errors.push_back(worst);
  }
  const double order_1 = std::log2(errors[0] / errors[1]);
  const double order_2 = std::log2(errors[1] / errors[2]);
  MESSAGE("interface errors " << errors[0] << " " << errors[1] << " " << errors[2]);
  CHECK(order_1 >= 2.5);
  CHECK(order_2 >= 2.5);
}
