#include <doctest.h>

#include "hcurve/classify.hpp"
#include "hcurve/error.hpp"
#include "hcurve/geodesics.hpp"
#include "support.hpp"

using namespace hcurve;

namespace {

GeodesicSpec random_spec(testing::Rng& g, int n, double lambda, bool offset) {
  GeodesicSpec s = GeodesicSpec::canonical(n, lambda);
  Eigen::VectorXd ab = testing::random_vector(g, 2 * n);
  ab.normalize();
  s.A = ab.head(n);
  s.B = ab.tail(n);
  if (offset) {
    s.x0 = testing::random_vector(g, n, 2.0);
    s.y0 = testing::random_vector(g, n, 2.0);
    s.t0 = testing::uniform(g, -3, 3);
  }
  return s;
}

}  // namespace

TEST_CASE("straight-line limit") {
  const GeodesicSpec s = GeodesicSpec::canonical(3, 0.0);
  for (double t : {0.0, 0.4, 2.5}) {
    Eigen::VectorXd expect = Eigen::VectorXd::Zero(7);
    expect[0] = t;
    CHECK((geodesic_point(s, t).coords() - expect).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("closed form for lambda = 1 in H1") {
  const GeodesicSpec s = GeodesicSpec::canonical(1, 1.0);
  for (double t = 0.0; t <= 3.0; t += 0.125) {
    const HPoint p = geodesic_point(s, t);
    // β′ = e^{−2is}; z from z′ = y x′ − x y′ = (1 − cos 2s)/2
    CHECK(p.x(0) == doctest::Approx(std::sin(2 * t) / 2).epsilon(1e-14).scale(1));
    CHECK(p.y(0) == doctest::Approx(-(1 - std::cos(2 * t)) / 2).epsilon(1e-14).scale(1));
    CHECK(p.z() == doctest::Approx(t / 2 - std::sin(2 * t) / 4).epsilon(1e-14).scale(1));
  }
}

TEST_CASE("analytic derivatives") {
  auto g = testing::rng(89);
  for (int n = 1; n <= 3; ++n) {
    for (double lambda : {-1.0, 0.0, 0.5, 2.0}) {
      const GeodesicSpec s = random_spec(g, n, lambda, true);
      for (double t = 0.0; t <= 2.0; t += 0.05) {
        const Eigen::VectorXcd d1 = geodesic_beta_derivative(s, t, 1);
        const Eigen::VectorXcd d2 = geodesic_beta_derivative(s, t, 2);
        const Eigen::VectorXcd d3 = geodesic_beta_derivative(s, t, 3);
        CHECK(std::abs(d1.norm() - 1.0) <= 1e-12);
        CHECK(std::abs(d1.dot(d2).real()) <= 1e-12);
        CHECK((d3 + 4 * lambda * lambda * d1).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("points agree with integrating the analytic velocity") {
  auto g = testing::rng(97);
  for (int n = 1; n <= 3; ++n) {
    for (double lambda : {-1.0, 0.3, 2.0}) {
      const GeodesicSpec s = random_spec(g, n, lambda, true);
      // RK4 on (β, z)′ = (β′(s), Σ y x′ − x y′), independent of the closed form.
      const int m = 2000;
      const double L = 1.5, h = L / m;
      Eigen::VectorXcd beta(n);
      for (int j = 0; j < n; ++j) beta[j] = {s.x0[j], s.y0[j]};
      double z = s.t0;
      auto zdot = [&](const Eigen::VectorXcd& b, double t) {
        const Eigen::VectorXcd db = geodesic_beta_derivative(s, t, 1);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += b[j].imag() * db[j].real() - b[j].real() * db[j].imag();
        return acc;
      };
      auto bp = [&](double t) { return geodesic_beta_derivative(s, t, 1); };
      for (int k = 0; k < m; ++k) {
        const double a = k * h;
        const Eigen::VectorXcd k1 = bp(a), k2 = bp(a + h / 2), k4 = bp(a + h);
        const double z1 = zdot(beta, a);
        const double z2 = zdot(beta + h / 2 * k1, a + h / 2);
        const double z3 = zdot(beta + h / 2 * k2, a + h / 2);
        const double z4 = zdot(beta + h * k2, a + h);
        z += h / 6 * (z1 + 2 * z2 + 2 * z3 + z4);
        beta += h / 6 * (k1 + 4 * k2 + k4);
      }
      const HPoint p = geodesic_point(s, L);
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(p.x(j) - beta[j].real()) < 1e-10);
        CHECK(std::abs(p.y(j) - beta[j].imag()) < 1e-10);
      }
      CHECK(std::abs(p.z() - z) < 1e-8);
    }
  }
}

TEST_CASE("sampled geodesics with an offset start are horizontal") {
  auto g = testing::rng(101);
  const auto grid = uniform_grid(0.0, 1.0, 1001);
  for (int n = 1; n <= 3; ++n) {
    const SampledCurve c = geodesic_curve(random_spec(g, n, 1.5, true), grid);
    CHECK(c.is_arclength());
    double worst = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) worst = std::max(worst, std::abs(velocity_decomposition(c, i).t));
    CHECK(worst < 1e-8);
    CHECK(curve_order(c).order == 1);
  }
}

TEST_CASE("continuity through lambda = 0") {
  for (double lambda : {1e-6, -1e-6}) {
    for (double t : {0.1, 1.0, 5.0}) {
      const GeodesicKernels a = detail::geodesic_kernels_series(lambda, t);
      const GeodesicKernels b = detail::geodesic_kernels_trig(lambda, t);
      CHECK(std::abs(a.sine - b.sine) < 1e-12);
      CHECK(std::abs(a.versine - b.versine) < 1e-12);
      // the trig form of the vertical kernel cancels catastrophically here, so compare loosely
      CHECK(std::abs(a.vertical - b.vertical) < 1e-4);
    }
  }
  // where the branches hand over, they agree to rounding
  const double lambda = 0.25, t = 1.0;
  const GeodesicKernels a = detail::geodesic_kernels_series(lambda, t);
  const GeodesicKernels b = detail::geodesic_kernels_trig(lambda, t);
  CHECK(std::abs(a.sine - b.sine) < 1e-15);
  CHECK(std::abs(a.versine - b.versine) < 1e-15);
  CHECK(std::abs(a.vertical - b.vertical) < 1e-14);
  // small λ: vertical kernel ≈ (2λ) s³/6
  const GeodesicKernels k = geodesic_kernels(1e-6, 2.0);
  CHECK(k.vertical == doctest::Approx(2e-6 * 8 / 6).epsilon(1e-10));
  const GeodesicKernels zero = geodesic_kernels(0.0, 2.0);
  CHECK(zero.sine == 2.0);
  CHECK(zero.versine == 0.0);
  CHECK(zero.vertical == 0.0);
}

TEST_CASE("spec validation") {
  GeodesicSpec s = GeodesicSpec::canonical(2, 1.0);
  CHECK_NOTHROW(s.validate());
  s.A[0] = 0.9;
  CHECK_THROWS_AS(s.validate(), Error);
  s = GeodesicSpec::canonical(2, 1.0);
  s.B = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(s.validate(), Error);
}
