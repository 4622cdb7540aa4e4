#include "hcurve/geodesics.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "hcurve/error.hpp"
#include "parallel.hpp"

namespace hcurve {

namespace {

// Below |2λs| = 0.5 the trigonometric forms lose digits to cancellation.
constexpr double kSeriesThreshold = 0.5;

}  // namespace

GeodesicSpec GeodesicSpec::canonical(int n, double lambda) {
  GeodesicSpec spec;
  spec.n = n;
  spec.lambda = lambda;
  spec.x0 = Eigen::VectorXd::Zero(n);
  spec.y0 = Eigen::VectorXd::Zero(n);
  spec.A = Eigen::VectorXd::Unit(n, 0);
  spec.B = Eigen::VectorXd::Zero(n);
  return spec;
}

void GeodesicSpec::validate() const {
  require(n >= 1, ErrorKind::invalid_argument, "GeodesicSpec: n must be positive");
  require(x0.size() == n && y0.size() == n && A.size() == n && B.size() == n, ErrorKind::invalid_argument,
          "GeodesicSpec: x0, y0, A, B must have length n");
  require(std::isfinite(lambda) && std::isfinite(t0), ErrorKind::invalid_argument, "GeodesicSpec: non-finite parameters");
  const double speed = A.squaredNorm() + B.squaredNorm();
  require(std::abs(speed - 1.0) <= 1e-12, ErrorKind::invalid_argument,
          "GeodesicSpec: initial horizontal velocity must have unit length");
}

namespace detail {

GeodesicKernels geodesic_kernels_series(double lambda, double s) {
  // With u = 2λs: sin(u)/u, (1 − cos u)/u and (u − sin u)/u², each as an alternating series.
  const double u = 2.0 * lambda * s;
  const double u2 = u * u;
  double sinc = 0.0, vers = 0.0, vert = 0.0;
  double t_sinc = 1.0;          // u^{2m}/(2m+1)!
  double t_vers = 0.5 * u;      // u^{2m+1}/(2m+2)!
  double t_vert = u / 6.0;      // u^{2m+1}/(2m+3)!
  for (int m = 0; m < 40; ++m) {
    sinc += t_sinc;
    vers += t_vers;
    vert += t_vert;
    if (std::abs(t_sinc) <= 1e-18 * std::abs(sinc) && std::abs(t_vers) <= 1e-18 * std::abs(vers) + 1e-300 &&
        std::abs(t_vert) <= 1e-18 * std::abs(vert) + 1e-300) {
      break;
    }
    const double a = 2.0 * m + 2.0;
    t_sinc *= -u2 / (a * (a + 1.0));
    t_vers *= -u2 / ((a + 1.0) * (a + 2.0));
    t_vert *= -u2 / ((a + 2.0) * (a + 3.0));
  }
  return {s * sinc, s * vers, s * s * vert};
}

GeodesicKernels geodesic_kernels_trig(double lambda, double s) {
  const double w = 2.0 * lambda;
  const double u = w * s;
  const double sine = std::sin(u) / w;
  const double half = std::sin(0.5 * u);
  return {sine, 2.0 * half * half / w, (s - sine) / w};
}

}  // namespace detail

GeodesicKernels geodesic_kernels(double lambda, double s) {
  if (std::abs(2.0 * lambda * s) < kSeriesThreshold) return detail::geodesic_kernels_series(lambda, s);
  return detail::geodesic_kernels_trig(lambda, s);
}

HPoint geodesic_point(const GeodesicSpec& spec, double s) {
  const int n = spec.n;
  const GeodesicKernels k = geodesic_kernels(spec.lambda, s);
  Eigen::VectorXd x(n), y(n);
  double z = spec.t0 + k.vertical;
  for (int j = 0; j < n; ++j) {
    const double a = spec.A[j];
    const double b = spec.B[j];
    x[j] = spec.x0[j] + a * k.sine + b * k.versine;
    y[j] = spec.y0[j] - a * k.versine + b * k.sine;
    z += (a * spec.x0[j] + b * spec.y0[j]) * k.versine - (b * spec.x0[j] - a * spec.y0[j]) * k.sine;
  }
  return {x, y, z};
}

Eigen::VectorXcd geodesic_beta_derivative(const GeodesicSpec& spec, double s, int k) {
  require(k >= 1, ErrorKind::invalid_argument, "geodesic_beta_derivative: k must be positive");
  const std::complex<double> rate(0.0, -2.0 * spec.lambda);
  const std::complex<double> factor = std::pow(rate, k - 1) * std::exp(rate * s);
  Eigen::VectorXcd c(spec.n);
  for (int j = 0; j < spec.n; ++j) c[j] = factor * std::complex<double>(spec.A[j], spec.B[j]);
  return c;
}

SampledCurve geodesic_curve(const GeodesicSpec& spec, std::span<const double> s_grid, Execution exec) {
  spec.validate();
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(s_grid.size()), 2 * spec.n + 1);
  detail::for_each_index(s_grid.size(), exec, [&](std::size_t i) {
    coords.row(static_cast<Eigen::Index>(i)) = geodesic_point(spec, s_grid[i]).coords().transpose();
  });
  return {spec.n, std::vector<double>(s_grid.begin(), s_grid.end()), std::move(coords), true};
}

}  // namespace hcurve
