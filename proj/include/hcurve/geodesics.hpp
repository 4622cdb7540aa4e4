#pragma once

#include <Eigen/Dense>
#include <span>

#include "hcurve/curve.hpp"
#include "hcurve/execution.hpp"
#include "hcurve/group.hpp"

namespace hcurve {

/// Horizontal geodesic through (x0, y0, t0) with unit initial horizontal velocity (A, B)
/// solving D_γ′γ′ + 2λ J γ′ = 0, so that β′(s) = (A + iB) e^{−2iλs}.
struct GeodesicSpec {
  int n = 1;
  double lambda = 0.0;
  Eigen::VectorXd x0, y0;
  double t0 = 0.0;
  Eigen::VectorXd A, B;

  /// Origin-based spec with A = e_1, B = 0.
  static GeodesicSpec canonical(int n, double lambda);
  void validate() const;
};

/// sin(2λs)/(2λ), (1 − cos 2λs)/(2λ) and (s − sin(2λs)/(2λ))/(2λ), continuous through λ = 0.
struct GeodesicKernels {
  double sine;
  double versine;
  double vertical;
};
GeodesicKernels geodesic_kernels(double lambda, double s);

namespace detail {
GeodesicKernels geodesic_kernels_series(double lambda, double s);
GeodesicKernels geodesic_kernels_trig(double lambda, double s);
}  // namespace detail

HPoint geodesic_point(const GeodesicSpec& spec, double s);

/// Exact β^(k)(s) = (−2iλ)^{k−1} (A + iB) e^{−2iλs}.
Eigen::VectorXcd geodesic_beta_derivative(const GeodesicSpec& spec, double s, int k);

/// Samples the geodesic on a uniform s-grid; the result is flagged as arc-length parametrized.
SampledCurve geodesic_curve(const GeodesicSpec& spec, std::span<const double> s_grid,
                            Execution exec = Execution::parallel);

}  // namespace hcurve
