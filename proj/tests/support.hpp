#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "hcurve/classify.hpp"
#include "hcurve/curve.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/group.hpp"
#include "hcurve/stencil.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline Rng rng(unsigned seed = 20240611u) { return Rng(seed); }

inline double uniform(Rng& g, double a = -1.0, double b = 1.0) { return std::uniform_real_distribution<double>(a, b)(g); }

inline Eigen::VectorXd random_vector(Rng& g, int size, double scale = 1.0) {
  Eigen::VectorXd v(size);
  for (int i = 0; i < size; ++i) v[i] = scale * uniform(g);
  return v;
}

inline hcurve::HPoint random_point(Rng& g, int n, double scale = 1.0) {
  return hcurve::HPoint::from_coords(random_vector(g, 2 * n + 1, scale));
}

// Haar-ish unitary: QR of a complex Gaussian matrix with the phases of R's diagonal removed.
inline Eigen::MatrixXcd random_unitary_complex(Rng& g, int n) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {normal(g), normal(g)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Eigen::MatrixXd random_unitary(Rng& g, int n) { return hcurve::realify(random_unitary_complex(g, n)); }

inline hcurve::Symmetry random_symmetry(Rng& g, int n, double scale = 1.0) {
  return {random_unitary(g, n), random_point(g, n, scale)};
}

// Samples t ↦ f(t) ∈ R^{2n+1} on a uniform grid.
inline hcurve::SampledCurve sample_curve(int n, double a, double b, std::size_t count,
                                         const std::function<Eigen::VectorXd(double)>& f, bool arclength = false) {
  const auto t = hcurve::uniform_grid(a, b, count);
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(count), 2 * n + 1);
  for (std::size_t i = 0; i < count; ++i) coords.row(static_cast<Eigen::Index>(i)) = f(t[i]).transpose();
  return {n, t, coords, arclength};
}

// Horizontal lift of a planar curve β: z′ = Σ (y x′ − x y′), integrated exactly for polynomial data
// by the caller; this helper takes β, β′ and integrates z with composite Simpson on a fine subgrid.
inline hcurve::SampledCurve horizontal_lift(int n, double a, double b, std::size_t count,
                                            const std::function<Eigen::VectorXcd(double)>& beta,
                                            const std::function<Eigen::VectorXcd(double)>& dbeta, double z0 = 0.0) {
  auto zdot = [&](double t) {
    const Eigen::VectorXcd p = beta(t), v = dbeta(t);
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += p[j].imag() * v[j].real() - p[j].real() * v[j].imag();
    return s;
  };
  const auto t = hcurve::uniform_grid(a, b, count);
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(count), 2 * n + 1);
  double z = z0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      const int m = 16;
      const double h = (t[i] - t[i - 1]) / m;
      double acc = zdot(t[i - 1]) + zdot(t[i]);
      for (int q = 1; q < m; ++q) acc += (q % 2 ? 4.0 : 2.0) * zdot(t[i - 1] + q * h);
      z += acc * h / 3.0;
    }
    const Eigen::VectorXcd p = beta(t[i]);
    for (int j = 0; j < n; ++j) {
      coords(static_cast<Eigen::Index>(i), j) = p[j].real();
      coords(static_cast<Eigen::Index>(i), n + j) = p[j].imag();
    }
    coords(static_cast<Eigen::Index>(i), 2 * n) = z;
  }
  return {n, t, coords, false};
}

inline hcurve::InvariantProfile make_profile(int n, double s_max, double step,
                                             const std::function<std::vector<double>(double)>& kappa,
                                             const std::function<double(double)>& tau) {
  hcurve::InvariantProfile p;
  p.n = n;
  const auto count = static_cast<std::size_t>(std::llround(s_max / step)) + 1;
  p.s = hcurve::uniform_grid(0.0, s_max, count);
  p.kappa.assign(static_cast<std::size_t>(n), {});
  for (double s : p.s) {
    const auto k = kappa(s);
    for (int j = 0; j < n; ++j) p.kappa[static_cast<std::size_t>(j)].push_back(k[static_cast<std::size_t>(j)]);
    p.tau.push_back(tau(s));
  }
  return p;
}

inline hcurve::InvariantProfile profile_n2(double step = 1e-3) {
  return make_profile(
      2, 1.0, step, [](double s) { return std::vector<double>{1.0 + 0.3 * std::sin(s), 0.5 * std::cos(s)}; },
      [](double s) { return 0.2 * s; });
}

inline hcurve::InvariantProfile profile_n3(double step = 1e-3) {
  return make_profile(
      3, 1.0, step,
      [](double s) {
        return std::vector<double>{0.8 + 0.2 * std::cos(s), 0.6 + 0.1 * s, -0.4 + 0.3 * std::sin(2.0 * s)};
      },
      [](double s) { return 0.1 * std::cos(s); });
}

inline double curve_distance(const hcurve::SampledCurve& a, const hcurve::SampledCurve& b) {
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

inline double sup_abs(const std::vector<double>& v, double offset = 0.0) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x - offset));
  return m;
}

}  // namespace testing
