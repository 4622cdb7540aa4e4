#include "hcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcurve/error.hpp"
#include "hcurve/interp.hpp"
#include "hcurve/stencil.hpp"

namespace hcurve {

SampledCurve::SampledCurve(int n, std::vector<double> params, Eigen::MatrixXd coords, bool is_arclength)
    : n_(n), params_(std::move(params)), coords_(std::move(coords)), is_arclength_(is_arclength) {
  require(n_ >= 1, ErrorKind::invalid_argument, "SampledCurve: n must be positive");
  require(params_.size() >= kMinSamples, ErrorKind::invalid_argument,
          "SampledCurve: need at least " + std::to_string(kMinSamples) + " samples");
  require(static_cast<std::size_t>(coords_.rows()) == params_.size() && coords_.cols() == 2 * n_ + 1,
          ErrorKind::invalid_argument, "SampledCurve: coordinate array must be N x (2n+1)");
  require(coords_.allFinite(), ErrorKind::invalid_argument, "SampledCurve: non-finite coordinates");
  for (std::size_t i = 0; i + 1 < params_.size(); ++i) {
    require(std::isfinite(params_[i]) && params_[i + 1] > params_[i], ErrorKind::invalid_argument,
            "SampledCurve: parameters must be strictly increasing");
  }
  if (is_arclength_) {
    const double s0 = params_.front();
    const double h = (params_.back() - s0) / static_cast<double>(params_.size() - 1);
    const double tol = 1e-12 * std::max({1.0, std::abs(s0), std::abs(params_.back())});
    for (std::size_t i = 0; i < params_.size(); ++i) {
      require(std::abs(params_[i] - (s0 + static_cast<double>(i) * h)) <= tol, ErrorKind::invalid_argument,
              "SampledCurve: arc-length curves need a uniform grid");
    }
  }
}

HPoint SampledCurve::point(std::size_t i) const { return HPoint::from_coords(coords_.row(static_cast<Eigen::Index>(i)).transpose()); }

Eigen::VectorXcd SampledCurve::beta(std::size_t i) const {
  const auto row = coords_.row(static_cast<Eigen::Index>(i));
  Eigen::VectorXcd b(n_);
  for (int j = 0; j < n_; ++j) b[j] = {row[j], row[n_ + j]};
  return b;
}

Eigen::MatrixXcd HorizontalJet::matrix() const {
  Eigen::MatrixXcd m(n(), order);
  for (int k = 0; k < order; ++k) m.col(k) = beta[static_cast<std::size_t>(k)];
  return m;
}

Eigen::VectorXd real_image(const Eigen::VectorXcd& v) {
  Eigen::VectorXd r(2 * v.size());
  r << v.real(), v.imag();
  return r;
}

Eigen::VectorXcd complex_image(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size() / 2;
  Eigen::VectorXcd c(n);
  c.real() = v.head(n);
  c.imag() = v.tail(n);
  return c;
}

double tau_from_velocity(const Eigen::VectorXd& point, const Eigen::VectorXd& velocity) {
  const Eigen::Index n = (point.size() - 1) / 2;
  double tau = velocity[2 * n];
  for (Eigen::Index j = 0; j < n; ++j) tau += point[j] * velocity[n + j] - point[n + j] * velocity[j];
  return tau;
}

HorizontalJet derivatives_at(const SampledCurve& c, std::size_t i, int k, std::size_t stride) {
  const auto max_order = static_cast<int>(std::min<std::size_t>(6, c.size() - 1));
  require(k >= 1 && k <= max_order, ErrorKind::invalid_argument,
          "derivatives_at: derivative order " + std::to_string(k) + " not supported on this grid");
  require(i < c.size(), ErrorKind::invalid_argument, "derivatives_at: index out of range");
  const int n = c.n();
  HorizontalJet jet;
  jet.order = k;
  jet.beta.reserve(static_cast<std::size_t>(k));
  const auto xy = c.coords().leftCols(2 * n);
  for (int m = 1; m <= k; ++m) jet.beta.push_back(complex_image(differentiate(c.params(), xy, i, m, stride)));
  const Eigen::VectorXd velocity = differentiate(c.params(), c.coords(), i, 1, stride);
  jet.tau = tau_from_velocity(c.coords().row(static_cast<Eigen::Index>(i)).transpose(), velocity);
  return jet;
}

TangentVector velocity_decomposition(const SampledCurve& c, std::size_t i) {
  require(i < c.size(), ErrorKind::invalid_argument, "velocity_decomposition: index out of range");
  const Eigen::VectorXd velocity = differentiate(c.params(), c.coords(), i, 1);
  const Eigen::VectorXd point = c.coords().row(static_cast<Eigen::Index>(i)).transpose();
  return {c.point(i), velocity.head(2 * c.n()), tau_from_velocity(point, velocity)};
}

std::vector<double> horizontal_speeds(const SampledCurve& c) {
  std::vector<double> speeds(c.size());
  const auto xy = c.coords().leftCols(2 * c.n());
  for (std::size_t i = 0; i < c.size(); ++i) speeds[i] = differentiate(c.params(), xy, i, 1).norm();
  return speeds;
}

bool is_horizontally_regular(const SampledCurve& c, double tol) {
  require(tol > 0.0, ErrorKind::invalid_argument, "is_horizontally_regular: tol must be positive");
  const auto speeds = horizontal_speeds(c);
  return *std::min_element(speeds.begin(), speeds.end()) > tol;
}

SampledCurve arclength_reparametrize(const SampledCurve& c, std::size_t samples, double tol) {
  require(samples >= kMinSamples, ErrorKind::invalid_argument, "arclength_reparametrize: too few output samples");
  const std::vector<double>& t = c.params();
  const std::size_t count = c.size();
  const std::vector<double> speed = horizontal_speeds(c);
  const double min_speed = *std::min_element(speed.begin(), speed.end());
  require(min_speed > tol, ErrorKind::precondition,
          "arclength_reparametrize: curve is not horizontally regular (min |beta'| = " + std::to_string(min_speed) + ")");

  // Composite Simpson per interval; the midpoint speed comes from cubic interpolation of the node speeds.
  std::vector<double> arc(count, 0.0);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double mid = 0.5 * (t[i] + t[i + 1]);
    const double mid_speed = lagrange_cubic(t, speed, mid);
    arc[i + 1] = arc[i] + (t[i + 1] - t[i]) / 6.0 * (speed[i] + 4.0 * mid_speed + speed[i + 1]);
  }

  std::vector<double> dt_ds(count);
  for (std::size_t i = 0; i < count; ++i) dt_ds[i] = 1.0 / speed[i];
  dt_ds = monotone_slopes(arc, t, std::move(dt_ds));

  Eigen::MatrixXd velocity(static_cast<Eigen::Index>(count), c.coords().cols());
  for (std::size_t i = 0; i < count; ++i) velocity.row(static_cast<Eigen::Index>(i)) = differentiate(t, c.coords(), i, 1).transpose();

  const double length = arc.back();
  std::vector<double> s_grid = uniform_grid(0.0, length, samples);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(samples), c.coords().cols());
  for (std::size_t j = 0; j < samples; ++j) {
    const double s = s_grid[j];
    const std::size_t i = locate_interval(arc, s);
    const double tj = hermite(arc[i], arc[i + 1], t[i], t[i + 1], dt_ds[i], dt_ds[i + 1], s);
    for (Eigen::Index col = 0; col < out.cols(); ++col) {
      const auto a = static_cast<Eigen::Index>(i);
      out(static_cast<Eigen::Index>(j), col) = hermite(t[i], t[i + 1], c.coords()(a, col), c.coords()(a + 1, col),
                                                       velocity(a, col), velocity(a + 1, col), tj);
    }
  }
  return {c.n(), std::move(s_grid), std::move(out), true};
}

SampledCurve transform_curve(const Symmetry& phi, const SampledCurve& c) {
  require(phi.n() == c.n(), ErrorKind::invalid_argument, "transform_curve: dimension mismatch");
  Eigen::MatrixXd out(c.coords().rows(), c.coords().cols());
  for (std::size_t i = 0; i < c.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = phi(c.point(i)).coords().transpose();
  return {c.n(), c.params(), std::move(out), c.is_arclength()};
}

SampledCurve reverse_curve(const SampledCurve& c) {
  const std::size_t count = c.size();
  std::vector<double> params(count);
  Eigen::MatrixXd out(c.coords().rows(), c.coords().cols());
  const double a = c.params().front();
  const double b = c.params().back();
  for (std::size_t i = 0; i < count; ++i) {
    params[i] = a + b - c.params()[count - 1 - i];
    out.row(static_cast<Eigen::Index>(i)) = c.coords().row(static_cast<Eigen::Index>(count - 1 - i));
  }
  return {c.n(), std::move(params), std::move(out), c.is_arclength()};
}

}  // namespace hcurve
