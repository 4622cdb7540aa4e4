#include "hcurve/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcurve/classify.hpp"
#include "hcurve/error.hpp"
#include "hcurve/kernels.hpp"
#include "hcurve/stencil.hpp"

namespace hcurve {

namespace {

// Noise budget for κ: the frame needs k derivatives of the curve and one more of the frame.
constexpr double kInvariantNoise = 1e-8;
// Adjacent frame vectors further apart than this mean the grid does not resolve the frame.
constexpr double kMaxFrameAngle = 0.5;

void project_out(Eigen::VectorXcd& u, const Eigen::MatrixXcd& basis, Eigen::Index count) {
  // Twice is enough (Kahan–Parlett).
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index i = 0; i < count; ++i) u -= basis.col(i).dot(u) * basis.col(i);
  }
}

}  // namespace

void InvariantProfile::validate() const {
  require(n >= 1 && kappa.size() == static_cast<std::size_t>(n), ErrorKind::invalid_argument,
          "InvariantProfile: need n >= 1 curvature arrays");
  require(!s.empty() && tau.size() == s.size(), ErrorKind::invalid_argument, "InvariantProfile: tau length mismatch");
  for (const auto& k : kappa) {
    require(k.size() == s.size(), ErrorKind::invalid_argument, "InvariantProfile: kappa length mismatch");
  }
}

FrameState build_frame(const HorizontalJet& jet, const HPoint& base, double rank_tol) {
  const int n = base.n();
  const int k = jet.order;
  require(k >= 1 && k <= n && jet.n() == n, ErrorKind::invalid_argument,
          "build_frame: jet order must lie in [1, n] and match the base point dimension");
  if (!wronskian_nonzero(jet, rank_tol)) {
    fail(ErrorKind::degeneracy, "build_frame: derivatives beta'..beta^(" + std::to_string(k) +
                                    ") are complex-dependent; classify and reduce the curve first");
  }
  Eigen::MatrixXcd u(n, n);
  Eigen::Index filled = 0;
  for (; filled < k; ++filled) {
    Eigen::VectorXcd v = jet.beta[static_cast<std::size_t>(filled)];
    project_out(v, u, filled);
    const double norm = v.norm();
    require(norm > 0.0, ErrorKind::degeneracy, "build_frame: vanishing Gram-Schmidt residual");
    u.col(filled) = v / norm;
  }
  for (Eigen::Index b = 0; filled < n && b < n; ++b) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Unit(n, b);
    project_out(v, u, filled);
    const double norm = v.norm();
    if (norm > 0.5) u.col(filled++) = v / norm;
  }
  require(filled == n, ErrorKind::conditioning, "build_frame: could not complete the frame");
  FrameState frame{base, realify(u), k};
  const double residual = unitary_residual(frame.e);
  require(residual <= 1e-6, ErrorKind::conditioning,
          "build_frame: frame orthonormality residual " + std::to_string(residual) + " exceeds 1e-6");
  return frame;
}

std::size_t invariant_stride(const SampledCurve& c, int k) {
  return noise_limited_stride(c.params(), k + 1, kInvariantNoise, k + 4);
}

std::vector<FrameState> frames_along(const SampledCurve& c, int k, Execution exec) {
  require(c.is_arclength(), ErrorKind::precondition, "frames_along: curve must be parametrized by horizontal arc length");
  require(k >= 1 && k <= c.n(), ErrorKind::invalid_argument, "frames_along: order must lie in [1, n]");
  std::vector<FrameState> frames = kernels::frames(c, k, invariant_stride(c, k), kRankTol, exec);
  const int n = c.n();
  // Sequential sign-coherence scan.
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    for (int j = 0; j < k; ++j) {
      double cosine = frames[i].e.col(j).dot(frames[i + 1].e.col(j));
      if (cosine < 0.0) {
        frames[i + 1].e.col(j) *= -1.0;
        frames[i + 1].e.col(n + j) *= -1.0;
        cosine = -cosine;
      }
      const double angle = std::acos(std::min(1.0, cosine));
      if (angle > kMaxFrameAngle) {
        fail(ErrorKind::resolution, "frames_along: frame vector e_" + std::to_string(j + 1) + " turns by " +
                                        std::to_string(angle) + " rad between samples " + std::to_string(i) +
                                        " and " + std::to_string(i + 1));
      }
    }
  }
  return frames;
}

InvariantProfile invariants_along(const SampledCurve& c, int k, Execution exec) {
  const std::vector<FrameState> frames = frames_along(c, k, exec);
  const int n = c.n();
  const auto count = static_cast<Eigen::Index>(c.size());

  // fields[j] holds e_{j+1} at every sample.
  std::vector<Eigen::MatrixXd> fields(static_cast<std::size_t>(k), Eigen::MatrixXd(count, 2 * n));
  for (Eigen::Index i = 0; i < count; ++i) {
    for (int j = 0; j < k; ++j) fields[static_cast<std::size_t>(j)].row(i) = frames[static_cast<std::size_t>(i)].e.col(j).transpose();
  }
  const std::vector<Eigen::MatrixXd> derivs = kernels::field_derivatives(c.params(), fields, invariant_stride(c, k), exec);

  InvariantProfile profile;
  profile.n = k;
  profile.s = c.params();
  profile.kappa.assign(static_cast<std::size_t>(k), std::vector<double>(c.size()));
  for (Eigen::Index i = 0; i < count; ++i) {
    const Eigen::MatrixXd& e = frames[static_cast<std::size_t>(i)].e;
    for (int j = 0; j < k; ++j) {
      const Eigen::VectorXd de = derivs[static_cast<std::size_t>(j)].row(i).transpose();
      const Eigen::VectorXd partner = (j + 1 < k) ? Eigen::VectorXd(e.col(j + 1)) : Eigen::VectorXd(e.col(n + j));
      profile.kappa[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = de.dot(partner);
    }
  }
  const std::size_t tau_stride = noise_limited_stride(c.params(), 1, kInvariantNoise, 5);
  profile.tau = kernels::contact_normality(c, tau_stride, exec);
  return profile;
}

Eigen::MatrixXd darboux_matrix(std::span<const double> kappa, double tau) {
  const auto n = static_cast<Eigen::Index>(kappa.size());
  require(n >= 1, ErrorKind::invalid_argument, "darboux_matrix: need at least one curvature");
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(2 * n + 2, 2 * n + 2);
  phi(1, 0) = 1.0;             // ω^1 = ds
  phi(2 * n + 1, 0) = tau;     // ω^{2n+1} = τ ds
  phi(2 * n + 1, n + 1) = -1.0;  // −ω^1 in the last row
  for (Eigen::Index j = 1; j < n; ++j) {
    const double kj = kappa[static_cast<std::size_t>(j - 1)];
    phi(j + 1, j) = kj;
    phi(j, j + 1) = -kj;
    phi(n + j + 1, n + j) = kj;
    phi(n + j, n + j + 1) = -kj;
  }
  const double kn = kappa[static_cast<std::size_t>(n - 1)];
  phi(2 * n, n) = kn;
  phi(n, 2 * n) = -kn;
  return phi;
}

Eigen::MatrixXd darboux_matrix(const InvariantProfile& profile, std::size_t i) {
  profile.validate();
  require(i < profile.size(), ErrorKind::invalid_argument, "darboux_matrix: index out of range");
  std::vector<double> k(static_cast<std::size_t>(profile.n));
  for (std::size_t j = 0; j < k.size(); ++j) k[j] = profile.kappa[j][i];
  return darboux_matrix(k, profile.tau[i]);
}

double ProfileDifference::max() const {
  double m = tau;
  for (double d : kappa) m = std::max(m, d);
  return m;
}

ProfileDifference profile_difference(const InvariantProfile& a, const InvariantProfile& b) {
  a.validate();
  b.validate();
  require(a.n == b.n && a.size() == b.size(), ErrorKind::invalid_argument, "profile_difference: profiles differ in shape");
  ProfileDifference d;
  d.kappa.assign(static_cast<std::size_t>(a.n), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < d.kappa.size(); ++j) d.kappa[j] = std::max(d.kappa[j], std::abs(a.kappa[j][i] - b.kappa[j][i]));
    d.tau = std::max(d.tau, std::abs(a.tau[i] - b.tau[i]));
  }
  return d;
}

}  // namespace hcurve
