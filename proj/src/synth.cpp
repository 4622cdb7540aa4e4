#include "hcurve/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcurve/classify.hpp"
#include "hcurve/error.hpp"
#include "hcurve/interp.hpp"
#include "hcurve/stencil.hpp"

namespace hcurve {

namespace {

constexpr double kMaxProjectionCorrection = 1e-6;

void require_uniform(const std::vector<double>& s, const char* what) {
  require(s.size() >= 2, ErrorKind::invalid_argument, std::string(what) + ": need at least two grid points");
  const double h = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
  require(h > 0.0, ErrorKind::invalid_argument, std::string(what) + ": grid must be increasing");
  const double tol = 1e-12 * std::max({1.0, std::abs(s.front()), std::abs(s.back())});
  for (std::size_t i = 0; i < s.size(); ++i) {
    require(std::abs(s[i] - (s.front() + static_cast<double>(i) * h)) <= tol, ErrorKind::invalid_argument,
            std::string(what) + ": grid must be uniform");
  }
}

// Rebuilds a symmetry matrix from a rotation block and point coordinates.
Eigen::MatrixXd assemble(const Eigen::MatrixXd& rotation, const Eigen::VectorXd& xy, double z) {
  const Eigen::Index n = xy.size() / 2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n + 2, 2 * n + 2);
  m(0, 0) = 1.0;
  m.block(1, 0, 2 * n, 1) = xy;
  m.block(1, 1, 2 * n, 2 * n) = rotation;
  m(2 * n + 1, 0) = z;
  Eigen::RowVectorXd w(2 * n);
  w << xy.tail(n).transpose(), -xy.head(n).transpose();
  m.block(2 * n + 1, 1, 1, 2 * n) = w * rotation;
  m(2 * n + 1, 2 * n + 1) = 1.0;
  return m;
}

struct ProfileSampler {
  const InvariantProfile& profile;

  Eigen::MatrixXd at(double s) const {
    std::vector<double> k(static_cast<std::size_t>(profile.n));
    for (std::size_t j = 0; j < k.size(); ++j) k[j] = lagrange_cubic(profile.s, profile.kappa[j], s);
    return darboux_matrix(k, lagrange_cubic(profile.s, profile.tau, s));
  }
};

}  // namespace

double symmetry_matrix_residual(const Eigen::MatrixXd& m) {
  require(m.rows() == m.cols() && m.rows() >= 4 && m.rows() % 2 == 0, ErrorKind::invalid_argument,
          "symmetry_matrix_residual: expected a (2n+2)x(2n+2) matrix");
  const Eigen::Index n = (m.rows() - 2) / 2;
  const Eigen::Index last = 2 * n + 1;
  double r = std::abs(m(0, 0) - 1.0);
  r = std::max(r, m.row(0).tail(last).cwiseAbs().maxCoeff());
  r = std::max(r, m.col(last).head(last).cwiseAbs().maxCoeff());
  r = std::max(r, std::abs(m(last, last) - 1.0));
  const Eigen::MatrixXd rotation = m.block(1, 1, 2 * n, 2 * n);
  r = std::max(r, unitary_residual(rotation));
  const Eigen::MatrixXd rebuilt = assemble(rotation, m.block(1, 0, 2 * n, 1), m(last, 0));
  r = std::max(r, (rebuilt.row(last) - m.row(last)).cwiseAbs().maxCoeff());
  return r;
}

GroupPath integrate_frame_ode(const InvariantProfile& profile, const Eigen::MatrixXd& m0) {
  profile.validate();
  require_uniform(profile.s, "integrate_frame_ode");
  const int n = profile.n;
  require(m0.rows() == 2 * n + 2 && m0.cols() == 2 * n + 2, ErrorKind::invalid_argument,
          "integrate_frame_ode: initial frame has the wrong size for this profile");
  require(symmetry_matrix_residual(m0) <= 1e-10, ErrorKind::invalid_argument,
          "integrate_frame_ode: initial frame is not a symmetry matrix");

  const ProfileSampler sampler{profile};
  const std::size_t count = profile.size();
  GroupPath path;
  path.s = profile.s;
  path.frames.reserve(count);
  path.frames.push_back(m0);

  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double s = profile.s[i];
    const double h = profile.s[i + 1] - s;
    const Eigen::MatrixXd& m = path.frames.back();
    const Eigen::MatrixXd phi0 = darboux_matrix(profile, i);
    const Eigen::MatrixXd phi_half = sampler.at(s + 0.5 * h);
    const Eigen::MatrixXd phi1 = darboux_matrix(profile, i + 1);

    const Eigen::MatrixXd k1 = m * phi0;
    const Eigen::MatrixXd k2 = (m + 0.5 * h * k1) * phi_half;
    const Eigen::MatrixXd k3 = (m + 0.5 * h * k2) * phi_half;
    const Eigen::MatrixXd k4 = (m + h * k3) * phi1;
    const Eigen::MatrixXd next = m + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const Eigen::MatrixXd projected =
        assemble(project_unitary(next.block(1, 1, 2 * n, 2 * n)), next.block(1, 0, 2 * n, 1), next(2 * n + 1, 0));
    const double correction = (projected - next).cwiseAbs().maxCoeff();
    if (correction > kMaxProjectionCorrection) {
      fail(ErrorKind::step_size, "integrate_frame_ode: projection correction " + std::to_string(correction) +
                                     " at s = " + std::to_string(s) + "; reduce the step");
    }
    path.frames.push_back(projected);
  }
  return path;
}

SampledCurve curve_from_path(const GroupPath& path) {
  const int n = path.n();
  require(n >= 1 && path.frames.size() == path.s.size(), ErrorKind::invalid_argument, "curve_from_path: empty path");
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(path.frames.size()), 2 * n + 1);
  for (std::size_t i = 0; i < path.frames.size(); ++i) {
    const Eigen::MatrixXd& m = path.frames[i];
    coords.row(static_cast<Eigen::Index>(i)).head(2 * n) = m.block(1, 0, 2 * n, 1).transpose();
    coords(static_cast<Eigen::Index>(i), 2 * n) = m(2 * n + 1, 0);
  }
  return {n, path.s, std::move(coords), true};
}

SampledCurve synthesize_curve(const InvariantProfile& profile) {
  profile.validate();
  const auto size = 2 * profile.n + 2;
  return curve_from_path(integrate_frame_ode(profile, Eigen::MatrixXd::Identity(size, size)));
}

InvariantProfile resample_profile(const InvariantProfile& profile, double step) {
  profile.validate();
  require(step > 0.0, ErrorKind::invalid_argument, "resample_profile: step must be positive");
  const double a = profile.s.front();
  const double b = profile.s.back();
  const auto intervals = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9));
  require(intervals >= 1, ErrorKind::invalid_argument, "resample_profile: step longer than the profile");
  InvariantProfile out;
  out.n = profile.n;
  out.s.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) out.s[i] = a + static_cast<double>(i) * step;
  out.kappa.assign(static_cast<std::size_t>(profile.n), std::vector<double>(out.s.size()));
  out.tau.resize(out.s.size());
  for (std::size_t i = 0; i < out.s.size(); ++i) {
    for (std::size_t j = 0; j < out.kappa.size(); ++j) out.kappa[j][i] = lagrange_cubic(profile.s, profile.kappa[j], out.s[i]);
    out.tau[i] = lagrange_cubic(profile.s, profile.tau, out.s[i]);
  }
  return out;
}

CongruenceReport compare_curves(const SampledCurve& a, const SampledCurve& b, double tol, Execution exec) {
  require(tol > 0.0, ErrorKind::invalid_argument, "compare_curves: tol must be positive");
  require(a.is_arclength() && b.is_arclength(), ErrorKind::precondition,
          "compare_curves: both curves must be parametrized by horizontal arc length");
  require(a.n() == b.n(), ErrorKind::invalid_argument, "compare_curves: curves live in different H_n");
  require(a.size() == b.size(), ErrorKind::invalid_argument, "compare_curves: grids differ in length");
  const double extent = std::max({1.0, std::abs(a.params().front()), std::abs(a.params().back())});
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(std::abs(a.params()[i] - b.params()[i]) <= 1e-12 * extent, ErrorKind::invalid_argument,
            "compare_curves: curves are sampled on different grids");
  }

  CongruenceReport report;
  report.order_a = curve_order(a, kRankTol, exec).order;
  report.order_b = curve_order(b, kRankTol, exec).order;
  if (report.order_a != report.order_b) return report;

  const int k = report.order_a;
  report.difference = profile_difference(invariants_along(a, k, exec), invariants_along(b, k, exec));
  if (report.difference->max() > tol) return report;

  const FrameState fa = build_frame(derivatives_at(a, 0, k, invariant_stride(a, k)), a.point(0));
  const FrameState fb = build_frame(derivatives_at(b, 0, k, invariant_stride(b, k)), b.point(0));
  const Symmetry g = fb.lift().compose(fa.lift().inverse());
  for (std::size_t i = 0; i < a.size(); ++i) {
    report.alignment_residual = std::max(report.alignment_residual, coord_distance(g(a.point(i)), b.point(i)));
  }
  if (report.alignment_residual > 10.0 * tol) {
    fail(ErrorKind::inconsistency, "compare_curves: invariants agree but the recovered motion misaligns the curves by " +
                                       std::to_string(report.alignment_residual));
  }
  report.motion = g;
  return report;
}

std::optional<Symmetry> congruence_test(const SampledCurve& a, const SampledCurve& b, double tol) {
  return compare_curves(a, b, tol).motion;
}

}  // namespace hcurve
