#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "hcurve/curve.hpp"
#include "hcurve/execution.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/group.hpp"

namespace hcurve {

/// Lift γ̃(s_i) ∈ PSH(n) as (2n+2)×(2n+2) matrices.
struct GroupPath {
  std::vector<double> s;
  std::vector<Eigen::MatrixXd> frames;

  int n() const { return frames.empty() ? 0 : static_cast<int>(frames.front().rows() - 2) / 2; }
};

/// Worst violation of the symmetry-matrix structure: top row, last column, unitarity of the
/// rotation block, and the last row implied by the translation.
double symmetry_matrix_residual(const Eigen::MatrixXd& m);

/// Solves M′ = M·φ(s) from M(s_0) = m0 with classical RK4 at the profile step, restoring
/// exact group membership after every step.
GroupPath integrate_frame_ode(const InvariantProfile& profile, const Eigen::MatrixXd& m0);

/// γ(s) read off column 0 of the lift.
SampledCurve curve_from_path(const GroupPath& path);

/// Canonical curve (γ(0) = 0, e_j(0) = e̊_j) with the given invariants.
SampledCurve synthesize_curve(const InvariantProfile& profile);

/// Profile interpolated (cubic) onto a uniform grid of the given step over its own s-range.
InvariantProfile resample_profile(const InvariantProfile& profile, double step);

struct CongruenceReport {
  int order_a = 0;
  int order_b = 0;
  /// Filled when both curves have the same order.
  std::optional<ProfileDifference> difference;
  std::optional<Symmetry> motion;
  double alignment_residual = 0.0;

  bool congruent() const { return motion.has_value(); }
};

/// Compares invariants at the common order; when they agree within tol, recovers
/// g = M̃_b(s_0)·M̃_a(s_0)⁻¹ and checks sup_s |g(γ_a) − γ_b| ≤ 10·tol.
CongruenceReport compare_curves(const SampledCurve& a, const SampledCurve& b, double tol = 1e-6,
                                Execution exec = Execution::parallel);

std::optional<Symmetry> congruence_test(const SampledCurve& a, const SampledCurve& b, double tol = 1e-6);

}  // namespace hcurve
