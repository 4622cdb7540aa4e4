#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "hcurve/curve.hpp"
#include "hcurve/execution.hpp"
#include "hcurve/group.hpp"

namespace hcurve {

inline constexpr double kRankTol = 1e-8;

/// Lifted frame (γ; e_1..e_2n, T). Column a of `e` holds the e̊-coefficients of e_{a+1};
/// e_{n+j} = J₀ e_j, so `e` is a J-commuting orthogonal matrix.
struct FrameState {
  HPoint base;
  Eigen::MatrixXd e;
  /// Number of frame vectors e_1..e_order adapted to the curve; the rest complete the basis.
  int order = 0;

  int n() const { return base.n(); }
  Symmetry lift() const { return {e, base}; }
};

/// Sampled p-curvatures κ_1..κ_n and contact normality τ.
struct InvariantProfile {
  int n = 0;
  std::vector<double> s;
  std::vector<std::vector<double>> kappa;  // kappa[j][i] = κ_{j+1}(s_i)
  std::vector<double> tau;

  std::size_t size() const { return s.size(); }
  /// Throws invalid_argument unless every array has the grid length and n ≥ 1.
  void validate() const;
};

/// Hermitian Gram–Schmidt frame from a jet: e_k is β^(k) with the spans of e_i and J e_i
/// (i < k) projected out, so ⟨e_k, β^(k)⟩ > 0. Vectors past the jet order are completed
/// from the standard basis.
FrameState build_frame(const HorizontalJet& jet, const HPoint& base, double rank_tol = kRankTol);

/// Stride used for frame construction and differentiation at order k.
std::size_t invariant_stride(const SampledCurve& c, int k);

/// Frames along a unit-speed curve at order k with signs made coherent between neighbours.
std::vector<FrameState> frames_along(const SampledCurve& c, int k, Execution exec = Execution::parallel);

/// κ_j = ⟨e_j′, e_{j+1}⟩ (j < k), κ_k = ⟨e_k′, J e_k⟩, τ = T-coefficient of γ′.
InvariantProfile invariants_along(const SampledCurve& c, int k, Execution exec = Execution::parallel);

/// Darboux derivative φ(s) with γ̃*ω = φ ds, for invariants κ (length n) and τ at one point.
Eigen::MatrixXd darboux_matrix(std::span<const double> kappa, double tau);
Eigen::MatrixXd darboux_matrix(const InvariantProfile& profile, std::size_t i);

/// Largest entrywise difference between two profiles on the same grid.
struct ProfileDifference {
  std::vector<double> kappa;  // sup |Δκ_j|
  double tau = 0.0;
  double max() const;
};
ProfileDifference profile_difference(const InvariantProfile& a, const InvariantProfile& b);

}  // namespace hcurve
