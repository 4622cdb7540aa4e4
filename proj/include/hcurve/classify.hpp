#pragma once

#include <cstddef>
#include <vector>

#include "hcurve/curve.hpp"
#include "hcurve/execution.hpp"
#include "hcurve/group.hpp"

namespace hcurve {

/// σ_k / max(σ_1, 1) for the complex n×k matrix [β′ … β^(k)].
double wronskian_margin(const HorizontalJet& jet);
/// β′ ∧ … ∧ β^(k) ≠ 0 as a relative complex-rank test.
bool wronskian_nonzero(const HorizontalJet& jet, double tol);

/// σ_2k / max(σ_1, 1) for the real 2n×2k matrix [v_1..v_k, Jv_1..Jv_k]; 0 when 2k > 2n.
double totally_real_margin(const HorizontalJet& jet);
bool totally_real(const HorizontalJet& jet, double tol);

/// Stride for rank tests of order k: keeps finite-difference round-off three decades below tol.
std::size_t rank_stride(const SampledCurve& c, int k, double tol);

struct OrderReport {
  int n = 0;
  int order = 0;
  /// margins[k-1]: worst σ_k / max(σ_1, 1) over the grid.
  std::vector<double> margins;
  bool totally_real = false;
  bool nondegenerate = false;
};

/// Largest k whose Wronskian test passes at every sample (descending scan k = n..1).
OrderReport curve_order(const SampledCurve& c, double tol = 1e-8, Execution exec = Execution::parallel);

struct Reduction {
  Symmetry motion;
  SampledCurve curve;     // motion ∘ c, still in H_n
  int order = 0;
  double residual = 0.0;  // sup over the grid of the rotated-out coordinates
  std::vector<double> residual_profile;
};

/// Moves a degenerate curve of order k < n into H_k ⊂ H_n: left-translate γ(0) to the
/// origin, then rotate span_C{β′(0)..β^(k)(0)} onto ℂ^k.
Reduction reduce_degenerate(const SampledCurve& c, double tol = 1e-8, Execution exec = Execution::parallel);

/// Drop the last n−k complex coordinates of a curve lying in H_k ⊂ H_n.
SampledCurve restrict_to_subgroup(const SampledCurve& c, int k);

/// Embed an H_k curve into H_n (n ≥ k) with zero extra coordinates.
SampledCurve embed_in(const SampledCurve& c, int n);

}  // namespace hcurve
