#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "hcurve/curve.hpp"
#include "hcurve/execution.hpp"
#include "hcurve/frames.hpp"

// Per-sample kernels. Execution::serial is the reference loop; Execution::parallel runs the
// same per-sample body under OpenMP and must produce identical results.
namespace hcurve::kernels {

std::vector<HorizontalJet> jets(const SampledCurve& c, int k, std::size_t stride, Execution exec);

/// Frames at every sample (no sign-coherence pass).
std::vector<FrameState> frames(const SampledCurve& c, int k, std::size_t stride, double rank_tol, Execution exec);

/// First derivative of each sampled vector field; fields[j] is N×d.
std::vector<Eigen::MatrixXd> field_derivatives(std::span<const double> params, const std::vector<Eigen::MatrixXd>& fields,
                                               std::size_t stride, Execution exec);

std::vector<double> wronskian_margins(const SampledCurve& c, int k, std::size_t stride, Execution exec);
std::vector<double> totally_real_margins(const SampledCurve& c, int k, std::size_t stride, Execution exec);

/// T-coefficient of γ′ at every sample.
std::vector<double> contact_normality(const SampledCurve& c, std::size_t stride, Execution exec);

}  // namespace hcurve::kernels
