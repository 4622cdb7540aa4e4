#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

namespace hcurve {

/// Finite-difference weights for the `order`-th derivative at x0 over arbitrary distinct
/// nodes (Fornberg's recursion).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order);

/// Sample indices `first + j*stride`, j = 0..count-1.
struct StencilWindow {
  std::size_t first = 0;
  std::size_t count = 0;
  std::size_t stride = 1;
};

/// Window for the `order`-th derivative at sample i of an N-point grid: a centered window
/// of order+3+(order%2) points (4th-order accurate) where it fits, otherwise a shifted
/// window of order+4 points, truncated to what the grid offers.
StencilWindow stencil_window(std::size_t num_samples, std::size_t i, int order, std::size_t stride);

/// Smallest stride whose spacing keeps the round-off of an `order`-th derivative of
/// O(1) data below `noise_target`, capped so that a `width`-point window still fits.
std::size_t noise_limited_stride(std::span<const double> params, int order, double noise_target, int width);

/// Estimate of the `order`-th derivative at sample i of the rows of `samples`
/// (one row per parameter value).
Eigen::VectorXd differentiate(std::span<const double> params, const Eigen::Ref<const Eigen::MatrixXd>& samples,
                              std::size_t i, int order, std::size_t stride = 1);

/// Grid with `count` equispaced values on [a, b].
std::vector<double> uniform_grid(double a, double b, std::size_t count);

}  // namespace hcurve
