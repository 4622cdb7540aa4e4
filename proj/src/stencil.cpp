#include "hcurve/stencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hcurve/error.hpp"

namespace hcurve {

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int order) {
  const auto count = static_cast<int>(nodes.size());
  require(order >= 0 && count > order, ErrorKind::invalid_argument, "fd_weights: need more nodes than the derivative order");
  // delta[m][j]: weight of node j for the m-th derivative using the nodes seen so far.
  std::vector<std::vector<double>> delta(order + 1, std::vector<double>(count, 0.0));
  delta[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  for (int i = 1; i < count; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      require(c3 != 0.0, ErrorKind::invalid_argument, "fd_weights: nodes must be distinct");
      c2 *= c3;
      if (j == i - 1) {
        for (int m = mn; m >= 1; --m) delta[m][i] = c1 * (m * delta[m - 1][i - 1] - c5 * delta[m][i - 1]) / c2;
        delta[0][i] = -c1 * c5 * delta[0][i - 1] / c2;
      }
      for (int m = mn; m >= 1; --m) delta[m][j] = (c4 * delta[m][j] - m * delta[m - 1][j]) / c3;
      delta[0][j] = c4 * delta[0][j] / c3;
    }
    c1 = c2;
  }
  return delta[order];
}

StencilWindow stencil_window(std::size_t num_samples, std::size_t i, int order, std::size_t stride) {
  require(stride >= 1 && i < num_samples, ErrorKind::invalid_argument, "stencil_window: bad index or stride");
  const std::size_t below = i / stride;                       // strided samples before i
  const std::size_t above = (num_samples - 1 - i) / stride;   // strided samples after i
  const std::size_t available = below + above + 1;
  const auto centered = static_cast<std::size_t>(order + 3 + (order % 2));
  const std::size_t half = (centered - 1) / 2;
  if (below >= half && above >= half) return {i - half * stride, centered, stride};

  const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(order + 4), available);
  require(width > static_cast<std::size_t>(order), ErrorKind::resolution,
          "stencil_window: grid too short for derivative order " + std::to_string(order));
  // Shift the window so it stays inside the grid, as centered as possible.
  std::size_t left = std::min(below, (width - 1) / 2);
  if (above < width - 1 - left) left = width - 1 - above;
  return {i - left * stride, width, stride};
}

std::size_t noise_limited_stride(std::span<const double> params, int order, double noise_target, int width) {
  require(params.size() >= 2 && order >= 1 && noise_target > 0.0 && width >= 2, ErrorKind::invalid_argument,
          "noise_limited_stride: bad arguments");
  const double spacing = (params.back() - params.front()) / static_cast<double>(params.size() - 1);
  // Round-off of an order-d difference quotient grows like C·ε/h^d (C ~ 10 for these stencils).
  const double eps = std::numeric_limits<double>::epsilon();
  const double wanted = std::pow(10.0 * eps / noise_target, 1.0 / order);
  auto stride = static_cast<std::size_t>(std::ceil(wanted / spacing - 1e-9));
  const std::size_t cap = std::max<std::size_t>(1, (params.size() - 1) / static_cast<std::size_t>(width - 1));
  return std::clamp<std::size_t>(stride, 1, cap);
}

Eigen::VectorXd differentiate(std::span<const double> params, const Eigen::Ref<const Eigen::MatrixXd>& samples,
                              std::size_t i, int order, std::size_t stride) {
  require(static_cast<std::size_t>(samples.rows()) == params.size(), ErrorKind::invalid_argument,
          "differentiate: sample count does not match grid");
  const StencilWindow w = stencil_window(params.size(), i, order, stride);
  std::vector<double> nodes(w.count);
  for (std::size_t j = 0; j < w.count; ++j) nodes[j] = params[w.first + j * w.stride];
  const std::vector<double> weights = fd_weights(params[i], nodes, order);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(samples.cols());
  for (std::size_t j = 0; j < w.count; ++j) out += weights[j] * samples.row(static_cast<Eigen::Index>(w.first + j * w.stride)).transpose();
  return out;
}

std::vector<double> uniform_grid(double a, double b, std::size_t count) {
  require(count >= 2 && b > a, ErrorKind::invalid_argument, "uniform_grid: need count >= 2 and b > a");
  std::vector<double> grid(count);
  const double h = (b - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = a + static_cast<double>(i) * h;
  grid.back() = b;
  return grid;
}

}  // namespace hcurve
