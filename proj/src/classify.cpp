#include "hcurve/classify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcurve/error.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/kernels.hpp"
#include "hcurve/stencil.hpp"

namespace hcurve {

namespace {

// Finite-difference round-off must sit this far below the rank tolerance.
constexpr double kRankNoiseFraction = 1e-3;
// Rotated-out coordinates larger than this mean the order was overestimated upstream.
constexpr double kReductionResidualLimit = 1e-6;

double relative_last_singular_value(const Eigen::VectorXd& sv, Eigen::Index wanted) {
  if (sv.size() < wanted || wanted == 0) return 0.0;
  return sv[wanted - 1] / std::max(sv[0], 1.0);
}

}  // namespace

double wronskian_margin(const HorizontalJet& jet) {
  const Eigen::MatrixXcd m = jet.matrix();
  if (jet.order > m.rows()) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return relative_last_singular_value(svd.singularValues(), jet.order);
}

bool wronskian_nonzero(const HorizontalJet& jet, double tol) { return wronskian_margin(jet) > tol; }

double totally_real_margin(const HorizontalJet& jet) {
  const int n = jet.n();
  const int k = jet.order;
  if (k > n) return 0.0;
  Eigen::MatrixXd m(2 * n, 2 * k);
  for (int i = 0; i < k; ++i) {
    const Eigen::VectorXcd& v = jet.beta[static_cast<std::size_t>(i)];
    m.col(i) = real_image(v);
    m.col(k + i) = real_image(std::complex<double>(0.0, 1.0) * v);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return relative_last_singular_value(svd.singularValues(), 2 * k);
}

bool totally_real(const HorizontalJet& jet, double tol) { return totally_real_margin(jet) > tol; }

std::size_t rank_stride(const SampledCurve& c, int k, double tol) {
  return noise_limited_stride(c.params(), k, kRankNoiseFraction * tol, k + 4);
}

OrderReport curve_order(const SampledCurve& c, double tol, Execution exec) {
  require(tol > 0.0, ErrorKind::invalid_argument, "curve_order: tol must be positive");
  require(is_horizontally_regular(c), ErrorKind::precondition, "curve_order: curve is not horizontally regular");
  const int n = c.n();
  OrderReport report;
  report.n = n;
  report.margins.assign(static_cast<std::size_t>(n), 0.0);
  for (int k = 1; k <= n; ++k) {
    const auto margins = kernels::wronskian_margins(c, k, rank_stride(c, k, tol), exec);
    report.margins[static_cast<std::size_t>(k - 1)] = *std::min_element(margins.begin(), margins.end());
  }
  for (int k = n; k >= 1; --k) {
    if (report.margins[static_cast<std::size_t>(k - 1)] > tol) {
      report.order = k;
      break;
    }
  }
  require(report.order >= 1, ErrorKind::inconsistency,
          "curve_order: no order passes the rank test although the curve is horizontally regular");
  const auto real_margins = kernels::totally_real_margins(c, report.order, rank_stride(c, report.order, tol), exec);
  report.totally_real = *std::min_element(real_margins.begin(), real_margins.end()) > tol;
  report.nondegenerate = report.order == n && report.totally_real;
  return report;
}

Reduction reduce_degenerate(const SampledCurve& c, double tol, Execution exec) {
  const OrderReport report = curve_order(c, tol, exec);
  const int n = c.n();
  const int k = report.order;
  require(k < n, ErrorKind::precondition,
          "reduce_degenerate: curve has top order " + std::to_string(n) + " and is not degenerate");

  const HorizontalJet jet = derivatives_at(c, 0, k, rank_stride(c, k, tol));
  const FrameState frame = build_frame(jet, c.point(0), tol);
  // Rᵀ sends e_j(0) to e̊_j, hence span_C{e_1..e_k} onto ℂ^k.
  const Eigen::MatrixXd rotation = frame.e.transpose();
  const Symmetry motion(rotation, rotate(rotation, group_inv(c.point(0))));
  SampledCurve moved = transform_curve(motion, c);

  std::vector<double> residual(c.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto row = moved.coords().row(static_cast<Eigen::Index>(i));
    residual[i] = std::sqrt(row.segment(k, n - k).squaredNorm() + row.segment(n + k, n - k).squaredNorm());
  }
  const double worst = *std::max_element(residual.begin(), residual.end());
  require(worst <= kReductionResidualLimit, ErrorKind::misclassification,
          "reduce_degenerate: residual " + std::to_string(worst) + " outside H_" + std::to_string(k) +
              "; the rank tolerance is too loose for this curve");
  return {motion, std::move(moved), k, worst, std::move(residual)};
}

SampledCurve restrict_to_subgroup(const SampledCurve& c, int k) {
  const int n = c.n();
  require(k >= 1 && k <= n, ErrorKind::invalid_argument, "restrict_to_subgroup: k must lie in [1, n]");
  Eigen::MatrixXd out(c.coords().rows(), 2 * k + 1);
  out.leftCols(k) = c.coords().leftCols(k);
  out.middleCols(k, k) = c.coords().middleCols(n, k);
  out.col(2 * k) = c.coords().col(2 * n);
  return {k, c.params(), std::move(out), c.is_arclength()};
}

SampledCurve embed_in(const SampledCurve& c, int n) {
  const int k = c.n();
  require(n >= k, ErrorKind::invalid_argument, "embed_in: target dimension smaller than source");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(c.coords().rows(), 2 * n + 1);
  out.leftCols(k) = c.coords().leftCols(k);
  out.middleCols(n, k) = c.coords().middleCols(k, k);
  out.col(2 * n) = c.coords().col(2 * k);
  return {n, c.params(), std::move(out), c.is_arclength()};
}

}  // namespace hcurve
