#include "hcurve/kernels.hpp"

#include <optional>

#include "hcurve/classify.hpp"
#include "hcurve/stencil.hpp"
#include "parallel.hpp"

namespace hcurve::kernels {

std::vector<HorizontalJet> jets(const SampledCurve& c, int k, std::size_t stride, Execution exec) {
  std::vector<HorizontalJet> out(c.size());
  detail::for_each_index(c.size(), exec, [&](std::size_t i) { out[i] = derivatives_at(c, i, k, stride); });
  return out;
}

std::vector<FrameState> frames(const SampledCurve& c, int k, std::size_t stride, double rank_tol, Execution exec) {
  // FrameState has no default state; fill slots then move out.
  std::vector<std::optional<FrameState>> slots(c.size());
  detail::for_each_index(c.size(), exec, [&](std::size_t i) {
    slots[i].emplace(build_frame(derivatives_at(c, i, k, stride), c.point(i), rank_tol));
  });
  std::vector<FrameState> out;
  out.reserve(c.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<Eigen::MatrixXd> field_derivatives(std::span<const double> params, const std::vector<Eigen::MatrixXd>& fields,
                                               std::size_t stride, Execution exec) {
  std::vector<Eigen::MatrixXd> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.emplace_back(f.rows(), f.cols());
  detail::for_each_index(params.size(), exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < fields.size(); ++j) {
      out[j].row(static_cast<Eigen::Index>(i)) = differentiate(params, fields[j], i, 1, stride).transpose();
    }
  });
  return out;
}

std::vector<double> wronskian_margins(const SampledCurve& c, int k, std::size_t stride, Execution exec) {
  std::vector<double> out(c.size());
  detail::for_each_index(c.size(), exec, [&](std::size_t i) { out[i] = wronskian_margin(derivatives_at(c, i, k, stride)); });
  return out;
}

std::vector<double> totally_real_margins(const SampledCurve& c, int k, std::size_t stride, Execution exec) {
  std::vector<double> out(c.size());
  detail::for_each_index(c.size(), exec, [&](std::size_t i) { out[i] = totally_real_margin(derivatives_at(c, i, k, stride)); });
  return out;
}

std::vector<double> contact_normality(const SampledCurve& c, std::size_t stride, Execution exec) {
  std::vector<double> out(c.size());
  detail::for_each_index(c.size(), exec, [&](std::size_t i) {
    const Eigen::VectorXd velocity = differentiate(c.params(), c.coords(), i, 1, stride);
    out[i] = tau_from_velocity(c.coords().row(static_cast<Eigen::Index>(i)).transpose(), velocity);
  });
  return out;
}

}  // namespace hcurve::kernels
