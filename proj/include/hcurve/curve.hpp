#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hcurve/group.hpp"

namespace hcurve {

inline constexpr double kRegularityTol = 1e-8;
inline constexpr std::size_t kMinSamples = 9;

/// Curve γ: I → H_n sampled on a strictly increasing grid. Row i of coords() is γ(params[i]).
class SampledCurve {
 public:
  SampledCurve(int n, std::vector<double> params, Eigen::MatrixXd coords, bool is_arclength = false);

  int n() const { return n_; }
  std::size_t size() const { return params_.size(); }
  const std::vector<double>& params() const { return params_; }
  const Eigen::MatrixXd& coords() const { return coords_; }
  bool is_arclength() const { return is_arclength_; }

  HPoint point(std::size_t i) const;
  /// β(params[i]) = (x_j + i y_j)_j.
  Eigen::VectorXcd beta(std::size_t i) const;

 private:
  int n_;
  std::vector<double> params_;
  Eigen::MatrixXd coords_;
  bool is_arclength_;
};

/// β′…β^(k) and the T-coefficient τ of γ′ at one parameter value.
struct HorizontalJet {
  int order = 0;
  std::vector<Eigen::VectorXcd> beta;  // beta[m] = β^(m+1)
  double tau = 0.0;

  int n() const { return beta.empty() ? 0 : static_cast<int>(beta.front().size()); }
  /// Complex n×k matrix [β′ … β^(k)].
  Eigen::MatrixXcd matrix() const;
};

/// Real 2n-vector (Re β, Im β) of a complex n-vector, matching the (x, y) coordinate order.
Eigen::VectorXd real_image(const Eigen::VectorXcd& v);
Eigen::VectorXcd complex_image(const Eigen::VectorXd& v);

/// Finite-difference jet at sample i. `stride` spaces the stencil nodes `stride` samples apart.
HorizontalJet derivatives_at(const SampledCurve& c, std::size_t i, int k, std::size_t stride = 1);

/// τ = z′ + Σ (x_j y_j′ − y_j x_j′) from a point and its coordinate velocity.
double tau_from_velocity(const Eigen::VectorXd& point, const Eigen::VectorXd& velocity);

/// γ′(params[i]) split into its contact-plane coefficients and T-coefficient.
TangentVector velocity_decomposition(const SampledCurve& c, std::size_t i);

/// |β′| at every sample.
std::vector<double> horizontal_speeds(const SampledCurve& c);

bool is_horizontally_regular(const SampledCurve& c, double tol = kRegularityTol);

/// Resample c at `samples` uniform values of horizontal arc length s ∈ [0, L].
SampledCurve arclength_reparametrize(const SampledCurve& c, std::size_t samples, double tol = kRegularityTol);

/// Φ applied pointwise; the parametrization is unchanged.
SampledCurve transform_curve(const Symmetry& phi, const SampledCurve& c);

/// Same points traversed backwards, on the grid s ↦ params.back() + params.front() − s.
SampledCurve reverse_curve(const SampledCurve& c);

}  // namespace hcurve
