#pragma once

#include <Eigen/Dense>

namespace hcurve {

/// A point of the Heisenberg group H_n, stored as (x_1..x_n, y_1..y_n, z).
class HPoint {
 public:
  explicit HPoint(int n);
  HPoint(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double z);
  static HPoint from_coords(const Eigen::VectorXd& coords);

  int n() const { return n_; }
  const Eigen::VectorXd& coords() const { return coords_; }

  double x(int j) const { return coords_[j]; }
  double y(int j) const { return coords_[n_ + j]; }
  double z() const { return coords_[2 * n_]; }
  Eigen::VectorXd x() const { return coords_.head(n_); }
  Eigen::VectorXd y() const { return coords_.segment(n_, n_); }
  /// Horizontal block (x, y) of length 2n.
  Eigen::VectorXd xy() const { return coords_.head(2 * n_); }

  bool operator==(const HPoint& other) const { return coords_ == other.coords_; }

 private:
  int n_;
  Eigen::VectorXd coords_;
};

/// Tangent vector expressed in the left-invariant frame e̊_1..e̊_2n, T at `base`.
struct TangentVector {
  HPoint base;
  Eigen::VectorXd xi;  // length 2n
  double t = 0.0;
};

HPoint group_mul(const HPoint& p, const HPoint& q);
HPoint group_inv(const HPoint& p);

/// The standard complex structure on the contact plane: (a, b) -> (-b, a).
Eigen::MatrixXd complex_structure(int n);

TangentVector j_apply(const TangentVector& v);
double levi_inner(const TangentVector& u, const TangentVector& v);

/// θ = dz + Σ (x_j dy_j − y_j dx_j) applied to a coordinate vector (dx, dy, dz) at `base`.
double contact_theta(const HPoint& base, const Eigen::VectorXd& coordinate_vector);

/// Coefficients of a coordinate vector in the left-invariant frame at `base`.
TangentVector frame_decomposition(const HPoint& base, const Eigen::VectorXd& coordinate_vector);

/// Inverse of frame_decomposition: the coordinate components of v.
Eigen::VectorXd to_coordinates(const TangentVector& v);

/// Real 2n×2n image of a complex n×n matrix: A + iB -> [[A, −B], [B, A]].
Eigen::MatrixXd realify(const Eigen::MatrixXcd& c);
/// J-commuting part of a real 2n×2n matrix, read back as a complex n×n matrix.
Eigen::MatrixXcd complexify(const Eigen::MatrixXd& r);

/// Nearest orthogonal matrix commuting with J₀ (Frobenius norm): complex polar factor
/// of the J-commuting part.
Eigen::MatrixXd project_unitary(const Eigen::MatrixXd& r);

/// max(‖RᵀR − I‖∞, ‖RJ₀ − J₀R‖∞), entrywise.
double unitary_residual(const Eigen::MatrixXd& r);

/// Rotate the horizontal block of p by R; z is fixed.
HPoint rotate(const Eigen::MatrixXd& r, const HPoint& p);

/// Element of PSH(n): q ↦ translation ∘ (R·q).
class Symmetry {
 public:
  /// Rotations within 1e−6 of U(n) are polar-projected onto it; anything farther is rejected.
  Symmetry(const Eigen::MatrixXd& rotation, const HPoint& translation);

  static Symmetry identity(int n);
  static Symmetry translation_by(const HPoint& p);
  static Symmetry rotation_by(const Eigen::MatrixXd& r);
  /// Reads a (2n+2)×(2n+2) matrix image back; the last row is checked against the translation.
  static Symmetry from_matrix(const Eigen::MatrixXd& m, double tol = 1e-9);

  int n() const { return translation_.n(); }
  const Eigen::MatrixXd& rotation() const { return rotation_; }
  const HPoint& translation() const { return translation_; }

  HPoint operator()(const HPoint& q) const;
  /// (this ∘ other)(q) = this(other(q)).
  Symmetry compose(const Symmetry& other) const;
  Symmetry inverse() const;

 private:
  Eigen::MatrixXd rotation_;
  HPoint translation_;
};

HPoint apply_symmetry(const Symmetry& phi, const HPoint& p);
Eigen::MatrixXd symmetry_to_matrix(const Symmetry& phi);

/// Max-norm distance between coordinate tuples.
double coord_distance(const HPoint& a, const HPoint& b);

}  // namespace hcurve
