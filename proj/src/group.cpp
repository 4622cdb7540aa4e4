#include "hcurve/group.hpp"

#include <cmath>
#include <string>

#include "hcurve/error.hpp"

namespace hcurve {

namespace {

void check_same_n(int a, int b, const char* what) {
  if (a != b) {
    fail(ErrorKind::invalid_argument,
         std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// Σ_j (y_{p,j} u_j − x_{p,j} v_j) for a horizontal vector (u, v).
double symplectic_term(const HPoint& p, const Eigen::VectorXd& uv) {
  const int n = p.n();
  double acc = 0.0;
  for (int j = 0; j < n; ++j) acc += p.y(j) * uv[j] - p.x(j) * uv[n + j];
  return acc;
}

}  // namespace

HPoint::HPoint(int n) : n_(n), coords_(Eigen::VectorXd::Zero(2 * n + 1)) {
  require(n >= 1, ErrorKind::invalid_argument, "HPoint: n must be positive");
}

HPoint::HPoint(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double z)
    : n_(static_cast<int>(x.size())), coords_(2 * x.size() + 1) {
  require(n_ >= 1 && y.size() == x.size(), ErrorKind::invalid_argument, "HPoint: x and y must have equal positive length");
  coords_ << x, y, z;
}

HPoint HPoint::from_coords(const Eigen::VectorXd& coords) {
  require(coords.size() >= 3 && coords.size() % 2 == 1, ErrorKind::invalid_argument,
          "HPoint: coordinate tuple must have odd length 2n+1 >= 3");
  const Eigen::Index n = (coords.size() - 1) / 2;
  return HPoint(coords.head(n), coords.segment(n, n), coords[2 * n]);
}

HPoint group_mul(const HPoint& p, const HPoint& q) {
  check_same_n(p.n(), q.n(), "group_mul");
  const int n = p.n();
  Eigen::VectorXd c = p.coords() + q.coords();
  c[2 * n] += symplectic_term(p, q.xy());
  return HPoint::from_coords(c);
}

HPoint group_inv(const HPoint& p) { return HPoint::from_coords(-p.coords()); }

Eigen::MatrixXd complex_structure(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  j.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  return j;
}

TangentVector j_apply(const TangentVector& v) {
  require(v.t == 0.0, ErrorKind::invalid_argument, "j_apply: J acts on the contact plane only (t coefficient must be 0)");
  const int n = v.base.n();
  require(v.xi.size() == 2 * n, ErrorKind::invalid_argument, "j_apply: xi must have length 2n");
  Eigen::VectorXd out(2 * n);
  out << -v.xi.tail(n), v.xi.head(n);
  return {v.base, out, 0.0};
}

double levi_inner(const TangentVector& u, const TangentVector& v) {
  require(u.base == v.base, ErrorKind::invalid_argument, "levi_inner: vectors live at different base points");
  require(u.xi.size() == v.xi.size(), ErrorKind::invalid_argument, "levi_inner: dimension mismatch");
  return u.xi.dot(v.xi) + u.t * v.t;
}

double contact_theta(const HPoint& base, const Eigen::VectorXd& w) {
  const int n = base.n();
  require(w.size() == 2 * n + 1, ErrorKind::invalid_argument, "contact_theta: vector must have length 2n+1");
  double acc = w[2 * n];
  for (int j = 0; j < n; ++j) acc += base.x(j) * w[n + j] - base.y(j) * w[j];
  return acc;
}

TangentVector frame_decomposition(const HPoint& base, const Eigen::VectorXd& w) {
  const int n = base.n();
  require(w.size() == 2 * n + 1, ErrorKind::invalid_argument, "frame_decomposition: vector must have length 2n+1");
  return {base, w.head(2 * n), contact_theta(base, w)};
}

Eigen::VectorXd to_coordinates(const TangentVector& v) {
  const int n = v.base.n();
  Eigen::VectorXd w(2 * n + 1);
  w.head(2 * n) = v.xi;
  // e̊_j = ∂x_j + y_j ∂z,  e̊_{n+j} = ∂y_j − x_j ∂z
  w[2 * n] = v.t + symplectic_term(v.base, v.xi);
  return w;
}

Eigen::MatrixXd realify(const Eigen::MatrixXcd& c) {
  const Eigen::Index n = c.rows();
  const Eigen::Index m = c.cols();
  Eigen::MatrixXd r(2 * n, 2 * m);
  r.topLeftCorner(n, m) = c.real();
  r.topRightCorner(n, m) = -c.imag();
  r.bottomLeftCorner(n, m) = c.imag();
  r.bottomRightCorner(n, m) = c.real();
  return r;
}

Eigen::MatrixXcd complexify(const Eigen::MatrixXd& r) {
  const Eigen::Index n = r.rows() / 2;
  const Eigen::Index m = r.cols() / 2;
  Eigen::MatrixXd a = 0.5 * (r.topLeftCorner(n, m) + r.bottomRightCorner(n, m));
  Eigen::MatrixXd b = 0.5 * (r.bottomLeftCorner(n, m) - r.topRightCorner(n, m));
  Eigen::MatrixXcd c(n, m);
  c.real() = a;
  c.imag() = b;
  return c;
}

Eigen::MatrixXd project_unitary(const Eigen::MatrixXd& r) {
  require(r.rows() == r.cols() && r.rows() % 2 == 0, ErrorKind::invalid_argument,
          "project_unitary: expected a square matrix of even size");
  const Eigen::MatrixXcd c = complexify(r);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return realify(svd.matrixU() * svd.matrixV().adjoint());
}

double unitary_residual(const Eigen::MatrixXd& r) {
  const Eigen::Index m = r.rows();
  const Eigen::MatrixXd j = complex_structure(static_cast<int>(m / 2));
  const double orth = (r.transpose() * r - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
  const double comm = (r * j - j * r).cwiseAbs().maxCoeff();
  return std::max(orth, comm);
}

HPoint rotate(const Eigen::MatrixXd& r, const HPoint& p) {
  const int n = p.n();
  require(r.rows() == 2 * n && r.cols() == 2 * n, ErrorKind::invalid_argument, "rotate: dimension mismatch");
  Eigen::VectorXd c(2 * n + 1);
  c << r * p.xy(), p.z();
  return HPoint::from_coords(c);
}

Symmetry::Symmetry(const Eigen::MatrixXd& rotation, const HPoint& translation) : translation_(translation) {
  const int n = translation.n();
  require(rotation.rows() == 2 * n && rotation.cols() == 2 * n, ErrorKind::invalid_argument,
          "Symmetry: rotation must be 2n x 2n");
  require(unitary_residual(rotation) <= 1e-6, ErrorKind::invalid_argument,
          "Symmetry: rotation is not a J-commuting orthogonal matrix");
  rotation_ = project_unitary(rotation);
}

Symmetry Symmetry::identity(int n) { return {Eigen::MatrixXd::Identity(2 * n, 2 * n), HPoint(n)}; }

Symmetry Symmetry::translation_by(const HPoint& p) {
  return {Eigen::MatrixXd::Identity(2 * p.n(), 2 * p.n()), p};
}

Symmetry Symmetry::rotation_by(const Eigen::MatrixXd& r) {
  require(r.rows() % 2 == 0 && r.rows() >= 2, ErrorKind::invalid_argument, "rotation_by: bad size");
  return {r, HPoint(static_cast<int>(r.rows() / 2))};
}

Symmetry Symmetry::from_matrix(const Eigen::MatrixXd& m, double tol) {
  const Eigen::Index size = m.rows();
  require(size == m.cols() && size >= 4 && size % 2 == 0, ErrorKind::invalid_argument,
          "Symmetry::from_matrix: expected a (2n+2)x(2n+2) matrix");
  const int n = static_cast<int>((size - 2) / 2);
  const Eigen::Index last = 2 * n + 1;
  Eigen::VectorXd top = Eigen::VectorXd::Zero(size);
  top[0] = 1.0;
  Eigen::VectorXd right = Eigen::VectorXd::Zero(size);
  right[last] = 1.0;
  require((m.row(0).transpose() - top).cwiseAbs().maxCoeff() <= tol &&
              (m.col(last) - right).cwiseAbs().maxCoeff() <= tol,
          ErrorKind::invalid_argument, "Symmetry::from_matrix: top row / last column have the wrong shape");
  Eigen::VectorXd coords(2 * n + 1);
  coords << m.col(0).segment(1, 2 * n), m(last, 0);
  Symmetry phi(m.block(1, 1, 2 * n, 2 * n), HPoint::from_coords(coords));
  const Eigen::MatrixXd rebuilt = symmetry_to_matrix(phi);
  require((rebuilt.row(last) - m.row(last)).cwiseAbs().maxCoeff() <= tol, ErrorKind::invalid_argument,
          "Symmetry::from_matrix: last row inconsistent with translation");
  return phi;
}

HPoint Symmetry::operator()(const HPoint& q) const {
  check_same_n(n(), q.n(), "apply_symmetry");
  return group_mul(translation_, rotate(rotation_, q));
}

Symmetry Symmetry::compose(const Symmetry& other) const {
  check_same_n(n(), other.n(), "Symmetry::compose");
  // p_a ∘ R_a(p_b ∘ R_b q) = (p_a ∘ R_a p_b) ∘ (R_a R_b q), since unitary R_a is a group automorphism.
  return {rotation_ * other.rotation_, group_mul(translation_, rotate(rotation_, other.translation_))};
}

Symmetry Symmetry::inverse() const {
  const Eigen::MatrixXd rt = rotation_.transpose();
  return {rt, rotate(rt, group_inv(translation_))};
}

HPoint apply_symmetry(const Symmetry& phi, const HPoint& p) { return phi(p); }

Eigen::MatrixXd symmetry_to_matrix(const Symmetry& phi) {
  const int n = phi.n();
  const HPoint& p = phi.translation();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n + 2, 2 * n + 2);
  m(0, 0) = 1.0;
  m.block(1, 0, 2 * n, 1) = p.xy();
  m.block(1, 1, 2 * n, 2 * n) = phi.rotation();
  m(2 * n + 1, 0) = p.z();
  Eigen::RowVectorXd w(2 * n);
  w << p.y().transpose(), -p.x().transpose();
  m.block(2 * n + 1, 1, 1, 2 * n) = w * phi.rotation();
  m(2 * n + 1, 2 * n + 1) = 1.0;
  return m;
}

double coord_distance(const HPoint& a, const HPoint& b) {
  check_same_n(a.n(), b.n(), "coord_distance");
  return (a.coords() - b.coords()).cwiseAbs().maxCoeff();
}

}  // namespace hcurve
