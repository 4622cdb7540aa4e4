// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hcurve/classify.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/geodesics.hpp"
#include "hcurve/synth.hpp"
#include "../support.hpp"

using namespace hcurve;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome geodesic_oracle() {
  const auto grid = uniform_grid(0.0, 1.0, 2001);
  double worst_k = 0.0, worst_tau = 0.0, slowest = 0.0;
  bool orders = true;
  for (int n = 1; n <= 3; ++n) {
    for (double lambda : {-1.0, 0.5, 2.0}) {
      GeodesicSpec spec = GeodesicSpec::canonical(n, lambda);
      // a unit (A, B) with every component in play
      Eigen::VectorXd ab(2 * n);
      for (int i = 0; i < 2 * n; ++i) ab[i] = 1.0 + 0.5 * i;
      ab.normalize();
      spec.A = ab.head(n);
      spec.B = ab.tail(n);
      const auto t0 = std::chrono::steady_clock::now();
      const SampledCurve c = geodesic_curve(spec, grid);
      const OrderReport r = curve_order(c);
      const InvariantProfile p = invariants_along(c, r.order);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      orders = orders && r.order == 1;
      worst_k = std::max(worst_k, testing::sup_abs(p.kappa[0], -2.0 * lambda));
      worst_tau = std::max(worst_tau, testing::sup_abs(p.tau));
      slowest = std::max(slowest, secs);
    }
  }
  return {orders && worst_k < 1e-4 && worst_tau < 1e-6 && slowest < 2.0,
          fmt("sup|k1+2l|=%.2e sup|tau|=%.2e slowest=%.3fs", worst_k, worst_tau, slowest) + (orders ? " order=1" : " ORDER MISMATCH")};
}

Outcome round_trip() {
  double worst = 0.0;
  for (const InvariantProfile& p : {testing::profile_n2(1e-3), testing::profile_n3(1e-3)}) {
    const SampledCurve c = synthesize_curve(p);
    const OrderReport r = curve_order(c);
    if (r.order != p.n) return {false, "re-analysis found order " + std::to_string(r.order)};
    worst = std::max(worst, profile_difference(invariants_along(c, r.order), p).max());
  }
  return {worst < 1e-3, fmt("sup profile error=%.2e", worst)};
}

Outcome uniqueness() {
  auto g = testing::rng(2001);
  double worst_profile = 0.0, worst_motion = 0.0;
  int recovered = 0, trials = 0;
  for (int n = 1; n <= 2; ++n) {
    const InvariantProfile prof =
        n == 1 ? testing::make_profile(
                     1, 1.0, 1e-3, [](double s) { return std::vector<double>{0.5 + s}; }, [](double s) { return std::sin(s); })
               : testing::profile_n2();
    const SampledCurve c1 = synthesize_curve(prof);
    const InvariantProfile base = invariants_along(c1, n);
    for (int trial = 0; trial < 20; ++trial, ++trials) {
      const SampledCurve c2 = transform_curve(testing::random_symmetry(g, n, 2.0), c1);
      worst_profile = std::max(worst_profile, profile_difference(base, invariants_along(c2, n)).max());
      const auto found = congruence_test(c1, c2, 1e-6);
      if (!found) continue;
      ++recovered;
      worst_motion = std::max(worst_motion, testing::curve_distance(transform_curve(*found, c1), c2));
    }
  }
  return {recovered == trials && worst_profile < 1e-6 && worst_motion < 1e-6,
          fmt("profile diff=%.2e motion sup-distance=%.2e", worst_profile, worst_motion) + " recovered " +
              std::to_string(recovered) + "/" + std::to_string(trials)};
}

Outcome maurer_cartan() {
  auto g = testing::rng(2002);
  const InvariantProfile p1 = testing::make_profile(
      1, 1.0, 1e-3, [](double s) { return std::vector<double>{0.5 + s}; }, [](double s) { return std::sin(s); });
  double worst_fd = 0.0, worst_group = 0.0;
  for (const InvariantProfile& p : {p1, testing::profile_n2(), testing::profile_n3()}) {
    for (bool identity : {true, false}) {
      const Eigen::MatrixXd m0 = identity ? Eigen::MatrixXd::Identity(2 * p.n + 2, 2 * p.n + 2)
                                          : symmetry_to_matrix(testing::random_symmetry(g, p.n));
      const GroupPath path = integrate_frame_ode(p, m0);
      const double h = path.s[1] - path.s[0];
      for (std::size_t i = 0; i < path.frames.size(); ++i) {
        worst_group = std::max(worst_group, unitary_residual(path.frames[i].block(1, 1, 2 * p.n, 2 * p.n)));
        if (i < 2 || i + 2 >= path.frames.size()) continue;
        const Eigen::MatrixXd dm =
            (path.frames[i - 2] - 8 * path.frames[i - 1] + 8 * path.frames[i + 1] - path.frames[i + 2]) / (12 * h);
        worst_fd = std::max(worst_fd, (path.frames[i].inverse() * dm - darboux_matrix(p, i)).cwiseAbs().maxCoeff());
      }
    }
  }
  return {worst_fd < 1e-5 && worst_group < 1e-10, fmt("FD vs phi=%.2e rotation residual=%.2e", worst_fd, worst_group)};
}

Outcome horizontality() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const InvariantProfile p = testing::make_profile(
        n, 1.0, 1e-3,
        [n](double s) {
          std::vector<double> k;
          for (int j = 0; j < n; ++j) k.push_back(0.7 + 0.2 * j + 0.3 * std::sin((j + 1) * s));
          return k;
        },
        [](double) { return 0.0; });
    const SampledCurve c = synthesize_curve(p);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const TangentVector v = velocity_decomposition(c, i);
      worst = std::max(worst, std::abs(contact_theta(c.point(i), to_coordinates(v))));
    }
  }
  return {worst < 1e-8, fmt("sup|theta(gamma')|=%.2e", worst)};
}

Outcome reduction() {
  auto g = testing::rng(2006);
  const InvariantProfile p1 = testing::make_profile(
      1, 1.0, 1e-3, [](double s) { return std::vector<double>{0.5 + s}; }, [](double s) { return std::sin(s); });
  double worst_residual = 0.0, worst_profile = 0.0;
  int ok_orders = 0, trials = 0;
  for (int n = 2; n <= 3; ++n) {
    const SampledCurve small = synthesize_curve(n == 2 ? p1 : testing::profile_n2());
    const InvariantProfile original = invariants_along(small, n - 1);
    for (int trial = 0; trial < 20; ++trial, ++trials) {
      const SampledCurve big = transform_curve(testing::random_symmetry(g, n, 2.0), embed_in(small, n));
      const Reduction r = reduce_degenerate(big);
      worst_residual = std::max(worst_residual, r.residual);
      if (r.order != n - 1) continue;
      ++ok_orders;
      const SampledCurve back = restrict_to_subgroup(r.curve, n - 1);
      worst_profile = std::max(worst_profile, profile_difference(invariants_along(back, n - 1), original).max());
    }
  }
  return {ok_orders == trials && worst_residual < 1e-8 && worst_profile < 1e-6,
          fmt("residual=%.2e invariants diff=%.2e", worst_residual, worst_profile) + " orders " + std::to_string(ok_orders) +
              "/" + std::to_string(trials)};
}

Outcome classification() {
  using cd = std::complex<double>;
  const cd I(0, 1);
  auto c2 = [](cd a, cd b) {
    Eigen::VectorXcd v(2);
    v << a, b;
    return v;
  };
  struct Case {
    const char* name;
    SampledCurve curve;
    int order;
  };
  const std::vector<Case> cases{
      {"(t,0)", testing::horizontal_lift(2, -1, 1, 401, [&](double t) { return c2(t, 0); }, [&](double) { return c2(1, 0); }), 1},
      {"(t,t^2/2)", testing::horizontal_lift(2, -1, 1, 401, [&](double t) { return c2(t, t * t / 2); }, [&](double t) { return c2(1, t); }), 2},
      {"(e^it,0)",
       testing::horizontal_lift(2, -1, 1, 401, [&](double t) { return c2(std::exp(I * t), 0); },
                                [&](double t) { return c2(I * std::exp(I * t), 0); }),
       1},
  };
  std::string detail;
  bool pass = true;
  for (const Case& k : cases) {
    const OrderReport r = curve_order(k.curve, 1e-8);
    bool ok = r.order == k.order;
    for (double f : {1e-6, 1e6}) {
      Eigen::MatrixXd coords = k.curve.coords();
      coords.leftCols(4) *= f;
      coords.col(4) *= f * f;
      const OrderReport s = curve_order(SampledCurve(2, k.curve.params(), coords), 1e-8);
      ok = ok && s.order == r.order && s.totally_real == r.totally_real && s.nondegenerate == r.nondegenerate;
    }
    pass = pass && ok;
    detail += std::string(detail.empty() ? "" : " ") + k.name + "->" + std::to_string(r.order);
  }
  return {pass, detail};
}

Outcome convergence() {
  auto error_at = [](double step) {
    const InvariantProfile p = testing::make_profile(
        1, 1.0, step, [](double) { return std::vector<double>{-2.0}; }, [](double) { return 0.0; });
    return testing::curve_distance(synthesize_curve(p), geodesic_curve(GeodesicSpec::canonical(1, 1.0), p.s));
  };
  const double coarse = error_at(2e-3), fine = error_at(1e-3);
  return {coarse / fine >= 12.0, fmt("err(2e-3)=%.2e err(1e-3)=%.2e ratio=%.1f", coarse, fine, coarse / fine)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"geodesic invariants", geodesic_oracle},
      {"synthesis round trip", round_trip},
      {"uniqueness up to symmetry", uniqueness},
      {"Maurer-Cartan consistency", maurer_cartan},
      {"horizontality", horizontality},
      {"degenerate reduction", reduction},
      {"order classification", classification},
      {"integrator convergence", convergence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
