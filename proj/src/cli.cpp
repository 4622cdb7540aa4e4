#include "hcurve/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "hcurve/classify.hpp"
#include "hcurve/curve.hpp"
#include "hcurve/error.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/geodesics.hpp"
#include "hcurve/io.hpp"
#include "hcurve/stencil.hpp"
#include "hcurve/synth.hpp"

namespace hcurve::cli {

namespace {

struct Exit {
  int code;
  std::string message;
};

struct Config {
  std::string input, out, out_profile, out_report, out_symmetry, profile, a, b;
  double tol_rank = 1e-8;
  double tol_congruence = 1e-6;
  double step = 1e-3;
  std::size_t samples = 1001;
  int n = 0;
  bool restrict_output = false;
  double lambda = 0.0, s_max = 1.0, t0 = 0.0;
  std::vector<double> A, B, x0, y0;
};

std::string read_input(const std::string& path) {
  try {
    return io::read_file(path);
  } catch (const Error& e) {
    throw Exit{kNoInput, e.what()};
  }
}

void write_output(const std::string& path, const std::string& contents) {
  try {
    io::write_file(path, contents);
  } catch (const Error& e) {
    throw Exit{kCantCreate, e.what()};
  }
}

SampledCurve load_curve(const std::string& path) { return io::curve_from_json(read_input(path)); }

SampledCurve unit_speed(const SampledCurve& c, std::size_t samples) {
  return c.is_arclength() ? c : arclength_reparametrize(c, samples);
}

int code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
      return kUsage;
    case ErrorKind::io:
      return kNoInput;
    case ErrorKind::invalid_argument:
    case ErrorKind::precondition:
    case ErrorKind::degeneracy:
      return kDataError;
    default:
      return kSoftware;
  }
}

int cmd_analyze(const Config& cfg, std::ostream& out, std::ostream& err) {
  const SampledCurve c = unit_speed(load_curve(cfg.input), cfg.samples);
  const OrderReport report = curve_order(c, cfg.tol_rank);
  const InvariantProfile profile = invariants_along(c, report.order);
  write_output(cfg.out_profile, io::profile_to_csv(profile));
  write_output(cfg.out_report, io::report_to_json(report));
  out << "order " << report.order << " of " << report.n << "\n";
  if (!report.nondegenerate) {
    err << "curve is degenerate (order " << report.order << " < n = " << report.n
        << "); `hcurve reduce` moves it into H_" << report.order << "\n";
    return kDegenerate;
  }
  return kOk;
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  const SampledCurve c = unit_speed(load_curve(cfg.input), cfg.samples);
  out << io::report_to_json(curve_order(c, cfg.tol_rank));
  return kOk;
}

int cmd_reduce(const Config& cfg, std::ostream& out) {
  const SampledCurve c = unit_speed(load_curve(cfg.input), cfg.samples);
  const Reduction r = reduce_degenerate(c, cfg.tol_rank);
  const SampledCurve result = cfg.restrict_output ? restrict_to_subgroup(r.curve, r.order) : r.curve;
  write_output(cfg.out, io::curve_to_json(result));
  write_output(cfg.out_symmetry, io::symmetry_to_json(r.motion));
  out << "order " << r.order << ", residual " << io::format_double(r.residual) << "\n";
  return kOk;
}

bool on_uniform_step(const std::vector<double>& s, double step) {
  const double extent = std::max({1.0, std::abs(s.front()), std::abs(s.back())});
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i] - (s.front() + static_cast<double>(i) * step)) > 1e-12 * extent) return false;
  }
  return true;
}

int cmd_synthesize(const Config& cfg) {
  InvariantProfile profile = io::profile_from_csv(read_input(cfg.profile), cfg.n);
  if (!on_uniform_step(profile.s, cfg.step)) profile = resample_profile(profile, cfg.step);
  write_output(cfg.out, io::curve_to_json(synthesize_curve(profile)));
  return kOk;
}

int cmd_congruence(const Config& cfg, std::ostream& out) {
  SampledCurve a = unit_speed(load_curve(cfg.a), cfg.samples);
  SampledCurve b = unit_speed(load_curve(cfg.b), cfg.samples);
  const double la = a.params().back() - a.params().front();
  const double lb = b.params().back() - b.params().front();
  if (std::abs(la - lb) > 1e-9 * std::max(1.0, la)) {
    out << "{\n  \"congruent\": false,\n  \"length_a\": " << io::format_double(la) << ",\n  \"length_b\": "
        << io::format_double(lb) << "\n}\n";
    return kNotCongruent;
  }
  if (a.size() != b.size() || a.params().front() != b.params().front()) {
    // same length, different sampling: put both on one arc-length grid
    a = arclength_reparametrize(a, cfg.samples);
    b = arclength_reparametrize(b, cfg.samples);
  }
  const CongruenceReport r = compare_curves(a, b, cfg.tol_congruence);
  out << io::congruence_to_json(r);
  return r.congruent() ? kOk : kNotCongruent;
}

int cmd_geodesic(const Config& cfg) {
  auto vec = [&](const std::vector<double>& v, const char* name, bool zero_default) {
    if (v.empty() && zero_default) return Eigen::VectorXd::Zero(cfg.n).eval();
    if (static_cast<int>(v.size()) != cfg.n) throw Exit{kUsage, std::string("--") + name + " needs n comma-separated values"};
    return Eigen::Map<const Eigen::VectorXd>(v.data(), cfg.n).eval();
  };
  if (cfg.n < 1) throw Exit{kUsage, "--n must be positive"};
  GeodesicSpec spec;
  spec.n = cfg.n;
  spec.lambda = cfg.lambda;
  spec.A = vec(cfg.A, "A", false);
  spec.B = vec(cfg.B, "B", true);
  spec.x0 = vec(cfg.x0, "x0", true);
  spec.y0 = vec(cfg.y0, "y0", true);
  spec.t0 = cfg.t0;
  if (!(cfg.s_max > 0.0)) throw Exit{kUsage, "--s-max must be positive"};
  const auto grid = uniform_grid(0.0, cfg.s_max, cfg.samples);
  write_output(cfg.out, io::curve_to_json(geodesic_curve(spec, grid)));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Invariants, classification and reconstruction of horizontal curves in the Heisenberg group"};
  app.require_subcommand(1);

  auto positive = CLI::PositiveNumber;
  auto add_rank = [&](CLI::App* sub) { sub->add_option("--tol-rank", cfg.tol_rank, "relative rank tolerance")->check(positive); };
  auto add_samples = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "arc-length samples when reparametrizing")->check(CLI::Range(9, 100000000));
  };

  auto* analyze = app.add_subcommand("analyze", "order report and invariant profile of a curve");
  analyze->add_option("--input", cfg.input)->required();
  analyze->add_option("--out-profile", cfg.out_profile)->required();
  analyze->add_option("--out-report", cfg.out_report)->required();
  add_rank(analyze);
  add_samples(analyze);

  auto* classify = app.add_subcommand("classify", "print the order report");
  classify->add_option("--input", cfg.input)->required();
  add_rank(classify);
  add_samples(classify);

  auto* reduce = app.add_subcommand("reduce", "move a degenerate curve into a smaller Heisenberg group");
  reduce->add_option("--input", cfg.input)->required();
  reduce->add_option("--out", cfg.out)->required();
  reduce->add_option("--out-symmetry", cfg.out_symmetry)->required();
  reduce->add_flag("--restrict", cfg.restrict_output, "write the curve in H_k instead of H_n");
  add_rank(reduce);
  add_samples(reduce);

  auto* synthesize = app.add_subcommand("synthesize", "canonical curve with a given invariant profile");
  synthesize->add_option("--profile", cfg.profile)->required();
  synthesize->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  synthesize->add_option("--out", cfg.out)->required();
  synthesize->add_option("--step", cfg.step, "integrator step")->check(positive);

  auto* congruence = app.add_subcommand("congruence", "decide whether two curves differ by a symmetry");
  congruence->add_option("--a", cfg.a)->required();
  congruence->add_option("--b", cfg.b)->required();
  congruence->add_option("--tol-congruence", cfg.tol_congruence)->check(positive);
  add_samples(congruence);

  auto* geodesic = app.add_subcommand("geodesic", "sample a horizontal geodesic");
  geodesic->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  geodesic->add_option("--lambda", cfg.lambda)->required();
  geodesic->add_option("--A", cfg.A)->required()->delimiter(',');
  geodesic->add_option("--B", cfg.B)->delimiter(',');
  geodesic->add_option("--x0", cfg.x0)->delimiter(',');
  geodesic->add_option("--y0", cfg.y0)->delimiter(',');
  geodesic->add_option("--t0", cfg.t0);
  geodesic->add_option("--s-max", cfg.s_max)->check(positive);
  add_samples(geodesic);
  geodesic->add_option("--out", cfg.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out, err);
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, out);
    if (synthesize->parsed()) return cmd_synthesize(cfg);
    if (congruence->parsed()) return cmd_congruence(cfg, out);
    return cmd_geodesic(cfg);
  } catch (const Exit& e) {
    err << "hcurve: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "hcurve: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return code_for(e.kind());
  } catch (const std::exception& e) {
    err << "hcurve: " << e.what() << "\n";
    return kSoftware;
  }
}

}  // namespace hcurve::cli
