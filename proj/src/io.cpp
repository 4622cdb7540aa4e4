#include "hcurve/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string_view>
#include <vector>

#include "hcurve/error.hpp"

namespace hcurve::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::parse, std::string("JSON: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("JSON: field '") + key + "' has the wrong type: " + e.what());
  }
}

double parse_double(std::string_view token, std::size_t line) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) token.remove_suffix(1);
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    fail(ErrorKind::parse, "CSV line " + std::to_string(line) + ": not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

json symmetry_json(const Symmetry& phi) {
  const int n = phi.n();
  std::vector<double> rotation;
  rotation.reserve(static_cast<std::size_t>(4 * n * n));
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) rotation.push_back(phi.rotation()(r, c) + 0.0);
  }
  const Eigen::VectorXd& t = phi.translation().coords();
  return {{"n", n}, {"rotation", rotation}, {"translation", std::vector<double>(t.data(), t.data() + t.size())}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

SampledCurve curve_from_json(const std::string& text) {
  const json j = parse_json(text);
  const int n = field<int>(j, "n");
  if (n < 1) fail(ErrorKind::parse, "curve JSON: n must be positive");
  const auto params = field<std::vector<double>>(j, "params");
  const auto points = field<std::vector<std::vector<double>>>(j, "points");
  const bool arclength = j.contains("is_arclength") ? field<bool>(j, "is_arclength") : false;
  if (points.size() != params.size()) fail(ErrorKind::parse, "curve JSON: params and points differ in length");
  Eigen::MatrixXd coords(static_cast<Eigen::Index>(points.size()), 2 * n + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != static_cast<std::size_t>(2 * n + 1)) {
      fail(ErrorKind::parse, "curve JSON: point " + std::to_string(i) + " must have 2n+1 coordinates");
    }
    for (int c = 0; c <= 2 * n; ++c) coords(static_cast<Eigen::Index>(i), c) = points[i][static_cast<std::size_t>(c)];
  }
  return {n, params, std::move(coords), arclength};
}

std::string curve_to_json(const SampledCurve& c) {
  json points = json::array();
  for (Eigen::Index i = 0; i < c.coords().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.coords().cols(); ++k) row.push_back(c.coords()(i, k));
    points.push_back(std::move(row));
  }
  const json j = {{"n", c.n()}, {"params", c.params()}, {"points", std::move(points)}, {"is_arclength", c.is_arclength()}};
  return j.dump() + "\n";
}

InvariantProfile profile_from_csv(const std::string& text, int expected_n) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  InvariantProfile p;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (!header_seen) {
      if (cells.size() < 3 || trim(cells.front()) != "s" || trim(cells.back()) != "tau") {
        fail(ErrorKind::parse, "profile CSV: header must be s,kappa_1,...,kappa_n,tau");
      }
      p.n = static_cast<int>(cells.size()) - 2;
      for (int j = 1; j <= p.n; ++j) {
        if (trim(cells[static_cast<std::size_t>(j)]) != "kappa_" + std::to_string(j)) {
          fail(ErrorKind::parse, "profile CSV: column " + std::to_string(j + 1) + " must be kappa_" + std::to_string(j));
        }
      }
      if (expected_n > 0 && p.n != expected_n) {
        fail(ErrorKind::parse, "profile CSV: has " + std::to_string(p.n) + " curvature columns, expected " +
                                   std::to_string(expected_n));
      }
      p.kappa.assign(static_cast<std::size_t>(p.n), {});
      header_seen = true;
      continue;
    }
    if (cells.size() != static_cast<std::size_t>(p.n + 2)) {
      fail(ErrorKind::parse, "profile CSV line " + std::to_string(line_no) + ": expected " + std::to_string(p.n + 2) + " columns");
    }
    p.s.push_back(parse_double(cells[0], line_no));
    for (int j = 0; j < p.n; ++j) p.kappa[static_cast<std::size_t>(j)].push_back(parse_double(cells[static_cast<std::size_t>(j + 1)], line_no));
    p.tau.push_back(parse_double(cells.back(), line_no));
  }
  if (!header_seen || p.s.empty()) fail(ErrorKind::parse, "profile CSV: no data rows");
  return p;
}

std::string profile_to_csv(const InvariantProfile& p) {
  p.validate();
  std::string out = "s";
  for (int j = 1; j <= p.n; ++j) out += ",kappa_" + std::to_string(j);
  out += ",tau\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += format_double(p.s[i]);
    for (const auto& k : p.kappa) out += "," + format_double(k[i]);
    out += "," + format_double(p.tau[i]) + "\n";
  }
  return out;
}

std::string report_to_json(const OrderReport& r) {
  const json j = {{"n", r.n},
                  {"order", r.order},
                  {"totally_real", r.totally_real},
                  {"nondegenerate", r.nondegenerate},
                  {"margins", r.margins}};
  return j.dump(2) + "\n";
}

std::string symmetry_to_json(const Symmetry& phi) { return symmetry_json(phi).dump(2) + "\n"; }

Symmetry symmetry_from_json(const std::string& text) {
  const json j = parse_json(text);
  const int n = field<int>(j, "n");
  const auto rotation = field<std::vector<double>>(j, "rotation");
  const auto translation = field<std::vector<double>>(j, "translation");
  if (n < 1 || rotation.size() != static_cast<std::size_t>(4 * n * n) ||
      translation.size() != static_cast<std::size_t>(2 * n + 1)) {
    fail(ErrorKind::parse, "symmetry JSON: rotation must be 2n x 2n and translation of length 2n+1");
  }
  Eigen::MatrixXd r(2 * n, 2 * n);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) r(a, b) = rotation[static_cast<std::size_t>(a * 2 * n + b)];
  }
  return {r, HPoint::from_coords(Eigen::Map<const Eigen::VectorXd>(translation.data(), static_cast<Eigen::Index>(translation.size())))};
}

std::string congruence_to_json(const CongruenceReport& r) {
  json j = {{"congruent", r.congruent()}, {"order_a", r.order_a}, {"order_b", r.order_b}};
  if (r.difference) {
    j["kappa_difference"] = r.difference->kappa;
    j["tau_difference"] = r.difference->tau;
  }
  if (r.motion) {
    j["symmetry"] = symmetry_json(*r.motion);
    j["alignment_residual"] = r.alignment_residual;
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) fail(ErrorKind::io, "write to '" + path.string() + "' failed");
}

}  // namespace hcurve::io
