#include "hcurve/interp.hpp"

#include <algorithm>
#include <cmath>

#include "hcurve/error.hpp"

namespace hcurve {

std::size_t locate_interval(std::span<const double> xs, double x) {
  require(xs.size() >= 2, ErrorKind::invalid_argument, "locate_interval: need at least two nodes");
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const auto idx = static_cast<std::ptrdiff_t>(it - xs.begin()) - 1;
  return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(xs.size()) - 2));
}

double lagrange_cubic(std::span<const double> xs, std::span<const double> ys, double x) {
  require(xs.size() == ys.size() && !xs.empty(), ErrorKind::invalid_argument, "lagrange_cubic: bad node arrays");
  if (xs.size() == 1) return ys[0];
  const std::size_t count = std::min<std::size_t>(4, xs.size());
  const std::size_t i = locate_interval(xs, x);
  const std::size_t first =
      std::min<std::size_t>(i >= 1 ? i - 1 : 0, xs.size() - count);
  double acc = 0.0;
  for (std::size_t a = first; a < first + count; ++a) {
    double w = 1.0;
    for (std::size_t b = first; b < first + count; ++b) {
      if (b != a) w *= (x - xs[b]) / (xs[a] - xs[b]);
    }
    acc += w * ys[a];
  }
  return acc;
}

std::vector<double> monotone_slopes(std::span<const double> xs, std::span<const double> ys, std::vector<double> d) {
  require(xs.size() == ys.size() && d.size() == xs.size(), ErrorKind::invalid_argument, "monotone_slopes: size mismatch");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double secant = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    if (secant == 0.0) {
      d[i] = 0.0;
      d[i + 1] = 0.0;
      continue;
    }
    double a = d[i] / secant;
    double b = d[i + 1] / secant;
    if (a < 0.0) {
      d[i] = 0.0;
      a = 0.0;
    }
    if (b < 0.0) {
      d[i + 1] = 0.0;
      b = 0.0;
    }
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double scale = 3.0 / std::sqrt(r);
      d[i] = scale * a * secant;
      d[i + 1] = scale * b * secant;
    }
  }
  return d;
}

double hermite(double x0, double x1, double y0, double y1, double d0, double d1, double x) {
  const double h = x1 - x0;
  const double t = (x - x0) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
}

}  // namespace hcurve
