#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hcurve {

/// Cubic Lagrange interpolation through the 4 nodes nearest to `x` (fewer if the grid is shorter).
double lagrange_cubic(std::span<const double> xs, std::span<const double> ys, double x);

/// Fritsch–Carlson limiting of node slopes for monotone data; returns the adjusted slopes.
std::vector<double> monotone_slopes(std::span<const double> xs, std::span<const double> ys,
                                    std::vector<double> slopes);

/// Cubic Hermite on [x0, x1].
double hermite(double x0, double x1, double y0, double y1, double d0, double d1, double x);

/// Index i with xs[i] <= x <= xs[i+1], clamped to the valid interval range.
std::size_t locate_interval(std::span<const double> xs, double x);

}  // namespace hcurve
