#pragma once

#include <cstddef>
#include <vector>

#include "bers/errors.hpp"

namespace bers {

// Shape-preserving cubic Hermite interpolant. Node slopes come from local
// 4-point Lagrange derivatives (cubic order), then get the classical
// monotonicity clamp: zero at local extrema of the data, magnitude at most
// 3x the smaller adjacent secant. On smooth strictly monotone data the clamp
// stays inactive and the interpolant is 4th-order accurate.
class MonotoneCubic {
  public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double value(double x) const;
    double derivative(double x) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }

  private:
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // node slopes
};

// Cumulative integral of uniformly sampled data, 4th order. Even nodes use
// composite Simpson pairs; odd nodes add the integral of the local parabola
// over the half pair.
std::vector<double> cumulative_simpson(const std::vector<double>& g, double h);

inline double simpson_integral(const std::vector<double>& g, double h) {
    return cumulative_simpson(g, h).back();
}

// 4-point Lagrange interpolation on a uniform grid (value and derivative).
// Matches the quadrature order of the tables it reads from.
double uniform_cubic_value(const std::vector<double>& y, double x0, double h, double x);
double uniform_cubic_derivative(const std::vector<double>& y, double x0, double h, double x);

}  // namespace bers
