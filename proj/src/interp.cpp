#include "bers/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bers {

namespace {

// Derivative at x_at of the Lagrange polynomial through (xs[i], ys[i]).
double lagrange_derivative_at(const double* xs, const double* ys, int n, double x_at) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double dsum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double prod = 1.0;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                prod *= (x_at - xs[k]) / (xs[i] - xs[k]);
            }
            dsum += prod / (xs[i] - xs[j]);
        }
        acc += ys[i] * dsum;
    }
    return acc;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 4 || y_.size() != n) throw GridTooSmall("MonotoneCubic: need >= 4 nodes");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(x_[k + 1] > x_[k])) throw NonMonotone("MonotoneCubic: abscissae not strictly increasing");

    m_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t s = std::min(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(k) - 1),
                                       static_cast<std::ptrdiff_t>(n - 4));
        m_[k] = lagrange_derivative_at(&x_[s], &y_[s], 4, x_[k]);
    }

    // Monotonicity clamp against the adjacent secants.
    auto secant = [&](std::size_t k) { return (y_[k + 1] - y_[k]) / (x_[k + 1] - x_[k]); };
    for (std::size_t k = 0; k < n; ++k) {
        const bool has_left = k > 0;
        const bool has_right = k + 1 < n;
        const double dl = has_left ? secant(k - 1) : secant(k);
        const double dr = has_right ? secant(k) : secant(k - 1);
        if (dl * dr <= 0.0 && has_left && has_right) {
            m_[k] = 0.0;
            continue;
        }
        const double ref = has_left && has_right ? std::min(std::abs(dl), std::abs(dr))
                                                 : std::abs(has_left ? dl : dr);
        const double sign = (has_left ? dl : dr) < 0.0 ? -1.0 : 1.0;
        if (m_[k] * sign < 0.0)
            m_[k] = 0.0;
        else if (std::abs(m_[k]) > 3.0 * ref)
            m_[k] = sign * 3.0 * ref;
    }
}

std::size_t MonotoneCubic::interval(double x) const {
    const double span = x_.back() - x_.front();
    const double slack = 1e-12 * span;
    if (x < x_.front() - slack || x > x_.back() + slack)
        throw OutOfDomain("MonotoneCubic: abscissa outside the data range");
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - x_.begin());
    if (k == 0) return 0;
    if (k >= x_.size()) return x_.size() - 2;
    return k - 1;
}

double MonotoneCubic::value(double x) const {
    const std::size_t k = interval(x);
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[k] + (t3 - 2 * t2 + t) * h * m_[k] +
           (-2 * t3 + 3 * t2) * y_[k + 1] + (t3 - t2) * h * m_[k + 1];
}

double MonotoneCubic::derivative(double x) const {
    const std::size_t k = interval(x);
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    const double t2 = t * t;
    return (6 * t2 - 6 * t) / h * y_[k] + (3 * t2 - 4 * t + 1) * m_[k] +
           (6 * t - 6 * t2) / h * y_[k + 1] + (3 * t2 - 2 * t) * m_[k + 1];
}

std::vector<double> cumulative_simpson(const std::vector<double>& g, double h) {
    const std::size_t n = g.size();
    if (n < 5) throw GridTooSmall("cumulative_simpson: need >= 5 samples");
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 2; k < n; k += 2)
        out[k] = out[k - 2] + h / 3.0 * (g[k - 2] + 4.0 * g[k - 1] + g[k]);
    for (std::size_t k = 1; k < n; k += 2) {
        if (k + 1 < n)
            out[k] = out[k - 1] + h / 12.0 * (5.0 * g[k - 1] + 8.0 * g[k] - g[k + 1]);
        else
            out[k] = out[k - 1] + h / 12.0 * (-g[k - 2] + 8.0 * g[k - 1] + 5.0 * g[k]);
    }
    return out;
}

namespace {

// Window base index for a 4-point stencil around x.
std::size_t cubic_window(std::size_t n, double x0, double h, double x) {
    const double u = (x - x0) / h;
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(std::floor(u));
    k -= 1;
    k = std::max<std::ptrdiff_t>(0, std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(n) - 4));
    return static_cast<std::size_t>(k);
}

}  // namespace

double uniform_cubic_value(const std::vector<double>& y, double x0, double h, double x) {
    const std::size_t n = y.size();
    if (n < 4) throw GridTooSmall("uniform_cubic_value: need >= 4 samples");
    const double span = h * static_cast<double>(n - 1);
    if (x < x0 - 1e-12 * span || x > x0 + span + 1e-12 * span)
        throw OutOfDomain("uniform_cubic_value: abscissa outside the table");
    const std::size_t s = cubic_window(n, x0, h, x);
    const double t = (x - (x0 + h * static_cast<double>(s))) / h;  // in [ -1, 4 ] near [0,3]
    // Lagrange basis on nodes 0,1,2,3 in units of h
    const double l0 = -(t - 1) * (t - 2) * (t - 3) / 6.0;
    const double l1 = t * (t - 2) * (t - 3) / 2.0;
    const double l2 = -t * (t - 1) * (t - 3) / 2.0;
    const double l3 = t * (t - 1) * (t - 2) / 6.0;
    return y[s] * l0 + y[s + 1] * l1 + y[s + 2] * l2 + y[s + 3] * l3;
}

double uniform_cubic_derivative(const std::vector<double>& y, double x0, double h, double x) {
    const std::size_t n = y.size();
    if (n < 4) throw GridTooSmall("uniform_cubic_derivative: need >= 4 samples");
    const double span = h * static_cast<double>(n - 1);
    if (x < x0 - 1e-12 * span || x > x0 + span + 1e-12 * span)
        throw OutOfDomain("uniform_cubic_derivative: abscissa outside the table");
    const std::size_t s = cubic_window(n, x0, h, x);
    const double t = (x - (x0 + h * static_cast<double>(s))) / h;
    const double d0 = -(3 * t * t - 12 * t + 11) / 6.0;
    const double d1 = (3 * t * t - 10 * t + 6) / 2.0;
    const double d2 = -(3 * t * t - 8 * t + 3) / 2.0;
    const double d3 = (3 * t * t - 6 * t + 2) / 6.0;
    return (y[s] * d0 + y[s + 1] * d1 + y[s + 2] * d2 + y[s + 3] * d3) / h;
}

}  // namespace bers
