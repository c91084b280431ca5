#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "bers/grid.hpp"

namespace bers {

// Residual norms per refinement level plus the observed convergence order.
// Levels are appended coarse to fine; order is defined once >= 3 levels exist.
struct ResidualReport {
    std::string op;
    std::vector<double> h;
    std::vector<double> max_norm;
    std::vector<double> l2_norm;

    // Norms at or below this are treated as exactly solved; slopes computed
    // from rounding noise are meaningless.
    static constexpr double kZeroFloor = 1e-13;

    void append_level(double step, const Norms& n) {
        h.push_back(step);
        max_norm.push_back(n.max_norm);
        l2_norm.push_back(n.l2_norm);
    }

    std::size_t levels() const { return h.size(); }
    double finest_h() const { return h.empty() ? std::numeric_limits<double>::quiet_NaN() : h.back(); }
    double finest_max() const {
        return max_norm.empty() ? std::numeric_limits<double>::quiet_NaN() : max_norm.back();
    }
    double finest_l2() const {
        return l2_norm.empty() ? std::numeric_limits<double>::quiet_NaN() : l2_norm.back();
    }

    bool exactly_zero() const {
        if (max_norm.empty()) return false;
        for (double m : max_norm)
            if (m > kZeroFloor) return false;
        return true;
    }

    double order_max() const { return observed_order(h, max_norm); }
    double order_l2() const { return observed_order(h, l2_norm); }

    // Least-squares slope of log(norm) against log(h). +inf when every level
    // sits at the zero floor, NaN with fewer than three levels.
    static double observed_order(const std::vector<double>& hs, const std::vector<double>& es) {
        if (hs.size() < 3 || hs.size() != es.size()) return std::numeric_limits<double>::quiet_NaN();
        bool all_zero = true;
        for (double e : es)
            if (e > kZeroFloor) all_zero = false;
        if (all_zero) return std::numeric_limits<double>::infinity();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const double x = std::log(hs[i]);
            const double y = std::log(std::max(es[i], kZeroFloor));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
};

// Runs `eval` once per refinement level (0 = coarsest); eval(level) returns
// the (h, norms) pair for that level.
template <class Eval>
ResidualReport refinement_study(const std::string& op, int levels, Eval&& eval) {
    ResidualReport rep;
    rep.op = op;
    for (int l = 0; l < levels; ++l) {
        const auto [h, norms] = eval(l);
        rep.append_level(h, norms);
    }
    return rep;
}

// Helper for the common pattern: refine a node count n -> 2(n-1)+1.
inline std::size_t refine_count(std::size_t base, int level) {
    std::size_t n = base;
    for (int i = 0; i < level; ++i) n = 2 * (n - 1) + 1;
    return n;
}

}  // namespace bers
