#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>

namespace bers {

// Determinant by Gaussian elimination with partial pivoting. Sized for the
// nodewise independence checks (4x4 complex, 6x6 real); not a general linear
// algebra facility.
template <class T, std::size_t N>
T det_small(std::array<std::array<T, N>, N> m) {
    T det = T(1);
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        double best = std::abs(m[col][col]);
        for (std::size_t r = col + 1; r < N; ++r) {
            const double cand = std::abs(m[r][col]);
            if (cand > best) {
                best = cand;
                piv = r;
            }
        }
        if (best == 0.0) return T(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            const T factor = m[r][col] / m[col][col];
            for (std::size_t c = col + 1; c < N; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

}  // namespace bers
