#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "specrank/errors.hpp"
#include "specrank/matrix.hpp"
#include "specrank/rational.hpp"
#include "specrank/rational_function.hpp"

namespace specrank {

namespace detail {

// pivot-size heuristics: prefer small exact objects to slow growth
inline std::size_t pivot_size(const BigRat& q) {
    if (q.is_zero()) return 0;
    return msb(abs(numerator(q))) + msb(denominator(q));
}
inline std::size_t pivot_size(const RationalFunction& f) {
    return static_cast<std::size_t>(f.num().degree() + f.den().degree() + 2);
}
inline std::size_t pivot_size(const Polynomial& p) {
    return static_cast<std::size_t>(p.degree() + 1);
}

}  // namespace detail

/// Solves x * A = u exactly over a field (Gaussian elimination on the
/// transposed system, pivots chosen smallest-first among nonzero candidates).
/// Throws singular_matrix_error naming the offending column of A.
template <typename F>
std::vector<F> solve_left(const std::vector<F>& u, const Matrix<F>& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n || u.size() != n) throw std::invalid_argument("dimension mismatch");
    // augmented [A^T | u^T]; row i of the work matrix is column i of A
    Matrix<F> m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(j, i);
        m(i, n) = u[i];
    }
    std::vector<std::size_t> pivot_of_col(n);
    std::vector<bool> used(n, false);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = n;
        std::size_t best_size = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (used[r] || m(r, col) == F{}) continue;
            std::size_t s = detail::pivot_size(m(r, col));
            if (best == n || s < best_size) {
                best = r;
                best_size = s;
            }
        }
        if (best == n) throw singular_matrix_error(col);
        used[best] = true;
        pivot_of_col[col] = best;
        const F inv_pivot = F(1) / m(best, col);
        for (std::size_t j = 0; j <= n; ++j) m(best, j) = m(best, j) * inv_pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == best || m(r, col) == F{}) continue;
            F factor = m(r, col);
            for (std::size_t j = 0; j <= n; ++j) m(r, j) = m(r, j) - factor * m(best, j);
        }
    }
    std::vector<F> x(n);
    for (std::size_t col = 0; col < n; ++col) x[col] = m(pivot_of_col[col], n);
    return x;
}

/// Exact solve of x * A = u over the field of rational functions.
/// Internally clears denominators column-wise and runs fraction-free
/// (Bareiss) elimination on polynomials, so intermediate growth stays
/// determinant-bounded; the answer is reduced canonically.
std::vector<RationalFunction> solve_left_parametric(const std::vector<RationalFunction>& u,
                                                    const Matrix<RationalFunction>& a);

}  // namespace specrank
