#include "specrank/linear_solve.hpp"

namespace specrank {

namespace {

Polynomial lcm_poly(const Polynomial& a, const Polynomial& b) {
    Polynomial g = poly_gcd(a, b);
    return (a * divrem(b, g).first).monic();
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("non-exact division in fraction-free elimination");
    return q;
}

}  // namespace

std::vector<RationalFunction> solve_left_parametric(const std::vector<RationalFunction>& u,
                                                    const Matrix<RationalFunction>& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n || u.size() != n) throw std::invalid_argument("dimension mismatch");

    // x*A = u  <=>  A^T x^T = u^T. Scaling column j of A (row j of A^T)
    // together with u_j by the same polynomial leaves x unchanged, so clear
    // all denominators per column of A / entry of u first.
    Matrix<Polynomial> m(n, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial scale(BigRat(1));
        for (std::size_t i = 0; i < n; ++i) scale = lcm_poly(scale, a(i, j).den());
        scale = lcm_poly(scale, u[j].den());
        for (std::size_t i = 0; i < n; ++i) {
            const RationalFunction& e = a(i, j);
            m(j, i) = e.num() * exact_div(scale, e.den());
        }
        m(j, n) = u[j].num() * exact_div(scale, u[j].den());
    }

    // Bareiss fraction-free forward elimination; pivots are the lowest-degree
    // nonzero entries in the current column.
    std::vector<std::size_t> row_order(n);
    for (std::size_t i = 0; i < n; ++i) row_order[i] = i;
    Polynomial prev_pivot(BigRat(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = n;
        for (std::size_t r = k; r < n; ++r) {
            const Polynomial& cand = m(row_order[r], k);
            if (cand.is_zero()) continue;
            if (best == n || cand.degree() < m(row_order[best], k).degree()) best = r;
        }
        if (best == n) throw singular_matrix_error(k);
        std::swap(row_order[k], row_order[best]);
        const std::size_t pk = row_order[k];
        for (std::size_t r = k + 1; r < n; ++r) {
            const std::size_t pr = row_order[r];
            for (std::size_t j = k + 1; j <= n; ++j) {
                Polynomial t = m(pr, j) * m(pk, k) - m(pr, k) * m(pk, j);
                m(pr, j) = exact_div(t, prev_pivot);
            }
            m(pr, k) = Polynomial{};
        }
        prev_pivot = m(pk, k);
    }

    // back substitution in the rational-function field
    std::vector<RationalFunction> x(n);
    for (std::size_t ik = n; ik-- > 0;) {
        const std::size_t pr = row_order[ik];
        RationalFunction acc(m(pr, n));
        for (std::size_t j = ik + 1; j < n; ++j)
            acc = acc - RationalFunction(m(pr, j)) * x[j];
        x[ik] = acc / RationalFunction(m(pr, ik));
    }
    return x;
}

}  // namespace specrank
