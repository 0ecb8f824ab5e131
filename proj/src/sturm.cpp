#include "specrank/sturm.hpp"

#include <stdexcept>

#include "specrank/errors.hpp"

namespace specrank {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
    std::vector<Polynomial> chain;
    Polynomial p0 = square_free_part(p).primitive();
    chain.push_back(p0);
    if (p0.degree() == 0) return chain;
    Polynomial p1 = p0.derivative().primitive();
    chain.push_back(p1);
    while (chain.back().degree() > 0) {
        Polynomial r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) {
            // square-free input: only possible if p1 divides p0 exactly at the
            // last step; the chain already ends in the gcd, a constant
            break;
        }
        chain.push_back((-r).primitive());
    }
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const BigRat& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int count_real_roots(const Polynomial& p, const BigRat& a, const BigRat& b) {
    if (!(a < b)) throw std::invalid_argument("invalid interval: need a < b");
    auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_real_roots(const Polynomial& p, const BigRat& a, const BigRat& b,
                     bool include_a, bool include_b) {
    int n = count_real_roots(p, a, b);  // roots in (a, b]
    Polynomial sf = square_free_part(p);
    if (include_a && sf.eval(a) == 0) ++n;
    if (!include_b && sf.eval(b) == 0) --n;
    return n;
}

}  // namespace specrank
