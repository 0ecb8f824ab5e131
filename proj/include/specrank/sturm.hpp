#pragma once

#include <vector>

#include "specrank/polynomial.hpp"

namespace specrank {

/// Sturm sequence of the square-free part of p: p0 = p/gcd(p,p'), p1 = p0',
/// p_{i+1} = -rem(p_{i-1}, p_i), ending at a nonzero constant. Members are
/// scaled to primitive integer form (positive scaling only, which leaves
/// sign variations untouched).
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Sign variations of the chain evaluated at x, zeros skipped.
int sign_variations(const std::vector<Polynomial>& chain, const BigRat& x);

/// Distinct real roots of p in the half-open interval (a, b].
/// Repeated roots count once.
int count_real_roots(const Polynomial& p, const BigRat& a, const BigRat& b);

/// Distinct real roots with chosen endpoint inclusion.
int count_real_roots(const Polynomial& p, const BigRat& a, const BigRat& b,
                     bool include_a, bool include_b);

}  // namespace specrank
