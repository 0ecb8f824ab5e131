#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specrank/rational.hpp"

namespace specrank {

/// Univariate polynomial over the rationals, coefficients stored in
/// ascending degree. The zero polynomial has an empty coefficient vector;
/// otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(BigRat constant);
    explicit Polynomial(std::vector<BigRat> coeffs);  // trims trailing zeros

    static Polynomial variable();  // x
    static Polynomial monomial(std::size_t degree, BigRat coeff);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRat>& coefficients() const { return c_; }
    const BigRat& leading() const;
    BigRat coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }

    BigRat eval(const BigRat& x) const;

    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const BigRat& s) const;

    bool operator==(const Polynomial& o) const = default;

    /// Scales so the leading coefficient is 1. Undefined on zero.
    Polynomial monic() const;

    /// Scales by a positive rational so coefficients are coprime integers.
    /// Sign of the polynomial is preserved; used to keep remainder chains
    /// small without disturbing sign variations.
    Polynomial primitive() const;

    std::string str(const std::string& var = "x") const;

    /// JSON-friendly form: "num/den" strings, ascending degree.
    std::vector<std::string> to_strings() const;
    static Polynomial from_strings(const std::vector<std::string>& coeffs);

private:
    void trim();
    std::vector<BigRat> c_;
};

/// Quotient and remainder; throws on zero divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0,0) is an error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// p with repeated roots collapsed: p / gcd(p, p').
Polynomial square_free_part(const Polynomial& p);

}  // namespace specrank
