#pragma once

#include "specrank/polynomial.hpp"

namespace specrank {

/// Quotient of two rational-coefficient polynomials, kept canonical:
/// numerator and denominator coprime, denominator monic, zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial(BigRat(1))) {}
    RationalFunction(Polynomial num, Polynomial den);  // reduces
    explicit RationalFunction(BigRat constant)
        : num_(Polynomial(std::move(constant))), den_(Polynomial(BigRat(1))) {}
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial(BigRat(1))) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const = default;

    /// Exact value; throws pole_error when the reduced denominator vanishes.
    BigRat eval(const BigRat& x) const;

    std::string str(const std::string& var = "x") const;

private:
    Polynomial num_, den_;
};

}  // namespace specrank
