#include "specrank/rational_function.hpp"

#include <stdexcept>

#include "specrank/errors.hpp"

namespace specrank {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(BigRat(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    BigRat lead = den_.leading();
    if (lead != 1) {
        BigRat inv = BigRat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    // cross-reduce first to keep the big multiply small
    RationalFunction a(num_, o.den_);
    RationalFunction b(o.num_, den_);
    RationalFunction r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    RationalFunction a(num_, o.num_);
    RationalFunction b(o.den_, den_);
    Polynomial num = a.num_ * b.num_;
    Polynomial den = a.den_ * b.den_;
    // denominator sign may have flipped; renormalize
    return RationalFunction(std::move(num), std::move(den));
}

BigRat RationalFunction::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d == 0) throw pole_error("pole at " + rat_to_string(x));
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Polynomial(BigRat(1))) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace specrank
