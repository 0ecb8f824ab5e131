#include "specrank/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "specrank/errors.hpp"

namespace specrank {

namespace {

// decimal-only integer parse; cpp_int's string constructor would read a
// leading zero as an octal prefix
BigInt parse_integer(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    if (s.empty()) throw parse_error("missing digits in '" + text + "'");
    std::size_t nz = s.find_first_not_of('0');
    s = nz == std::string::npos ? "0" : s.substr(nz);
    if (s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("non-digit in '" + text + "'");
    BigInt v(s);
    return negative ? -v : v;
}

}  // namespace

BigRat rat_from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in '" + text + "'");
        return BigRat(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return BigRat(parse_integer(text));
    // decimal: digits after the dot scale the denominator
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return BigRat(parse_integer(digits), den);
}

std::string rat_to_string(const BigRat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

double rat_to_double(const BigRat& q) { return q.convert_to<double>(); }

BigRat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite double");
    if (x == 0.0) return BigRat(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral
    BigInt num(static_cast<long long>(std::ldexp(mant, 53)));
    exp -= 53;
    BigRat r(num);
    if (exp > 0)
        r *= BigRat(BigInt(1) << exp);
    else if (exp < 0)
        r /= BigRat(BigInt(1) << -exp);
    return r;
}

}  // namespace specrank
