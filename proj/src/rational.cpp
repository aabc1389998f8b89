#include "vdm/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace vdm {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after this step
    }
    return result;
}

Rational pow2(int e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e >= 0 ? Rational(p) : Rational(1, p);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

std::string to_decimal_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", to_double(r));
    return buf;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    int frac_len = static_cast<int>(text.size() - dot - 1);
    if (frac_len == 0) return Rational(BigInt(digits));
    BigInt scale = 1;
    for (int i = 0; i < frac_len; ++i) scale *= 10;
    return Rational(BigInt(digits), scale);
}

}  // namespace vdm
