#include "resdiv/rational.hpp"

#include <stdexcept>

namespace resdiv {

namespace {

BigInt pow10(int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= 10;
    return r;
}

}  // namespace

std::string rational_to_decimal(const Rational& r, int sig) {
    if (sig < 1) throw std::invalid_argument("rational_to_decimal: sig must be >= 1");
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (num == 0) return "0";
    const bool neg = num < 0;
    const BigInt a = neg ? BigInt(-num) : num;
    if (den == 1 && a < pow10(sig)) return (neg ? "-" : "") + a.str();

    // decimal exponent e10 with 10^e10 <= a/den < 10^(e10+1)
    int e10 = static_cast<int>(a.str().size()) - static_cast<int>(den.str().size());
    if (a * pow10(e10 < 0 ? -e10 : 0) < den * pow10(e10 > 0 ? e10 : 0)) --e10;

    // round-half-up to `sig` significant digits
    const int shift = sig - 1 - e10;
    BigInt scaled_num = a, scaled_den = den;
    if (shift >= 0)
        scaled_num *= pow10(shift);
    else
        scaled_den *= pow10(-shift);
    BigInt digits = scaled_num / scaled_den;
    if ((scaled_num - digits * scaled_den) * 2 >= scaled_den) ++digits;
    if (digits >= pow10(sig)) {  // rounding carried into a new digit
        digits /= 10;
        ++e10;
    }

    std::string ds = digits.str();
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

    std::string out = neg ? "-" : "";
    if (e10 >= sig || e10 < -4) {
        out += ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        out += "e" + std::to_string(e10);
    } else if (e10 >= 0) {
        const std::size_t ip = static_cast<std::size_t>(e10) + 1;
        if (ds.size() <= ip) {
            out += ds + std::string(ip - ds.size(), '0');
        } else {
            out += ds.substr(0, ip) + "." + ds.substr(ip);
        }
    } else {
        out += "0." + std::string(-e10 - 1, '0') + ds;
    }
    return out;
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace resdiv
