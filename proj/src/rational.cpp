#include "zkdesk/rational.hpp"

#include "zkdesk/common.hpp"

namespace zkdesk {

std::optional<uint32_t> denominator_pow2(const Rational& r) {
    BigInt den = boost::multiprecision::denominator(r);
    if (den <= 0) return std::nullopt;
    uint32_t p = 0;
    while ((den & 1) == 0) {
        den >>= 1;
        ++p;
    }
    if (den != 1) return std::nullopt;
    return p;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw PreconditionError("empty rational");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw PreconditionError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        bool negative = !digits.empty() && digits[0] == '-';
        if (negative) digits.erase(0, 1);
        // strip leading zeros so the big-int constructor reads base 10
        size_t first = digits.find_first_not_of('0');
        digits = first == std::string::npos ? "0" : digits.substr(first);
        const size_t frac_digits = text.size() - dot - 1;
        BigInt den = 1;
        for (size_t i = 0; i < frac_digits; ++i) den *= 10;
        BigInt num(digits);
        if (negative) num = -num;
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw PreconditionError("bad rational '" + text + "': " + e.what());
    }
}

Rational snap_to_dyadic(const Rational& r, uint32_t bits) {
    Rational clamped = r;
    if (clamped < 0) clamped = 0;
    if (clamped > 1) clamped = 1;
    BigInt scale = 1;
    scale <<= bits;
    Rational scaled = clamped * Rational(scale);
    BigInt num = boost::multiprecision::numerator(scaled);
    BigInt den = boost::multiprecision::denominator(scaled);
    BigInt q = num / den;
    BigInt rem = num - q * den;
    // round half to even
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && (q & 1) == 1)) ++q;
    return Rational(q, scale);
}

} // namespace zkdesk
