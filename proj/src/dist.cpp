#include "zkdesk/dist.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace zkdesk {

Rational ExactDist::mass(uint64_t x) const {
    auto it = num.find(x);
    if (it == num.end()) return Rational(0);
    return Rational(it->second, den);
}

std::set<uint64_t> ExactDist::support() const {
    std::set<uint64_t> s;
    for (const auto& [k, v] : num) s.insert(k);
    return s;
}

void ExactDist::check_consistent() const {
    if (width == 0 || width > 62) throw PreconditionError("distribution width out of range");
    BigInt total = 0;
    for (const auto& [k, v] : num) {
        if (v <= 0) throw PreconditionError("nonpositive mass in distribution");
        if (width < 62 && k >= (uint64_t(1) << width))
            throw PreconditionError("support element wider than declared width");
        total += v;
    }
    if (total != den) throw PreconditionError("masses do not sum to 1");
}

void ExactDist::align(ExactDist& a, ExactDist& b) {
    if (a.den == b.den) return;
    BigInt g = boost::multiprecision::gcd(a.den, b.den);
    BigInt fa = b.den / g;
    BigInt fb = a.den / g;
    if (fa != 1) {
        for (auto& [k, v] : a.num) v *= fa;
        a.den *= fa;
    }
    if (fb != 1) {
        for (auto& [k, v] : b.num) v *= fb;
        b.den *= fb;
    }
}

ExactDist ExactDist::point(uint32_t width, uint64_t x) {
    ExactDist d;
    d.width = width;
    d.den = 1;
    d.num[x] = 1;
    return d;
}

ExactDist ExactDist::uniform(uint32_t width) {
    ExactDist d;
    d.width = width;
    d.den = BigInt(1) << width;
    for (uint64_t x = 0; x < (uint64_t(1) << width); ++x) d.num[x] = 1;
    return d;
}

ExactDist enumerate_dist(const Circuit& c, uint32_t budget) {
    require_valid(c);
    if (c.n_inputs > budget)
        throw BudgetExceeded("enumeration over " + std::to_string(c.n_inputs) +
                             " input bits exceeds budget " + std::to_string(budget));
    if (c.width() > 62) throw BudgetExceeded("output width exceeds 62 bits");

    const uint64_t total = uint64_t(1) << c.n_inputs;
    // dense tally when the output space is small enough, hashed otherwise
    const bool dense = c.width() <= 26;
    std::vector<uint64_t> dense_tally;
    std::unordered_map<uint64_t, uint64_t> sparse_tally;
    if (dense)
        dense_tally.assign(uint64_t(1) << c.width(), 0);
    else
        sparse_tally.reserve(1 << std::min<uint32_t>(c.n_inputs, 20));
    auto bump = [&](uint64_t key) {
        if (dense)
            ++dense_tally[key];
        else
            ++sparse_tally[key];
    };

    if (c.n_inputs >= 6) {
        std::vector<uint64_t> words;
        std::vector<uint64_t> keys(64);
        for (uint64_t base = 0; base < total; base += 64) {
            c.evaluate_block(base, words);
            std::fill(keys.begin(), keys.end(), 0);
            for (size_t k = 0; k < words.size(); ++k) {
                uint64_t w = words[k];
                while (w) {
                    const int j = std::countr_zero(w);
                    keys[j] |= uint64_t(1) << k;
                    w &= w - 1;
                }
            }
            for (int j = 0; j < 64; ++j) bump(keys[j]);
        }
    } else {
        for (uint64_t r = 0; r < total; ++r) bump(c.evaluate_u64(r));
    }

    ExactDist d;
    d.width = c.width();
    d.den = BigInt(1) << c.n_inputs;
    if (dense) {
        for (uint64_t k = 0; k < dense_tally.size(); ++k)
            if (dense_tally[k]) d.num[k] = dense_tally[k];
    } else {
        for (const auto& [k, v] : sparse_tally) d.num[k] = v;
    }
    return d;
}

namespace {

void require_same_width(const ExactDist& x, const ExactDist& y) {
    if (x.width != y.width)
        throw PreconditionError("width mismatch: " + std::to_string(x.width) + " vs " +
                                std::to_string(y.width));
}

} // namespace

Rational statistical_difference(const ExactDist& x, const ExactDist& y) {
    require_same_width(x, y);
    ExactDist a = x, b = y;
    ExactDist::align(a, b);
    BigInt sum_abs = 0;
    for (const auto& [k, v] : a.num) {
        auto it = b.num.find(k);
        BigInt diff = (it == b.num.end()) ? v : v - it->second;
        sum_abs += boost::multiprecision::abs(diff);
    }
    for (const auto& [k, v] : b.num)
        if (!a.num.count(k)) sum_abs += v;
    return Rational(sum_abs, a.den * 2);
}

Rational statistical_closeness(const ExactDist& x, const ExactDist& y) {
    return Rational(1) - statistical_difference(x, y);
}

Rational disjointness(const ExactDist& x, const ExactDist& y) {
    require_same_width(x, y);
    BigInt outside = 0;
    for (const auto& [k, v] : x.num)
        if (!y.num.count(k)) outside += v;
    return Rational(outside, x.den);
}

Rational mutual_disjointness(const ExactDist& x, const ExactDist& y) {
    return std::min(disjointness(x, y), disjointness(y, x));
}

double shannon_entropy(const ExactDist& x) {
    double h = 0.0;
    const double log2den = std::log2(to_double(Rational(x.den)));
    for (const auto& [k, v] : x.num) {
        const double p = to_double(Rational(v, x.den));
        // log2(p) via the numerator to stay accurate for tiny masses
        const double log2p = std::log2(v.convert_to<double>()) - log2den;
        h -= p * log2p;
    }
    return h < 0.0 ? 0.0 : h;
}

double preimage_log_count(const Circuit& c, uint64_t x, uint32_t budget) {
    ExactDist d = enumerate_dist(c, budget);
    auto it = d.num.find(x);
    if (it == d.num.end()) return -std::numeric_limits<double>::infinity();
    return std::log2(it->second.convert_to<double>());
}

Rational typicality_mass(const ExactDist& x, double threshold) {
    const double h = shannon_entropy(x);
    const double log2den = std::log2(to_double(Rational(x.den)));
    BigInt inside = 0;
    for (const auto& [k, v] : x.num) {
        const double log2p = std::log2(v.convert_to<double>()) - log2den;
        if (std::abs(log2p + h) <= threshold) inside += v;
    }
    return Rational(inside, x.den);
}

std::string format_bits(uint64_t x, uint32_t width) {
    std::string s(width, '0');
    for (uint32_t i = 0; i < width; ++i)
        if ((x >> i) & 1u) s[i] = '1';
    return s;
}

std::string dist_to_csv(const ExactDist& x) {
    std::string out = "bitstring,numerator,denominator_power\n";
    BigInt den = x.den, probe = 1;
    uint32_t p = 0;
    while (probe < den) {
        probe <<= 1;
        ++p;
    }
    if (probe != den) throw PreconditionError("CSV export requires a dyadic distribution");
    for (const auto& [k, v] : x.num)
        out += format_bits(k, x.width) + "," + v.str() + "," + std::to_string(p) + "\n";
    return out;
}

} // namespace zkdesk
