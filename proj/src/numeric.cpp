#include "pgq/numeric.hpp"

#include "pgq/errors.hpp"

#include <cctype>

namespace pgq {

BigInt big_pow(std::uint64_t q, unsigned e) {
    BigInt base = q;
    BigInt out = 1;
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1; // always exact: product of j consecutive integers is divisible by j!
    }
    return out;
}

namespace {

bool is_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    Rational out;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_digits(num) || !is_digits(den))
            throw InvalidArgs("malformed rational: " + text);
        BigInt d{den};
        if (d == 0) throw InvalidArgs("zero denominator: " + text);
        out = Rational(BigInt(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        if ((!whole.empty() && !is_digits(whole)) || !is_digits(frac))
            throw InvalidArgs("malformed rational: " + text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = (whole.empty() ? BigInt(0) : BigInt(whole)) * scale + BigInt(frac);
        out = Rational(num, scale);
    } else {
        if (!is_digits(s)) throw InvalidArgs("malformed rational: " + text);
        out = Rational(BigInt(s));
    }
    return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& r) {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double to_double(const BigInt& n) { return n.convert_to<double>(); }

BigInt ceil_mul(const Rational& r, const BigInt& size) {
    const BigInt num = numerator(r) * size;
    const BigInt den = denominator(r);
    BigInt q = num / den;
    if (q * den < num) ++q;
    return q;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

} // namespace pgq
