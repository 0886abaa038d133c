#include "pgq/gf.hpp"

#include "pgq/errors.hpp"

#include <algorithm>
#include <string>

namespace pgq {

namespace gfpoly {

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Remainder of f by monic-leading g (g need not be monic; leading coeff inverted mod p).
Poly mod(const Poly& f, const Poly& g, std::uint32_t p) {
    Poly r = trim(f);
    const Poly d = trim(g);
    if (d.empty()) throw DivisionByZero("polynomial division by zero");
    // Inverse of the leading coefficient via Fermat.
    std::uint32_t lead = d.back(), lead_inv = 1;
    for (std::uint32_t e = 0; e + 2 < p; ++e) lead_inv = lead_inv * lead % p;
    while (r.size() >= d.size()) {
        const std::uint32_t scale = r.back() * lead_inv % p;
        const std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::uint32_t sub = scale * d[i] % p;
            r[shift + i] = static_cast<std::uint16_t>((r[shift + i] + p - sub) % p);
        }
        r = trim(std::move(r));
    }
    return r;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const Poly ft = trim(f);
    if (ft.size() < 2) return false; // constants are not irreducible
    const std::size_t deg = ft.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::vector<std::uint16_t> c(d, 0); // low coefficients of the divisor
        while (true) {
            Poly g(c.begin(), c.end());
            g.push_back(1);
            if (mod(ft, g, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && c[i] + 1u == p) c[i++] = 0;
            if (i == d) break;
            ++c[i];
        }
    }
    return true;
}

Poly least_irreducible(std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint16_t> c(m, 0);
    while (true) {
        Poly f(c.begin(), c.end());
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        // Advance (c_0, ..., c_{m-1}) in lexicographic order: the last
        // coordinate is the fastest-moving digit.
        std::size_t i = m;
        while (i > 0 && c[i - 1] + 1u == p) c[--i] = 0;
        if (i == 0) throw Error("no irreducible polynomial found"); // unreachable for valid p, m
        ++c[i - 1];
    }
}

} // namespace gfpoly

namespace {

constexpr std::uint32_t kMaxOrder = 256;

// q = p^m with p prime, or throws.
void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) {
    std::uint64_t rest = q;
    std::uint64_t prime = 0;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        if (rest % f == 0) {
            prime = f;
            while (rest % f == 0) rest /= f;
            break;
        }
    }
    if (prime == 0) {
        prime = rest; // q itself is prime
        rest = 1;
    }
    if (rest != 1)
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(prime);
    m = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= prime;
        ++m;
    }
    if (acc != q)
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
}

std::vector<std::uint16_t> unpack(std::uint32_t code, std::uint32_t p, std::uint32_t m) {
    std::vector<std::uint16_t> c(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        c[i] = static_cast<std::uint16_t>(code % p);
        code /= p;
    }
    return c;
}

std::uint32_t pack(const std::vector<std::uint16_t>& c, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i > 0; --i) code = code * p + c[i - 1];
    return code;
}

} // namespace

Field Field::make(std::uint64_t q) {
    if (q < 2 || q > kMaxOrder)
        throw UnsupportedSize("field order " + std::to_string(q) +
                              " outside supported range [2, " + std::to_string(kMaxOrder) + "]");
    std::uint32_t p = 0, m = 0;
    factor_prime_power(q, p, m);

    auto tab = std::make_shared<Tables>();
    tab->q = static_cast<std::uint32_t>(q);
    tab->p = p;
    tab->m = m;
    if (m > 1) tab->modulus = gfpoly::least_irreducible(p, m);

    const std::uint32_t n = tab->q;
    tab->add.resize(std::size_t(n) * n);
    tab->mul.resize(std::size_t(n) * n);
    tab->neg.resize(n);
    tab->inv.assign(n, 0);

    for (std::uint32_t a = 0; a < n; ++a) {
        const auto ca = unpack(a, p, m);
        // negation: coefficient-wise
        std::vector<std::uint16_t> cn(m);
        for (std::uint32_t i = 0; i < m; ++i)
            cn[i] = static_cast<std::uint16_t>((p - ca[i]) % p);
        tab->neg[a] = static_cast<std::uint16_t>(pack(cn, p));

        for (std::uint32_t b = 0; b < n; ++b) {
            const auto cb = unpack(b, p, m);
            std::vector<std::uint16_t> cs(m);
            for (std::uint32_t i = 0; i < m; ++i)
                cs[i] = static_cast<std::uint16_t>((ca[i] + cb[i]) % p);
            tab->add[std::size_t(a) * n + b] = static_cast<std::uint16_t>(pack(cs, p));

            // polynomial product reduced modulo the field modulus
            std::vector<std::uint16_t> prod(2 * m, 0);
            for (std::uint32_t i = 0; i < m; ++i)
                for (std::uint32_t j = 0; j < m; ++j)
                    prod[i + j] = static_cast<std::uint16_t>((prod[i + j] + ca[i] * cb[j]) % p);
            std::vector<std::uint16_t> red =
                m > 1 ? gfpoly::mod(prod, tab->modulus, p) : gfpoly::trim(prod);
            red.resize(m, 0);
            tab->mul[std::size_t(a) * n + b] = static_cast<std::uint16_t>(pack(red, p));
        }
    }
    for (std::uint32_t a = 1; a < n; ++a)
        for (std::uint32_t b = 1; b < n; ++b)
            if (tab->mul[std::size_t(a) * n + b] == 1) {
                tab->inv[a] = static_cast<std::uint16_t>(b);
                break;
            }

    return Field(std::move(tab));
}

Fe Field::element(std::uint32_t code) const {
    if (code >= tab_->q)
        throw InvalidArgs("element code " + std::to_string(code) + " out of range for GF(" +
                          std::to_string(tab_->q) + ")");
    return Fe{static_cast<std::uint16_t>(code)};
}

std::vector<std::uint16_t> Field::coeffs(Fe a) const {
    return unpack(a.v, tab_->p, tab_->m);
}

Fe Field::inv(Fe a) const {
    if (a.v == 0) throw DivisionByZero("inverse of zero");
    return Fe{tab_->inv[a.v]};
}

} // namespace pgq
