#ifndef PGQ_GF_HPP
#define PGQ_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace pgq {

/// Element of a finite field, identified by its code in [0, q).
/// For GF(p) the code is the residue; for GF(p^m) it packs the polynomial
/// coefficients c_0..c_{m-1} (least degree first) as sum c_i * p^i, so code
/// order doubles as the fixed element order used by all enumerations.
struct Fe {
    std::uint16_t v = 0;

    friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
    friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

/// Arithmetic context for GF(q), q = p^m a prime power, q <= 256.
///
/// Extension fields reduce modulo the lexicographically least monic
/// irreducible polynomial of degree m over GF(p); the polynomial is found by
/// exhaustive search and re-verified irreducible by trial division at
/// construction time, so the modulus is deterministic across runs. All
/// operations are table lookups. Field is an immutable value, cheap to copy,
/// and safe to share across threads.
class Field {
public:
    /// Builds GF(q). Throws NotPrimePower when q is not a prime power,
    /// UnsupportedSize when q < 2 or q > 256.
    static Field make(std::uint64_t q);

    std::uint32_t q() const { return tab_->q; }
    std::uint32_t p() const { return tab_->p; }
    std::uint32_t degree() const { return tab_->m; }

    /// Coefficients of the modulus polynomial (monic, degree m, least degree
    /// first, constant first; the leading 1 is included). Empty when m == 1.
    const std::vector<std::uint16_t>& modulus() const { return tab_->modulus; }

    Fe zero() const { return Fe{0}; }
    Fe one() const { return Fe{1}; }
    Fe element(std::uint32_t code) const;

    /// Polynomial coefficients of `a` over GF(p), least degree first, length m.
    std::vector<std::uint16_t> coeffs(Fe a) const;

    Fe add(Fe a, Fe b) const { return Fe{tab_->add[idx(a, b)]}; }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
    Fe mul(Fe a, Fe b) const { return Fe{tab_->mul[idx(a, b)]}; }
    Fe neg(Fe a) const { return Fe{tab_->neg[a.v]}; }
    /// Multiplicative inverse; throws DivisionByZero for inv(0).
    Fe inv(Fe a) const;

    bool same_field(const Field& other) const { return tab_ == other.tab_; }

private:
    struct Tables {
        std::uint32_t q = 0, p = 0, m = 0;
        std::vector<std::uint16_t> modulus;
        std::vector<std::uint16_t> add, mul, neg, inv;
    };

    explicit Field(std::shared_ptr<const Tables> tab) : tab_(std::move(tab)) {}

    std::size_t idx(Fe a, Fe b) const {
        return static_cast<std::size_t>(a.v) * tab_->q + b.v;
    }

    std::shared_ptr<const Tables> tab_;
};

namespace gfpoly {

/// Polynomials over GF(p) as coefficient vectors (least degree first), used
/// for modulus construction and its brute-force irreducibility verification.
using Poly = std::vector<std::uint16_t>;

Poly trim(Poly f);
Poly mod(const Poly& f, const Poly& g, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);

/// Lexicographically least monic irreducible of degree m over GF(p),
/// comparing coefficient tuples (c_0, ..., c_{m-1}).
Poly least_irreducible(std::uint32_t p, std::uint32_t m);

} // namespace gfpoly

} // namespace pgq

#endif
