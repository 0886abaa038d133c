#ifndef PGQ_PROJECTIVE_HPP
#define PGQ_PROJECTIVE_HPP

#include "pgq/gf.hpp"
#include "pgq/linalg.hpp"
#include "pgq/numeric.hpp"
#include "pgq/rng.hpp"

#include <cstdint>
#include <vector>

namespace pgq {

/// Default cap on the number of enumerated points/subspaces.
inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

/// Point of PG(k, q): a nonzero coordinate vector of length k+1, normalized so
/// that the first nonzero coordinate is 1. Normalization makes the
/// representative of each 1-dimensional subspace unique.
struct Point {
    std::vector<Fe> coords;

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

/// Projective subspace of PG(k, q), held as the unique reduced-row-echelon
/// basis of the underlying vector subspace. Two Subspace values are equal iff
/// they denote the same subspace. Rank 0 encodes the empty subspace
/// (projective dimension -1).
class Subspace {
public:
    Subspace(Field field, int ambient_k, Matrix rref_basis);

    /// Canonicalizes an arbitrary spanning matrix (rows need not be
    /// independent or reduced).
    static Subspace from_span(const Field& field, int ambient_k, Matrix span);

    const Field& field() const { return field_; }
    int ambient_k() const { return ambient_k_; }
    const Matrix& basis() const { return basis_; }
    int rank() const { return basis_.rows; }
    /// Projective dimension: rank - 1; -1 for the empty subspace.
    int dim() const { return basis_.rows - 1; }

    bool contains(const Point& pt) const;

    /// Number of projective points in this subspace: (q^rank - 1)/(q - 1).
    BigInt point_count() const;

    /// All points, each normalized, in a deterministic order.
    std::vector<Point> points() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_k_ == b.ambient_k_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.ambient_k_ != b.ambient_k_) return a.ambient_k_ < b.ambient_k_;
        return a.basis_ < b.basis_;
    }

private:
    Field field_;
    int ambient_k_;
    Matrix basis_;
};

/// q-Gaussian binomial coefficient, exact: the number of r-dimensional vector
/// subspaces of an s-dimensional space over GF(q). Requires 0 <= r <= s.
BigInt gaussian_binomial(unsigned s, unsigned r, std::uint64_t q);

/// (q^{k+1} - 1)/(q - 1), the number of points of PG(k, q).
BigInt pg_point_count(int k, std::uint64_t q);

/// All points of PG(k, q) in lexicographic order of their normalized
/// coordinate vectors. Throws SizeOverflow beyond `cap`.
std::vector<Point> enumerate_points(int k, const Field& field,
                                    std::uint64_t cap = kDefaultEnumCap);

/// Index of a normalized point within the enumerate_points order, computed in
/// closed form (no table).
std::uint64_t point_index(const Point& pt, const Field& field);

/// Point at a given enumeration index (inverse of point_index).
Point point_at_index(std::uint64_t index, int k, const Field& field);

/// All d-dimensional projective subspaces of PG(k, q), enumerated as
/// rank-(d+1) RREF matrices (pivot-column sets in lexicographic order, then
/// free entries). Count equals gaussian_binomial(k+1, d+1, q). Throws
/// SizeOverflow beyond `cap`.
std::vector<Subspace> enumerate_subspaces(int k, int d, const Field& field,
                                          std::uint64_t cap = kDefaultEnumCap);

/// True iff `pt` lies in the row space of S's basis.
bool subspace_contains(const Subspace& S, const Point& pt);

/// Canonical subspace for the intersection of two subspaces of the same
/// ambient space (Zassenhaus); rank 0 when the intersection is trivial.
Subspace subspace_intersection(const Subspace& S, const Subspace& T);

/// True iff every point of `inner` lies in `outer`.
bool subspace_subset(const Subspace& inner, const Subspace& outer);

/// Number of d-dimensional projective subspaces of PG(k, q) through a fixed
/// point: gaussian_binomial(k, d, q).
BigInt count_subspaces_through_point(int k, int d, std::uint64_t q);

/// Uniformly random d-dimensional subspace containing `pt`: the point's vector
/// is fixed as the first row, d further rows are drawn uniformly from the
/// whole space, and the draw is rejected until the stack has full rank.
/// Every subspace through `pt` admits the same number of completing tuples,
/// so acceptance is uniform.
Subspace sample_subspace_containing(const Point& pt, int d, const Field& field, Rng& rng);

/// The explicit pair of d-dimensional subspaces whose intersection has
/// projective dimension exactly 2d-k (requires 2d >= k): spans of the first
/// d+1 and the last d+1 standard basis vectors.
std::pair<Subspace, Subspace> sharpness_pair(int k, int d, const Field& field);

} // namespace pgq

#endif
