#include "pgq/projective.hpp"

#include "pgq/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace pgq {

namespace {

void require_same_space(const Subspace& S, const Subspace& T) {
    if (S.ambient_k() != T.ambient_k() || !S.field().same_field(T.field()))
        throw DimensionMismatch("subspaces live in different ambient spaces");
}

// Scales a nonzero vector so its first nonzero coordinate is 1.
// Returns false for the zero vector.
bool normalize(std::vector<Fe>& v, const Field& field) {
    for (auto& x : v)
        if (x != field.zero()) {
            if (x == field.one()) return true;
            const Fe s = field.inv(x);
            for (auto& y : v) y = field.mul(s, y);
            return true;
        }
    return false;
}

// Canonical coefficient vectors of length r over `field` (first nonzero
// coordinate 1), in the global point order. Multiplying them into the rows of
// an RREF basis yields each point of the subspace exactly once, already
// normalized.
std::vector<std::vector<Fe>> canonical_coefficients(int r, const Field& field) {
    std::vector<std::vector<Fe>> out;
    const std::uint32_t q = field.q();
    for (int pivot = r - 1; pivot >= 0; --pivot) {
        const int free = r - 1 - pivot;
        std::vector<std::uint32_t> digits(free, 0);
        while (true) {
            std::vector<Fe> c(r, field.zero());
            c[pivot] = field.one();
            for (int j = 0; j < free; ++j) c[pivot + 1 + j] = field.element(digits[j]);
            out.push_back(std::move(c));
            int i = free;
            while (i > 0 && digits[i - 1] + 1 == q) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
    }
    return out;
}

} // namespace

Subspace::Subspace(Field field, int ambient_k, Matrix rref_basis)
    : field_(std::move(field)), ambient_k_(ambient_k), basis_(std::move(rref_basis)) {
    if (basis_.cols != ambient_k_ + 1)
        throw DimensionMismatch("basis width does not match ambient dimension");
}

Subspace Subspace::from_span(const Field& field, int ambient_k, Matrix span) {
    const int rank = rref(span, field);
    return Subspace(field, ambient_k, drop_zero_rows(span, rank));
}

bool Subspace::contains(const Point& pt) const {
    if (static_cast<int>(pt.coords.size()) != ambient_k_ + 1)
        throw DimensionMismatch("point dimension does not match subspace ambient space");
    // Reduce the point vector against the RREF rows and test for zero.
    std::vector<Fe> v = pt.coords;
    for (int r = 0; r < basis_.rows; ++r) {
        int pivot = -1;
        for (int c = 0; c < basis_.cols; ++c)
            if (basis_.at(r, c) != field_.zero()) {
                pivot = c;
                break;
            }
        if (pivot < 0) continue;
        const Fe factor = v[pivot];
        if (factor == field_.zero()) continue;
        for (int c = pivot; c < basis_.cols; ++c)
            v[c] = field_.sub(v[c], field_.mul(factor, basis_.at(r, c)));
    }
    for (const Fe x : v)
        if (x != field_.zero()) return false;
    return true;
}

BigInt Subspace::point_count() const {
    if (basis_.rows == 0) return 0;
    return (big_pow(field_.q(), static_cast<unsigned>(basis_.rows)) - 1) / (field_.q() - 1);
}

std::vector<Point> Subspace::points() const {
    std::vector<Point> out;
    if (basis_.rows == 0) return out;
    const auto coeffs = canonical_coefficients(basis_.rows, field_);
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Point pt;
        pt.coords.assign(static_cast<std::size_t>(ambient_k_) + 1, field_.zero());
        for (int r = 0; r < basis_.rows; ++r) {
            if (c[r] == field_.zero()) continue;
            for (int col = 0; col <= ambient_k_; ++col)
                pt.coords[col] = field_.add(pt.coords[col], field_.mul(c[r], basis_.at(r, col)));
        }
        out.push_back(std::move(pt));
    }
    return out;
}

BigInt gaussian_binomial(unsigned s, unsigned r, std::uint64_t q) {
    if (r > s) throw InvalidArgs("gaussian_binomial requires r <= s");
    if (q < 2) throw InvalidArgs("gaussian_binomial requires q >= 2");
    BigInt num = 1, den = 1;
    const BigInt qs = big_pow(q, s), qr = big_pow(q, r);
    BigInt qi = 1;
    for (unsigned i = 0; i < r; ++i) {
        num *= qs - qi;
        den *= qr - qi;
        qi *= q;
    }
    return num / den; // exact: the q-binomial is an integer
}

BigInt pg_point_count(int k, std::uint64_t q) {
    if (k < 0) throw InvalidArgs("pg_point_count requires k >= 0");
    return (big_pow(q, static_cast<unsigned>(k) + 1) - 1) / (q - 1);
}

std::vector<Point> enumerate_points(int k, const Field& field, std::uint64_t cap) {
    if (k < 0) throw InvalidArgs("enumerate_points requires k >= 0");
    const BigInt count = pg_point_count(k, field.q());
    if (count > cap)
        throw SizeOverflow("point enumeration of size " + count.str() + " exceeds cap " +
                           std::to_string(cap));
    std::vector<Point> out;
    out.reserve(count.convert_to<std::size_t>());
    const std::uint32_t q = field.q();
    for (int pivot = k; pivot >= 0; --pivot) {
        const int free = k - pivot;
        std::vector<std::uint32_t> digits(free, 0);
        while (true) {
            Point pt;
            pt.coords.assign(static_cast<std::size_t>(k) + 1, field.zero());
            pt.coords[pivot] = field.one();
            for (int j = 0; j < free; ++j) pt.coords[pivot + 1 + j] = field.element(digits[j]);
            out.push_back(std::move(pt));
            int i = free;
            while (i > 0 && digits[i - 1] + 1 == q) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
    }
    return out;
}

std::uint64_t point_index(const Point& pt, const Field& field) {
    const int k = static_cast<int>(pt.coords.size()) - 1;
    const std::uint64_t q = field.q();
    int pivot = -1;
    for (int i = 0; i <= k; ++i)
        if (pt.coords[i] != field.zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw InvalidArgs("zero vector is not a projective point");
    if (pt.coords[pivot] != field.one())
        throw InvalidArgs("point is not normalized");
    // Points with pivots after `pivot` come first: (q^{k-pivot} - 1)/(q - 1)
    // of them; then the free coordinates rank lexicographically.
    std::uint64_t offset = 0, power = 1;
    for (int i = 0; i < k - pivot; ++i) {
        offset += power;
        power *= q;
    }
    std::uint64_t rank = 0;
    for (int j = pivot + 1; j <= k; ++j) rank = rank * q + pt.coords[j].v;
    return offset + rank;
}

Point point_at_index(std::uint64_t index, int k, const Field& field) {
    const std::uint64_t q = field.q();
    std::uint64_t offset = 0, block = 1;
    int pivot = k;
    while (pivot >= 0) {
        if (index < offset + block) break;
        offset += block;
        block *= q;
        --pivot;
    }
    if (pivot < 0) throw InvalidArgs("point index out of range");
    Point pt;
    pt.coords.assign(static_cast<std::size_t>(k) + 1, field.zero());
    pt.coords[pivot] = field.one();
    std::uint64_t rank = index - offset;
    for (int j = k; j > pivot; --j) {
        pt.coords[j] = field.element(static_cast<std::uint32_t>(rank % q));
        rank /= q;
    }
    return pt;
}

std::vector<Subspace> enumerate_subspaces(int k, int d, const Field& field, std::uint64_t cap) {
    if (d < 0 || d > k) throw InvalidArgs("enumerate_subspaces requires 0 <= d <= k");
    const unsigned n = static_cast<unsigned>(k) + 1;
    const unsigned r = static_cast<unsigned>(d) + 1;
    const BigInt count = gaussian_binomial(n, r, field.q());
    if (count > cap)
        throw SizeOverflow("subspace enumeration of size " + count.str() + " exceeds cap " +
                           std::to_string(cap));

    std::vector<Subspace> out;
    out.reserve(count.convert_to<std::size_t>());
    const std::uint32_t q = field.q();

    // Pivot column sets in lexicographic order.
    std::vector<int> pivots(r);
    for (unsigned i = 0; i < r; ++i) pivots[i] = static_cast<int>(i);
    while (true) {
        std::vector<char> is_pivot(n, 0);
        for (int p : pivots) is_pivot[p] = 1;
        // Free positions: (row, col) with col right of the row's pivot and not
        // a pivot column itself.
        std::vector<std::pair<int, int>> free_pos;
        for (unsigned row = 0; row < r; ++row)
            for (unsigned col = pivots[row] + 1; col < n; ++col)
                if (!is_pivot[col]) free_pos.emplace_back(static_cast<int>(row), static_cast<int>(col));

        std::vector<std::uint32_t> digits(free_pos.size(), 0);
        while (true) {
            Matrix basis(static_cast<int>(r), static_cast<int>(n));
            for (unsigned row = 0; row < r; ++row) basis.at(static_cast<int>(row), pivots[row]) = field.one();
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                basis.at(free_pos[i].first, free_pos[i].second) = field.element(digits[i]);
            out.emplace_back(field, k, std::move(basis));
            std::size_t i = digits.size();
            while (i > 0 && digits[i - 1] + 1 == q) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }

        // next pivot combination
        int i = static_cast<int>(r) - 1;
        while (i >= 0 && pivots[i] == static_cast<int>(n - r + i)) --i;
        if (i < 0) break;
        ++pivots[i];
        for (unsigned j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

bool subspace_contains(const Subspace& S, const Point& pt) { return S.contains(pt); }

Subspace subspace_intersection(const Subspace& S, const Subspace& T) {
    require_same_space(S, T);
    const Field& field = S.field();
    const int n = S.ambient_k() + 1;
    const int rs = S.rank(), rt = T.rank();
    // Zassenhaus: reduce [S | S; T | 0]; rows whose left half vanishes have
    // right halves spanning the intersection.
    Matrix big(rs + rt, 2 * n);
    for (int r = 0; r < rs; ++r)
        for (int c = 0; c < n; ++c) {
            big.at(r, c) = S.basis().at(r, c);
            big.at(r, n + c) = S.basis().at(r, c);
        }
    for (int r = 0; r < rt; ++r)
        for (int c = 0; c < n; ++c) big.at(rs + r, c) = T.basis().at(r, c);
    const int rank = rref(big, field);

    Matrix span(0, n);
    std::vector<Fe> rows;
    int picked = 0;
    for (int r = 0; r < rank; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (big.at(r, c) != field.zero()) left_zero = false;
        if (!left_zero) continue;
        for (int c = 0; c < n; ++c) rows.push_back(big.at(r, n + c));
        ++picked;
    }
    span.rows = picked;
    span.a = std::move(rows);
    return Subspace::from_span(field, S.ambient_k(), std::move(span));
}

bool subspace_subset(const Subspace& inner, const Subspace& outer) {
    require_same_space(inner, outer);
    for (int r = 0; r < inner.rank(); ++r) {
        Point row;
        row.coords.resize(static_cast<std::size_t>(inner.ambient_k()) + 1);
        for (int c = 0; c <= inner.ambient_k(); ++c) row.coords[c] = inner.basis().at(r, c);
        if (!normalize(row.coords, inner.field())) continue;
        if (!outer.contains(row)) return false;
    }
    return true;
}

BigInt count_subspaces_through_point(int k, int d, std::uint64_t q) {
    if (d < 0 || d > k) throw InvalidArgs("count_subspaces_through_point requires 0 <= d <= k");
    return gaussian_binomial(static_cast<unsigned>(k), static_cast<unsigned>(d), q);
}

Subspace sample_subspace_containing(const Point& pt, int d, const Field& field, Rng& rng) {
    const int k = static_cast<int>(pt.coords.size()) - 1;
    if (d < 1 || d > k) throw InvalidArgs("sample_subspace_containing requires 1 <= d <= k");
    const std::uint32_t q = field.q();
    const int n = k + 1;
    while (true) {
        Matrix stack(d + 1, n);
        for (int c = 0; c < n; ++c) stack.at(0, c) = pt.coords[c];
        for (int r = 1; r <= d; ++r)
            for (int c = 0; c < n; ++c)
                stack.at(r, c) = field.element(static_cast<std::uint32_t>(rng.below(q)));
        Matrix reduced = stack;
        if (rref(reduced, field) == d + 1)
            return Subspace(field, k, drop_zero_rows(reduced, d + 1));
    }
}

std::pair<Subspace, Subspace> sharpness_pair(int k, int d, const Field& field) {
    if (2 * d < k || d > k)
        throw InvalidArgs("sharpness_pair requires 2d >= k and d <= k");
    const int n = k + 1, r = d + 1;
    Matrix u(r, n), w(r, n);
    for (int i = 0; i < r; ++i) u.at(i, i) = field.one();           // e_0 .. e_d
    for (int i = 0; i < r; ++i) w.at(i, k - d + i) = field.one();   // e_{k-d} .. e_k
    return {Subspace(field, k, std::move(u)), Subspace(field, k, std::move(w))};
}

} // namespace pgq
