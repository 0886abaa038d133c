#ifndef PGQ_QUORUM_HPP
#define PGQ_QUORUM_HPP

#include "pgq/numeric.hpp"
#include "pgq/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pgq {

inline constexpr std::uint64_t kDefaultPairBudget = 10'000'000;

/// Generic intersection system over an abstract ground set. Quorums are sets
/// of ground indices; duplicates collapse on construction (set semantics) and
/// both each quorum and the quorum list are kept sorted, so equal systems have
/// equal representations.
class IntersectionSystem {
public:
    /// Validates: at least one quorum, every quorum nonempty, indices in
    /// range, and every ground element covered by some quorum.
    static IntersectionSystem create(std::vector<std::string> ground,
                                     std::vector<std::vector<std::uint32_t>> quorums);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<std::vector<std::uint32_t>>& quorums() const { return quorums_; }
    std::size_t size() const { return quorums_.size(); }

    std::uint32_t index_of(const std::string& label) const;

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<std::uint32_t>> quorums_; // sorted sets, sorted lexicographically
};

/// True iff every pair of quorums intersects (early exit).
bool verify_intersecting(const IntersectionSystem& sys);

/// Maximum quorum size.
std::size_t msg_complexity(const IntersectionSystem& sys);

/// Number of quorums containing the element.
std::size_t degree(const IntersectionSystem& sys, std::uint32_t element);
std::size_t degree(const IntersectionSystem& sys, const std::string& label);
std::size_t max_degree(const IntersectionSystem& sys);

/// Exact load: degree / |quorums| for one element, max degree / |quorums| for
/// the system.
Rational load_of(const IntersectionSystem& sys, std::uint32_t element);
Rational load_of(const IntersectionSystem& sys, const std::string& label);
Rational load(const IntersectionSystem& sys);

/// Minimum pairwise intersection size over distinct quorum pairs (the quorum
/// size itself when there is a single quorum). Throws BudgetExceeded when the
/// number of pairs exceeds `pair_budget`.
std::size_t slashability_bruteforce(const IntersectionSystem& sys,
                                    std::uint64_t pair_budget = kDefaultPairBudget);

struct SampledSlashability {
    std::size_t upper_bound;      // smallest intersection seen
    std::uint32_t witness_a;      // quorum indices achieving it
    std::uint32_t witness_b;
    std::uint64_t pairs_sampled;
};

/// Upper-bound estimate of slashability from uniformly sampled quorum pairs.
SampledSlashability slashability_sampled(const IntersectionSystem& sys, std::uint64_t pairs,
                                         Rng& rng);

/// Size of the intersection of two quorums of `sys`.
std::size_t quorum_intersection_size(const IntersectionSystem& sys, std::uint32_t a,
                                     std::uint32_t b);

} // namespace pgq

#endif
