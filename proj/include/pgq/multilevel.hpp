#ifndef PGQ_MULTILEVEL_HPP
#define PGQ_MULTILEVEL_HPP

#include "pgq/gf.hpp"
#include "pgq/numeric.hpp"
#include "pgq/projective.hpp"
#include "pgq/quorum.hpp"
#include "pgq/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pgq {

/// Parameters of a multilevel committee intersection system built from
/// PG(k, q). Committees are identified with projective points; level j uses
/// the d_j-dimensional subspaces as quorums and per-committee vote threshold
/// fraction r_j.
struct MultilevelConfig {
    std::int64_t n = 0;          // number of processes
    Rational p;                  // per-process availability, in (1/2, 1)
    int k = 0;                   // ambient projective dimension
    std::uint64_t q = 2;         // field order (prime power)
    std::vector<int> d;          // weakly increasing, each in (k/2, k)
    std::vector<Rational> r;     // weakly increasing, each in (1/2, p)
    std::optional<std::vector<std::int64_t>> deltas; // sampled variant: per-level subspaces per point

    std::size_t levels() const { return d.size(); }

    /// Validates every structural invariant; throws InvalidArgs otherwise.
    void validate() const;
};

/// Partition of processes {0..n-1} into m contiguous committees whose sizes
/// differ by at most one; committee i corresponds to the i-th enumerated point.
struct CommitteeAssignment {
    std::int64_t n = 0;
    std::vector<std::int64_t> offsets; // m+1 entries; committee i = [offsets[i], offsets[i+1])

    std::size_t committees() const { return offsets.size() - 1; }
    std::int64_t size_of(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
    std::int64_t min_size() const;
    std::int64_t max_size() const;
    bool uniform() const { return min_size() == max_size(); }
};

enum class Variant { Full, Sampled };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

struct BuildOptions {
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t sample_retry_factor = 64; // retry budget per point: factor * delta draws
};

/// A built multilevel system: the assignment plus one committee-level
/// intersection system per level. Process-level systems are never
/// materialized; they are represented by (level system, r_j) and measured
/// through thresholds and witnesses.
struct MultilevelSystem {
    MultilevelConfig config;
    CommitteeAssignment assignment;
    std::vector<IntersectionSystem> levels; // committee-level systems, one per level
    Variant variant = Variant::Full;
    std::optional<std::uint64_t> seed;      // present iff sampled

    const IntersectionSystem& level(std::size_t j) const; // j is 0-based
    /// Vote threshold of committee i at level j: ceil(r_j * |C_i|).
    std::int64_t threshold(std::size_t j, std::size_t committee) const;
};

/// First (n mod m) committees get ceil(n/m) members, the rest floor(n/m).
/// Throws InvalidArgs when n < m or m < 1.
std::vector<std::int64_t> equitable_partition(std::int64_t n, std::int64_t m);

/// Builds the system. Full variant enumerates all d_j-subspaces per level;
/// sampled variant draws delta_j distinct subspaces through every point with
/// per-point substreams seeded seed^point_index under a per-level master.
/// Throws SizeOverflow (full beyond cap) or SamplingExhausted.
MultilevelSystem build(const MultilevelConfig& config, Variant variant,
                       std::optional<std::uint64_t> seed = std::nullopt,
                       const BuildOptions& opts = {});

/// (q^{d+1} - 1)/(q - 1): committees per quorum at dimension d.
BigInt quorum_size_formula(std::uint64_t q, int d);

/// (q^{2d-k+1} - 1)/(q - 1): minimum committees shared by two quorums.
/// Requires 2d > k.
BigInt slashability_formula(int k, std::uint64_t q, int d);

/// ceil(r * committee_size): least vote count meeting an r-fraction.
/// Requires r in (1/2, 1).
std::int64_t committee_threshold(std::int64_t committee_size, const Rational& r);

/// Process-level slashability of level j (0-based):
/// (2 r_j - 1) * c * slash(Q_j) when all committees have equal size c with
/// r_j * c integral. With strict=true those hypotheses are enforced
/// (InvalidArgs otherwise); with strict=false the generalized lower bound
/// sum over a minimum committee-intersection of max(0, 2*ceil(r|C|) - |C|)
/// is returned.
BigInt process_slashability(const MultilevelSystem& sys, std::size_t j, bool strict = false);

/// True iff the equal-size / integral-threshold hypotheses hold at level j.
bool slashability_hypotheses_hold(const MultilevelSystem& sys, std::size_t j);

/// A minimum-intersection pair of quorums at level j, as committee index
/// sets: the explicit sharpness pair for full systems, a brute-force scan for
/// sampled ones.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
minimizing_quorum_pair(const MultilevelSystem& sys, std::size_t j);

/// Worst-case conflicting process quorums for level j: S takes the
/// threshold-many least identities from each committee of one minimizing
/// quorum, T the threshold-many greatest from the other. Their overlap
/// realizes the process-level slashability bound.
struct WitnessPair {
    std::vector<std::int64_t> s;              // sorted process ids
    std::vector<std::int64_t> t;
    std::vector<std::uint32_t> quorum_s;      // committee indices backing S
    std::vector<std::uint32_t> quorum_t;
};

WitnessPair worst_case_witness(const MultilevelSystem& sys, std::size_t j);

/// (2r - 1) * c * mu * lambda: the slashability ceiling for any system with
/// message complexity mu and load lambda over equal-size-c committees.
Rational slashing_upper_bound(const Rational& r, std::int64_t c, const Rational& mu,
                              const Rational& lambda);

/// (q^{2d-k+1} - 1)(q^{k+1} - 1) / (q^{d+1} - 1)^2, exact: achieved
/// slashability over the upper bound. Requires 2d > k.
Rational optimality_ratio(int k, std::uint64_t q, int d);

} // namespace pgq

#endif
