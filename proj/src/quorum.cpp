#include "pgq/quorum.hpp"

#include "pgq/errors.hpp"

#include <algorithm>
#include <iterator>

namespace pgq {

namespace {

std::size_t sorted_intersection_size(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

} // namespace

IntersectionSystem IntersectionSystem::create(std::vector<std::string> ground,
                                              std::vector<std::vector<std::uint32_t>> quorums) {
    if (ground.empty()) throw InvalidArgs("intersection system needs a nonempty ground set");
    if (quorums.empty()) throw InvalidArgs("intersection system needs at least one quorum");

    std::vector<char> covered(ground.size(), 0);
    for (auto& q : quorums) {
        if (q.empty()) throw InvalidArgs("quorums must be nonempty");
        std::sort(q.begin(), q.end());
        q.erase(std::unique(q.begin(), q.end()), q.end());
        for (std::uint32_t e : q) {
            if (e >= ground.size()) throw InvalidArgs("quorum index out of range");
            covered[e] = 1;
        }
    }
    for (std::size_t i = 0; i < covered.size(); ++i)
        if (!covered[i])
            throw InvalidArgs("ground element '" + ground[i] + "' is in no quorum");

    std::sort(quorums.begin(), quorums.end());
    quorums.erase(std::unique(quorums.begin(), quorums.end()), quorums.end());

    IntersectionSystem sys;
    sys.ground_ = std::move(ground);
    sys.quorums_ = std::move(quorums);
    return sys;
}

std::uint32_t IntersectionSystem::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (ground_[i] == label) return static_cast<std::uint32_t>(i);
    throw UnknownElement("unknown ground element '" + label + "'");
}

bool verify_intersecting(const IntersectionSystem& sys) {
    const auto& qs = sys.quorums();
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j)
            if (sorted_intersection_size(qs[i], qs[j]) == 0) return false;
    return true;
}

std::size_t msg_complexity(const IntersectionSystem& sys) {
    std::size_t best = 0;
    for (const auto& q : sys.quorums()) best = std::max(best, q.size());
    return best;
}

std::size_t degree(const IntersectionSystem& sys, std::uint32_t element) {
    if (element >= sys.ground().size()) throw UnknownElement("ground index out of range");
    std::size_t count = 0;
    for (const auto& q : sys.quorums())
        count += std::binary_search(q.begin(), q.end(), element) ? 1 : 0;
    return count;
}

std::size_t degree(const IntersectionSystem& sys, const std::string& label) {
    return degree(sys, sys.index_of(label));
}

std::size_t max_degree(const IntersectionSystem& sys) {
    std::vector<std::size_t> deg(sys.ground().size(), 0);
    for (const auto& q : sys.quorums())
        for (std::uint32_t e : q) ++deg[e];
    return *std::max_element(deg.begin(), deg.end());
}

Rational load_of(const IntersectionSystem& sys, std::uint32_t element) {
    return Rational(BigInt(degree(sys, element)), BigInt(sys.size()));
}

Rational load_of(const IntersectionSystem& sys, const std::string& label) {
    return load_of(sys, sys.index_of(label));
}

Rational load(const IntersectionSystem& sys) {
    return Rational(BigInt(max_degree(sys)), BigInt(sys.size()));
}

std::size_t quorum_intersection_size(const IntersectionSystem& sys, std::uint32_t a,
                                     std::uint32_t b) {
    if (a >= sys.size() || b >= sys.size()) throw InvalidArgs("quorum index out of range");
    return sorted_intersection_size(sys.quorums()[a], sys.quorums()[b]);
}

std::size_t slashability_bruteforce(const IntersectionSystem& sys, std::uint64_t pair_budget) {
    const auto& qs = sys.quorums();
    const std::uint64_t n = qs.size();
    if (n == 1) return qs[0].size();
    const std::uint64_t pairs = n * (n - 1) / 2;
    if (pairs > pair_budget)
        throw BudgetExceeded("pair count " + std::to_string(pairs) + " exceeds budget " +
                             std::to_string(pair_budget) + "; use sampled mode");
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < qs.size() && best > 0; ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            const std::size_t s = sorted_intersection_size(qs[i], qs[j]);
            if (s < best) {
                best = s;
                if (best == 0) break;
            }
        }
    return best;
}

SampledSlashability slashability_sampled(const IntersectionSystem& sys, std::uint64_t pairs,
                                         Rng& rng) {
    if (pairs == 0) throw InvalidArgs("need at least one sampled pair");
    const auto& qs = sys.quorums();
    const std::uint64_t n = qs.size();
    SampledSlashability out{SIZE_MAX, 0, 0, 0};
    for (std::uint64_t t = 0; t < pairs; ++t) {
        std::uint32_t a, b;
        if (n == 1) {
            a = b = 0;
        } else {
            a = static_cast<std::uint32_t>(rng.below(n));
            do {
                b = static_cast<std::uint32_t>(rng.below(n));
            } while (b == a);
        }
        const std::size_t s = sorted_intersection_size(qs[a], qs[b]);
        ++out.pairs_sampled;
        if (s < out.upper_bound) {
            out.upper_bound = s;
            out.witness_a = a;
            out.witness_b = b;
        }
    }
    return out;
}

} // namespace pgq
