#ifndef PGQ_RNG_HPP
#define PGQ_RNG_HPP

#include <cstdint>
#include <random>

namespace pgq {

/// splitmix64 finalizer, used to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random stream. All draws go through mt19937_64 (whose output
/// sequence is fixed by the standard) and hand-rolled conversions, so identical
/// seeds reproduce identical results on every platform. std::*_distribution is
/// deliberately not used anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased uniform integer in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Independent stream keyed by `tag`; derivation is seed-stable.
    Rng substream(std::uint64_t tag) const { return Rng(splitmix64(seed_ ^ tag)); }

    /// Stream seeded literally with seed XOR tag (per-point sampling streams).
    Rng xor_stream(std::uint64_t tag) const { return Rng(seed_ ^ tag); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace pgq

#endif
