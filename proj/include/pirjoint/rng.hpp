#ifndef PIRJOINT_RNG_HPP
#define PIRJOINT_RNG_HPP

#include <cstdint>

namespace pirjoint {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std engines because its
/// output is fully specified, so seeded searches reproduce across toolchains.
/// Substreams come from fork(index): a child generator whose seed mixes the
/// parent's construction seed with the index, independent of how much the
/// parent has been consumed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    Rng fork(std::uint64_t index) const {
        Rng mixer(seed_ ^ (0x632BE59BD9B4E019ULL * (index + 1)));
        return Rng(mixer.next());
    }

    /// Uniform in [0, n); rejection-sampled so the draw is exactly uniform.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace pirjoint

#endif
