#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corrclass {

/// Deterministic, platform-independent PRNG (splitmix64). The standard
/// distributions are implementation-defined, so bounded sampling is done
/// here by plain reduction; reports must be byte-stable across machines
/// for a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    bool chance(int numerator, int denominator) { return uniform(1, denominator) <= numerator; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    /// A derived independent stream; deterministic in (state, label).
    Rng fork(const std::string& label) const {
        std::uint64_t h = state_ ^ 0xA076BD6A9C7D1E23ull;
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001B3ull;
        }
        return Rng(h);
    }

  private:
    std::uint64_t state_;
};

}  // namespace corrclass
