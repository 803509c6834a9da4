#ifndef PAGING_RNG_HPP
#define PAGING_RNG_HPP

#include <cstdint>
#include <string>

namespace paging {

/// splitmix64 finalizer; also used for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-based deterministic generator: the i-th output is a pure function
/// of (seed, i), so replays are bit-identical across platforms.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return mix64(seed_ ^ mix64(counter_++)); }

    /// Unbiased uniform draw from [0, n). n must be positive.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// FNV-1a, used to fold policy names into derived seeds.
constexpr std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ULL;
    return h;
}

inline std::uint64_t fnv1a(const std::string& s) { return fnv1a(s.c_str()); }

/// Documented trial-seed rule: independent streams per (base, policy, trial).
inline std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& policy,
                                 std::uint64_t trial) {
    return mix64(mix64(base_seed ^ fnv1a(policy)) + trial);
}

}  // namespace paging

#endif
