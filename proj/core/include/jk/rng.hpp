#pragma once

#include <cstdint>

namespace jk {

// Deterministic 64-bit generator (splitmix64). The sequence depends only on
// the seed, never on the platform or standard library, so identical seeds
// reproduce identical runs bit for bit. Instances are single-owner: never
// share one between concurrent tasks; derive child seeds instead.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace detail

// Stable hash of (master, a, b), used to assign independent seeds to
// parallel subtasks. Output ordering of a batch therefore never depends on
// scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
    std::uint64_t h = detail::mix64(master + 0x9E3779B97F4A7C15ull);
    h = detail::mix64(h ^ (a + 0xBF58476D1CE4E5B9ull));
    h = detail::mix64(h ^ (b + 0x94D049BB133111EBull));
    return h;
}

} // namespace jk
