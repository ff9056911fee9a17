#pragma once

#include <cstdint>

namespace skeg {

/// Splittable counter-based generator (splitmix64 core). Used instead of
/// <random> engines so that draws and child streams are bit-identical
/// across platforms and standard library implementations.
class SplitRng {
  public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). Multiply-high mapping: negligible bias for the
    /// small n used here, and deterministic everywhere.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

  private:
    std::uint64_t state_;
};

/// Derive a child seed deterministically from (parent seed, stream id).
/// Recursive solvers use the decomposition node id as the stream so results
/// do not depend on traversal order.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t stream) {
    SplitRng mix(parent ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    return mix.next_u64();
}

} // namespace skeg
