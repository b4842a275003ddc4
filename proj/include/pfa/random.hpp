#pragma once

#include <cstdint>

#include "pfa/concrete_algebra.hpp"
#include "pfa/partial_function.hpp"

namespace pfa {

/// Deterministic 64-bit generator (splitmix64); identical output on every
/// platform, unlike the standard distributions.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform-enough value in [0, n); modulo bias is irrelevant at desk scale.
    uint64_t below(uint64_t n) { return next() % n; }

  private:
    uint64_t state_;
};

/// Each point independently undefined or mapped uniformly.
PartialFunction random_partial_function(SplitMix64& rng, const Base& base);

/// A random sample of the closure corpus: a base of 1..max_points points,
/// 0..max_generators random functions, closed under composition, meet and
/// antidomain.
ConcreteAlgebra random_closure(SplitMix64& rng, int max_points = 3, int max_generators = 2,
                               int max_functions = 10000);

} // namespace pfa
