// Deterministic counter-derived random streams. Every randomized routine in the
// library draws from a RandomStream keyed by (seed, stream index), so results
// are a function of the seed alone, independent of scheduling.

#pragma once

#include <cstdint>

#include "ubkit/types.hpp"

namespace ubkit {

std::uint64_t splitmix64(std::uint64_t& state);

/// Derives a child seed from (seed, stream); used to give independent
/// substreams to restarts, members, and test corpora.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    double gaussian();
    cplx complex_gaussian();
    /// Rotation-invariant random unit vector (normalized complex Gaussian entries).
    Vec unit_vector(int dim);

private:
    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

PureState random_pure_state(const SystemShape& shape, RandomStream& rng, std::string label = "");

}  // namespace ubkit
