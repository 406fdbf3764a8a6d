#include "ubkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace ubkit {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : state_(mix_seed(seed, stream)) {}

std::uint64_t RandomStream::next_u64() { return splitmix64(state_); }

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller; u1 shifted away from zero so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

cplx RandomStream::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Vec RandomStream::unit_vector(int dim) {
    Vec v(dim);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < dim; ++i) {
            v(i) = complex_gaussian();
        }
        norm2 = v.squaredNorm();
    } while (norm2 == 0.0);
    return v / std::sqrt(norm2);
}

PureState random_pure_state(const SystemShape& shape, RandomStream& rng, std::string label) {
    return PureState(shape, rng.unit_vector(shape.total_dim()), std::move(label));
}

}  // namespace ubkit
