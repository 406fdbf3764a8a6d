// Shared helpers for the test suites.

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include <ubkit/linalg.hpp>
#include <ubkit/rng.hpp>
#include <ubkit/types.hpp>

namespace ubtest {

using ubkit::cplx;
using ubkit::Mat;
using ubkit::PureState;
using ubkit::RandomStream;
using ubkit::StateSet;
using ubkit::SystemShape;
using ubkit::Vec;

inline Vec vec(std::initializer_list<cplx> values) {
    Vec v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const cplx& c : values) v(i++) = c;
    return v;
}

inline PureState state(const SystemShape& shape, std::initializer_list<cplx> values,
                       std::string label = "") {
    return PureState::normalized(shape, vec(values), std::move(label));
}

/// Computational basis state |index> on `shape`.
inline PureState basis_state(const SystemShape& shape, int index, std::string label = "") {
    Vec v = Vec::Zero(shape.total_dim());
    v(index) = 1.0;
    return PureState(shape, std::move(v), std::move(label));
}

inline StateSet random_set(const SystemShape& shape, int members, RandomStream& rng) {
    std::vector<PureState> states;
    states.reserve(static_cast<std::size_t>(members));
    for (int m = 0; m < members; ++m) {
        states.push_back(ubkit::random_pure_state(shape, rng));
    }
    return StateSet(shape, std::move(states));
}

/// Random full-rank basis with a mild condition number, drawn deterministically.
inline StateSet random_basis(const SystemShape& shape, RandomStream& rng,
                             double cond_limit = 1e4) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        StateSet candidate = random_set(shape, shape.total_dim(), rng);
        if (ubkit::numeric_rank(candidate) == shape.total_dim() &&
            ubkit::condition_number(candidate) < cond_limit) {
            return candidate;
        }
    }
    throw std::runtime_error("random_basis: could not draw a well-conditioned basis");
}

}  // namespace ubtest
