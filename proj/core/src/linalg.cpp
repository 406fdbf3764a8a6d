#include "ubkit/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace ubkit {

Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

PureState tensor_product(const SystemShape& shape, const std::vector<Vec>& factors,
                         std::string label) {
    if (static_cast<int>(factors.size()) != shape.parties()) {
        throw std::invalid_argument("tensor_product: expected one factor per party");
    }
    Vec acc = Vec::Ones(1);
    for (int k = 0; k < shape.parties(); ++k) {
        const Vec& f = factors[static_cast<std::size_t>(k)];
        if (f.size() != shape.local_dim(k)) {
            throw std::invalid_argument("tensor_product: factor " + std::to_string(k + 1) +
                                        " has wrong dimension for shape " + shape.to_string());
        }
        acc = kron(acc, f);
    }
    return PureState::normalized(shape, std::move(acc), std::move(label));
}

PureState tensor_product(const std::vector<PureState>& factors, std::string label) {
    if (factors.empty()) {
        throw std::invalid_argument("tensor_product: no factors");
    }
    std::vector<int> dims;
    std::vector<Vec> amps;
    for (const auto& f : factors) {
        if (f.shape().parties() != 1) {
            throw std::invalid_argument("tensor_product: factors must be single-party states");
        }
        dims.push_back(f.shape().total_dim());
        amps.push_back(f.amplitudes());
    }
    return tensor_product(SystemShape(dims), amps, std::move(label));
}

cplx inner_product(const PureState& a, const PureState& b) {
    if (a.shape() != b.shape()) {
        throw std::invalid_argument("inner_product: shape mismatch");
    }
    return a.amplitudes().dot(b.amplitudes());
}

std::vector<double> singular_values(const StateSet& set) {
    if (set.size() == 0) {
        return {};
    }
    Eigen::JacobiSVD<Mat> svd(set.member_matrix());
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

int numeric_rank(const StateSet& set, double tol) {
    if (set.size() == 0) {
        throw std::invalid_argument("numeric_rank: empty set");
    }
    const auto sv = singular_values(set);
    const double cutoff = tol * sv.front();
    int rank = 0;
    for (double s : sv) {
        if (s > cutoff) ++rank;
    }
    return rank;
}

double condition_number(const StateSet& set) {
    const auto sv = singular_values(set);
    if (sv.empty() || sv.back() == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sv.front() / sv.back();
}

SubspaceBasis span_basis(const StateSet& set, double tol) {
    const int d = set.shape().total_dim();
    if (set.size() == 0) {
        return SubspaceBasis(set.shape(), Mat(d, 0));
    }
    Eigen::JacobiSVD<Mat> svd(set.member_matrix(), Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return SubspaceBasis(set.shape(), svd.matrixU().leftCols(rank));
}

SubspaceBasis orthocomplement(const StateSet& set, double tol) {
    const int d = set.shape().total_dim();
    Mat range = span_basis(set, tol).basis();
    const int complement_dim = d - static_cast<int>(range.cols());

    // Greedy completion: repeatedly take the computational basis vector with the
    // largest residual against everything selected so far. The residual phase
    // makes the dominant coefficient real positive.
    Mat picked(d, complement_dim);
    Mat accumulated(d, range.cols() + complement_dim);
    accumulated.leftCols(range.cols()) = range;
    int taken = 0;
    while (taken < complement_dim) {
        const auto current = accumulated.leftCols(range.cols() + taken);
        int best_j = -1;
        double best_norm = -1.0;
        Vec best_residual;
        for (int j = 0; j < d; ++j) {
            Vec e = Vec::Zero(d);
            e(j) = 1.0;
            Vec r = e - current * (current.adjoint() * e);
            const double n = r.norm();
            if (n > best_norm + 1e-12) {
                best_norm = n;
                best_j = j;
                best_residual = std::move(r);
            }
        }
        if (best_j < 0 || best_norm <= 1e-12) {
            throw std::runtime_error("orthocomplement: failed to complete the basis");
        }
        Vec v = best_residual / best_norm;
        v -= current * (current.adjoint() * v);  // second pass for orthogonality
        v.normalize();
        accumulated.col(range.cols() + taken) = v;
        picked.col(taken) = v;
        ++taken;
    }
    return SubspaceBasis(set.shape(), std::move(picked));
}

std::vector<double> schmidt_values(const PureState& state, int party) {
    const SystemShape& shape = state.shape();
    if (party < 0 || party >= shape.parties()) {
        throw std::invalid_argument("schmidt_values: party index out of range");
    }
    const int dk = shape.local_dim(party);
    const int rest = shape.total_dim() / dk;
    Mat unfolding(dk, rest);
    for (int j = 0; j < shape.total_dim(); ++j) {
        unfolding(shape.digit(j, party), shape.rest_index(j, party)) = state.amplitudes()(j);
    }
    Eigen::JacobiSVD<Mat> svd(unfolding);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

bool is_product_state(const PureState& state, double tol) {
    for (int k = 0; k < state.shape().parties(); ++k) {
        const auto sv = schmidt_values(state, k);
        if (sv.size() > 1 && sv[1] >= tol) {
            return false;
        }
    }
    return true;
}

int lower_bound_N(const SystemShape& shape) {
    int n = 1;
    for (int k = 0; k < shape.parties(); ++k) {
        n += shape.local_dim(k) - 1;
    }
    return n;
}

}  // namespace ubkit
