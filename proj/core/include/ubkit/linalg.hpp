// Tensor-product linear algebra on pure states: products, inner products,
// ranks, orthocomplements, Schmidt coefficients, product-state tests.

#pragma once

#include <vector>

#include "ubkit/types.hpp"

namespace ubkit {

/// Default relative tolerance for rank decisions (relative to the largest
/// singular value).
inline constexpr double kRankTol = 1e-8;
/// Default tolerance on the second Schmidt value for product-state tests.
inline constexpr double kProductTol = 1e-7;

/// Kronecker product of raw vectors, earlier factors most significant.
Vec kron(const Vec& a, const Vec& b);

/// One factor per party; the result follows the row-major index convention
/// j = sum_k j_k * stride(k). Throws on any factor/shape mismatch.
PureState tensor_product(const SystemShape& shape, const std::vector<Vec>& factors,
                         std::string label = "");
PureState tensor_product(const std::vector<PureState>& factors, std::string label = "");

/// <a|b>, conjugate-linear in the first argument.
cplx inner_product(const PureState& a, const PureState& b);

/// Singular values of the stacked member matrix, descending.
std::vector<double> singular_values(const StateSet& set);

/// Number of singular values above tol * (largest singular value).
int numeric_rank(const StateSet& set, double tol = kRankTol);

/// sigma_max / sigma_min of the member matrix.
double condition_number(const StateSet& set);

/// Orthonormal basis of span(set). Column order follows descending singular value.
SubspaceBasis span_basis(const StateSet& set, double tol = kRankTol);

/// Orthonormal basis of the orthogonal complement of span(set). dim = d - rank.
/// Output vectors are ordered by descending alignment with the computational
/// basis and phased so their dominant computational coefficient is real positive,
/// which keeps results reproducible.
SubspaceBasis orthocomplement(const StateSet& set, double tol = kRankTol);

/// Singular values of the party-k unfolding (cut {k | rest}), descending.
/// `party` is 0-based. Squares sum to 1.
std::vector<double> schmidt_values(const PureState& state, int party);

/// True iff the second Schmidt value is below `tol` across every single-party cut.
bool is_product_state(const PureState& state, double tol = kProductTol);

/// N = sum_k (d_k - 1) + 1, the minimum size of an unextendible basis.
int lower_bound_N(const SystemShape& shape);

}  // namespace ubkit
