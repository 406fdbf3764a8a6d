// Reciprocal (dual) bases and the duality between locally distinguishable
// entangled bases and indistinguishable product bases.

#pragma once

#include <optional>
#include <vector>

#include "ubkit/certifiers.hpp"
#include "ubkit/types.hpp"

namespace ubkit {

struct BasisClassification {
    std::vector<bool> member_is_product;
    int entangled_count = 0;
    bool product_basis = false;  // every member is a product state
};

/// The unique dual set with <dual_k|Psi_j> = 0 for j != k. Duals are unit norm
/// and phased so <dual_k|Psi_k> is real positive. Requires |S| = d and full
/// rank; refuses member matrices with condition number above 1e10.
StateSet reciprocal_basis(const StateSet& basis);

/// True iff the reciprocal of the reciprocal matches `basis` member by member
/// up to a unit phase: |<ddual_k|Psi_k>| >= 1 - tol.
bool involution_check(const StateSet& basis, double tol = 1e-8);

BasisClassification classify_basis(const StateSet& basis, double tol = 1e-7);

struct Theorem3Report {
    StateSet dual;
    BasisClassification basis_class;
    BasisClassification dual_class;
    /// Exact: the basis is unambiguously LOCC-distinguishable iff its dual is
    /// a product basis.
    bool distinguishable = false;
    /// When distinguishable: the dual members, verified as detecting states.
    std::vector<DetectingCertificate> certificates;
    bool certificates_verified = false;
    /// When not distinguishable: dual members that are entangled (0-based).
    std::vector<int> entangled_dual_members;
    bool is_deb = false;  // distinguishable with entangled members
    bool is_ipb = false;  // indistinguishable product basis
};

/// Computes the dual, classifies both sets, and applies the duality: a product
/// dual yields the explicit detecting-state certificates psi_k = dual_k; an
/// entangled dual member makes the basis (exactly) not unambiguously
/// LOCC-distinguishable.
Theorem3Report theorem3_analysis(const StateSet& basis, const SeesawOptions& opts);

}  // namespace ubkit
