#include "ubkit/reciprocal.hpp"

#include <Eigen/LU>
#include <stdexcept>
#include <string>

#include "ubkit/linalg.hpp"

namespace ubkit {

namespace {
constexpr double kConditionLimit = 1e10;
}

StateSet reciprocal_basis(const StateSet& basis) {
    const int d = basis.shape().total_dim();
    if (basis.size() != d) {
        throw std::invalid_argument("reciprocal_basis: need exactly d = " + std::to_string(d) +
                                    " members, got " + std::to_string(basis.size()));
    }
    // Tight rank tolerance: true deficiency is reported as "not a basis",
    // while merely terrible conditioning falls through to the guard below.
    const int rank = numeric_rank(basis, 1e-12);
    if (rank < d) {
        throw std::invalid_argument("reciprocal_basis: not a basis (numeric rank " +
                                    std::to_string(rank) + " < " + std::to_string(d) + ")");
    }
    const double cond = condition_number(basis);
    if (cond > kConditionLimit) {
        throw std::runtime_error("reciprocal_basis: member matrix condition number " +
                                 std::to_string(cond) + " exceeds 1e10; duals would be "
                                 "numerically meaningless");
    }
    const Mat members = basis.member_matrix();
    const Mat inverse = members.partialPivLu().inverse();
    std::vector<PureState> duals;
    duals.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        // Row k of the inverse, conjugated, satisfies <dual_k|Psi_j> = delta_kj
        // before normalization; dividing by the positive norm keeps the
        // diagonal overlap real positive.
        Vec dual = inverse.row(k).conjugate().transpose();
        duals.push_back(PureState::normalized(basis.shape(), std::move(dual),
                                              "dual" + std::to_string(k + 1)));
    }
    return StateSet(basis.shape(), std::move(duals), basis.name().empty()
                                                         ? "reciprocal"
                                                         : basis.name() + "-reciprocal");
}

bool involution_check(const StateSet& basis, double tol) {
    const StateSet ddual = reciprocal_basis(reciprocal_basis(basis));
    for (int k = 0; k < basis.size(); ++k) {
        if (fidelity(ddual.at(k), basis.at(k)) < 1.0 - tol) {
            return false;
        }
    }
    return true;
}

BasisClassification classify_basis(const StateSet& basis, double tol) {
    BasisClassification result;
    result.member_is_product.reserve(static_cast<std::size_t>(basis.size()));
    for (const PureState& member : basis.members()) {
        const bool product = is_product_state(member, tol);
        result.member_is_product.push_back(product);
        if (!product) ++result.entangled_count;
    }
    result.product_basis = result.entangled_count == 0;
    return result;
}

Theorem3Report theorem3_analysis(const StateSet& basis, const SeesawOptions& opts) {
    opts.validate();
    StateSet dual = reciprocal_basis(basis);
    Theorem3Report report{std::move(dual),
                          classify_basis(basis),
                          {},
                          false,
                          {},
                          false,
                          {},
                          false,
                          false};
    report.dual_class = classify_basis(report.dual);
    report.distinguishable = report.dual_class.product_basis;
    if (report.distinguishable) {
        report.certificates_verified = true;
        for (int k = 0; k < basis.size(); ++k) {
            const PureState& detector = report.dual.at(k);
            double residual = 0.0;
            for (int j = 0; j < basis.size(); ++j) {
                if (j != k) residual = std::max(residual, fidelity(basis.at(j), detector));
            }
            const double overlap = fidelity(basis.at(k), detector);
            report.certificates.push_back(DetectingCertificate{k, detector, residual, overlap});
            if (!verify_detecting_certificate(basis, k, detector, opts)) {
                report.certificates_verified = false;
            }
        }
    } else {
        for (int k = 0; k < report.dual.size(); ++k) {
            if (!report.dual_class.member_is_product[static_cast<std::size_t>(k)]) {
                report.entangled_dual_members.push_back(k);
            }
        }
    }
    report.is_deb = report.distinguishable && report.basis_class.entangled_count > 0;
    report.is_ipb = !report.distinguishable && report.basis_class.product_basis;
    return report;
}

}  // namespace ubkit
