#include "ubkit/certifiers.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ubkit/combinatorics.hpp"
#include "ubkit/linalg.hpp"
#include "ubkit/rng.hpp"

namespace ubkit {

namespace {

// Stream namespaces for deriving per-task substreams from the user seed.
constexpr std::uint64_t kStreamFullSet = 0;
constexpr std::uint64_t kStreamLeaveOneOut = 1;       // + member index
constexpr std::uint64_t kStreamDetecting = 1'000'000;  // + member index

int matrix_rank(const Mat& m, double tol = kRankTol) {
    if (m.cols() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return rank;
}

Vec tensor_of(const std::vector<Vec>& factors) {
    Vec t = Vec::Ones(1);
    for (const Vec& f : factors) t = kron(t, f);
    return t;
}

// d x d_k matrix whose column a is factor_1 x ... x e_a x ... x factor_K,
// i.e. the product state with party k replaced by the a-th basis vector.
Mat party_columns(const SystemShape& shape, const std::vector<Vec>& factors, int party) {
    const int dk = shape.local_dim(party);
    const int post = shape.stride(party);
    const int pre = shape.total_dim() / (dk * post);
    Vec left = Vec::Ones(1);
    for (int l = 0; l < party; ++l) left = kron(left, factors[static_cast<std::size_t>(l)]);
    Vec right = Vec::Ones(1);
    for (int l = party + 1; l < shape.parties(); ++l) {
        right = kron(right, factors[static_cast<std::size_t>(l)]);
    }
    Mat w = Mat::Zero(shape.total_dim(), dk);
    for (int p = 0; p < pre; ++p) {
        for (int a = 0; a < dk; ++a) {
            for (int q = 0; q < post; ++q) {
                w((p * dk + a) * post + q, a) = left(p) * right(q);
            }
        }
    }
    return w;
}

struct Objective {
    const Mat& basis;                 // orthonormal columns of the target subspace
    const Vec* bias = nullptr;        // optional bias state
    double bias_weight = 0.0;

    double membership(const Vec& t) const { return (basis.adjoint() * t).squaredNorm(); }
    double operator()(const Vec& t) const {
        double f = membership(t);
        if (bias != nullptr) {
            f += bias_weight * std::norm(bias->dot(t));
        }
        return f;
    }
};

// One cyclic sweep of single-party eigenvector updates. Returns the objective
// value after the sweep.
double seesaw_sweep(const SystemShape& shape, const Objective& obj, std::vector<Vec>& factors) {
    for (int k = 0; k < shape.parties(); ++k) {
        const int dk = shape.local_dim(k);
        if (dk == 1) continue;
        const Mat w = party_columns(shape, factors, k);
        const Mat c = obj.basis.adjoint() * w;
        Mat m = c.adjoint() * c;
        if (obj.bias != nullptr) {
            const Eigen::RowVectorXcd b = obj.bias->adjoint() * w;
            m += obj.bias_weight * (b.adjoint() * b);
        }
        Eigen::SelfAdjointEigenSolver<Mat> es(m);
        factors[static_cast<std::size_t>(k)] = es.eigenvectors().col(dk - 1);
    }
    return obj(tensor_of(factors));
}

struct PolishResult {
    std::vector<Vec> factors;
    double residual_sq = 1.0;  // squared distance of the product state from the subspace
};

// Levenberg-damped Gauss-Newton on the membership residual
// r(phi) = (I - P) (phi_1 x ... x phi_K). Drives near-solutions down to the
// double-precision floor so exact certificate verification has a chance.
PolishResult polish_membership(const SystemShape& shape, const Mat& basis,
                               std::vector<Vec> factors, int max_iters = 120) {
    const int d = shape.total_dim();
    int total_factor_dim = 0;
    for (int k = 0; k < shape.parties(); ++k) total_factor_dim += shape.local_dim(k);

    auto residual_of = [&](const std::vector<Vec>& f) {
        const Vec t = tensor_of(f);
        return Vec(t - basis * (basis.adjoint() * t));
    };

    Vec r = residual_of(factors);
    double r2 = r.squaredNorm();
    double mu = 1e-10;
    for (int iter = 0; iter < max_iters && r2 > 1e-30; ++iter) {
        Mat jac(d, total_factor_dim);
        int col = 0;
        for (int k = 0; k < shape.parties(); ++k) {
            const Mat w = party_columns(shape, factors, k);
            jac.middleCols(col, shape.local_dim(k)) = w - basis * (basis.adjoint() * w);
            col += shape.local_dim(k);
        }
        const Mat h = jac.adjoint() * jac;
        const Vec g = jac.adjoint() * r;
        bool improved = false;
        for (int attempt = 0; attempt < 8 && !improved; ++attempt) {
            Mat damped = h;
            damped.diagonal().array() += mu;
            const Vec step = damped.ldlt().solve(-g);
            std::vector<Vec> trial = factors;
            int offset = 0;
            bool degenerate = false;
            for (int k = 0; k < shape.parties(); ++k) {
                auto& fk = trial[static_cast<std::size_t>(k)];
                fk += step.segment(offset, shape.local_dim(k));
                const double n = fk.norm();
                if (n < 1e-8) {
                    degenerate = true;
                    break;
                }
                fk /= n;
                offset += shape.local_dim(k);
            }
            if (degenerate) {
                mu *= 10.0;
                continue;
            }
            const Vec rt = residual_of(trial);
            const double rt2 = rt.squaredNorm();
            if (rt2 < r2) {
                factors = std::move(trial);
                r = rt;
                r2 = rt2;
                mu = std::max(mu * 0.3, 1e-14);
                improved = true;
            } else {
                mu *= 10.0;
            }
        }
        if (!improved) break;
    }
    return {std::move(factors), r2};
}

// Candidates are preferred when their distance to the subspace reached the
// double-precision floor: only those can survive the exact orthogonality
// re-verification. The squared membership ||U' phi||^2 cannot resolve
// residuals below sqrt(eps), so the gate uses the residual vector itself.
constexpr double kResidualSqFloor = 1e-20;

struct Candidate {
    std::vector<Vec> factors;
    double value = 0.0;
    double membership = 0.0;
    bool member_pass = false;
};

bool better_candidate(const Candidate& a, const Candidate& b) {
    if (a.member_pass != b.member_pass) return a.member_pass;
    return a.value > b.value;
}

}  // namespace

void SeesawOptions::validate() const {
    if (restarts < 1) throw std::invalid_argument("SeesawOptions: restarts must be >= 1");
    if (max_iterations < 1) {
        throw std::invalid_argument("SeesawOptions: max_iterations must be >= 1");
    }
    if (convergence_delta <= 0 || overlap_bias < 0 || membership_tol <= 0 ||
        overlap_threshold <= 0) {
        throw std::invalid_argument("SeesawOptions: tolerances must be positive");
    }
}

SeesawResult seesaw_product_search(const SubspaceBasis& target,
                                   const std::optional<PureState>& bias,
                                   const SeesawOptions& opts) {
    opts.validate();
    if (target.dim() == 0) {
        throw std::invalid_argument("seesaw_product_search: target subspace is empty");
    }
    const SystemShape& shape = target.shape();
    if (bias && bias->shape() != shape) {
        throw std::invalid_argument("seesaw_product_search: bias state shape mismatch");
    }
    const Vec* bias_amps = bias ? &bias->amplitudes() : nullptr;
    const Objective obj{target.basis(), bias_amps, bias ? opts.overlap_bias : 0.0};

    std::optional<Candidate> best;
    for (int restart = 0; restart < opts.restarts; ++restart) {
        RandomStream rng(opts.seed, static_cast<std::uint64_t>(restart));
        std::vector<Vec> factors;
        factors.reserve(static_cast<std::size_t>(shape.parties()));
        for (int k = 0; k < shape.parties(); ++k) {
            factors.push_back(rng.unit_vector(shape.local_dim(k)));
        }
        double prev = obj(tensor_of(factors));
        for (int iter = 0; iter < opts.max_iterations; ++iter) {
            const double value = seesaw_sweep(shape, obj, factors);
            if (value - prev < opts.convergence_delta) break;
            prev = value;
        }

        auto consider = [&](std::vector<Vec> f) {
            const Vec t = tensor_of(f);
            const double r2 = (t - target.basis() * (target.basis().adjoint() * t)).squaredNorm();
            Candidate c{std::move(f), obj(t), obj.membership(t), r2 <= kResidualSqFloor};
            if (!best || better_candidate(c, *best)) best = std::move(c);
        };
        PolishResult polished = polish_membership(shape, target.basis(), factors);
        consider(std::move(factors));
        consider(std::move(polished.factors));
    }

    PureState state = tensor_product(shape, best->factors);
    return {std::move(state), std::move(best->factors), best->value, best->membership};
}

ExtendibilityVerdict is_extendible(const StateSet& set, const SeesawOptions& opts) {
    opts.validate();
    const SubspaceBasis complement = orthocomplement(set);
    if (complement.dim() == 0) {
        return {false, std::nullopt, 0.0, 0.0, 0};
    }
    SeesawOptions search = opts;
    search.seed = mix_seed(opts.seed, kStreamFullSet);
    const SeesawResult result = seesaw_product_search(complement, std::nullopt, search);
    if (result.membership >= 1.0 - opts.membership_tol) {
        double residual = 0.0;
        for (const PureState& member : set.members()) {
            residual = std::max(residual, fidelity(member, result.state));
        }
        if (residual <= opts.membership_tol && is_product_state(result.state)) {
            return {true, result.state.with_label("witness"), residual, result.membership,
                    opts.restarts};
        }
    }
    return {false, std::nullopt, 0.0, result.membership, opts.restarts};
}

GubVerdict is_genuinely_unextendible(const StateSet& set, const SeesawOptions& opts) {
    opts.validate();
    if (set.size() == 0) {
        throw std::invalid_argument("is_genuinely_unextendible: empty set");
    }
    if (numeric_rank(set) != set.size()) {
        throw std::invalid_argument(
            "is_genuinely_unextendible: members must be linearly independent");
    }
    GubVerdict verdict;
    const ExtendibilityVerdict full = is_extendible(set, opts);
    if (full.extendible) {
        verdict.kind = GubKind::Extendible;
        verdict.witness = full.witness;
        return verdict;
    }
    verdict.kind = GubKind::Gub;
    for (int k = 0; k < set.size(); ++k) {
        SeesawOptions sub = opts;
        sub.seed = mix_seed(opts.seed, kStreamLeaveOneOut + static_cast<std::uint64_t>(k));
        ExtendibilityVerdict leave_out = is_extendible(set.without(k), sub);
        if (!leave_out.extendible && verdict.kind == GubKind::Gub) {
            verdict.kind = GubKind::UbNotGub;
            verdict.culprit_member = k;
        }
        verdict.leave_one_out.push_back(std::move(leave_out));
    }
    return verdict;
}

bool lemma2_counting_check(const StateSet& set) {
    if (set.size() == 0) {
        throw std::invalid_argument("lemma2_counting_check: empty set");
    }
    const SystemShape& shape = set.shape();
    for (int k = 0; k < shape.parties(); ++k) {
        if (set.size() < shape.local_dim(k)) {
            throw std::invalid_argument(
                "lemma2_counting_check: need at least max_k d_k members, got " +
                std::to_string(set.size()));
        }
    }
    // Recover the per-party factors from the top Schmidt vectors.
    std::vector<Mat> factors(static_cast<std::size_t>(shape.parties()));
    for (int k = 0; k < shape.parties(); ++k) {
        factors[static_cast<std::size_t>(k)] = Mat(shape.local_dim(k), set.size());
    }
    for (int m = 0; m < set.size(); ++m) {
        const PureState& member = set.at(m);
        if (!is_product_state(member)) {
            throw std::invalid_argument("lemma2_counting_check: member '" + member.label() +
                                        "' is not a product state");
        }
        for (int k = 0; k < shape.parties(); ++k) {
            const int dk = shape.local_dim(k);
            Mat unfolding(dk, shape.total_dim() / dk);
            for (int j = 0; j < shape.total_dim(); ++j) {
                unfolding(shape.digit(j, k), shape.rest_index(j, k)) = member.amplitudes()(j);
            }
            Eigen::JacobiSVD<Mat> svd(unfolding, Eigen::ComputeThinU);
            factors[static_cast<std::size_t>(k)].col(m) = svd.matrixU().col(0);
        }
    }
    for (int k = 0; k < shape.parties(); ++k) {
        const int dk = shape.local_dim(k);
        bool ok = true;
        for_each_combination(set.size(), dk, [&](const std::vector<int>& idx) {
            if (!ok) return;
            Mat sub(dk, dk);
            for (int c = 0; c < dk; ++c) {
                sub.col(c) = factors[static_cast<std::size_t>(k)].col(idx[static_cast<std::size_t>(c)]);
            }
            if (matrix_rank(sub) != dk) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

namespace {

void require_independent_members(const StateSet& set, const char* op) {
    if (set.size() == 0) {
        throw std::invalid_argument(std::string(op) + ": empty set");
    }
    if (numeric_rank(set) != set.size()) {
        throw std::invalid_argument(std::string(op) +
                                    ": the detecting-state criterion is applied to linearly "
                                    "independent members; the given set is dependent");
    }
}

}  // namespace

MemberOutcome detecting_state_outcome(const StateSet& set, int member_index,
                                      const SeesawOptions& opts) {
    opts.validate();
    require_independent_members(set, "find_detecting_state");
    if (member_index < 0 || member_index >= set.size()) {
        throw std::invalid_argument("find_detecting_state: member index out of range");
    }
    MemberOutcome outcome;
    outcome.member_index = member_index;
    const StateSet others = set.without(member_index);
    const SubspaceBasis complement = orthocomplement(others);
    if (complement.dim() == 0) {
        return outcome;
    }
    SeesawOptions search = opts;
    search.seed = mix_seed(opts.seed, kStreamDetecting + static_cast<std::uint64_t>(member_index));
    const SeesawResult result =
        seesaw_product_search(complement, set.at(member_index), search);
    outcome.best_membership = result.membership;
    if (result.membership < 1.0 - opts.membership_tol) {
        return outcome;
    }
    double residual = 0.0;
    for (const PureState& member : others.members()) {
        residual = std::max(residual, fidelity(member, result.state));
    }
    const double overlap = fidelity(set.at(member_index), result.state);
    if (residual > opts.membership_tol || !is_product_state(result.state)) {
        return outcome;
    }
    outcome.best_verified_overlap = overlap;
    if (overlap >= opts.overlap_threshold) {
        outcome.certificate = DetectingCertificate{
            member_index,
            result.state.with_label("detector" + std::to_string(member_index + 1)), residual,
            overlap};
    }
    return outcome;
}

std::optional<DetectingCertificate> find_detecting_state(const StateSet& set, int member_index,
                                                         const SeesawOptions& opts) {
    return detecting_state_outcome(set, member_index, opts).certificate;
}

CertificateReport certify_unambiguous_locc(const StateSet& set, const SeesawOptions& opts) {
    opts.validate();
    require_independent_members(set, "certify_unambiguous_locc");
    CertificateReport report;
    for (int k = 0; k < set.size(); ++k) {
        MemberOutcome outcome = detecting_state_outcome(set, k, opts);
        if (!outcome.certificate) {
            report.failing_members.push_back(k);
        }
        report.members.push_back(std::move(outcome));
    }
    report.distinguishable = report.failing_members.empty();
    return report;
}

bool verify_detecting_certificate(const StateSet& set, int member_index,
                                  const PureState& detector, const SeesawOptions& opts) {
    if (detector.shape() != set.shape()) {
        throw std::invalid_argument("verify_detecting_certificate: shape mismatch");
    }
    if (member_index < 0 || member_index >= set.size()) {
        throw std::invalid_argument("verify_detecting_certificate: member index out of range");
    }
    if (!is_product_state(detector)) {
        return false;
    }
    for (int j = 0; j < set.size(); ++j) {
        if (j == member_index) continue;
        if (fidelity(set.at(j), detector) > opts.membership_tol) {
            return false;
        }
    }
    return fidelity(set.at(member_index), detector) >= opts.overlap_threshold;
}

std::optional<PureState> brute_force_product_search(const StateSet& set, int resolution) {
    const SystemShape& shape = set.shape();
    const int parties = shape.parties();
    bool qubit_shape = (parties == 2 || parties == 3);
    for (int k = 0; k < parties; ++k) {
        qubit_shape = qubit_shape && shape.local_dim(k) == 2;
    }
    if (!qubit_shape) {
        throw std::invalid_argument(
            "brute_force_product_search: only qubit shapes (2,2) and (2,2,2) are supported");
    }
    if (resolution < 2 || resolution > 64) {
        throw std::invalid_argument("brute_force_product_search: resolution must be in [2, 64]");
    }
    const SubspaceBasis complement = orthocomplement(set);
    if (complement.dim() == 0) {
        return std::nullopt;
    }
    // Bloch-angle grid per qubit; theta endpoints hit |0> and |1> exactly.
    std::vector<Vec> grid;
    grid.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double theta = std::numbers::pi * i / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double phase = 2.0 * std::numbers::pi * j / resolution;
            Vec q(2);
            q(0) = std::cos(theta / 2.0);
            q(1) = std::polar(std::sin(theta / 2.0), phase);
            grid.push_back(std::move(q));
        }
    }
    const Mat projector_rows = complement.basis().adjoint();
    double best_score = -1.0;
    std::vector<int> best_choice;
    std::vector<int> choice(static_cast<std::size_t>(parties), 0);
    // Depth-first over qubit grid choices with preallocated partial products.
    std::vector<Vec> partial(static_cast<std::size_t>(parties) + 1);
    partial[0] = Vec::Ones(1);
    for (int l = 1; l <= parties; ++l) {
        partial[static_cast<std::size_t>(l)] = Vec::Zero(1 << l);
    }
    Vec projected(complement.dim());
    std::function<void(int)> descend = [&](int level) {
        if (level == parties) {
            projected.noalias() = projector_rows * partial[static_cast<std::size_t>(level)];
            const double score = projected.squaredNorm();
            if (score > best_score + 1e-15) {
                best_score = score;
                best_choice = choice;
            }
            return;
        }
        const Vec& prefix = partial[static_cast<std::size_t>(level)];
        Vec& next = partial[static_cast<std::size_t>(level) + 1];
        for (int g = 0; g < static_cast<int>(grid.size()); ++g) {
            const Vec& q = grid[static_cast<std::size_t>(g)];
            for (Eigen::Index i = 0; i < prefix.size(); ++i) {
                next(2 * i) = prefix(i) * q(0);
                next(2 * i + 1) = prefix(i) * q(1);
            }
            choice[static_cast<std::size_t>(level)] = g;
            descend(level + 1);
        }
    };
    descend(0);
    if (best_score < 1.0 - 10.0 / (static_cast<double>(resolution) * resolution)) {
        return std::nullopt;
    }
    std::vector<Vec> factors;
    for (int g : best_choice) {
        factors.push_back(grid[static_cast<std::size_t>(g)]);
    }
    return tensor_product(shape, factors, "grid-witness");
}

}  // namespace ubkit
