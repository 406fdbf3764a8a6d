#include "reports.hpp"

#include <ubkit/json_io.hpp>

namespace ubkit::cli {

ordered_json state_fragment(const PureState& state) {
    ordered_json entry;
    entry["label"] = state.label();
    ordered_json amps = ordered_json::array();
    for (Eigen::Index j = 0; j < state.amplitudes().size(); ++j) {
        const cplx a = state.amplitudes()(j);
        amps.push_back(ordered_json::array({a.real(), a.imag()}));
    }
    entry["amplitudes"] = std::move(amps);
    return entry;
}

ordered_json state_set_document(const StateSet& set) {
    return ordered_json::parse(state_set_to_json_text(set));
}

ordered_json options_json(const SeesawOptions& opts) {
    ordered_json j;
    j["seed"] = opts.seed;
    j["restarts"] = opts.restarts;
    j["max_iterations"] = opts.max_iterations;
    j["convergence_delta"] = opts.convergence_delta;
    j["overlap_bias"] = opts.overlap_bias;
    j["membership_tol"] = opts.membership_tol;
    j["overlap_threshold"] = opts.overlap_threshold;
    return j;
}

ordered_json extendibility_json(const ExtendibilityVerdict& verdict) {
    ordered_json j;
    j["extendible"] = verdict.extendible;
    j["witness"] = verdict.witness ? state_fragment(*verdict.witness) : ordered_json(nullptr);
    j["residual"] = verdict.residual;
    j["best_value"] = verdict.best_value;
    j["restarts_used"] = verdict.restarts_used;
    return j;
}

ordered_json gub_json(const GubVerdict& verdict) {
    ordered_json j;
    switch (verdict.kind) {
        case GubKind::Gub: j["kind"] = "gub"; break;
        case GubKind::UbNotGub: j["kind"] = "ub-not-gub"; break;
        case GubKind::Extendible: j["kind"] = "extendible"; break;
    }
    j["culprit_member"] =
        verdict.culprit_member ? ordered_json(*verdict.culprit_member + 1) : ordered_json(nullptr);
    j["witness"] = verdict.witness ? state_fragment(*verdict.witness) : ordered_json(nullptr);
    ordered_json loo = ordered_json::array();
    for (std::size_t k = 0; k < verdict.leave_one_out.size(); ++k) {
        const auto& v = verdict.leave_one_out[k];
        ordered_json entry;
        entry["left_out_member"] = k + 1;
        entry["extendible"] = v.extendible;
        entry["best_value"] = v.best_value;
        entry["residual"] = v.residual;
        loo.push_back(std::move(entry));
    }
    j["leave_one_out"] = std::move(loo);
    return j;
}

ordered_json certificate_report_json(const CertificateReport& report) {
    ordered_json j;
    ordered_json members = ordered_json::array();
    for (const MemberOutcome& outcome : report.members) {
        ordered_json entry;
        entry["index"] = outcome.member_index + 1;
        if (outcome.certificate) {
            entry["certificate"] = state_fragment(outcome.certificate->detector);
            entry["residual"] = outcome.certificate->residual;
            entry["overlap"] = outcome.certificate->overlap;
        } else {
            entry["certificate"] = nullptr;
        }
        entry["best_membership"] = outcome.best_membership;
        entry["best_verified_overlap"] = outcome.best_verified_overlap;
        members.push_back(std::move(entry));
    }
    j["members"] = std::move(members);
    ordered_json failing = ordered_json::array();
    for (int k : report.failing_members) failing.push_back(k + 1);
    j["failing_members"] = std::move(failing);
    j["verdict"] =
        report.distinguishable ? "unambiguously-locc-distinguishable" : "not-certified";
    return j;
}

namespace {

ordered_json classification_json(const BasisClassification& c) {
    ordered_json j;
    j["tag"] = c.product_basis ? "product-basis" : "entangled-basis";
    j["entangled_count"] = c.entangled_count;
    ordered_json flags = ordered_json::array();
    for (bool p : c.member_is_product) flags.push_back(p);
    j["member_is_product"] = std::move(flags);
    return j;
}

}  // namespace

ordered_json theorem3_json(const Theorem3Report& report) {
    ordered_json j;
    j["dual"] = state_set_document(report.dual);
    j["basis_classification"] = classification_json(report.basis_class);
    j["dual_classification"] = classification_json(report.dual_class);
    j["distinguishable"] = report.distinguishable;
    j["is_deb"] = report.is_deb;
    j["is_ipb"] = report.is_ipb;
    if (report.distinguishable) {
        ordered_json certificates = ordered_json::array();
        for (const DetectingCertificate& cert : report.certificates) {
            ordered_json entry;
            entry["index"] = cert.member_index + 1;
            entry["certificate"] = state_fragment(cert.detector);
            entry["residual"] = cert.residual;
            entry["overlap"] = cert.overlap;
            certificates.push_back(std::move(entry));
        }
        j["certificates"] = std::move(certificates);
        j["certificates_verified"] = report.certificates_verified;
    } else {
        ordered_json entangled = ordered_json::array();
        for (int k : report.entangled_dual_members) entangled.push_back(k + 1);
        j["entangled_dual_members"] = std::move(entangled);
    }
    return j;
}

ordered_json report_envelope(const std::string& command, const std::string& mode,
                             const SeesawOptions& opts) {
    ordered_json j;
    j["format_version"] = kFormatVersion;
    j["command"] = command;
    if (!mode.empty()) j["mode"] = mode;
    j["options"] = options_json(opts);
    return j;
}

std::string dump_document(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ubkit::cli
