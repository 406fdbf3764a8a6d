#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

#include <ubkit/combinatorics.hpp>
#include <ubkit/constructions.hpp>
#include <ubkit/json_io.hpp>
#include <ubkit/linalg.hpp>
#include <ubkit/reciprocal.hpp>
#include <ubkit/rng.hpp>

#include "parsers.hpp"
#include "reports.hpp"

namespace ubkit::cli {

namespace {

// Wall-clock summaries go to stderr only; the JSON documents carry no timing
// so identical seeds produce byte-identical output.
class StopwatchLine {
public:
    ~StopwatchLine() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        std::cerr << "elapsed: "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                  << " ms\n";
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_output(const std::string& text, const std::optional<std::string>& path) {
    if (path) {
        std::ofstream out(*path);
        if (!out) {
            throw std::runtime_error("cannot open output file " + *path);
        }
        out << text;
    } else {
        std::cout << text;
    }
}

StateSet load_input(const std::string& path) {
    std::vector<std::string> warnings;
    StateSet set = load_state_set(path, &warnings);
    for (const std::string& w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    return set;
}

struct Claim {
    std::string name;
    bool pass = false;
    ordered_json details;
};

class ClaimList {
public:
    void add(const std::string& name, bool pass, ordered_json details = ordered_json::object()) {
        claims_.push_back({name, pass, std::move(details)});
        std::cerr << (pass ? "[PASS] " : "[FAIL] ") << name << "\n";
        all_pass_ = all_pass_ && pass;
    }
    bool all_pass() const { return all_pass_; }
    ordered_json to_json() const {
        ordered_json arr = ordered_json::array();
        for (const Claim& c : claims_) {
            ordered_json entry;
            entry["claim"] = c.name;
            entry["pass"] = c.pass;
            if (!c.details.empty()) entry["details"] = c.details;
            arr.push_back(std::move(entry));
        }
        return arr;
    }

private:
    std::vector<Claim> claims_;
    bool all_pass_ = true;
};

// Certify a subset with a decorrelated seed stream; used by the demos.
CertificateReport certify_subset(const StateSet& set, const std::vector<int>& indices,
                                 const SeesawOptions& opts, std::uint64_t stream) {
    SeesawOptions sub = opts;
    sub.seed = mix_seed(opts.seed, 7000 + stream);
    return certify_unambiguous_locc(set.subset(indices), sub);
}

int demo_example1(const DemoArgs& args);
int demo_example2(const DemoArgs& args);
int demo_theorem2(const DemoArgs& args);
int demo_ghz(const DemoArgs& args);
int demo_maxent(const DemoArgs& args);

}  // namespace

int cmd_construct(const ConstructArgs& args) {
    std::optional<StateSet> set;
    if (args.family == "minimal-gupb") {
        const SystemShape shape = parse_shape(args.shape);
        const auto indices =
            args.indices ? parse_index_set(*args.indices) : default_index_set(shape);
        set = minimal_gupb(shape, indices);
    } else if (args.family == "theorem2-basis") {
        const SystemShape shape = parse_shape(args.shape);
        const auto points =
            args.points ? parse_points(*args.points) : default_theorem2_points(shape);
        set = theorem2_basis(shape, points);
        std::cerr << "member matrix condition number: " << condition_number(*set) << "\n";
    } else if (args.family == "cross-set") {
        set = cross_set(args.d);
    } else if (args.family == "fourier-pairs") {
        set = fourier_pair_set(args.d);
    } else if (args.family == "ghz-triple") {
        set = ghz_triple(args.parties, args.bits);
    } else if (args.family == "example2") {
        set = example2_basis();
    } else if (args.family == "max-entangled") {
        const PureState state = max_entangled_state(args.d, args.m, args.n);
        set = StateSet(state.shape(), {state}, "max-entangled");
    } else {
        throw std::invalid_argument("unknown construction family '" + args.family + "'");
    }
    write_output(state_set_to_json_text(*set), args.output);
    std::cerr << set->name() << " on " << set->shape().to_string() << ": " << set->size()
              << " states\n";
    return kExitOk;
}

int cmd_certify(const CertifyArgs& args) {
    StopwatchLine stopwatch;
    if (args.mode == "verify-only") {
        std::ifstream in(args.input);
        if (!in) {
            throw std::invalid_argument("cannot open " + args.input);
        }
        const std::string text((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& err) {
            throw std::invalid_argument(std::string("malformed report JSON: ") + err.what());
        }
        // Re-verify every certificate found in any {input, members} block,
        // including blocks nested inside demo reports.
        int checked = 0;
        int failed = 0;
        ordered_json results = ordered_json::array();
        std::function<void(const nlohmann::json&)> scan = [&](const nlohmann::json& node) {
            if (node.is_object() && node.contains("input") && node.contains("members")) {
                const StateSet set = state_set_from_json_text(node["input"].dump());
                for (const auto& member : node["members"]) {
                    if (!member.contains("certificate") || member["certificate"].is_null()) {
                        continue;
                    }
                    const int index = member["index"].get<int>() - 1;
                    nlohmann::json fragment;
                    fragment["format_version"] = kFormatVersion;
                    fragment["shape"] = set.shape().dims();
                    fragment["states"] = nlohmann::json::array({member["certificate"]});
                    const StateSet wrapper = state_set_from_json_text(fragment.dump());
                    const bool ok =
                        verify_detecting_certificate(set, index, wrapper.at(0), args.opts);
                    ++checked;
                    if (!ok) ++failed;
                    ordered_json entry;
                    entry["index"] = index + 1;
                    entry["verified"] = ok;
                    results.push_back(std::move(entry));
                }
            }
            if (node.is_object() || node.is_array()) {
                for (const auto& child : node) scan(child);
            }
        };
        scan(doc);
        if (checked == 0) {
            throw std::invalid_argument("report contains no certificates to verify");
        }
        ordered_json out = report_envelope("certify", "verify-only", args.opts);
        out["certificates"] = std::move(results);
        out["verdict"] = failed == 0 ? "verified" : "failed";
        write_output(dump_document(out), args.output);
        std::cerr << checked << " certificates checked, " << failed << " failed\n";
        return failed == 0 ? kExitOk : kExitNegative;
    }

    const StateSet set = load_input(args.input);
    ordered_json out = report_envelope("certify", args.mode, args.opts);
    out["input"] = state_set_document(set);
    int exit_code = kExitNegative;
    if (args.mode == "extendible") {
        const ExtendibilityVerdict verdict = is_extendible(set, args.opts);
        out.update(extendibility_json(verdict));
        out["verdict"] = verdict.extendible ? "extendible" : "no-product-found";
        std::cerr << (verdict.extendible ? "extendible (witness verified)"
                                         : "no product state found (heuristic)")
                  << ", best membership " << verdict.best_value << "\n";
        exit_code = verdict.extendible ? kExitOk : kExitNegative;
    } else if (args.mode == "gub") {
        const GubVerdict verdict = is_genuinely_unextendible(set, args.opts);
        out.update(gub_json(verdict));
        out["verdict"] = out["kind"];
        std::cerr << "verdict: " << out["kind"].get<std::string>() << "\n";
        exit_code = verdict.kind == GubKind::Gub ? kExitOk : kExitNegative;
    } else if (args.mode == "locc-unambiguous") {
        const CertificateReport report = certify_unambiguous_locc(set, args.opts);
        out.update(certificate_report_json(report));
        std::cerr << "verdict: " << out["verdict"].get<std::string>() << "\n";
        exit_code = report.distinguishable ? kExitOk : kExitNegative;
    } else {
        throw std::invalid_argument("unknown certify mode '" + args.mode + "'");
    }
    write_output(dump_document(out), args.output);
    return exit_code;
}

int cmd_reciprocal(const ReciprocalArgs& args) {
    StopwatchLine stopwatch;
    const StateSet set = load_input(args.input);
    const Theorem3Report report = theorem3_analysis(set, args.opts);
    ordered_json doc = state_set_document(report.dual);
    ordered_json analysis = theorem3_json(report);
    analysis.erase("dual");  // already the document body
    doc["analysis"] = std::move(analysis);
    write_output(dump_document(doc), args.output);
    std::cerr << "dual basis: "
              << (report.dual_class.product_basis ? "product" : "entangled") << "; input is "
              << (report.distinguishable ? "unambiguously LOCC-distinguishable"
                                         : "not unambiguously LOCC-distinguishable");
    if (report.is_deb) std::cerr << " (DEB)";
    if (report.is_ipb) std::cerr << " (IPB)";
    std::cerr << "\n";
    return kExitOk;
}

namespace {

int finish_demo(const DemoArgs& args, const std::string& name, ClaimList& claims,
                ordered_json& out) {
    out["claims"] = claims.to_json();
    out["verdict"] = claims.all_pass() ? "pass" : "fail";
    write_output(dump_document(out), args.output);
    std::cerr << "demo " << name << ": " << (claims.all_pass() ? "all claims pass" : "FAILED")
              << "\n";
    return claims.all_pass() ? kExitOk : kExitNegative;
}

int demo_example1(const DemoArgs& args) {
    const SystemShape shape = parse_shape(args.shape);
    const StateSet set = minimal_gupb(shape, default_index_set(shape));
    ordered_json out = report_envelope("demo", "example1", args.opts);
    out["state_set"] = state_set_document(set);
    ClaimList claims;

    if (shape == SystemShape({2, 2})) {
        const StateSet expected(shape,
                                {tensor_product(shape,
                                                {(Vec(2) << 1, 0).finished(),
                                                 (Vec(2) << 1, 0).finished()},
                                                "00"),
                                 tensor_product(shape,
                                                {Vec::Constant(2, 1.0 / std::sqrt(2.0)),
                                                 Vec::Constant(2, 1.0 / std::sqrt(2.0))},
                                                "++"),
                                 tensor_product(shape,
                                                {(Vec(2) << 0, 1).finished(),
                                                 (Vec(2) << 0, 1).finished()},
                                                "11")});
        bool match = set.size() == 3;
        for (int k = 0; match && k < 3; ++k) {
            match = fidelity(set.at(k), expected.at(k)) >= 1.0 - 1e-12;
        }
        claims.add("members are |00>, |++>, |11>", match);
    }
    claims.add("every local d_k-subset spans (counting check)", lemma2_counting_check(set));
    const GubVerdict gub = is_genuinely_unextendible(set, args.opts);
    claims.add("genuinely unextendible", gub.kind == GubKind::Gub, gub_json(gub));

    const CertificateReport report = certify_unambiguous_locc(set, args.opts);
    ordered_json report_json = certificate_report_json(report);
    report_json["input"] = state_set_document(set);
    claims.add("unambiguously LOCC-distinguishable", report.distinguishable);
    bool verified = report.distinguishable;
    for (const MemberOutcome& outcome : report.members) {
        verified = verified && outcome.certificate &&
                   outcome.certificate->residual <= 1e-8 && outcome.certificate->overlap >= 0.25 &&
                   verify_detecting_certificate(set, outcome.member_index,
                                                outcome.certificate->detector, args.opts);
    }
    claims.add("certificates re-verified (residual <= 1e-8, overlap >= 0.25)", verified);
    out["reports"] = ordered_json::array({std::move(report_json)});
    return finish_demo(args, "example1", claims, out);
}

int demo_example2(const DemoArgs& args) {
    const StateSet set = example2_basis();
    const SystemShape shape = set.shape();
    ordered_json out = report_envelope("demo", "example2", args.opts);
    out["state_set"] = state_set_document(set);
    ClaimList claims;

    Vec psi4(4);
    psi4 << 0.5, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.5;
    claims.add("member 4 amplitudes are (1,-i,i,1)/2",
               (set.at(3).amplitudes() - psi4).norm() <= 1e-12);
    claims.add("product basis of rank 4",
               numeric_rank(set) == 4 && classify_basis(set).product_basis);

    // Expected duals, assembled from |00>, |11> and (|01> +- |10>)/sqrt(2).
    const double s = 1.0 / std::sqrt(2.0);
    Vec phi_plus(4), phi_minus(4);
    phi_plus << 0, s, s, 0;
    phi_minus << 0, s, -s, 0;
    Vec e00 = Vec::Zero(4), e11 = Vec::Zero(4);
    e00(0) = 1.0;
    e11(3) = 1.0;
    const cplx half(0.5, 0.0), half_i(0.0, 0.5);
    std::vector<Vec> expected = {
        s * e00 - half * phi_plus + half_i * phi_minus,
        s * e11 - half * phi_plus + half_i * phi_minus,
        phi_plus,
        phi_minus,
    };
    const StateSet dual = reciprocal_basis(set);
    bool golden = true;
    for (int k = 0; k < 4; ++k) {
        const PureState want = PureState::normalized(shape, expected[static_cast<std::size_t>(k)]);
        golden = golden && fidelity(dual.at(k), want) >= 1.0 - 1e-9;
    }
    claims.add("reciprocal basis matches the closed-form dual states", golden);
    out["dual"] = state_set_document(dual);

    const Theorem3Report forward = theorem3_analysis(set, args.opts);
    claims.add("basis is an indistinguishable product basis (IPB)",
               !forward.distinguishable && forward.is_ipb, theorem3_json(forward));
    const Theorem3Report backward = theorem3_analysis(dual, args.opts);
    bool deb = backward.distinguishable && backward.is_deb && backward.certificates_verified;
    for (std::size_t k = 0; deb && k < backward.certificates.size(); ++k) {
        deb = fidelity(backward.certificates[k].detector, set.at(static_cast<int>(k))) >=
              1.0 - 1e-9;
    }
    claims.add("dual is a distinguishable entangled basis (DEB) detected by the original members",
               deb, theorem3_json(backward));
    return finish_demo(args, "example2", claims, out);
}

int demo_theorem2(const DemoArgs& args) {
    const SystemShape shape = parse_shape(args.shape);
    const StateSet set = theorem2_basis(shape, default_theorem2_points(shape));
    const int d = shape.total_dim();
    const int n = lower_bound_N(shape);
    ordered_json out = report_envelope("demo", "theorem2", args.opts);
    out["state_set"] = state_set_document(set);
    out["condition_number"] = condition_number(set);
    ClaimList claims;
    claims.add("basis has full rank d", numeric_rank(set) == d);

    constexpr int kMaxSubsets = 30;
    std::vector<std::vector<int>> subsets = combinations(d, n);
    if (static_cast<int>(subsets.size()) > kMaxSubsets) {
        subsets.resize(kMaxSubsets);
    }
    ordered_json reports = ordered_json::array();
    bool all_subsets = true;
    bool all_counting = true;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        all_counting = all_counting && lemma2_counting_check(set.subset(subsets[i]));
        const CertificateReport report =
            certify_subset(set, subsets[i], args.opts, static_cast<std::uint64_t>(i));
        all_subsets = all_subsets && report.distinguishable;
        ordered_json entry = certificate_report_json(report);
        entry["subset"] = [&] {
            ordered_json s = ordered_json::array();
            for (int idx : subsets[i]) s.push_back(idx + 1);
            return s;
        }();
        entry["input"] = state_set_document(set.subset(subsets[i]));
        reports.push_back(std::move(entry));
    }
    claims.add("every tested N-subset passes the counting check", all_counting);
    claims.add("every tested N-subset is unambiguously LOCC-distinguishable", all_subsets);

    const CertificateReport full = certify_unambiguous_locc(set, args.opts);
    ordered_json full_json = certificate_report_json(full);
    full_json["input"] = state_set_document(set);
    claims.add("the full basis is not certified", !full.distinguishable);
    double min_overlap = 1.0;
    for (int k : full.failing_members) {
        min_overlap =
            std::min(min_overlap, full.members[static_cast<std::size_t>(k)].best_verified_overlap);
    }
    claims.add("a failing member has best verified overlap <= 1e-6",
               !full.failing_members.empty() && min_overlap <= 1e-6,
               ordered_json{{"min_best_verified_overlap", min_overlap}});
    reports.push_back(std::move(full_json));
    out["reports"] = std::move(reports);
    return finish_demo(args, "theorem2", claims, out);
}

int demo_ghz(const DemoArgs& args) {
    const StateSet set = ghz_triple(args.parties, args.bits);
    ordered_json out = report_envelope("demo", "ghz", args.opts);
    out["state_set"] = state_set_document(set);
    ClaimList claims;

    const CertificateReport report = certify_unambiguous_locc(set, args.opts);
    ordered_json report_json = certificate_report_json(report);
    report_json["input"] = state_set_document(set);
    out["reports"] = ordered_json::array({std::move(report_json)});

    const MemberOutcome& first = report.members[0];
    claims.add("member 1 has a verified detecting state",
               first.certificate &&
                   verify_detecting_certificate(set, 0, first.certificate->detector, args.opts));
    claims.add("members 2 and 3 have no certificate",
               !report.members[1].certificate && !report.members[2].certificate);
    claims.add("members 2 and 3: best verified overlap <= 1e-6",
               report.members[1].best_verified_overlap <= 1e-6 &&
                   report.members[2].best_verified_overlap <= 1e-6,
               ordered_json{{"member2", report.members[1].best_verified_overlap},
                            {"member3", report.members[2].best_verified_overlap}});
    return finish_demo(args, "ghz", claims, out);
}

int demo_maxent(const DemoArgs& args) {
    const int d = args.d;
    const StateSet cross = cross_set(d);
    const StateSet pairs = fourier_pair_set(d);
    ordered_json out = report_envelope("demo", "maxent", args.opts);
    out["state_set"] = state_set_document(cross);
    ClaimList claims;

    claims.add("cross set has rank 2d-1", numeric_rank(cross) == 2 * d - 1);

    const Mat cross_projector = span_basis(cross).projector();
    bool spans_match = true;
    bool subsets_count = true;
    for_each_combination(pairs.size(), 2 * d - 1, [&](const std::vector<int>& idx) {
        const StateSet sub = pairs.subset(idx);
        const Mat p = span_basis(sub).projector();
        spans_match =
            spans_match && (p - cross_projector).cwiseAbs().maxCoeff() <= 1e-9;
        subsets_count = subsets_count && lemma2_counting_check(sub);
    });
    claims.add("any 2d-1 product pairs span the cross set", spans_match);
    claims.add("every 2d-1 product subset passes the counting check", subsets_count);

    const CertificateReport report = certify_unambiguous_locc(cross, args.opts);
    ordered_json report_json = certificate_report_json(report);
    report_json["input"] = state_set_document(cross);
    out["reports"] = ordered_json::array({std::move(report_json)});
    claims.add("cross set is unambiguously LOCC-distinguishable", report.distinguishable);
    return finish_demo(args, "maxent", claims, out);
}

}  // namespace

int cmd_demo(const DemoArgs& args) {
    StopwatchLine stopwatch;
    if (args.name == "example1") return demo_example1(args);
    if (args.name == "example2") return demo_example2(args);
    if (args.name == "theorem2") return demo_theorem2(args);
    if (args.name == "ghz") return demo_ghz(args);
    if (args.name == "maxent") return demo_maxent(args);
    throw std::invalid_argument("unknown demo '" + args.name + "'");
}

}  // namespace ubkit::cli
