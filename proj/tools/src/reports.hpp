// JSON builders for the machine-readable documents the CLI emits. Member
// indices are 1-based in documents; the library is 0-based.

#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include <ubkit/certifiers.hpp>
#include <ubkit/reciprocal.hpp>
#include <ubkit/types.hpp>

namespace ubkit::cli {

using ordered_json = nlohmann::ordered_json;

ordered_json state_fragment(const PureState& state);
ordered_json state_set_document(const StateSet& set);
ordered_json options_json(const SeesawOptions& opts);

ordered_json extendibility_json(const ExtendibilityVerdict& verdict);
ordered_json gub_json(const GubVerdict& verdict);
ordered_json certificate_report_json(const CertificateReport& report);
ordered_json theorem3_json(const Theorem3Report& report);

/// Envelope shared by certify/demo outputs. No timing or environment data is
/// embedded, so identical inputs and seeds give byte-identical documents.
ordered_json report_envelope(const std::string& command, const std::string& mode,
                             const SeesawOptions& opts);

std::string dump_document(const ordered_json& doc);

}  // namespace ubkit::cli
