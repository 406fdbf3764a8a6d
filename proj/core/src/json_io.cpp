#include "ubkit/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ubkit {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string state_set_to_json_text(const StateSet& set, int indent) {
    ordered_json doc;
    doc["format_version"] = kFormatVersion;
    doc["shape"] = set.shape().dims();
    ordered_json states = ordered_json::array();
    for (const PureState& member : set.members()) {
        ordered_json entry;
        entry["label"] = member.label();
        ordered_json amps = ordered_json::array();
        for (Eigen::Index j = 0; j < member.amplitudes().size(); ++j) {
            const cplx a = member.amplitudes()(j);
            amps.push_back(ordered_json::array({a.real(), a.imag()}));
        }
        entry["amplitudes"] = std::move(amps);
        states.push_back(std::move(entry));
    }
    doc["states"] = std::move(states);
    return doc.dump(indent) + "\n";
}

StateSet state_set_from_json_text(const std::string& text, std::vector<std::string>* warnings) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("StateSetDocument: malformed JSON: ") +
                                    err.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("StateSetDocument: top level must be an object");
    }
    if (!doc.contains("format_version") || doc["format_version"] != kFormatVersion) {
        throw std::invalid_argument("StateSetDocument: missing or unsupported format_version "
                                    "(expected \"1\")");
    }
    if (!doc.contains("shape") || !doc["shape"].is_array() || doc["shape"].empty()) {
        throw std::invalid_argument("StateSetDocument: missing shape");
    }
    std::vector<int> dims;
    for (const auto& d : doc["shape"]) {
        if (!d.is_number_integer()) {
            throw std::invalid_argument("StateSetDocument: shape entries must be integers");
        }
        dims.push_back(d.get<int>());
    }
    const SystemShape shape(dims);
    if (!doc.contains("states") || !doc["states"].is_array()) {
        throw std::invalid_argument("StateSetDocument: missing states array");
    }
    std::vector<PureState> members;
    int index = 0;
    for (const auto& entry : doc["states"]) {
        ++index;
        if (!entry.is_object() || !entry.contains("amplitudes")) {
            throw std::invalid_argument("StateSetDocument: state " + std::to_string(index) +
                                        " has no amplitudes");
        }
        const auto& amps_json = entry["amplitudes"];
        if (!amps_json.is_array() ||
            static_cast<int>(amps_json.size()) != shape.total_dim()) {
            throw std::invalid_argument("StateSetDocument: state " + std::to_string(index) +
                                        " must have exactly " +
                                        std::to_string(shape.total_dim()) + " amplitudes");
        }
        Vec amps(shape.total_dim());
        Eigen::Index j = 0;
        for (const auto& pair : amps_json) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number()) {
                throw std::invalid_argument("StateSetDocument: amplitudes must be [re, im] "
                                            "pairs");
            }
            amps(j++) = cplx(pair[0].get<double>(), pair[1].get<double>());
        }
        const std::string label = entry.value("label", "");
        const double norm_error = std::abs(amps.norm() - 1.0);
        if (norm_error > 1e-6) {
            throw std::invalid_argument("StateSetDocument: state " + std::to_string(index) +
                                        " is not unit norm (|norm-1| = " +
                                        std::to_string(norm_error) + " > 1e-6)");
        }
        if (norm_error > 1e-9 && warnings != nullptr) {
            warnings->push_back("state " + std::to_string(index) + " renormalized (|norm-1| = " +
                                std::to_string(norm_error) + ")");
        }
        if (norm_error <= 1e-12) {
            // Keep the stored bits so saving and loading round-trips exactly.
            members.push_back(PureState(shape, std::move(amps), label));
        } else {
            members.push_back(PureState::normalized(shape, std::move(amps), label));
        }
    }
    return StateSet(shape, std::move(members));
}

void save_state_set(const StateSet& set, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("save_state_set: cannot open " + path.string());
    }
    out << state_set_to_json_text(set);
}

StateSet load_state_set(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("load_state_set: cannot open " + path.string());
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return state_set_from_json_text(text, warnings);
}

}  // namespace ubkit
