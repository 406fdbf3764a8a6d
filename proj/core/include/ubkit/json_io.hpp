// StateSetDocument interchange format, version "1":
//   {
//     "format_version": "1",
//     "shape": [2, 2],
//     "states": [ {"label": "...", "amplitudes": [[re, im], ...]}, ... ]
//   }
// Amplitudes round-trip bit-exactly for finite doubles. States must be unit
// norm within 1e-9; deviations up to 1e-6 are renormalized with a warning;
// anything worse is rejected.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ubkit/types.hpp"

namespace ubkit {

inline constexpr const char* kFormatVersion = "1";

std::string state_set_to_json_text(const StateSet& set, int indent = 2);

/// Parses a StateSetDocument. Unknown keys are ignored so documents carrying
/// extra sections (e.g. an embedded analysis) stay loadable. Non-fatal issues
/// are appended to `warnings` when provided.
StateSet state_set_from_json_text(const std::string& text,
                                  std::vector<std::string>* warnings = nullptr);

void save_state_set(const StateSet& set, const std::filesystem::path& path);
StateSet load_state_set(const std::filesystem::path& path,
                        std::vector<std::string>* warnings = nullptr);

}  // namespace ubkit
