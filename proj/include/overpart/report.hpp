#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "overpart/counting.hpp"

namespace overpart {

inline constexpr std::string_view kArtifactVersion = "1.0.0";

enum class ReportStatus { pass, fail, exploratory };

std::string_view status_name(ReportStatus s);

// pass and exploratory exit 0, fail exits 1; usage errors exit 2 upstream.
int status_exit_code(ReportStatus s);

// Common wrapper for every machine-readable report the CLI emits. Key order
// is fixed so identical inputs serialize byte-identically.
struct ReportEnvelope {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    ReportStatus status = ReportStatus::pass;
    nlohmann::ordered_json payload;
};

nlohmann::ordered_json to_json(const ReportEnvelope& report);

// Count values are serialized as decimal strings: they outgrow 64-bit
// integers quickly and JSON numbers would lose them.
nlohmann::ordered_json to_json(const CongruenceReport& report);
nlohmann::ordered_json to_json(const Mod2Characterization& result);
nlohmann::ordered_json to_json(const Mod4Characterization& result);

}  // namespace overpart
