#include "overpart/report.hpp"

namespace overpart {

using nlohmann::ordered_json;

std::string_view status_name(ReportStatus s)
{
    switch (s) {
    case ReportStatus::pass:
        return "pass";
    case ReportStatus::fail:
        return "fail";
    case ReportStatus::exploratory:
        return "exploratory";
    }
    return "unknown";
}

int status_exit_code(ReportStatus s)
{
    return s == ReportStatus::fail ? 1 : 0;
}

ordered_json to_json(const ReportEnvelope& report)
{
    ordered_json parameters = ordered_json::object();
    for (const auto& [key, value] : report.parameters)
        parameters[key] = value;
    return ordered_json{{"command", report.command},
                        {"parameters", parameters},
                        {"status", status_name(report.status)},
                        {"payload", report.payload},
                        {"artifact_version", kArtifactVersion}};
}

ordered_json to_json(const CongruenceReport& report)
{
    ordered_json classes = ordered_json::array();
    for (const ClassResult& cls : report.classes) {
        ordered_json entry{
            {"residue", cls.residue},
            {"claim", cls.required_valuation == 0
                          ? ordered_json(nullptr)
                          : ordered_json("0 mod " + pow2(cls.required_valuation).get_str())},
            {"verified", cls.verified_count},
            {"failed", cls.failed_count},
        };
        if (cls.first_counterexample) {
            const Counterexample& ce = *cls.first_counterexample;
            entry["first_counterexample"] = ordered_json{{"argument", ce.argument},
                                                         {"value", ce.value.get_str()},
                                                         {"residue", ce.residue.get_str()}};
        } else {
            entry["first_counterexample"] = nullptr;
        }
        entry["observed_min_valuation"] =
            cls.observed_min_valuation ? ordered_json(*cls.observed_min_valuation)
                                       : ordered_json(nullptr);
        classes.push_back(std::move(entry));
    }
    return ordered_json{{"t", report.t},
                        {"max_n", report.max_n},
                        {"exploratory", report.exploratory},
                        {"all_claims_hold", report.all_claims_hold()},
                        {"classes", classes}};
}

ordered_json to_json(const Mod2Characterization& result)
{
    return ordered_json{
        {"t", result.t},
        {"max_n", result.max_n},
        {"holds", result.holds},
        {"first_violation",
         result.first_violation ? ordered_json(*result.first_violation) : ordered_json(nullptr)},
    };
}

ordered_json to_json(const Mod4Characterization& result)
{
    ordered_json positions = ordered_json::array();
    for (std::uint64_t n : result.positions_two_mod4)
        positions.push_back(n);
    return ordered_json{
        {"t", result.t},
        {"max_n", result.max_n},
        {"holds", result.holds},
        {"positions_two_mod4", positions},
        {"first_violation",
         result.first_violation ? ordered_json(*result.first_violation) : ordered_json(nullptr)},
    };
}

}  // namespace overpart
