#include "jcm/report.hpp"

namespace jcm {

bool VerificationReport::passed() const {
    for (const auto& c : checks)
        if (c.gated && !c.pass)
            return false;
    return true;
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& c : other.checks) {
        Check copy = c;
        if (!other.suite.empty() && other.suite != suite)
            copy.id = other.suite + "/" + c.id;
        checks.push_back(std::move(copy));
    }
    seconds += other.seconds;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j = {{"id", c.id}, {"range", c.range}, {"pass", c.pass}, {"gated", c.gated},
                            {"cases", c.cases}};
        if (!c.pass)
            j["counterexample"] = c.counterexample;
        if (!c.note.empty())
            j["note"] = c.note;
        if (!c.details.is_null())
            j["details"] = c.details;
        checks_json.push_back(std::move(j));
    }
    nlohmann::json out = {{"suite", suite}, {"pass", passed()}, {"checks", checks_json}};
    if (with_timing)
        out["seconds"] = seconds;
    return out;
}

CheckBuilder::CheckBuilder(std::string id, std::string range, bool gated) {
    check_.id = std::move(id);
    check_.range = std::move(range);
    check_.gated = gated;
}

void CheckBuilder::fail(nlohmann::json counterexample) {
    ++check_.cases;
    if (check_.pass) {
        check_.pass = false;
        check_.counterexample = std::move(counterexample);
    }
}

} // namespace jcm
