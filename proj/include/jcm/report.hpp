#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace jcm {

/// One verified identity.  Non-gated checks are informational: they are
/// reported but do not affect the verdict.
struct Check {
    std::string id;
    std::string range;
    bool pass = true;
    bool gated = true;
    long long cases = 0;
    nlohmann::json counterexample;
    std::string note;
    /// Structured extra output such as homology tables; omitted when null.
    nlohmann::json details;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    void merge(const VerificationReport& other);
    /// Canonical JSON; timing is omitted unless requested so that reports
    /// are byte-identical across runs.
    nlohmann::json to_json(bool with_timing = false) const;
};

/// Accumulates cases for one check and keeps the first failure.
class CheckBuilder {
  public:
    CheckBuilder(std::string id, std::string range, bool gated = true);
    /// Records one case; `failure` is consulted only when ok is false.
    template <class F> void expect(bool ok, F&& failure) {
        ++check_.cases;
        if (!ok && check_.pass) {
            check_.pass = false;
            check_.counterexample = failure();
        }
    }
    void fail(nlohmann::json counterexample);
    void note(std::string text) { check_.note = std::move(text); }
    void details(nlohmann::json d) { check_.details = std::move(d); }
    Check done() const { return check_; }

  private:
    Check check_;
};

} // namespace jcm
