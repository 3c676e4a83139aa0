#pragma once

/// Named verification suites over the module checks, producing a
/// machine-readable report: one timed pass/fail entry per check, with the
/// offending difference polynomial (truncated) on failure.

#include <optional>
#include <string>
#include <vector>

#include "qpf/io.hpp"
#include "qpf/matrix.hpp"

namespace qpf {

struct CheckResult {
    std::string name;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string detail;  // empty on pass
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    Json artifacts = Json::object();  // e.g. emitted certificates

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double total_ms() const {
        double t = 0;
        for (const auto& c : checks) t += c.elapsed_ms;
        return t;
    }
};

struct SuiteParams {
    int n = 2;
    int m = 4;
    int r = -1;  // -1 = every applicable r
    int l = 0;   // 0 = skip padding checks
    std::optional<Orientation> variant;  // unset = both
    bool perturb = false;  // flip one coefficient sign to exercise failure paths
};

/// suite in {det, laplace, pluecker, pfaffian, hyper, ideal}. Throws
/// std::domain_error for unknown suites or parameters beyond the documented
/// desk-scale caps.
VerificationReport verify_suite(const std::string& suite, const SuiteParams& params);

Json report_to_json(const VerificationReport& rep);
VerificationReport report_from_json(const Json& j);
std::string report_text(const VerificationReport& rep);

}  // namespace qpf
