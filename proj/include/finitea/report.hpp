#pragma once

#include "finitea/modular.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace finitea {

/// One congruence check at one prime. `index` is the theorem's running
/// parameter (n for Dobinski, x/m/k position for Euler checks).
struct CheckRecord {
    u64 prime = 0;
    i64 index = 0;
    std::string label;
    u64 lhs = 0;
    u64 rhs = 0;
    bool pass = false;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct SkippedPrime {
    u64 prime = 0;
    std::string reason;

    friend bool operator==(const SkippedPrime&, const SkippedPrime&) = default;
};

/// Outcome of a theorem verifier over a prime window.
struct VerificationReport {
    std::string theorem;
    std::map<std::string, std::string> parameters;
    u64 window_lo = 0;
    u64 window_hi = 0;
    std::vector<CheckRecord> records;
    std::vector<SkippedPrime> skipped;
    double wall_time_seconds = 0.0;
    std::optional<std::string> timestamp;

    std::size_t pass_count() const;
    std::size_t fail_count() const { return records.size() - pass_count(); }
    bool all_passed() const { return pass_count() == records.size(); }
    double pass_rate() const;
    std::vector<CheckRecord> failures() const;

    /// Appends another report's records and skips (same theorem family).
    void merge(const VerificationReport& other);

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

/// Wall-clock time as an ISO-8601 UTC string.
std::string utc_timestamp();

}  // namespace finitea
