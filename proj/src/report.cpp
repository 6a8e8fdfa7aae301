#include "finitea/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

namespace finitea {

std::size_t VerificationReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

double VerificationReport::pass_rate() const {
    if (records.empty()) return 1.0;
    return static_cast<double>(pass_count()) / static_cast<double>(records.size());
}

std::vector<CheckRecord> VerificationReport::failures() const {
    std::vector<CheckRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out), [](const auto& r) { return !r.pass; });
    return out;
}

void VerificationReport::merge(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
    wall_time_seconds += other.wall_time_seconds;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records)
        records.push_back({{"prime", r.prime}, {"index", r.index}, {"label", r.label},
                           {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : report.skipped) skipped.push_back({{"prime", s.prime}, {"reason", s.reason}});

    nlohmann::json j = {
        {"theorem", report.theorem},
        {"parameters", report.parameters},
        {"window", {report.window_lo, report.window_hi}},
        {"checked", report.records.size()},
        {"passed", report.pass_count()},
        {"records", std::move(records)},
        {"skipped", std::move(skipped)},
        {"wall_time_seconds", report.wall_time_seconds},
    };
    if (report.timestamp) j["timestamp"] = *report.timestamp;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport report;
    report.theorem = j.at("theorem").get<std::string>();
    report.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    report.window_lo = j.at("window").at(0).get<u64>();
    report.window_hi = j.at("window").at(1).get<u64>();
    for (const auto& r : j.at("records"))
        report.records.push_back({r.at("prime").get<u64>(), r.at("index").get<i64>(), r.at("label").get<std::string>(),
                                  r.at("lhs").get<u64>(), r.at("rhs").get<u64>(), r.at("pass").get<bool>()});
    for (const auto& s : j.at("skipped"))
        report.skipped.push_back({s.at("prime").get<u64>(), s.at("reason").get<std::string>()});
    report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    if (j.contains("timestamp")) report.timestamp = j.at("timestamp").get<std::string>();
    return report;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace finitea
