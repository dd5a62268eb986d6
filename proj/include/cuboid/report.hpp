#pragma once

// Machine-readable stage reports and the aggregate certificate.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef CUBOID_VERSION
#define CUBOID_VERSION "0.0.0"
#endif

namespace cuboid {

struct Assertion {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

class StageReport {
public:
    explicit StageReport(std::string stage) : stage_(std::move(stage)) {}

    const std::string& stage() const { return stage_; }
    bool passed() const { return passed_; }
    const std::vector<Assertion>& assertions() const { return assertions_; }
    std::int64_t wall_ms = 0;

    // Records one comparison; a mismatch fails the stage.
    void check(const std::string& name, const std::string& expected, const std::string& got) {
        bool ok = expected == got;
        assertions_.push_back({name, expected, got, ok});
        if (!ok) passed_ = false;
    }
    void check_true(const std::string& name, bool ok, const std::string& got = "") {
        assertions_.push_back({name, "true", ok ? "true" : (got.empty() ? "false" : got), ok});
        if (!ok) passed_ = false;
    }
    // Recorded observation that cannot fail (content factors, branch notes).
    void note(const std::string& name, const std::string& value) {
        assertions_.push_back({name, value, value, true});
    }
    void fail(const std::string& name, const std::string& reason) {
        assertions_.push_back({name, "pass", reason, false});
        passed_ = false;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["stage"] = stage_;
        j["status"] = passed_ ? "pass" : "fail";
        auto arr = nlohmann::ordered_json::array();
        for (const auto& a : assertions_)
            arr.push_back({{"name", a.name}, {"expected", a.expected}, {"got", a.got}, {"pass", a.pass}});
        j["assertions"] = std::move(arr);
        j["wall_ms"] = wall_ms;
        return j;
    }

private:
    std::string stage_;
    std::vector<Assertion> assertions_;
    bool passed_ = true;
};

struct Certificate {
    std::string verdict = "fail";  // "pass" iff every stage passed
    std::string tool_version = CUBOID_VERSION;
    std::map<std::string, std::string> golden_checksums;
    std::string timestamp;
    std::vector<StageReport> stages;

    bool all_passed() const {
        for (const auto& s : stages)
            if (!s.passed()) return false;
        return !stages.empty();
    }

    void finalize() {
        verdict = all_passed() ? "pass" : "fail";
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        timestamp = buf;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["verdict"] = verdict;
        j["tool_version"] = tool_version;
        j["golden_checksums"] = golden_checksums;
        j["timestamp"] = timestamp;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& s : stages) arr.push_back(s.to_json());
        j["stages"] = std::move(arr);
        return j;
    }

    // Report with timestamp/timing normalized, for determinism comparisons.
    nlohmann::ordered_json to_json_timeless() const {
        nlohmann::ordered_json j = to_json();
        j["timestamp"] = "";
        for (auto& s : j["stages"]) s["wall_ms"] = 0;
        return j;
    }
};

class StageTimer {
public:
    explicit StageTimer(StageReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~StageTimer() {
        auto end = std::chrono::steady_clock::now();
        r_.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start_).count();
    }

private:
    StageReport& r_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace cuboid
