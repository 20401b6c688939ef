#ifndef DTK_REPORT_HPP
#define DTK_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace dtk {

inline const char* version_string() { return "0.1.0"; }

struct CheckResult {
    std::string name;            // stable public identifier
    std::string paper_location;  // which identity or computation this pins down
    enum class Status { pass, fail, skipped } status = Status::skipped;
    std::string detail;          // nonempty on failure
    int64_t elapsed_ms = 0;
};

inline const char* to_string(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::pass: return "pass";
        case CheckResult::Status::fail: return "fail";
        default: return "skipped";
    }
}

struct RunReport {
    std::string tool_version = version_string();
    std::string input_echo;
    std::vector<CheckResult> checks;

    size_t passed() const { return count(CheckResult::Status::pass); }
    size_t failed() const { return count(CheckResult::Status::fail); }
    size_t skipped() const { return count(CheckResult::Status::skipped); }
    int exit_code() const { return failed() == 0 ? 0 : 1; }

    size_t count(CheckResult::Status s) const {
        size_t n = 0;
        for (const auto& c : checks) n += (c.status == s);
        return n;
    }
};

inline void emit_text(const RunReport& r, std::ostream& os) {
    for (const auto& c : r.checks) {
        os << (c.status == CheckResult::Status::pass     ? "PASS "
               : c.status == CheckResult::Status::fail ? "FAIL "
                                                         : "SKIP ")
           << c.name;
        if (!c.paper_location.empty()) os << "  [" << c.paper_location << "]";
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    os << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped\n";
}

inline nlohmann::json to_json(const RunReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"paper_location", c.paper_location},
                          {"status", to_string(c.status)},
                          {"detail", c.detail},
                          {"elapsed_ms", c.elapsed_ms}});
    }
    return nlohmann::json{{"version", r.tool_version},
                          {"checks", checks},
                          {"summary",
                           {{"pass", r.passed()}, {"fail", r.failed()}, {"skipped", r.skipped()}}}};
}

inline void emit_json(const RunReport& r, std::ostream& os) { os << to_json(r).dump(2) << "\n"; }

}  // namespace dtk

#endif
