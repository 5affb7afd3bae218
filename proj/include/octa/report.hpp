#pragma once

// Machine-readable check reports for the CLI: a suite is a list of checks,
// each pass / fail / sampled ("sampled" marks a randomized sweep that cannot
// count as a proof).  Exit status is 0 exactly when nothing failed.

#include <string>
#include <vector>

namespace octa {

enum class CheckStatus { pass, fail, sampled };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "sampled";
    }
}

struct Check {
    std::string id;
    CheckStatus status = CheckStatus::fail;
    std::string details;
    std::string ref;  // stable anchor naming the fact being checked
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(std::string id, bool ok, std::string details = "", std::string ref = "") {
        checks.push_back({std::move(id), ok ? CheckStatus::pass : CheckStatus::fail,
                          std::move(details), std::move(ref)});
    }
    void add_sampled(std::string id, bool ok, std::string details = "", std::string ref = "") {
        checks.push_back({std::move(id), ok ? CheckStatus::sampled : CheckStatus::fail,
                          std::move(details), std::move(ref)});
    }

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

}  // namespace octa
