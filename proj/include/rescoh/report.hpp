#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rescoh {

struct Check {
    std::string name;
    bool pass = true;
    std::optional<std::string> counterexample;
};

/// Ordered list of named pass/fail checks. Verifiers return these instead of throwing.
class Report {
public:
    void pass(std::string name) { checks_.push_back({std::move(name), true, std::nullopt}); }
    void fail(std::string name, std::string counterexample) {
        checks_.push_back({std::move(name), false, std::move(counterexample)});
    }
    void add(Check c) { checks_.push_back(std::move(c)); }
    void append(const Report& other, const std::string& prefix = "") {
        for (auto c : other.checks_) {
            c.name = prefix + c.name;
            checks_.push_back(std::move(c));
        }
    }

    bool ok() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    /// First failing check, if any.
    const Check* first_failure() const {
        for (const auto& c : checks_)
            if (!c.pass) return &c;
        return nullptr;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }
    const std::vector<Check>& checks() const { return checks_; }

private:
    std::vector<Check> checks_;
};

}  // namespace rescoh
