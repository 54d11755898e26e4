/**
 * \file check.hpp
 *
 * Outcome of a verification: pass/fail, how many items were examined, a
 * bounded list of failure messages and free-form metrics.
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace clab {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool ok = true;
    long checked = 0;
    long n_failures = 0;
    std::vector<std::string> failures;  ///< at most max_messages entries
    nlohmann::json metrics = nlohmann::json::object();

    static constexpr size_t max_messages = 20;

    void fail(const std::string& message) {
        ok = false;
        ++n_failures;
        if (failures.size() < max_messages) failures.push_back(message);
    }

    /** Counts one examined item; records message() as a failure when cond is false. */
    template <class F>
    void expect(bool cond, F&& message) {
        ++checked;
        if (!cond) fail(message());
    }

    /** Folds another result into this one. */
    void merge(const CheckResult& o) {
        ok = ok && o.ok;
        checked += o.checked;
        n_failures += o.n_failures;
        for (const auto& f : o.failures)
            if (failures.size() < max_messages) failures.push_back(f);
    }

    std::string summary() const {
        std::string s = name + ": " + (ok ? "pass" : "FAIL") + " (" + std::to_string(checked) + " checked";
        if (!ok) s += ", " + std::to_string(n_failures) + " failed; first: " + failures.front();
        return s + ")";
    }
};

inline nlohmann::json to_json(const CheckResult& c) {
    return {{"name", c.name},         {"ok", c.ok},           {"checked", c.checked},
            {"failures", c.n_failures}, {"messages", c.failures}, {"metrics", c.metrics}};
}

}  // namespace clab
