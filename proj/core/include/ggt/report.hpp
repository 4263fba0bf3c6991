#pragma once

#include <string>
#include <vector>

namespace ggt {

/// One named verdict of a verification run.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<Check> checks;

    bool pass() const noexcept
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = {})
    {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    /// Appends the checks of another report with their names prefixed.
    void append(const CheckReport& other, const std::string& prefix)
    {
        for (const auto& c : other.checks)
            checks.push_back({prefix + c.name, c.pass, c.detail});
    }

    const Check* first_failure() const noexcept
    {
        for (const auto& c : checks)
            if (!c.pass)
                return &c;
        return nullptr;
    }
};

} // namespace ggt
