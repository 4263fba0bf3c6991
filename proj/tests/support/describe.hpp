#pragma once

#include <string>

#include "ggt/report.hpp"

namespace ggt::testing {

/// "name (detail)" of the first failing check, or "" when all pass.
inline std::string describe(const CheckReport& rep)
{
    const Check* c = rep.first_failure();
    if (!c)
        return "";
    return c->detail.empty() ? c->name : c->name + " (" + c->detail + ")";
}

} // namespace ggt::testing
