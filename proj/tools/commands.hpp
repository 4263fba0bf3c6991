#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/limits.hpp"
#include "ggt/report.hpp"

namespace ggt::cli {

struct Options {
    Limits limits;
    /// invariants: subgroupoid name; grothendieck: subalgebra name.
    std::string sub;
    /// grothendieck: G-set name.
    std::string gset;
};

enum class Status { Pass, Fail, HypothesisFailure, InvalidInput };

std::string to_string(Status s);
/// 0 pass, 1 fail or hypothesis failure, 2 invalid input.
int exit_code(Status s);

struct Report {
    std::string command;
    Status status = Status::Pass;
    CheckReport checks;
    nlohmann::json data = nlohmann::json::object();
    std::vector<std::pair<std::string, double>> timings; // milliseconds
};

/// Commands: check, galois, subgroupoids, invariants, faithful, skew,
/// grothendieck, correspondence.  Never throws for library errors; they
/// become the report status.
Report run_command(const std::string& command, const std::string& path, const Options& options);

/// Timings are left out unless asked for, so repeated runs are identical.
nlohmann::json to_json(const Report& r, bool timings);
std::string to_text(const Report& r, bool timings);

} // namespace ggt::cli
