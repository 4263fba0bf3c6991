#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/action.hpp"
#include "ggt/blockring.hpp"
#include "ggt/groupoid.hpp"
#include "ggt/gset.hpp"
#include "ggt/scalar.hpp"
#include "ggt/subalgebra.hpp"

namespace ggt::cli {

/// A G-set entry: an explicit table or one of the shorthands "regular" and
/// "quotient:<subgroupoid name>".
struct GSetEntry {
    std::string shorthand;
    RawGSet raw;
};

/// The problem document after syntactic checks.  Nothing here has been
/// validated against the groupoid or ring axioms.
struct ProblemFile {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::vector<std::uint32_t> modulus;
    RawGroupoid groupoid;
    std::vector<std::string> blocks;
    std::map<std::string, std::vector<std::string>> ideals;
    RawAction action;
    std::map<std::string, GSetEntry> gsets;
    std::map<std::string, std::vector<std::string>> subgroupoids;
    std::map<std::string, std::vector<std::string>> subalgebras;
};

/// Throws ParseError on malformed documents: bad JSON, missing sections,
/// wrong value types, or a ring field that disagrees with the top-level one.
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);

/// The validated objects.  Each stage throws the library error of the
/// first violated axiom.
struct Problem {
    ProblemFile file;
    std::shared_ptr<const Groupoid> groupoid;
    std::shared_ptr<const BlockRing> ring;
    std::shared_ptr<const AlgebraAction> action;
};

Problem build_problem(ProblemFile file);

/// Named subgroupoid; "G" and "G0" name the whole groupoid and its
/// identities unless the file defines them.  Throws UnknownLabel.
SubgroupoidSpec named_subgroupoid(const Problem& p, const std::string& name);

/// Named G-set, validated.  Throws UnknownLabel for unknown names.
std::shared_ptr<const GSet> named_gset(const Problem& p, const std::string& name);

/// The K-subalgebra generated by a named generator list, K = R^beta.  "K"
/// and "R" name R^beta and R unless the file defines them.
Subalgebra named_subalgebra(const Problem& p, const std::string& name, const Limits& limits = {});

} // namespace ggt::cli
