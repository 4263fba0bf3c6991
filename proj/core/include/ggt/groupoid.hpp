#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggt/limits.hpp"

namespace ggt {

/// Unvalidated groupoid description: labels, the defined products as
/// (a, b, ab) triples, and optionally the inverse of each element.
struct RawGroupoid {
    std::vector<std::string> elements;
    std::vector<std::array<std::string, 3>> products;
    std::map<std::string, std::string> inverses;
};

/// A finite groupoid stored as a partial product table over element indices.
/// Only obtainable through validate_groupoid(), so every instance satisfies
/// the groupoid axioms.
class Groupoid {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t g) const { return labels_.at(g); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> find(std::string_view label) const;
    /// Throws UnknownLabel.
    std::size_t index(std::string_view label) const;

    bool composable(std::size_t g, std::size_t h) const { return table_[g * size() + h] != npos; }
    /// gh, or npos when (g, h) is not in G^2.
    std::size_t product(std::size_t g, std::size_t h) const { return table_[g * size() + h]; }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    /// d(g)
    std::size_t source(std::size_t g) const { return source_[g]; }
    /// r(g)
    std::size_t target(std::size_t g) const { return target_[g]; }

    /// G0 in element order.
    const std::vector<std::size_t>& identities() const noexcept { return identities_; }
    bool is_identity(std::size_t g) const { return source_[g] == g; }

private:
    friend Groupoid validate_groupoid(const RawGroupoid& raw);

    std::vector<std::string> labels_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> source_;
    std::vector<std::size_t> target_;
    std::vector<std::size_t> identities_;
};

/// Checks axioms (i)-(iv), derives d, r and inverses, cross-checks supplied
/// inverses, and verifies every elementary consequence of the axioms
/// exhaustively.
Groupoid validate_groupoid(const RawGroupoid& raw);

/// Re-runs the exhaustive consequence checks on a validated groupoid and
/// returns a description of the first failure, if any.
std::optional<std::string> find_consequence_violation(const Groupoid& g);

/// G^2 in lexicographic index order.
std::vector<std::pair<std::size_t, std::size_t>> composable(const Groupoid& g);

/// A subset of a groupoid, kept sorted by element index.
struct SubgroupoidSpec {
    std::vector<std::size_t> members;

    bool contains(std::size_t g) const;
    bool operator==(const SubgroupoidSpec&) const = default;
};

SubgroupoidSpec make_subset(const Groupoid& g, const std::vector<std::string>& labels);
SubgroupoidSpec whole(const Groupoid& g);
SubgroupoidSpec identities_only(const Groupoid& g);
std::string format_subset(const Groupoid& g, const SubgroupoidSpec& h);

struct SubsetVerdict {
    bool holds = false;
    std::string certificate;

    explicit operator bool() const noexcept { return holds; }
};

/// Closure under defined products and inverses.
SubsetVerdict is_subgroupoid(const Groupoid& g, const SubgroupoidSpec& h);
SubsetVerdict is_wide_subgroupoid(const Groupoid& g, const SubgroupoidSpec& h);

/// Every wide subgroupoid, ordered by size then lexicographically by index.
std::vector<SubgroupoidSpec> enumerate_wide_subgroupoids(const Groupoid& g,
                                                         const Limits& limits = {});

/// Left cosets gH of a wide subgroupoid.
struct CosetSpace {
    SubgroupoidSpec subgroupoid;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> representatives;
    std::vector<std::size_t> class_of;
};

CosetSpace coset_space(const Groupoid& g, const SubgroupoidSpec& h);

/// One representative per left coset: the first element of the class in
/// input order.
std::vector<std::size_t> left_transversal(const Groupoid& g, const SubgroupoidSpec& h);

} // namespace ggt
