#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggt/groupoid.hpp"
#include "ggt/limits.hpp"

namespace ggt {

/// Unvalidated G-set: point labels, the identity owning each point, and the
/// point map of each groupoid element.  Maps for identities may be omitted.
struct RawGSet {
    std::vector<std::string> carrier;
    std::map<std::string, std::string> fibers;
    std::map<std::string, std::map<std::string, std::string>> gamma;
};

/// Index-level description used when G-sets are built programmatically.
struct GSetTables {
    std::vector<std::string> labels;
    std::vector<std::size_t> fiber;              // point -> identity index
    std::vector<std::vector<std::size_t>> gamma; // [g][x] -> point, npos off X_{d(g)}
};

/// A finite G-split set.  Points are indexed 0..size()-1; each point lies in
/// exactly one fiber X_e, and gamma(g, .) is a bijection X_{d(g)} -> X_{r(g)}.
class GSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const Groupoid& groupoid() const noexcept { return *groupoid_; }
    const std::shared_ptr<const Groupoid>& groupoid_ptr() const noexcept { return groupoid_; }

    std::size_t size() const noexcept { return tables_.labels.size(); }
    const std::string& label(std::size_t x) const { return tables_.labels.at(x); }
    const std::vector<std::string>& labels() const noexcept { return tables_.labels; }
    /// Throws UnknownPoint.
    std::size_t index(const std::string& label) const;

    /// The identity e with x in X_e.
    std::size_t fiber(std::size_t x) const { return tables_.fiber[x]; }
    /// X_e in point order.
    std::vector<std::size_t> points_over(std::size_t e) const;
    /// gamma_g(x), or npos when x is not in X_{g^-1}.
    std::size_t gamma(std::size_t g, std::size_t x) const { return tables_.gamma[g][x]; }

    const GSetTables& tables() const noexcept { return tables_; }

private:
    friend GSet validate_gset(std::shared_ptr<const Groupoid>, GSetTables);

    std::shared_ptr<const Groupoid> groupoid_;
    GSetTables tables_;
};

GSet validate_gset(std::shared_ptr<const Groupoid> g, GSetTables tables);
GSet validate_gset(std::shared_ptr<const Groupoid> g, const RawGSet& raw);

/// G acting on itself by left translation; X_e = {l : r(l) = e}.
GSet regular_gset(std::shared_ptr<const Groupoid> g);

/// G/H with gamma_g(lH) = glH; points are labelled by their transversal
/// representative followed by "H".
GSet quotient_gset(std::shared_ptr<const Groupoid> g, const SubgroupoidSpec& h);

struct GMap {
    std::vector<std::size_t> map;
};

struct GMapVerdict {
    bool is_gmap = false;
    bool is_isomorphism = false;
    std::string certificate;
};

/// Checks fiber preservation and equivariance; bijective G-maps are
/// reported as isomorphisms.
GMapVerdict check_gmap(const GSet& source, const GSet& target, const GMap& psi);

/// Backtracking search for a G-set isomorphism.  A seed map, when given and
/// valid, is returned as is.
std::optional<GMap> gset_isomorphic(const GSet& a, const GSet& b, const Limits& limits = {},
                                    const GMap* seed = nullptr);

} // namespace ggt
