#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggt/blockring.hpp"
#include "ggt/groupoid.hpp"
#include "ggt/limits.hpp"
#include "ggt/subalgebra.hpp"

namespace ggt {

/// beta_g for one non-identity g: block map E_{g^-1} -> E_g and the
/// Frobenius exponent applied to each source block (default 0).
struct RawBeta {
    std::map<std::string, std::string> sigma;
    std::map<std::string, std::uint32_t> frob;
};

/// Missing identities are filled with the identity map; a missing g^-1 is
/// filled with the inverse of beta_g.
struct RawAction {
    std::map<std::string, RawBeta> maps;
};

struct ActionTables {
    std::vector<std::vector<std::size_t>> sigma; // [g][block], npos off E_{g^-1}
    std::vector<std::vector<std::uint32_t>> frob; // [g][source block]
};

/// beta = {beta_g : E_{g^-1} -> E_g}, beta_g(x)[sigma_g(i)] = x[i]^(p^frob_g(i)).
class AlgebraAction {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const BlockRing& ring() const noexcept { return *ring_; }
    const std::shared_ptr<const BlockRing>& ring_ptr() const noexcept { return ring_; }
    const Groupoid& groupoid() const noexcept { return ring_->groupoid(); }

    /// E_g = E_{r(g)}.
    IdealRef support(std::size_t g) const { return ring_->ideal(groupoid().target(g)); }
    std::size_t sigma(std::size_t g, std::size_t block) const { return tables_.sigma[g][block]; }
    std::uint32_t frob(std::size_t g, std::size_t block) const { return tables_.frob[g][block]; }
    const ActionTables& tables() const noexcept { return tables_; }

private:
    friend AlgebraAction validate_action(std::shared_ptr<const BlockRing>, ActionTables);
    friend AlgebraAction unchecked_action(std::shared_ptr<const BlockRing>, ActionTables);

    std::shared_ptr<const BlockRing> ring_;
    ActionTables tables_;
};

AlgebraAction validate_action(std::shared_ptr<const BlockRing> ring, ActionTables tables);
AlgebraAction validate_action(std::shared_ptr<const BlockRing> ring, const RawAction& raw);

/// Skips every axiom check; only table shapes are enforced.  Exists so that
/// the skew ring verifier can be exercised on corrupted actions.
AlgebraAction unchecked_action(std::shared_ptr<const BlockRing> ring, ActionTables tables);

/// Index tables for a raw description, with identities and inverses filled
/// in but nothing validated.
ActionTables action_tables(const BlockRing& ring, const RawAction& raw);

/// beta_g(x).  With truncate, x is first replaced by x 1_{g^-1}; otherwise a
/// component outside E_{g^-1} raises SupportViolation.
RingElement apply_beta(const AlgebraAction& a, std::size_t g, const RingElement& x,
                       bool truncate = true);

/// R^{beta_H} = {r : beta_h(r 1_{h^-1}) = r 1_h for h in H}, computed from
/// the block orbits of H and cross-checked against filtering every element
/// of R when |R| <= limits.max_elements.
Subalgebra invariants(const AlgebraAction& a, const SubgroupoidSpec& h, const Limits& limits = {});

/// Direct filter of every element of R.
std::vector<RingElement> invariants_brute_force(const AlgebraAction& a, const SubgroupoidSpec& h,
                                                const Limits& limits = {});

/// t(x) = sum_g beta_g(x 1_{g^-1}).
RingElement trace(const AlgebraAction& a, const RingElement& x);

struct GaloisCoordinates {
    std::vector<std::pair<RingElement, RingElement>> pairs; // (x_i, y_i)
    int strategy = 0;
};

/// The first g at which sum_i x_i beta_g(y_i 1_{g^-1}) differs from 1_{r(g)}
/// (g an identity) or 0 (otherwise), as a description.
std::optional<std::string> galois_coordinate_failure(const AlgebraAction& a,
                                                     const GaloisCoordinates& c);

/// Tries x_i = y_i = v_i, then solves for x with y running over an F_p basis
/// of R.  The second stage is complete: each beta_g is additive and
/// F_p-linear, so any coordinate system can be rewritten with its y's
/// expanded over that basis, collecting the x's.
std::optional<GaloisCoordinates> find_galois_coordinates(const AlgebraAction& a);

/// sum_g a_g delta_g, one coefficient per element of G (a_g in E_g).
struct SkewRingElement {
    std::vector<RingElement> terms;

    bool operator==(const SkewRingElement&) const = default;
};

SkewRingElement skew_zero(const AlgebraAction& a);
/// sum_e 1_e delta_e
SkewRingElement skew_unit(const AlgebraAction& a);
SkewRingElement skew_monomial(const AlgebraAction& a, std::size_t g, const RingElement& x);
SkewRingElement skew_add(const AlgebraAction& a, const SkewRingElement& u, const SkewRingElement& w);
/// (x delta_g)(y delta_h) = x beta_g(y 1_{g^-1}) delta_{gh} when (g, h) in G^2, else 0.
SkewRingElement skew_mul(const AlgebraAction& a, const SkewRingElement& u, const SkewRingElement& w);
std::string format_skew(const AlgebraAction& a, const SkewRingElement& u);

struct SkewRingReport {
    bool associative = false;
    bool unital = false;
    std::size_t monomials = 0;
    std::size_t triples = 0;
    std::string witness;

    bool pass() const noexcept { return associative && unital; }
};

/// Associativity on every triple of monomials c v_i delta_g (c in an F_p
/// basis of the field) and both unit laws on every monomial.
SkewRingReport verify_skew_ring(const AlgebraAction& a);

} // namespace ggt
