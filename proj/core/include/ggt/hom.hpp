#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggt/action.hpp"
#include "ggt/blockring.hpp"
#include "ggt/gset.hpp"
#include "ggt/limits.hpp"
#include "ggt/report.hpp"
#include "ggt/subalgebra.hpp"

namespace ggt {

/// An F_p-linear map from a subalgebra into the ideal E_identity of a block
/// ring, stored by its values on the source basis.
struct HomRecord {
    std::string label;
    Subalgebra source;
    std::shared_ptr<const BlockRing> target;
    std::size_t identity = 0;
    std::vector<RingElement> images;
};

/// f(x); throws NotAModule when x is outside the source.
RingElement hom_apply(const HomRecord& f, const RingElement& x);

/// Same source, same target ideal and equal values on the basis.
bool same_map(const HomRecord& f, const HomRecord& g);

/// Unital onto 1_identity, multiplicative on basis pairs, K-linear on the
/// constants of K, and valued in E_identity.
CheckReport hom_axioms(const HomRecord& f, const Subalgebra& k);

/// beta_g o f, for f valued in E_{d(g)}.
HomRecord compose_beta(const AlgebraAction& a, std::size_t g, const HomRecord& f);

struct DistinctVerdict {
    bool distinct = false;
    /// The equalizing idempotent of largest support, when not distinct.
    std::optional<Idempotent> witness;

    explicit operator bool() const noexcept { return distinct; }
};

/// For every nonzero idempotent pi of the target ideal some basis element x
/// has f(x) pi != g(x) pi.  The basis suffices since f and g are additive.
/// Throws TargetMismatch unless f and g share source and target ideal.
DistinctVerdict strongly_distinct(const HomRecord& f, const HomRecord& g, const Limits& limits = {});

/// Every pair of distinct positions; the first failing pair is described
/// in witness.
bool pairwise_strongly_distinct(const std::vector<HomRecord>& v, const Limits& limits = {},
                                std::string* witness = nullptr);

/// All unital K-algebra homomorphisms B -> E_identity.  Each target block is
/// a copy of F_q, so a homomorphism is a tuple of ring maps B -> F_q; those
/// are found by trying every F_p-linear map and keeping the unital,
/// multiplicative and K-linear ones.  Order: Cartesian product over target
/// blocks, first block slowest.  Labels hom1, hom2, ...
std::vector<HomRecord> hom_set(const Subalgebra& b, std::shared_ptr<const BlockRing> target,
                               std::size_t identity, const Subalgebra& k,
                               const Limits& limits = {});

/// {b -> beta_l(b 1_{l^-1}) : r(l) = identity} for B inside R, with
/// repeated maps dropped.  Labels beta_<l>.
std::vector<HomRecord> transport_family(const AlgebraAction& a, const Subalgebra& b,
                                        std::size_t identity);

/// V = union of hom families as a G-set under xi_g(phi) = beta_g o phi.
struct HomGSet {
    std::vector<HomRecord> points;
    std::shared_ptr<const GSet> gset;
    std::string failure;

    bool valid() const noexcept { return gset != nullptr; }
};

/// Points are labelled by their hom labels, which must be distinct.
/// failure names the first xi_g(phi) outside V or the validation error.
HomGSet hom_gset(const AlgebraAction& a, std::vector<HomRecord> homs);

} // namespace ggt
