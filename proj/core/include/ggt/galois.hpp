#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggt/action.hpp"
#include "ggt/blockring.hpp"
#include "ggt/groupoid.hpp"
#include "ggt/hom.hpp"
#include "ggt/limits.hpp"
#include "ggt/report.hpp"
#include "ggt/subalgebra.hpp"

namespace ggt {

/// A commutative F_p-algebra of finite dimension given by structure
/// constants, together with a basis of a subalgebra K of scalars.
struct StructureAlgebra {
    FieldSpec prime = prime_field(2);
    std::size_t dim = 0;
    std::vector<std::vector<Vector>> mult; // [a][b] -> coordinates of e_a e_b
    Vector unit;
    Matrix scalars;
};

/// t_beta(R) = K, elementwise when R has at most max_elements and as spans
/// otherwise; and K is a direct summand of R: some c has t_beta(c) = 1, so
/// r -> t_beta(c r) is a K-linear projection of R onto K.
CheckReport trace_checks(const AlgebraAction& a, const Subalgebra& k, const Limits& limits = {});

/// T over K in the coordinates of T's basis.  Throws NotAModule when K is
/// not contained in T.
StructureAlgebra structure_of(const Subalgebra& t, const Subalgebra& k);

/// v = sum_ab c[a][b] e_a (x) e_b in T (x)_K T, computed as T (x)_Fp T modulo
/// the span of (k e_a) (x) e_b - e_a (x) (k e_b).
struct SeparabilitySolution {
    Matrix coefficients;
    /// Every solution agrees with this one modulo the relations.
    bool unique = false;
};

/// Solves mu(v) = 1 and (t (x) 1 - 1 (x) t) v = 0 for every basis t.
std::optional<SeparabilitySolution> solve_separability(const StructureAlgebra& a);

/// A nonzero x with x^(p^N) = 0, where p^N exceeds the dimension; x -> x^p
/// is F_p-linear, so its iterated kernel is the nilradical.
std::optional<Vector> nilpotent_witness(const StructureAlgebra& a);

struct SeparabilityIdempotent {
    std::vector<std::pair<RingElement, RingElement>> terms; // (x_i, y_i)
    bool unique = false;
};

/// The separability idempotent of T over K, or nullopt when T is not
/// separable.  Over products of finite fields, separable means reduced, and
/// the result is cross-checked against nilpotent_witness (OracleMismatch).
std::optional<SeparabilityIdempotent> separability_idempotent(const Subalgebra& t,
                                                              const Subalgebra& k);

/// dim_{K u}(T u) for each primitive idempotent u of K.
struct RankProfile {
    std::vector<Idempotent> blocks;
    std::vector<std::size_t> ranks;

    bool constant() const noexcept;
    bool faithful() const noexcept;
    std::size_t min() const noexcept;
};

/// Throws NotAModule when T is not closed under multiplication by K.
RankProfile rank_profile(const Subalgebra& t, const Subalgebra& k);

/// Per hom u in V: x_i in E_v with sum_i x_i u'(y_i) = delta_{u,u'} 1_v for
/// every u' in V, y_i running over the F_p basis of T.
struct DualBasis {
    std::vector<std::vector<std::pair<RingElement, RingElement>>> pairs; // per u
};

/// Solved blockwise over F_q; the result is verified by substitution.  V
/// must be nonempty with a common source and target ideal.
std::optional<DualBasis> dual_basis_solve(const std::vector<HomRecord>& v);

/// E_v-linear independence of V inside Hom_K(T, E_v), one F_q rank per
/// block of E_v.  The empty family is free.
bool freeness_check(const std::vector<HomRecord>& v);

struct TriEquivalence {
    bool strongly_distinct = false;
    bool dual_basis = false;
    bool free = false;

    bool agree() const noexcept
    {
        return strongly_distinct == dual_basis && dual_basis == free;
    }
};

/// Pairwise strong distinctness, dual bases and freeness, evaluated
/// independently.  Throws NotSeparable when the common source is not
/// separable over K.
TriEquivalence tri_equivalence_check(const std::vector<HomRecord>& v, const Subalgebra& k,
                                     const Limits& limits = {});

/// When V is pairwise strongly distinct, #V is at most every rank of its
/// source over K.
CheckReport dedekind_bound_check(const std::vector<HomRecord>& v, const Subalgebra& k,
                                 const Limits& limits = {});

/// The idempotent pi in T with f(pi) = 1 and x pi = f(x) pi for f : T -> K,
/// given by its values on T's basis (elements of K).  Throws NotSeparable,
/// or NoSuchIdempotent when the system is inconsistent.
struct AssociatedIdempotent {
    RingElement pi;
    bool unique = false;
};
AssociatedIdempotent associated_idempotent(const Subalgebra& t, const Subalgebra& k,
                                           const std::vector<RingElement>& f);

/// Every f_j has a unique associated idempotent, the idempotents are
/// pairwise orthogonal and f_i(pi_j) = delta_ij.  The family must be
/// pairwise strongly distinct over the idempotents of K.
CheckReport idempotent_family_check(const Subalgebra& t, const Subalgebra& k,
                                    const std::vector<std::vector<RingElement>>& family,
                                    const Limits& limits = {});

/// H_T = {g : beta_g(t 1_{g^-1}) = t 1_g for t in T}, checked against the
/// basis of T; throws NotWide if the result is not a wide subgroupoid.
SubgroupoidSpec h_of(const Subalgebra& t, const AlgebraAction& a);

struct StrongVerdict {
    bool strong = false;
    std::optional<std::size_t> g, h;
    std::optional<Idempotent> e;

    explicit operator bool() const noexcept { return strong; }
};

/// For r(g) = r(h) with g^-1 h outside H_T and every nonzero idempotent e of
/// E_g, some basis t of T has beta_g(t 1_{g^-1}) e != beta_h(t 1_{h^-1}) e.
/// g^-1 h is always defined here since d(g^-1) = r(g) = r(h).  The witness
/// is the first failure in (g, h, e) order.
StrongVerdict is_beta_strong(const Subalgebra& t, const AlgebraAction& a,
                             const Limits& limits = {});

/// v_g = sum_i x_i beta_g(y_i 1_{g^-1}) from the separability idempotent of
/// T over K = R^beta, and the dual maps f_i(t) = t_beta(y_i t).
struct CoordinateFamily {
    CheckReport preconditions;
    CheckReport claims;
    std::vector<RingElement> v; // per g
};

/// Claims: each v_g is idempotent, v_e = 1_e on identities, v_g = 0
/// elsewhere, and sum_i f_i(t) x_i = t for every t (basis when T is large).
CoordinateFamily galois_coords_from_separability(const Subalgebra& t, const AlgebraAction& a,
                                                 const Limits& limits = {});

/// Separable and beta-strong versus T = R^{beta_{H_T}}; when both hold,
/// also T is R-split.
struct FixedSubalgebraReport {
    bool separable = false;
    bool beta_strong = false;
    bool fixed_by_h = false;
    CheckReport checks;
};
FixedSubalgebraReport lemma54_check(const Subalgebra& t, std::shared_ptr<const AlgebraAction> a,
                            const Limits& limits = {});

/// Every K-subalgebra of R: breadth-first closure of K under adjoining one
/// element of R at a time.  Complete, since any subalgebra is reached by
/// adjoining its elements one by one.  Ordered by dimension, then by
/// discovery.
std::vector<Subalgebra> enumerate_k_subalgebras(const AlgebraAction& a, const Subalgebra& k,
                                                const Limits& limits = {});

struct CorrespondenceRow {
    SubgroupoidSpec h;
    Subalgebra t;
    SubgroupoidSpec h_of_t;
    bool separable = false;
    bool beta_strong = false;
    bool r_split = false;
};

struct CorrespondenceTable {
    std::vector<CorrespondenceRow> rows;
    /// Separable and beta-strong K-subalgebras, enumerated independently.
    std::vector<Subalgebra> sss;
    CheckReport checks;
};

/// H -> R^{beta_H} over the wide subgroupoids: injective, onto sss(R), with
/// H_{R^{beta_H}} = H and R^{beta_{H_T}} = T on sss(R); H -> G/H is
/// injective on coset partitions.  Throws HypothesisFailure.
CorrespondenceTable correspondence(std::shared_ptr<const AlgebraAction> a,
                                   const Limits& limits = {});

} // namespace ggt
