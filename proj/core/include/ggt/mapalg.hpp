#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggt/action.hpp"
#include "ggt/blockring.hpp"
#include "ggt/gset.hpp"
#include "ggt/hom.hpp"
#include "ggt/limits.hpp"
#include "ggt/report.hpp"
#include "ggt/subalgebra.hpp"

namespace ggt {

/// Map(X,R) = {f : X -> R | f(X_e) in E_e} as a block ring whose blocks are
/// the pairs (x, b) with b a block of E_x; the ideal M_e collects the pairs
/// over X_e and 1'_e is its unit.  alpha is the lifted action
/// alpha_g(f)(x) = beta_g(f(gamma_{g^-1}(x))), validated as an action on
/// this ring.
struct MapAlgebra {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::shared_ptr<const GSet> gset;
    std::shared_ptr<const AlgebraAction> beta;
    std::shared_ptr<const BlockRing> ring;
    std::shared_ptr<const AlgebraAction> alpha;
    /// [x][block of R] -> block of Map(X,R), npos unless the block lies in E_x.
    std::vector<std::vector<std::size_t>> block_at;

    /// f(x) as an element of R.
    RingElement value(const RingElement& f, std::size_t x) const;
    /// The function with the given values; values[x] is cut down to E_x.
    RingElement from_values(const std::vector<RingElement>& values) const;
    /// x -> r 1_x.
    RingElement constant(const RingElement& r) const;
};

MapAlgebra build_mapalg(std::shared_ptr<const GSet> x, std::shared_ptr<const AlgebraAction> a);

/// A(X) = Map(X,R)^alpha, from the block orbits of alpha and cross-checked
/// against filtering all of Map(X,R) when it has at most max_elements.
Subalgebra compute_AX(const MapAlgebra& m, const Limits& limits = {});

/// rho_x(f) = f(x), valued in E_x.  Labelled rho_<x>.
HomRecord rho(const MapAlgebra& m, const Subalgebra& ax, std::size_t x);
HomRecord rho(const MapAlgebra& m, const Subalgebra& ax, const std::string& point);

/// V_e(X) = {rho_x : x in X_e}.
std::vector<HomRecord> rho_family(const MapAlgebra& m, const Subalgebra& ax, std::size_t identity);

/// V(X) with sigma_g(rho_x) = beta_g o rho_x.
HomGSet sigma_action(const MapAlgebra& m, const Subalgebra& ax);

/// omega(x) = rho_x: injective, fiber preserving and equivariant onto V(X);
/// also confirmed by the isomorphism search seeded with omega.
CheckReport omega_check(const MapAlgebra& m, const Subalgebra& ax, const Limits& limits = {});

/// Dimensions (over F_p) of both sides of phi_g and the rank of phi_g.
struct PhiVerdict {
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t rank = 0;
    bool multiplicative = false;

    bool bijective() const noexcept
    {
        return multiplicative && rank == domain_dim && rank == codomain_dim;
    }
};

/// phi_g : E_g (x)_K B -> prod_{phi in V} E_g, r (x) b -> (r phi(b))_phi.
/// The tensor product splits over the primitive idempotents u of K, each
/// K u a field of F_p-dimension m_u, so its dimension is
/// sum_u dim(E_g u) dim(B u) / m_u.  phi_g is bijective iff its image has
/// that dimension and the codomain's.  Every phi in V must be valued in
/// E_{r(g)}.
PhiVerdict phi_iso_check(const AlgebraAction& a, std::size_t g, const Subalgebra& b,
                         const std::vector<HomRecord>& v, const Subalgebra& k);

/// nu(b)(phi) = phi(b), B -> A(V(B)): lands in A(V(B)), injective,
/// dimensions agree, multiplicative, unital and K-linear.
CheckReport nu_iso_check(const HomGSet& vb, std::shared_ptr<const AlgebraAction> a,
                         const Subalgebra& b, const Subalgebra& k, const Limits& limits = {});

/// theta(f) = sum_e f(eH) and theta'(r)(lH) = beta_l(r 1_{l^-1}) between
/// A(G/H) and R^{beta_H}.
struct ThetaReport {
    CheckReport checks;
    std::size_t invariant_elements = 0;
    std::size_t function_elements = 0;
};

/// Throws NotWide.  Round trips are checked on every element when both
/// algebras have at most max_elements, on bases otherwise.
ThetaReport theta_pair(std::shared_ptr<const AlgebraAction> a, const SubgroupoidSpec& h,
                       const Limits& limits = {});

/// Galois coordinates exist and E_g is faithful over K for every g.  The
/// description lists each failing g with its annihilating element.
std::optional<std::string> grothendieck_hypotheses(const AlgebraAction& a, const Subalgebra& k);

/// X side: V(A(X)) is isomorphic to X via omega, phi_g is an isomorphism for
/// every g, and pi_i(phi_g(1_g (x) f)) = rho_{x_i}(f).  Throws
/// HypothesisFailure.
CheckReport grothendieck_check(std::shared_ptr<const AlgebraAction> a,
                               std::shared_ptr<const GSet> x, const Limits& limits = {});

/// R-splitness of B inside R, with V_e(B) the transport family of B: B
/// has constant rank over K, phi_g is an isomorphism for every g and V(B)
/// is a G-set under xi.  V(B) is stored in vb when given.
CheckReport r_split_check(const AlgebraAction& a, const Subalgebra& b, const Subalgebra& k,
                          HomGSet* vb = nullptr);

/// B side, with V_e(B) the transport family of B: phi_g is an isomorphism
/// for every g, V(B) is a G-set under xi and nu is an isomorphism.  Throws
/// HypothesisFailure.
CheckReport grothendieck_check(std::shared_ptr<const AlgebraAction> a, const Subalgebra& b,
                               const Limits& limits = {});

/// f -> f o psi sends A(Y) into A(X) for a G-map psi : X -> Y.
CheckReport pullback_check(std::shared_ptr<const AlgebraAction> a, std::shared_ptr<const GSet> x,
                           std::shared_ptr<const GSet> y, const GMap& psi,
                           const Limits& limits = {});

/// Map(X,R)^G under the skew ring action (1_g d_g) f = 1_g f, filtered over
/// every function, equals A(X); and R^G = R^beta likewise.
CheckReport module_invariants_check(std::shared_ptr<const AlgebraAction> a,
                                    std::shared_ptr<const GSet> x, const Limits& limits = {});

} // namespace ggt
