#include "ggt/mapalg.hpp"

#include <algorithm>

#include "ggt/error.hpp"

namespace ggt {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

bool pairs_multiplicative(const Subalgebra& b, const HomRecord& f)
{
    const auto basis = b.basis_elements();
    const BlockRing& R = *f.target;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (hom_apply(f, mul(b.ambient(), basis[i], basis[j])) !=
                mul(R, f.images[i], f.images[j]))
                return false;
    return true;
}

/// Elements when small enough, basis otherwise.
std::vector<RingElement> sample(const Subalgebra& t, const Limits& limits)
{
    return t.cardinality() <= limits.max_elements ? t.elements(limits) : t.basis_elements();
}

} // namespace

RingElement MapAlgebra::value(const RingElement& f, std::size_t x) const
{
    const BlockRing& R = beta->ring();
    RingElement out = R.zero();
    for (std::size_t b = 0; b < R.size(); ++b)
        if (block_at[x][b] != npos)
            out.coords[b] = f.coords[block_at[x][b]];
    return out;
}

RingElement MapAlgebra::from_values(const std::vector<RingElement>& values) const
{
    RingElement f = ring->zero();
    for (std::size_t x = 0; x < block_at.size(); ++x)
        for (std::size_t b = 0; b < block_at[x].size(); ++b)
            if (block_at[x][b] != npos)
                f.coords[block_at[x][b]] = values.at(x).coords[b];
    return f;
}

RingElement MapAlgebra::constant(const RingElement& r) const { return embed_base(*ring, r); }

MapAlgebra build_mapalg(std::shared_ptr<const GSet> x, std::shared_ptr<const AlgebraAction> a)
{
    const BlockRing& R = a->ring();
    const Groupoid& G = R.groupoid();
    if (&x->groupoid() != &G)
        throw Error(ErrorKind::CarrierMismatch, "G-set and action use different groupoids");

    MapAlgebra m;
    std::vector<std::string> labels;
    std::vector<std::size_t> owner, base;
    m.block_at.assign(x->size(), std::vector<std::size_t>(R.size(), MapAlgebra::npos));
    for (std::size_t p = 0; p < x->size(); ++p)
        for (std::size_t b : R.ideal(x->fiber(p)).support) {
            m.block_at[p][b] = labels.size();
            labels.push_back(x->label(p) + ":" + R.label(b));
            owner.push_back(x->fiber(p));
            base.push_back(b);
        }
    m.ring = std::make_shared<const BlockRing>(make_block_ring(
        R.groupoid_ptr(), R.field(), std::move(labels), std::move(owner), std::move(base),
        R.size(), false));

    ActionTables t;
    const std::size_t n = m.ring->size();
    t.sigma.assign(G.size(), std::vector<std::size_t>(n, MapAlgebra::npos));
    t.frob.assign(G.size(), std::vector<std::uint32_t>(n, 0));
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t p = 0; p < x->size(); ++p) {
            const std::size_t q = x->gamma(g, p);
            if (q == GSet::npos)
                continue;
            for (std::size_t b : R.ideal(G.source(g)).support) {
                t.sigma[g][m.block_at[p][b]] = m.block_at[q][a->sigma(g, b)];
                t.frob[g][m.block_at[p][b]] = a->frob(g, b);
            }
        }
    m.alpha = std::make_shared<const AlgebraAction>(validate_action(m.ring, std::move(t)));
    m.gset = std::move(x);
    m.beta = std::move(a);
    return m;
}

Subalgebra compute_AX(const MapAlgebra& m, const Limits& limits)
{
    return invariants(*m.alpha, whole(m.gset->groupoid()), limits);
}

HomRecord rho(const MapAlgebra& m, const Subalgebra& ax, std::size_t x)
{
    if (x >= m.gset->size())
        throw Error(ErrorKind::UnknownPoint, "point index " + std::to_string(x));
    HomRecord h{"rho_" + m.gset->label(x), ax, m.beta->ring_ptr(), m.gset->fiber(x), {}};
    for (const auto& f : ax.basis_elements())
        h.images.push_back(m.value(f, x));
    return h;
}

HomRecord rho(const MapAlgebra& m, const Subalgebra& ax, const std::string& point)
{
    return rho(m, ax, m.gset->index(point));
}

std::vector<HomRecord> rho_family(const MapAlgebra& m, const Subalgebra& ax, std::size_t identity)
{
    std::vector<HomRecord> out;
    for (std::size_t x : m.gset->points_over(identity))
        out.push_back(rho(m, ax, x));
    return out;
}

HomGSet sigma_action(const MapAlgebra& m, const Subalgebra& ax)
{
    std::vector<HomRecord> all;
    for (std::size_t x = 0; x < m.gset->size(); ++x)
        all.push_back(rho(m, ax, x));
    return hom_gset(*m.beta, std::move(all));
}

CheckReport omega_check(const MapAlgebra& m, const Subalgebra& ax, const Limits& limits)
{
    CheckReport rep;
    const GSet& X = *m.gset;
    const Groupoid& G = X.groupoid();

    std::vector<HomRecord> rhos;
    for (std::size_t x = 0; x < X.size(); ++x)
        rhos.push_back(rho(m, ax, x));
    std::string clash;
    for (std::size_t x = 0; x < rhos.size() && clash.empty(); ++x)
        for (std::size_t y = x + 1; y < rhos.size() && clash.empty(); ++y)
            if (same_map(rhos[x], rhos[y]))
                clash = rhos[x].label + " = " + rhos[y].label;
    rep.add("omega injective", clash.empty(), clash);

    std::string moved;
    for (std::size_t g = 0; g < G.size() && moved.empty(); ++g)
        for (std::size_t x = 0; x < X.size() && moved.empty(); ++x) {
            const std::size_t y = X.gamma(g, x);
            if (y != GSet::npos && compose_beta(*m.beta, g, rhos[x]).images != rhos[y].images)
                moved = "sigma_" + G.label(g) + "(" + rhos[x].label + ") != " + rhos[y].label;
        }
    rep.add("sigma_g(rho_x) = rho_{gamma_g(x)}", moved.empty(), moved);

    std::string indistinct;
    for (std::size_t e : G.identities()) {
        std::string w;
        if (!pairwise_strongly_distinct(rho_family(m, ax, e), limits, &w)) {
            indistinct = w;
            break;
        }
    }
    rep.add("V_e(X) pairwise strongly distinct", indistinct.empty(), indistinct);

    const HomGSet v = sigma_action(m, ax);
    rep.add("V(X) is a G-split set", v.valid(), v.failure);
    if (!v.valid() || !clash.empty())
        return rep;

    GMap omega;
    for (std::size_t x = 0; x < X.size(); ++x)
        omega.map.push_back(x);
    const GMapVerdict verdict = check_gmap(X, *v.gset, omega);
    rep.add("omega is an isomorphism of G-sets", verdict.is_isomorphism, verdict.certificate);
    const auto found = gset_isomorphic(X, *v.gset, limits, &omega);
    rep.add("V(A(X)) isomorphic to X", found.has_value());
    return rep;
}

PhiVerdict phi_iso_check(const AlgebraAction& a, std::size_t g, const Subalgebra& b,
                         const std::vector<HomRecord>& v, const Subalgebra& k)
{
    const BlockRing& R = a.ring();
    const FieldSpec& Fp = R.prime_field();
    const std::size_t e = a.groupoid().target(g);
    const IdealRef E = R.ideal(e);
    for (const auto& phi : v)
        if (phi.identity != e || !(phi.source == b))
            throw Error(ErrorKind::TargetMismatch,
                        phi.label + " is not a map from B into E_" + a.groupoid().label(g));

    PhiVerdict out;
    const Subalgebra eg = span_of(a.ring_ptr(), prime_basis(R, E));
    for (const Idempotent& u : primitive_idempotents(k)) {
        const std::size_t mu = component(k, u).dim();
        out.domain_dim += component(eg, u).dim() * component(b, u).dim() / mu;
    }
    out.codomain_dim = v.size() * eg.dim();

    const std::size_t width = R.prime_dimension();
    Matrix rows;
    const auto basis = b.basis_elements();
    for (const auto& r : eg.basis_elements())
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Vector row;
            row.reserve(v.size() * width);
            for (const auto& phi : v) {
                const Vector part = to_prime_vector(R, mul(R, r, phi.images[i]));
                row.insert(row.end(), part.begin(), part.end());
            }
            rows.push_back(std::move(row));
        }
    out.rank = rows.empty() ? 0 : rank_of(Fp, std::move(rows), v.size() * width);
    out.multiplicative = true;
    for (const auto& phi : v)
        out.multiplicative = out.multiplicative && pairs_multiplicative(b, phi);
    return out;
}

CheckReport nu_iso_check(const HomGSet& vb, std::shared_ptr<const AlgebraAction> a,
                         const Subalgebra& b, const Subalgebra& k, const Limits& limits)
{
    CheckReport rep;
    if (!vb.valid()) {
        rep.add("V(B) is a G-set", false, vb.failure);
        return rep;
    }
    const MapAlgebra m = build_mapalg(vb.gset, a);
    const Subalgebra target = compute_AX(m, limits);
    const BlockRing& S = *m.ring;

    auto nu = [&](const RingElement& x) {
        std::vector<RingElement> values;
        for (const auto& phi : vb.points)
            values.push_back(hom_apply(phi, x));
        return m.from_values(values);
    };

    const auto basis = b.basis_elements();
    std::vector<RingElement> images;
    for (const auto& x : basis)
        images.push_back(nu(x));

    std::string outside;
    for (std::size_t i = 0; i < images.size() && outside.empty(); ++i)
        if (!target.contains(images[i]))
            outside = format_element(b.ambient(), basis[i]);
    rep.add("nu lands in A(V(B))", outside.empty(), outside);

    const std::size_t image_dim = span_of(m.ring, images).dim();
    rep.add("nu injective", image_dim == b.dim(),
            std::to_string(image_dim) + " of " + std::to_string(b.dim()));
    rep.add("dim A(V(B)) = dim B", target.dim() == b.dim(),
            std::to_string(target.dim()) + " vs " + std::to_string(b.dim()));

    std::string bad;
    for (std::size_t i = 0; i < basis.size() && bad.empty(); ++i)
        for (std::size_t j = i; j < basis.size() && bad.empty(); ++j)
            if (nu(mul(b.ambient(), basis[i], basis[j])) != mul(S, images[i], images[j]))
                bad = format_element(b.ambient(), basis[i]) + " * " +
                      format_element(b.ambient(), basis[j]);
    rep.add("nu multiplicative", bad.empty(), bad);
    rep.add("nu unital", nu(b.ambient().one()) == S.one());

    std::string nonlinear;
    const auto kb = k.basis_elements();
    const auto embedded = embedded_basis(k, b.ambient());
    for (std::size_t l = 0; l < kb.size() && nonlinear.empty(); ++l)
        if (nu(embedded[l]) != m.constant(kb[l]))
            nonlinear = format_element(k.ambient(), kb[l]);
    rep.add("nu K-linear", nonlinear.empty(), nonlinear);
    return rep;
}

ThetaReport theta_pair(std::shared_ptr<const AlgebraAction> a, const SubgroupoidSpec& h,
                       const Limits& limits)
{
    const AlgebraAction& A = *a;
    const BlockRing& R = A.ring();
    const Groupoid& G = A.groupoid();
    if (const SubsetVerdict wide = is_wide_subgroupoid(G, h); !wide)
        throw Error(ErrorKind::NotWide, wide.certificate);

    const CosetSpace cs = coset_space(G, h);
    auto x = std::make_shared<const GSet>(quotient_gset(R.groupoid_ptr(), h));
    const Subalgebra t = invariants(A, h, limits);
    const MapAlgebra m = build_mapalg(x, a);
    const Subalgebra ax = compute_AX(m, limits);

    // Point c of G/H is the class c of the coset space.
    auto theta = [&](const RingElement& f) {
        RingElement r = R.zero();
        for (std::size_t e : G.identities())
            r = add(R, r, m.value(f, cs.class_of[e]));
        return r;
    };
    auto theta_prime = [&](const RingElement& r) {
        std::vector<RingElement> values;
        for (std::size_t c = 0; c < cs.classes.size(); ++c)
            values.push_back(apply_beta(A, cs.representatives[c], r));
        return m.from_values(values);
    };

    ThetaReport out;
    CheckReport& rep = out.checks;
    rep.add("dim R^{beta_H} = dim A(G/H)", t.dim() == ax.dim(),
            std::to_string(t.dim()) + " vs " + std::to_string(ax.dim()));

    const std::vector<RingElement> rs = sample(t, limits);
    const std::vector<RingElement> fs = sample(ax, limits);
    out.invariant_elements = rs.size();
    out.function_elements = fs.size();

    std::string ill, outside, trip;
    for (const auto& r : rs) {
        for (std::size_t c = 0; c < cs.classes.size() && ill.empty(); ++c) {
            const RingElement first = apply_beta(A, cs.representatives[c], r);
            for (std::size_t l : cs.classes[c])
                if (apply_beta(A, l, r) != first)
                    ill = format_element(R, r) + " at " + G.label(l) + " vs " +
                          G.label(cs.representatives[c]);
        }
        const RingElement f = theta_prime(r);
        if (outside.empty() && !ax.contains(f))
            outside = format_element(R, r);
        if (trip.empty() && theta(f) != r)
            trip = format_element(R, r);
    }
    rep.add("theta' well defined", ill.empty(), ill);
    rep.add("theta' lands in A(G/H)", outside.empty(), outside);
    rep.add("theta o theta' = id", trip.empty(), trip);

    std::string outside2, trip2;
    for (const auto& f : fs) {
        const RingElement r = theta(f);
        if (outside2.empty() && !t.contains(r))
            outside2 = format_element(*m.ring, f);
        if (trip2.empty() && theta_prime(r) != f)
            trip2 = format_element(*m.ring, f);
    }
    rep.add("theta lands in R^{beta_H}", outside2.empty(), outside2);
    rep.add("theta' o theta = id", trip2.empty(), trip2);
    return out;
}

std::optional<std::string> grothendieck_hypotheses(const AlgebraAction& a, const Subalgebra& k)
{
    if (!find_galois_coordinates(a))
        return std::string("R has no Galois coordinates over K");
    const Groupoid& G = a.groupoid();
    std::vector<std::string> failures;
    for (std::size_t g = 0; g < G.size(); ++g) {
        const FaithfulVerdict v = is_faithful_ideal(k, a.support(g));
        if (!v)
            failures.push_back("E_" + G.label(g) + " is not faithful over K (" +
                               format_element(a.ring(), *v.witness) + " annihilates it)");
    }
    if (failures.empty())
        return std::nullopt;
    return join(failures, "; ");
}

namespace {

Subalgebra checked_base(const AlgebraAction& a, const Limits& limits)
{
    Subalgebra k = invariants(a, whole(a.groupoid()), limits);
    if (auto failure = grothendieck_hypotheses(a, k))
        throw Error(ErrorKind::HypothesisFailure, *failure);
    return k;
}

std::string phi_detail(const PhiVerdict& v)
{
    return "domain " + std::to_string(v.domain_dim) + ", codomain " +
           std::to_string(v.codomain_dim) + ", rank " + std::to_string(v.rank) +
           (v.multiplicative ? "" : ", not multiplicative");
}

} // namespace

CheckReport grothendieck_check(std::shared_ptr<const AlgebraAction> a,
                               std::shared_ptr<const GSet> x, const Limits& limits)
{
    const Subalgebra k = checked_base(*a, limits);
    const Groupoid& G = a->groupoid();
    const BlockRing& R = a->ring();
    const MapAlgebra m = build_mapalg(x, a);
    const Subalgebra ax = compute_AX(m, limits);

    CheckReport rep;
    rep.append(omega_check(m, ax, limits), "");
    for (std::size_t g = 0; g < G.size(); ++g) {
        const PhiVerdict v = phi_iso_check(*a, g, ax, rho_family(m, ax, G.target(g)), k);
        rep.add("phi_" + G.label(g) + " isomorphism", v.bijective(), phi_detail(v));
    }

    // phi_(g,i) = pi_i phi_g eta_g, evaluated on the basis of A(X).
    std::string differs;
    const auto basis = ax.basis_elements();
    for (std::size_t g = 0; g < G.size() && differs.empty(); ++g) {
        const RingElement unit = R.unit_of(a->support(g));
        for (std::size_t p : x->points_over(G.target(g))) {
            const HomRecord r = rho(m, ax, p);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (mul(R, unit, m.value(basis[i], p)) != r.images[i])
                    differs = "g = " + G.label(g) + ", x = " + x->label(p);
        }
    }
    rep.add("V_g(A(X)) = V_g(X)", differs.empty(), differs);
    return rep;
}

CheckReport r_split_check(const AlgebraAction& a, const Subalgebra& b, const Subalgebra& k,
                          HomGSet* vb)
{
    const Groupoid& G = a.groupoid();
    CheckReport rep;
    rep.add("B is a K-subalgebra", is_k_subalgebra(b, k));

    std::vector<std::size_t> ranks;
    for (const Idempotent& u : primitive_idempotents(k))
        ranks.push_back(component(b, u).dim() / component(k, u).dim());
    std::string profile;
    for (std::size_t r : ranks)
        profile += (profile.empty() ? "" : ",") + std::to_string(r);
    rep.add("constant rank over K",
            std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) == ranks.end(),
            "(" + profile + ")");

    std::vector<std::vector<HomRecord>> families(G.size());
    std::vector<HomRecord> all;
    for (std::size_t e : G.identities()) {
        families[e] = transport_family(a, b, e);
        all.insert(all.end(), families[e].begin(), families[e].end());
    }
    for (std::size_t g = 0; g < G.size(); ++g) {
        const PhiVerdict v = phi_iso_check(a, g, b, families[G.target(g)], k);
        rep.add("phi_" + G.label(g) + " isomorphism", v.bijective(), phi_detail(v));
    }
    HomGSet v = hom_gset(a, std::move(all));
    rep.add("V(B) is a G-set under xi", v.valid(), v.failure);
    if (vb)
        *vb = std::move(v);
    return rep;
}

CheckReport grothendieck_check(std::shared_ptr<const AlgebraAction> a, const Subalgebra& b,
                               const Limits& limits)
{
    const Subalgebra k = checked_base(*a, limits);
    HomGSet vb;
    CheckReport rep = r_split_check(*a, b, k, &vb);
    rep.append(nu_iso_check(vb, a, b, k, limits), "");
    return rep;
}

CheckReport pullback_check(std::shared_ptr<const AlgebraAction> a, std::shared_ptr<const GSet> x,
                           std::shared_ptr<const GSet> y, const GMap& psi, const Limits& limits)
{
    CheckReport rep;
    const GMapVerdict verdict = check_gmap(*x, *y, psi);
    rep.add("psi is a G-map", verdict.is_gmap, verdict.certificate);
    if (!verdict.is_gmap)
        return rep;
    const MapAlgebra mx = build_mapalg(x, a);
    const MapAlgebra my = build_mapalg(y, a);
    const Subalgebra ax = compute_AX(mx, limits);
    const Subalgebra ay = compute_AX(my, limits);

    auto pull = [&](const RingElement& f) {
        std::vector<RingElement> values;
        for (std::size_t p = 0; p < x->size(); ++p)
            values.push_back(my.value(f, psi.map[p]));
        return mx.from_values(values);
    };
    std::string outside;
    for (const auto& f : ay.basis_elements())
        if (outside.empty() && !ax.contains(pull(f)))
            outside = format_element(*my.ring, f);
    rep.add("f o psi lies in A(X)", outside.empty(), outside);
    rep.add("pullback unital", pull(my.ring->one()) == mx.ring->one());
    return rep;
}

CheckReport module_invariants_check(std::shared_ptr<const AlgebraAction> a,
                                    std::shared_ptr<const GSet> x, const Limits& limits)
{
    CheckReport rep;
    const AlgebraAction& A = *a;
    const Groupoid& G = A.groupoid();
    const BlockRing& R = A.ring();
    const MapAlgebra m = build_mapalg(x, a);

    // (1_g d_g) f = 1_g alpha_g(f 1'_{g^-1}) = 1_g f, read off pointwise on X_g.
    std::vector<RingElement> fixed;
    for (const RingElement& f : all_elements(*m.ring, limits)) {
        bool ok = true;
        for (std::size_t g = 0; g < G.size() && ok; ++g)
            for (std::size_t p : x->points_over(G.target(g))) {
                const std::size_t q = x->gamma(G.inverse(g), p);
                if (apply_beta(A, g, m.value(f, q)) != m.value(f, p)) {
                    ok = false;
                    break;
                }
            }
        if (ok)
            fixed.push_back(f);
    }
    std::vector<RingElement> ax = compute_AX(m, limits).elements(limits);
    std::sort(fixed.begin(), fixed.end());
    std::sort(ax.begin(), ax.end());
    rep.add("Map(X,R)^G = A(X)", fixed == ax,
            std::to_string(fixed.size()) + " vs " + std::to_string(ax.size()) + " elements");

    std::vector<RingElement> rg;
    for (const RingElement& r : all_elements(R, limits)) {
        bool ok = true;
        for (std::size_t g = 0; g < G.size() && ok; ++g)
            ok = apply_beta(A, g, r) == mul(R, R.unit_of(A.support(g)), r);
        if (ok)
            rg.push_back(r);
    }
    std::vector<RingElement> k = invariants(A, whole(G), limits).elements(limits);
    std::sort(rg.begin(), rg.end());
    std::sort(k.begin(), k.end());
    rep.add("R^G = R^beta", rg == k,
            std::to_string(rg.size()) + " vs " + std::to_string(k.size()) + " elements");
    return rep;
}

} // namespace ggt
