#include "ggt/galois.hpp"

#include <algorithm>

#include "ggt/error.hpp"
#include "ggt/mapalg.hpp"

namespace ggt {

namespace {

Vector zeros(std::size_t n) { return Vector(n, Scalar{0}); }

void axpy(const FieldSpec& F, Vector& acc, Scalar c, const Vector& v)
{
    if (c.code == 0)
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        acc[i] = F.add(acc[i], F.mul(c, v[i]));
}

bool is_zero_vector(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.code == 0; });
}

/// x y in the coordinates of a structure algebra.
Vector product(const StructureAlgebra& a, const Vector& x, const Vector& y)
{
    Vector out = zeros(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            axpy(a.prime, out, a.prime.mul(x[i], y[j]), a.mult[i][j]);
    return out;
}

Vector coordinates_or_throw(const Subalgebra& t, const RingElement& x, const std::string& what)
{
    auto c = t.coordinates(x);
    if (!c)
        throw Error(ErrorKind::NotAModule, what + " " + format_element(t.ambient(), x) +
                                               " is not in " + format_subalgebra(t));
    return *c;
}

void check_common(const std::vector<HomRecord>& v)
{
    for (const auto& u : v)
        if (u.identity != v.front().identity || !u.target->same_as(*v.front().target) ||
            !(u.source == v.front().source))
            throw Error(ErrorKind::TargetMismatch,
                        u.label + " and " + v.front().label + " differ in source or target ideal");
}

/// f(x) for f given by its values on the basis of t.
RingElement evaluate(const Subalgebra& t, const std::vector<RingElement>& f, const RingElement& x)
{
    const BlockRing& R = t.ambient();
    const Vector c = coordinates_or_throw(t, x, "argument");
    RingElement out = R.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].code != 0)
            out = add(R, out, scale(R, c[i], f[i]));
    return out;
}

std::vector<RingElement> sample(const Subalgebra& t, const Limits& limits)
{
    return t.cardinality() <= limits.max_elements ? t.elements(limits) : t.basis_elements();
}

IdealRef all_blocks(const BlockRing& r)
{
    IdealRef out;
    for (std::size_t j = 0; j < r.size(); ++j)
        out.support.push_back(j);
    return out;
}

} // namespace

CheckReport trace_checks(const AlgebraAction& a, const Subalgebra& k, const Limits& limits)
{
    const BlockRing& R = a.ring();
    const auto& Rp = a.ring_ptr();
    CheckReport rep;

    std::string outside;
    std::vector<RingElement> images;
    const bool small = R.cardinality() <= limits.max_elements;
    const std::vector<RingElement> domain =
        small ? all_elements(R, limits) : prime_basis(R, all_blocks(R));
    for (const auto& r : domain) {
        images.push_back(trace(a, r));
        if (outside.empty() && !k.contains(images.back()))
            outside = format_element(R, r) + " -> " + format_element(R, images.back());
    }
    rep.add("t_beta(R) in K", outside.empty(), outside);
    rep.add("t_beta(R) = K", outside.empty() && span_of(Rp, images) == k,
            small ? "elementwise" : "span of basis images");

    // c with t_beta(c) = 1, solved over the F_p basis of R.
    const FieldSpec& F = R.prime_field();
    const auto basis = prime_basis(R, all_blocks(R));
    LinearSystem sys{{}, {}, basis.size()};
    std::vector<Vector> cols;
    for (const auto& b : basis)
        cols.push_back(to_prime_vector(R, trace(a, b)));
    const Vector one = to_prime_vector(R, R.one());
    for (std::size_t s = 0; s < one.size(); ++s) {
        Vector row(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            row[i] = cols[i][s];
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(one[s]);
    }
    const LinearSolution sol = solve_linear(F, sys);
    if (!sol.consistent()) {
        rep.add("K is a direct summand of R", false, "1 is not a trace");
        return rep;
    }
    RingElement c = R.zero();
    for (std::size_t i = 0; i < basis.size(); ++i)
        c = add(R, c, scale(R, (*sol.particular)[i], basis[i]));
    std::string bad;
    for (const auto& x : sample(k, limits))
        if (bad.empty() && trace(a, mul(R, c, x)) != x)
            bad = "projection moves " + format_element(R, x);
    rep.add("K is a direct summand of R", bad.empty(),
            bad.empty() ? "c = " + format_element(R, c) : bad);
    return rep;
}

StructureAlgebra structure_of(const Subalgebra& t, const Subalgebra& k)
{
    const BlockRing& S = t.ambient();
    StructureAlgebra a;
    a.prime = S.prime_field();
    a.dim = t.dim();
    const auto basis = t.basis_elements();
    a.mult.assign(a.dim, std::vector<Vector>(a.dim));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i; j < a.dim; ++j) {
            a.mult[i][j] = coordinates_or_throw(t, mul(S, basis[i], basis[j]), "product");
            a.mult[j][i] = a.mult[i][j];
        }
    a.unit = coordinates_or_throw(t, S.one(), "unit");
    for (const auto& c : embedded_basis(k, S))
        a.scalars.push_back(coordinates_or_throw(t, c, "constant"));
    return a;
}

std::optional<SeparabilitySolution> solve_separability(const StructureAlgebra& a)
{
    const FieldSpec& F = a.prime;
    const std::size_t d = a.dim;
    const std::size_t n = d * d;
    auto at = [d](std::size_t i, std::size_t j) { return i * d + j; };

    // Rel = span{(k e_i) (x) e_j - e_i (x) (k e_j)}; W is its annihilator.
    LinearSystem rel{{}, {}, n};
    for (const auto& k : a.scalars) {
        std::vector<Vector> ke(d);
        for (std::size_t i = 0; i < d; ++i) {
            Vector ei = zeros(d);
            ei[i] = F.one();
            ke[i] = product(a, k, ei);
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Vector row = zeros(n);
                for (std::size_t s = 0; s < d; ++s) {
                    row[at(s, j)] = F.add(row[at(s, j)], ke[i][s]);
                    row[at(i, s)] = F.sub(row[at(i, s)], ke[j][s]);
                }
                if (!is_zero_vector(row))
                    rel.matrix.push_back(std::move(row));
            }
    }
    rel.rhs.assign(rel.matrix.size(), F.zero());
    const std::vector<Vector> w = solve_linear(F, rel).nullspace;

    LinearSystem sys{{}, {}, n};
    // mu(v) = 1
    for (std::size_t s = 0; s < d; ++s) {
        Vector row = zeros(n);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                row[at(i, j)] = a.mult[i][j][s];
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(a.unit[s]);
    }
    // (e_l (x) 1 - 1 (x) e_l) v lies in Rel, i.e. is killed by every w.
    for (std::size_t l = 0; l < d; ++l)
        for (const auto& wv : w) {
            Vector row = zeros(n);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    Scalar c = F.zero();
                    for (std::size_t s = 0; s < d; ++s) {
                        c = F.add(c, F.mul(a.mult[l][i][s], wv[at(s, j)]));
                        c = F.sub(c, F.mul(a.mult[l][j][s], wv[at(i, s)]));
                    }
                    row[at(i, j)] = c;
                }
            if (!is_zero_vector(row)) {
                sys.matrix.push_back(std::move(row));
                sys.rhs.push_back(F.zero());
            }
        }
    const LinearSolution sol = solve_linear(F, sys);
    if (!sol.consistent())
        return std::nullopt;

    SeparabilitySolution out;
    out.coefficients.assign(d, zeros(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out.coefficients[i][j] = (*sol.particular)[at(i, j)];
    out.unique = true;
    for (const auto& z : sol.nullspace)
        for (const auto& wv : w) {
            Scalar c = F.zero();
            for (std::size_t i = 0; i < n; ++i)
                c = F.add(c, F.mul(wv[i], z[i]));
            if (c.code != 0)
                out.unique = false;
        }
    return out;
}

std::optional<Vector> nilpotent_witness(const StructureAlgebra& a)
{
    const FieldSpec& F = a.prime;
    const std::size_t d = a.dim;
    if (d == 0)
        return std::nullopt;

    // Column j of frob is e_j^p.
    Matrix frob(d);
    for (std::size_t j = 0; j < d; ++j) {
        Vector ej = zeros(d);
        ej[j] = F.one();
        Vector x = ej;
        for (std::uint32_t e = 1; e < F.characteristic(); ++e)
            x = product(a, x, ej);
        frob[j] = x;
    }
    // power[j] = image of e_j under frob^N.
    Matrix power = frob;
    std::uint64_t reach = F.characteristic();
    while (reach <= d) {
        Matrix next(d, zeros(d));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                axpy(F, next[j], power[j][i], frob[i]);
        power = std::move(next);
        reach *= F.characteristic();
    }
    LinearSystem sys{Matrix(d, zeros(d)), Vector(d, F.zero()), d};
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            sys.matrix[i][j] = power[j][i];
    const LinearSolution sol = solve_linear(F, sys);
    if (sol.nullspace.empty())
        return std::nullopt;
    return sol.nullspace.front();
}

std::optional<SeparabilityIdempotent> separability_idempotent(const Subalgebra& t,
                                                              const Subalgebra& k)
{
    const StructureAlgebra a = structure_of(t, k);
    const auto sol = solve_separability(a);
    const auto nil = nilpotent_witness(a);
    if (sol.has_value() == nil.has_value())
        throw Error(ErrorKind::OracleMismatch,
                    format_subalgebra(t) + (sol ? " has a separability idempotent and a nilpotent"
                                                : " is reduced without a separability idempotent"));
    if (!sol)
        return std::nullopt;

    const BlockRing& S = t.ambient();
    SeparabilityIdempotent out;
    out.unique = sol->unique;
    for (std::size_t i = 0; i < a.dim; ++i) {
        const RingElement y = t.combine(sol->coefficients[i]);
        if (!is_zero(y))
            out.terms.emplace_back(t.basis_element(i), y);
    }
    RingElement mu = S.zero();
    for (const auto& [x, y] : out.terms)
        mu = add(S, mu, mul(S, x, y));
    if (mu != S.one())
        throw Error(ErrorKind::OracleMismatch,
                    "separability idempotent multiplies to " + format_element(S, mu));
    return out;
}

bool RankProfile::constant() const noexcept
{
    return std::adjacent_find(ranks.begin(), ranks.end(), std::not_equal_to<>()) == ranks.end();
}

bool RankProfile::faithful() const noexcept
{
    return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r > 0; });
}

std::size_t RankProfile::min() const noexcept
{
    return ranks.empty() ? 0 : *std::min_element(ranks.begin(), ranks.end());
}

RankProfile rank_profile(const Subalgebra& t, const Subalgebra& k)
{
    const BlockRing& S = t.ambient();
    const auto tb = t.basis_elements();
    for (const auto& c : embedded_basis(k, S))
        for (const auto& x : tb)
            if (!t.contains(mul(S, c, x)))
                throw Error(ErrorKind::NotAModule,
                            format_subalgebra(t) + " is not closed under multiplication by " +
                                format_element(S, c));
    RankProfile out;
    out.blocks = primitive_idempotents(k);
    for (const Idempotent& u : out.blocks)
        out.ranks.push_back(component(t, u).dim() / component(k, u).dim());
    return out;
}

std::optional<DualBasis> dual_basis_solve(const std::vector<HomRecord>& v)
{
    if (v.empty())
        throw Error(ErrorKind::TargetMismatch, "empty hom family");
    check_common(v);
    const BlockRing& R = *v.front().target;
    const FieldSpec& F = R.field();
    const Subalgebra& t = v.front().source;
    const std::size_t d = t.dim();
    const auto ys = t.basis_elements();
    const auto blocks = R.ideal(v.front().identity).support;
    const RingElement unit = R.unit_of(R.ideal(v.front().identity));

    DualBasis out;
    for (std::size_t u = 0; u < v.size(); ++u) {
        std::vector<RingElement> xs(d, R.zero());
        for (std::size_t b : blocks) {
            LinearSystem sys{{}, {}, d};
            for (std::size_t w = 0; w < v.size(); ++w) {
                Vector row(d);
                for (std::size_t i = 0; i < d; ++i)
                    row[i] = v[w].images[i].coords[b];
                sys.matrix.push_back(std::move(row));
                sys.rhs.push_back(w == u ? F.one() : F.zero());
            }
            const LinearSolution sol = solve_linear(F, sys);
            if (!sol.consistent())
                return std::nullopt;
            for (std::size_t i = 0; i < d; ++i)
                xs[i].coords[b] = (*sol.particular)[i];
        }
        std::vector<std::pair<RingElement, RingElement>> pairs;
        for (std::size_t i = 0; i < d; ++i)
            if (!is_zero(xs[i]))
                pairs.emplace_back(xs[i], ys[i]);
        for (std::size_t w = 0; w < v.size(); ++w) {
            RingElement s = R.zero();
            for (const auto& [x, y] : pairs)
                s = add(R, s, mul(R, x, hom_apply(v[w], y)));
            if (s != (w == u ? unit : R.zero()))
                throw Error(ErrorKind::OracleMismatch,
                            "dual basis for " + v[u].label + " fails on " + v[w].label);
        }
        out.pairs.push_back(std::move(pairs));
    }
    return out;
}

bool freeness_check(const std::vector<HomRecord>& v)
{
    if (v.empty())
        return true;
    check_common(v);
    const BlockRing& R = *v.front().target;
    const std::size_t d = v.front().source.dim();
    for (std::size_t b : R.ideal(v.front().identity).support) {
        Matrix m;
        for (const auto& u : v) {
            Vector row(d);
            for (std::size_t i = 0; i < d; ++i)
                row[i] = u.images[i].coords[b];
            m.push_back(std::move(row));
        }
        if (rank_of(R.field(), std::move(m), d) != v.size())
            return false;
    }
    return true;
}

TriEquivalence tri_equivalence_check(const std::vector<HomRecord>& v, const Subalgebra& k,
                                     const Limits& limits)
{
    TriEquivalence out;
    if (v.empty()) {
        out.strongly_distinct = out.dual_basis = out.free = true;
        return out;
    }
    check_common(v);
    if (!separability_idempotent(v.front().source, k))
        throw Error(ErrorKind::NotSeparable,
                    format_subalgebra(v.front().source) + " is not separable over K");
    out.strongly_distinct = pairwise_strongly_distinct(v, limits);
    out.dual_basis = dual_basis_solve(v).has_value();
    out.free = freeness_check(v);
    return out;
}

CheckReport dedekind_bound_check(const std::vector<HomRecord>& v, const Subalgebra& k,
                                 const Limits& limits)
{
    CheckReport rep;
    std::string witness;
    if (v.empty() || !pairwise_strongly_distinct(v, limits, &witness)) {
        rep.add("bound vacuous", true, v.empty() ? "empty family" : witness);
        return rep;
    }
    const RankProfile profile = rank_profile(v.front().source, k);
    for (std::size_t i = 0; i < profile.blocks.size(); ++i)
        rep.add("#V <= rank at " +
                    format_element(k.ambient(), idempotent_element(k.ambient(), profile.blocks[i])),
                v.size() <= profile.ranks[i],
                std::to_string(v.size()) + " vs " + std::to_string(profile.ranks[i]));
    return rep;
}

AssociatedIdempotent associated_idempotent(const Subalgebra& t, const Subalgebra& k,
                                           const std::vector<RingElement>& f)
{
    if (!t.ambient().same_as(k.ambient()))
        throw Error(ErrorKind::TargetMismatch, "T and K must share the ambient ring");
    if (f.size() != t.dim())
        throw Error(ErrorKind::TargetMismatch, "one value per basis element of T is required");
    if (!separability_idempotent(t, k))
        throw Error(ErrorKind::NotSeparable, format_subalgebra(t) + " is not separable over K");

    const BlockRing& R = t.ambient();
    const FieldSpec& F = R.prime_field();
    const std::size_t d = t.dim();
    const std::size_t n = R.prime_dimension();
    const auto basis = t.basis_elements();

    LinearSystem sys{{}, {}, d};
    auto add_rows = [&](const std::vector<RingElement>& columns, const RingElement& rhs) {
        const Vector r = to_prime_vector(R, rhs);
        std::vector<Vector> c;
        for (const auto& x : columns)
            c.push_back(to_prime_vector(R, x));
        for (std::size_t s = 0; s < n; ++s) {
            Vector row(d);
            for (std::size_t i = 0; i < d; ++i)
                row[i] = c[i][s];
            sys.matrix.push_back(std::move(row));
            sys.rhs.push_back(r[s]);
        }
    };
    // f(pi) = 1
    add_rows(f, R.one());
    // t_j pi - f(t_j) pi = 0
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<RingElement> columns;
        for (std::size_t i = 0; i < d; ++i)
            columns.push_back(sub(R, mul(R, basis[j], basis[i]), mul(R, f[j], basis[i])));
        add_rows(columns, R.zero());
    }
    const LinearSolution sol = solve_linear(F, sys);
    if (!sol.consistent())
        throw Error(ErrorKind::NoSuchIdempotent,
                    "no idempotent pi with f(pi) = 1 and x pi = f(x) pi in " + format_subalgebra(t));
    return {t.combine(*sol.particular), sol.nullspace.empty()};
}

CheckReport idempotent_family_check(const Subalgebra& t, const Subalgebra& k,
                                    const std::vector<std::vector<RingElement>>& family,
                                    const Limits& limits)
{
    const BlockRing& R = t.ambient();
    CheckReport rep;

    // Idempotents of K are the sums of its primitive idempotents.
    const auto prim = primitive_idempotents(k);
    if (prim.size() > limits.max_idempotent_support)
        throw Error(ErrorKind::SizeBoundExceeded, "too many primitive idempotents in K");
    std::string equalized;
    for (std::size_t a = 0; a < family.size() && equalized.empty(); ++a)
        for (std::size_t b = a + 1; b < family.size() && equalized.empty(); ++b)
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << prim.size()); ++mask) {
                Idempotent e;
                for (std::size_t i = 0; i < prim.size(); ++i)
                    if (mask >> i & 1)
                        e.support.insert(e.support.end(), prim[i].support.begin(),
                                         prim[i].support.end());
                std::sort(e.support.begin(), e.support.end());
                const RingElement p = idempotent_element(R, e);
                bool separated = false;
                for (std::size_t j = 0; j < t.dim() && !separated; ++j)
                    separated = !is_zero(mul(R, sub(R, family[a][j], family[b][j]), p));
                if (!separated) {
                    equalized = "f" + std::to_string(a + 1) + " and f" + std::to_string(b + 1) +
                                " agree on " + format_element(R, p);
                    break;
                }
            }
    rep.add("pairwise strongly distinct", equalized.empty(), equalized);

    std::vector<std::optional<RingElement>> pis;
    for (std::size_t j = 0; j < family.size(); ++j) {
        const std::string name = "pi" + std::to_string(j + 1);
        try {
            const AssociatedIdempotent a = associated_idempotent(t, k, family[j]);
            rep.add(name + " unique", a.unique, format_element(R, a.pi));
            rep.add(name + " idempotent", mul(R, a.pi, a.pi) == a.pi);
            pis.push_back(a.pi);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoSuchIdempotent)
                throw;
            rep.add(name + " exists", false, e.witness());
            pis.push_back(std::nullopt);
        }
    }
    std::string bad;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (!pis[j])
                continue;
            const RingElement v = evaluate(t, family[i], *pis[j]);
            if (bad.empty() && v != (i == j ? R.one() : R.zero()))
                bad = "f" + std::to_string(i + 1) + "(pi" + std::to_string(j + 1) +
                      ") = " + format_element(R, v);
        }
    rep.add("f_i(pi_j) = delta_ij", bad.empty(), bad);
    std::string overlap;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (overlap.empty() && pis[i] && pis[j] && !is_zero(mul(R, *pis[i], *pis[j])))
                overlap = "pi" + std::to_string(i + 1) + " pi" + std::to_string(j + 1);
    rep.add("pairwise orthogonal", overlap.empty(), overlap);
    return rep;
}

SubgroupoidSpec h_of(const Subalgebra& t, const AlgebraAction& a)
{
    if (!t.ambient().same_as(a.ring()))
        throw Error(ErrorKind::TargetMismatch, "subalgebra does not live in the acted ring");
    const Groupoid& G = a.groupoid();
    const BlockRing& R = a.ring();
    const auto basis = t.basis_elements();
    SubgroupoidSpec h;
    for (std::size_t g = 0; g < G.size(); ++g) {
        const RingElement unit = R.unit_of(a.support(g));
        bool fixes = true;
        for (const auto& x : basis)
            if (apply_beta(a, g, x) != mul(R, x, unit)) {
                fixes = false;
                break;
            }
        if (fixes)
            h.members.push_back(g);
    }
    const SubsetVerdict v = is_wide_subgroupoid(G, h);
    if (!v)
        throw Error(ErrorKind::NotWide, format_subset(G, h) + ": " + v.certificate);
    return h;
}

StrongVerdict is_beta_strong(const Subalgebra& t, const AlgebraAction& a, const Limits& limits)
{
    const Groupoid& G = a.groupoid();
    const BlockRing& R = a.ring();
    const SubgroupoidSpec h_t = h_of(t, a);
    const auto basis = t.basis_elements();

    StrongVerdict out;
    out.strong = true;
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t h = 0; h < G.size(); ++h) {
            if (G.target(g) != G.target(h) || h_t.contains(G.product(G.inverse(g), h)))
                continue;
            std::vector<RingElement> diffs;
            for (const auto& x : basis)
                diffs.push_back(sub(R, apply_beta(a, g, x), apply_beta(a, h, x)));
            for (const Idempotent& e : idempotents_of(R, a.support(g), limits)) {
                const RingElement p = idempotent_element(R, e);
                const bool separated = std::any_of(diffs.begin(), diffs.end(), [&](const auto& d) {
                    return !is_zero(mul(R, d, p));
                });
                if (!separated) {
                    out.strong = false;
                    out.g = g;
                    out.h = h;
                    out.e = e;
                    return out;
                }
            }
        }
    return out;
}

CoordinateFamily galois_coords_from_separability(const Subalgebra& t, const AlgebraAction& a,
                                                 const Limits& limits)
{
    const Groupoid& G = a.groupoid();
    const BlockRing& R = a.ring();
    const Subalgebra k = invariants(a, whole(G), limits);

    CoordinateFamily out;
    out.preconditions.add("R is beta-Galois over K", find_galois_coordinates(a).has_value());
    std::optional<SeparabilityIdempotent> sep;
    try {
        sep = separability_idempotent(t, k);
        out.preconditions.add("T separable over K", sep.has_value());
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAModule)
            throw;
        out.preconditions.add("T separable over K", false, e.witness());
    }
    const StrongVerdict strong = is_beta_strong(t, a, limits);
    std::string witness;
    if (!strong)
        witness = "g = " + G.label(*strong.g) + ", h = " + G.label(*strong.h) +
                  ", e = " + format_element(R, idempotent_element(R, *strong.e));
    out.preconditions.add("T beta-strong", strong.strong, witness);
    if (!sep)
        return out;

    for (std::size_t g = 0; g < G.size(); ++g) {
        RingElement v = R.zero();
        for (const auto& [x, y] : sep->terms)
            v = add(R, v, mul(R, x, apply_beta(a, g, y)));
        out.v.push_back(v);
        const std::string name = "v_" + G.label(g);
        out.claims.add(name + " idempotent", mul(R, v, v) == v, format_element(R, v));
        if (G.is_identity(g))
            out.claims.add(name + " = 1_" + G.label(g), v == R.unit_of(a.support(g)),
                           format_element(R, v));
        else
            out.claims.add(name + " = 0", is_zero(v), format_element(R, v));
    }

    // f_i(t) = t_beta(y_i t); sum_i f_i(t) x_i = t.
    std::string fails;
    for (const auto& s : sample(t, limits)) {
        RingElement back = R.zero();
        for (const auto& [x, y] : sep->terms)
            back = add(R, back, mul(R, trace(a, mul(R, y, s)), x));
        if (back != s) {
            fails = format_element(R, s) + " -> " + format_element(R, back);
            break;
        }
    }
    out.claims.add("dual maps reconstruct T", fails.empty(), fails);
    return out;
}

FixedSubalgebraReport lemma54_check(const Subalgebra& t, std::shared_ptr<const AlgebraAction> a,
                            const Limits& limits)
{
    const Groupoid& G = a->groupoid();
    const Subalgebra k = invariants(*a, whole(G), limits);
    FixedSubalgebraReport out;
    std::string sep_detail;
    try {
        out.separable = separability_idempotent(t, k).has_value();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAModule)
            throw;
        sep_detail = e.witness();
    }
    out.beta_strong = is_beta_strong(t, *a, limits).strong;
    std::string h_detail;
    try {
        const SubgroupoidSpec h = h_of(t, *a);
        out.fixed_by_h = invariants(*a, h, limits) == t;
        h_detail = "H_T = " + format_subset(G, h);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotWide)
            throw;
        h_detail = e.witness();
    }
    const bool lhs = out.separable && out.beta_strong;
    const std::string detail = std::string("separable ") + (out.separable ? "yes" : "no") +
                               (sep_detail.empty() ? "" : " (" + sep_detail + ")") +
                               ", beta-strong " + (out.beta_strong ? "yes" : "no") + ", " +
                               h_detail + ", fixed " + (out.fixed_by_h ? "yes" : "no");
    out.checks.add("separable and beta-strong iff T = R^{beta_{H_T}}", lhs == out.fixed_by_h,
                   detail);
    if (lhs && out.fixed_by_h)
        out.checks.append(r_split_check(*a, t, k), "R-split: ");
    return out;
}

std::vector<Subalgebra> enumerate_k_subalgebras(const AlgebraAction& a, const Subalgebra& k,
                                                const Limits& limits)
{
    const auto& R = a.ring_ptr();
    const std::vector<RingElement> elements = all_elements(*R, limits);
    std::vector<Subalgebra> found{k_closure(k, R, {})};
    for (std::size_t i = 0; i < found.size(); ++i)
        for (const auto& x : elements) {
            if (found[i].contains(x))
                continue;
            auto gens = found[i].basis_elements();
            gens.push_back(x);
            Subalgebra s = k_closure(k, R, gens);
            if (std::find(found.begin(), found.end(), s) == found.end()) {
                if (found.size() >= limits.max_elements)
                    throw Error(ErrorKind::SizeBoundExceeded, "too many K-subalgebras");
                found.push_back(std::move(s));
            }
        }
    std::stable_sort(found.begin(), found.end(),
                     [](const Subalgebra& x, const Subalgebra& y) { return x.dim() < y.dim(); });
    return found;
}

CorrespondenceTable correspondence(std::shared_ptr<const AlgebraAction> a, const Limits& limits)
{
    const Groupoid& G = a->groupoid();
    const Subalgebra k = invariants(*a, whole(G), limits);
    if (auto failure = grothendieck_hypotheses(*a, k))
        throw Error(ErrorKind::HypothesisFailure, *failure);

    auto separable_strong = [&](const Subalgebra& t, bool& separable, bool& strong) {
        try {
            separable = separability_idempotent(t, k).has_value();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotAModule)
                throw;
            separable = false;
        }
        strong = is_beta_strong(t, *a, limits).strong;
    };

    CorrespondenceTable out;
    for (const SubgroupoidSpec& h : enumerate_wide_subgroupoids(G, limits)) {
        CorrespondenceRow row{h, invariants(*a, h, limits), {}, false, false, false};
        row.h_of_t = h_of(row.t, *a);
        separable_strong(row.t, row.separable, row.beta_strong);
        row.r_split = r_split_check(*a, row.t, k).pass();
        out.rows.push_back(std::move(row));
    }
    for (Subalgebra& t : enumerate_k_subalgebras(*a, k, limits)) {
        bool separable = false, strong = false;
        separable_strong(t, separable, strong);
        if (separable && strong)
            out.sss.push_back(std::move(t));
    }

    std::string collision;
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        for (std::size_t j = i + 1; j < out.rows.size(); ++j)
            if (collision.empty() && out.rows[i].t == out.rows[j].t)
                collision = format_subset(G, out.rows[i].h) + " and " +
                            format_subset(G, out.rows[j].h);
    out.checks.add("H -> R^{beta_H} injective", collision.empty(), collision);

    std::string missing;
    for (const auto& row : out.rows)
        if (missing.empty() && std::find(out.sss.begin(), out.sss.end(), row.t) == out.sss.end())
            missing = format_subalgebra(row.t) + " is not separable and beta-strong";
    for (const auto& t : out.sss)
        if (missing.empty() && std::none_of(out.rows.begin(), out.rows.end(),
                                            [&](const auto& row) { return row.t == t; }))
            missing = format_subalgebra(t) + " is not R^{beta_H} for any H";
    out.checks.add("image equals sss(R)", missing.empty(), missing);

    // Coset partitions, compared as sets of sorted classes.
    std::vector<std::vector<std::vector<std::size_t>>> partitions;
    for (const auto& row : out.rows) {
        auto classes = coset_space(G, row.h).classes;
        for (auto& c : classes)
            std::sort(c.begin(), c.end());
        std::sort(classes.begin(), classes.end());
        partitions.push_back(std::move(classes));
    }
    std::string same_cosets;
    for (std::size_t i = 0; i < partitions.size(); ++i)
        for (std::size_t j = i + 1; j < partitions.size(); ++j)
            if (same_cosets.empty() && partitions[i] == partitions[j])
                same_cosets = format_subset(G, out.rows[i].h) + " and " +
                              format_subset(G, out.rows[j].h);
    out.checks.add("H -> G/H injective", same_cosets.empty(), same_cosets);

    for (const auto& row : out.rows)
        out.checks.add("H_{R^{beta_H}} = H for H = " + format_subset(G, row.h),
                       row.h_of_t == row.h, format_subset(G, row.h_of_t));
    for (const auto& t : out.sss) {
        const SubgroupoidSpec h = h_of(t, *a);
        out.checks.add("R^{beta_{H_T}} = T for T = " + format_subalgebra(t),
                       invariants(*a, h, limits) == t);
    }
    return out;
}

} // namespace ggt
