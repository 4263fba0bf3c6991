#include "ggt/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ggt/error.hpp"

namespace ggt {

namespace {

constexpr std::size_t npos = AlgebraAction::npos;

void check_shape(const BlockRing& R, const ActionTables& t)
{
    const std::size_t n = R.groupoid().size();
    if (t.sigma.size() != n || t.frob.size() != n)
        throw Error(ErrorKind::SupportMismatch, "action tables do not cover the groupoid");
    for (std::size_t g = 0; g < n; ++g)
        if (t.sigma[g].size() != R.size() || t.frob[g].size() != R.size())
            throw Error(ErrorKind::SupportMismatch,
                        "action tables for " + R.groupoid().label(g) + " do not cover the blocks");
}

/// F_p basis of the fixed field of x -> x^(p^c) inside F_q.
std::vector<Scalar> fixed_subfield_basis(const FieldSpec& F, std::uint32_t c)
{
    const std::uint32_t k = F.degree();
    const FieldSpec Fp = prime_field(F.characteristic());
    std::vector<Scalar> powers;
    Scalar t = F.one();
    for (std::uint32_t i = 0; i < k; ++i) {
        powers.push_back(t);
        t = F.mul(t, F.generator());
    }
    if (c % k == 0)
        return powers;
    // Columns: t^i; rows: coefficients of (t^i)^(p^c) - t^i.
    LinearSystem sys;
    sys.cols = k;
    sys.matrix.assign(k, Vector(k, Fp.zero()));
    sys.rhs.assign(k, Fp.zero());
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto diff = F.coeffs(F.sub(frobenius(F, powers[i], c), powers[i]));
        for (std::uint32_t row = 0; row < k; ++row)
            sys.matrix[row][i] = Scalar{diff[row]};
    }
    std::vector<Scalar> out;
    for (const Vector& v : solve_linear(Fp, sys).nullspace) {
        std::vector<std::uint32_t> coeffs;
        for (Scalar s : v)
            coeffs.push_back(s.code);
        out.push_back(F.from_coeffs(coeffs));
    }
    return out;
}

std::string skew_term(const AlgebraAction& a, std::size_t g, const RingElement& x)
{
    return "(" + format_element(a.ring(), x) + ")d_" + a.groupoid().label(g);
}

} // namespace

ActionTables action_tables(const BlockRing& R, const RawAction& raw)
{
    const Groupoid& G = R.groupoid();
    const std::size_t n = G.size(), m = R.size();
    const std::uint32_t k = R.field().degree();
    ActionTables t;
    t.sigma.assign(n, std::vector<std::size_t>(m, npos));
    t.frob.assign(n, std::vector<std::uint32_t>(m, 0));
    std::vector<bool> given(n, false);
    for (const auto& [label, beta] : raw.maps) {
        const std::size_t g = G.index(label);
        given[g] = true;
        for (const auto& [a, b] : beta.sigma)
            t.sigma[g][R.index(a)] = R.index(b);
        for (const auto& [a, f] : beta.frob)
            t.frob[g][R.index(a)] = f;
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (given[g])
            continue;
        if (G.is_identity(g)) {
            for (std::size_t j : R.ideal(g).support)
                t.sigma[g][j] = j;
            continue;
        }
        const std::size_t gi = G.inverse(g);
        if (!given[gi])
            throw Error(ErrorKind::SupportMismatch,
                        "no block map for " + G.label(g) + " or its inverse");
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = t.sigma[gi][i];
            if (j == npos)
                continue;
            if (j >= m || t.sigma[g][j] != npos)
                throw Error(ErrorKind::NotBijective, G.label(gi) + " is not injective on blocks");
            t.sigma[g][j] = i;
            t.frob[g][j] = (k - t.frob[gi][i] % k) % k;
        }
    }
    return t;
}

AlgebraAction unchecked_action(std::shared_ptr<const BlockRing> ring, ActionTables tables)
{
    check_shape(*ring, tables);
    AlgebraAction a;
    a.ring_ = std::move(ring);
    a.tables_ = std::move(tables);
    return a;
}

AlgebraAction validate_action(std::shared_ptr<const BlockRing> ring, ActionTables t)
{
    const BlockRing& R = *ring;
    const Groupoid& G = R.groupoid();
    check_shape(R, t);
    const std::uint32_t k = R.field().degree();
    const std::size_t m = R.size();

    for (std::size_t g = 0; g < G.size(); ++g) {
        const IdealRef domain = R.ideal(G.source(g));
        const IdealRef codomain = R.ideal(G.target(g));
        std::vector<bool> hit(m, false);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t j = t.sigma[g][i];
            if (t.frob[g][i] >= k)
                throw Error(ErrorKind::ExponentOutOfRange,
                            G.label(g) + ": Frobenius exponent " + std::to_string(t.frob[g][i]) +
                                " on " + R.label(i) + " is not below " + std::to_string(k));
            if (domain.contains(i) != (j != npos))
                throw Error(ErrorKind::SupportMismatch,
                            "sigma_" + G.label(g) + " must be defined exactly on E_" +
                                G.label(G.source(g)) + " = " + format_ideal(R, domain) +
                                " (block " + R.label(i) + ")");
            if (j == npos) {
                if (t.frob[g][i] != 0)
                    throw Error(ErrorKind::SupportMismatch,
                                G.label(g) + ": Frobenius exponent on " + R.label(i) +
                                    " outside E_" + G.label(G.source(g)));
                continue;
            }
            if (j >= m || !codomain.contains(j))
                throw Error(ErrorKind::SupportMismatch,
                            "sigma_" + G.label(g) + " sends " + R.label(i) + " outside E_" +
                                G.label(G.target(g)) + " = " + format_ideal(R, codomain));
            if (hit[j])
                throw Error(ErrorKind::NotBijective,
                            "sigma_" + G.label(g) + " hits " + R.label(j) + " twice");
            hit[j] = true;
        }
        if (domain.support.size() != codomain.support.size())
            throw Error(ErrorKind::NotBijective,
                        "sigma_" + G.label(g) + " is not onto E_" + G.label(G.target(g)));
    }

    for (std::size_t e : G.identities())
        for (std::size_t i : R.ideal(e).support)
            if (t.sigma[e][i] != i || t.frob[e][i] != 0)
                throw Error(ErrorKind::IdentityNotTrivial,
                            "beta_" + G.label(e) + " moves " + R.label(i));

    for (auto [g, h] : composable(G)) {
        const std::size_t gh = G.product(g, h);
        for (std::size_t i : R.ideal(G.source(h)).support) {
            const std::size_t j = t.sigma[h][i];
            const std::size_t l = t.sigma[g][j];
            const std::uint32_t f = (t.frob[h][i] + t.frob[g][j]) % k;
            if (l != t.sigma[gh][i] || f != t.frob[gh][i])
                throw Error(ErrorKind::CompositionFailure,
                            "beta_" + G.label(g) + " o beta_" + G.label(h) + " != beta_" +
                                G.label(gh) + " on " + R.label(i));
        }
    }

    AlgebraAction a;
    a.ring_ = std::move(ring);
    a.tables_ = std::move(t);
    return a;
}

AlgebraAction validate_action(std::shared_ptr<const BlockRing> ring, const RawAction& raw)
{
    ActionTables t = action_tables(*ring, raw);
    return validate_action(std::move(ring), std::move(t));
}

RingElement apply_beta(const AlgebraAction& a, std::size_t g, const RingElement& x, bool truncate)
{
    const BlockRing& R = a.ring();
    check_element(R, x);
    RingElement out = R.zero();
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (x.coords[i].code == 0)
            continue;
        const std::size_t j = a.sigma(g, i);
        if (j == npos) {
            if (truncate)
                continue;
            throw Error(ErrorKind::SupportViolation,
                        format_element(R, x) + " is not supported in E_" +
                            a.groupoid().label(a.groupoid().source(g)));
        }
        out.coords[j] = R.field().add(out.coords[j], frobenius(R.field(), x.coords[i], a.frob(g, i)));
    }
    return out;
}

std::vector<RingElement> invariants_brute_force(const AlgebraAction& a, const SubgroupoidSpec& h,
                                                const Limits& limits)
{
    const BlockRing& R = a.ring();
    std::vector<RingElement> units;
    for (std::size_t g : h.members)
        units.push_back(R.unit_of(a.support(g)));
    std::vector<RingElement> out;
    for (const RingElement& r : all_elements(R, limits)) {
        bool fixed = true;
        for (std::size_t i = 0; fixed && i < h.members.size(); ++i)
            fixed = apply_beta(a, h.members[i], r, true) == mul(R, r, units[i]);
        if (fixed)
            out.push_back(r);
    }
    return out;
}

Subalgebra invariants(const AlgebraAction& a, const SubgroupoidSpec& h, const Limits& limits)
{
    const BlockRing& R = a.ring();
    const Groupoid& G = a.groupoid();
    for (std::size_t g : h.members)
        if (g >= G.size())
            throw Error(ErrorKind::NotSubgroupoid, "subset index out of range");
    if (auto sub = is_subgroupoid(G, h); !sub)
        throw Error(ErrorKind::NotSubgroupoid, format_subset(G, h) + ": " + sub.certificate);

    // Orbits of blocks under sigma_h, h in H.  twist[j] records that an
    // invariant element satisfies r[j] = r[root]^(p^twist[j]); a second path
    // with a different twist d pins r[root] to the fixed field of Frob^d.
    const std::uint32_t k = R.field().degree();
    std::vector<bool> seen(R.size(), false);
    std::vector<std::uint32_t> twist(R.size(), 0);
    std::vector<RingElement> gens;
    for (std::size_t root = 0; root < R.size(); ++root) {
        if (seen[root])
            continue;
        std::vector<std::size_t> orbit{root}, queue{root};
        seen[root] = true;
        std::uint32_t c = k;
        while (!queue.empty()) {
            const std::size_t i = queue.back();
            queue.pop_back();
            for (std::size_t g : h.members) {
                const std::size_t j = a.sigma(g, i);
                if (j == npos)
                    continue;
                const std::uint32_t t = (twist[i] + a.frob(g, i)) % k;
                if (!seen[j]) {
                    seen[j] = true;
                    twist[j] = t;
                    orbit.push_back(j);
                    queue.push_back(j);
                } else {
                    c = std::gcd(c, (t + k - twist[j]) % k);
                }
            }
        }
        for (Scalar s : fixed_subfield_basis(R.field(), c)) {
            RingElement x = R.zero();
            for (std::size_t j : orbit)
                x.coords[j] = frobenius(R.field(), s, twist[j]);
            gens.push_back(std::move(x));
        }
    }
    Subalgebra out = span_of(a.ring_ptr(), gens);

    if (R.cardinality() <= limits.max_elements) {
        const auto brute = invariants_brute_force(a, h, limits);
        bool same = brute.size() == out.cardinality();
        for (std::size_t i = 0; same && i < brute.size(); ++i)
            same = out.contains(brute[i]);
        if (!same)
            throw Error(ErrorKind::OracleMismatch,
                        "orbit analysis gives " + format_subalgebra(out) + " but filtering finds " +
                            std::to_string(brute.size()) + " invariant elements");
    }
    return out;
}

RingElement trace(const AlgebraAction& a, const RingElement& x)
{
    const BlockRing& R = a.ring();
    RingElement sum = R.zero();
    for (std::size_t g = 0; g < a.groupoid().size(); ++g)
        sum = add(R, sum, apply_beta(a, g, x, true));
    return sum;
}

std::optional<std::string> galois_coordinate_failure(const AlgebraAction& a,
                                                     const GaloisCoordinates& c)
{
    const BlockRing& R = a.ring();
    const Groupoid& G = a.groupoid();
    for (std::size_t g = 0; g < G.size(); ++g) {
        RingElement sum = R.zero();
        for (const auto& [x, y] : c.pairs)
            sum = add(R, sum, mul(R, x, apply_beta(a, g, y, true)));
        const RingElement expected = G.is_identity(g) ? R.unit_of(R.ideal(g)) : R.zero();
        if (sum != expected)
            return "at " + G.label(g) + ": sum is " + format_element(R, sum) + ", expected " +
                   format_element(R, expected);
    }
    return std::nullopt;
}

std::optional<GaloisCoordinates> find_galois_coordinates(const AlgebraAction& a)
{
    const BlockRing& R = a.ring();
    const Groupoid& G = a.groupoid();
    const FieldSpec& F = R.field();

    GaloisCoordinates blocks;
    blocks.strategy = 1;
    for (std::size_t i = 0; i < R.size(); ++i)
        blocks.pairs.emplace_back(R.block_unit(i), R.block_unit(i));
    if (!galois_coordinate_failure(a, blocks))
        return blocks;

    IdealRef everything;
    for (std::size_t i = 0; i < R.size(); ++i)
        everything.support.push_back(i);
    const std::vector<RingElement> ys = prime_basis(R, everything);
    std::vector<std::vector<RingElement>> moved(G.size());
    for (std::size_t g = 0; g < G.size(); ++g)
        for (const auto& y : ys)
            moved[g].push_back(apply_beta(a, g, y, true));

    // Block b of x_j is an unknown over F_q; the rows are the g with
    // r(g) = owner(b), each asking for the b-component of the sum.
    std::vector<RingElement> xs(ys.size(), R.zero());
    for (std::size_t b = 0; b < R.size(); ++b) {
        LinearSystem sys;
        sys.cols = ys.size();
        for (std::size_t g = 0; g < G.size(); ++g) {
            if (G.target(g) != R.owner(b))
                continue;
            Vector row;
            for (const auto& m : moved[g])
                row.push_back(m.coords[b]);
            sys.matrix.push_back(std::move(row));
            sys.rhs.push_back(g == R.owner(b) ? F.one() : F.zero());
        }
        const LinearSolution sol = solve_linear(F, sys);
        if (!sol.consistent())
            return std::nullopt;
        for (std::size_t j = 0; j < ys.size(); ++j)
            xs[j].coords[b] = (*sol.particular)[j];
    }
    GaloisCoordinates solved;
    solved.strategy = 2;
    for (std::size_t j = 0; j < ys.size(); ++j)
        if (!is_zero(xs[j]))
            solved.pairs.emplace_back(xs[j], ys[j]);
    if (auto bad = galois_coordinate_failure(a, solved))
        throw Error(ErrorKind::OracleMismatch, "solved coordinates fail " + *bad);
    return solved;
}

SkewRingElement skew_zero(const AlgebraAction& a)
{
    return SkewRingElement{std::vector<RingElement>(a.groupoid().size(), a.ring().zero())};
}

SkewRingElement skew_unit(const AlgebraAction& a)
{
    SkewRingElement u = skew_zero(a);
    for (std::size_t e : a.groupoid().identities())
        u.terms[e] = a.ring().unit_of(a.ring().ideal(e));
    return u;
}

SkewRingElement skew_monomial(const AlgebraAction& a, std::size_t g, const RingElement& x)
{
    check_element(a.ring(), x);
    const IdealRef e = a.support(g);
    for (std::size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i].code != 0 && !e.contains(i))
            throw Error(ErrorKind::SupportViolation,
                        "coefficient of d_" + a.groupoid().label(g) + " must lie in E_" +
                            a.groupoid().label(g));
    SkewRingElement u = skew_zero(a);
    u.terms.at(g) = x;
    return u;
}

SkewRingElement skew_add(const AlgebraAction& a, const SkewRingElement& u, const SkewRingElement& w)
{
    SkewRingElement out = skew_zero(a);
    for (std::size_t g = 0; g < out.terms.size(); ++g)
        out.terms[g] = add(a.ring(), u.terms.at(g), w.terms.at(g));
    return out;
}

SkewRingElement skew_mul(const AlgebraAction& a, const SkewRingElement& u, const SkewRingElement& w)
{
    const BlockRing& R = a.ring();
    const Groupoid& G = a.groupoid();
    SkewRingElement out = skew_zero(a);
    for (std::size_t g = 0; g < G.size(); ++g) {
        if (is_zero(u.terms.at(g)))
            continue;
        for (std::size_t h = 0; h < G.size(); ++h) {
            if (!G.composable(g, h) || is_zero(w.terms.at(h)))
                continue;
            const std::size_t gh = G.product(g, h);
            out.terms[gh] =
                add(R, out.terms[gh], mul(R, u.terms[g], apply_beta(a, g, w.terms[h], true)));
        }
    }
    return out;
}

std::string format_skew(const AlgebraAction& a, const SkewRingElement& u)
{
    std::string out;
    for (std::size_t g = 0; g < u.terms.size(); ++g) {
        if (is_zero(u.terms[g]))
            continue;
        if (!out.empty())
            out += " + ";
        out += skew_term(a, g, u.terms[g]);
    }
    return out.empty() ? "0" : out;
}

SkewRingReport verify_skew_ring(const AlgebraAction& a)
{
    const BlockRing& R = a.ring();
    const Groupoid& G = a.groupoid();
    std::vector<SkewRingElement> monomials;
    for (std::size_t g = 0; g < G.size(); ++g)
        for (const auto& x : prime_basis(R, a.support(g))) {
            SkewRingElement m = skew_zero(a);
            m.terms[g] = x;
            monomials.push_back(std::move(m));
        }

    SkewRingReport report;
    report.monomials = monomials.size();
    report.associative = true;
    std::vector<std::vector<SkewRingElement>> products(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = 0; j < monomials.size(); ++j)
            products[i].push_back(skew_mul(a, monomials[i], monomials[j]));
    for (std::size_t i = 0; i < monomials.size() && report.associative; ++i)
        for (std::size_t j = 0; j < monomials.size() && report.associative; ++j)
            for (std::size_t l = 0; l < monomials.size(); ++l) {
                ++report.triples;
                const SkewRingElement left = skew_mul(a, products[i][j], monomials[l]);
                const SkewRingElement right = skew_mul(a, monomials[i], products[j][l]);
                if (left != right) {
                    report.associative = false;
                    report.witness = "(" + format_skew(a, monomials[i]) + ", " +
                                     format_skew(a, monomials[j]) + ", " +
                                     format_skew(a, monomials[l]) + "): (ab)c = " +
                                     format_skew(a, left) + ", a(bc) = " + format_skew(a, right);
                    break;
                }
            }

    report.unital = true;
    const SkewRingElement one = skew_unit(a);
    for (const auto& m : monomials) {
        if (skew_mul(a, one, m) != m || skew_mul(a, m, one) != m) {
            report.unital = false;
            if (report.witness.empty())
                report.witness = "unit law fails on " + format_skew(a, m);
            break;
        }
    }
    return report;
}

} // namespace ggt
