#include <set>

#include <gtest/gtest.h>

#include "describe.hpp"
#include "fixtures.hpp"
#include "ggt/galois.hpp"
#include "oracles.hpp"
#include "throws.hpp"

namespace ggt {
namespace {

using testing::describe;
using testing::kind_of;

std::set<RingElement> as_set(const std::vector<RingElement>& xs)
{
    return {xs.begin(), xs.end()};
}

Subalgebra k_of(const fixtures::Instance& in)
{
    return invariants(*in.action, whole(*in.groupoid));
}

Subalgebra full(const fixtures::Instance& in)
{
    IdealRef all;
    for (std::size_t b = 0; b < in.ring->size(); ++b)
        all.support.push_back(b);
    return span_of(in.ring, prime_basis(*in.ring, all));
}

RingElement restrict_to(const AlgebraAction& a, std::size_t g, const RingElement& x)
{
    return oracle::restrict_to(a.ring(), x, a.support(g));
}

/// Smallest subset of R containing the generators and 1, closed under + and *.
std::set<RingElement> closure_oracle(const BlockRing& r, std::vector<RingElement> gens)
{
    gens.push_back(r.one());
    std::set<RingElement> cur(gens.begin(), gens.end());
    cur.insert(r.zero());
    for (;;) {
        std::set<RingElement> next = cur;
        for (const auto& x : cur)
            for (const auto& y : cur) {
                next.insert(mul(r, x, y));
                next.insert(add(r, x, y));
            }
        if (next.size() == cur.size())
            return cur;
        cur = std::move(next);
    }
}

/// {g : beta_g(t 1_{g^-1}) = t 1_g for every t in T}, over all elements.
std::set<std::size_t> h_oracle(const Subalgebra& t, const AlgebraAction& a)
{
    std::set<std::size_t> out;
    const Groupoid& g = a.groupoid();
    for (std::size_t s = 0; s < g.size(); ++s) {
        bool fixed = true;
        for (const auto& x : t.elements())
            fixed = fixed && oracle::beta(a, s, x) == restrict_to(a, s, x);
        if (fixed)
            out.insert(s);
    }
    return out;
}

/// The beta-strong condition over every element of T and every nonzero
/// idempotent of E_g.
bool strong_oracle(const Subalgebra& t, const AlgebraAction& a)
{
    const Groupoid& g = a.groupoid();
    const BlockRing& r = a.ring();
    const std::set<std::size_t> ht = h_oracle(t, a);
    for (std::size_t s = 0; s < g.size(); ++s)
        for (std::size_t h = 0; h < g.size(); ++h) {
            if (g.target(s) != g.target(h) || ht.count(g.product(g.inverse(s), h)))
                continue;
            for (const auto& e : oracle::elements_on(r, a.support(s).support)) {
                if (is_zero(e) || mul(r, e, e) != e)
                    continue;
                bool separated = false;
                for (const auto& x : t.elements())
                    separated = separated ||
                                mul(r, oracle::beta(a, s, x), e) != mul(r, oracle::beta(a, h, x), e);
                if (!separated)
                    return false;
            }
        }
    return true;
}

/// The idempotents of K that are nonzero and minimal, by enumeration.
std::vector<RingElement> minimal_idempotents(const BlockRing& r, const Subalgebra& k)
{
    std::vector<RingElement> idem, out;
    for (const auto& x : k.elements())
        if (!is_zero(x) && mul(r, x, x) == x)
            idem.push_back(x);
    for (const auto& x : idem) {
        bool minimal = true;
        for (const auto& y : idem)
            minimal = minimal && (y == x || mul(r, x, y) != y);
        if (minimal)
            out.push_back(x);
    }
    return out;
}

/// |T u| = |K u|^rank.
std::vector<std::size_t> rank_oracle(const BlockRing& r, const Subalgebra& t, const Subalgebra& k)
{
    std::vector<std::size_t> out;
    for (const auto& u : minimal_idempotents(r, k)) {
        std::set<RingElement> tu, ku;
        for (const auto& x : t.elements())
            tu.insert(mul(r, x, u));
        for (const auto& x : k.elements())
            ku.insert(mul(r, x, u));
        std::size_t rank = 0, size = 1;
        while (size < tu.size()) {
            size *= ku.size();
            ++rank;
        }
        EXPECT_EQ(size, tu.size());
        out.push_back(rank);
    }
    return out;
}

std::vector<RingElement> indicator(const fixtures::Instance& in, const Subalgebra& t,
                                   const std::string& block)
{
    std::vector<RingElement> f;
    for (const auto& b : t.basis_elements())
        f.push_back(b == in.sum({block}) ? in.ring->one() : in.ring->zero());
    return f;
}

TEST(TraceChecks, GaloisFixtures)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const CheckReport rep = trace_checks(*in.action, k_of(in));
        EXPECT_TRUE(rep.pass()) << describe(rep);
    }
}

TEST(Separability, FullRingOverInvariants)
{
    const auto in = fixtures::fix1();
    const auto s = separability_idempotent(full(in), k_of(in));
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(s->unique);
    ASSERT_EQ(s->terms.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(s->terms[i].first, s->terms[i].second);
        EXPECT_EQ(s->terms[i].first.coords[i], in.ring->field().one());
    }

    const auto self = separability_idempotent(k_of(in), k_of(in));
    ASSERT_TRUE(self.has_value());
    RingElement mu = in.ring->zero();
    for (const auto& [x, y] : self->terms)
        mu = add(*in.ring, mu, mul(*in.ring, x, y));
    EXPECT_EQ(mu, in.ring->one());
}

TEST(Separability, FieldExtensionIsSeparable)
{
    const auto in = fixtures::fix_f4();
    const auto s = separability_idempotent(full(in), k_of(in));
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(s->unique);
}

TEST(Separability, DualNumbersAreNot)
{
    // F_2[x]/(x^2) in the basis (1, x).
    StructureAlgebra d;
    d.dim = 2;
    const Vector one{Scalar{1}, Scalar{0}}, x{Scalar{0}, Scalar{1}}, zero{Scalar{0}, Scalar{0}};
    d.mult = {{one, x}, {x, zero}};
    d.unit = one;
    d.scalars = Matrix{one};
    EXPECT_FALSE(solve_separability(d).has_value());
    const auto nil = nilpotent_witness(d);
    ASSERT_TRUE(nil.has_value());
    EXPECT_EQ(*nil, x);
}

TEST(Separability, StructureConstants)
{
    const auto in = fixtures::fix1();
    const StructureAlgebra s = structure_of(full(in), k_of(in));
    EXPECT_EQ(s.dim, 4u);
    EXPECT_EQ(s.scalars.size(), 2u);
    EXPECT_TRUE(solve_separability(s).has_value());
    EXPECT_FALSE(nilpotent_witness(s).has_value());
    const Subalgebra one = span_of(in.ring, {in.ring->one()});
    EXPECT_EQ(kind_of([&] { structure_of(one, k_of(in)); }), ErrorKind::NotAModule);
}

TEST(RankProfile, Examples)
{
    const auto in = fixtures::fix1();
    const RankProfile r = rank_profile(full(in), k_of(in));
    EXPECT_EQ(r.ranks, (std::vector<std::size_t>{2, 2}));
    EXPECT_TRUE(r.constant());
    EXPECT_TRUE(r.faithful());
    EXPECT_EQ(rank_profile(k_of(in), k_of(in)).ranks, (std::vector<std::size_t>{1, 1}));

    const auto in2 = fixtures::fix2();
    EXPECT_EQ(rank_profile(full(in2), k_of(in2)).ranks, (std::vector<std::size_t>{2, 2, 2}));

    const Subalgebra t = closure(in.ring, {in.sum({"v1"})});
    EXPECT_EQ(kind_of([&] { rank_profile(t, k_of(in)); }), ErrorKind::NotAModule);
}

TEST(RankProfile, MatchesCardinalityOracle)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const Subalgebra k = k_of(in);
        for (const Subalgebra& t : enumerate_k_subalgebras(*in.action, k))
            EXPECT_EQ(rank_profile(t, k).ranks, rank_oracle(*in.ring, t, k)) << format_subalgebra(t);
    }
}

TEST(TriEquivalence, Families)
{
    const auto in = fixtures::fix1();
    const Subalgebra k = k_of(in), r = full(in);
    const TriEquivalence hs = tri_equivalence_check(hom_set(r, in.ring, in.g("e2"), k), k);
    EXPECT_FALSE(hs.strongly_distinct);
    EXPECT_TRUE(hs.agree());

    const auto tf = transport_family(*in.action, r, in.g("e2"));
    const TriEquivalence t = tri_equivalence_check(tf, k);
    EXPECT_TRUE(t.strongly_distinct && t.dual_basis && t.free);

    auto dup = tf;
    dup.push_back(tf[0]);
    dup.back().label = "again";
    const TriEquivalence d = tri_equivalence_check(dup, k);
    EXPECT_FALSE(d.strongly_distinct || d.dual_basis || d.free);
}

TEST(TriEquivalence, AgreesOnEverySubfamily)
{
    const auto in = fixtures::fix1();
    const Subalgebra k = k_of(in);
    for (const Subalgebra& t : enumerate_k_subalgebras(*in.action, k))
        for (std::size_t e : in.groupoid->identities()) {
            const auto hs = hom_set(t, in.ring, e, k);
            for (std::size_t mask = 1; mask < (std::size_t{1} << hs.size()); ++mask) {
                std::vector<HomRecord> v;
                for (std::size_t i = 0; i < hs.size(); ++i)
                    if (mask >> i & 1)
                        v.push_back(hs[i]);
                EXPECT_TRUE(tri_equivalence_check(v, k).agree()) << format_subalgebra(t) << " " << mask;
            }
        }
}

TEST(DualBasis, VerifiedBySubstitution)
{
    const auto in = fixtures::fix1();
    const BlockRing& r = *in.ring;
    const auto tf = transport_family(*in.action, full(in), in.g("e2"));
    const auto db = dual_basis_solve(tf);
    ASSERT_TRUE(db.has_value());
    ASSERT_EQ(db->pairs.size(), tf.size());
    const RingElement unit = r.unit_of(r.ideal(in.g("e2")));
    for (std::size_t u = 0; u < tf.size(); ++u)
        for (std::size_t w = 0; w < tf.size(); ++w) {
            RingElement s = r.zero();
            for (const auto& [x, y] : db->pairs[u])
                s = add(r, s, mul(r, x, hom_apply(tf[w], y)));
            EXPECT_EQ(s, u == w ? unit : r.zero());
        }

    const Subalgebra k = k_of(in);
    EXPECT_TRUE(dual_basis_solve(hom_set(k, in.ring, in.g("e1"), k)).has_value());
    auto dup = tf;
    dup.push_back(tf[1]);
    EXPECT_FALSE(dual_basis_solve(dup).has_value());
    EXPECT_TRUE(freeness_check({}));
}

TEST(DedekindBound, HoldsOnFamilies)
{
    const auto in = fixtures::fix1();
    const Subalgebra k = k_of(in), r = full(in);
    for (std::size_t e : in.groupoid->identities()) {
        for (const auto& v : {hom_set(r, in.ring, e, k), transport_family(*in.action, r, e)}) {
            const CheckReport rep = dedekind_bound_check(v, k);
            EXPECT_TRUE(rep.pass()) << describe(rep);
        }
    }
}

TEST(AssociatedIdempotent, Projections)
{
    const auto in = fixtures::fix1();
    const Subalgebra r = full(in);
    const Subalgebra base = span_of(in.ring, {in.ring->one()});
    for (const char* v : {"v1", "v2", "v3", "v4"}) {
        const AssociatedIdempotent ai = associated_idempotent(r, base, indicator(in, r, v));
        EXPECT_EQ(ai.pi, in.sum({v}));
        EXPECT_TRUE(ai.unique);
    }
    const std::vector<RingElement> zero(r.dim(), in.ring->zero());
    EXPECT_EQ(kind_of([&] { associated_idempotent(r, base, zero); }), ErrorKind::NoSuchIdempotent);
}

TEST(IdempotentFamily, ProjectionsAndDuplicates)
{
    const auto in = fixtures::fix1();
    const Subalgebra r = full(in);
    const Subalgebra base = span_of(in.ring, {in.ring->one()});
    std::vector<std::vector<RingElement>> family;
    for (const char* v : {"v1", "v2", "v3", "v4"})
        family.push_back(indicator(in, r, v));
    const CheckReport rep = idempotent_family_check(r, base, family);
    EXPECT_TRUE(rep.pass()) << describe(rep);

    family.push_back(family[0]);
    EXPECT_FALSE(idempotent_family_check(r, base, family).pass());
}

TEST(HOf, Examples)
{
    const auto in = fixtures::fix1();
    EXPECT_EQ(format_subset(*in.groupoid, h_of(k_of(in), *in.action)), "{e1,e2,g,gi}");
    EXPECT_EQ(format_subset(*in.groupoid, h_of(full(in), *in.action)), "{e1,e2}");

    const auto in2 = fixtures::fix2();
    const Subalgebra t = span_of(in2.ring, {in2.sum({"v1", "v3"}), in2.sum({"v2", "v4"}),
                                            in2.sum({"v5"}), in2.sum({"v6"})});
    EXPECT_EQ(format_subset(*in2.groupoid, h_of(t, *in2.action)), "{e1,e2,g,gi,e3}");
}

TEST(HOf, MatchesOracle)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()})
        for (const Subalgebra& t : enumerate_k_subalgebras(*in.action, k_of(in))) {
            const SubgroupoidSpec h = h_of(t, *in.action);
            const std::set<std::size_t> got(h.members.begin(), h.members.end());
            EXPECT_EQ(got, h_oracle(t, *in.action)) << format_subalgebra(t);
        }
}

TEST(BetaStrong, Examples)
{
    const auto in = fixtures::fix1();
    EXPECT_TRUE(is_beta_strong(k_of(in), *in.action));
    EXPECT_TRUE(is_beta_strong(full(in), *in.action));

    const Subalgebra bad = span_of(in.ring, {in.sum({"v1"}), in.sum({"v3"}), in.sum({"v2", "v4"})});
    const StrongVerdict v = is_beta_strong(bad, *in.action);
    EXPECT_FALSE(v);
    ASSERT_TRUE(v.g && v.h && v.e);
    EXPECT_EQ(in.groupoid->label(*v.g), "e1");
    EXPECT_EQ(in.groupoid->label(*v.h), "gi");
    EXPECT_EQ(idempotent_element(*in.ring, *v.e), in.sum({"v2"}));
}

TEST(BetaStrong, MatchesOracle)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()})
        for (const Subalgebra& t : enumerate_k_subalgebras(*in.action, k_of(in)))
            EXPECT_EQ(is_beta_strong(t, *in.action).strong, strong_oracle(t, *in.action))
                << format_subalgebra(t);
}

TEST(CoordinatesFromSeparability, FullRingAndInvariants)
{
    const auto in = fixtures::fix1();
    const CoordinateFamily r = galois_coords_from_separability(full(in), *in.action);
    EXPECT_TRUE(r.preconditions.pass());
    EXPECT_TRUE(r.claims.pass()) << describe(r.claims);
    EXPECT_EQ(r.v[in.g("e1")], in.sum({"v1", "v2"}));
    EXPECT_TRUE(is_zero(r.v[in.g("g")]));

    // Over K itself v_g = 1_g for every g, so the vanishing claim fails.
    const CoordinateFamily k = galois_coords_from_separability(k_of(in), *in.action);
    EXPECT_TRUE(k.preconditions.pass());
    EXPECT_FALSE(k.claims.pass());
    EXPECT_EQ(k.v[in.g("g")], in.sum({"v3", "v4"}));
}

TEST(FixedSubalgebra, EveryKSubalgebra)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix_c2(), fixtures::fix_f4()})
        for (const Subalgebra& t : enumerate_k_subalgebras(*in.action, k_of(in))) {
            const FixedSubalgebraReport rep = lemma54_check(t, in.action);
            EXPECT_TRUE(rep.checks.pass()) << format_subalgebra(t) << ": " << describe(rep.checks);
            EXPECT_TRUE(rep.separable);
            EXPECT_EQ(rep.beta_strong, rep.fixed_by_h);
        }
    const auto in = fixtures::fix1();
    const Subalgebra bad = span_of(in.ring, {in.sum({"v1"}), in.sum({"v3"}), in.sum({"v2", "v4"})});
    const FixedSubalgebraReport rep = lemma54_check(bad, in.action);
    EXPECT_FALSE(rep.beta_strong);
    EXPECT_FALSE(rep.fixed_by_h);
    EXPECT_TRUE(rep.checks.pass());
}

TEST(EnumerateKSubalgebras, MatchesClosureOracle)
{
    // Over these fixtures R has K-dimension 2 at most per block, so two
    // generators over K reach every K-subalgebra.
    for (const auto& in : {fixtures::fix1(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const BlockRing& r = *in.ring;
        const Subalgebra k = k_of(in);
        std::set<std::set<RingElement>> want;
        const auto xs = oracle::ring_elements(r);
        for (const auto& x : xs)
            for (const auto& y : xs) {
                std::vector<RingElement> gens = k.basis_elements();
                gens.push_back(x);
                gens.push_back(y);
                want.insert(closure_oracle(r, gens));
            }
        std::set<std::set<RingElement>> got;
        const auto ts = enumerate_k_subalgebras(*in.action, k);
        for (const Subalgebra& t : ts)
            got.insert(as_set(t.elements()));
        EXPECT_EQ(got.size(), ts.size());
        EXPECT_EQ(got, want);
    }
    const auto in = fixtures::fix1();
    EXPECT_EQ(enumerate_k_subalgebras(*in.action, k_of(in)).size(), 4u);
}

TEST(Correspondence, GaloisFixtures)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const CorrespondenceTable table = correspondence(in.action);
        EXPECT_TRUE(table.checks.pass()) << describe(table.checks);
        const auto hs = enumerate_wide_subgroupoids(*in.groupoid);
        ASSERT_EQ(table.rows.size(), hs.size());
        EXPECT_EQ(table.sss.size(), hs.size());
        for (const CorrespondenceRow& row : table.rows) {
            EXPECT_EQ(row.h_of_t.members, row.h.members);
            EXPECT_TRUE(row.separable && row.beta_strong && row.r_split);
            EXPECT_EQ(as_set(row.t.elements()), as_set(invariants(*in.action, row.h).elements()));
        }
    }
    const auto in = fixtures::fix1();
    const CorrespondenceTable table = correspondence(in.action);
    EXPECT_EQ(format_subalgebra(table.rows[0].t), "span{v1, v2, v3, v4}");
    EXPECT_EQ(format_subalgebra(table.rows[1].t), "span{v1+v3, v2+v4}");
}

TEST(Correspondence, RequiresGrothendieckHypotheses)
{
    const auto in = fixtures::fix2();
    EXPECT_EQ(kind_of([&] { correspondence(in.action); }), ErrorKind::HypothesisFailure);
}

} // namespace
} // namespace ggt
