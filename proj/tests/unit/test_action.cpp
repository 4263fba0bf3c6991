#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ggt/action.hpp"
#include "oracles.hpp"
#include "throws.hpp"

namespace ggt {
namespace {

using testing::kind_of;

std::string fmt(const fixtures::Instance& in, const RingElement& x)
{
    return format_element(*in.ring, x);
}

/// R^{beta_H} by its definition: beta_h(r 1_{h^-1}) = r 1_h for h in H.
std::set<RingElement> invariants_oracle(const AlgebraAction& a, const SubgroupoidSpec& h)
{
    const BlockRing& r = a.ring();
    std::set<RingElement> out;
    for (const auto& x : oracle::ring_elements(r)) {
        bool fixed = true;
        for (std::size_t g : h.members)
            if (oracle::beta(a, g, x) != oracle::restrict_to(r, x, a.support(g)))
                fixed = false;
        if (fixed)
            out.insert(x);
    }
    return out;
}

std::set<RingElement> as_set(const Subalgebra& t)
{
    const auto xs = t.elements();
    return {xs.begin(), xs.end()};
}

/// FIX-1 with beta_{gi} no longer inverse to beta_g.
AlgebraAction broken_fix1(const fixtures::Instance& in)
{
    ActionTables t = in.action->tables();
    const std::size_t gi = in.g("gi");
    t.sigma[gi][in.v("v3")] = in.v("v2");
    t.sigma[gi][in.v("v4")] = in.v("v1");
    return unchecked_action(in.ring, t);
}

TEST(ValidateAction, Fixtures)
{
    const auto in1 = fixtures::fix1();
    EXPECT_EQ(in1.action->sigma(in1.g("g"), in1.v("v1")), in1.v("v3"));
    EXPECT_EQ(in1.action->sigma(in1.g("gi"), in1.v("v4")), in1.v("v2"));
    const auto in2 = fixtures::fix2();
    EXPECT_EQ(in2.action->sigma(in2.g("h"), in2.v("v5")), in2.v("v6"));
    const auto f4 = fixtures::fix_f4();
    EXPECT_EQ(f4.action->frob(f4.g("frob"), f4.v("u")), 1u);
}

TEST(ValidateAction, Rejections)
{
    RawAction not_injective;
    not_injective.maps["g"].sigma = {{"v1", "v4"}, {"v2", "v4"}};
    EXPECT_EQ(kind_of([&] { fixtures::finish(fixtures::arrow_groupoid(), prime_field(2),
                                             {"v1", "v2", "v3", "v4"},
                                             {{"e1", {"v1", "v2"}}, {"e2", {"v3", "v4"}}},
                                             not_injective); }),
              ErrorKind::NotBijective);

    const auto in = fixtures::fix1();
    EXPECT_EQ(kind_of([&] { validate_action(in.ring, broken_fix1(in).tables()); }),
              ErrorKind::CompositionFailure);

    ActionTables moved = in.action->tables();
    moved.sigma[in.g("e1")][in.v("v1")] = in.v("v2");
    moved.sigma[in.g("e1")][in.v("v2")] = in.v("v1");
    EXPECT_EQ(kind_of([&] { validate_action(in.ring, moved); }), ErrorKind::IdentityNotTrivial);

    RawAction outside;
    outside.maps["g"].sigma = {{"v1", "v1"}, {"v2", "v4"}};
    EXPECT_EQ(kind_of([&] { validate_action(in.ring, outside); }), ErrorKind::SupportMismatch);

    RawAction missing;
    EXPECT_EQ(kind_of([&] { validate_action(in.ring, missing); }), ErrorKind::SupportMismatch);

    const auto f4 = fixtures::fix_f4();
    RawAction big;
    big.maps["frob"].sigma = {{"u", "u"}};
    big.maps["frob"].frob = {{"u", 2}};
    EXPECT_EQ(kind_of([&] { validate_action(f4.ring, big); }), ErrorKind::ExponentOutOfRange);
}

TEST(ApplyBeta, Examples)
{
    const auto in = fixtures::fix1();
    const std::size_t g = in.g("g");
    EXPECT_EQ(fmt(in, apply_beta(*in.action, g, in.sum({"v1"}))), "v3");
    const RingElement x = in.sum({"v1", "v2"});
    EXPECT_EQ(apply_beta(*in.action, in.g("e1"), x), x);
    EXPECT_EQ(fmt(in, apply_beta(*in.action, g, in.ring->one())), "v3+v4");
    EXPECT_EQ(kind_of([&] { apply_beta(*in.action, g, in.ring->one(), false); }),
              ErrorKind::SupportViolation);

    const auto f4 = fixtures::fix_f4();
    const FieldSpec& f = f4.ring->field();
    RingElement t = f4.ring->zero();
    t.coords[0] = f.generator();
    EXPECT_EQ(apply_beta(*f4.action, f4.g("frob"), t).coords[0], f.mul(f.generator(), f.generator()));
}

TEST(ApplyBeta, MatchesTableOracle)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()})
        for (std::size_t g = 0; g < in.groupoid->size(); ++g)
            for (const auto& x : oracle::ring_elements(*in.ring))
                EXPECT_EQ(apply_beta(*in.action, g, x), oracle::beta(*in.action, g, x));
}

TEST(ApplyBeta, IsARingIsomorphismAndComposes)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_f4()}) {
        const AlgebraAction& a = *in.action;
        const BlockRing& r = *in.ring;
        const Groupoid& G = *in.groupoid;
        const auto xs = oracle::ring_elements(r);
        for (std::size_t g = 0; g < G.size(); ++g) {
            const IdealRef dom = a.support(G.inverse(g));
            EXPECT_EQ(apply_beta(a, g, r.unit_of(dom)), r.unit_of(a.support(g)));
            for (const auto& x : xs)
                for (const auto& y : xs) {
                    EXPECT_EQ(apply_beta(a, g, mul(r, x, y)),
                              mul(r, apply_beta(a, g, x), apply_beta(a, g, y)));
                    EXPECT_EQ(apply_beta(a, g, add(r, x, y)),
                              add(r, apply_beta(a, g, x), apply_beta(a, g, y)));
                }
        }
        for (auto [g, h] : composable(G))
            for (const auto& x : xs) {
                const RingElement xh = oracle::restrict_to(r, x, a.support(G.inverse(h)));
                EXPECT_EQ(apply_beta(a, g, apply_beta(a, h, xh)), apply_beta(a, G.product(g, h), xh));
            }
    }
}

TEST(Invariants, Examples)
{
    const auto in1 = fixtures::fix1();
    const Subalgebra k1 = invariants(*in1.action, whole(*in1.groupoid));
    EXPECT_EQ(format_subalgebra(k1), "span{v1+v3, v2+v4}");
    EXPECT_EQ(k1.cardinality(), 4u);
    EXPECT_EQ(invariants(*in1.action, identities_only(*in1.groupoid)).cardinality(), 16u);

    const auto in2 = fixtures::fix2();
    EXPECT_EQ(format_subalgebra(invariants(*in2.action, whole(*in2.groupoid))),
              "span{v1+v3, v2+v4, v5+v6}");
    EXPECT_EQ(kind_of([&] { invariants(*in1.action, make_subset(*in1.groupoid, {"e1", "g"})); }),
              ErrorKind::NotSubgroupoid);

    const auto f4 = fixtures::fix_f4();
    const Subalgebra k = invariants(*f4.action, whole(*f4.groupoid));
    EXPECT_EQ(k.cardinality(), 2u);
    EXPECT_TRUE(k.contains(f4.ring->one()));
}

TEST(Invariants, StructuralEqualsBruteForce)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const AlgebraAction& a = *in.action;
        for (const auto& h : enumerate_wide_subgroupoids(*in.groupoid)) {
            const Subalgebra s = invariants(a, h);
            const auto brute = invariants_brute_force(a, h);
            EXPECT_EQ(as_set(s), std::set<RingElement>(brute.begin(), brute.end()));
            EXPECT_EQ(as_set(s), invariants_oracle(a, h));
            EXPECT_TRUE(is_unital_subring(s));
        }
    }
}

TEST(Trace, Examples)
{
    const auto in = fixtures::fix1();
    EXPECT_EQ(fmt(in, trace(*in.action, in.sum({"v1"}))), "v1+v3");
    EXPECT_EQ(fmt(in, trace(*in.action, in.sum({"v3"}))), "v1+v3");
    EXPECT_EQ(trace(*in.action, in.ring->zero()), in.ring->zero());
}

TEST(Trace, LandsInInvariants)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const Subalgebra k = invariants(*in.action, whole(*in.groupoid));
        for (const auto& x : oracle::ring_elements(*in.ring)) {
            RingElement sum = in.ring->zero();
            for (std::size_t g = 0; g < in.groupoid->size(); ++g)
                sum = add(*in.ring, sum, oracle::beta(*in.action, g, x));
            EXPECT_EQ(trace(*in.action, x), sum);
            EXPECT_TRUE(k.contains(sum));
        }
    }
}

TEST(GaloisCoordinates, BlockIdempotentsOnFixtures)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2()}) {
        const auto c = find_galois_coordinates(*in.action);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->strategy, 1);
        ASSERT_EQ(c->pairs.size(), in.ring->size());
        for (std::size_t i = 0; i < in.ring->size(); ++i) {
            EXPECT_EQ(c->pairs[i].first, in.ring->block_unit(i));
            EXPECT_EQ(c->pairs[i].second, in.ring->block_unit(i));
        }
        EXPECT_FALSE(galois_coordinate_failure(*in.action, *c).has_value());
    }
}

/// The coordinate identity by hand: sum_i x_i beta_g(y_i 1_{g^-1}).
RingElement coordinate_sum(const AlgebraAction& a, const GaloisCoordinates& c, std::size_t g)
{
    const BlockRing& r = a.ring();
    RingElement s = r.zero();
    for (const auto& [x, y] : c.pairs)
        s = add(r, s, mul(r, x, oracle::beta(a, g, y)));
    return s;
}

TEST(GaloisCoordinates, FrobeniusNeedsLinearSolve)
{
    const auto in = fixtures::fix_f4();
    const auto c = find_galois_coordinates(*in.action);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->strategy, 2);
    EXPECT_EQ(coordinate_sum(*in.action, *c, in.g("e")), in.ring->one());
    EXPECT_EQ(coordinate_sum(*in.action, *c, in.g("frob")), in.ring->zero());

    // Brute force: some pair of single terms (x1,y1),(x2,y2) over F_4 works.
    bool exists = false;
    const auto xs = oracle::ring_elements(*in.ring);
    for (const auto& x1 : xs)
        for (const auto& y1 : xs)
            for (const auto& x2 : xs)
                for (const auto& y2 : xs) {
                    GaloisCoordinates t{{{x1, y1}, {x2, y2}}, 0};
                    if (coordinate_sum(*in.action, t, in.g("e")) == in.ring->one() &&
                        is_zero(coordinate_sum(*in.action, t, in.g("frob"))))
                        exists = true;
                }
    EXPECT_TRUE(exists);
}

TEST(GaloisCoordinates, AbsentWhenABlockIsFixed)
{
    // a fixes w1 and w2 with no twist: beta_a is the identity, so no
    // coordinates can give 0 at a.
    RawAction trivial;
    trivial.maps["a"].sigma = {{"w1", "w1"}, {"w2", "w2"}};
    const auto in = fixtures::finish(fixtures::cyclic2_groupoid("a"), prime_field(2), {"w1", "w2"},
                                     {{"e", {"w1", "w2"}}}, trivial);
    EXPECT_FALSE(find_galois_coordinates(*in.action).has_value());

    GaloisCoordinates blocks{{{in.sum({"w1"}), in.sum({"w1"})}, {in.sum({"w2"}), in.sum({"w2"})}}, 1};
    EXPECT_TRUE(galois_coordinate_failure(*in.action, blocks).has_value());
}

TEST(SkewRing, MultiplicationExamples)
{
    const auto in = fixtures::fix1();
    const AlgebraAction& a = *in.action;
    const SkewRingElement p = skew_mul(a, skew_monomial(a, in.g("g"), in.sum({"v3"})),
                                       skew_monomial(a, in.g("gi"), in.sum({"v1"})));
    EXPECT_EQ(p, skew_monomial(a, in.g("e2"), in.sum({"v3"})));

    const SkewRingElement z = skew_mul(a, skew_monomial(a, in.g("e1"), in.sum({"v1", "v2"})),
                                       skew_monomial(a, in.g("e2"), in.sum({"v3", "v4"})));
    EXPECT_EQ(z, skew_zero(a));
    EXPECT_EQ(format_skew(a, z), "0");
}

TEST(SkewRing, UnitAndDistributivitySampled)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_f4()}) {
        const AlgebraAction& a = *in.action;
        oracle::Gen gen(0x5e3);
        auto sample = [&] {
            SkewRingElement u = skew_zero(a);
            for (std::size_t g = 0; g < u.terms.size(); ++g)
                u.terms[g] = oracle::restrict_to(*in.ring, gen.element(*in.ring), a.support(g));
            return u;
        };
        const SkewRingElement one = skew_unit(a);
        for (int i = 0; i < 50; ++i) {
            const SkewRingElement u = sample(), v = sample(), w = sample();
            EXPECT_EQ(skew_mul(a, one, u), u);
            EXPECT_EQ(skew_mul(a, u, one), u);
            EXPECT_EQ(skew_mul(a, u, skew_add(a, v, w)), skew_add(a, skew_mul(a, u, v), skew_mul(a, u, w)));
            EXPECT_EQ(skew_mul(a, skew_add(a, v, w), u), skew_add(a, skew_mul(a, v, u), skew_mul(a, w, u)));
            EXPECT_EQ(skew_mul(a, skew_mul(a, u, v), w), skew_mul(a, u, skew_mul(a, v, w)));
        }
    }
}

TEST(SkewRing, VerifyOnFixtures)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix2(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const SkewRingReport r = verify_skew_ring(*in.action);
        EXPECT_TRUE(r.pass()) << r.witness;
        EXPECT_EQ(r.triples, r.monomials * r.monomials * r.monomials);
    }
}

TEST(SkewRing, NonComposingActionDetected)
{
    const auto in = fixtures::fix1();
    const SkewRingReport r = verify_skew_ring(broken_fix1(in));
    EXPECT_FALSE(r.pass());
    EXPECT_FALSE(r.witness.empty());
}

} // namespace
} // namespace ggt
