#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ggt/hom.hpp"
#include "oracles.hpp"
#include "throws.hpp"

namespace ggt {
namespace {

using testing::kind_of;

struct Fix1 {
    fixtures::Instance in = fixtures::fix1();
    Subalgebra k = invariants(*in.action, whole(*in.groupoid));
    Subalgebra r = span_of(in.ring, prime_basis(*in.ring, IdealRef{{0, 1, 2, 3}}));
};

std::vector<std::string> images(const fixtures::Instance& in, const HomRecord& f)
{
    std::vector<std::string> out;
    for (const auto& x : f.images)
        out.push_back(format_element(*in.ring, x));
    return out;
}

/// Every F_p-linear map B -> E_e, kept when unital, multiplicative on all
/// pairs of elements and K-linear on all of K; counted.
std::size_t hom_count_oracle(const Subalgebra& b, const BlockRing& r, const IdealRef& e,
                             const Subalgebra& k)
{
    const auto targets = oracle::elements_on(r, e.support);
    const auto basis = b.basis_elements();
    const auto elems = b.elements();
    const auto kelems = k.elements();
    std::size_t count = 0;
    std::vector<std::size_t> pick(basis.size(), 0);
    for (;;) {
        auto f = [&](const RingElement& x) {
            const Vector c = *b.coordinates(x);
            RingElement y = r.zero();
            for (std::size_t i = 0; i < c.size(); ++i)
                y = add(r, y, scale(r, r.field().from_int(c[i].code), targets[pick[i]]));
            return y;
        };
        bool ok = f(r.one()) == r.unit_of(e);
        for (const auto& x : elems)
            for (const auto& y : elems)
                ok = ok && f(mul(r, x, y)) == mul(r, f(x), f(y));
        for (const auto& c : kelems)
            for (const auto& x : elems)
                ok = ok && f(mul(r, c, x)) == mul(r, c, f(x));
        count += ok;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == targets.size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size())
            return count;
    }
}

TEST(HomSet, InvariantSubalgebraHasOneHomPerIdentity)
{
    Fix1 s;
    for (const char* e : {"e1", "e2"}) {
        const auto hs = hom_set(s.k, s.in.ring, s.in.g(e), s.k);
        ASSERT_EQ(hs.size(), 1u);
        for (std::size_t i = 0; i < s.k.dim(); ++i)
            EXPECT_EQ(hs[0].images[i],
                      mul(*s.in.ring, s.k.basis_element(i), s.in.ring->unit_of(s.in.ring->ideal(s.in.g(e)))));
    }
}

TEST(HomSet, FullRingIntoE2)
{
    Fix1 s;
    const auto hs = hom_set(s.r, s.in.ring, s.in.g("e2"), s.k);
    // Each block of E_{e2} chooses one of the two blocks over its K-block.
    ASSERT_EQ(hs.size(), 4u);
    EXPECT_EQ(images(s.in, hs[0]), (std::vector<std::string>{"v3", "v4", "0", "0"}));
    EXPECT_EQ(images(s.in, hs[3]), (std::vector<std::string>{"0", "0", "v3", "v4"}));
    for (const auto& h : hs)
        EXPECT_TRUE(hom_axioms(h, s.k).pass());
}

TEST(HomSet, CountMatchesOracle)
{
    for (const auto& in : {fixtures::fix1(), fixtures::fix_c2(), fixtures::fix_f4()}) {
        const Subalgebra k = invariants(*in.action, whole(*in.groupoid));
        std::vector<Subalgebra> sources{k};
        for (const auto& h : enumerate_wide_subgroupoids(*in.groupoid))
            sources.push_back(invariants(*in.action, h));
        for (const Subalgebra& b : sources)
            for (std::size_t e : in.groupoid->identities())
                EXPECT_EQ(hom_set(b, in.ring, e, k).size(),
                          hom_count_oracle(b, *in.ring, in.ring->ideal(e), k))
                    << format_subalgebra(b);
    }
}

TEST(HomSet, SizeBound)
{
    const auto in = fixtures::fix2();
    const Subalgebra k = invariants(*in.action, whole(*in.groupoid));
    const Subalgebra r = span_of(in.ring, prime_basis(*in.ring, IdealRef{{0, 1, 2, 3, 4, 5}}));
    Limits tight;
    tight.max_elements = 8;
    EXPECT_EQ(kind_of([&] { hom_set(r, in.ring, in.g("e3"), k, tight); }), ErrorKind::SizeBoundExceeded);
}

TEST(TransportFamily, FullRing)
{
    Fix1 s;
    const auto tf = transport_family(*s.in.action, s.r, s.in.g("e2"));
    ASSERT_EQ(tf.size(), 2u);
    EXPECT_EQ(tf[0].label, "beta_e2");
    EXPECT_EQ(tf[1].label, "beta_g");
    EXPECT_EQ(images(s.in, tf[1]), (std::vector<std::string>{"v3", "v4", "0", "0"}));
    // Distinct translates of K collapse to one map.
    EXPECT_EQ(transport_family(*s.in.action, s.k, s.in.g("e2")).size(), 1u);
}

TEST(StronglyDistinct, Examples)
{
    Fix1 s;
    const auto tf = transport_family(*s.in.action, s.r, s.in.g("e2"));
    EXPECT_TRUE(strongly_distinct(tf[0], tf[1]));

    const DistinctVerdict same = strongly_distinct(tf[0], tf[0]);
    EXPECT_FALSE(same);
    ASSERT_TRUE(same.witness.has_value());
    EXPECT_EQ(idempotent_element(*s.in.ring, *same.witness), s.in.sum({"v3", "v4"}));

    // hom1 and hom2 agree on the v3 block.
    const auto hs = hom_set(s.r, s.in.ring, s.in.g("e2"), s.k);
    const DistinctVerdict partial = strongly_distinct(hs[0], hs[1]);
    EXPECT_FALSE(partial);
    EXPECT_EQ(idempotent_element(*s.in.ring, *partial.witness), s.in.sum({"v3"}));

    const auto into_e1 = hom_set(s.r, s.in.ring, s.in.g("e1"), s.k);
    EXPECT_EQ(kind_of([&] { strongly_distinct(hs[0], into_e1[0]); }), ErrorKind::TargetMismatch);
}

TEST(StronglyDistinct, MatchesIdempotentOracle)
{
    Fix1 s;
    const BlockRing& r = *s.in.ring;
    const auto hs = hom_set(s.r, s.in.ring, s.in.g("e2"), s.k);
    const auto xs = s.r.elements();
    for (const auto& f : hs)
        for (const auto& g : hs) {
            bool distinct = true;
            for (const auto& pi : oracle::elements_on(r, {2, 3})) {
                if (is_zero(pi) || mul(r, pi, pi) != pi)
                    continue;
                bool separated = false;
                for (const auto& x : xs)
                    separated = separated || mul(r, hom_apply(f, x), pi) != mul(r, hom_apply(g, x), pi);
                distinct = distinct && separated;
            }
            EXPECT_EQ(strongly_distinct(f, g).distinct, distinct) << f.label << " " << g.label;
        }
    std::string why;
    EXPECT_FALSE(pairwise_strongly_distinct(hs, {}, &why));
    EXPECT_FALSE(why.empty());
    EXPECT_TRUE(pairwise_strongly_distinct(std::vector<HomRecord>{hs[0], hs[3]}));
}

TEST(HomApply, LinearAndRejectsOutsiders)
{
    Fix1 s;
    const auto hs = hom_set(s.k, s.in.ring, s.in.g("e1"), s.k);
    EXPECT_EQ(hom_apply(hs[0], s.in.sum({"v1", "v3"})), s.in.sum({"v1"}));
    EXPECT_EQ(kind_of([&] { hom_apply(hs[0], s.in.sum({"v1"})); }), ErrorKind::NotAModule);
}

TEST(ComposeBeta, TransportsAlongG)
{
    Fix1 s;
    const auto into_e1 = hom_set(s.r, s.in.ring, s.in.g("e1"), s.k);
    const HomRecord moved = compose_beta(*s.in.action, s.in.g("g"), into_e1[0]);
    EXPECT_EQ(moved.identity, s.in.g("e2"));
    for (std::size_t i = 0; i < moved.images.size(); ++i)
        EXPECT_EQ(moved.images[i], apply_beta(*s.in.action, s.in.g("g"), into_e1[0].images[i]));
    EXPECT_TRUE(hom_axioms(moved, s.k).pass());
}

TEST(HomGSet, TransportFamiliesFormAGSet)
{
    Fix1 s;
    std::vector<HomRecord> v;
    for (std::size_t e : s.in.groupoid->identities())
        for (auto& f : transport_family(*s.in.action, s.r, e))
            v.push_back(f);
    // Labels must be distinct across fibers.
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i].label = "phi" + std::to_string(i);
    const HomGSet vg = hom_gset(*s.in.action, v);
    ASSERT_TRUE(vg.valid()) << vg.failure;
    EXPECT_EQ(vg.gset->size(), 4u);

    // Dropping one point breaks closure under xi.
    v.pop_back();
    const HomGSet broken = hom_gset(*s.in.action, v);
    EXPECT_FALSE(broken.valid());
    EXPECT_FALSE(broken.failure.empty());
}

} // namespace
} // namespace ggt
