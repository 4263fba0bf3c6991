#include "ggt/hom.hpp"

#include <set>

#include "ggt/error.hpp"

namespace ggt {

namespace {

Vector coordinates_or_throw(const Subalgebra& b, const RingElement& x, const char* what)
{
    auto c = b.coordinates(x);
    if (!c)
        throw Error(ErrorKind::NotAModule,
                    std::string(what) + " " + format_element(b.ambient(), x) +
                        " is not in " + format_subalgebra(b));
    return *c;
}

/// sum_i c_i values_i with c over F_p and values in F_q.
Scalar combine_scalar(const FieldSpec& F, const Vector& c, const std::vector<Scalar>& values)
{
    Scalar s = F.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        s = F.add(s, F.mul(c[i], values[i]));
    return s;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, const Limits& limits,
                            const std::string& what)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > limits.max_elements / base)
            throw Error(ErrorKind::SizeBoundExceeded,
                        what + " exceeds " + std::to_string(limits.max_elements) + " candidates");
        out *= base;
    }
    return out;
}

} // namespace

RingElement hom_apply(const HomRecord& f, const RingElement& x)
{
    const BlockRing& R = *f.target;
    const Vector c = coordinates_or_throw(f.source, x, "argument");
    RingElement out = R.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].code != 0)
            out = add(R, out, scale(R, c[i], f.images[i]));
    return out;
}

bool same_map(const HomRecord& f, const HomRecord& g)
{
    return f.identity == g.identity && f.target->same_as(*g.target) && f.source == g.source &&
           f.images == g.images;
}

CheckReport hom_axioms(const HomRecord& f, const Subalgebra& k)
{
    CheckReport rep;
    const BlockRing& R = *f.target;
    const IdealRef e = R.ideal(f.identity);
    const RingElement unit = R.unit_of(e);

    std::string outside;
    for (std::size_t i = 0; i < f.images.size() && outside.empty(); ++i)
        if (mul(R, f.images[i], unit) != f.images[i])
            outside = format_element(R, f.images[i]);
    rep.add("valued in E_" + R.groupoid().label(f.identity), outside.empty(), outside);

    const RingElement one = hom_apply(f, f.source.ambient().one());
    rep.add("unital", one == unit, format_element(R, one));

    std::string bad;
    const auto basis = f.source.basis_elements();
    for (std::size_t i = 0; i < basis.size() && bad.empty(); ++i)
        for (std::size_t j = i; j < basis.size() && bad.empty(); ++j) {
            const RingElement lhs = hom_apply(f, mul(f.source.ambient(), basis[i], basis[j]));
            const RingElement rhs = mul(R, f.images[i], f.images[j]);
            if (lhs != rhs)
                bad = "basis pair " + std::to_string(i) + "," + std::to_string(j);
        }
    rep.add("multiplicative", bad.empty(), bad);

    std::string nonlinear;
    const auto kb = k.basis_elements();
    const auto embedded = embedded_basis(k, f.source.ambient());
    for (std::size_t l = 0; l < kb.size() && nonlinear.empty(); ++l) {
        if (!f.source.contains(embedded[l])) {
            nonlinear = "constant " + format_element(k.ambient(), kb[l]) + " not in source";
            break;
        }
        if (hom_apply(f, embedded[l]) != mul(R, kb[l], unit))
            nonlinear = format_element(k.ambient(), kb[l]);
    }
    rep.add("K-linear", nonlinear.empty(), nonlinear);
    return rep;
}

HomRecord compose_beta(const AlgebraAction& a, std::size_t g, const HomRecord& f)
{
    const Groupoid& G = a.groupoid();
    if (f.identity != G.source(g) || !f.target->same_as(a.ring()))
        throw Error(ErrorKind::TargetMismatch,
                    f.label + " is not valued in E_" + G.label(G.inverse(g)));
    HomRecord out{f.label, f.source, a.ring_ptr(), G.target(g), {}};
    for (const auto& y : f.images)
        out.images.push_back(apply_beta(a, g, y, false));
    return out;
}

DistinctVerdict strongly_distinct(const HomRecord& f, const HomRecord& g, const Limits& limits)
{
    if (f.identity != g.identity || !f.target->same_as(*g.target) || !(f.source == g.source))
        throw Error(ErrorKind::TargetMismatch,
                    f.label + " and " + g.label + " differ in source or target ideal");
    const BlockRing& R = *f.target;
    std::vector<RingElement> diffs;
    for (std::size_t i = 0; i < f.images.size(); ++i)
        diffs.push_back(sub(R, f.images[i], g.images[i]));

    DistinctVerdict out;
    out.distinct = true;
    for (const Idempotent& pi : idempotents_of(R, R.ideal(f.identity), limits)) {
        const RingElement p = idempotent_element(R, pi);
        bool separated = false;
        for (const auto& d : diffs)
            if (!is_zero(mul(R, d, p))) {
                separated = true;
                break;
            }
        if (!separated) {
            // Failing idempotents are the subsets of one maximal set, which
            // is enumerated last.
            out.distinct = false;
            out.witness = pi;
        }
    }
    return out;
}

bool pairwise_strongly_distinct(const std::vector<HomRecord>& v, const Limits& limits,
                                std::string* witness)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const DistinctVerdict d = strongly_distinct(v[i], v[j], limits);
            if (!d) {
                if (witness)
                    *witness = v[i].label + " and " + v[j].label + " agree on " +
                               format_element(*v[i].target,
                                              idempotent_element(*v[i].target, *d.witness));
                return false;
            }
        }
    return true;
}

std::vector<HomRecord> hom_set(const Subalgebra& b, std::shared_ptr<const BlockRing> target,
                               std::size_t identity, const Subalgebra& k, const Limits& limits)
{
    const BlockRing& R = *target;
    const FieldSpec& F = R.field();
    if (!k.ambient().same_as(R))
        throw Error(ErrorKind::TargetMismatch, "K must live in the target ring");
    const BlockRing& S = b.ambient();
    const std::size_t d = b.dim();

    const Vector one = coordinates_or_throw(b, S.one(), "unit");
    std::vector<std::vector<Vector>> products(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            products[i][j] = coordinates_or_throw(
                b, mul(S, b.basis_element(i), b.basis_element(j)), "product");
    const auto kb = k.basis_elements();
    std::vector<Vector> constants;
    for (const auto& c : embedded_basis(k, S))
        constants.push_back(coordinates_or_throw(b, c, "constant"));

    const std::vector<std::size_t> blocks = R.ideal(identity).support;
    const std::uint64_t count = checked_power(F.order(), d, limits, "hom search");

    // Ring maps B -> F_q into each target block.
    std::vector<std::vector<std::vector<Scalar>>> per_block;
    for (std::size_t j : blocks) {
        std::vector<std::vector<Scalar>> found;
        std::vector<Scalar> values(d, F.zero());
        for (std::uint64_t n = 0; n < count; ++n) {
            bool ok = combine_scalar(F, one, values) == F.one();
            for (std::size_t l = 0; ok && l < constants.size(); ++l)
                ok = combine_scalar(F, constants[l], values) == kb[l].coords[j];
            for (std::size_t i = 0; ok && i < d; ++i)
                for (std::size_t i2 = i; ok && i2 < d; ++i2)
                    ok = combine_scalar(F, products[i][i2], values) == F.mul(values[i], values[i2]);
            if (ok)
                found.push_back(values);
            for (auto& s : values) {
                if (++s.code < F.order())
                    break;
                s.code = 0;
            }
        }
        per_block.push_back(std::move(found));
    }

    std::uint64_t total = 1;
    for (const auto& f : per_block) {
        if (!f.empty() && total > limits.max_elements / f.size())
            throw Error(ErrorKind::SizeBoundExceeded, "too many homomorphisms");
        total *= f.size();
    }

    std::vector<HomRecord> out;
    std::vector<std::size_t> pick(blocks.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        HomRecord h{"hom" + std::to_string(n + 1), b, target, identity,
                    std::vector<RingElement>(d, R.zero())};
        for (std::size_t s = 0; s < blocks.size(); ++s)
            for (std::size_t i = 0; i < d; ++i)
                h.images[i].coords[blocks[s]] = per_block[s][pick[s]][i];
        out.push_back(std::move(h));
        for (std::size_t s = blocks.size(); s-- > 0;) {
            if (++pick[s] < per_block[s].size())
                break;
            pick[s] = 0;
        }
    }
    return out;
}

std::vector<HomRecord> transport_family(const AlgebraAction& a, const Subalgebra& b,
                                        std::size_t identity)
{
    if (!b.ambient().same_as(a.ring()))
        throw Error(ErrorKind::TargetMismatch, "subalgebra does not live in the acted ring");
    const Groupoid& G = a.groupoid();
    std::vector<HomRecord> out;
    const auto basis = b.basis_elements();
    for (std::size_t l = 0; l < G.size(); ++l) {
        if (G.target(l) != identity)
            continue;
        HomRecord h{"beta_" + G.label(l), b, a.ring_ptr(), identity, {}};
        for (const auto& x : basis)
            h.images.push_back(apply_beta(a, l, x));
        bool seen = false;
        for (const auto& prev : out)
            if (prev.images == h.images)
                seen = true;
        if (!seen)
            out.push_back(std::move(h));
    }
    return out;
}

HomGSet hom_gset(const AlgebraAction& a, std::vector<HomRecord> homs)
{
    const Groupoid& G = a.groupoid();
    HomGSet out;
    out.points = std::move(homs);
    const std::size_t n = out.points.size();

    GSetTables t;
    std::set<std::string> labels;
    for (const auto& h : out.points) {
        if (!labels.insert(h.label).second) {
            out.failure = "repeated point label " + h.label;
            return out;
        }
        t.labels.push_back(h.label);
        t.fiber.push_back(h.identity);
    }
    t.gamma.assign(G.size(), std::vector<std::size_t>(n, GSet::npos));
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t x = 0; x < n; ++x) {
            if (out.points[x].identity != G.source(g))
                continue;
            const HomRecord moved = compose_beta(a, g, out.points[x]);
            std::size_t match = GSet::npos;
            for (std::size_t y = 0; y < n && match == GSet::npos; ++y)
                if (out.points[y].identity == moved.identity &&
                    out.points[y].images == moved.images)
                    match = y;
            if (match == GSet::npos) {
                out.failure = "beta_" + G.label(g) + " o " + out.points[x].label +
                              " is not among the homomorphisms into E_" +
                              G.label(G.target(g));
                return out;
            }
            t.gamma[g][x] = match;
        }
    try {
        out.gset = std::make_shared<const GSet>(validate_gset(a.ring().groupoid_ptr(), std::move(t)));
    } catch (const Error& e) {
        out.failure = e.what();
    }
    return out;
}

} // namespace ggt
