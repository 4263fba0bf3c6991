#include "ggt/gset.hpp"

#include <algorithm>

#include "ggt/error.hpp"

namespace ggt {

namespace {

constexpr std::size_t npos = GSet::npos;

} // namespace

std::size_t GSet::index(const std::string& label) const
{
    for (std::size_t x = 0; x < size(); ++x)
        if (tables_.labels[x] == label)
            return x;
    throw Error(ErrorKind::UnknownPoint, "no point '" + label + "'");
}

std::vector<std::size_t> GSet::points_over(std::size_t e) const
{
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x)
        if (tables_.fiber[x] == e)
            out.push_back(x);
    return out;
}

GSet validate_gset(std::shared_ptr<const Groupoid> gp, GSetTables t)
{
    const Groupoid& G = *gp;
    const std::size_t n = t.labels.size();
    if (t.fiber.size() != n)
        throw Error(ErrorKind::NotSplit, "fiber table size mismatch");
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < x; ++y)
            if (t.labels[x] == t.labels[y])
                throw Error(ErrorKind::NotSplit, "point '" + t.labels[x] + "' listed twice");
        if (t.fiber[x] >= G.size() || !G.is_identity(t.fiber[x]))
            throw Error(ErrorKind::NotSplit, "point '" + t.labels[x] + "' lies in no fiber X_e");
    }

    if (t.gamma.size() != G.size())
        t.gamma.resize(G.size());
    for (std::size_t g = 0; g < G.size(); ++g) {
        auto& m = t.gamma[g];
        if (m.empty() && G.is_identity(g)) {
            m.assign(n, npos);
            for (std::size_t x = 0; x < n; ++x)
                if (t.fiber[x] == g)
                    m[x] = x;
        }
        if (m.size() != n)
            throw Error(ErrorKind::FiberMismatch, "no point map for " + G.label(g));
    }

    for (std::size_t g = 0; g < G.size(); ++g) {
        const auto& m = t.gamma[g];
        std::vector<bool> hit(n, false);
        std::size_t domain = 0, codomain = 0;
        for (std::size_t x = 0; x < n; ++x) {
            const bool in_domain = t.fiber[x] == G.source(g);
            codomain += t.fiber[x] == G.target(g);
            if (in_domain != (m[x] != npos))
                throw Error(ErrorKind::FiberMismatch,
                            G.label(g) + ": domain must be X_" + G.label(G.source(g)) + " (point " +
                                t.labels[x] + ")");
            if (!in_domain)
                continue;
            ++domain;
            if (m[x] >= n || t.fiber[m[x]] != G.target(g))
                throw Error(ErrorKind::FiberMismatch,
                            G.label(g) + " sends " + t.labels[x] + " outside X_" +
                                G.label(G.target(g)));
            if (hit[m[x]])
                throw Error(ErrorKind::FiberMismatch, G.label(g) + " is not injective");
            hit[m[x]] = true;
        }
        if (domain != codomain)
            throw Error(ErrorKind::FiberMismatch, G.label(g) + " is not surjective");
    }

    for (std::size_t e : G.identities())
        for (std::size_t x = 0; x < n; ++x)
            if (t.fiber[x] == e && t.gamma[e][x] != x)
                throw Error(ErrorKind::NotIdentityOnFiber,
                            "gamma_" + G.label(e) + " moves " + t.labels[x]);

    for (auto [g, h] : composable(G)) {
        const std::size_t gh = G.product(g, h);
        for (std::size_t x = 0; x < n; ++x) {
            if (t.fiber[x] != G.source(h))
                continue;
            if (t.gamma[g][t.gamma[h][x]] != t.gamma[gh][x])
                throw Error(ErrorKind::CompositionFailure,
                            "gamma_" + G.label(g) + " o gamma_" + G.label(h) + " != gamma_" +
                                G.label(gh) + " at " + t.labels[x]);
        }
    }

    GSet out;
    out.groupoid_ = std::move(gp);
    out.tables_ = std::move(t);
    return out;
}

GSet validate_gset(std::shared_ptr<const Groupoid> gp, const RawGSet& raw)
{
    const Groupoid& G = *gp;
    GSetTables t;
    t.labels = raw.carrier;
    auto point = [&](const std::string& label) {
        auto it = std::find(t.labels.begin(), t.labels.end(), label);
        if (it == t.labels.end())
            throw Error(ErrorKind::UnknownPoint, "no point '" + label + "'");
        return static_cast<std::size_t>(it - t.labels.begin());
    };
    for (const auto& [x, e] : raw.fibers)
        point(x);
    for (const auto& x : t.labels) {
        auto it = raw.fibers.find(x);
        if (it == raw.fibers.end())
            throw Error(ErrorKind::NotSplit, "point '" + x + "' lies in no fiber");
        t.fiber.push_back(G.index(it->second));
    }
    t.gamma.assign(G.size(), {});
    for (const auto& [g, m] : raw.gamma) {
        auto& row = t.gamma[G.index(g)];
        row.assign(t.labels.size(), npos);
        for (const auto& [x, y] : m)
            row[point(x)] = point(y);
    }
    return validate_gset(std::move(gp), std::move(t));
}

GSet regular_gset(std::shared_ptr<const Groupoid> gp)
{
    const Groupoid& G = *gp;
    GSetTables t;
    t.labels = G.labels();
    for (std::size_t l = 0; l < G.size(); ++l)
        t.fiber.push_back(G.target(l));
    t.gamma.assign(G.size(), std::vector<std::size_t>(G.size(), npos));
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t l = 0; l < G.size(); ++l)
            if (G.composable(g, l))
                t.gamma[g][l] = G.product(g, l);
    return validate_gset(std::move(gp), std::move(t));
}

GSet quotient_gset(std::shared_ptr<const Groupoid> gp, const SubgroupoidSpec& h)
{
    const Groupoid& G = *gp;
    const CosetSpace cs = coset_space(G, h);
    const std::size_t n = cs.classes.size();
    GSetTables t;
    for (std::size_t c = 0; c < n; ++c) {
        t.labels.push_back(G.label(cs.representatives[c]) + "H");
        t.fiber.push_back(G.target(cs.representatives[c]));
    }
    t.gamma.assign(G.size(), std::vector<std::size_t>(n, npos));
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t image = npos;
            for (std::size_t l : cs.classes[c]) {
                if (!G.composable(g, l))
                    continue;
                const std::size_t cl = cs.class_of[G.product(g, l)];
                if (image != npos && image != cl)
                    throw Error(ErrorKind::FiberMismatch,
                                "gamma_" + G.label(g) + " is not well defined on " + t.labels[c]);
                image = cl;
            }
            t.gamma[g][c] = image;
        }
    return validate_gset(std::move(gp), std::move(t));
}

GMapVerdict check_gmap(const GSet& source, const GSet& target, const GMap& psi)
{
    if (&source.groupoid() != &target.groupoid() &&
        source.groupoid().labels() != target.groupoid().labels())
        throw Error(ErrorKind::CarrierMismatch, "G-sets over different groupoids");
    if (psi.map.size() != source.size())
        throw Error(ErrorKind::CarrierMismatch, "map does not cover the source carrier");
    for (std::size_t y : psi.map)
        if (y >= target.size())
            throw Error(ErrorKind::CarrierMismatch, "map leaves the target carrier");

    const Groupoid& G = source.groupoid();
    GMapVerdict v;
    for (std::size_t x = 0; x < source.size(); ++x)
        if (target.fiber(psi.map[x]) != source.fiber(x)) {
            v.certificate = "fiber failure: " + source.label(x) + " in X_" +
                            G.label(source.fiber(x)) + " maps to " + target.label(psi.map[x]);
            return v;
        }
    for (std::size_t g = 0; g < G.size(); ++g)
        for (std::size_t x = 0; x < source.size(); ++x) {
            const std::size_t gx = source.gamma(g, x);
            if (gx == npos)
                continue;
            if (psi.map[gx] != target.gamma(g, psi.map[x])) {
                v.certificate = "equivariance failure: psi(gamma_" + G.label(g) + "(" +
                                source.label(x) + ")) = " + target.label(psi.map[gx]) +
                                " but gamma_" + G.label(g) + "(psi(" + source.label(x) +
                                ")) = " + target.label(target.gamma(g, psi.map[x]));
                return v;
            }
        }
    v.is_gmap = true;
    std::vector<bool> hit(target.size(), false);
    for (std::size_t y : psi.map)
        hit[y] = true;
    v.is_isomorphism = source.size() == target.size() &&
                       std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    if (!v.is_isomorphism)
        v.certificate = "not bijective";
    return v;
}

namespace {

struct IsoSearch {
    const GSet& a;
    const GSet& b;
    std::vector<std::size_t> assign;
    std::vector<bool> used;
    std::vector<std::size_t> trail;

    bool bind(std::size_t x0, std::size_t y0)
    {
        const Groupoid& G = a.groupoid();
        std::vector<std::pair<std::size_t, std::size_t>> queue{{x0, y0}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            if (assign[x] != npos) {
                if (assign[x] != y)
                    return false;
                continue;
            }
            if (used[y] || a.fiber(x) != b.fiber(y))
                return false;
            assign[x] = y;
            used[y] = true;
            trail.push_back(x);
            for (std::size_t g = 0; g < G.size(); ++g) {
                const std::size_t gx = a.gamma(g, x);
                if (gx != npos)
                    queue.emplace_back(gx, b.gamma(g, y));
            }
        }
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail.size() > mark) {
            used[assign[trail.back()]] = false;
            assign[trail.back()] = npos;
            trail.pop_back();
        }
    }

    bool run()
    {
        auto it = std::find(assign.begin(), assign.end(), npos);
        if (it == assign.end())
            return true;
        const std::size_t x = static_cast<std::size_t>(it - assign.begin());
        for (std::size_t y : b.points_over(a.fiber(x))) {
            if (used[y])
                continue;
            const std::size_t mark = trail.size();
            if (bind(x, y) && run())
                return true;
            undo(mark);
        }
        return false;
    }
};

} // namespace

std::optional<GMap> gset_isomorphic(const GSet& a, const GSet& b, const Limits& limits,
                                    const GMap* seed)
{
    if (a.size() > limits.max_size || b.size() > limits.max_size)
        throw Error(ErrorKind::SizeBoundExceeded, "G-set larger than the configured bound");
    if (seed != nullptr && seed->map.size() == a.size()) {
        if (check_gmap(a, b, *seed).is_isomorphism)
            return *seed;
    }
    if (a.size() != b.size())
        return std::nullopt;
    for (std::size_t e : a.groupoid().identities())
        if (a.points_over(e).size() != b.points_over(e).size())
            return std::nullopt;
    IsoSearch s{a, b, std::vector<std::size_t>(a.size(), npos), std::vector<bool>(b.size(), false), {}};
    if (!s.run())
        return std::nullopt;
    GMap out{s.assign};
    if (!check_gmap(a, b, out).is_isomorphism)
        throw Error(ErrorKind::OracleMismatch, "isomorphism search returned a non-isomorphism");
    return out;
}

} // namespace ggt
