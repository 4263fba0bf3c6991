#include "ggt/groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt {

namespace {

constexpr std::size_t npos = Groupoid::npos;

std::string triple(const Groupoid& g, std::size_t a, std::size_t b, std::size_t c)
{
    return "(" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")";
}

[[noreturn]] void violation(const std::string& axiom, const std::string& witness)
{
    throw Error(ErrorKind::AxiomViolation, "axiom " + axiom + " fails at " + witness);
}

} // namespace

std::optional<std::size_t> Groupoid::find(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Groupoid::index(std::string_view label) const
{
    if (auto i = find(label))
        return *i;
    throw Error(ErrorKind::UnknownLabel, "groupoid has no element '" + std::string(label) + "'");
}

Groupoid validate_groupoid(const RawGroupoid& raw)
{
    Groupoid G;
    if (raw.elements.empty())
        throw Error(ErrorKind::AxiomViolation, "a groupoid is nonempty");
    for (const auto& label : raw.elements) {
        if (!G.index_.emplace(label, G.labels_.size()).second)
            throw Error(ErrorKind::AxiomViolation, "duplicate label '" + label + "'");
        G.labels_.push_back(label);
    }
    const std::size_t n = G.size();
    G.table_.assign(n * n, npos);
    for (const auto& [a, b, c] : raw.products) {
        const std::size_t ia = G.index(a), ib = G.index(b), ic = G.index(c);
        std::size_t& slot = G.table_[ia * n + ib];
        if (slot != npos && slot != ic)
            throw Error(ErrorKind::AxiomViolation,
                        "conflicting products for (" + a + ", " + b + ")");
        slot = ic;
    }

    // (iii): unique right and left units.
    G.source_.assign(n, npos);
    G.target_.assign(n, npos);
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<std::size_t> right, left;
        for (std::size_t x = 0; x < n; ++x) {
            if (G.product(g, x) == g)
                right.push_back(x);
            if (G.product(x, g) == g)
                left.push_back(x);
        }
        if (right.empty() || left.empty())
            throw Error(ErrorKind::MissingIdentity,
                        "no " + std::string(right.empty() ? "d" : "r") + "(" + G.label(g) + ")");
        if (right.size() > 1)
            violation("(iii)", "d(" + G.label(g) + ") is not unique");
        if (left.size() > 1)
            violation("(iii)", "r(" + G.label(g) + ") is not unique");
        G.source_[g] = right.front();
        G.target_[g] = left.front();
    }

    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t hl = G.product(h, l);
                const std::size_t gh = G.product(g, h);
                const std::size_t g_hl = hl == npos ? npos : G.product(g, hl);
                const std::size_t gh_l = gh == npos ? npos : G.product(gh, l);
                // (ii)
                if ((g_hl != npos) != (gh != npos && hl != npos))
                    violation("(ii)", triple(G, g, h, l));
                // (i)
                if ((g_hl != npos) != (gh_l != npos) || g_hl != gh_l)
                    violation("(i)", triple(G, g, h, l));
            }

    // (iv): inverses, derived then compared with any supplied values.
    G.inverse_.assign(n, npos);
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<std::size_t> candidates;
        for (std::size_t x = 0; x < n; ++x)
            if (G.product(x, g) == G.source_[g] && G.product(g, x) == G.target_[g])
                candidates.push_back(x);
        if (candidates.empty())
            throw Error(ErrorKind::MissingInverse, "no inverse for " + G.label(g));
        if (candidates.size() > 1)
            throw Error(ErrorKind::NonUniqueInverse,
                        G.label(g) + " has inverses " + G.label(candidates[0]) + " and " +
                            G.label(candidates[1]));
        G.inverse_[g] = candidates.front();
    }
    for (const auto& [a, b] : raw.inverses) {
        const std::size_t ia = G.index(a), ib = G.index(b);
        if (G.inverse_[ia] != ib)
            violation("(iv)", "supplied inverse " + b + " of " + a + " does not satisfy " + b +
                                  a + " = d(" + a + "), " + a + b + " = r(" + a + ")");
    }

    std::set<std::size_t> ids(G.source_.begin(), G.source_.end());
    G.identities_.assign(ids.begin(), ids.end());

    if (auto bad = find_consequence_violation(G))
        throw Error(ErrorKind::AxiomViolation, *bad);
    return G;
}

std::optional<std::string> find_consequence_violation(const Groupoid& G)
{
    const std::size_t n = G.size();
    auto fail = [&](const std::string& item, const std::string& where) {
        return std::optional<std::string>("consequence " + item + " fails at " + where);
    };
    for (std::size_t g = 0; g < n; ++g) {
        const std::size_t gi = G.inverse(g);
        if (G.source(gi) != G.target(g) || G.target(gi) != G.source(g))
            return fail("(ii)", G.label(g));
        if (G.inverse(gi) != g)
            return fail("(iii)", G.label(g));
    }
    for (std::size_t e : G.identities())
        if (G.source(e) != e || G.target(e) != e || G.inverse(e) != e)
            return fail("(vii)", G.label(e));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const bool defined = G.composable(g, h);
            if (defined != (G.source(g) == G.target(h)))
                return fail("(iv)", G.label(g) + "," + G.label(h));
            if (G.composable(G.inverse(h), G.inverse(g)) != defined)
                return fail("(v)", G.label(g) + "," + G.label(h));
            if (defined) {
                const std::size_t gh = G.product(g, h);
                if (G.inverse(gh) != G.product(G.inverse(h), G.inverse(g)))
                    return fail("(v)", G.label(g) + "," + G.label(h));
                if (G.source(gh) != G.source(h) || G.target(gh) != G.target(g))
                    return fail("(vi)", G.label(g) + "," + G.label(h));
                if (G.is_identity(gh) != (g == G.inverse(h)))
                    return fail("(viii)", G.label(g) + "," + G.label(h));
            }
            bool left_factor = false, right_factor = false;
            for (std::size_t l = 0; l < n; ++l) {
                left_factor = left_factor || G.product(h, l) == g;
                right_factor = right_factor || G.product(l, h) == g;
            }
            if (left_factor != (G.target(g) == G.target(h)))
                return fail("(ix)", G.label(g) + "," + G.label(h));
            if (right_factor != (G.source(g) == G.source(h)))
                return fail("(x)", G.label(g) + "," + G.label(h));
        }
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> composable(const Groupoid& g)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (g.composable(a, b))
                out.emplace_back(a, b);
    return out;
}

bool SubgroupoidSpec::contains(std::size_t g) const
{
    return std::binary_search(members.begin(), members.end(), g);
}

SubgroupoidSpec make_subset(const Groupoid& g, const std::vector<std::string>& labels)
{
    std::set<std::size_t> s;
    for (const auto& l : labels)
        s.insert(g.index(l));
    return SubgroupoidSpec{{s.begin(), s.end()}};
}

SubgroupoidSpec whole(const Groupoid& g)
{
    SubgroupoidSpec h;
    for (std::size_t i = 0; i < g.size(); ++i)
        h.members.push_back(i);
    return h;
}

SubgroupoidSpec identities_only(const Groupoid& g)
{
    return SubgroupoidSpec{g.identities()};
}

std::string format_subset(const Groupoid& g, const SubgroupoidSpec& h)
{
    std::string out = "{";
    for (std::size_t i = 0; i < h.members.size(); ++i) {
        if (i)
            out += ",";
        out += g.label(h.members[i]);
    }
    return out + "}";
}

SubsetVerdict is_subgroupoid(const Groupoid& g, const SubgroupoidSpec& h)
{
    for (std::size_t x : h.members)
        if (x >= g.size())
            throw Error(ErrorKind::UnknownLabel, "subset index out of range");
    if (h.members.empty())
        return {false, "empty subset"};
    for (std::size_t a : h.members) {
        if (!h.contains(g.inverse(a)))
            return {false, "inverse of " + g.label(a) + " missing"};
        for (std::size_t b : h.members)
            if (g.composable(a, b) && !h.contains(g.product(a, b)))
                return {false, "product " + g.label(a) + "*" + g.label(b) + " = " +
                                   g.label(g.product(a, b)) + " missing"};
    }
    return {true, {}};
}

SubsetVerdict is_wide_subgroupoid(const Groupoid& g, const SubgroupoidSpec& h)
{
    auto sub = is_subgroupoid(g, h);
    if (!sub)
        return sub;
    for (std::size_t e : g.identities())
        if (!h.contains(e))
            return {false, "identity " + g.label(e) + " missing (H0 != G0)"};
    return {true, {}};
}

std::vector<SubgroupoidSpec> enumerate_wide_subgroupoids(const Groupoid& g, const Limits& limits)
{
    if (g.size() > limits.max_size)
        throw Error(ErrorKind::SizeBoundExceeded,
                    "groupoid has " + std::to_string(g.size()) + " elements, bound is " +
                        std::to_string(limits.max_size));
    std::vector<std::size_t> rest;
    for (std::size_t x = 0; x < g.size(); ++x)
        if (!g.is_identity(x))
            rest.push_back(x);

    std::vector<SubgroupoidSpec> out;
    const std::uint64_t count = std::uint64_t{1} << rest.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        SubgroupoidSpec h{g.identities()};
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1)
                h.members.push_back(rest[i]);
        std::sort(h.members.begin(), h.members.end());
        if (is_subgroupoid(g, h))
            out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

CosetSpace coset_space(const Groupoid& g, const SubgroupoidSpec& h)
{
    if (auto wide = is_wide_subgroupoid(g, h); !wide)
        throw Error(ErrorKind::NotWide, format_subset(g, h) + ": " + wide.certificate);
    CosetSpace cs;
    cs.subgroupoid = h;
    cs.class_of.assign(g.size(), npos);
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (cs.class_of[a] != npos)
            continue;
        // aH = {ah : r(h) = d(a)}
        std::vector<std::size_t> cls;
        for (std::size_t x : h.members)
            if (g.composable(a, x))
                cls.push_back(g.product(a, x));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        for (std::size_t b : cls) {
            if (cs.class_of[b] != npos)
                throw Error(ErrorKind::AxiomViolation, "cosets overlap at " + g.label(b));
            cs.class_of[b] = cs.classes.size();
        }
        cs.representatives.push_back(a);
        cs.classes.push_back(std::move(cls));
    }
    return cs;
}

std::vector<std::size_t> left_transversal(const Groupoid& g, const SubgroupoidSpec& h)
{
    return coset_space(g, h).representatives;
}

} // namespace ggt
