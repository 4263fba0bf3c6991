#pragma once

// Canonical small instances, built directly through the library API so the
// tests do not depend on the problem-file parser.

#include <memory>
#include <string>
#include <vector>

#include "ggt/action.hpp"
#include "ggt/blockring.hpp"
#include "ggt/groupoid.hpp"
#include "ggt/scalar.hpp"

namespace ggt::fixtures {

struct Instance {
    std::shared_ptr<const Groupoid> groupoid;
    std::shared_ptr<const BlockRing> ring;
    std::shared_ptr<const AlgebraAction> action;

    std::size_t g(const std::string& label) const { return groupoid->index(label); }
    std::size_t v(const std::string& label) const { return ring->index(label); }
    /// Sum of the named block idempotents.
    RingElement sum(const std::vector<std::string>& blocks) const
    {
        RingElement x = ring->zero();
        for (const auto& b : blocks)
            x.coords[v(b)] = ring->field().one();
        return x;
    }
};

/// e1 --g--> e2 with inverse gi.
inline RawGroupoid arrow_groupoid()
{
    RawGroupoid raw;
    raw.elements = {"e1", "e2", "g", "gi"};
    raw.products = {{"e1", "e1", "e1"}, {"e2", "e2", "e2"}, {"g", "e1", "g"},
                    {"e2", "g", "g"},   {"gi", "e2", "gi"}, {"e1", "gi", "gi"},
                    {"gi", "g", "e1"},  {"g", "gi", "e2"}};
    raw.inverses = {{"g", "gi"}, {"gi", "g"}};
    return raw;
}

inline Instance finish(RawGroupoid raw, FieldSpec field, const std::vector<std::string>& blocks,
                       const std::map<std::string, std::vector<std::string>>& ideals,
                       const RawAction& action)
{
    Instance in;
    in.groupoid = std::make_shared<const Groupoid>(validate_groupoid(raw));
    in.ring = std::make_shared<const BlockRing>(
        make_block_ring(in.groupoid, std::move(field), blocks, ideals));
    in.action = std::make_shared<const AlgebraAction>(validate_action(in.ring, action));
    return in;
}

inline RawAction fix1_action()
{
    RawAction a;
    a.maps["g"].sigma = {{"v1", "v3"}, {"v2", "v4"}};
    return a;
}

inline Instance fix1()
{
    return finish(arrow_groupoid(), prime_field(2), {"v1", "v2", "v3", "v4"},
                  {{"e1", {"v1", "v2"}}, {"e2", {"v3", "v4"}}}, fix1_action());
}

inline RawGroupoid fix2_groupoid()
{
    RawGroupoid raw = arrow_groupoid();
    // Order e1, e2, g, gi, e3, h.
    raw.elements.push_back("e3");
    raw.elements.push_back("h");
    raw.products.push_back({"e3", "e3", "e3"});
    raw.products.push_back({"h", "e3", "h"});
    raw.products.push_back({"e3", "h", "h"});
    raw.products.push_back({"h", "h", "e3"});
    raw.inverses["h"] = "h";
    return raw;
}

inline Instance fix2()
{
    RawAction a = fix1_action();
    a.maps["h"].sigma = {{"v5", "v6"}, {"v6", "v5"}};
    return finish(fix2_groupoid(), prime_field(2), {"v1", "v2", "v3", "v4", "v5", "v6"},
                  {{"e1", {"v1", "v2"}}, {"e2", {"v3", "v4"}}, {"e3", {"v5", "v6"}}}, a);
}

inline RawGroupoid cyclic2_groupoid(const std::string& a)
{
    RawGroupoid raw;
    raw.elements = {"e", a};
    raw.products = {{"e", "e", "e"}, {"e", a, a}, {a, "e", a}, {a, a, "e"}};
    return raw;
}

inline Instance fix_c2()
{
    RawAction a;
    a.maps["a"].sigma = {{"w1", "w2"}, {"w2", "w1"}};
    return finish(cyclic2_groupoid("a"), prime_field(2), {"w1", "w2"}, {{"e", {"w1", "w2"}}}, a);
}

inline FieldSpec f4()
{
    return make_field(2, 2, {1, 1, 1});
}

inline Instance fix_f4()
{
    RawAction a;
    a.maps["frob"].sigma = {{"u", "u"}};
    a.maps["frob"].frob = {{"u", 1}};
    return finish(cyclic2_groupoid("frob"), f4(), {"u"}, {{"e", {"u"}}}, a);
}

} // namespace ggt::fixtures
