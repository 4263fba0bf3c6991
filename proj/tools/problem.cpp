#include "problem.hpp"

#include <fstream>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt::cli {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& why)
{
    throw Error(ErrorKind::ParseError, where + ": " + why);
}

const json& member(const json& obj, const std::string& key, const std::string& where)
{
    if (!obj.is_object())
        malformed(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        malformed(where, "missing \"" + key + "\"");
    return *it;
}

std::string as_string(const json& v, const std::string& where)
{
    if (!v.is_string())
        malformed(where, "expected a string");
    return v.get<std::string>();
}

std::uint32_t as_uint(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::int64_t{1} << 31)
        malformed(where, "expected a non-negative integer");
    return v.get<std::uint32_t>();
}

std::vector<std::string> string_list(const json& v, const std::string& where)
{
    if (!v.is_array())
        malformed(where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(as_string(x, where));
    return out;
}

std::map<std::string, std::string> string_map(const json& v, const std::string& where)
{
    if (!v.is_object())
        malformed(where, "expected an object of strings");
    std::map<std::string, std::string> out;
    for (const auto& [key, x] : v.items())
        out[key] = as_string(x, where + "." + key);
    return out;
}

struct FieldSection {
    std::uint32_t p = 2, k = 1;
    std::vector<std::uint32_t> modulus;

    bool operator==(const FieldSection&) const = default;
};

FieldSection parse_field(const json& v, const std::string& where)
{
    FieldSection f;
    f.p = as_uint(member(v, "p", where), where + ".p");
    f.k = v.contains("k") ? as_uint(v["k"], where + ".k") : 1;
    if (v.contains("modulus")) {
        if (!v["modulus"].is_array())
            malformed(where + ".modulus", "expected an array of integers");
        for (const auto& c : v["modulus"])
            f.modulus.push_back(as_uint(c, where + ".modulus"));
    }
    return f;
}

GSetEntry parse_gset(const json& v, const std::string& where)
{
    GSetEntry e;
    if (v.is_string()) {
        e.shorthand = v.get<std::string>();
        if (e.shorthand != "regular" && e.shorthand.rfind("quotient:", 0) != 0)
            malformed(where, "unknown shorthand \"" + e.shorthand + "\"");
        return e;
    }
    e.raw.carrier = string_list(member(v, "carrier", where), where + ".carrier");
    e.raw.fibers = string_map(member(v, "fibers", where), where + ".fibers");
    const json& gamma = member(v, "gamma", where);
    if (!gamma.is_object())
        malformed(where + ".gamma", "expected an object");
    for (const auto& [g, m] : gamma.items())
        e.raw.gamma[g] = string_map(m, where + ".gamma." + g);
    return e;
}

template <class F>
void each_entry(const json& doc, const std::string& key, F&& f)
{
    if (!doc.contains(key))
        return;
    const json& section = doc[key];
    if (!section.is_object())
        malformed(key, "expected an object");
    for (const auto& [name, v] : section.items())
        f(name, v, key + "." + name);
}

} // namespace

ProblemFile parse_problem(const json& doc)
{
    if (!doc.is_object())
        malformed("document", "expected an object");
    ProblemFile out;

    const json& ring = member(doc, "ring", "document");
    std::optional<FieldSection> field;
    if (doc.contains("field"))
        field = parse_field(doc["field"], "field");
    if (ring.is_object() && ring.contains("field")) {
        const FieldSection inner = parse_field(ring["field"], "ring.field");
        if (field && !(*field == inner))
            malformed("ring.field", "disagrees with the top-level field");
        field = inner;
    }
    if (!field)
        malformed("document", "missing \"field\"");
    out.p = field->p;
    out.k = field->k;
    out.modulus = field->modulus;

    const json& g = member(doc, "groupoid", "document");
    out.groupoid.elements = string_list(member(g, "elements", "groupoid"), "groupoid.elements");
    const json& products = member(g, "products", "groupoid");
    if (!products.is_array())
        malformed("groupoid.products", "expected an array of triples");
    for (const auto& t : products) {
        const auto triple = string_list(t, "groupoid.products");
        if (triple.size() != 3)
            malformed("groupoid.products", "expected [a, b, ab]");
        out.groupoid.products.push_back({triple[0], triple[1], triple[2]});
    }
    if (g.contains("inverses"))
        out.groupoid.inverses = string_map(g["inverses"], "groupoid.inverses");

    out.blocks = string_list(member(ring, "blocks", "ring"), "ring.blocks");
    const json& ideals = member(ring, "ideals", "ring");
    if (!ideals.is_object())
        malformed("ring.ideals", "expected an object");
    for (const auto& [e, members] : ideals.items())
        out.ideals[e] = string_list(members, "ring.ideals." + e);

    each_entry(doc, "action", [&](const std::string& name, const json& v, const std::string& where) {
        RawBeta beta;
        beta.sigma = string_map(member(v, "sigma", where), where + ".sigma");
        if (v.contains("frob")) {
            if (!v["frob"].is_object())
                malformed(where + ".frob", "expected an object");
            for (const auto& [b, e] : v["frob"].items())
                beta.frob[b] = as_uint(e, where + ".frob." + b);
        }
        out.action.maps[name] = std::move(beta);
    });
    if (!doc.contains("action"))
        malformed("document", "missing \"action\"");

    each_entry(doc, "gsets", [&](const std::string& name, const json& v, const std::string& where) {
        out.gsets[name] = parse_gset(v, where);
    });
    each_entry(doc, "subgroupoids",
               [&](const std::string& name, const json& v, const std::string& where) {
                   out.subgroupoids[name] = string_list(v, where);
               });
    each_entry(doc, "subalgebras",
               [&](const std::string& name, const json& v, const std::string& where) {
                   out.subalgebras[name] = string_list(v, where);
               });
    return out;
}

ProblemFile parse_problem_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed("document", e.what());
    }
    return parse_problem(doc);
}

ProblemFile load_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        malformed(path, "cannot be read");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

Problem build_problem(ProblemFile file)
{
    Problem p;
    p.groupoid = std::make_shared<const Groupoid>(validate_groupoid(file.groupoid));
    p.ring = std::make_shared<const BlockRing>(make_block_ring(
        p.groupoid, make_field(file.p, file.k, file.modulus), file.blocks, file.ideals));
    p.action = std::make_shared<const AlgebraAction>(validate_action(p.ring, file.action));
    p.file = std::move(file);
    return p;
}

SubgroupoidSpec named_subgroupoid(const Problem& p, const std::string& name)
{
    auto it = p.file.subgroupoids.find(name);
    if (it != p.file.subgroupoids.end())
        return make_subset(*p.groupoid, it->second);
    if (name == "G")
        return whole(*p.groupoid);
    if (name == "G0")
        return identities_only(*p.groupoid);
    throw Error(ErrorKind::UnknownLabel, "no subgroupoid named '" + name + "'");
}

std::shared_ptr<const GSet> named_gset(const Problem& p, const std::string& name)
{
    auto it = p.file.gsets.find(name);
    if (it == p.file.gsets.end()) {
        if (name == "regular")
            return std::make_shared<const GSet>(regular_gset(p.groupoid));
        throw Error(ErrorKind::UnknownLabel, "no G-set named '" + name + "'");
    }
    const GSetEntry& e = it->second;
    if (e.shorthand == "regular")
        return std::make_shared<const GSet>(regular_gset(p.groupoid));
    if (!e.shorthand.empty()) {
        const SubgroupoidSpec h = named_subgroupoid(p, e.shorthand.substr(9));
        return std::make_shared<const GSet>(quotient_gset(p.groupoid, h));
    }
    return std::make_shared<const GSet>(validate_gset(p.groupoid, e.raw));
}

Subalgebra named_subalgebra(const Problem& p, const std::string& name, const Limits& limits)
{
    const Subalgebra k = invariants(*p.action, whole(*p.groupoid), limits);
    auto it = p.file.subalgebras.find(name);
    if (it == p.file.subalgebras.end()) {
        if (name == "K")
            return k;
        if (name == "R") {
            IdealRef all;
            for (std::size_t j = 0; j < p.ring->size(); ++j)
                all.support.push_back(j);
            return span_of(p.ring, prime_basis(*p.ring, all));
        }
        throw Error(ErrorKind::UnknownLabel, "no subalgebra named '" + name + "'");
    }
    std::vector<RingElement> gens;
    for (const auto& text : it->second)
        gens.push_back(parse_element(*p.ring, text));
    return k_closure(k, p.ring, gens);
}

} // namespace ggt::cli
