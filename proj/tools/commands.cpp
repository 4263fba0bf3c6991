#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ggt/error.hpp"
#include "ggt/galois.hpp"
#include "ggt/mapalg.hpp"
#include "problem.hpp"

namespace ggt::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    explicit Timer(Report& r) : report_(r) {}

    template <class F>
    auto run(const std::string& stage, F&& f)
    {
        const auto start = Clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(stage, start);
        } else {
            auto out = f();
            record(stage, start);
            return out;
        }
    }

private:
    void record(const std::string& stage, Clock::time_point start)
    {
        const std::chrono::duration<double, std::milli> d = Clock::now() - start;
        report_.timings.emplace_back(stage, d.count());
    }

    Report& report_;
};

json element_list(const BlockRing& r, const std::vector<RingElement>& xs)
{
    json out = json::array();
    for (const auto& x : xs)
        out.push_back(format_element(r, x));
    return out;
}

json subalgebra_json(const Subalgebra& t, const Limits& limits)
{
    json out;
    out["basis"] = element_list(t.ambient(), t.basis_elements());
    out["dimension"] = t.dim();
    if (t.cardinality() <= limits.max_elements)
        out["elements"] = element_list(t.ambient(), t.elements(limits));
    return out;
}

void cmd_check(const std::string& path, Report& rep)
{
    ProblemFile file = load_problem(path);
    Problem p;
    p.file = file;
    auto stage = [&](const std::string& name, const std::function<void()>& f) {
        try {
            f();
            rep.checks.add(name, true);
            return true;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownLabel ||
                e.kind() == ErrorKind::UnknownPoint)
                throw;
            rep.checks.add(name, false, std::string(to_string(e.kind())) + ": " + e.witness());
            return false;
        }
    };
    if (!stage("field", [&] { (void)make_field(file.p, file.k, file.modulus); }))
        return;
    if (!stage("groupoid axioms", [&] {
            p.groupoid = std::make_shared<const Groupoid>(validate_groupoid(file.groupoid));
        }))
        return;
    const auto consequence = find_consequence_violation(*p.groupoid);
    rep.checks.add("groupoid consequences", !consequence, consequence.value_or(""));
    for (const auto& [name, members] : file.subgroupoids)
        stage("subgroupoid " + name, [&, &members = members] {
            const SubsetVerdict v = is_subgroupoid(*p.groupoid, make_subset(*p.groupoid, members));
            if (!v)
                throw Error(ErrorKind::NotSubgroupoid, v.certificate);
        });
    for (const auto& [name, entry] : file.gsets)
        stage("G-set " + name, [&, &name = name] { (void)named_gset(p, name); });
    if (!stage("ring", [&] {
            p.ring = std::make_shared<const BlockRing>(make_block_ring(
                p.groupoid, make_field(file.p, file.k, file.modulus), file.blocks, file.ideals));
        }))
        return;
    if (!stage("action axioms", [&] {
            p.action = std::make_shared<const AlgebraAction>(validate_action(p.ring, file.action));
        }))
        return;
    for (const auto& [name, gens] : file.subalgebras)
        stage("subalgebra " + name, [&, &name = name] { (void)named_subalgebra(p, name); });
}

void cmd_galois(const Problem& p, const Options& o, Report& rep, Timer& timer)
{
    const AlgebraAction& a = *p.action;
    const BlockRing& R = *p.ring;
    const Subalgebra k = timer.run("invariants", [&] { return invariants(a, whole(*p.groupoid), o.limits); });
    rep.data["invariants"] = subalgebra_json(k, o.limits);

    const auto coords = timer.run("coordinates", [&] { return find_galois_coordinates(a); });
    rep.checks.add("Galois coordinates found", coords.has_value(),
                   coords ? "strategy " + std::to_string(coords->strategy) : "");
    if (!coords)
        return;
    json pairs = json::array();
    for (const auto& [x, y] : coords->pairs)
        pairs.push_back({format_element(R, x), format_element(R, y)});
    rep.data["coordinates"] = pairs;
    const auto failure = galois_coordinate_failure(a, *coords);
    rep.checks.add("coordinate identity", !failure, failure.value_or(""));
    rep.checks.append(trace_checks(a, k, o.limits), "");

    timer.run("phi", [&] {
        const MapAlgebra m = build_mapalg(std::make_shared<const GSet>(regular_gset(p.groupoid)),
                                          p.action);
        const Subalgebra ax = compute_AX(m, o.limits);
        const Groupoid& G = *p.groupoid;
        for (std::size_t g = 0; g < G.size(); ++g) {
            const PhiVerdict v = phi_iso_check(a, g, ax, rho_family(m, ax, G.target(g)), k);
            rep.checks.add("phi_" + G.label(g) + " on A(regular) isomorphism", v.bijective(),
                           "rank " + std::to_string(v.rank) + " of " +
                               std::to_string(v.domain_dim));
        }
    });
}

void cmd_subgroupoids(const Problem& p, const Options& o, Report& rep)
{
    const Groupoid& G = *p.groupoid;
    json rows = json::array();
    for (const auto& h : enumerate_wide_subgroupoids(G, o.limits)) {
        const SubsetVerdict v = is_wide_subgroupoid(G, h);
        rep.checks.add("wide " + format_subset(G, h), v.holds, v.certificate);
        rows.push_back(format_subset(G, h));
    }
    rep.data["subgroupoids"] = rows;
}

void cmd_invariants(const Problem& p, const Options& o, Report& rep)
{
    const Groupoid& G = *p.groupoid;
    const SubgroupoidSpec h = named_subgroupoid(p, o.sub);
    const SubsetVerdict sv = is_subgroupoid(G, h);
    rep.checks.add("subgroupoid " + format_subset(G, h), sv.holds, sv.certificate);
    const Subalgebra t = invariants(*p.action, h, o.limits);
    rep.data["subgroupoid"] = format_subset(G, h);
    rep.data["invariants"] = subalgebra_json(t, o.limits);
    if (p.ring->cardinality() <= o.limits.max_elements) {
        auto brute = invariants_brute_force(*p.action, h, o.limits);
        auto structural = t.elements(o.limits);
        std::sort(brute.begin(), brute.end());
        std::sort(structural.begin(), structural.end());
        rep.checks.add("orbit analysis = brute force", brute == structural,
                       std::to_string(structural.size()) + " vs " + std::to_string(brute.size()));
    }
}

void cmd_faithful(const Problem& p, const Options& o, Report& rep)
{
    const Groupoid& G = *p.groupoid;
    const Subalgebra k = invariants(*p.action, whole(G), o.limits);
    json rows = json::array();
    for (std::size_t g = 0; g < G.size(); ++g) {
        const FaithfulVerdict v = is_faithful_ideal(k, p.action->support(g));
        const bool criterion = lemma61_criterion(G, g);
        const std::string witness = v ? "" : format_element(*p.ring, *v.witness) + " annihilates it";
        rep.checks.add("E_" + G.label(g) + " faithful over K", v.faithful, witness);
        rep.checks.add("component criterion agrees at " + G.label(g), criterion == v.faithful,
                       std::string("criterion ") + (criterion ? "true" : "false") +
                           ", direct " + (v.faithful ? "true" : "false"));
        rows.push_back({{"g", G.label(g)}, {"faithful", v.faithful}, {"criterion", criterion}});
    }
    rep.data["rows"] = rows;
}

void cmd_skew(const Problem& p, Report& rep)
{
    const SkewRingReport s = verify_skew_ring(*p.action);
    rep.checks.add("associative", s.associative, s.associative ? "" : s.witness);
    rep.checks.add("two-sided unit", s.unital, s.unital ? "" : s.witness);
    rep.data["monomials"] = s.monomials;
    rep.data["triples"] = s.triples;
}

void cmd_grothendieck(const Problem& p, const Options& o, Report& rep)
{
    if (o.gset.empty() == o.sub.empty())
        throw Error(ErrorKind::ParseError, "grothendieck needs exactly one of --gset and --sub");
    if (!o.gset.empty()) {
        rep.data["gset"] = o.gset;
        rep.checks = grothendieck_check(p.action, named_gset(p, o.gset), o.limits);
    } else {
        const Subalgebra b = named_subalgebra(p, o.sub, o.limits);
        rep.data["subalgebra"] = subalgebra_json(b, o.limits);
        rep.checks = grothendieck_check(p.action, b, o.limits);
    }
}

void cmd_correspondence(const Problem& p, const Options& o, Report& rep)
{
    const Groupoid& G = *p.groupoid;
    const CorrespondenceTable t = correspondence(p.action, o.limits);
    json rows = json::array();
    for (const auto& row : t.rows)
        rows.push_back({{"H", format_subset(G, row.h)},
                        {"T", format_subalgebra(row.t)},
                        {"H_T", format_subset(G, row.h_of_t)},
                        {"separable", row.separable},
                        {"beta_strong", row.beta_strong},
                        {"r_split", row.r_split}});
    rep.data["rows"] = rows;
    json sss = json::array();
    for (const auto& s : t.sss)
        sss.push_back(format_subalgebra(s));
    rep.data["separable_strong"] = sss;
    rep.checks = t.checks;
}

Status status_of(const CheckReport& c) { return c.pass() ? Status::Pass : Status::Fail; }

} // namespace

std::string to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::HypothesisFailure:
        return "hypothesis-failure";
    case Status::InvalidInput:
        return "invalid-input";
    }
    return "fail";
}

int exit_code(Status s)
{
    switch (s) {
    case Status::Pass:
        return 0;
    case Status::InvalidInput:
        return 2;
    default:
        return 1;
    }
}

Report run_command(const std::string& command, const std::string& path, const Options& o)
{
    Report rep;
    rep.command = command;
    Timer timer(rep);
    static const std::set<std::string> known = {"check",    "galois", "subgroupoids",
                                                "invariants", "faithful", "skew",
                                                "grothendieck", "correspondence"};
    try {
        if (!known.count(command))
            throw Error(ErrorKind::ParseError, "unknown command " + command);
        if (command == "check") {
            timer.run("check", [&] { cmd_check(path, rep); });
            rep.status = status_of(rep.checks);
            return rep;
        }
        const Problem p = timer.run("load", [&] { return build_problem(load_problem(path)); });
        timer.run("run", [&] {
            if (command == "galois")
                cmd_galois(p, o, rep, timer);
            else if (command == "subgroupoids")
                cmd_subgroupoids(p, o, rep);
            else if (command == "invariants")
                cmd_invariants(p, o, rep);
            else if (command == "faithful")
                cmd_faithful(p, o, rep);
            else if (command == "skew")
                cmd_skew(p, rep);
            else if (command == "grothendieck")
                cmd_grothendieck(p, o, rep);
            else
                cmd_correspondence(p, o, rep);
        });
        rep.status = status_of(rep.checks);
    } catch (const Error& e) {
        const std::string detail = std::string(to_string(e.kind())) + ": " + e.witness();
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownLabel:
        case ErrorKind::UnknownPoint:
            rep.status = Status::InvalidInput;
            rep.checks.add("input", false, detail);
            break;
        case ErrorKind::HypothesisFailure:
            rep.status = Status::HypothesisFailure;
            rep.checks.add("hypotheses", false, e.witness());
            break;
        default:
            rep.status = Status::Fail;
            rep.checks.add("error", false, detail);
        }
    }
    return rep;
}

json to_json(const Report& r, bool timings)
{
    json out;
    out["command"] = r.command;
    out["status"] = to_string(r.status);
    json checks = json::array();
    for (const auto& c : r.checks.checks) {
        json row = {{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}};
        if (!c.detail.empty())
            row["witness"] = c.detail;
        checks.push_back(std::move(row));
    }
    out["checks"] = checks;
    out["data"] = r.data;
    if (timings) {
        json t = json::object();
        for (const auto& [stage, ms] : r.timings)
            t[stage] = ms;
        out["timings"] = t;
    }
    return out;
}

std::string to_text(const Report& r, bool timings)
{
    std::ostringstream os;
    os << r.command << ": " << to_string(r.status) << "\n";
    for (const auto& c : r.checks.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << "\n";
    }
    for (const auto& [key, value] : r.data.items())
        os << "  " << key << ": " << value.dump() << "\n";
    if (timings)
        for (const auto& [stage, ms] : r.timings)
            os << "  time " << stage << ": " << ms << " ms\n";
    return os.str();
}

} // namespace ggt::cli
