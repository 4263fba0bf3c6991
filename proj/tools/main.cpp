#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Finite groupoid actions on block rings: verification driver"};
    app.require_subcommand(1);

    ggt::cli::Options options;
    std::string path;
    bool json = false;
    bool timings = false;
    std::size_t max_size = options.limits.max_size;
    std::uint64_t max_elements = options.limits.max_elements;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", path, "Problem file (JSON)")->required();
        sub->add_flag("--json", json, "Print the structured report");
        sub->add_flag("--timings", timings, "Include stage timings");
        sub->add_option("--max-size", max_size,
                        "Bound for groupoid, G-set and idempotent enumerations");
        sub->add_option("--max-elements", max_elements, "Bound for explicit element sets");
        return sub;
    };
    common(app.add_subcommand("check", "Validate every section of the file"));
    common(app.add_subcommand("galois", "Galois coordinates, trace image and phi_g"));
    common(app.add_subcommand("subgroupoids", "List the wide subgroupoids"));
    common(app.add_subcommand("invariants", "R^{beta_H} for a named subgroupoid"))
        ->add_option("--sub", options.sub, "Subgroupoid name")
        ->required();
    common(app.add_subcommand("faithful", "Faithfulness of each E_g over K"));
    common(app.add_subcommand("skew", "Skew groupoid ring axioms"));
    auto* groth = common(app.add_subcommand("grothendieck", "Object-level equivalence checks"));
    groth->add_option("--gset", options.gset, "G-set name");
    groth->add_option("--sub", options.sub, "Subalgebra name");
    common(app.add_subcommand("correspondence", "Subgroupoid to subalgebra correspondence"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    if (chosen->count("--max-size")) {
        options.limits.max_size = max_size;
        options.limits.max_idempotent_support = max_size;
    }
    options.limits.max_elements = max_elements;
    const std::string command = chosen->get_name();
    const ggt::cli::Report report = ggt::cli::run_command(command, path, options);
    if (json)
        std::cout << ggt::cli::to_json(report, timings).dump(2) << "\n";
    else
        std::cout << ggt::cli::to_text(report, timings);
    return ggt::cli::exit_code(report.status);
}
