#include "pathdeg/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using pathdeg::cli::Options;

void graph_options(CLI::App* app, Options& o)
{
    app->add_option("--graph", o.graph, "path, fixture:NAME, gen:SPEC or g6:STRING")->required();
    app->add_option("--subdivide", o.subdivide, "subdivide every edge k times");
    app->add_option("--cycle-cap", o.cycle_cap, "largest number of cycles to enumerate");
}

void p_option(CLI::App* app, Options& o) { app->add_option("-p", o.p, "ear length"); }

} // namespace

int main(int argc, char** argv)
{
    Options o;
    bool json = false;

    CLI::App app{"p-path degeneracy toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", json, "emit the report as JSON");

    auto* analyze = app.add_subcommand("analyze", "graph summary and degeneracy profile");
    graph_options(analyze, o);
    p_option(analyze, o);
    analyze->add_flag("--exact-ears", o.exact_ears);

    auto* check = app.add_subcommand("check", "decide p-path degeneracy with a certificate or witness");
    graph_options(check, o);
    p_option(check, o);
    check->add_flag("--exact-ears", o.exact_ears, "only ears of length exactly p");
    check->add_flag("--oracle", o.oracle, "also decide by exhaustive search");

    auto* arb = app.add_subcommand("color-arb", "generalized arboricity coloring");
    graph_options(arb, o);
    arb->add_option("-r", o.r)->required();

    auto* acyc = app.add_subcommand("color-acyclic", "generalized acyclic edge coloring");
    graph_options(acyc, o);
    acyc->add_option("-r", o.r)->required();

    auto* wcol = app.add_subcommand("wcol-order", "weak-coloring order from a 2q-reduction");
    graph_options(wcol, o);
    wcol->add_option("-r", o.r)->required();
    wcol->add_option("-q", o.q)->required();

    auto* density = app.add_subcommand("density", "mad and shallow-minor density");
    graph_options(density, o);
    density->add_option("-r", o.r, "depth (half-integers allowed) for the shallow-minor search");
    density->add_option("--state-cap", o.state_cap);

    auto* bounds = app.add_subcommand("bounds", "girth thresholds and numerics");
    bounds->require_subcommand(1);
    for (const char* name : {"polynomial", "minor-closed", "subexponential", "clique", "lower-poly",
                             "lower-minor-closed", "wcol-rule", "lambert", "beta"}) {
        auto* sub = bounds->add_subcommand(name);
        sub->add_option("-p", o.p);
        sub->add_option("-r", o.r);
        sub->add_option("-q", o.q);
        sub->add_option("-a", o.a);
        sub->add_option("-b", o.b);
        sub->add_option("-d", o.d);
        sub->add_option("-k", o.k);
        sub->add_option("-c", o.c);
        sub->add_option("-t", o.t);
        sub->add_option("--alpha", o.alpha);
        sub->add_option("--gamma", o.gamma);
        sub->add_option("--gamma-correction", o.gamma_correction);
        sub->add_option("--A", o.big_a);
        sub->add_option("--B", o.big_b);
        sub->add_option("--expansion", o.expansion, "const:C, pow:E or exp-sqrt");
        sub->add_option("--r-max", o.r_max);
        sub->callback([&o, name] { o.subcommand = name; });
    }

    auto* verify = app.add_subcommand("verify", "re-check a coloring, certificate or order");
    verify->require_subcommand(1);
    for (const char* name : {"coloring", "certificate", "order"}) {
        auto* sub = verify->add_subcommand(name);
        graph_options(sub, o);
        sub->add_option("--input", o.input, "file in the matching line format")->required();
        sub->add_option("-p", o.p);
        sub->add_option("-r", o.r);
        sub->add_option("-q", o.q);
        sub->add_option("--threshold", o.threshold);
        sub->add_flag("--exact-ears", o.exact_ears);
        sub->add_flag("--proper", o.require_proper);
        sub->callback([&o, name] { o.subcommand = name; });
    }

    app.fallthrough();
    bounds->fallthrough();
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    o.command = app.get_subcommands().front()->get_name();

    try {
        auto report = pathdeg::cli::run(o);
        std::cout << pathdeg::cli::render(report, json);
        return report.ok ? 0 : 1;
    } catch (const std::exception& e) {
        auto record = pathdeg::cli::error_record(o.command, e);
        if (json)
            std::cout << record.dump(2) << '\n';
        else
            std::cerr << record.dump() << '\n';
        return 2;
    }
}
