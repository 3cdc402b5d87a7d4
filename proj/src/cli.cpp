#include "pathdeg/cli.hpp"

#include "pathdeg/bounds.hpp"
#include "pathdeg/colorings.hpp"
#include "pathdeg/density.hpp"
#include "pathdeg/errors.hpp"
#include "pathdeg/formats.hpp"
#include "pathdeg/generators.hpp"
#include "pathdeg/reduction.hpp"
#include "pathdeg/wcol.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pathdeg::cli {

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename T>
T need(const std::optional<T>& value, const char* flag)
{
    if (!value)
        throw std::invalid_argument(std::string("missing required option ") + flag);
    return *value;
}

std::size_t need_int_r(const Options& o)
{
    std::string text = need(o.r, "-r");
    Depth depth = Depth::parse(text);
    if (depth.twice() % 2 != 0)
        throw std::invalid_argument("-r must be an integer for this command");
    return depth.twice() / 2;
}

ordered_json summary(const Graph& g)
{
    ordered_json s;
    s["order"] = g.order();
    s["size"] = g.size();
    s["girth"] = girth(g).to_string();
    s["max_degree"] = g.max_degree();
    s["mad"] = mad(g).to_string();
    s["graph6"] = g.order() <= 64 ? ordered_json(encode_graph6(g)) : ordered_json(nullptr);
    return s;
}

// Records a verification and folds it into the report verdict.
void verified(Report& report, const std::string& name, bool passed)
{
    report.body["verification"][name] = passed;
    report.ok = report.ok && passed;
}

Report analyze(const Options& o, const Graph& g)
{
    Report report;
    report.body["graph"] = summary(g);
    auto smooth = smooth_degree_two(g);
    report.body["structure"] = {
        {"components", g.components().size()},
        {"forest", g.is_forest()},
        {"min_degree", g.min_degree()},
        {"strict_ears", strict_ears(g).size()},
        {"branch_vertices", smooth.branch_vertices.size()},
        {"threads", smooth.threads.size()},
        {"max_thread_length", smooth.max_thread_length},
    };
    // Degeneracy is monotone in p; a cycle of length L blocks every p > L.
    ordered_json profile = ordered_json::array();
    std::optional<std::size_t> largest;
    const std::size_t top = o.p.value_or(g.order() + 1);
    for (std::size_t p = 2; p <= std::max<std::size_t>(top, 2); ++p) {
        bool deg = greedy_reduce(g, p, o.exact_ears).residual.graph.empty();
        profile.push_back({{"p", p}, {"degenerate", deg}});
        if (!deg)
            break;
        largest = p;
    }
    report.body["degeneracy"]["profile"] = profile;
    if (g.is_forest() && !o.p)
        report.body["degeneracy"]["largest_p"] = "inf";
    else
        report.body["degeneracy"]["largest_p"] = largest ? ordered_json(*largest) : ordered_json(nullptr);
    return report;
}

Report check(const Options& o, const Graph& g)
{
    const std::size_t p = o.p.value_or(2);
    Report report;
    report.body["graph"] = summary(g);
    DegeneracyOptions opts;
    opts.exact_ears = o.exact_ears;
    opts.use_oracle = o.oracle;
    auto verdict = is_p_path_degenerate(g, p, opts);

    ordered_json result;
    result["p"] = p;
    result["exact_ears"] = o.exact_ears;
    result["decided_by"] = o.oracle ? "greedy+exhaustive" : "greedy";
    result["degenerate"] = verdict.degenerate;
    const Girth gi = girth(g);
    result["girth_at_least_5p_minus_4"] = gi.at_least(5 * p - 4);
    result["steps"] = verdict.certificate.steps.size();

    const std::string cert = serialize_certificate(verdict.certificate);
    if (verdict.degenerate) {
        auto independent = check_certificate_text(g, cert, p, o.exact_ears);
        if (!independent.ok)
            result["certificate_error"] = independent.message;
        report.body["result"] = result;
        report.body["artifacts"]["certificate"] = cert;
        verified(report, "certificate_replays", independent.ok);
    } else {
        const Subgraph& w = *verdict.witness;
        result["witness"] = {{"order", w.graph.order()}, {"size", w.graph.size()}, {"vertices", w.origin}};
        report.body["result"] = result;
        report.body["artifacts"]["prefix"] = cert;
        auto replayed = replay(g, verdict.certificate);
        verified(report, "prefix_reaches_witness", replayed.remaining == w.origin);
        bool inside = true;
        for (const Edge& e : w.graph.edges())
            inside = inside && g.has_edge(w.origin[e.u], w.origin[e.v]);
        verified(report, "witness_is_subgraph", inside);
        verified(report, "witness_irreducible", !w.graph.empty() && !find_p_reduction(w.graph, p, o.exact_ears));
    }
    return report;
}

void coloring_payload(Report& report, const Graph& g, const EdgeColoring& c)
{
    report.body["result"]["colors_used"] = c.color_count();
    report.body["result"]["colors"] = c.colors;
    report.body["artifacts"]["coloring"] = serialize_coloring(g, c);
}

Report color_arb(const Options& o, const Graph& g)
{
    const std::size_t r = need_int_r(o);
    Report report;
    report.body["graph"] = summary(g);
    auto c = arboricity_coloring(g, r);
    report.body["result"]["r"] = r;
    coloring_payload(report, g, c);
    verified(report, "at_most_r_plus_1_colors", c.color_count() <= r + 1);
    verified(report, "cycles_see_min_len_r_plus_1", verify_cycle_rainbow(g, c, r + 1, o.cycle_cap));
    return report;
}

Report color_acyclic(const Options& o, const Graph& g)
{
    const std::size_t r = need_int_r(o);
    Report report;
    report.body["graph"] = summary(g);
    auto c = acyclic_edge_coloring(g, r);
    report.body["result"]["r"] = r;
    coloring_payload(report, g, c);
    verified(report, "proper", verify_proper(g, c));
    verified(report, "at_most_max_delta_r_colors", c.color_count() <= std::max(g.max_degree(), r));
    verified(report, "cycles_see_min_len_r", verify_cycle_rainbow(g, c, r, o.cycle_cap));
    return report;
}

void order_checks(Report& report, const Graph& g, const LinearOrder& pi, const WcolBoundParams& params)
{
    auto profile = wreach_profile(g, pi, params.r);
    ordered_json rows = ordered_json::array();
    bool all = true;
    for (std::size_t x = 0; x <= params.r; ++x) {
        bool ok = within_target(profile[x], x, params);
        all = all && ok;
        rows.push_back({{"x", x}, {"max_wreach", profile[x]}, {"target", wcol_target(x, params)}, {"within", ok}});
    }
    report.body["result"]["profile"] = rows;
    const std::size_t rule = bounds::wcol_girth_rule(params.r, params.q);
    report.body["result"]["wcol_bound"] = rule;
    verified(report, "wreach_within_target", all);
    verified(report, "wcol_within_bound", profile[params.r] <= rule);
}

Report wcol_order(const Options& o, const Graph& g)
{
    WcolBoundParams params(need_int_r(o), need(o.q, "-q"));
    Report report;
    report.body["graph"] = summary(g);
    auto pi = weak_order(g, params);
    report.body["result"] = {{"r", params.r}, {"q", params.q}, {"p", params.ear_length()}, {"order", pi.sequence()}};
    report.body["artifacts"]["order"] = serialize_order(pi);
    order_checks(report, g, pi, params);
    return report;
}

ordered_json bound_json(const bounds::BoundResult& b)
{
    ordered_json j;
    j["threshold"] = b.threshold;
    j["integer_girth_threshold"] = b.integer_girth_threshold;
    j["provenance"] = b.provenance;
    if (b.radius)
        j["radius"] = *b.radius;
    return j;
}

bounds::ExpansionFunction parse_expansion(const std::string& text)
{
    if (text == "exp-sqrt")
        return [](double r) { return std::exp2(std::sqrt(r)); };
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    double value = colon == std::string::npos ? 0.0 : std::stod(text.substr(colon + 1));
    if (kind == "const" && value > 0)
        return [value](double) { return value; };
    if (kind == "pow" && value > 0)
        return [value](double r) { return std::pow(r + 0.5, value); };
    throw std::invalid_argument("expansion must be const:C, pow:E or exp-sqrt");
}

Report bounds_command(const Options& o)
{
    Report report;
    ordered_json in;
    ordered_json out;
    const std::string& sub = o.subcommand;
    in["bound"] = sub;
    if (sub == "polynomial") {
        bounds::ExpansionParams params(o.a.value_or(1.0), o.b.value_or(1.0));
        const std::size_t p = need(o.p, "-p");
        in.update({{"a", params.a}, {"b", params.b}, {"p", p}});
        out = bound_json(bounds::girth_bound_polynomial(params, p));
    } else if (sub == "minor-closed") {
        const double d = need(o.d, "-d");
        const std::size_t p = need(o.p, "-p");
        in.update({{"d", d}, {"p", p}});
        out = bound_json(bounds::girth_bound_minor_closed(d, p));
    } else if (sub == "subexponential") {
        const std::string exp = o.expansion.value_or("const:1");
        const std::size_t p = need(o.p, "-p");
        in.update({{"expansion", exp}, {"p", p}, {"r_max", o.r_max}});
        out = bound_json(bounds::girth_bound_subexponential(parse_expansion(exp), p, o.r_max));
    } else if (sub == "clique") {
        const std::size_t k = need(o.k, "-k");
        const std::size_t p = need(o.p, "-p");
        const double gamma = o.gamma.value_or(0.638);
        const double corr = o.gamma_correction.value_or(0.0);
        in.update({{"k", k}, {"p", p}, {"gamma", gamma}, {"gamma_correction", corr}});
        out = bound_json(bounds::girth_bound_clique(k, p, gamma, corr));
    } else if (sub == "lower-poly") {
        const double b = need(o.b, "-b");
        const std::size_t p = need(o.p, "-p");
        const double alpha = o.alpha.value_or(0.75);
        in.update({{"b", b}, {"p", p}, {"alpha", alpha}});
        out["girth"] = bounds::lower_bound_poly(b, p, alpha);
    } else if (sub == "lower-minor-closed") {
        const double d = need(o.d, "-d");
        const std::size_t p = need(o.p, "-p");
        const double c = need(o.c, "-c");
        const double alpha = o.alpha.value_or(0.75);
        in.update({{"d", d}, {"p", p}, {"c", c}, {"alpha", alpha}});
        out["girth"] = bounds::lower_bound_minor_closed(d, p, c, alpha);
    } else if (sub == "wcol-rule") {
        const std::size_t r = need_int_r(o);
        const std::size_t q = need(o.q, "-q");
        in.update({{"r", r}, {"q", q}});
        out["wcol_bound"] = bounds::wcol_girth_rule(r, q);
    } else if (sub == "lambert") {
        const double t = need(o.t, "-t");
        in["t"] = t;
        const double w = bounds::lambert_w_minus1(t);
        out["w"] = w;
        out["residual"] = std::abs(w * std::exp(w) - t);
    } else if (sub == "beta") {
        const double A = need(o.big_a, "--A");
        const double B = need(o.big_b, "--B");
        in.update({{"A", A}, {"B", B}});
        out["beta"] = bounds::threshold_beta(A, B);
    } else {
        throw std::invalid_argument("unknown bound '" + sub + "'");
    }
    report.body["input"] = in;
    report.body["result"] = out;
    return report;
}

Report verify_command(const Options& o, const Graph& g)
{
    Report report;
    report.body["graph"] = summary(g);
    const std::string text = read_file(need(o.input, "--input"));
    const std::string& sub = o.subcommand;
    report.body["input"]["kind"] = sub;
    if (sub == "coloring") {
        const std::size_t t = need(o.threshold, "--threshold");
        auto c = parse_coloring(g, text);
        report.body["result"]["colors_used"] = c.color_count();
        if (o.require_proper)
            verified(report, "proper", verify_proper(g, c));
        verified(report, "cycles_see_min_len_t", verify_cycle_rainbow(g, c, t, o.cycle_cap));
    } else if (sub == "certificate") {
        const std::size_t p = need(o.p, "-p");
        auto result = check_certificate_text(g, text, p, o.exact_ears);
        report.body["result"]["steps"] = result.steps;
        if (!result.ok)
            report.body["result"]["error"] = result.message;
        verified(report, "certificate_replays", result.ok);
    } else if (sub == "order") {
        WcolBoundParams params(need_int_r(o), need(o.q, "-q"));
        auto pi = parse_order(text);
        if (pi.size() != g.order())
            throw std::invalid_argument("order has " + std::to_string(pi.size()) + " vertices, graph has " +
                                        std::to_string(g.order()));
        order_checks(report, g, pi, params);
    } else {
        throw std::invalid_argument("unknown verify target '" + sub + "'");
    }
    return report;
}

Report density_command(const Options& o, const Graph& g)
{
    Report report;
    report.body["graph"] = summary(g);
    ordered_json out;
    out["max_subgraph_density"] = g.empty() ? ordered_json(nullptr) : ordered_json(max_subgraph_density(g).to_string());
    out["mad"] = mad(g).to_string();
    if (o.r) {
        Depth depth = Depth::parse(*o.r);
        out["depth"] = depth.to_string();
        out["nabla"] = nabla_r_bruteforce(g, depth, o.state_cap).to_string();
    }
    report.body["result"] = out;
    return report;
}

void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& out)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (j.is_array() && std::all_of(j.begin(), j.end(), [](const ordered_json& x) { return x.is_primitive(); })) {
        out << prefix << ":";
        for (const auto& x : j)
            out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
        out << '\n';
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

} // namespace

Graph load_graph(const std::string& spec, std::size_t subdivide)
{
    if (spec.empty())
        throw std::invalid_argument("missing required option --graph");
    Graph g;
    if (spec.starts_with("fixture:"))
        g = generate(GeneratorSpec::fixture(spec.substr(8)));
    else if (spec.starts_with("gen:"))
        g = generate(parse_generator(spec.substr(4)));
    else if (spec.starts_with("g6:"))
        g = parse_graph6(spec.substr(3));
    else {
        std::string text = read_file(spec);
        if (spec.ends_with(".g6") || text.starts_with(">>graph6<<"))
            g = parse_graph6(text);
        else
            g = parse_edge_list(text);
    }
    return subdivide ? pathdeg::subdivide(g, subdivide) : g;
}

Report run(const Options& o)
{
    Report report;
    if (o.command == "bounds") {
        report = bounds_command(o);
    } else {
        Graph g = load_graph(o.graph, o.subdivide);
        if (o.command == "analyze")
            report = analyze(o, g);
        else if (o.command == "check")
            report = check(o, g);
        else if (o.command == "color-arb")
            report = color_arb(o, g);
        else if (o.command == "color-acyclic")
            report = color_acyclic(o, g);
        else if (o.command == "wcol-order")
            report = wcol_order(o, g);
        else if (o.command == "verify")
            report = verify_command(o, g);
        else if (o.command == "density")
            report = density_command(o, g);
        else
            throw std::invalid_argument("unknown command '" + o.command + "'");
    }

    ordered_json doc;
    doc["command"] = o.subcommand.empty() ? o.command : o.command + " " + o.subcommand;
    if (o.command != "bounds")
        doc["source"] = {{"graph", o.graph}, {"subdivide", o.subdivide}};
    for (auto& [key, value] : report.body.items())
        doc[key] = value;
    doc["ok"] = report.ok;
    report.body = std::move(doc);
    return report;
}

std::string render(const Report& report, bool json)
{
    if (json)
        return report.body.dump(2) + "\n";
    std::ostringstream out;
    ordered_json flat = report.body;
    flat.erase("artifacts");
    flatten(flat, "", out);
    if (report.body.contains("artifacts"))
        for (const auto& [name, text] : report.body["artifacts"].items())
            out << "--- " << name << " ---\n" << text.get<std::string>();
    return out.str();
}

ordered_json error_record(const std::string& command, const std::exception& e)
{
    std::string type = "error";
    if (dynamic_cast<const ParseError*>(&e))
        type = "parse_error";
    else if (dynamic_cast<const InvalidGraph*>(&e))
        type = "invalid_graph";
    else if (dynamic_cast<const LimitExceeded*>(&e))
        type = "limit_exceeded";
    else if (dynamic_cast<const NotDegenerate*>(&e))
        type = "not_degenerate";
    else if (dynamic_cast<const std::invalid_argument*>(&e))
        type = "invalid_argument";
    else if (dynamic_cast<const std::domain_error*>(&e))
        type = "domain_error";
    ordered_json j;
    j["command"] = command;
    j["ok"] = false;
    j["error"] = {{"type", type}, {"message", e.what()}};
    return j;
}

} // namespace pathdeg::cli
