#pragma once

#include "pathdeg/graph.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pathdeg::cli {

/// Everything a command can read. Unset optionals fall back to per-command
/// defaults.
struct Options {
    std::string command;     // analyze, check, color-arb, color-acyclic, wcol-order, bounds, verify, density
    std::string subcommand;  // bounds: polynomial, ...; verify: coloring, certificate, order

    std::string graph;       // path, fixture:NAME, gen:SPEC or g6:STRING
    std::size_t subdivide = 0;

    std::optional<std::size_t> p;
    std::optional<std::string> r;  // half-integers are allowed for density
    std::optional<std::size_t> q;
    bool exact_ears = false;
    bool oracle = false;
    std::size_t cycle_cap = 2'000'000;
    std::size_t state_cap = 20'000'000;

    // bounds
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> d;
    std::optional<std::size_t> k;
    std::optional<double> c;
    std::optional<double> alpha;
    std::optional<double> gamma;
    std::optional<double> gamma_correction;
    std::optional<double> t;
    std::optional<double> big_a;  // beta: A
    std::optional<double> big_b;  // beta: B
    std::optional<std::string> expansion;  // subexponential: "const:C", "pow:E", "exp-sqrt"
    std::size_t r_max = 10'000;

    // verify
    std::optional<std::string> input;
    std::optional<std::size_t> threshold;
    bool require_proper = false;
};

struct Report {
    nlohmann::ordered_json body;
    /// Every verification in the report passed.
    bool ok = true;
};

/// Loads the graph named by `spec` and applies `subdivide`.
Graph load_graph(const std::string& spec, std::size_t subdivide);

/// Runs one command. Throws on invalid input; the caller turns exceptions
/// into error records.
Report run(const Options& options);

/// JSON document, or a flat `key: value` listing with line-format artifacts
/// appended as blocks.
std::string render(const Report& report, bool json);

/// Machine-readable error record for an exception escaping run().
nlohmann::ordered_json error_record(const std::string& command, const std::exception& e);

} // namespace pathdeg::cli
