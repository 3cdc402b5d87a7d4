#pragma once

#include "pathdeg/graph.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pathdeg {

enum class GeneratorKind { cycle, path, complete, theta, fixture };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::cycle;
    std::vector<std::size_t> parameters;
    std::string fixture_name;

    static GeneratorSpec cycle(std::size_t n) { return {GeneratorKind::cycle, {n}, {}}; }
    static GeneratorSpec path(std::size_t n) { return {GeneratorKind::path, {n}, {}}; }
    static GeneratorSpec complete(std::size_t n) { return {GeneratorKind::complete, {n}, {}}; }
    static GeneratorSpec theta(std::vector<std::size_t> lengths) { return {GeneratorKind::theta, std::move(lengths), {}}; }
    static GeneratorSpec fixture(std::string name) { return {GeneratorKind::fixture, {}, std::move(name)}; }
};

/// Canonically labeled graph for `spec`. Throws InvalidGraph on bad parameters
/// or an unknown fixture name.
///
///   cycle(n), n >= 3     vertices 0..n-1 in cyclic order
///   path(n), n >= 1      vertices 0..n-1 in path order
///   complete(n)          K_n
///   theta(l1,...,lt)     hubs 0 and 1; branch interiors numbered branch by
///                        branch from hub 0; lengths >= 1, at most one of them 1
///   fixture(name)        one of fixture_names()
Graph generate(const GeneratorSpec& spec);

/// Parses "cycle:9", "path:4", "complete:5", "theta:2,2,2" or a bare fixture
/// name into a spec.
GeneratorSpec parse_generator(std::string_view text);

struct FixtureInfo {
    std::string_view name;
    std::size_t order;
    std::size_t size;
    std::size_t regular_degree;
    std::size_t girth;
};

/// Declared properties of every named fixture, checked when a fixture loads.
const std::vector<FixtureInfo>& fixture_catalog();
std::vector<std::string> fixture_names();

} // namespace pathdeg
