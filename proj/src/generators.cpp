#include "pathdeg/generators.hpp"

#include "pathdeg/errors.hpp"

#include <algorithm>
#include <charconv>

namespace pathdeg {

namespace {

using EdgeData = std::vector<std::pair<Vertex, Vertex>>;

// Cage and polyhedron adjacency data.
const EdgeData dodecahedron_edges = {
    {0, 1},   {0, 10},  {0, 19},  {1, 2},   {1, 8},   {2, 3},   {2, 6},   {3, 4},   {3, 19},  {4, 5},
    {4, 17},  {5, 6},   {5, 15},  {6, 7},   {7, 8},   {7, 14},  {8, 9},   {9, 10},  {9, 13},  {10, 11},
    {11, 12}, {11, 18}, {12, 13}, {12, 16}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19},
};

const EdgeData petersen_edges = {
    {0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
    {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9},
};

const EdgeData heawood_edges = {
    {0, 1}, {0, 5},  {0, 13}, {1, 2},  {1, 10}, {2, 3},   {2, 7},   {3, 4},   {3, 12},  {4, 5},   {4, 9},
    {5, 6}, {6, 7},  {6, 11}, {7, 8},  {8, 9},  {8, 13},  {9, 10},  {10, 11}, {11, 12}, {12, 13},
};

const EdgeData mcgee_edges = {
    {0, 1},   {0, 12},  {0, 23},  {1, 2},   {1, 8},   {2, 3},   {2, 19},  {3, 4},   {3, 15},
    {4, 5},   {4, 11},  {5, 6},   {5, 22},  {6, 7},   {6, 18},  {7, 8},   {7, 14},  {8, 9},
    {9, 10},  {9, 21},  {10, 11}, {10, 17}, {11, 12}, {12, 13}, {13, 14}, {13, 20}, {14, 15},
    {15, 16}, {16, 17}, {16, 23}, {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 22}, {22, 23},
};

const EdgeData tutte_coxeter_edges = {
    {0, 1},   {0, 17},  {0, 29},  {1, 2},   {1, 22},  {2, 3},   {2, 9},   {3, 4},   {3, 26},
    {4, 5},   {4, 13},  {5, 6},   {5, 18},  {6, 7},   {6, 23},  {7, 8},   {7, 28},  {8, 9},
    {8, 15},  {9, 10},  {10, 11}, {10, 19}, {11, 12}, {11, 24}, {12, 13}, {12, 29}, {13, 14},
    {14, 15}, {14, 21}, {15, 16}, {16, 17}, {16, 25}, {17, 18}, {18, 19}, {19, 20}, {20, 21},
    {20, 27}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 26}, {26, 27}, {27, 28}, {28, 29},
};

Graph complete_graph(std::size_t n)
{
    EdgeData edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw InvalidGraph("cycle needs at least 3 vertices");
    EdgeData edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::build(n, edges);
}

Graph path_graph(std::size_t n)
{
    if (n < 1)
        throw InvalidGraph("path needs at least 1 vertex");
    EdgeData edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph theta_graph(const std::vector<std::size_t>& lengths)
{
    if (lengths.empty())
        throw InvalidGraph("theta graph needs at least one branch");
    if (std::count(lengths.begin(), lengths.end(), 0u) > 0)
        throw InvalidGraph("theta branch lengths must be >= 1");
    if (std::count(lengths.begin(), lengths.end(), 1u) > 1)
        throw InvalidGraph("theta graph allows at most one branch of length 1");

    EdgeData edges;
    Vertex next = 2;
    for (std::size_t len : lengths) {
        Vertex prev = 0;
        for (std::size_t i = 1; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::build(next, edges);
}

const EdgeData* fixture_data(std::string_view name)
{
    if (name == "dodecahedron")
        return &dodecahedron_edges;
    if (name == "petersen")
        return &petersen_edges;
    if (name == "heawood")
        return &heawood_edges;
    if (name == "mcgee")
        return &mcgee_edges;
    if (name == "tutte_coxeter")
        return &tutte_coxeter_edges;
    return nullptr;
}

Graph load_fixture(std::string_view name)
{
    const auto& catalog = fixture_catalog();
    auto info = std::find_if(catalog.begin(), catalog.end(), [&](const FixtureInfo& f) { return f.name == name; });
    if (info == catalog.end())
        throw InvalidGraph("unknown fixture '" + std::string(name) + "'");

    Graph g;
    if (name == "k4")
        g = complete_graph(4);
    else if (name == "k5")
        g = complete_graph(5);
    else
        g = Graph::build(info->order, *fixture_data(name));

    bool regular = g.min_degree() == info->regular_degree && g.max_degree() == info->regular_degree;
    if (g.order() != info->order || g.size() != info->size || !regular || girth(g) != Girth::of_length(info->girth))
        throw std::logic_error("fixture '" + std::string(name) + "' failed its declared checks");
    return g;
}

std::vector<std::size_t> parse_counts(std::string_view text)
{
    std::vector<std::size_t> values;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view token = text.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
            throw InvalidGraph("bad generator parameter '" + std::string(token) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return values;
}

} // namespace

const std::vector<FixtureInfo>& fixture_catalog()
{
    static const std::vector<FixtureInfo> catalog = {
        {"dodecahedron", 20, 30, 3, 5},
        {"petersen", 10, 15, 3, 5},
        {"heawood", 14, 21, 3, 6},
        {"mcgee", 24, 36, 3, 7},
        {"tutte_coxeter", 30, 45, 3, 8},
        {"k4", 4, 6, 3, 3},
        {"k5", 5, 10, 4, 3},
    };
    return catalog;
}

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    for (const auto& f : fixture_catalog())
        names.emplace_back(f.name);
    return names;
}

Graph generate(const GeneratorSpec& spec)
{
    auto single = [&]() {
        if (spec.parameters.size() != 1)
            throw InvalidGraph("generator expects exactly one parameter");
        return spec.parameters[0];
    };
    switch (spec.kind) {
    case GeneratorKind::cycle:
        return cycle_graph(single());
    case GeneratorKind::path:
        return path_graph(single());
    case GeneratorKind::complete:
        return complete_graph(single());
    case GeneratorKind::theta:
        return theta_graph(spec.parameters);
    case GeneratorKind::fixture:
        return load_fixture(spec.fixture_name);
    }
    throw InvalidGraph("unknown generator kind");
}

GeneratorSpec parse_generator(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        return GeneratorSpec::fixture(std::string(text));

    std::string_view kind = text.substr(0, colon);
    auto params = parse_counts(text.substr(colon + 1));
    if (kind == "cycle")
        return {GeneratorKind::cycle, params, {}};
    if (kind == "path")
        return {GeneratorKind::path, params, {}};
    if (kind == "complete")
        return {GeneratorKind::complete, params, {}};
    if (kind == "theta")
        return {GeneratorKind::theta, params, {}};
    throw InvalidGraph("unknown generator '" + std::string(kind) + "'");
}

} // namespace pathdeg
