#include "pathdeg/formats.hpp"

#include "pathdeg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <map>
#include <set>
#include <sstream>

namespace pathdeg {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        std::size_t end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            if (j > i)
                line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t to_uint(std::string_view token, std::size_t line)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
    return value;
}

Vertex to_vertex(std::string_view token, std::size_t line)
{
    std::uint64_t value = to_uint(token, line);
    if (value >= std::numeric_limits<Vertex>::max())
        throw ParseError(line, "vertex id out of range");
    return static_cast<Vertex>(value);
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<Edge> edges;
    std::optional<std::size_t> declared;
    std::size_t n = 0;
    bool first = true;
    std::size_t last_line = 0;
    for (const Line& line : tokenize(text)) {
        last_line = line.number;
        if (first && line.tokens.size() == 2 && line.tokens[0] == "n") {
            declared = to_uint(line.tokens[1], line.number);
            first = false;
            continue;
        }
        first = false;
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected 'u v'");
        Vertex u = to_vertex(line.tokens[0], line.number);
        Vertex v = to_vertex(line.tokens[1], line.number);
        if (u == v)
            throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        if (declared && std::max(u, v) >= *declared)
            throw ParseError(line.number, "vertex id exceeds declared order " + std::to_string(*declared));
        n = std::max<std::size_t>(n, std::max(u, v) + 1);
        edges.emplace_back(u, v);
    }
    try {
        return Graph::build(declared.value_or(n), edges);
    } catch (const InvalidGraph& e) {
        throw ParseError(last_line, e.what());
    }
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    std::size_t pos = 0;
    auto next = [&]() -> std::uint32_t {
        if (pos >= text.size())
            throw ParseError(1, "graph6 data truncated");
        auto c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw ParseError(1, "graph6 byte " + std::to_string(c) + " at offset " + std::to_string(pos) +
                                    " is outside 63..126");
        ++pos;
        return c - 63u;
    };

    std::uint64_t n = next();
    if (n == 63) {
        std::size_t words = 3;
        if (pos < text.size() && text[pos] == '~') {
            ++pos;
            words = 6;
        }
        n = 0;
        for (std::size_t i = 0; i < words; ++i)
            n = (n << 6) | next();
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes)
        throw ParseError(1, "graph6 bit vector truncated");
    if (text.size() - pos > bytes)
        throw ParseError(1, "graph6 data has trailing bytes");

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    std::uint32_t chunk = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++k) {
            if (k % 6 == 0)
                chunk = next();
            if (chunk >> (5 - k % 6) & 1u)
                edges.emplace_back(u, v);
        }
    if (k % 6 != 0 && (chunk & ((1u << (6 - k % 6)) - 1)) != 0)
        throw ParseError(1, "graph6 padding bits are not zero");
    return Graph::build(static_cast<std::size_t>(n), edges);
}

std::string encode_graph6(const Graph& g)
{
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        std::size_t words = 3;
        if (n > 258047) {
            out.push_back('~');
            words = 6;
        }
        for (std::size_t i = words; i-- > 0;)
            out.push_back(static_cast<char>(((n >> (6 * i)) & 63u) + 63));
    }
    std::uint32_t chunk = 0;
    std::uint64_t k = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++k) {
            chunk = chunk << 1 | (g.has_edge(u, v) ? 1u : 0u);
            if (k % 6 == 5) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
            }
        }
    if (k % 6 != 0)
        out.push_back(static_cast<char>((chunk << (6 - k % 6)) + 63));
    return out;
}

std::string serialize_certificate(const ReductionSequence& sequence)
{
    std::ostringstream out;
    for (const ReductionStep& step : sequence.steps) {
        switch (step.kind) {
        case StepKind::delete_isolated:
            out << 'I';
            break;
        case StepKind::delete_leaf:
            out << 'L';
            break;
        case StepKind::delete_ear_interior:
            out << 'E';
            break;
        }
        for (Vertex v : step.vertices)
            out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

ReductionSequence parse_certificate(std::string_view text, std::size_t p, bool exact_ears)
{
    ReductionSequence seq{p, exact_ears, {}};
    for (const Line& line : tokenize(text)) {
        std::string_view tag = line.tokens[0];
        std::vector<Vertex> vs;
        for (std::size_t i = 1; i < line.tokens.size(); ++i)
            vs.push_back(to_vertex(line.tokens[i], line.number));
        if (tag == "I" || tag == "L") {
            if (vs.size() != 1)
                throw ParseError(line.number, "expected exactly one vertex");
            seq.steps.push_back(tag == "I" ? ReductionStep::isolated(vs[0]) : ReductionStep::leaf(vs[0]));
        } else if (tag == "E") {
            if (vs.size() < 3)
                throw ParseError(line.number, "an ear needs two endpoints and an interior");
            seq.steps.push_back(ReductionStep::ear(std::move(vs)));
        } else {
            throw ParseError(line.number, "unknown step '" + std::string(tag) + "'");
        }
    }
    return seq;
}

CertificateCheck check_certificate_text(const Graph& g, std::string_view text, std::size_t p, bool exact_ears)
{
    CertificateCheck result;
    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v = 0; v < g.order(); ++v)
        adj[v];
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    auto erase = [&](Vertex v) {
        for (Vertex w : adj[v])
            adj[w].erase(v);
        adj.erase(v);
    };

    std::vector<Line> lines;
    try {
        lines = tokenize(text);
    } catch (const ParseError& e) {
        result.message = e.what();
        return result;
    }
    for (const Line& line : lines) {
        auto fail = [&](const std::string& why) {
            result.message = "line " + std::to_string(line.number) + ": " + why;
            return result;
        };
        std::vector<Vertex> vs;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            std::uint64_t value = 0;
            auto tok = line.tokens[i];
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                return fail("bad vertex '" + std::string(tok) + "'");
            if (!adj.contains(static_cast<Vertex>(value)) || value >= g.order())
                return fail("vertex " + std::string(tok) + " is not present");
            vs.push_back(static_cast<Vertex>(value));
        }
        std::string_view tag = line.tokens[0];
        if (tag == "I" || tag == "L") {
            if (vs.size() != 1)
                return fail("expected one vertex");
            std::size_t want = tag == "I" ? 0 : 1;
            if (adj[vs[0]].size() != want)
                return fail("vertex " + std::to_string(vs[0]) + " has degree " + std::to_string(adj[vs[0]].size()));
            erase(vs[0]);
        } else if (tag == "E") {
            if (vs.size() < 3)
                return fail("ear too short");
            std::size_t length = vs.size() - 1;
            if (length < p || (exact_ears && length != p))
                return fail("ear length " + std::to_string(length) + " not allowed for p=" + std::to_string(p));
            if (vs.front() == vs.back())
                return fail("ear endpoints coincide");
            std::set<Vertex> seen(vs.begin(), vs.end());
            if (seen.size() != vs.size())
                return fail("ear repeats a vertex");
            for (std::size_t i = 0; i + 1 < vs.size(); ++i)
                if (!adj[vs[i]].contains(vs[i + 1]))
                    return fail("missing edge " + std::to_string(vs[i]) + "-" + std::to_string(vs[i + 1]));
            for (std::size_t i = 1; i + 1 < vs.size(); ++i)
                if (adj[vs[i]].size() != 2)
                    return fail("interior vertex " + std::to_string(vs[i]) + " has degree " +
                                std::to_string(adj[vs[i]].size()));
            for (std::size_t i = 1; i + 1 < vs.size(); ++i)
                erase(vs[i]);
        } else {
            return fail("unknown step '" + std::string(tag) + "'");
        }
        ++result.steps;
    }
    if (!adj.empty()) {
        result.message = std::to_string(adj.size()) + " vertices remain after the last step";
        return result;
    }
    result.ok = true;
    return result;
}

std::string serialize_coloring(const Graph& g, const EdgeColoring& c)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < g.size(); ++i)
        out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << c[i] << '\n';
    return out.str();
}

EdgeColoring parse_coloring(const Graph& g, std::string_view text)
{
    EdgeColoring c;
    c.colors.assign(g.size(), 0);
    std::size_t last_line = 0;
    for (const Line& line : tokenize(text)) {
        last_line = line.number;
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "expected 'u v color'");
        Vertex u = to_vertex(line.tokens[0], line.number);
        Vertex v = to_vertex(line.tokens[1], line.number);
        std::uint64_t color = to_uint(line.tokens[2], line.number);
        if (color == 0 || color > std::numeric_limits<std::uint32_t>::max())
            throw ParseError(line.number, "colors are positive 32-bit integers");
        auto idx = (u < g.order() && v < g.order()) ? g.edge_index(u, v) : std::nullopt;
        if (!idx)
            throw ParseError(line.number, "no edge " + std::to_string(u) + "-" + std::to_string(v));
        if (c.colors[*idx] != 0)
            throw ParseError(line.number, "edge colored twice");
        c.colors[*idx] = static_cast<std::uint32_t>(color);
    }
    if (std::find(c.colors.begin(), c.colors.end(), 0u) != c.colors.end())
        throw ParseError(last_line, "coloring does not cover every edge");
    return c;
}

std::string serialize_order(const LinearOrder& pi)
{
    std::string out;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(pi.sequence()[i]);
    }
    out.push_back('\n');
    return out;
}

LinearOrder parse_order(std::string_view text)
{
    std::vector<Vertex> seq;
    for (const Line& line : tokenize(text))
        for (auto token : line.tokens)
            seq.push_back(to_vertex(token, line.number));
    try {
        return LinearOrder(std::move(seq));
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, e.what());
    }
}

} // namespace pathdeg
