#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace intpart {

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph cycle_graph(int n) {
    if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 1) throw ParameterError("path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// Complete multipartite graph; parts occupy consecutive index ranges.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw ParameterError("complete-multipartite parts must be positive");
        n += p;
    }
    if (n > kMaxVertices) throw ParameterError("complete-multipartite exceeds 64 vertices");
    std::vector<int> part_of;
    for (int k = 0; k < static_cast<int>(parts.size()); ++k) part_of.insert(part_of.end(), parts[k], k);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

/// K_n minus the perfect matching {2i, 2i+1}; (n-2)-regular.
inline Graph cocktail_party(int n) {
    if (n < 2 || n % 2 != 0) throw ParameterError("cocktail-party graph needs an even order >= 2");
    Graph g = complete_graph(n);
    for (int i = 0; i < n; i += 2) g.remove_edge(i, i + 1);
    return g;
}

/// Q_m: X1 = K_{m-1}, X2 = complement of C_{m+1}, Y = m+2 isolated vertices, and every X-Y edge.
///
/// Vertex layout: X1 = 0..m-2, X2 = m-1..2m-1, Y = 2m..3m+1. The result is 2m-regular on 3m+2 vertices.
inline Graph qm_graph(int m) {
    if (m <= 2) throw ParameterError("qm-family requires m > 2");
    const int n = 3 * m + 2;
    if (n > kMaxVertices) throw ParameterError("qm-family order exceeds 64");
    Graph g(n);
    const int x2 = m - 1;
    const int y = 2 * m;
    for (int i = 0; i < m - 1; ++i)
        for (int j = i + 1; j < m - 1; ++j) g.add_edge(i, j);
    const int len = m + 1;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            const bool on_cycle = (j == i + 1) || (i == 0 && j == len - 1);
            if (!on_cycle) g.add_edge(x2 + i, x2 + j);
        }
    for (int v = 0; v < y; ++v)
        for (int w = y; w < n; ++w) g.add_edge(v, w);
    return g;
}

/// Edges of the 28-vertex connected cubic graph drawn as having only bisections for external
/// partitions. The transcription is exact, but the graph as drawn has 6 uneven external
/// partitions (see data/fig28.edges). Mirrors data/fig28.edges.
inline constexpr std::array<std::array<int, 2>, 42> kFig28Edges{{
    {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},   {6, 7},   {7, 8},   {8, 9},
    {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 0},  {0, 15},  {15, 16}, {16, 17},
    {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 22}, {22, 23}, {23, 16}, {4, 25},  {25, 10},
    {25, 26}, {26, 7},  {6, 27},  {27, 9},  {27, 8},  {5, 26},  {1, 24},  {24, 15}, {24, 17},
    {2, 22},  {3, 21},  {14, 18}, {13, 23}, {12, 19}, {11, 20},
}};

/// Parses "u v" lines (0-indexed); '#' starts a comment. Order is 1 + the largest index unless given.
inline Graph read_edge_list(std::istream& in, int order = -1) {
    std::vector<Edge> edges;
    int max_v = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u = 0;
        int v = 0;
        if (!(ls >> u)) continue;
        if (!(ls >> v) || u < 0 || v < 0) {
            throw ParseError(ParseError::Kind::BadSyntax, "edge list: bad line " + std::to_string(lineno));
        }
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    const int n = order >= 0 ? order : max_v + 1;
    if (n > kMaxVertices) throw ParseError(ParseError::Kind::TooLarge, "edge list: more than 64 vertices");
    return Graph(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

/// The embedded 28-vertex graph, validated as connected, cubic and of order 28.
inline Graph fig28_graph() {
    Graph g(28);
    for (const auto& e : kFig28Edges) g.add_edge(e[0], e[1]);
    Mask seen = 1;
    Mask frontier = 1;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & ~seen;
        seen |= next;
    }
    if (g.regular_degree() != 3 || seen != g.vertices()) {
        throw InvariantViolation("embedded 28-vertex graph is not a connected cubic graph");
    }
    return g;
}

inline Graph load_fig28(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    Graph g = read_edge_list(in, 28);
    if (!(g == fig28_graph())) throw InvariantViolation(path + " does not match the embedded 28-vertex graph");
    return g;
}

/// Named-family generator request, possibly nested (complement-of, disjoint-union).
struct GeneratorSpec {
    std::string family;
    std::vector<int> params;
    std::vector<GeneratorSpec> operands;

    /// Canonical text form, e.g. "disjoint-union(petersen,complete(4))".
    std::string to_string() const {
        std::string out = family;
        if (params.empty() && operands.empty()) return out;
        out += '(';
        bool first = true;
        for (int p : params) {
            if (!first) out += ',';
            out += std::to_string(p);
            first = false;
        }
        for (const auto& o : operands) {
            if (!first) out += ',';
            out += o.to_string();
            first = false;
        }
        out += ')';
        return out;
    }
};

namespace detail {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GeneratorSpec parse() {
        GeneratorSpec spec = parse_one();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return spec;
    }

private:
    GeneratorSpec parse_one() {
        skip_space();
        GeneratorSpec spec;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                       text_[pos_] == '_')) {
            spec.family += text_[pos_++];
        }
        if (spec.family.empty()) fail("expected family name");
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ')') {
                ++pos_;
                return spec;
            }
            for (;;) {
                skip_space();
                if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-') &&
                    !std::isalpha(static_cast<unsigned char>(peek_after_sign()))) {
                    spec.params.push_back(parse_int());
                } else {
                    spec.operands.push_back(parse_one());
                }
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or ')'");
            }
        }
        return spec;
    }

    char peek_after_sign() const {
        std::size_t p = pos_;
        if (p < text_.size() && text_[p] == '-') ++p;
        return p < text_.size() ? text_[p] : '\0';
    }

    int parse_int() {
        std::size_t start = pos_;
        if (text_[pos_] == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.empty() || digits == "-") fail("expected integer");
        try {
            return std::stoi(digits);
        } catch (const std::exception&) {
            fail("integer out of range");
        }
        return 0;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(ParseError::Kind::BadSyntax,
                         "generator spec: " + why + " at offset " + std::to_string(pos_) + " in '" +
                             std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void expect_params(const GeneratorSpec& s, std::size_t count, std::size_t operands = 0) {
    if (s.params.size() != count || s.operands.size() != operands) {
        throw ParameterError(s.family + " expects " + std::to_string(count) + " integer parameter(s) and " +
                             std::to_string(operands) + " graph operand(s)");
    }
}

}  // namespace detail

inline GeneratorSpec parse_generator_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Builds the graph described by spec. Families: complete(n), empty(n), cycle(n), path(n),
/// complete-multipartite(p1,...), petersen, cocktail-party(n), qm-family(m) (alias qm), fig28,
/// complement-of(G), disjoint-union(G1,G2,...).
inline Graph generate(const GeneratorSpec& spec) {
    const auto& f = spec.family;
    const auto& p = spec.params;
    if (f == "complete") {
        detail::expect_params(spec, 1);
        return complete_graph(p[0]);
    }
    if (f == "empty") {
        detail::expect_params(spec, 1);
        return empty_graph(p[0]);
    }
    if (f == "cycle") {
        detail::expect_params(spec, 1);
        return cycle_graph(p[0]);
    }
    if (f == "path") {
        detail::expect_params(spec, 1);
        return path_graph(p[0]);
    }
    if (f == "complete-multipartite") {
        if (p.empty() || !spec.operands.empty()) throw ParameterError("complete-multipartite expects part sizes");
        return complete_multipartite(p);
    }
    if (f == "petersen") {
        detail::expect_params(spec, 0);
        return petersen_graph();
    }
    if (f == "cocktail-party") {
        detail::expect_params(spec, 1);
        return cocktail_party(p[0]);
    }
    if (f == "qm-family" || f == "qm") {
        detail::expect_params(spec, 1);
        return qm_graph(p[0]);
    }
    if (f == "fig28") {
        detail::expect_params(spec, 0);
        return fig28_graph();
    }
    if (f == "complement-of") {
        detail::expect_params(spec, 0, 1);
        return complement(generate(spec.operands[0]));
    }
    if (f == "disjoint-union") {
        if (!p.empty() || spec.operands.empty()) throw ParameterError("disjoint-union expects graph operands");
        Graph g = generate(spec.operands[0]);
        for (std::size_t i = 1; i < spec.operands.size(); ++i) g = disjoint_union(g, generate(spec.operands[i]));
        return g;
    }
    throw ParameterError("unknown generator family '" + f + "'");
}

inline Graph generate(std::string_view text) { return generate(parse_generator_spec(text)); }

/// Random d-regular graph from the pairing model. Points are paired one suitable pair at a time
/// (no loops, no repeated edges); the whole pairing restarts when no suitable pair remains.
/// Deterministic for fixed (n, d, seed) on a given standard library.
inline Graph random_regular(int n, int d, std::uint64_t seed, int max_restarts = 10000) {
    if (n < 1 || n > kMaxVertices) throw ParameterError("random_regular: order outside 1..64");
    if (d < 0 || d >= n) throw ParameterError("random_regular: degree must satisfy 0 <= d < n");
    if ((n * d) % 2 != 0) throw ParameterError("random_regular: n*d must be even");

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt <= max_restarts; ++attempt) {
        Graph g(n);
        std::vector<int> points;
        points.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v) points.insert(points.end(), d, v);

        bool stuck = false;
        while (!points.empty()) {
            const auto suitable = [&](std::size_t i, std::size_t j) {
                return points[i] != points[j] && !g.adjacent(points[i], points[j]);
            };
            bool paired = false;
            for (int tries = 0; tries < 64 && !paired; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
                const std::size_t i = pick(rng);
                const std::size_t j = pick(rng);
                if (i == j || !suitable(i, j)) continue;
                g.add_edge(points[i], points[j]);
                const std::size_t hi = std::max(i, j);
                const std::size_t lo = std::min(i, j);
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(hi));
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(lo));
                paired = true;
            }
            if (paired) continue;
            std::vector<std::pair<std::size_t, std::size_t>> options;
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = i + 1; j < points.size(); ++j)
                    if (suitable(i, j)) options.emplace_back(i, j);
            if (options.empty()) {
                stuck = true;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            const auto [i, j] = options[pick(rng)];
            g.add_edge(points[i], points[j]);
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
            points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
        }
        if (!stuck) return g;
    }
    throw BudgetError("random_regular: restart budget exhausted");
}

/// Erdos-Renyi G(n, p) with p = num/den, used for property tests on irregular graphs.
inline Graph random_gnp(int n, int num, int den, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, den - 1);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < num) g.add_edge(i, j);
    return g;
}

}  // namespace intpart
