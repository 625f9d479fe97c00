#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace triangulex {

enum class GraphFormat { auto_detect, dimacs, edgelist };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_int(std::string_view tok, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw parse_error(line, std::string("expected integer for ") + what + ", got '" +
                                    std::string(tok) + "'");
    }
    return value;
}

inline std::vector<std::string> to_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

}  // namespace detail

// DIMACS format: one "p edge <n> <m>" header, then "e <u> <v>" lines with
// 1-indexed endpoints; "c" lines are comments. Parallel edges collapse, the
// declared edge count is not enforced.
inline Graph parse_dimacs(std::string_view text) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    for (const std::string& line : detail::to_lines(text)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error(lineno, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "edge") {
                throw parse_error(lineno, "malformed problem line, expected 'p edge <n> <m>'");
            }
            n = detail::parse_int(toks[2], lineno, "vertex count");
            detail::parse_int(toks[3], lineno, "edge count");
            if (n < 0) throw parse_error(lineno, "negative vertex count");
            if (n > VertexSet::max_width) {
                throw parse_error(lineno, "graph larger than supported width " +
                                              std::to_string(VertexSet::max_width));
            }
        } else if (toks[0] == "e") {
            if (n < 0) throw parse_error(lineno, "edge before problem line");
            if (toks.size() != 3) throw parse_error(lineno, "malformed edge line, expected 'e <u> <v>'");
            int u = detail::parse_int(toks[1], lineno, "endpoint");
            int v = detail::parse_int(toks[2], lineno, "endpoint");
            if (u < 1 || u > n || v < 1 || v > n) {
                throw parse_error(lineno, "vertex out of range 1.." + std::to_string(n));
            }
            if (u == v) throw parse_error(lineno, "self-loop");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw parse_error(lineno, "unknown line type '" + std::string(toks[0]) + "'");
        }
    }
    if (n < 0) throw parse_error(lineno, "missing problem line");
    return Graph(n, edges);
}

// Edge list format: one "u v" pair per line, 0-indexed; '#' starts a comment
// line, blank lines are skipped. Vertex count is max endpoint + 1.
inline Graph parse_edgelist(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    int lineno = 0;
    for (const std::string& line : detail::to_lines(text)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 2) throw parse_error(lineno, "expected 'u v' pair");
        int u = detail::parse_int(toks[0], lineno, "endpoint");
        int v = detail::parse_int(toks[1], lineno, "endpoint");
        if (u < 0 || v < 0) throw parse_error(lineno, "negative vertex id");
        if (u == v) throw parse_error(lineno, "self-loop");
        int hi = std::max(u, v);
        if (hi >= VertexSet::max_width) {
            throw parse_error(lineno, "graph larger than supported width " +
                                          std::to_string(VertexSet::max_width));
        }
        n = std::max(n, hi + 1);
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline GraphFormat sniff_format(std::string_view text) {
    for (const std::string& line : detail::to_lines(text)) {
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
        return toks[0] == "p" ? GraphFormat::dimacs : GraphFormat::edgelist;
    }
    return GraphFormat::edgelist;
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt = GraphFormat::auto_detect) {
    if (fmt == GraphFormat::auto_detect) fmt = sniff_format(text);
    return fmt == GraphFormat::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

inline std::string serialize_graph(const Graph& g, GraphFormat fmt = GraphFormat::dimacs) {
    std::ostringstream out;
    if (fmt == GraphFormat::edgelist) {
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    } else {
        out << "p edge " << g.n() << " " << g.m() << "\n";
        for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

}  // namespace triangulex
