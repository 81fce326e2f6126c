#include "vat/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace vat {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

bool is_blank_or_comment(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (is_blank_or_comment(raw)) continue;
        Line line{number, {}};
        std::istringstream ss(raw);
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    return lines;
}

long long parse_count(const Line& line, const std::string& tok, const char* what) {
    if (tok.empty()) throw ParseError(line.number, std::string("empty ") + what);
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(line.number,
                             std::string("malformed ") + what + " '" + tok + "'");
        }
    }
    try {
        return std::stoll(tok);
    } catch (const std::out_of_range&) {
        throw ParseError(line.number, std::string(what) + " '" + tok + "' out of range");
    }
}

int parse_vertex(const Line& line, const std::string& tok, const char* what) {
    const long long v = parse_count(line, tok, what);
    if (v > INT32_MAX) throw ParseError(line.number, std::string(what) + " '" + tok + "' out of range");
    return static_cast<int>(v);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    const std::vector<Line> lines = tokenize(in);
    std::size_t start = 0;
    long long declared_n = -1;
    if (!lines.empty() && lines[0].tokens[0] == "p") {
        if (lines[0].tokens.size() != 2) {
            throw ParseError(lines[0].number, "header must be 'p <n>'");
        }
        declared_n = parse_count(lines[0], lines[0].tokens[1], "vertex count");
        if (declared_n > INT32_MAX) throw ParseError(lines[0].number, "vertex count out of range");
        start = 1;
    }

    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    for (std::size_t li = start; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0] == "p") {
            throw ParseError(line.number, "header 'p' allowed only as the first content line");
        }
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, "expected 'u v', got " +
                                              std::to_string(line.tokens.size()) + " token(s)");
        }
        const int u = parse_vertex(line, line.tokens[0], "vertex id");
        const int v = parse_vertex(line, line.tokens[1], "vertex id");
        if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) {
            throw ParseError(line.number, "vertex id " + std::to_string(std::max(u, v)) +
                                              " >= declared vertex count " +
                                              std::to_string(declared_n));
        }
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    }

    const int n = declared_n >= 0 ? static_cast<int>(declared_n) : max_id + 1;
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

BipartiteGraph parse_bipartite(std::istream& in) {
    const std::vector<Line> lines = tokenize(in);
    if (lines.empty() || lines[0].tokens[0] != "b") {
        throw ParseError(lines.empty() ? 1 : lines[0].number,
                         "missing bipartite header 'b <n1> <n2>'");
    }
    if (lines[0].tokens.size() != 3) {
        throw ParseError(lines[0].number, "header must be 'b <n1> <n2>'");
    }
    const long long n1 = parse_count(lines[0], lines[0].tokens[1], "side size");
    const long long n2 = parse_count(lines[0], lines[0].tokens[2], "side size");
    if (n1 > INT32_MAX || n2 > INT32_MAX) {
        throw ParseError(lines[0].number, "side size out of range");
    }

    BipartiteGraph b(static_cast<int>(n1), static_cast<int>(n2));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens.size() != 2) {
            throw ParseError(line.number, "expected 'i j', got " +
                                              std::to_string(line.tokens.size()) + " token(s)");
        }
        const int i = parse_vertex(line, line.tokens[0], "left index");
        const int j = parse_vertex(line, line.tokens[1], "right index");
        if (i >= n1 || j >= n2) {
            throw ParseError(line.number, "index (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") out of side range " +
                                              std::to_string(n1) + "x" + std::to_string(n2));
        }
        b.add_edge(i, j);
    }
    return b;
}

BipartiteGraph parse_bipartite(const std::string& text) {
    std::istringstream in(text);
    return parse_bipartite(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_bipartite(std::ostream& out, const BipartiteGraph& b) {
    out << "b " << b.left_size() << ' ' << b.right_size() << '\n';
    for (const auto& [i, j] : b.edges()) out << i << ' ' << j << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

std::string to_bipartite_text(const BipartiteGraph& b) {
    std::ostringstream out;
    write_bipartite(out, b);
    return out.str();
}

}  // namespace vat
