#include "cliquetop/graph_io.hpp"

#include <sstream>
#include <string>

#include "cliquetop/errors.hpp"

namespace cliquetop {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int g6_value(char c, std::size_t offset) {
    if (c < 63 || c > 126)
        throw parse_error("graph6: character out of range at byte offset " +
                          std::to_string(offset));
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = g6_value(line[0], 0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) throw parse_error("graph6: truncated length field at byte offset 1");
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | g6_value(line[i], i);
        pos = 4;
    } else {
        if (line.size() < 8) throw parse_error("graph6: truncated length field at byte offset 2");
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | g6_value(line[i], i);
        pos = 8;
    }
    if (n > 1'000'000) throw parse_error("graph6: vertex count too large");

    long long bits = n * (n - 1) / 2;
    std::size_t need = std::size_t((bits + 5) / 6);
    if (line.size() - pos != need)
        throw parse_error("graph6: expected " + std::to_string(need) + " data bytes, got " +
                          std::to_string(line.size() - pos));

    Graph g(static_cast<int>(n));
    // Upper triangle, column-major: bits run (0,1), (0,2), (1,2), (0,3), ...
    long long row = 0, col = 1;
    for (std::size_t i = 0; i < need; ++i) {
        int word = g6_value(line[pos + i], pos + i);
        for (int b = 5; b >= 0; --b) {
            bool on = (word >> b) & 1;
            if (col >= n) {
                if (on)
                    throw parse_error("graph6: nonzero padding bit at byte offset " +
                                      std::to_string(pos + i));
                continue;
            }
            if (on) g.add_edge(int(row), int(col));
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(char(63 + ((n >> shift) & 63)));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(char(63 + ((n >> shift) & 63)));
    }
    int word = 0;
    int have = 0;
    for (long long col = 1; col < n; ++col) {
        for (long long row = 0; row < col; ++row) {
            word = (word << 1) | (g.has_edge(int(row), int(col)) ? 1 : 0);
            if (++have == 6) {
                out.push_back(char(63 + word));
                word = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(char(63 + (word << (6 - have))));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag, kind;
        if (!(ls >> tag) || tag != "p" || !(ls >> kind) || kind != "edge" || !(ls >> n >> m) ||
            n < 0 || m < 0)
            throw parse_error("edge list: malformed problem line at line " +
                              std::to_string(line_no));
        break;
    }
    if (n < 0) throw parse_error("edge list: missing problem line");

    Graph g(static_cast<int>(n));
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        long long u, v;
        if (!(ls >> tag) || tag != "e" || !(ls >> u >> v))
            throw parse_error("edge list: malformed edge line at line " + std::to_string(line_no));
        if (u < 1 || u > n || v < 1 || v > n)
            throw parse_error("edge list: vertex index out of range at line " +
                              std::to_string(line_no));
        if (u == v)
            throw parse_error("edge list: self-loop at line " + std::to_string(line_no));
        ++seen;
        if (seen > m) throw parse_error("edge list: more than " + std::to_string(m) + " edges");
        g.add_edge(int(u - 1), int(v - 1));  // duplicates collapse
    }
    if (seen != m)
        throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                          std::to_string(seen));
    return g;
}

std::string emit_edge_list(const Graph& g) {
    auto edges = g.edges();
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph parse_graph_auto(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line, filtered;
    std::string first;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (first.empty()) first = line;
        filtered += line;
        filtered += '\n';
    }
    if (first.empty()) throw parse_error("no graph found in input");
    if (first[0] == 'p' || first[0] == 'c') return parse_edge_list(filtered);
    return parse_graph6(first);
}

}  // namespace cliquetop
