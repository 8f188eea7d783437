#include "lgp/errors.hpp"
#include "lgp/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lgp {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::size_t to_count(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

struct Reader {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    std::vector<VertexSet> seen;

    void header(std::size_t nn, std::size_t mm) {
        n = nn;
        m = mm;
        seen.assign(n, VertexSet(n));
        edges.reserve(m);
    }

    void add(std::size_t u, std::size_t v, std::size_t line) {
        if (edges.size() == m) throw ParseError(line, "more than the declared " + std::to_string(m) + " edges");
        if (u >= n || v >= n) {
            throw ParseError(line, "vertex id " + std::to_string(u >= n ? u : v) + " out of range for n = " +
                                       std::to_string(n));
        }
        if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        if (seen[u].contains(static_cast<Vertex>(v))) {
            throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        seen[u].insert(static_cast<Vertex>(v));
        seen[v].insert(static_cast<Vertex>(u));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
};

}  // namespace

Graph parse_graph(std::string_view text) {
    Reader reader;
    bool have_header = false;
    bool dimacs = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        const auto tokens = split(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens[0] == "c" && (dimacs || !have_header)) continue;

        if (!have_header) {
            if (tokens[0] == "p") {
                if (tokens.size() != 4) throw ParseError(line_no, "expected 'p edge <n> <m>'");
                dimacs = true;
                reader.header(to_count(tokens[2], line_no), to_count(tokens[3], line_no));
            } else {
                if (tokens.size() != 2) throw ParseError(line_no, "expected header '<n> <m>'");
                reader.header(to_count(tokens[0], line_no), to_count(tokens[1], line_no));
            }
            have_header = true;
            continue;
        }

        if (dimacs) {
            if (tokens[0] != "e" || tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            const std::size_t u = to_count(tokens[1], line_no);
            const std::size_t v = to_count(tokens[2], line_no);
            if (u == 0 || v == 0) throw ParseError(line_no, "DIMACS vertex ids are 1-based");
            reader.add(u - 1, v - 1, line_no);
        } else {
            if (tokens.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
            reader.add(to_count(tokens[0], line_no), to_count(tokens[1], line_no), line_no);
        }
    }
    if (!have_header) throw ParseError(line_no, "missing header line");
    if (reader.edges.size() != reader.m) {
        throw ParseError(line_no, "declared " + std::to_string(reader.m) + " edges but found " +
                                      std::to_string(reader.edges.size()));
    }
    return Graph(reader.n, reader.edges);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace lgp
