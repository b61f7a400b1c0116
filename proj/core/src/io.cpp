#include "kvc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "kvc/rng.hpp"
#include "kvc/util.hpp"

namespace kvc {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    // Next significant line's tokens; empty and 'c' lines are skipped.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens[0] == "c") continue;
            return true;
        }
        return false;
    }
};

int parse_int(const std::string& tok, int line_no) {
    int v;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("bad integer '" + tok + "'", line_no);
    return v;
}

double parse_double(const std::string& tok, int line_no) {
    double v;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("bad number '" + tok + "'", line_no);
    return v;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    LineReader reader(text);
    std::vector<std::string> tokens;
    if (!reader.next(tokens)) throw ParseError("missing 'p wvc <n> <m>' header", reader.line_no);
    if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "wvc")
        throw ParseError("expected header 'p wvc <n> <m>'", reader.line_no);
    int n = parse_int(tokens[2], reader.line_no);
    int m = parse_int(tokens[3], reader.line_no);
    if (n < 0 || m < 0) throw ParseError("negative count in header", reader.line_no);

    std::vector<WeightedEdge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!reader.next(tokens))
            throw ParseError("expected " + std::to_string(m) + " edge records, got " +
                                 std::to_string(i),
                             reader.line_no);
        if (tokens.size() != 3) throw ParseError("expected '<u> <v> <w>'", reader.line_no);
        int u = parse_int(tokens[0], reader.line_no);
        int v = parse_int(tokens[1], reader.line_no);
        double w = parse_double(tokens[2], reader.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range [0, " + std::to_string(n) + ")",
                             reader.line_no);
        if (std::isnan(w) || w < 0.0)
            throw InvalidWeight("line " + std::to_string(reader.line_no) +
                                ": negative or invalid weight");
        edges.push_back({u, v, w});
    }
    if (reader.next(tokens)) throw ParseError("unexpected content after edge records",
                                              reader.line_no);
    return WeightedGraph(n, std::move(edges));
}

std::string write_graph(const WeightedGraph& g) {
    std::string out = "p wvc " + std::to_string(g.num_vertices()) + " " +
                      std::to_string(g.num_edges()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_double(e.weight) +
               "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

WeightedGraph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

void save_graph(const std::string& path, const WeightedGraph& g) {
    write_text_file(path, write_graph(g));
}

Coloring parse_coloring(std::string_view text) {
    LineReader reader(text);
    std::vector<std::string> tokens;
    if (!reader.next(tokens)) throw ParseError("missing 'p col <n> <k>' header", reader.line_no);
    if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "col")
        throw ParseError("expected header 'p col <n> <k>'", reader.line_no);
    int n = parse_int(tokens[2], reader.line_no);
    int k = parse_int(tokens[3], reader.line_no);
    if (n < 0 || k < 0) throw ParseError("negative count in header", reader.line_no);

    std::vector<int> colors;
    colors.reserve(n);
    while (static_cast<int>(colors.size()) < n) {
        if (!reader.next(tokens))
            throw ParseError("expected " + std::to_string(n) + " colors, got " +
                                 std::to_string(colors.size()),
                             reader.line_no);
        for (const auto& tok : tokens) {
            if (static_cast<int>(colors.size()) == n)
                throw ParseError("more colors than declared", reader.line_no);
            colors.push_back(parse_int(tok, reader.line_no));
        }
    }
    if (reader.next(tokens)) throw ParseError("unexpected content after colors", reader.line_no);
    return Coloring(std::move(colors), k);
}

std::string write_coloring(const Coloring& chi) {
    std::string out = "p col " + std::to_string(chi.size()) + " " +
                      std::to_string(chi.num_colors()) + "\n";
    for (int v = 0; v < chi.size(); ++v)
        out += std::to_string(chi.color(v)) + (v + 1 == chi.size() ? "\n" : " ");
    return out;
}

Coloring load_coloring(const std::string& path) { return parse_coloring(read_text_file(path)); }

WeightedGraph gen_random(const GenParams& params) {
    if (params.n < 0) throw InvalidParams("n must be non-negative");
    if (!(params.density >= 0.0 && params.density <= 1.0))
        throw InvalidParams("density must lie in [0, 1]");
    if (!(params.loop_prob >= 0.0 && params.loop_prob <= 1.0))
        throw InvalidParams("loop probability must lie in [0, 1]");
    if (params.weight_decimals < 0 || params.weight_decimals > 9)
        throw InvalidParams("weight decimals must lie in [0, 9]");

    Rng rng(params.seed);
    double scale = std::pow(10.0, params.weight_decimals);
    auto draw_weight = [&]() {
        if (params.unweighted) return 1.0;
        return std::round(uniform01(rng) * scale) / scale;
    };

    std::vector<WeightedEdge> edges;
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (uniform01(rng) < params.density) edges.push_back({u, v, draw_weight()});
    if (!params.unweighted && params.loop_prob > 0.0)
        for (int u = 0; u < params.n; ++u)
            if (uniform01(rng) < params.loop_prob) edges.push_back({u, u, draw_weight()});
    return WeightedGraph(params.n, std::move(edges));
}

}  // namespace kvc
