#include "cfic/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cfic {

namespace {

// Strips comments and splits on whitespace; returns false for blank lines.
// A `# palette <k>` comment is surfaced through the palette out-param.
bool tokenize(const std::string& line, std::vector<std::string>& tokens, int* palette,
              int line_no) {
    std::string body = line;
    if (auto pos = body.find('#'); pos != std::string::npos) {
        if (palette) {
            std::istringstream cs(body.substr(pos + 1));
            std::string word;
            if (cs >> word && word == "palette") {
                long k = -1;
                if (!(cs >> k) || k < 0) fail_parse(line_no, "malformed palette declaration");
                *palette = static_cast<int>(k);
            }
        }
        body.erase(pos);
    }
    tokens.clear();
    std::istringstream ss(body);
    std::string t;
    while (ss >> t) tokens.push_back(t);
    return !tokens.empty();
}

int parse_color(const std::string& t, int line_no) {
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        fail_parse(line_no, "expected a color, got '" + t + "'");
    }
    if (used != t.size()) fail_parse(line_no, "expected a color, got '" + t + "'");
    if (v < 1) fail_parse(line_no, "colors start at 1, got '" + t + "'");
    return static_cast<int>(v);
}

} // namespace

Graph read_graph(std::istream& in) {
    GraphBuilder b;
    std::string line;
    std::vector<std::string> tok;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!tokenize(line, tok, nullptr, line_no)) continue;
        if (tok.size() == 1) {
            b.add_vertex(tok[0]);
        } else if (tok.size() == 2) {
            try {
                b.add_edge(tok[0], tok[1]);
            } catch (const Error& e) {
                fail_parse(line_no, e.what());
            }
        } else {
            fail_parse(line_no, "expected 'u v' or a lone vertex token");
        }
    }
    return b.build();
}

void write_graph(std::ostream& out, const Graph& g) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << g.token(u) << ' ' << g.token(v) << '\n';
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << g.token(v) << '\n';
}

IncidenceColoring read_coloring(std::istream& in, const Graph& g) {
    IncidenceColoring c(g.edge_count());
    std::vector<char> assigned(g.edge_count(), 0);
    std::string line;
    std::vector<std::string> tok;
    int line_no = 0;
    int declared = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!tokenize(line, tok, &declared, line_no)) continue;
        if (tok.size() != 4) fail_parse(line_no, "expected 'u v color_at_u color_at_v'");
        int u = g.find_vertex(tok[0]);
        if (u < 0) fail_parse(line_no, "unknown vertex '" + tok[0] + "'");
        int v = g.find_vertex(tok[1]);
        if (v < 0) fail_parse(line_no, "unknown vertex '" + tok[1] + "'");
        int e = g.find_edge(u, v);
        if (e < 0) fail_parse(line_no, "no edge '" + tok[0] + " " + tok[1] + "'");
        if (assigned[e]) fail_parse(line_no, "edge '" + tok[0] + " " + tok[1] + "' colored twice");
        assigned[e] = 1;
        int cu = parse_color(tok[2], line_no);
        int cv = parse_color(tok[3], line_no);
        if (u < v)
            c.set_edge(e, cu, cv);
        else
            c.set_edge(e, cv, cu);
    }
    if (declared >= 0 && declared != c.palette_size())
        fail_parse(line_no, "palette declared " + std::to_string(declared) + ", colors use " +
                                std::to_string(c.palette_size()));
    return c;
}

void write_coloring(std::ostream& out, const Graph& g, const IncidenceColoring& c) {
    for (int e = 0; e < g.edge_count() && e < c.edge_count(); ++e) {
        ColorPair p = c.edge_pair(e);
        if (p[0] <= 0 || p[1] <= 0) continue;
        auto [u, v] = g.edge(e);
        out << g.token(u) << ' ' << g.token(v) << ' ' << p[0] << ' ' << p[1] << '\n';
    }
    out << "# palette " << c.palette_size() << '\n';
}

static std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
    return out;
}

std::string to_dot(const Graph& g, const IncidenceColoring* c) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << dot_quote(g.token(v)) << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << "  " << dot_quote(g.token(u)) << " -- " << dot_quote(g.token(v));
        if (c && e < c->edge_count()) {
            ColorPair p = c->edge_pair(e);
            if (p[0] > 0 && p[1] > 0)
                out << " [label=\"" << p[0] << '|' << p[1] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cfic
