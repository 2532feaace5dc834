#include "cfic/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cfic/channels.hpp"
#include "cfic/class_p.hpp"
#include "cfic/closed_form.hpp"
#include "cfic/io.hpp"
#include "cfic/o1p.hpp"
#include "cfic/oracle.hpp"

namespace cfic {

namespace {

Graph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return read_graph(in);
    std::ifstream f(path);
    if (!f) fail_domain("cannot open '" + path + "'");
    return read_graph(f);
}

IncidenceColoring load_coloring(const std::string& path, std::istream& in, const Graph& g) {
    if (path == "-") return read_coloring(in, g);
    std::ifstream f(path);
    if (!f) fail_domain("cannot open '" + path + "'");
    return read_coloring(f, g);
}

// routes output to a file when -o is given, else to the session stream
class OutTarget {
public:
    OutTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) fail_domain("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

const char* case_name(O1PCase c) {
    switch (c) {
    case O1PCase::triangle: return "cycle-C3";
    case O1PCase::even_cycle: return "cycle-even";
    case O1PCase::odd_cycle: return "cycle-odd";
    case O1PCase::p_plus: return "class-p-plus";
    case O1PCase::class_one: return "class-one";
    }
    return "?";
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"provably optimal conflict-free incidence colorings"};
    app.name("cfic");
    app.require_subcommand(1);

    std::string graph_path, coloring_path, out_path;
    std::uint64_t budget_nodes = UINT64_MAX;

    bool color_verify_flag = false;
    CLI::App* cmd_color = app.add_subcommand("color", "color a connected graph optimally");
    cmd_color->add_option("graph", graph_path, "edge-list file, - for stdin")->required();
    cmd_color->add_option("-o,--output", out_path, "write the coloring here");
    cmd_color->add_option("--budget", budget_nodes, "search node limit");
    cmd_color->add_flag("--verify", color_verify_flag, "acknowledge the pre-output verification");

    bool chi_exact_flag = false;
    CLI::App* cmd_chi = app.add_subcommand("chi", "print the optimal palette size");
    cmd_chi->add_option("graph", graph_path, "edge-list file, - for stdin")->required();
    cmd_chi->add_flag("--exact", chi_exact_flag, "use the exhaustive search instead of the theory");
    cmd_chi->add_option("--budget", budget_nodes, "search node limit");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check a coloring against a graph");
    cmd_verify->add_option("graph", graph_path, "edge-list file, - for stdin")->required();
    cmd_verify->add_option("coloring", coloring_path, "coloring file, - for stdin")->required();

    CLI::App* cmd_classify = app.add_subcommand("classify", "report P / P+ / other");
    cmd_classify->add_option("graph", graph_path, "edge-list file, - for stdin")->required();

    CLI::App* cmd_channels = app.add_subcommand("channels", "per-vertex channel report");
    cmd_channels->add_option("graph", graph_path, "edge-list file, - for stdin")->required();
    cmd_channels->add_option("coloring", coloring_path, "coloring file, - for stdin")->required();

    std::string dot_coloring;
    CLI::App* cmd_export = app.add_subcommand("export", "emit Graphviz DOT");
    cmd_export->add_option("graph", graph_path, "edge-list file, - for stdin")->required();
    cmd_export->add_option("--coloring", dot_coloring, "label edges with this coloring");
    cmd_export->add_option("-o,--output", out_path, "write DOT here");

    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a named graph");
    cmd_gen->require_subcommand(1);
    int gen_n = 0;
    std::string gen_coloring_path;
    CLI::App* gen_cycle = cmd_gen->add_subcommand("cycle", "cycle on n vertices");
    gen_cycle->add_option("n", gen_n, "vertex count, >= 3")->required();
    gen_cycle->add_option("-o,--output", out_path, "write the edge list here");
    gen_cycle->add_option("--coloring", gen_coloring_path, "also write the optimal coloring");
    CLI::App* gen_complete = cmd_gen->add_subcommand("complete", "complete graph on n vertices");
    gen_complete->add_option("n", gen_n, "vertex count, >= 1")->required();
    gen_complete->add_option("-o,--output", out_path, "write the edge list here");
    gen_complete->add_option("--coloring", gen_coloring_path, "also write the optimal coloring");
    CLI::App* gen_core = cmd_gen->add_subcommand("k4plus", "K4 with one edge subdivided");
    gen_core->add_option("-o,--output", out_path, "write the edge list here");
    gen_core->add_option("--coloring", gen_coloring_path, "also write the canonical coloring");
    std::string steps_spec;
    std::optional<std::uint64_t> seed;
    int step_count = 6, max_rail = 3;
    CLI::App* gen_p = cmd_gen->add_subcommand("class-p", "member of the hard class");
    gen_p->add_option("--steps", steps_spec, "construction plan, e.g. g2,h3,g8");
    gen_p->add_option("--seed", seed, "random member from this seed");
    gen_p->add_option("--step-count", step_count, "pastes for the random member");
    gen_p->add_option("--max-rail", max_rail, "largest ladder rail length");
    gen_p->add_option("-o,--output", out_path, "write the edge list here");
    gen_p->add_option("--coloring", gen_coloring_path, "also write the optimal coloring");

    std::vector<const char*> argv;
    argv.push_back("cfic");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        Budget budget{budget_nodes};

        if (*cmd_color) {
            Graph g = load_graph(graph_path, in);
            O1PVerdict v = color_o1p(g, budget);
            VerifyResult check = verify(g, v.coloring);
            if (!check.ok()) fail_domain("internal: produced coloring failed verification");
            OutTarget t(out_path, out);
            t.get() << "# case " << case_name(v.kind) << "\n# chi " << v.chi << '\n';
            if (color_verify_flag) t.get() << "# verified\n";
            write_coloring(t.get(), g, v.coloring);
            return 0;
        }

        if (*cmd_chi) {
            Graph g = load_graph(graph_path, in);
            if (chi_exact_flag) {
                ChiResult r = chi_exact(g, budget);
                if (r.status == SearchStatus::budget_exceeded)
                    fail_budget("exhaustive search ran out of budget");
                out << r.chi << '\n';
            } else {
                out << chi_o1p(g) << '\n';
            }
            return 0;
        }

        if (*cmd_verify) {
            Graph g = load_graph(graph_path, in);
            IncidenceColoring c = load_coloring(coloring_path, in, g);
            VerifyResult r = verify(g, c);
            if (r.ok()) {
                out << "valid (palette " << c.palette_size() << ")\n";
                return 0;
            }
            out << (r.status == VerifyResult::Status::partial ? "partial: " : "invalid: ")
                << r.message << '\n';
            return 1;
        }

        if (*cmd_classify) {
            Graph g = load_graph(graph_path, in);
            if (is_in_p(g))
                out << "P\n";
            else if (is_in_p_plus(g))
                out << "P+\n";
            else
                out << "other\n";
            return 0;
        }

        if (*cmd_channels) {
            Graph g = load_graph(graph_path, in);
            IncidenceColoring c = load_coloring(coloring_path, in, g);
            ChannelReport rep = channel_report(g, c);
            for (const VertexChannels& vc : rep.per_vertex) {
                out << g.token(vc.vertex) << (vc.rainbow ? " rainbow" : " clash");
                for (int ch : vc.channels) out << ' ' << ch;
                out << '\n';
            }
            out << "# all-rainbow " << (rep.all_rainbow ? "true" : "false") << '\n';
            return 0;
        }

        if (*cmd_export) {
            Graph g = load_graph(graph_path, in);
            std::optional<IncidenceColoring> c;
            if (!dot_coloring.empty()) c = load_coloring(dot_coloring, in, g);
            OutTarget t(out_path, out);
            t.get() << to_dot(g, c ? &*c : nullptr);
            return 0;
        }

        if (*cmd_gen) {
            Graph g;
            IncidenceColoring closed;
            if (*gen_cycle) {
                ColoredGraph cg = color_cycle(gen_n);
                g = std::move(cg.graph);
                closed = std::move(cg.coloring);
            } else if (*gen_complete) {
                ColoredGraph cg = color_complete(gen_n);
                g = std::move(cg.graph);
                closed = std::move(cg.coloring);
            } else if (*gen_core) {
                g = k4_plus();
                closed = k4_plus_coloring();
            } else {  // class-p
                if (!steps_spec.empty() && seed)
                    fail_domain("--steps and --seed are mutually exclusive");
                if (!steps_spec.empty()) {
                    g = build_class_p(parse_step_spec(steps_spec));
                } else {
                    std::mt19937_64 rng(seed.value_or(1));  // fixed default seed
                    g = random_class_p(rng, step_count, max_rail);
                }
                if (!gen_coloring_path.empty()) closed = color_class_p(g);
            }
            OutTarget t(out_path, out);
            write_graph(t.get(), g);
            if (!gen_coloring_path.empty()) {
                OutTarget ct(gen_coloring_path, out);
                write_coloring(ct.get(), g, closed);
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind == ErrorKind::budget ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace cfic
