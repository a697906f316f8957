#include "yw/binf.hpp"
#include "yw/cartan.hpp"
#include "yw/graph.hpp"
#include "yw/io.hpp"
#include "yw/wall.hpp"

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

namespace {

struct Options {
    std::string cartan;
    int rank = 0;
    int level = 0;
    std::string weight;
    std::string realization = "wall";
    int depth = 5;
    std::size_t max_nodes = static_cast<std::size_t>(-1);
    std::string format;
    std::string out;
};

int usage_error(const std::string& flag, const std::string& msg) {
    std::cerr << "error: " << flag << ": " << msg << "\n";
    return 2;
}

void add_type_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--cartan", o.cartan, "family token: A2even, Dtwist, A2odd, D1, B1, C1")
        ->required();
    cmd->add_option("--rank", o.rank, "rank n")->required();
}

void add_weight_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--level", o.level, "level of the highest weight");
    cmd->add_option("--weight", o.weight, "highest weight k0,..,kn");
}

void add_graph_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--depth", o.depth, "generation depth limit");
    cmd->add_option("--max-nodes", o.max_nodes, "vertex budget");
}

void add_output_flags(CLI::App* cmd, Options& o, const std::string& def) {
    o.format = def;
    cmd->add_option("--format", o.format, "output format");
    cmd->add_option("--out", o.out, "output path (default stdout)");
}

int resolve_type(const Options& o, yw::AffineType& t) {
    const auto fam = yw::parse_family(o.cartan);
    if (!fam) return usage_error("--cartan", "unknown family token \"" + o.cartan + "\"");
    t = {*fam, o.rank};
    if (!yw::valid_type(t))
        return usage_error("--rank", std::to_string(o.rank) + " is out of range for " + o.cartan);
    return 0;
}

// Fills gs from --weight/--level; --level may be omitted and is then derived.
int resolve_ground(const CLI::App* cmd, const Options& o, const yw::AffineType& t,
                   std::optional<yw::GroundState>& gs) {
    if (cmd->count("--weight") == 0) return usage_error("--weight", "is required");
    const auto lambda = yw::parse_weight(o.weight, t.n);
    if (!lambda)
        return usage_error("--weight", "expects " + std::to_string(t.n + 1) +
                                           " comma-separated entries");
    const int l = yw::level(t, *lambda);
    if (cmd->count("--level") > 0 && o.level != l)
        return usage_error("--level", std::to_string(o.level) + " does not match the weight (level " +
                                          std::to_string(l) + ")");
    try {
        gs = yw::ground_state(t, l, *lambda);
    } catch (const std::invalid_argument& ex) {
        return usage_error("--weight", ex.what());
    }
    return 0;
}

int write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << o.out << "\n";
        return 1;
    }
    out << text;
    return 0;
}

int serialize_graph(const Options& o, const yw::Graph& g) {
    std::string text;
    if (o.format == "dot")
        text = yw::export_dot(g);
    else if (o.format == "json")
        text = yw::export_json(g);
    else if (o.format == "text")
        text = yw::export_text(g);
    else if (o.format == "tikz")
        text = yw::export_tikz(g);
    else
        return usage_error("--format", "expected dot, json, text, or tikz");
    return write_output(o, text);
}

int build_graph(const CLI::App* cmd, const Options& o, yw::Graph& g) {
    yw::AffineType t;
    if (int rc = resolve_type(o, t)) return rc;
    if (o.depth < 0) return usage_error("--depth", "must be nonnegative");

    if (o.realization == "binf") {
        g = yw::generate(yw::BInfSystem{t}, o.depth, o.max_nodes);
        return 0;
    }
    std::optional<yw::GroundState> gs;
    if (int rc = resolve_ground(cmd, o, t, gs)) return rc;
    if (o.realization == "wall")
        g = yw::generate(yw::WallSystem{*gs}, o.depth, o.max_nodes);
    else if (o.realization == "path")
        g = yw::generate(yw::PathSystem{*gs}, o.depth, o.max_nodes);
    else
        return usage_error("--realization", "expected wall, path, or binf");
    return 0;
}

int cmd_gen(const CLI::App* cmd, const Options& o) {
    yw::Graph g;
    if (int rc = build_graph(cmd, o, g)) return rc;
    return serialize_graph(o, g);
}

int cmd_verify(const CLI::App* cmd, const Options& o) {
    yw::Graph g;
    if (int rc = build_graph(cmd, o, g)) return rc;
    const yw::VerifyReport report = yw::verify_axioms(g);
    if (report.ok) {
        std::cout << "OK " << g.nodes.size() << " vertices " << g.edges.size() << " arrows\n";
        return 0;
    }
    for (const std::string& f : report.failures) std::cerr << f << "\n";
    return 1;
}

int cmd_ground_state(const CLI::App* cmd, const Options& o) {
    yw::AffineType t;
    if (int rc = resolve_type(o, t)) return rc;
    std::optional<yw::GroundState> gs;
    if (int rc = resolve_ground(cmd, o, t, gs)) return rc;

    std::cout << "lambda = " << yw::weight_to_string(gs->lambda) << "  level " << gs->l
              << "  period " << gs->pair.period << "\n";
    for (size_t k = 0; k < 2; ++k) {
        const yw::Coords& b = gs->column(k);
        std::cout << "g_" << k << " = " << yw::coords_to_string(t, b)
                  << "  phi = " << yw::weight_to_string(yw::phi_weight(t, gs->l, b))
                  << "  eps = " << yw::weight_to_string(yw::eps_weight(t, gs->l, b)) << "\n";
    }
    return 0;
}

int cmd_compare(const CLI::App* cmd, const Options& o) {
    yw::AffineType t;
    if (int rc = resolve_type(o, t)) return rc;
    if (o.depth < 0) return usage_error("--depth", "must be nonnegative");
    std::optional<yw::GroundState> gs;
    if (int rc = resolve_ground(cmd, o, t, gs)) return rc;

    const yw::Graph a = yw::generate(yw::WallSystem{*gs}, o.depth, o.max_nodes);
    const yw::Graph b = yw::generate(yw::PathSystem{*gs}, o.depth, o.max_nodes);
    if (yw::graphs_equal(a, b)) {
        std::cout << "EQUAL\n";
        return 0;
    }
    std::cout << "DIFFER\n";
    return 1;
}

int cmd_binf(const Options& o) {
    yw::AffineType t;
    if (int rc = resolve_type(o, t)) return rc;
    if (o.depth < 0) return usage_error("--depth", "must be nonnegative");
    const yw::Graph g = yw::generate(yw::BInfSystem{t}, o.depth, o.max_nodes);
    return serialize_graph(o, g);
}

int cmd_render(const CLI::App* cmd, const Options& o) {
    yw::AffineType t;
    if (int rc = resolve_type(o, t)) return rc;
    std::optional<yw::GroundState> gs;
    if (int rc = resolve_ground(cmd, o, t, gs)) return rc;

    const yw::Wall w = yw::ground_wall(*gs);
    std::string text;
    if (o.format == "text")
        text = yw::render_wall_text(*gs, w);
    else if (o.format == "tikz")
        text = yw::render_wall_tikz(*gs, w);
    else
        return usage_error("--format", "expected text or tikz");
    return write_output(o, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"highest weight crystal graphs from Young walls"};
    app.require_subcommand(1);
    Options o;

    CLI::App* gen = app.add_subcommand("gen", "generate a crystal graph");
    add_type_flags(gen, o);
    add_weight_flags(gen, o);
    gen->add_option("--realization", o.realization, "wall, path, or binf");
    add_graph_flags(gen, o);
    add_output_flags(gen, o, "text");

    CLI::App* verify = app.add_subcommand("verify", "generate and check the crystal axioms");
    add_type_flags(verify, o);
    add_weight_flags(verify, o);
    verify->add_option("--realization", o.realization, "wall, path, or binf");
    add_graph_flags(verify, o);

    CLI::App* ground = app.add_subcommand("ground-state", "print the ground-state column data");
    add_type_flags(ground, o);
    add_weight_flags(ground, o);

    CLI::App* compare = app.add_subcommand("compare", "wall engine vs tensor-path engine");
    add_type_flags(compare, o);
    add_weight_flags(compare, o);
    add_graph_flags(compare, o);

    CLI::App* binf = app.add_subcommand("binf", "generate the limit crystal graph");
    add_type_flags(binf, o);
    add_graph_flags(binf, o);
    add_output_flags(binf, o, "text");

    CLI::App* render = app.add_subcommand("render", "draw the ground-state wall");
    add_type_flags(render, o);
    add_weight_flags(render, o);
    add_output_flags(render, o, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen, o);
        if (verify->parsed()) return cmd_verify(verify, o);
        if (ground->parsed()) return cmd_ground_state(ground, o);
        if (compare->parsed()) return cmd_compare(compare, o);
        if (binf->parsed()) return cmd_binf(o);
        if (render->parsed()) return cmd_render(render, o);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
