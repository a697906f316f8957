#include "yw/io.hpp"

#include "yw/column.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace yw {

namespace {

std::string escape_label(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string export_dot(const Graph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (size_t v = 0; v < g.nodes.size(); ++v)
        os << "  " << v << " [label=\"" << escape_label(g.nodes[v].state) << "\"];\n";
    for (const GraphEdge& e : g.edges)
        os << "  " << e.from << " -> " << e.to << " [label=\"" << e.color << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["cartan"] = family_token(g.t.fam);
    doc["rank"] = g.t.n;
    doc["level"] = g.level;
    doc["highest_weight"] = g.highest_weight;
    doc["realization"] = g.realization;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        nlohmann::ordered_json node;
        node["id"] = v;
        node["depth"] = g.nodes[v].depth;
        node["state"] = g.nodes[v].state;
        node["weight"] = g.nodes[v].weight;
        doc["nodes"].push_back(std::move(node));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const GraphEdge& e : g.edges) {
        nlohmann::ordered_json edge;
        edge["from"] = e.from;
        edge["color"] = e.color;
        edge["to"] = e.to;
        doc["edges"].push_back(std::move(edge));
    }
    return doc.dump(2) + "\n";
}

std::string export_text(const Graph& g) {
    std::ostringstream os;
    os << family_token(g.t.fam) << " n=" << g.t.n << " level=" << g.level << " "
       << g.realization << " highest=" << weight_to_string(g.highest_weight) << "\n";
    int depth = -1;
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        if (g.nodes[v].depth != depth) {
            depth = g.nodes[v].depth;
            os << "depth " << depth << ":\n";
        }
        os << "  " << v << "  " << g.nodes[v].state << "  wt="
           << weight_to_string(g.nodes[v].weight) << "\n";
    }
    for (const GraphEdge& e : g.edges)
        os << e.from << " -" << e.color << "-> " << e.to << "\n";
    return os.str();
}

std::string export_tikz(const Graph& g) {
    std::vector<int> slot(g.nodes.size(), 0);
    std::map<int, int> width;
    for (size_t v = 0; v < g.nodes.size(); ++v) slot[v] = width[g.nodes[v].depth]++;

    std::ostringstream os;
    os << "\\begin{tikzpicture}[>=stealth, every node/.style={font=\\scriptsize}]\n";
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        os << "  \\node[draw] (n" << v << ") at (" << slot[v] * 4 << ", "
           << -3 * g.nodes[v].depth << ") {" << g.nodes[v].state << "};\n";
    }
    for (const GraphEdge& e : g.edges) {
        os << "  \\draw[->] (n" << e.from << ") -- node[midway, inner sep=1pt] {"
           << e.color << "} (n" << e.to << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

Graph parse_graph_document(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::runtime_error(std::string("graph document is not JSON: ") + ex.what());
    }
    auto need = [&](const nlohmann::json& obj, const char* field) -> const nlohmann::json& {
        auto it = obj.find(field);
        if (it == obj.end())
            throw std::runtime_error(std::string("graph document misses \"") + field + "\"");
        return *it;
    };

    Graph g;
    const auto fam = parse_family(need(doc, "cartan").get<std::string>());
    if (!fam) throw std::runtime_error("graph document has an unknown cartan token");
    g.t.fam = *fam;
    g.t.n = need(doc, "rank").get<int>();
    if (!valid_type(g.t)) throw std::runtime_error("graph document rank out of range");
    g.level = need(doc, "level").get<int>();
    g.highest_weight = need(doc, "highest_weight").get<Weight>();
    if (g.highest_weight.size() != static_cast<size_t>(g.t.n + 1))
        throw std::runtime_error("graph document highest_weight arity mismatch");
    g.realization = need(doc, "realization").get<std::string>();
    g.seminormal = g.realization != "binf";

    const auto& nodes = need(doc, "nodes");
    for (const auto& item : nodes) {
        GraphNode node;
        if (need(item, "id").get<size_t>() != g.nodes.size())
            throw std::runtime_error("graph document node ids are not dense");
        node.depth = need(item, "depth").get<int>();
        node.state = need(item, "state").get<std::string>();
        node.weight = need(item, "weight").get<Weight>();
        if (node.weight.size() != static_cast<size_t>(g.t.n + 1))
            throw std::runtime_error("graph document node weight arity mismatch");
        g.nodes.push_back(std::move(node));
    }
    if (g.nodes.empty() || g.nodes[0].depth != 0)
        throw std::runtime_error("graph document has no root at id 0");

    const auto& edges = need(doc, "edges");
    for (const auto& item : edges) {
        GraphEdge e;
        e.from = need(item, "from").get<int>();
        e.color = need(item, "color").get<int>();
        e.to = need(item, "to").get<int>();
        const int count = static_cast<int>(g.nodes.size());
        if (e.from < 0 || e.from >= count || e.to < 0 || e.to >= count)
            throw std::runtime_error("graph document edge endpoint out of range");
        if (e.color < 0 || e.color > g.t.n)
            throw std::runtime_error("graph document edge color out of range");
        g.edges.push_back(e);
    }

    g.depth_limit = 0;
    for (const GraphNode& n : g.nodes) g.depth_limit = std::max(g.depth_limit, n.depth);
    // Nodes of maximal depth carry no arrows in a transcription.
    g.expanded = g.nodes.size();
    return g;
}

Graph load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph_document(buf.str());
    } catch (const std::exception& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
}

std::string render_wall_text(const GroundState& g, const Wall& w) {
    std::ostringstream os;
    os << wall_to_string(g, w) << "\n";
    for (size_t p = w.cols.size(); p-- > 0;) {
        os << "column " << p << ":\n";
        os << render_text(g.t, g.l, w.cols[p]);
    }
    os << "ground column " << w.cols.size() << ":\n";
    os << render_text(g.t, g.l, g.column(w.cols.size()));
    return os.str();
}

std::string render_wall_tikz(const GroundState& g, const Wall& w) {
    std::ostringstream os;
    for (size_t p = w.cols.size(); p-- > 0;) {
        os << "% column " << p << "\n";
        os << render_tikz(g.t, g.l, w.cols[p]);
    }
    os << "% ground column " << w.cols.size() << "\n";
    os << render_tikz(g.t, g.l, g.column(w.cols.size()));
    return os.str();
}

} // namespace yw
