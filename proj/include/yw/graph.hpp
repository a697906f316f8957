#pragma once

#include "yw/binf.hpp"
#include "yw/cartan.hpp"
#include "yw/wall.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace yw {

struct GraphNode {
    std::string state;
    int depth = 0;
    Weight weight;
    std::vector<int> eps; // per color, recorded at generation time
    std::vector<int> phi;
};

struct GraphEdge {
    int from = 0;
    int color = 0;
    int to = 0;
};

struct Graph {
    AffineType t;
    int level = 0;           // 0 for the limit realization
    Weight highest_weight;   // all zero for the limit realization
    std::string realization; // "wall", "path", "binf"
    bool seminormal = true;  // arrows exist exactly where the counts allow
    int depth_limit = 0;
    bool node_limit_hit = false;
    size_t expanded = 0; // nodes whose children were generated
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
};

// Generation walks breadth-first from the root, children in color order,
// deduplicating by state string. A System provides:
//   State, root(), f(state, i) -> optional<State>, key(state) -> string,
//   weight(state), eps(state, i), phi(state, i), colors().
template <class System>
Graph generate(const System& sys, int depth_limit,
               size_t node_limit = static_cast<size_t>(-1)) {
    Graph g;
    g.t = sys.type();
    g.level = sys.level();
    g.highest_weight = sys.highest_weight();
    g.realization = sys.realization();
    g.seminormal = sys.seminormal();
    g.depth_limit = depth_limit;

    std::vector<typename System::State> states;
    std::map<std::string, int> index;

    auto add_node = [&](const typename System::State& s, int depth) {
        GraphNode node;
        node.state = sys.key(s);
        node.depth = depth;
        node.weight = sys.weight(s);
        for (int i = 0; i < sys.colors(); ++i) {
            node.eps.push_back(sys.eps(s, i));
            node.phi.push_back(sys.phi(s, i));
        }
        index[node.state] = static_cast<int>(g.nodes.size());
        g.nodes.push_back(std::move(node));
        states.push_back(s);
    };

    if (node_limit == 0) {
        g.node_limit_hit = true;
        return g;
    }
    add_node(sys.root(), 0);

    for (size_t at = 0; at < states.size(); ++at) {
        const int depth = g.nodes[at].depth;
        if (depth >= depth_limit) continue;
        for (int i = 0; i < sys.colors(); ++i) {
            auto child = sys.f(states[at], i);
            if (!child) continue;
            const std::string k = sys.key(*child);
            auto it = index.find(k);
            int to;
            if (it == index.end()) {
                if (g.nodes.size() >= node_limit) {
                    g.node_limit_hit = true;
                    g.expanded = at;
                    return g;
                }
                to = static_cast<int>(g.nodes.size());
                add_node(*child, depth + 1);
            } else {
                to = it->second;
            }
            g.edges.push_back({static_cast<int>(at), i, to});
        }
        g.expanded = at + 1;
    }
    return g;
}

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks the crystal structure on the generated truncation: weight/eps/phi
// steps along edges, phi - eps = <h_i, wt>, functional colored edges, graded
// depths, and arrow existence matching the counts. Nodes whose children were
// not generated are exempt from outgoing-arrow existence checks.
VerifyReport verify_axioms(const Graph& g);

// Simultaneous BFS from both roots pairing children by color; true iff the
// pairing never diverges and paired vertices carry equal weights.
bool graphs_equal(const Graph& a, const Graph& b);

std::map<Weight, int> weight_multiplicities(const Graph& g);

// Adapters for the three realizations.
struct WallSystem {
    GroundState g;
    using State = Wall;
    AffineType type() const { return g.t; }
    int level() const { return g.l; }
    Weight highest_weight() const { return g.lambda; }
    std::string realization() const { return "wall"; }
    bool seminormal() const { return true; }
    int colors() const { return g.t.n + 1; }
    State root() const { return ground_wall(g); }
    std::optional<State> f(const State& w, int i) const { return wall_ftilde(g, w, i); }
    std::string key(const State& w) const { return wall_to_string(g, w); }
    Weight weight(const State& w) const { return wall_weight(g, w); }
    int eps(const State& w, int i) const { return wall_eps(g, w, i); }
    int phi(const State& w, int i) const { return wall_phi(g, w, i); }
};

struct PathSystem {
    GroundState g;
    using State = Wall;
    AffineType type() const { return g.t; }
    int level() const { return g.l; }
    Weight highest_weight() const { return g.lambda; }
    std::string realization() const { return "path"; }
    bool seminormal() const { return true; }
    int colors() const { return g.t.n + 1; }
    State root() const { return ground_wall(g); }
    std::optional<State> f(const State& w, int i) const { return path_ftilde(g, w, i); }
    std::string key(const State& w) const { return wall_to_string(g, w); }
    Weight weight(const State& w) const { return path_weight(g, w); }
    int eps(const State& w, int i) const { return path_eps(g, w, i); }
    int phi(const State& w, int i) const { return path_phi(g, w, i); }
};

struct BInfSystem {
    AffineType t;
    using State = BInfWall;
    AffineType type() const { return t; }
    int level() const { return 0; }
    Weight highest_weight() const { return zero_weight(t.n); }
    std::string realization() const { return "binf"; }
    bool seminormal() const { return false; }
    int colors() const { return t.n + 1; }
    State root() const { return binf_ground(t); }
    std::optional<State> f(const State& w, int i) const { return binf_wall_ftilde(t, w, i); }
    std::string key(const State& w) const { return binf_wall_to_string(t, w); }
    Weight weight(const State& w) const { return binf_weight(t, w); }
    int eps(const State& w, int i) const { return binf_wall_eps(t, w, i); }
    int phi(const State& w, int i) const { return binf_wall_phi(t, w, i); }
};

} // namespace yw
