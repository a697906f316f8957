#include "yw/graph.hpp"

#include <algorithm>
#include <sstream>

namespace yw {

namespace {

std::string describe(const Graph& g, int id) {
    std::ostringstream os;
    os << "node " << id << " [" << g.nodes[static_cast<size_t>(id)].state << "]";
    return os.str();
}

} // namespace

VerifyReport verify_axioms(const Graph& g) {
    VerifyReport r;
    auto fail = [&](const std::string& msg) {
        r.ok = false;
        if (r.failures.size() < 64) r.failures.push_back(msg);
    };
    const int colors = g.t.n + 1;

    for (size_t v = 0; v < g.nodes.size(); ++v) {
        const GraphNode& node = g.nodes[v];
        if (node.eps.empty()) continue;
        for (int i = 0; i < colors; ++i) {
            const size_t si = static_cast<size_t>(i);
            if (node.phi[si] - node.eps[si] != pair_h(node.weight, i))
                fail("phi - eps does not match the weight pairing at " +
                     describe(g, static_cast<int>(v)) + " color " + std::to_string(i));
            if (g.seminormal && (node.eps[si] < 0 || node.phi[si] < 0))
                fail("negative string length at " + describe(g, static_cast<int>(v)));
        }
    }

    std::map<std::pair<int, int>, int> out, in; // (node, color) -> count
    for (const GraphEdge& e : g.edges) {
        const GraphNode& from = g.nodes[static_cast<size_t>(e.from)];
        const GraphNode& to = g.nodes[static_cast<size_t>(e.to)];
        if (++out[{e.from, e.color}] > 1)
            fail("two outgoing arrows of color " + std::to_string(e.color) + " at " +
                 describe(g, e.from));
        if (++in[{e.to, e.color}] > 1)
            fail("two incoming arrows of color " + std::to_string(e.color) + " at " +
                 describe(g, e.to));
        if (to.depth != from.depth + 1)
            fail("arrow is not graded from " + describe(g, e.from) + " to " +
                 describe(g, e.to));
        if (!(to.weight == weight_sub(from.weight, cl_simple_root(g.t, e.color))))
            fail("weight step mismatch on arrow from " + describe(g, e.from));
        if (from.eps.empty() || to.eps.empty()) continue;
        const size_t si = static_cast<size_t>(e.color);
        if (to.eps[si] != from.eps[si] + 1)
            fail("eps step mismatch on arrow from " + describe(g, e.from));
        if (to.phi[si] != from.phi[si] - 1)
            fail("phi step mismatch on arrow from " + describe(g, e.from));
    }

    for (size_t v = 0; v < g.nodes.size(); ++v) {
        const GraphNode& node = g.nodes[v];
        if (node.eps.empty()) continue;
        for (int i = 0; i < colors; ++i) {
            const bool has_out = out.count({static_cast<int>(v), i}) > 0;
            const bool has_in = in.count({static_cast<int>(v), i}) > 0;
            if (v < g.expanded && node.depth < g.depth_limit) {
                if (g.seminormal && has_out != (node.phi[static_cast<size_t>(i)] > 0))
                    fail("outgoing arrow existence disagrees with phi at " +
                         describe(g, static_cast<int>(v)) + " color " + std::to_string(i));
                if (!g.seminormal && !has_out)
                    fail("missing total arrow at " + describe(g, static_cast<int>(v)) +
                         " color " + std::to_string(i));
            }
            if (has_in != (node.eps[static_cast<size_t>(i)] > 0))
                fail("incoming arrow existence disagrees with eps at " +
                     describe(g, static_cast<int>(v)) + " color " + std::to_string(i));
        }
    }
    return r;
}

bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.nodes.empty() || b.nodes.empty()) return a.nodes.empty() == b.nodes.empty();
    const int colors = a.t.n + 1;
    if (colors != b.t.n + 1) return false;

    auto out_map = [](const Graph& g) {
        std::map<std::pair<int, int>, int> m;
        for (const GraphEdge& e : g.edges) m[{e.from, e.color}] = e.to;
        return m;
    };
    const auto oa = out_map(a);
    const auto ob = out_map(b);

    std::vector<int> pair_of(a.nodes.size(), -1);
    std::vector<bool> hit_b(b.nodes.size(), false);
    std::vector<std::pair<int, int>> queue{{0, 0}};
    pair_of[0] = 0;
    hit_b[0] = true;
    for (size_t at = 0; at < queue.size(); ++at) {
        const auto [va, vb] = queue[at];
        if (!(a.nodes[static_cast<size_t>(va)].weight == b.nodes[static_cast<size_t>(vb)].weight))
            return false;
        if (a.nodes[static_cast<size_t>(va)].depth != b.nodes[static_cast<size_t>(vb)].depth)
            return false;
        for (int i = 0; i < colors; ++i) {
            const auto ea = oa.find({va, i});
            const auto eb = ob.find({vb, i});
            if ((ea == oa.end()) != (eb == ob.end())) return false;
            if (ea == oa.end()) continue;
            const int ca = ea->second;
            const int cb = eb->second;
            if (pair_of[static_cast<size_t>(ca)] == -1) {
                if (hit_b[static_cast<size_t>(cb)]) return false;
                pair_of[static_cast<size_t>(ca)] = cb;
                hit_b[static_cast<size_t>(cb)] = true;
                queue.push_back({ca, cb});
            } else if (pair_of[static_cast<size_t>(ca)] != cb) {
                return false;
            }
        }
    }
    return queue.size() == a.nodes.size() && queue.size() == b.nodes.size();
}

std::map<Weight, int> weight_multiplicities(const Graph& g) {
    std::map<Weight, int> m;
    for (const GraphNode& n : g.nodes) m[n.weight] += 1;
    return m;
}

} // namespace yw
