#include "yw/wall.hpp"

#include "yw/column.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yw {

GroundState ground_state(const AffineType& t, int l, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != t.n + 1)
        throw std::invalid_argument("weight arity mismatch");
    if (level(t, lambda) != l) throw std::invalid_argument("weight level mismatch");
    for (int k : lambda)
        if (k < 0) throw std::invalid_argument("weight not dominant");
    GroundState g;
    g.t = t;
    g.l = l;
    g.lambda = lambda;
    g.pair = minimal_vector(t, l, lambda);
    g.lambda_odd = eps_weight(t, l, g.pair.bprime);
    return g;
}

Wall ground_wall(const GroundState& g) {
    Wall w;
    w.moves = zero_weight(g.t.n);
    return w;
}

void normalize_wall(const GroundState& g, Wall& w) {
    while (!w.cols.empty() && w.cols.back() == g.column(w.cols.size() - 1)) w.cols.pop_back();
}

SignatureResolution signature(const GroundState& g, const Wall& w, int i) {
    const size_t n = w.cols.size();
    std::vector<size_t> plus;  // stack of surviving +'s, bottom = leftmost
    std::vector<size_t> minus; // surviving -'s in word order
    auto feed_plus = [&](size_t pos, int count) {
        for (int k = 0; k < count; ++k) plus.push_back(pos);
    };
    auto feed_minus = [&](size_t pos, int count) {
        for (int k = 0; k < count; ++k) {
            if (!plus.empty())
                plus.pop_back();
            else
                minus.push_back(pos);
        }
    };
    feed_plus(n, pair_h(g.lambda_at(n), i));
    for (size_t p = n; p-- > 0;) {
        feed_minus(p, eps_closed(g.t, g.l, i, w.cols[p]));
        feed_plus(p, phi_closed(g.t, g.l, i, w.cols[p]));
    }
    SignatureResolution r;
    r.eps = static_cast<int>(minus.size());
    r.phi = static_cast<int>(plus.size());
    if (!plus.empty()) r.f_position = plus.front();
    if (!minus.empty()) r.e_position = minus.back();
    return r;
}

std::optional<Wall> wall_ftilde(const GroundState& g, const Wall& w, int i) {
    SignatureResolution s = signature(g, w, i);
    if (s.phi == 0) return std::nullopt;
    Wall out = w;
    size_t pos = *s.f_position;
    if (pos == out.cols.size()) {
        out.cols.push_back(g.column(pos));
        pos = *signature(g, out, i).f_position;
        if (pos >= out.cols.size())
            throw std::logic_error("second tail materialization requested");
    }
    auto img = ftilde(g.t, g.l, i, out.cols[pos]);
    if (!img) throw std::logic_error("signature pointed at a phi-less column");
    out.cols[pos] = std::move(*img);
    out.moves[static_cast<size_t>(i)] += 1;
    normalize_wall(g, out);
    return out;
}

std::optional<Wall> wall_etilde(const GroundState& g, const Wall& w, int i) {
    SignatureResolution s = signature(g, w, i);
    if (s.eps == 0) return std::nullopt;
    Wall out = w;
    const size_t pos = *s.e_position;
    auto img = etilde(g.t, g.l, i, out.cols[pos]);
    if (!img) throw std::logic_error("signature pointed at an eps-less column");
    out.cols[pos] = std::move(*img);
    out.moves[static_cast<size_t>(i)] -= 1;
    normalize_wall(g, out);
    return out;
}

Weight wall_weight(const GroundState& g, const Wall& w) {
    Weight wt = g.lambda;
    for (int i = 0; i <= g.t.n; ++i)
        wt = weight_sub(wt, weight_scale(w.moves[static_cast<size_t>(i)],
                                         cl_simple_root(g.t, i)));
    return wt;
}

int wall_eps(const GroundState& g, const Wall& w, int i) { return signature(g, w, i).eps; }
int wall_phi(const GroundState& g, const Wall& w, int i) { return signature(g, w, i).phi; }

std::string wall_to_string(const GroundState& g, const Wall& w) {
    std::ostringstream os;
    os << weight_to_string(g.lambda) << " ;";
    for (size_t p = w.cols.size(); p-- > 0;) {
        os << ' ' << coords_to_string(g.t, w.cols[p]);
        if (p) os << " |";
    }
    return os.str();
}

namespace {

int cell_height(const AffineType& t, const Slab& s) {
    if (s.entries.empty()) return 0;
    const auto cells = pattern_cells(t);
    const int de = delta_entries(t);
    std::vector<int> cell_of(static_cast<size_t>(de), 0);
    for (size_t c = 0; c < cells.size(); ++c)
        for (int e : cells[c]) cell_of[static_cast<size_t>(e)] = static_cast<int>(c);
    const int top = s.entries.back();
    return (top / de) * static_cast<int>(cells.size()) + cell_of[static_cast<size_t>(top % de)] + 1;
}

// No full-depth block may rest directly on a half-filled split cell.
bool half_support_ok(const AffineType& t, const Slab& s) {
    const auto cells = pattern_cells(t);
    const auto has = [&](int e) {
        return std::binary_search(s.entries.begin(), s.entries.end(), e);
    };
    for (int e : s.entries) {
        if (entry_is_half(t, e)) continue;
        const int de = delta_entries(t);
        const int period = e / de;
        int cell = -1;
        for (size_t c = 0; c < cells.size(); ++c)
            for (int idx : cells[c])
                if (idx == e % de) cell = static_cast<int>(c);
        if (cell <= 0) continue;
        const auto& below = cells[static_cast<size_t>(cell - 1)];
        if (below.size() != 2) continue;
        const int fr = below[0] + period * de;
        const int bk = below[1] + period * de;
        if (has(fr) != has(bk)) return false;
    }
    return true;
}

} // namespace

bool validate_wall(const GroundState& g, const Wall& w) {
    if (!w.cols.empty() && w.cols.back() == g.column(w.cols.size() - 1)) return false;
    const size_t n = w.cols.size();
    std::vector<std::vector<Slab>> mats;
    mats.reserve(n + 1);
    for (size_t p = 0; p < n; ++p) {
        if (!member(g.t, g.l, w.cols[p])) return false;
        auto slabs = materialize(g.t, g.l, w.cols[p]);
        auto back = read_coords(g.t, g.l, slabs);
        if (!back || !(*back == w.cols[p])) return false;
        for (const Slab& s : slabs)
            if (!half_support_ok(g.t, s)) return false;
        mats.push_back(std::move(slabs));
    }
    mats.push_back(materialize(g.t, g.l, g.column(n)));
    // Adjacent columns: a slab is never shorter than the one a full column to
    // its left in the same slot.
    for (size_t p = 0; p + 1 < mats.size(); ++p)
        for (size_t s = 0; s < mats[p].size(); ++s)
            if (cell_height(g.t, mats[p][s]) < cell_height(g.t, mats[p + 1][s])) return false;
    // The move counter must reproduce the intrinsic path weight.
    return wall_weight(g, w) == path_weight(g, w);
}

namespace {

// pre[q] = phi_i of the tail tensored with columns N-1..q.
std::vector<int> prefix_phi(const GroundState& g, const Wall& w, int i) {
    const size_t n = w.cols.size();
    std::vector<int> pre(n + 1);
    pre[n] = pair_h(g.lambda_at(n), i);
    for (size_t q = n; q-- > 0;) {
        const int here = phi_closed(g.t, g.l, i, w.cols[q]);
        pre[q] = std::max(here, pre[q + 1] + pair_h(weight_closed(g.t, g.l, w.cols[q]), i));
    }
    return pre;
}

} // namespace

Weight path_weight(const GroundState& g, const Wall& w) {
    Weight wt = g.lambda_at(w.cols.size());
    for (const Coords& c : w.cols) wt = weight_add(wt, weight_closed(g.t, g.l, c));
    return wt;
}

int path_phi(const GroundState& g, const Wall& w, int i) { return prefix_phi(g, w, i)[0]; }

int path_eps(const GroundState& g, const Wall& w, int i) {
    const size_t n = w.cols.size();
    Weight wt = g.lambda_at(n);
    std::vector<int> hw(n + 1); // <h_i, wt(prefix q)>
    hw[n] = pair_h(wt, i);
    for (size_t q = n; q-- > 0;) {
        wt = weight_add(wt, weight_closed(g.t, g.l, w.cols[q]));
        hw[q] = pair_h(wt, i);
    }
    int eps = 0; // tail
    for (size_t q = n; q-- > 0;)
        eps = std::max(eps, eps_closed(g.t, g.l, i, w.cols[q]) - hw[q + 1]);
    return eps;
}

namespace {

// Index of the column the operator acts on; n means the tail. strict selects
// the f-rule (left wins ties for e, right wins ties for f).
size_t tensor_walk(const GroundState& g, const Wall& w, int i, bool f_rule) {
    const auto pre = prefix_phi(g, w, i);
    const size_t n = w.cols.size();
    size_t p = 0;
    while (p < n) {
        const int eps_here = eps_closed(g.t, g.l, i, w.cols[p]);
        const bool go_left = f_rule ? pre[p + 1] > eps_here : pre[p + 1] >= eps_here;
        if (!go_left) break;
        ++p;
    }
    return p;
}

} // namespace

std::optional<Wall> path_ftilde(const GroundState& g, const Wall& w, int i) {
    if (path_phi(g, w, i) <= 0) return std::nullopt;
    Wall out = w;
    size_t p = tensor_walk(g, out, i, true);
    if (p == out.cols.size()) {
        out.cols.push_back(g.column(p));
        p = tensor_walk(g, out, i, true);
        if (p >= out.cols.size())
            throw std::logic_error("second tail materialization requested");
    }
    auto img = ftilde(g.t, g.l, i, out.cols[p]);
    if (!img) throw std::logic_error("tensor rule picked a phi-less column");
    out.cols[p] = std::move(*img);
    out.moves[static_cast<size_t>(i)] += 1;
    normalize_wall(g, out);
    return out;
}

std::optional<Wall> path_etilde(const GroundState& g, const Wall& w, int i) {
    if (path_eps(g, w, i) <= 0) return std::nullopt;
    Wall out = w;
    const size_t p = tensor_walk(g, out, i, false);
    if (p == out.cols.size()) return std::nullopt;
    auto img = etilde(g.t, g.l, i, out.cols[p]);
    if (!img) throw std::logic_error("tensor rule picked an eps-less column");
    out.cols[p] = std::move(*img);
    out.moves[static_cast<size_t>(i)] -= 1;
    normalize_wall(g, out);
    return out;
}

} // namespace yw
