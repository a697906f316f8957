#include "yw/binf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yw {

bool binf_member(const AffineType& t, const Coords& b) {
    switch (t.fam) {
    case Family::A2Even: return true;
    case Family::DTwist: return b.x0 == 0 || b.x0 == 1;
    case Family::CUntwist: return b.coord_sum() % 2 == 0;
    case Family::A2Odd: return b.coord_sum() == 0;
    case Family::DUntwist:
        // x_n, xbar_n stay nonnegative: the node-(n-1)/node-n arrows
        // are not injective once the spur coordinates go below zero.
        return b.coord_sum() == 0 && b.xi(t.n) >= 0 && b.xbi(t.n) >= 0 &&
               (b.xi(t.n) == 0 || b.xbi(t.n) == 0);
    case Family::BUntwist:
        return (b.x0 == 0 || b.x0 == 1) && b.x0 + b.coord_sum() == 0;
    }
    return false;
}

Coords binf_zero(const AffineType& t) { return zero_coords(t); }

Coords binf_ftilde(const AffineType& t, int i, const Coords& b) {
    Coords out = apply_ftilde_raw(t, i, b);
    if (!binf_member(t, out)) throw std::logic_error("arrow left the limit crystal");
    return out;
}

std::optional<Coords> binf_etilde(const AffineType& t, int i, const Coords& b) {
    std::optional<Coords> found;
    for (const Coords& cand : etilde_candidates(t, i, b)) {
        if (!binf_member(t, cand)) continue;
        if (!(binf_ftilde(t, i, cand) == b)) continue;
        if (found && !(*found == cand)) throw std::logic_error("ambiguous inverse arrow");
        found = cand;
    }
    return found;
}

int binf_eps(const AffineType& t, int i, const Coords& b) { return eps_closed(t, 0, i, b); }
int binf_phi(const AffineType& t, int i, const Coords& b) { return phi_closed(t, 0, i, b); }

Weight binf_vector_weight(const AffineType& t, const Coords& b) {
    return weight_closed(t, 0, b);
}

ExtendedColumn extend_column(const AffineType& t, const Coords& b) {
    ExtendedColumn e;
    auto split = [](int v) { return std::make_pair(std::max(v, 0), std::max(-v, 0)); };
    for (int i = 1; i <= t.n; ++i) {
        e.x.push_back(split(b.xi(i)));
        e.xb.push_back(split(b.xbi(i)));
    }
    if (has_x0(t.fam)) e.x0 = b.x0;
    switch (t.fam) {
    case Family::A2Even:
        e.has_slack = true;
        e.slack = split(-b.coord_sum());
        break;
    case Family::DTwist:
        e.has_slack = true;
        e.slack = split(-b.coord_sum() - b.x0);
        break;
    case Family::CUntwist:
        e.has_slack = true;
        e.slack = split(-b.coord_sum());
        break;
    default: break;
    }
    return e;
}

Coords collapse_extended(const AffineType& t, const ExtendedColumn& e) {
    if (e.all_infinite) return binf_zero(t);
    Coords b = zero_coords(t);
    for (int i = 1; i <= t.n; ++i) {
        b.xi(i) = e.x[static_cast<size_t>(i - 1)].first - e.x[static_cast<size_t>(i - 1)].second;
        b.xbi(i) =
            e.xb[static_cast<size_t>(i - 1)].first - e.xb[static_cast<size_t>(i - 1)].second;
    }
    if (has_x0(t.fam)) b.x0 = e.x0;
    return b;
}

BInfWall binf_ground(const AffineType& t) {
    BInfWall w;
    w.moves = zero_weight(t.n);
    return w;
}

void binf_normalize(const AffineType& t, BInfWall& w) {
    const Coords ground = binf_zero(t);
    while (!w.cols.empty() && w.cols.back() == ground) w.cols.pop_back();
}

namespace {

// pre[q] = phi_i of the tail tensored with columns N-1..q.
std::vector<int> prefix_phi(const AffineType& t, const BInfWall& w, int i) {
    const size_t n = w.cols.size();
    std::vector<int> pre(n + 1);
    pre[n] = 0;
    for (size_t q = n; q-- > 0;) {
        const int here = binf_phi(t, i, w.cols[q]);
        pre[q] = std::max(here, pre[q + 1] + pair_h(binf_vector_weight(t, w.cols[q]), i));
    }
    return pre;
}

size_t tensor_walk(const AffineType& t, const BInfWall& w, int i, bool f_rule) {
    const auto pre = prefix_phi(t, w, i);
    const size_t n = w.cols.size();
    size_t p = 0;
    while (p < n) {
        const int eps_here = binf_eps(t, i, w.cols[p]);
        const bool go_left = f_rule ? pre[p + 1] > eps_here : pre[p + 1] >= eps_here;
        if (!go_left) break;
        ++p;
    }
    return p;
}

} // namespace

BInfWall binf_wall_ftilde(const AffineType& t, const BInfWall& w, int i) {
    BInfWall out = w;
    size_t p = tensor_walk(t, out, i, true);
    if (p == out.cols.size()) {
        out.cols.push_back(binf_zero(t));
        p = tensor_walk(t, out, i, true);
        if (p >= out.cols.size())
            throw std::logic_error("second tail materialization requested");
    }
    out.cols[p] = binf_ftilde(t, i, out.cols[p]);
    out.moves[static_cast<size_t>(i)] += 1;
    binf_normalize(t, out);
    return out;
}

std::optional<BInfWall> binf_wall_etilde(const AffineType& t, const BInfWall& w, int i) {
    BInfWall out = w;
    const size_t p = tensor_walk(t, out, i, false);
    if (p == out.cols.size()) return std::nullopt;
    auto img = binf_etilde(t, i, out.cols[p]);
    if (!img) return std::nullopt;
    out.cols[p] = std::move(*img);
    out.moves[static_cast<size_t>(i)] -= 1;
    binf_normalize(t, out);
    return out;
}

int binf_wall_eps(const AffineType& t, const BInfWall& w, int i) {
    const size_t n = w.cols.size();
    Weight wt = zero_weight(t.n);
    std::vector<int> hw(n + 1);
    hw[n] = 0;
    for (size_t q = n; q-- > 0;) {
        wt = weight_add(wt, binf_vector_weight(t, w.cols[q]));
        hw[q] = pair_h(wt, i);
    }
    int eps = 0;
    for (size_t q = n; q-- > 0;)
        eps = std::max(eps, binf_eps(t, i, w.cols[q]) - hw[q + 1]);
    return eps;
}

int binf_wall_phi(const AffineType& t, const BInfWall& w, int i) {
    return prefix_phi(t, w, i)[0];
}

Weight binf_weight(const AffineType& t, const BInfWall& w) {
    Weight wt = zero_weight(t.n);
    for (int i = 0; i <= t.n; ++i)
        wt = weight_sub(wt, weight_scale(w.moves[static_cast<size_t>(i)],
                                         cl_simple_root(t, i)));
    return wt;
}

std::string binf_wall_to_string(const AffineType& t, const BInfWall& w) {
    std::ostringstream os;
    for (size_t p = w.cols.size(); p-- > 0;) {
        os << coords_to_string(t, w.cols[p]);
        if (p) os << " | ";
    }
    return os.str();
}

} // namespace yw
