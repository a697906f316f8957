#include "yw/perfect.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace yw {

namespace {

bool all_nonneg(const Coords& b) {
    for (int v : b.x)
        if (v < 0) return false;
    for (int v : b.xb)
        if (v < 0) return false;
    return true;
}

} // namespace

bool member(const AffineType& t, int l, const Coords& b) {
    if (b.n() != t.n) return false;
    if (!all_nonneg(b)) return false;
    if (has_x0(t.fam)) {
        if (b.x0 != 0 && b.x0 != 1) return false;
    } else if (b.x0 != -1) {
        return false;
    }
    const int s = b.coord_sum();
    switch (t.fam) {
    case Family::A2Even: return s <= l;
    case Family::DTwist: return s + b.x0 <= l;
    case Family::CUntwist: return s <= 2 * l && s % 2 == 0;
    case Family::A2Odd: return s == l;
    case Family::DUntwist: return s == l && (b.xi(t.n) == 0 || b.xbi(t.n) == 0);
    case Family::BUntwist: return s + b.x0 == l;
    }
    return false;
}

std::optional<Coords> ftilde(const AffineType& t, int l, int i, const Coords& b) {
    Coords c = apply_ftilde_raw(t, i, b);
    if (!member(t, l, c)) return std::nullopt;
    return c;
}

std::optional<Coords> etilde(const AffineType& t, int l, int i, const Coords& b) {
    std::optional<Coords> found;
    for (Coords& cand : etilde_candidates(t, i, b)) {
        if (!member(t, l, cand)) continue;
        if (!(apply_ftilde_raw(t, i, cand) == b)) continue;
        if (found && !(*found == cand))
            throw std::logic_error("ambiguous inverse arrow at " + coords_to_string(t, b));
        found = std::move(cand);
    }
    return found;
}

namespace {

constexpr int kIterCap = 1 << 20;

} // namespace

int phi_iter(const AffineType& t, int l, int i, const Coords& b) {
    int k = 0;
    Coords cur = b;
    while (auto next = ftilde(t, l, i, cur)) {
        cur = std::move(*next);
        if (++k > kIterCap) throw std::logic_error("unbounded arrow string");
    }
    return k;
}

int eps_iter(const AffineType& t, int l, int i, const Coords& b) {
    int k = 0;
    Coords cur = b;
    while (auto prev = etilde(t, l, i, cur)) {
        cur = std::move(*prev);
        if (++k > kIterCap) throw std::logic_error("unbounded arrow string");
    }
    return k;
}

std::pair<int, int> epsilon_phi(const AffineType& t, int l, int i, const Coords& b) {
    return {eps_iter(t, l, i, b), phi_iter(t, l, i, b)};
}

Weight weight_of(const AffineType& t, int l, const Coords& b) {
    Weight w(static_cast<size_t>(t.n + 1));
    for (int i = 0; i <= t.n; ++i)
        w[static_cast<size_t>(i)] = phi_iter(t, l, i, b) - eps_iter(t, l, i, b);
    return w;
}

Weight eps_weight(const AffineType& t, int l, const Coords& b) {
    Weight w(static_cast<size_t>(t.n + 1));
    for (int i = 0; i <= t.n; ++i) w[static_cast<size_t>(i)] = eps_iter(t, l, i, b);
    return w;
}

Weight phi_weight(const AffineType& t, int l, const Coords& b) {
    Weight w(static_cast<size_t>(t.n + 1));
    for (int i = 0; i <= t.n; ++i) w[static_cast<size_t>(i)] = phi_iter(t, l, i, b);
    return w;
}

namespace {

Coords from_display(const AffineType& t, const std::vector<int>& d) {
    Coords b;
    const int n = t.n;
    b.x.assign(d.begin(), d.begin() + n);
    size_t at = static_cast<size_t>(n);
    b.x0 = has_x0(t.fam) ? d[at++] : -1;
    b.xb.assign(d.begin() + static_cast<long>(at), d.end());
    std::reverse(b.xb.begin(), b.xb.end());
    return b;
}

} // namespace

std::vector<Coords> enumerate(const AffineType& t, int l) {
    const int n = t.n;
    const bool hx0 = has_x0(t.fam);
    const int slots = 2 * n + (hx0 ? 1 : 0);
    const int budget = t.fam == Family::CUntwist ? 2 * l : l;
    const int x0_slot = hx0 ? n : -1;

    std::vector<Coords> out;
    std::vector<int> d(static_cast<size_t>(slots), 0);
    auto rec = [&](auto&& self, int slot, int used) -> void {
        if (slot == slots) {
            Coords b = from_display(t, d);
            if (member(t, l, b)) out.push_back(std::move(b));
            return;
        }
        const int cap = slot == x0_slot ? 1 : budget - used;
        for (int v = 0; v <= cap; ++v) {
            if (used + v > budget) break;
            d[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, used + v);
        }
        d[static_cast<size_t>(slot)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// Minimal vector with phi(b) = lambda, by the per-family assignment.
Coords phi_minimal(const AffineType& t, const Weight& k) {
    const int n = t.n;
    Coords b = zero_coords(t);
    auto K = [&](int i) { return k[static_cast<size_t>(i)]; };
    switch (t.fam) {
    case Family::A2Even:
    case Family::CUntwist:
        for (int i = 1; i <= n; ++i) b.xi(i) = b.xbi(i) = K(i);
        break;
    case Family::DTwist:
        b.x0 = K(n) % 2;
        for (int i = 1; i < n; ++i) b.xi(i) = b.xbi(i) = K(i);
        b.xi(n) = b.xbi(n) = (K(n) - b.x0) / 2;
        break;
    case Family::A2Odd:
        b.xi(1) = K(1);
        b.xbi(1) = K(0);
        for (int i = 2; i <= n; ++i) b.xi(i) = b.xbi(i) = K(i);
        break;
    case Family::DUntwist:
        b.xi(1) = K(1);
        b.xbi(1) = K(0);
        for (int i = 2; i <= n - 2; ++i) b.xi(i) = b.xbi(i) = K(i);
        b.xi(n - 1) = b.xbi(n - 1) = std::min(K(n - 1), K(n));
        b.xi(n) = std::max(K(n) - K(n - 1), 0);
        b.xbi(n) = std::max(K(n - 1) - K(n), 0);
        break;
    case Family::BUntwist:
        b.xi(1) = K(1);
        b.xbi(1) = K(0);
        b.x0 = K(n) % 2;
        for (int i = 2; i < n; ++i) b.xi(i) = b.xbi(i) = K(i);
        b.xi(n) = b.xbi(n) = (K(n) - b.x0) / 2;
        break;
    }
    return b;
}

} // namespace

GroundPair minimal_vector(const AffineType& t, int l, const Weight& lambda) {
    if (level(t, lambda) != l) throw std::invalid_argument("weight level mismatch");
    GroundPair g;
    g.bprime = phi_minimal(t, lambda);
    const Weight lambda1 = eps_weight(t, l, g.bprime);
    g.b = phi_minimal(t, lambda1);
    g.period = g.b == g.bprime ? 1 : 2;
    return g;
}

int tensor_phi(const AffineType& t, int l, int i, const TensorPair& p) {
    const Weight wr = weight_of(t, l, p.right);
    return std::max(phi_iter(t, l, i, p.right), phi_iter(t, l, i, p.left) + pair_h(wr, i));
}

int tensor_eps(const AffineType& t, int l, int i, const TensorPair& p) {
    const Weight wl = weight_of(t, l, p.left);
    return std::max(eps_iter(t, l, i, p.left), eps_iter(t, l, i, p.right) - pair_h(wl, i));
}

std::optional<TensorPair> tensor_ftilde(const AffineType& t, int l, int i, const TensorPair& p) {
    if (phi_iter(t, l, i, p.left) > eps_iter(t, l, i, p.right)) {
        auto nl = ftilde(t, l, i, p.left);
        if (!nl) return std::nullopt;
        return TensorPair{std::move(*nl), p.right};
    }
    auto nr = ftilde(t, l, i, p.right);
    if (!nr) return std::nullopt;
    return TensorPair{p.left, std::move(*nr)};
}

std::optional<TensorPair> tensor_etilde(const AffineType& t, int l, int i, const TensorPair& p) {
    if (phi_iter(t, l, i, p.left) >= eps_iter(t, l, i, p.right)) {
        auto nl = etilde(t, l, i, p.left);
        if (!nl) return std::nullopt;
        return TensorPair{std::move(*nl), p.right};
    }
    auto nr = etilde(t, l, i, p.right);
    if (!nr) return std::nullopt;
    return TensorPair{p.left, std::move(*nr)};
}

namespace {

long long int_det(std::vector<std::vector<long long>> m) {
    // Bareiss fraction-free elimination.
    const size_t n = m.size();
    long long prev = 1;
    long long sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Whether delta = sum_{i=1..n} m_i cl(alpha_i) with rational m_i >= 0. The
// classical block of the Cartan matrix is invertible, so Cramer decides; the
// coefficients may be half-integral when the classical root system is
// non-reduced, which is why the cone is taken over the rationals.
bool classical_dominates(const AffineType& t, const Weight& delta) {
    const CartanMatrix A = cartan_matrix(t);
    const int n = t.n;
    std::vector<std::vector<long long>> block(static_cast<size_t>(n),
                                              std::vector<long long>(static_cast<size_t>(n)));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) block[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = A.at(r, c);
    const long long det = int_det(block);
    if (det == 0) throw std::logic_error("singular classical block");

    std::vector<long long> numer(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
        auto replaced = block;
        for (int r = 0; r < n; ++r)
            replaced[static_cast<size_t>(r)][static_cast<size_t>(c)] = delta[static_cast<size_t>(r + 1)];
        const long long dc = int_det(replaced);
        if (dc != 0 && (dc > 0) != (det > 0)) return false;
        numer[static_cast<size_t>(c)] = dc;
    }
    // Row 0 of the defining system, cleared of the common denominator.
    long long row0 = 0;
    for (int c = 1; c <= n; ++c) row0 += static_cast<long long>(A.at(0, c)) * numer[static_cast<size_t>(c - 1)];
    return row0 == delta[0] * det;
}

} // namespace

CrystalReport verify_perfect(const AffineType& t, int l) {
    CrystalReport rep;
    const std::vector<Coords> all = enumerate(t, l);
    rep.size = static_cast<int>(all.size());
    const int n = t.n;

    std::map<std::string, int> index;
    for (int i = 0; i < rep.size; ++i) index[coords_to_string(t, all[static_cast<size_t>(i)])] = i;

    // Connectivity of the two-factor tensor under both arrow directions.
    {
        const auto nverts = static_cast<size_t>(rep.size) * static_cast<size_t>(rep.size);
        std::vector<char> seen(nverts, 0);
        std::vector<size_t> queue{0};
        seen[0] = 1;
        size_t reached = 1;
        auto visit = [&](const TensorPair& p) {
            const size_t id =
                static_cast<size_t>(index.at(coords_to_string(t, p.left))) * static_cast<size_t>(rep.size) +
                static_cast<size_t>(index.at(coords_to_string(t, p.right)));
            if (!seen[id]) {
                seen[id] = 1;
                ++reached;
                queue.push_back(id);
            }
        };
        while (!queue.empty()) {
            const size_t id = queue.back();
            queue.pop_back();
            const TensorPair p{all[id / static_cast<size_t>(rep.size)], all[id % static_cast<size_t>(rep.size)]};
            for (int i = 0; i <= n; ++i) {
                if (auto f = tensor_ftilde(t, l, i, p)) visit(*f);
                if (auto e = tensor_etilde(t, l, i, p)) visit(*e);
            }
        }
        rep.tensor_connected = reached == nverts;
        if (!rep.tensor_connected)
            rep.failures.push_back("tensor square not connected: reached " + std::to_string(reached) +
                                   " of " + std::to_string(nverts));
    }

    // Unique element whose weight dominates all others through the classical
    // simple roots.
    {
        std::vector<Weight> wts;
        wts.reserve(all.size());
        for (const Coords& b : all) wts.push_back(weight_of(t, l, b));
        int tops = 0;
        for (size_t i = 0; i < all.size(); ++i) {
            bool top = true;
            for (size_t j = 0; j < all.size() && top; ++j) {
                if (i == j) continue;
                if (!classical_dominates(t, weight_sub(wts[i], wts[j]))) top = false;
            }
            if (top) ++tops;
        }
        rep.unique_top_weight = tops == 1;
        if (!rep.unique_top_weight)
            rep.failures.push_back("top-weight elements: " + std::to_string(tops));
    }

    // <c, eps(b)> >= l.
    {
        const std::vector<int> c = central_coefficients(t);
        rep.eps_level_bound = true;
        for (const Coords& b : all) {
            int ce = 0;
            for (int i = 0; i <= n; ++i) ce += c[static_cast<size_t>(i)] * eps_iter(t, l, i, b);
            if (ce < l) {
                rep.eps_level_bound = false;
                rep.failures.push_back("<c,eps> = " + std::to_string(ce) + " at " +
                                       coords_to_string(t, b));
                break;
            }
        }
    }

    // Existence and uniqueness of the minimal vectors for every dominant
    // weight of the level, matching the direct construction.
    {
        rep.minimal_vectors = true;
        for (const Weight& lam : dominant_weights_of_level(t, l)) {
            std::vector<const Coords*> phis, epss;
            for (const Coords& b : all) {
                if (phi_weight(t, l, b) == lam) phis.push_back(&b);
                if (eps_weight(t, l, b) == lam) epss.push_back(&b);
            }
            const GroundPair g = minimal_vector(t, l, lam);
            const bool ok = phis.size() == 1 && epss.size() == 1 && *phis[0] == g.bprime &&
                            *epss[0] == g.b;
            if (!ok) {
                rep.minimal_vectors = false;
                rep.failures.push_back("minimal vectors broken at weight " + weight_to_string(lam) +
                                       ": |phi|=" + std::to_string(phis.size()) +
                                       " |eps|=" + std::to_string(epss.size()));
            }
        }
    }

    return rep;
}

} // namespace yw
