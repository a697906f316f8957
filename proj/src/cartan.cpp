#include "yw/cartan.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace yw {

int min_rank(Family fam) {
    switch (fam) {
    case Family::A2Even: return 1;
    case Family::DTwist: return 2;
    case Family::A2Odd: return 3;
    case Family::DUntwist: return 4;
    case Family::BUntwist: return 3;
    case Family::CUntwist: return 2;
    }
    return 0;
}

std::string family_token(Family fam) {
    switch (fam) {
    case Family::A2Even: return "A2even";
    case Family::DTwist: return "Dtwist";
    case Family::A2Odd: return "A2odd";
    case Family::DUntwist: return "D1";
    case Family::BUntwist: return "B1";
    case Family::CUntwist: return "C1";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& token) {
    if (token == "A2even") return Family::A2Even;
    if (token == "Dtwist") return Family::DTwist;
    if (token == "A2odd") return Family::A2Odd;
    if (token == "D1") return Family::DUntwist;
    if (token == "B1") return Family::BUntwist;
    if (token == "C1") return Family::CUntwist;
    return std::nullopt;
}

std::string type_name(const AffineType& t) {
    return family_token(t.fam) + ":" + std::to_string(t.n);
}

bool valid_type(const AffineType& t) { return t.n >= min_rank(t.fam); }

namespace {

void put(CartanMatrix& m, int i, int j, int v) {
    m.a[static_cast<size_t>(i) * (m.n + 1) + j] = v;
}

// Fills a_ij = 2 on the diagonal and the requested off-diagonal entries; all
// other entries stay 0.
CartanMatrix base_matrix(int n) {
    CartanMatrix m{n, std::vector<int>(static_cast<size_t>(n + 1) * (n + 1), 0)};
    for (int i = 0; i <= n; ++i) put(m, i, i, 2);
    return m;
}

void chain(CartanMatrix& m, int i, int j, int aij, int aji) {
    put(m, i, j, aij);
    put(m, j, i, aji);
}

} // namespace

CartanMatrix cartan_matrix(const AffineType& t) {
    if (!valid_type(t)) throw std::invalid_argument("rank below family minimum: " + type_name(t));
    const int n = t.n;
    CartanMatrix m = base_matrix(n);
    switch (t.fam) {
    case Family::A2Even:
        // 0 => 1 ... n with a doubled tail arrow; n = 1 collapses to a_01 = -4.
        if (n == 1) {
            chain(m, 0, 1, -4, -1);
        } else {
            chain(m, 0, 1, -2, -1);
            for (int i = 1; i + 1 < n; ++i) chain(m, i, i + 1, -1, -1);
            chain(m, n - 1, n, -2, -1);
        }
        break;
    case Family::DTwist:
        chain(m, 0, 1, -2, -1);
        for (int i = 1; i + 1 < n; ++i) chain(m, i, i + 1, -1, -1);
        chain(m, n - 1, n, -1, -2);
        break;
    case Family::A2Odd:
        chain(m, 0, 2, -1, -1);
        chain(m, 1, 2, -1, -1);
        for (int i = 2; i + 1 < n; ++i) chain(m, i, i + 1, -1, -1);
        chain(m, n - 1, n, -2, -1);
        break;
    case Family::DUntwist:
        chain(m, 0, 2, -1, -1);
        chain(m, 1, 2, -1, -1);
        for (int i = 2; i + 1 < n - 1; ++i) chain(m, i, i + 1, -1, -1);
        chain(m, n - 2, n - 1, -1, -1);
        chain(m, n - 2, n, -1, -1);
        break;
    case Family::BUntwist:
        chain(m, 0, 2, -1, -1);
        chain(m, 1, 2, -1, -1);
        for (int i = 2; i + 1 < n; ++i) chain(m, i, i + 1, -1, -1);
        chain(m, n - 1, n, -1, -2);
        break;
    case Family::CUntwist:
        chain(m, 0, 1, -1, -2);
        for (int i = 1; i + 1 < n; ++i) chain(m, i, i + 1, -1, -1);
        chain(m, n - 1, n, -2, -1);
        break;
    }
    return m;
}

std::vector<int> central_coefficients(const AffineType& t) {
    const int n = t.n;
    std::vector<int> c(static_cast<size_t>(n + 1), 2);
    switch (t.fam) {
    case Family::A2Even:
        c[0] = 1;
        break;
    case Family::DTwist:
        c[0] = 1;
        c[static_cast<size_t>(n)] = 1;
        break;
    case Family::A2Odd:
        c[0] = 1;
        c[1] = 1;
        break;
    case Family::DUntwist:
        c[0] = 1;
        c[1] = 1;
        c[static_cast<size_t>(n - 1)] = 1;
        c[static_cast<size_t>(n)] = 1;
        break;
    case Family::BUntwist:
        c[0] = 1;
        c[1] = 1;
        c[static_cast<size_t>(n)] = 1;
        break;
    case Family::CUntwist:
        for (auto& v : c) v = 1;
        break;
    }
    return c;
}

std::vector<int> null_root_coefficients(const AffineType& t) {
    const int n = t.n;
    std::vector<int> d(static_cast<size_t>(n + 1), 2);
    switch (t.fam) {
    case Family::A2Even:
        d[static_cast<size_t>(n)] = 1;
        break;
    case Family::DTwist:
        for (auto& v : d) v = 1;
        break;
    case Family::A2Odd:
        d[0] = 1;
        d[1] = 1;
        d[static_cast<size_t>(n)] = 1;
        break;
    case Family::DUntwist:
        d[0] = 1;
        d[1] = 1;
        d[static_cast<size_t>(n - 1)] = 1;
        d[static_cast<size_t>(n)] = 1;
        break;
    case Family::BUntwist:
        d[0] = 1;
        d[1] = 1;
        break;
    case Family::CUntwist:
        d[0] = 1;
        d[static_cast<size_t>(n)] = 1;
        break;
    }
    return d;
}

Weight cl_simple_root(const AffineType& t, int j) {
    const CartanMatrix m = cartan_matrix(t);
    Weight col(static_cast<size_t>(t.n + 1));
    for (int i = 0; i <= t.n; ++i) col[static_cast<size_t>(i)] = m.at(i, j);
    return col;
}

int level(const AffineType& t, const Weight& w) {
    const std::vector<int> c = central_coefficients(t);
    int l = 0;
    for (size_t i = 0; i < c.size(); ++i) l += c[i] * w[i];
    return l;
}

std::vector<Weight> dominant_weights_of_level(const AffineType& t, int l) {
    const std::vector<int> c = central_coefficients(t);
    const int n = t.n;
    std::vector<Weight> out;
    Weight cur(static_cast<size_t>(n + 1), 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
        if (idx == n) {
            if (rem % c[static_cast<size_t>(idx)] == 0) {
                cur[static_cast<size_t>(idx)] = rem / c[static_cast<size_t>(idx)];
                out.push_back(cur);
            }
            return;
        }
        const int ci = c[static_cast<size_t>(idx)];
        for (int k = 0; k * ci <= rem; ++k) {
            cur[static_cast<size_t>(idx)] = k;
            self(self, idx + 1, rem - k * ci);
        }
        cur[static_cast<size_t>(idx)] = 0;
    };
    if (l >= 0) rec(rec, 0, l);
    return out;
}

Weight weight_add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Weight weight_scale(int s, const Weight& a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Weight zero_weight(int n) { return Weight(static_cast<size_t>(n + 1), 0); }

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

std::optional<Weight> parse_weight(const std::string& s, int n) {
    Weight w;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(part, &pos);
            if (pos != part.size()) return std::nullopt;
            w.push_back(v);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (static_cast<int>(w.size()) != n + 1) return std::nullopt;
    return w;
}

} // namespace yw
