#include "yw/coords.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yw {

bool has_x0(Family fam) { return fam == Family::DTwist || fam == Family::BUntwist; }

int Coords::coord_sum() const {
    int s = 0;
    for (int v : x) s += v;
    for (int v : xb) s += v;
    return s;
}

std::vector<int> Coords::display_tuple() const {
    std::vector<int> t;
    t.reserve(x.size() * 2 + 1);
    for (int v : x) t.push_back(v);
    if (x0 >= 0) t.push_back(x0);
    for (auto it = xb.rbegin(); it != xb.rend(); ++it) t.push_back(*it);
    return t;
}

Coords zero_coords(const AffineType& t) {
    Coords b;
    b.x.assign(static_cast<size_t>(t.n), 0);
    b.xb.assign(static_cast<size_t>(t.n), 0);
    b.x0 = has_x0(t.fam) ? 0 : -1;
    return b;
}

std::string coords_to_string(const AffineType& t, const Coords& b) {
    std::ostringstream os;
    for (int i = 1; i <= t.n; ++i) {
        if (i > 1) os << ',';
        os << b.xi(i);
    }
    if (has_x0(t.fam)) os << '|' << b.x0;
    os << '|';
    for (int i = t.n; i >= 1; --i) {
        os << b.xbi(i);
        if (i > 1) os << ',';
    }
    return os.str();
}

namespace {

std::optional<std::vector<int>> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(part, &pos);
            if (pos != part.size()) return std::nullopt;
            out.push_back(v);
        } catch (...) {
            return std::nullopt;
        }
    }
    return out;
}

} // namespace

std::optional<Coords> parse_coords(const AffineType& t, const std::string& s) {
    std::vector<std::string> groups;
    std::string cur;
    for (char c : s) {
        if (c == '|') {
            groups.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    groups.push_back(cur);
    const size_t expect = has_x0(t.fam) ? 3 : 2;
    if (groups.size() != expect) return std::nullopt;

    const auto front = parse_int_list(groups.front());
    const auto back = parse_int_list(groups.back());
    if (!front || !back) return std::nullopt;
    if (static_cast<int>(front->size()) != t.n || static_cast<int>(back->size()) != t.n)
        return std::nullopt;

    Coords b;
    b.x = *front;
    b.xb.assign(back->rbegin(), back->rend());
    if (has_x0(t.fam)) {
        const auto mid = parse_int_list(groups[1]);
        if (!mid || mid->size() != 1) return std::nullopt;
        b.x0 = (*mid)[0];
    }
    return b;
}

bool lex_less(const Coords& a, const Coords& b) {
    return a.display_tuple() < b.display_tuple();
}

namespace {

int pos_part(int v) { return v > 0 ? v : 0; }

void move_unit(int& from, int& to) {
    from -= 1;
    to += 1;
}

// Node classes shared by several families.

// 0-arrow for A-even and D-twist: grow x1 or shrink x1-bar.
void f0_slack(Coords& b) {
    if (b.xi(1) >= b.xbi(1))
        b.xi(1) += 1;
    else
        b.xbi(1) -= 1;
}

// 0-arrow for the equality families: mirror of the 1-arrow across x <-> xbar.
void f0_equality(Coords& b) {
    if (b.xi(2) >= b.xbi(2))
        move_unit(b.xbi(1), b.xi(2));
    else
        move_unit(b.xbi(2), b.xi(1));
}

void f_interior(Coords& b, int i) {
    if (b.xi(i + 1) >= b.xbi(i + 1))
        move_unit(b.xi(i), b.xi(i + 1));
    else
        move_unit(b.xbi(i + 1), b.xbi(i));
}

void f_top_move(Coords& b, int n) { move_unit(b.xi(n), b.xbi(n)); }

// n-arrow for D-twist and B: toggles the half block counter.
void f_top_half(Coords& b, int n) {
    if (b.x0 == 0) {
        b.xi(n) -= 1;
        b.x0 = 1;
    } else {
        b.x0 = 0;
        b.xbi(n) += 1;
    }
}

} // namespace

Coords apply_ftilde_raw(const AffineType& t, int i, Coords b) {
    const int n = t.n;
    switch (t.fam) {
    case Family::A2Even:
        if (i == 0)
            f0_slack(b);
        else if (i == n)
            f_top_move(b, n);
        else
            f_interior(b, i);
        break;
    case Family::DTwist:
        if (i == 0)
            f0_slack(b);
        else if (i == n)
            f_top_half(b, n);
        else
            f_interior(b, i);
        break;
    case Family::CUntwist:
        if (i == 0) {
            if (b.xi(1) >= b.xbi(1))
                b.xi(1) += 2;
            else if (b.xi(1) == b.xbi(1) - 1) {
                b.xi(1) += 1;
                b.xbi(1) -= 1;
            } else
                b.xbi(1) -= 2;
        } else if (i == n)
            f_top_move(b, n);
        else
            f_interior(b, i);
        break;
    case Family::A2Odd:
        if (i == 0)
            f0_equality(b);
        else if (i == n)
            f_top_move(b, n);
        else
            f_interior(b, i);
        break;
    case Family::DUntwist:
        if (i == 0)
            f0_equality(b);
        else if (i == n - 1) {
            if (b.xbi(n) == 0)
                move_unit(b.xi(n - 1), b.xi(n));
            else
                move_unit(b.xbi(n), b.xbi(n - 1));
        } else if (i == n) {
            if (b.xbi(n) == 0 && b.xi(n) != 0)
                move_unit(b.xi(n), b.xbi(n - 1));
            else
                move_unit(b.xi(n - 1), b.xbi(n));
        } else
            f_interior(b, i);
        break;
    case Family::BUntwist:
        if (i == 0)
            f0_equality(b);
        else if (i == n)
            f_top_half(b, n);
        else
            f_interior(b, i);
        break;
    }
    return b;
}

std::vector<Coords> etilde_candidates(const AffineType& t, int i, const Coords& b) {
    const int n = t.n;
    std::vector<Coords> cands;
    auto add = [&](Coords c) { cands.push_back(std::move(c)); };

    auto inv_move = [&](int a_from, bool from_bar, int a_to, bool to_bar) {
        // Undo move_unit(from, to): from += 1, to -= 1.
        Coords c = b;
        (from_bar ? c.xbi(a_from) : c.xi(a_from)) += 1;
        (to_bar ? c.xbi(a_to) : c.xi(a_to)) -= 1;
        add(std::move(c));
    };

    const bool interior = [&] {
        switch (t.fam) {
        case Family::A2Even:
        case Family::DTwist:
        case Family::CUntwist: return i >= 1 && i <= n - 1;
        case Family::A2Odd:
        case Family::BUntwist: return i >= 1 && i <= n - 1;
        case Family::DUntwist: return i >= 1 && i <= n - 2;
        }
        return false;
    }();

    if (i == 0) {
        switch (t.fam) {
        case Family::A2Even:
        case Family::DTwist: {
            Coords c1 = b;
            c1.xi(1) -= 1;
            add(std::move(c1));
            Coords c2 = b;
            c2.xbi(1) += 1;
            add(std::move(c2));
            break;
        }
        case Family::CUntwist: {
            Coords c1 = b;
            c1.xi(1) -= 2;
            add(std::move(c1));
            Coords c2 = b;
            c2.xi(1) -= 1;
            c2.xbi(1) += 1;
            add(std::move(c2));
            Coords c3 = b;
            c3.xbi(1) += 2;
            add(std::move(c3));
            break;
        }
        case Family::A2Odd:
        case Family::DUntwist:
        case Family::BUntwist:
            inv_move(1, true, 2, false);
            inv_move(2, true, 1, false);
            break;
        }
        return cands;
    }

    if (interior) {
        inv_move(i, false, i + 1, false);
        inv_move(i + 1, true, i, true);
        return cands;
    }

    if (t.fam == Family::DUntwist && i == n - 1) {
        inv_move(n - 1, false, n, false);
        inv_move(n, true, n - 1, true);
        return cands;
    }
    if (t.fam == Family::DUntwist && i == n) {
        inv_move(n, false, n - 1, true);
        inv_move(n - 1, false, n, true);
        return cands;
    }
    if (t.fam == Family::DTwist || t.fam == Family::BUntwist) {
        // i == n: undo the half block toggle.
        if (b.x0 == 1) {
            Coords c = b;
            c.xi(n) += 1;
            c.x0 = 0;
            add(std::move(c));
        } else {
            Coords c = b;
            c.x0 = 1;
            c.xbi(n) -= 1;
            add(std::move(c));
        }
        return cands;
    }
    // i == n, plain move families.
    inv_move(n, false, n, true);
    return cands;
}

namespace {

int slack(const AffineType& t, int l, const Coords& b) {
    switch (t.fam) {
    case Family::A2Even: return l - b.coord_sum();
    case Family::DTwist: return l - b.coord_sum() - b.x0;
    case Family::CUntwist: return 2 * l - b.coord_sum();
    default: throw std::logic_error("slack undefined for equality families");
    }
}

} // namespace

int phi_closed(const AffineType& t, int l, int i, const Coords& b) {
    const int n = t.n;
    if (i == 0) {
        switch (t.fam) {
        case Family::A2Even:
        case Family::DTwist:
            return slack(t, l, b) + 2 * pos_part(b.xbi(1) - b.xi(1));
        case Family::CUntwist:
            return slack(t, l, b) / 2 + pos_part(b.xbi(1) - b.xi(1));
        case Family::A2Odd:
        case Family::DUntwist:
        case Family::BUntwist:
            return b.xbi(1) + pos_part(b.xbi(2) - b.xi(2));
        }
    }
    if (i == n) {
        switch (t.fam) {
        case Family::A2Even:
        case Family::CUntwist:
        case Family::A2Odd:
            return b.xi(n);
        case Family::DTwist:
        case Family::BUntwist:
            return 2 * b.xi(n) + b.x0;
        case Family::DUntwist:
            return b.xi(n - 1) + b.xi(n);
        }
    }
    if (t.fam == Family::DUntwist && i == n - 1) return b.xi(n - 1) + b.xbi(n);
    return b.xi(i) + pos_part(b.xbi(i + 1) - b.xi(i + 1));
}

int eps_closed(const AffineType& t, int l, int i, const Coords& b) {
    const int n = t.n;
    if (i == 0) {
        switch (t.fam) {
        case Family::A2Even:
        case Family::DTwist:
            return slack(t, l, b) + 2 * pos_part(b.xi(1) - b.xbi(1));
        case Family::CUntwist:
            return slack(t, l, b) / 2 + pos_part(b.xi(1) - b.xbi(1));
        case Family::A2Odd:
        case Family::DUntwist:
        case Family::BUntwist:
            return b.xi(1) + pos_part(b.xi(2) - b.xbi(2));
        }
    }
    if (i == n) {
        switch (t.fam) {
        case Family::A2Even:
        case Family::CUntwist:
        case Family::A2Odd:
            return b.xbi(n);
        case Family::DTwist:
        case Family::BUntwist:
            return 2 * b.xbi(n) + b.x0;
        case Family::DUntwist:
            return b.xbi(n - 1) + b.xbi(n);
        }
    }
    if (t.fam == Family::DUntwist && i == n - 1) return b.xbi(n - 1) + b.xi(n);
    return b.xbi(i) + pos_part(b.xi(i + 1) - b.xbi(i + 1));
}

Weight weight_closed(const AffineType& t, int l, const Coords& b) {
    Weight w(static_cast<size_t>(t.n + 1));
    for (int i = 0; i <= t.n; ++i)
        w[static_cast<size_t>(i)] = phi_closed(t, l, i, b) - eps_closed(t, l, i, b);
    return w;
}

} // namespace yw
