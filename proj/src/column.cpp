#include "yw/column.hpp"

#include "yw/perfect.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace yw {

namespace {

enum class Depth { Full, Front, Back };

struct Entry {
    int color;
    Depth depth;
};

// One period of the stacking pattern, bottom to top.
std::vector<Entry> pattern_entries(const AffineType& t) {
    const int n = t.n;
    std::vector<Entry> e;
    switch (t.fam) {
    case Family::A2Even:
        e.push_back({0, Depth::Front});
        e.push_back({0, Depth::Back});
        for (int c = 1; c <= n; ++c) e.push_back({c, Depth::Full});
        for (int c = n - 1; c >= 1; --c) e.push_back({c, Depth::Full});
        break;
    case Family::DTwist:
        e.push_back({0, Depth::Front});
        e.push_back({0, Depth::Back});
        for (int c = 1; c <= n - 1; ++c) e.push_back({c, Depth::Full});
        e.push_back({n, Depth::Front});
        e.push_back({n, Depth::Back});
        for (int c = n - 1; c >= 1; --c) e.push_back({c, Depth::Full});
        break;
    case Family::CUntwist:
        e.push_back({0, Depth::Front});
        for (int c = 1; c <= n; ++c) e.push_back({c, Depth::Full});
        for (int c = n - 1; c >= 1; --c) e.push_back({c, Depth::Full});
        break;
    case Family::A2Odd:
        e.push_back({0, Depth::Front});
        e.push_back({1, Depth::Back});
        for (int c = 2; c <= n; ++c) e.push_back({c, Depth::Full});
        for (int c = n - 1; c >= 2; --c) e.push_back({c, Depth::Full});
        break;
    case Family::DUntwist:
        e.push_back({0, Depth::Front});
        e.push_back({1, Depth::Back});
        for (int c = 2; c <= n - 2; ++c) e.push_back({c, Depth::Full});
        e.push_back({n - 1, Depth::Front});
        e.push_back({n, Depth::Back});
        for (int c = n - 2; c >= 2; --c) e.push_back({c, Depth::Full});
        break;
    case Family::BUntwist:
        e.push_back({0, Depth::Front});
        e.push_back({1, Depth::Back});
        for (int c = 2; c <= n - 1; ++c) e.push_back({c, Depth::Full});
        e.push_back({n, Depth::Front});
        e.push_back({n, Depth::Back});
        for (int c = n - 1; c >= 2; --c) e.push_back({c, Depth::Full});
        break;
    }
    return e;
}

Slab range_slab(int hi_exclusive) {
    Slab s;
    for (int i = 0; i < hi_exclusive; ++i) s.entries.push_back(i);
    return s;
}

} // namespace

int delta_entries(const AffineType& t) { return static_cast<int>(pattern_entries(t).size()); }

int entry_color(const AffineType& t, int entry) {
    const auto pe = pattern_entries(t);
    return pe[static_cast<size_t>(entry) % pe.size()].color;
}

bool entry_is_half(const AffineType& t, int entry) {
    const auto pe = pattern_entries(t);
    return pe[static_cast<size_t>(entry) % pe.size()].depth != Depth::Full;
}

std::vector<std::vector<int>> pattern_cells(const AffineType& t) {
    const auto pe = pattern_entries(t);
    std::vector<std::vector<int>> cells;
    for (size_t i = 0; i < pe.size();) {
        if (pe[i].depth == Depth::Front && i + 1 < pe.size() && pe[i + 1].depth == Depth::Back) {
            cells.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
            i += 2;
        } else {
            cells.push_back({static_cast<int>(i)});
            i += 1;
        }
    }
    return cells;
}

int slabs_per_column(const AffineType& t, int l) {
    return t.fam == Family::CUntwist ? 2 * l : l;
}

std::vector<SlabGroup> slab_groups(const AffineType& t) {
    const int n = t.n;
    const int de = delta_entries(t);
    std::vector<SlabGroup> g;
    auto xg = [](int i) { return "x" + std::to_string(i); };
    auto xbg = [](int i) { return "xb" + std::to_string(i); };
    switch (t.fam) {
    case Family::A2Even:
        g.push_back({"slack", range_slab(1)});
        for (int i = 1; i <= n; ++i) g.push_back({xg(i), range_slab(i + 1)});
        for (int i = n; i >= 1; --i) g.push_back({xbg(i), range_slab(de - i + 1)});
        break;
    case Family::DTwist:
        g.push_back({"slack", range_slab(1)});
        for (int i = 1; i <= n; ++i) g.push_back({xg(i), range_slab(i + 1)});
        g.push_back({"x0", range_slab(n + 2)});
        for (int i = n; i >= 1; --i) g.push_back({xbg(i), range_slab(de - i + 1)});
        break;
    case Family::CUntwist:
        g.push_back({"slack", Slab{}});
        for (int i = 1; i <= n; ++i) g.push_back({xg(i), range_slab(i)});
        for (int i = n; i >= 1; --i) g.push_back({xbg(i), range_slab(de - i + 1)});
        break;
    case Family::A2Odd:
        g.push_back({xg(1), range_slab(1)});
        g.push_back({xbg(1), Slab{{1}}});
        for (int i = 2; i <= n; ++i) g.push_back({xg(i), range_slab(i)});
        for (int i = n; i >= 2; --i) g.push_back({xbg(i), range_slab(de - i + 2)});
        break;
    case Family::DUntwist: {
        g.push_back({xg(1), range_slab(1)});
        g.push_back({xbg(1), Slab{{1}}});
        for (int i = 2; i <= n; ++i) g.push_back({xg(i), range_slab(i)});
        Slab xbn = range_slab(n - 1);
        xbn.entries.push_back(n);
        g.push_back({xbg(n), std::move(xbn)});
        g.push_back({xbg(n - 1), range_slab(n + 1)});
        for (int i = n - 2; i >= 2; --i) g.push_back({xbg(i), range_slab(de - i + 2)});
        break;
    }
    case Family::BUntwist:
        g.push_back({xg(1), range_slab(1)});
        g.push_back({xbg(1), Slab{{1}}});
        for (int i = 2; i <= n; ++i) g.push_back({xg(i), range_slab(i)});
        g.push_back({"x0", range_slab(n + 1)});
        for (int i = n; i >= 2; --i) g.push_back({xbg(i), range_slab(de - i + 2)});
        break;
    }
    return g;
}

namespace {

int group_count(const AffineType& t, int l, const Coords& b, const std::string& name) {
    if (name == "slack") {
        switch (t.fam) {
        case Family::A2Even: return l - b.coord_sum();
        case Family::DTwist: return l - b.coord_sum() - b.x0;
        case Family::CUntwist: return 2 * l - b.coord_sum();
        default: return 0;
        }
    }
    if (name == "x0") return b.x0;
    if (name[0] == 'x' && name[1] == 'b') return b.xbi(std::stoi(name.substr(2)));
    return b.xi(std::stoi(name.substr(1)));
}

} // namespace

std::vector<Slab> materialize(const AffineType& t, int l, const Coords& b) {
    if (!member(t, l, b)) throw std::invalid_argument("not a member: " + coords_to_string(t, b));
    std::vector<Slab> slabs;
    for (const SlabGroup& g : slab_groups(t)) {
        const int c = group_count(t, l, b, g.name);
        for (int k = 0; k < c; ++k) slabs.push_back(g.shape);
    }
    return slabs;
}

std::optional<Coords> read_coords(const AffineType& t, int l, const std::vector<Slab>& slabs) {
    if (static_cast<int>(slabs.size()) != slabs_per_column(t, l)) return std::nullopt;
    const auto groups = slab_groups(t);
    std::map<std::string, int> counts;
    for (const Slab& s : slabs) {
        const SlabGroup* match = nullptr;
        for (const SlabGroup& g : groups)
            if (g.shape == s) {
                match = &g;
                break;
            }
        if (!match) return std::nullopt;
        counts[match->name] += 1;
    }
    Coords b = zero_coords(t);
    for (const auto& [name, c] : counts) {
        if (name == "slack") continue;
        if (name == "x0")
            b.x0 = c;
        else if (name[1] == 'b')
            b.xbi(std::stoi(name.substr(2))) = c;
        else
            b.xi(std::stoi(name.substr(1))) = c;
    }
    if (!member(t, l, b)) return std::nullopt;
    // The slack count must be consistent too.
    auto again = materialize(t, l, b);
    auto sorted_in = slabs;
    std::sort(sorted_in.begin(), sorted_in.end());
    std::sort(again.begin(), again.end());
    if (sorted_in != again) return std::nullopt;
    return b;
}

std::vector<Slab> reduce_column(const AffineType& t, std::vector<Slab> slabs) {
    const int de = delta_entries(t);
    for (Slab& s : slabs) {
        for (;;) {
            bool complete = true;
            for (int i = 0; i < de; ++i)
                if (!std::binary_search(s.entries.begin(), s.entries.end(), i)) {
                    complete = false;
                    break;
                }
            const bool above = !s.entries.empty() && s.entries.back() >= de;
            if (!complete || !above) break;
            std::vector<int> next;
            for (int e : s.entries)
                if (e >= de) next.push_back(e - de);
            s.entries = std::move(next);
        }
    }
    return slabs;
}

bool is_reduced_column(const AffineType& t, const std::vector<Slab>& slabs) {
    return reduce_column(t, slabs) == slabs;
}

std::optional<Coords> column_ftilde(const AffineType& t, int l, int i, const Coords& b) {
    auto out = ftilde(t, l, i, b);
    if (out) {
        // Revalidate the block layer: the image must re-read from its slabs.
        auto check = read_coords(t, l, materialize(t, l, *out));
        if (!check || !(*check == *out))
            throw std::logic_error("block layer mismatch after arrow");
    }
    return out;
}

std::optional<Coords> column_etilde(const AffineType& t, int l, int i, const Coords& b) {
    auto out = etilde(t, l, i, b);
    if (out) {
        auto check = read_coords(t, l, materialize(t, l, *out));
        if (!check || !(*check == *out))
            throw std::logic_error("block layer mismatch after arrow");
    }
    return out;
}

std::pair<int, int> column_counts(const AffineType& t, int l, int i, const Coords& b) {
    int eps = 0, phi = 0;
    Coords cur = b;
    while (auto prev = column_etilde(t, l, i, cur)) {
        cur = std::move(*prev);
        ++eps;
    }
    cur = b;
    while (auto next = column_ftilde(t, l, i, cur)) {
        cur = std::move(*next);
        ++phi;
    }
    return {eps, phi};
}

namespace {

std::string color_glyph(int c) {
    return c < 10 ? std::string(1, static_cast<char>('0' + c)) : std::to_string(c);
}

} // namespace

std::string render_text(const AffineType& t, int l, const Coords& b) {
    const auto slabs = materialize(t, l, b);
    const auto cells = pattern_cells(t);
    const auto pe = pattern_entries(t);
    std::ostringstream os;
    for (int row = static_cast<int>(cells.size()) - 1; row >= 0; --row) {
        const auto& cell = cells[static_cast<size_t>(row)];
        std::string line;
        bool any = false;
        for (size_t s = 0; s < slabs.size(); ++s) {
            auto has = [&](int e) {
                return std::binary_search(slabs[s].entries.begin(), slabs[s].entries.end(), e);
            };
            std::string piece = "   ";
            if (cell.size() == 2) {
                const bool fr = has(cell[0]);
                const bool bk = has(cell[1]);
                if (fr || bk) {
                    piece = (fr ? color_glyph(pe[static_cast<size_t>(cell[0])].color) : " ");
                    piece += '\\';
                    piece += (bk ? color_glyph(pe[static_cast<size_t>(cell[1])].color) : " ");
                    any = true;
                }
            } else {
                const int e = cell[0];
                if (has(e)) {
                    if (pe[static_cast<size_t>(e)].depth == Depth::Full)
                        piece = " " + color_glyph(pe[static_cast<size_t>(e)].color) + " ";
                    else
                        piece = color_glyph(pe[static_cast<size_t>(e)].color) + "\\ ";
                    any = true;
                }
            }
            if (s) line += '|';
            line += piece;
        }
        if (any) os << line << '\n';
    }
    for (size_t s = 0; s < slabs.size(); ++s) {
        if (s) os << '+';
        os << "---";
    }
    os << '\n';
    return os.str();
}

std::string render_tikz(const AffineType& t, int l, const Coords& b) {
    const auto slabs = materialize(t, l, b);
    const auto cells = pattern_cells(t);
    const auto pe = pattern_entries(t);
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.5]\n";
    os << "\\draw[thick] (0,0) -- (" << slabs.size() << ",0);\n";
    for (size_t s = 0; s < slabs.size(); ++s) {
        auto has = [&](int e) {
            return std::binary_search(slabs[s].entries.begin(), slabs[s].entries.end(), e);
        };
        for (size_t row = 0; row < cells.size(); ++row) {
            const auto& cell = cells[row];
            const long x = static_cast<long>(s);
            const long y = static_cast<long>(row);
            if (cell.size() == 2) {
                const bool fr = has(cell[0]);
                const bool bk = has(cell[1]);
                if (!fr && !bk) continue;
                os << "\\draw (" << x << "," << y << ") rectangle (" << x + 1 << "," << y + 1
                   << ");\n";
                os << "\\draw (" << x << "," << y << ") -- (" << x + 1 << "," << y + 1 << ");\n";
                if (fr)
                    os << "\\node at (" << x << ".3," << y << ".7) {$"
                       << pe[static_cast<size_t>(cell[0])].color << "$};\n";
                if (bk)
                    os << "\\node at (" << x << ".7," << y << ".3) {$"
                       << pe[static_cast<size_t>(cell[1])].color << "$};\n";
            } else if (has(cell[0])) {
                os << "\\draw (" << x << "," << y << ") rectangle (" << x + 1 << "," << y + 1
                   << ");\n";
                if (pe[static_cast<size_t>(cell[0])].depth != Depth::Full)
                    os << "\\draw (" << x << "," << y << ") -- (" << x + 1 << "," << y + 1
                       << ");\n";
                os << "\\node at (" << x << ".5," << y << ".5) {$"
                   << pe[static_cast<size_t>(cell[0])].color << "$};\n";
            }
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace yw
