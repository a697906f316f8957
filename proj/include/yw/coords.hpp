#pragma once

#include "yw/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yw {

// Whether the family's vectors carry the extra half-block counter x0.
bool has_x0(Family fam);

// Coordinate tuple of a crystal vector. x[i-1] holds x_i and xb[i-1] holds
// x_i-bar for i = 1..n; x0 is -1 for families without it, otherwise 0 or 1.
// Integer (possibly negative) values are allowed: the same tuple type backs
// both the level-l crystals and the level-zero limit.
struct Coords {
    std::vector<int> x;
    std::vector<int> xb;
    int x0 = -1;

    bool operator==(const Coords&) const = default;

    int n() const { return static_cast<int>(x.size()); }
    int xi(int i) const { return x[static_cast<size_t>(i - 1)]; }
    int xbi(int i) const { return xb[static_cast<size_t>(i - 1)]; }
    int& xi(int i) { return x[static_cast<size_t>(i - 1)]; }
    int& xbi(int i) { return xb[static_cast<size_t>(i - 1)]; }

    // x_1 + ... + x_n + x_1-bar + ... + x_n-bar (x0 excluded).
    int coord_sum() const;

    // (x_1, ..., x_n, [x0,] x_n-bar, ..., x_1-bar): the order used for display
    // and lexicographic enumeration.
    std::vector<int> display_tuple() const;
};

Coords zero_coords(const AffineType& t);

// "x1,..,xn|x0|xbar_n,..,xbar_1" for families with x0, "x1,..,xn|xbar_n,..,xbar_1"
// otherwise.
std::string coords_to_string(const AffineType& t, const Coords& b);
std::optional<Coords> parse_coords(const AffineType& t, const std::string& s);

bool lex_less(const Coords& a, const Coords& b);

// Applies the arrow rule for node i with no membership check. Total on integer
// tuples; the caller decides validity of the result.
Coords apply_ftilde_raw(const AffineType& t, int i, Coords b);

// Raw inverse candidates for node i: each case of the node's arrow rule,
// inverted. Candidates are unverified; the caller must check membership and
// that the forward rule maps the candidate back to b.
std::vector<Coords> etilde_candidates(const AffineType& t, int i, const Coords& b);

// Closed-form string lengths as functions of the coordinates, parameterized by
// the level (l = 0 gives the level-zero limit). Valid on integer tuples.
int phi_closed(const AffineType& t, int l, int i, const Coords& b);
int eps_closed(const AffineType& t, int l, int i, const Coords& b);

// Classical weight sum_i (phi_i - eps_i) Lambda_i from the closed forms.
Weight weight_closed(const AffineType& t, int l, const Coords& b);

} // namespace yw
