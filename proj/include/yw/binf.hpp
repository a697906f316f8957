#pragma once

#include "yw/cartan.hpp"
#include "yw/coords.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yw {

// The limit crystal B_inf: the column coordinate model with the level slack
// removed (l = 0), so coordinates range over all integers subject only to the
// per-family constraints below.
bool binf_member(const AffineType& t, const Coords& b);

// b_inf, the all-zero vector.
Coords binf_zero(const AffineType& t);

// Arrow operators. f is total; e is inverse-by-verification and null only
// when no preimage exists.
Coords binf_ftilde(const AffineType& t, int i, const Coords& b);
std::optional<Coords> binf_etilde(const AffineType& t, int i, const Coords& b);

// Closed string lengths at l = 0; either value may be negative.
int binf_eps(const AffineType& t, int i, const Coords& b);
int binf_phi(const AffineType& t, int i, const Coords& b);
Weight binf_vector_weight(const AffineType& t, const Coords& b);

// A coordinate split into nonnegative pairs u - v, with the all-infinite
// ground-state form kept as a flag.
struct ExtendedColumn {
    bool all_infinite = false;
    std::vector<std::pair<int, int>> x;  // (u_i, v_i), index i-1
    std::vector<std::pair<int, int>> xb; // (ubar_i, vbar_i), index i-1
    int x0 = -1;
    std::pair<int, int> slack{0, 0};
    bool has_slack = false;
};

ExtendedColumn extend_column(const AffineType& t, const Coords& b);
Coords collapse_extended(const AffineType& t, const ExtendedColumn& e);

// Walls of B_inf columns realizing B(infinity). cols[0] is the rightmost
// column; normalized form has cols.back() != b_inf.
struct BInfWall {
    std::vector<Coords> cols;
    Weight moves;
};

BInfWall binf_ground(const AffineType& t);
void binf_normalize(const AffineType& t, BInfWall& w);

// Operators by the recursive two-factor tensor rule with a highest tail token
// (eps = 0, phi = 0, wt = 0); word cancellation is not applicable because
// column string lengths may be negative. F is total.
BInfWall binf_wall_ftilde(const AffineType& t, const BInfWall& w, int i);
std::optional<BInfWall> binf_wall_etilde(const AffineType& t, const BInfWall& w, int i);

int binf_wall_eps(const AffineType& t, const BInfWall& w, int i);
int binf_wall_phi(const AffineType& t, const BInfWall& w, int i);
Weight binf_weight(const AffineType& t, const BInfWall& w);

// Columns joined with " | " left to right; the empty wall is "".
std::string binf_wall_to_string(const AffineType& t, const BInfWall& w);

} // namespace yw
