#pragma once

#include "yw/cartan.hpp"
#include "yw/coords.hpp"
#include "yw/perfect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yw {

// Ground-state data for B(lambda): the periodic column sequence g_k with
// phi(g_0) = lambda and eps(g_k) = phi(g_{k+1}).
struct GroundState {
    AffineType t;
    int l = 0;
    Weight lambda;
    GroundPair pair; // bprime sits at even positions, b at odd ones

    const Coords& column(size_t k) const { return k % 2 == 0 ? pair.bprime : pair.b; }
    // phi of the position-k ground column; equals lambda at even k.
    const Weight& lambda_at(size_t k) const { return k % 2 == 0 ? lambda : lambda_odd; }

    Weight lambda_odd;
};

GroundState ground_state(const AffineType& t, int l, const Weight& lambda);

// A level-l wall as a lambda-path: explicit columns cols[k] at position k
// (position 0 rightmost), ground columns everywhere beyond. Normalized form
// has cols.back() different from its ground column.
struct Wall {
    std::vector<Coords> cols;
    Weight moves; // blocks added per color since the ground wall
};

Wall ground_wall(const GroundState& g);
void normalize_wall(const GroundState& g, Wall& w);

// Resolution of the i-signature word: the tail contributes <h_i, lambda_N>
// +'s, then each column from position N-1 down to 0 contributes eps_i -'s
// followed by phi_i +'s; adjacent "+-" pairs cancel until none remain.
struct SignatureResolution {
    int eps = 0;
    int phi = 0;
    // Position of the leftmost surviving + / rightmost surviving -. A
    // f_position equal to cols.size() means the unexpanded ground tail.
    // Engaged only when the matching count is positive.
    std::optional<size_t> f_position;
    std::optional<size_t> e_position;
};

SignatureResolution signature(const GroundState& g, const Wall& w, int i);

std::optional<Wall> wall_ftilde(const GroundState& g, const Wall& w, int i);
std::optional<Wall> wall_etilde(const GroundState& g, const Wall& w, int i);

Weight wall_weight(const GroundState& g, const Wall& w);
int wall_eps(const GroundState& g, const Wall& w, int i);
int wall_phi(const GroundState& g, const Wall& w, int i);

// "lambda ; c_{N-1} | ... | c_0" with the highest weight as prefix.
std::string wall_to_string(const GroundState& g, const Wall& w);

// Membership of every column, normalization, block-template integrity, the
// half-depth support rule, the adjacent-column height rule, and agreement of
// the move counter with the intrinsic path weight.
bool validate_wall(const GroundState& g, const Wall& w);

// The same operators computed by the recursive two-factor tensor rule instead
// of word cancellation; an independent engine used for cross-checks.
std::optional<Wall> path_ftilde(const GroundState& g, const Wall& w, int i);
std::optional<Wall> path_etilde(const GroundState& g, const Wall& w, int i);
int path_eps(const GroundState& g, const Wall& w, int i);
int path_phi(const GroundState& g, const Wall& w, int i);
Weight path_weight(const GroundState& g, const Wall& w);

} // namespace yw
