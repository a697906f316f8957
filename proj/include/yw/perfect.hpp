#pragma once

#include "yw/cartan.hpp"
#include "yw/coords.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yw {

// Level-l crystal of the family's canonical finite realization. All operations
// take the type and level explicitly; vectors are plain coordinate tuples.

bool member(const AffineType& t, int l, const Coords& b);

// Arrow operators with membership semantics: null (nullopt) when the image
// leaves the crystal.
std::optional<Coords> ftilde(const AffineType& t, int l, int i, const Coords& b);
std::optional<Coords> etilde(const AffineType& t, int l, int i, const Coords& b);

// String lengths by operator iteration.
int phi_iter(const AffineType& t, int l, int i, const Coords& b);
int eps_iter(const AffineType& t, int l, int i, const Coords& b);

// (eps_i, phi_i) by iteration.
std::pair<int, int> epsilon_phi(const AffineType& t, int l, int i, const Coords& b);

// Classical weight sum_i (phi_i - eps_i) Lambda_i.
Weight weight_of(const AffineType& t, int l, const Coords& b);

// eps(b) / phi(b) as weights.
Weight eps_weight(const AffineType& t, int l, const Coords& b);
Weight phi_weight(const AffineType& t, int l, const Coords& b);

// All members in lexicographic display-tuple order.
std::vector<Coords> enumerate(const AffineType& t, int l);

// Minimal vectors attached to a dominant weight lambda of level l: the pair
// (b, b') generating the ground-state sequence. phi(g0) = lambda where g0 is
// bprime; the sequence alternates bprime, b, bprime, ... rightmost first.
// period == 1 iff b == bprime.
struct GroundPair {
    Coords b;
    Coords bprime;
    int period;
};

GroundPair minimal_vector(const AffineType& t, int l, const Weight& lambda);

// Structural verification of the level-l realization.
struct CrystalReport {
    int size = 0;
    bool tensor_connected = false;
    bool unique_top_weight = false;
    bool eps_level_bound = false;
    bool minimal_vectors = false;
    std::vector<std::string> failures;

    bool ok() const {
        return tensor_connected && unique_top_weight && eps_level_bound && minimal_vectors;
    }
};

CrystalReport verify_perfect(const AffineType& t, int l);

// Two-factor tensor state (left, right) under the standard rule. Used for the
// connectivity check and exposed for tests.
struct TensorPair {
    Coords left;
    Coords right;

    bool operator==(const TensorPair&) const = default;
};

int tensor_phi(const AffineType& t, int l, int i, const TensorPair& p);
int tensor_eps(const AffineType& t, int l, int i, const TensorPair& p);
std::optional<TensorPair> tensor_ftilde(const AffineType& t, int l, int i, const TensorPair& p);
std::optional<TensorPair> tensor_etilde(const AffineType& t, int l, int i, const TensorPair& p);

} // namespace yw
