#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yw {

// The six affine families realized by this engine. The token strings used on
// the CLI and in serialized graphs are listed next to each enumerator.
enum class Family {
    A2Even,   // "A2even"  A_{2n}^{(2)},   n >= 1
    DTwist,   // "Dtwist"  D_{n+1}^{(2)},  n >= 2
    A2Odd,    // "A2odd"   A_{2n-1}^{(2)}, n >= 3
    DUntwist, // "D1"      D_n^{(1)},      n >= 4
    BUntwist, // "B1"      B_n^{(1)},      n >= 3
    CUntwist, // "C1"      C_n^{(1)},      n >= 2
};

// An affine type: family plus rank n. Nodes are indexed 0..n.
struct AffineType {
    Family fam;
    int n;

    bool operator==(const AffineType&) const = default;
};

// Classical weight in the level-aware lattice, stored as coefficients
// (k_0, ..., k_n) in the fundamental weight basis.
using Weight = std::vector<int>;

int min_rank(Family fam);
std::string family_token(Family fam);
std::optional<Family> parse_family(const std::string& token);
std::string type_name(const AffineType& t);

// Validates the rank bound for the family.
bool valid_type(const AffineType& t);

// (n+1) x (n+1) generalized Cartan matrix; entry(i,j) = a_ij = <h_i, alpha_j>.
struct CartanMatrix {
    int n;
    std::vector<int> a; // row-major, (n+1)^2

    int at(int i, int j) const { return a[static_cast<size_t>(i) * (n + 1) + j]; }
};

CartanMatrix cartan_matrix(const AffineType& t);

// Coefficients of the central element c = sum c_i h_i.
std::vector<int> central_coefficients(const AffineType& t);

// Coefficients of the null root delta = sum d_i alpha_i.
std::vector<int> null_root_coefficients(const AffineType& t);

// Classical projection of alpha_j expressed in the fundamental weight basis:
// component i equals <h_i, cl(alpha_j)> = a_ij, i.e. column j of the Cartan
// matrix.
Weight cl_simple_root(const AffineType& t, int j);

// <h_i, w> for a weight in the fundamental basis.
inline int pair_h(const Weight& w, int i) { return w[static_cast<size_t>(i)]; }

// Level of a weight: <c, w> = sum c_i k_i.
int level(const AffineType& t, const Weight& w);

// All dominant integral weights of the given level, in lexicographic order of
// (k_0, ..., k_n).
std::vector<Weight> dominant_weights_of_level(const AffineType& t, int l);

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(int s, const Weight& a);
Weight zero_weight(int n);

// "k0,k1,...,kn"
std::string weight_to_string(const Weight& w);
std::optional<Weight> parse_weight(const std::string& s, int n);

} // namespace yw
