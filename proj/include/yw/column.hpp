#pragma once

#include "yw/cartan.hpp"
#include "yw/coords.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yw {

// Geometric layer for level-l columns. The canonical representation of a
// column is its coordinate tuple; slabs are materialized for rendering,
// validation, and reduction.

// One vertical slice of a column: the set of filled positions in the repeating
// block pattern, 0-indexed from the bottom. Entries >= one full period occur
// only in non-reduced columns.
struct Slab {
    std::vector<int> entries; // strictly increasing

    bool operator==(const Slab&) const = default;
    bool operator<(const Slab& o) const { return entries < o.entries; }
};

// Number of pattern entries in one full period (one null-root slice).
int delta_entries(const AffineType& t);

// Block color of a pattern entry index (taken mod the period).
int entry_color(const AffineType& t, int entry);

// True if the entry is drawn at half depth, sharing its cell with a partner.
bool entry_is_half(const AffineType& t, int entry);

// Cells of one period, bottom to top; each cell lists 1 or 2 entry indices
// (front first where split).
std::vector<std::vector<int>> pattern_cells(const AffineType& t);

// Slabs per column: l, or 2l for the C family.
int slabs_per_column(const AffineType& t, int l);

// Slab templates of the reduced column, in canonical left-to-right order
// (weakly increasing height). Template index sets are fixed per family.
struct SlabGroup {
    std::string name; // "slack", "x1", "x0", "xb3", ...
    Slab shape;
};

std::vector<SlabGroup> slab_groups(const AffineType& t);

// Coordinates -> slab multiset in canonical order. Requires membership.
std::vector<Slab> materialize(const AffineType& t, int l, const Coords& b);

// Slab multiset -> coordinates; nullopt when a slab matches no template or the
// slab count is wrong for the level.
std::optional<Coords> read_coords(const AffineType& t, int l, const std::vector<Slab>& slabs);

// Removes complete bottom periods that carry at least one block above them,
// per slab, repeating until none remain.
std::vector<Slab> reduce_column(const AffineType& t, std::vector<Slab> slabs);
bool is_reduced_column(const AffineType& t, const std::vector<Slab>& slabs);

// Arrow operators on columns. Equal to the coordinate operators; the block
// layer is revalidated on every application.
std::optional<Coords> column_ftilde(const AffineType& t, int l, int i, const Coords& b);
std::optional<Coords> column_etilde(const AffineType& t, int l, int i, const Coords& b);

// (eps_i, phi_i) by iterating the column operators.
std::pair<int, int> column_counts(const AffineType& t, int l, int i, const Coords& b);

// Schematic planar rendering, slabs left to right, cells bottom-up.
std::string render_text(const AffineType& t, int l, const Coords& b);
std::string render_tikz(const AffineType& t, int l, const Coords& b);

} // namespace yw
