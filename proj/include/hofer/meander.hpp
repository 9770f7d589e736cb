#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hofer/rational.hpp"

namespace hofer {

enum class Side : std::uint8_t { North, South };
enum class Color : std::uint8_t { Black, White };

inline Side flip(Side s) { return s == Side::North ? Side::South : Side::North; }
inline Color flip(Color c) { return c == Color::Black ? Color::White : Color::Black; }
inline char side_char(Side s) { return s == Side::North ? 'N' : 'S'; }
inline char color_char(Color c) { return c == Color::Black ? 'B' : 'W'; }

// Combinatorial type of a diameter transverse to the standard one: the curve
// departs the axis at a marker point a, crosses it n times at positions
// numbered 1..n left to right, and lands at a marker point b right of all
// crossings. `order` lists the positions in the order the curve visits them.
struct Meander {
    int n = 0;
    Side start_side = Side::North;
    std::vector<int> order;  // length n, a permutation of {1..n}
};

// One arc of the curve between consecutive visited points. Endpoints are in
// marker coordinates: 0 = a, 1..n = crossings, n+1 = b. `lo < hi` always.
struct Arc {
    int lo = 0;
    int hi = 0;
    Side side = Side::North;
    int traversal_index = 0;  // 0 = the arc leaving a
};

struct ValidationReport {
    bool valid = true;
    std::string message;  // names the first violation when invalid
    bool degenerate_terminal = false;  // n=0 weighting with a zero lens
};

// Canonical region naming: non-root regions are identified by the leftmost
// incident axis segment and their side ("e3N"); the two boundary-adjacent
// regions are "rootW" (north) and "rootB" (south).
struct RegionId {
    bool is_root = false;
    Side side = Side::North;
    int leftmost_edge = -1;

    std::string str() const;
    friend auto operator<=>(const RegionId&, const RegionId&) = default;
};

struct Region {
    RegionId id;
    Side side = Side::North;
    Color color = Color::Black;
    std::vector<int> incident_edges;  // ascending segment indices
    bool is_root = false;
};

// Axis segment strictly between markers: index i runs between marker i and
// i+1, so there are n+1 of them. Each stores the region seen from either side.
struct EdgeFaces {
    int index = 0;
    int north_region = -1;  // index into RegionSet::regions
    int south_region = -1;
};

struct RegionSet {
    std::vector<Region> regions;  // sorted by canonical id
    std::vector<EdgeFaces> edges;

    int find(const RegionId& id) const;  // -1 when absent
    int region_of_edge(int edge, Side s) const;
};

struct WeightedMeander {
    Meander meander;
    RegionSet regions;                 // derived, cached at construction
    std::vector<Rational> weights;     // parallel to regions.regions

    const Rational& weight(const RegionId& id) const;
};

// --- validation ----------------------------------------------------------

std::vector<Arc> arcs_of(const Meander& m);

// Stack-based nesting check; reports the first interleaving same-side arc
// pair. Also rejects malformed `order` (not a permutation of 1..n).
ValidationReport validate_meander(const Meander& m);

// Exhaustive list of valid meanders with exactly n crossings in lexicographic
// (start_side, order) order, North < South. Backtracks over order prefixes.
std::vector<Meander> enumerate_meanders(int n, int cap = 10);

// Left-right mirror image (reflect the axis and reverse the traversal).
Meander mirror(const Meander& m);

// --- regions and weights -------------------------------------------------

RegionSet extract_regions(const Meander& m);

// All four half-sums (north/south/white/black) must equal 1/2 exactly and all
// weights must be positive. The single exception is the degenerate terminal
// at n=0 (lens exactly 0, both roots exactly 1/2), which execute_plan's final
// state must satisfy; it is accepted with degenerate_terminal set.
ValidationReport validate_weights(const WeightedMeander& wm);

WeightedMeander make_weighted(const Meander& m,
                              const std::map<std::string, Rational>& weights);

// Deterministic strictly interior point of the weight polytope (see the
// sampling note in the implementation). n=0 yields the degenerate terminal.
WeightedMeander sample_weights(const Meander& m, std::uint64_t seed);

// Deletes a depth>=2 leaf region (a bigon spanning one axis segment) and
// moves its weight to a region at graph distance 2 in the same-color tree.
// The two opposite-side regions flanking the deleted segment's neighbors
// merge. Crossing count drops by exactly 2.
WeightedMeander reduce_leaf(const WeightedMeander& wm, const RegionId& leaf,
                            const RegionId& target);

// --- canonical keys ------------------------------------------------------

std::string canonical_key(const Meander& m);
std::string canonical_key(const WeightedMeander& wm);

// Fixed symmetric weight scheme used by injectivity sweeps: every region of a
// (side, color) class carries an equal share, classes balanced at 1/4 each
// (n>=1); n=0 maps to the degenerate terminal.
WeightedMeander class_balanced_weights(const Meander& m);

}  // namespace hofer
