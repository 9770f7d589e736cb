#pragma once

#include <string>
#include <vector>

#include "hofer/meander.hpp"

namespace hofer {

// The graph on complementary regions of the two curves: vertices carry color,
// side and weight; edges are the axis segments in left-to-right order and
// always join two vertices of the same color. Each color class is a tree
// rooted at its boundary-adjacent vertex.
struct GraphVertex {
    RegionId id;
    Color color = Color::Black;
    Side side = Side::North;
    Rational weight;
    bool is_root = false;
};

struct RegionGraph {
    std::vector<GraphVertex> vertices;       // sorted by canonical id
    std::vector<std::pair<int, int>> edges;  // vertex indices, index = segment order
    std::string provenance;                  // canonical key of the source meander

    int find(const RegionId& id) const;
    int root_of(Color c) const;
};

struct RootedTree {
    Color color = Color::Black;
    int root = -1;                           // vertex index in the graph
    std::vector<int> parent;                 // -1 off-tree and at the root
    std::vector<int> depth;                  // -1 off-tree
    std::vector<std::vector<int>> children;  // ordered by connecting edge index
    int tree_depth = 0;
    int edge_count = 0;
};

struct GraphCheckItem {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct GraphCheckReport {
    std::vector<GraphCheckItem> items;
    bool all_pass() const;
};

RegionGraph build_graph(const WeightedMeander& wm);

RootedTree tree_view(const RegionGraph& g, Color color);

// One item per structural property: vertex count, same-color edges,
// alternating edge colors, monochrome forests + connectivity, root count,
// weight half-sums, depth bound.
GraphCheckReport check_graph_invariants(const RegionGraph& g);

// Leaf deletion with weight transfer, mirroring reduce_leaf on the graph
// itself: removes the leaf and its edge, adds its weight to the target, and
// merges the two opposite-color vertices adjacent through the neighboring
// edges (the merged vertex keeps the smaller canonical id). Edge indices are
// compacted to 0..n-2 afterwards.
RegionGraph delete_leaf_surgery(const RegionGraph& g, const RegionId& leaf,
                                const RegionId& target);

// Single-line canonical encoding, injective on (colors, sides, weights,
// ordered edges); equality of encodings is the isomorphism test.
std::string encode(const RegionGraph& g);

std::string to_dot(const RegionGraph& g);

}  // namespace hofer
