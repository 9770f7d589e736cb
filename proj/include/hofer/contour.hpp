#pragma once

#include <map>
#include <string>
#include <vector>

#include "hofer/mesh.hpp"

namespace hofer {

// Reeb tree of a piecewise-linear field on the disk. The whole boundary
// circle projects to one designated root node at level zero; every other node
// is a critical point of the collapsed 1-skeleton. Each edge carries the
// measure of the away-from-root side as an exact piecewise-quadratic function
// of the level (per-triangle level-area integration, no sampling).
struct ContourNode {
    int mesh_vertex = -1;  // -1 for the boundary root
    double level = 0.0;
    std::vector<int> edges;  // incident reduced edges
    bool is_root = false;
};

struct MassEntry {
    double level;
    double mass;  // counted while the cut level is at or below `level`
};

struct QuadPiece {
    double lo, hi;        // level window, lo < hi
    double c2, c1, c0;    // triangle superlevel/sublevel area on the window
};

struct ContourEdge {
    int child = -1;       // away-from-root node
    int parent = -1;      // root-ward node
    bool up = true;       // levels increase away from the root
    double child_level = 0.0;
    double parent_level = 0.0;

    double base = 0.0;               // mass hanging strictly beyond `child`
    std::vector<MassEntry> entries;  // sorted by away-progress
    std::vector<QuadPiece> pieces;   // sorted by away-progress

    // away-side measure of a cut at `level`, monotone toward the root end
    double measure(double level) const;
    double measure_at_child() const;
    double measure_at_parent() const;
};

struct ContourTree {
    std::vector<ContourNode> nodes;
    std::vector<ContourEdge> edges;
    int root = -1;
    double root_level_mass = 0.0;  // area of the level-0 plateau (support gap)

    double total_mass() const;  // root plateau + every root-incident branch
};

// Requires a mesh whose 1-skeleton is connected and a value per vertex; ties
// are broken by vertex index (the root ranks below every interior zero).
ContourTree build_contour_tree(const ScalarField& field);

struct CutPoint {
    double x_level = 0.0;
    int edge = -1;       // -1 when the cut degenerates to a node or the root
    int node = -1;       // set when the cut lands exactly on a node
    bool at_root = false;  // no branch reaches measure A: x falls back to root
};

// Walks from the root into the unique branch whose away measure is at least A
// and stops where the measure profile crosses A. A in [1/2, 1).
CutPoint cut_point(const ContourTree& tree, double A);

std::string to_dot(const ContourTree& tree);

// Test/benchmark reference: exact areas of the connected components of
// {F >= level} (or {F <= level} when `superlevel` is false), keyed by a
// representative mesh vertex. Serial union-find plus per-triangle areas;
// `parallel` switches the area accumulation to the OpenMP kernel.
std::map<int, double> component_areas(const ScalarField& field, double level,
                                      bool superlevel, bool parallel);

}  // namespace hofer
