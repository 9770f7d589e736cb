#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace hofer {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Triangulated unit disk. Areas are normalized so the whole disk has measure
// one (euclidean area divided by pi); the inscribed mesh carries slightly
// less, which the invariant check tolerates as boundary defect.
struct TriangulatedDisk {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;  // CCW
    std::vector<bool> boundary;

    double normalized_area() const;  // sum of triangle areas / pi
};

// Polar triangulation with `rings` concentric rings (ring i at radius i/rings
// with 6i vertices); about 6*rings^2 triangles. Halving the edge length means
// doubling `rings`.
TriangulatedDisk make_disk_mesh(int rings);

double triangle_area(const TriangulatedDisk& mesh, int t);

// Piecewise-linear compactly supported function given by vertex values.
struct ScalarField {
    TriangulatedDisk mesh;
    std::vector<double> values;

    // zero on the boundary ring and on every vertex of a boundary triangle
    bool compactly_supported() const;
};

ScalarField make_radial_field(const TriangulatedDisk& mesh,
                              const std::function<double(double)>& profile);

// The rotation Hamiltonian profile used throughout: (1 - r^2)/2 out to
// `exact_until`, then a cosine taper to zero at `zero_from`. The defaults keep
// every cut level probed by A <= 0.95 on the exact part while the integral
// stays within a few 1e-4 of the full-disk value 1/4.
struct RadialBumpProfile {
    double exact_until = 0.976;
    double zero_from = 0.99;

    double operator()(double r) const;
};

}  // namespace hofer
