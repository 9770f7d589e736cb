#include "hofer/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hofer {

namespace {
constexpr double kPi = std::numbers::pi;
}

double TriangulatedDisk::normalized_area() const {
    double sum = 0.0;
    for (std::size_t t = 0; t < triangles.size(); ++t)
        sum += triangle_area(*this, static_cast<int>(t));
    return sum / kPi;
}

double triangle_area(const TriangulatedDisk& mesh, int t) {
    const auto& [i, j, k] = mesh.triangles[t];
    const Vec2& a = mesh.vertices[i];
    const Vec2& b = mesh.vertices[j];
    const Vec2& c = mesh.vertices[k];
    return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

TriangulatedDisk make_disk_mesh(int rings) {
    if (rings < 1) throw std::invalid_argument("disk mesh needs at least one ring");
    TriangulatedDisk mesh;
    std::vector<int> ring_start(rings + 1, 0);

    mesh.vertices.push_back({0.0, 0.0});
    mesh.boundary.push_back(rings == 0);
    for (int i = 1; i <= rings; ++i) {
        ring_start[i] = static_cast<int>(mesh.vertices.size());
        const int count = 6 * i;
        const double r = static_cast<double>(i) / rings;
        for (int j = 0; j < count; ++j) {
            const double theta = 2.0 * kPi * j / count;
            mesh.vertices.push_back({r * std::cos(theta), r * std::sin(theta)});
            mesh.boundary.push_back(i == rings);
        }
    }

    // zipper between consecutive rings, advancing whichever side lags in angle
    for (int i = 1; i <= rings; ++i) {
        const int inner_count = i == 1 ? 1 : 6 * (i - 1);
        const int outer_count = 6 * i;
        const int inner0 = i == 1 ? 0 : ring_start[i - 1];
        const int outer0 = ring_start[i];
        if (inner_count == 1) {
            for (int j = 0; j < outer_count; ++j)
                mesh.triangles.push_back({inner0, outer0 + j, outer0 + (j + 1) % outer_count});
            continue;
        }
        int ii = 0, oo = 0;
        while (ii < inner_count || oo < outer_count) {
            const double inner_next = (ii + 1.0) / inner_count;
            const double outer_next = (oo + 1.0) / outer_count;
            const int iv = inner0 + ii % inner_count;
            const int ov = outer0 + oo % outer_count;
            if (oo < outer_count && (outer_next <= inner_next || ii == inner_count)) {
                mesh.triangles.push_back({iv, ov, outer0 + (oo + 1) % outer_count});
                ++oo;
            } else {
                mesh.triangles.push_back({iv, ov, inner0 + (ii + 1) % inner_count});
                ++ii;
            }
        }
    }
    return mesh;
}

bool ScalarField::compactly_supported() const {
    if (values.size() != mesh.vertices.size()) return false;
    for (std::size_t v = 0; v < values.size(); ++v)
        if (mesh.boundary[v] && values[v] != 0.0) return false;
    for (const auto& [i, j, k] : mesh.triangles) {
        if (mesh.boundary[i] || mesh.boundary[j] || mesh.boundary[k]) {
            if (values[i] != 0.0 || values[j] != 0.0 || values[k] != 0.0) return false;
        }
    }
    return true;
}

ScalarField make_radial_field(const TriangulatedDisk& mesh,
                              const std::function<double(double)>& profile) {
    ScalarField f;
    f.mesh = mesh;
    f.values.resize(mesh.vertices.size());
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
        const double r = std::hypot(mesh.vertices[v].x, mesh.vertices[v].y);
        f.values[v] = profile(r);
    }
    return f;
}

double RadialBumpProfile::operator()(double r) const {
    const double base = (1.0 - r * r) / 2.0;
    if (r <= exact_until) return base;
    if (r >= zero_from) return 0.0;
    const double s = (r - exact_until) / (zero_from - exact_until);
    return base * 0.5 * (1.0 + std::cos(kPi * s));
}

}  // namespace hofer
