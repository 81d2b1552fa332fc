#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pcmbem/mesh.hpp"
#include "pcmbem/panel.hpp"
#include "pcmbem/vec3.hpp"

namespace pcm {

// Per-panel qualocation geometry: one constant-density unknown per face.
struct PanelSet {
    std::vector<Panel> panels;

    std::size_t size() const { return panels.size(); }
    double area(std::size_t j) const { return panels[j].area; }
    const Vec3& centroid(std::size_t j) const { return panels[j].centroid; }
    const Vec3& normal(std::size_t j) const { return panels[j].normal; }
    double total_area() const;
};

// Vertex collocation points with one-third-area quadrature weights.
struct PointCloud {
    std::vector<Vec3> points;
    std::vector<Vec3> normals;    // unit
    std::vector<double> weights;  // Angstrom^2

    std::size_t size() const { return points.size(); }
    double total_weight() const;
};

// Solute point charges (positions in Angstrom, magnitudes in e).
struct ChargeSet {
    std::vector<Vec3> positions;
    std::vector<double> charges;
    std::vector<double> radii;   // diagnostic only (PQR input)

    std::size_t size() const { return positions.size(); }
    double total_charge() const;
};

PanelSet panel_geometry(const TriangleMesh& mesh);

// One point per mesh vertex; weight = 1/3 of incident face area; normal from
// the mesh's per-vertex normals when present, otherwise the normalized
// area-weighted mean of incident face normals.
PointCloud vertex_quadrature(const TriangleMesh& mesh);

// Record lines "ATOM/HETATM ... x y z charge radius"; other lines ignored.
ChargeSet load_pqr(std::istream& text);

// Q distinct vertices of the grid {(i,j,k)*h : |(i,j,k)*h| <= radius - h},
// drawn by a partial Fisher-Yates shuffle over the lexicographically ordered
// candidate list, driven by splitmix64. Magnitudes alternate +1/-1 by draw
// index. Pure function of (radius, h, q, seed).
ChargeSet sample_grid_charges(double radius, double h, int q, std::uint64_t seed);

// "x,y,z,q" records, '.' decimal separator.
void write_charges_csv(std::ostream& out, const ChargeSet& charges);

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

} // namespace pcm
