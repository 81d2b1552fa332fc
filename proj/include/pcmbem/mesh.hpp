#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pcmbem/vec3.hpp"

namespace pcm {

// Closed triangulated surface, counter-clockwise winding seen from outside.
// Per-vertex normals are optional (present for MSMS input and icospheres).
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<std::uint32_t, 3>> faces;
    std::vector<Vec3> vertex_normals;   // empty, or one unit normal per vertex

    bool has_vertex_normals() const { return !vertex_normals.empty(); }
    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Validates index ranges, vertex usage, positive face areas, and that each
// undirected edge is shared by exactly two faces traversed in opposite
// directions. Throws GeometryError on violation.
void validate_closed_mesh(const TriangleMesh& mesh);

// Reads an MSMS .vert/.face pair. Comment lines ('#') and the numeric count
// header are skipped; face indices are 1-based in the file. The loaded mesh
// is validated as a closed oriented surface.
TriangleMesh load_msms_mesh(std::istream& vert_text, std::istream& face_text);

// Regular icosahedron subdivided `level` times with vertices projected onto
// the sphere |v| = radius. Outward orientation, vertex normals v/|v|.
TriangleMesh generate_icosphere(double radius, int level);

// One "x,y,z" record per vertex, '.' decimal separator.
void write_vertices_csv(std::ostream& out, const TriangleMesh& mesh);

} // namespace pcm
