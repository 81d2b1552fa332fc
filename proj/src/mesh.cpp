#include "pcmbem/mesh.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "pcmbem/errors.hpp"

namespace pcm {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) fields.push_back(tok);
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_index(const std::string& s, long& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;   // blank
}

struct NumberedLine {
    std::string text;
    std::size_t number;
};

std::vector<NumberedLine> data_lines(std::istream& in) {
    std::vector<NumberedLine> lines;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_comment_or_blank(line)) continue;
        lines.push_back({line, n});
    }
    return lines;
}

} // namespace

void validate_closed_mesh(const TriangleMesh& mesh) {
    const std::size_t nv = mesh.vertices.size();
    if (mesh.faces.size() < 4)
        throw GeometryError("mesh has fewer than 4 faces; not a closed surface");

    std::vector<bool> used(nv, false);
    // key: undirected edge; value: net directed traversal count (+1 forward,
    // -1 reverse) and total visits
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<int, int>> edges;

    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const auto& tri = mesh.faces[f];
        for (int e = 0; e < 3; ++e) {
            std::uint32_t a = tri[e];
            std::uint32_t b = tri[(e + 1) % 3];
            if (a >= nv || b >= nv)
                throw GeometryError("face " + std::to_string(f) + " references vertex out of range");
            if (a == b)
                throw GeometryError("face " + std::to_string(f) + " repeats a vertex");
            used[a] = true;
            auto key = std::minmax(a, b);
            auto& rec = edges[{key.first, key.second}];
            rec.first += (a < b) ? 1 : -1;
            rec.second += 1;
        }
        const Vec3& v0 = mesh.vertices[tri[0]];
        const Vec3& v1 = mesh.vertices[tri[1]];
        const Vec3& v2 = mesh.vertices[tri[2]];
        if (norm(cross(v1 - v0, v2 - v0)) <= 0.0)
            throw GeometryError("face " + std::to_string(f) + " has zero area");
    }

    for (std::size_t v = 0; v < nv; ++v)
        if (!used[v])
            throw GeometryError("vertex " + std::to_string(v) + " is not referenced by any face");

    for (const auto& [edge, rec] : edges) {
        if (rec.second != 2 || rec.first != 0)
            throw GeometryError("open or inconsistently oriented surface at edge (" +
                                std::to_string(edge.first) + "," + std::to_string(edge.second) + ")");
    }
}

TriangleMesh load_msms_mesh(std::istream& vert_text, std::istream& face_text) {
    TriangleMesh mesh;

    auto vlines = data_lines(vert_text);
    std::size_t vstart = 0;
    // A well-formed vertex record has at least 6 numeric fields; the MSMS
    // count header ("npoints nspheres density probe") has fewer.
    if (!vlines.empty() && split_fields(vlines[0].text).size() < 6) vstart = 1;

    for (std::size_t i = vstart; i < vlines.size(); ++i) {
        auto fields = split_fields(vlines[i].text);
        if (fields.size() < 6)
            throw ParseError("vert line " + std::to_string(vlines[i].number) +
                             ": expected at least 6 numeric fields");
        double v[6];
        for (int k = 0; k < 6; ++k)
            if (!parse_double(fields[k], v[k]))
                throw ParseError("vert line " + std::to_string(vlines[i].number) +
                                 ": non-numeric field '" + fields[k] + "'");
        mesh.vertices.push_back({v[0], v[1], v[2]});
        Vec3 n{v[3], v[4], v[5]};
        double len = norm(n);
        if (len <= 0.0)
            throw ParseError("vert line " + std::to_string(vlines[i].number) +
                             ": zero-length normal");
        mesh.vertex_normals.push_back(n / len);
    }

    auto flines = data_lines(face_text);
    std::size_t fstart = 0;
    if (!flines.empty()) {
        auto fields = split_fields(flines[0].text);
        bool header = fields.size() < 3;
        // MSMS face count headers carry float density/probe fields.
        for (std::size_t k = 0; !header && k < fields.size() && k < 4; ++k) {
            long dummy;
            if (!parse_index(fields[k], dummy)) header = true;
        }
        if (header) fstart = 1;
    }

    for (std::size_t i = fstart; i < flines.size(); ++i) {
        auto fields = split_fields(flines[i].text);
        if (fields.size() < 3)
            throw ParseError("face line " + std::to_string(flines[i].number) +
                             ": expected at least 3 integer fields");
        std::array<std::uint32_t, 3> tri;
        for (int k = 0; k < 3; ++k) {
            long idx;
            if (!parse_index(fields[k], idx))
                throw ParseError("face line " + std::to_string(flines[i].number) +
                                 ": non-integer field '" + fields[k] + "'");
            if (idx < 1 || static_cast<std::size_t>(idx) > mesh.vertices.size())
                throw GeometryError("face line " + std::to_string(flines[i].number) +
                                    ": vertex index " + std::to_string(idx) + " out of range");
            tri[k] = static_cast<std::uint32_t>(idx - 1);
        }
        mesh.faces.push_back(tri);
    }

    validate_closed_mesh(mesh);
    return mesh;
}

namespace {

// Midpoint cache so shared edges produce one subdivision vertex.
struct EdgeMidpoints {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> cache;

    std::uint32_t get(TriangleMesh& mesh, double radius, std::uint32_t a, std::uint32_t b) {
        auto key = std::minmax(a, b);
        auto it = cache.find({key.first, key.second});
        if (it != cache.end()) return it->second;
        Vec3 mid = (mesh.vertices[a] + mesh.vertices[b]) * 0.5;
        mid = normalized(mid) * radius;
        auto idx = static_cast<std::uint32_t>(mesh.vertices.size());
        mesh.vertices.push_back(mid);
        cache.emplace(std::make_pair(key.first, key.second), idx);
        return idx;
    }
};

} // namespace

TriangleMesh generate_icosphere(double radius, int level) {
    if (radius <= 0.0) throw GeometryError("icosphere radius must be positive");
    if (level < 0) throw GeometryError("icosphere level must be >= 0");

    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    TriangleMesh mesh;
    mesh.vertices = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
    };
    for (auto& v : mesh.vertices) v = normalized(v) * radius;
    mesh.faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1},
    };

    for (int l = 0; l < level; ++l) {
        EdgeMidpoints mids;
        std::vector<std::array<std::uint32_t, 3>> refined;
        refined.reserve(mesh.faces.size() * 4);
        for (const auto& f : mesh.faces) {
            std::uint32_t m01 = mids.get(mesh, radius, f[0], f[1]);
            std::uint32_t m12 = mids.get(mesh, radius, f[1], f[2]);
            std::uint32_t m20 = mids.get(mesh, radius, f[2], f[0]);
            refined.push_back({f[0], m01, m20});
            refined.push_back({f[1], m12, m01});
            refined.push_back({f[2], m20, m12});
            refined.push_back({m01, m12, m20});
        }
        mesh.faces = std::move(refined);
    }

    mesh.vertex_normals.reserve(mesh.vertices.size());
    for (const auto& v : mesh.vertices) mesh.vertex_normals.push_back(normalized(v));
    return mesh;
}

void write_vertices_csv(std::ostream& out, const TriangleMesh& mesh) {
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", v.x, v.y, v.z);
        out << buf;
    }
}

} // namespace pcm
