#include "pcmbem/discretization.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "pcmbem/errors.hpp"

namespace pcm {

double PanelSet::total_area() const {
    double s = 0.0;
    for (const auto& p : panels) s += p.area;
    return s;
}

double PointCloud::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double ChargeSet::total_charge() const {
    return std::accumulate(charges.begin(), charges.end(), 0.0);
}

PanelSet panel_geometry(const TriangleMesh& mesh) {
    validate_closed_mesh(mesh);
    PanelSet set;
    set.panels.reserve(mesh.faces.size());
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const auto& tri = mesh.faces[f];
        try {
            set.panels.emplace_back(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                                    mesh.vertices[tri[2]]);
        } catch (const GeometryError&) {
            throw GeometryError("degenerate panel at face " + std::to_string(f));
        }
    }
    return set;
}

PointCloud vertex_quadrature(const TriangleMesh& mesh) {
    validate_closed_mesh(mesh);
    const std::size_t nv = mesh.vertices.size();
    PointCloud cloud;
    cloud.points = mesh.vertices;
    cloud.weights.assign(nv, 0.0);

    std::vector<Vec3> accum(nv, Vec3{});
    for (const auto& tri : mesh.faces) {
        Panel p(mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]);
        for (int k = 0; k < 3; ++k) {
            cloud.weights[tri[k]] += p.area / 3.0;
            accum[tri[k]] += p.normal * p.area;
        }
    }

    for (std::size_t i = 0; i < nv; ++i)
        if (cloud.weights[i] <= 0.0)
            throw GeometryError("isolated vertex " + std::to_string(i));

    if (mesh.has_vertex_normals()) {
        cloud.normals = mesh.vertex_normals;
    } else {
        cloud.normals.reserve(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            double len = norm(accum[i]);
            if (len <= 0.0)
                throw GeometryError("zero resultant normal at vertex " + std::to_string(i));
            cloud.normals.push_back(accum[i] / len);
        }
    }
    return cloud;
}

ChargeSet load_pqr(std::istream& text) {
    ChargeSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(text, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::vector<std::string> fields;
        std::string tok;
        while (iss >> tok) fields.push_back(tok);
        if (fields.empty()) continue;
        if (fields[0] != "ATOM" && fields[0] != "HETATM") continue;

        // Record tail is "... x y z charge radius".
        if (fields.size() < 6)
            throw ParseError("pqr line " + std::to_string(lineno) +
                             ": record has fewer than 5 trailing numeric fields");
        double vals[5];
        for (int k = 0; k < 5; ++k) {
            const std::string& f = fields[fields.size() - 5 + k];
            try {
                std::size_t pos = 0;
                vals[k] = std::stod(f, &pos);
                if (pos != f.size()) throw std::invalid_argument(f);
            } catch (const std::exception&) {
                throw ParseError("pqr line " + std::to_string(lineno) +
                                 ": non-numeric field '" + f + "'");
            }
        }
        set.positions.push_back({vals[0], vals[1], vals[2]});
        set.charges.push_back(vals[3]);
        set.radii.push_back(vals[4]);
    }
    return set;
}

ChargeSet sample_grid_charges(double radius, double h, int q, std::uint64_t seed) {
    if (h <= 0.0) throw ConfigError("grid spacing must be positive");
    if (q < 0) throw ConfigError("charge count must be >= 0");

    const double rmax = radius - h;
    std::vector<std::tuple<long, long, long>> candidates;
    if (rmax >= 0.0) {
        const long imax = static_cast<long>(std::floor(rmax / h));
        for (long i = -imax; i <= imax; ++i)
            for (long j = -imax; j <= imax; ++j)
                for (long k = -imax; k <= imax; ++k) {
                    double x = i * h, y = j * h, z = k * h;
                    if (x * x + y * y + z * z <= rmax * rmax)
                        candidates.emplace_back(i, j, k);
                }
    }
    // loops above emit (i,j,k) in lexicographic order already
    if (static_cast<std::size_t>(q) > candidates.size())
        throw ConfigError("requested " + std::to_string(q) + " charges but grid has only " +
                          std::to_string(candidates.size()) + " candidates");

    SplitMix64 rng(seed);
    ChargeSet set;
    for (int t = 0; t < q; ++t) {
        std::size_t remaining = candidates.size() - t;
        std::size_t pick = t + static_cast<std::size_t>(rng.next() % remaining);
        std::swap(candidates[t], candidates[pick]);
        auto [i, j, k] = candidates[t];
        set.positions.push_back({i * h, j * h, k * h});
        set.charges.push_back((t % 2 == 0) ? 1.0 : -1.0);
        set.radii.push_back(0.0);
    }
    return set;
}

void write_charges_csv(std::ostream& out, const ChargeSet& charges) {
    char buf[160];
    for (std::size_t k = 0; k < charges.size(); ++k) {
        const Vec3& p = charges.positions[k];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", p.x, p.y, p.z,
                      charges.charges[k]);
        out << buf;
    }
}

} // namespace pcm
