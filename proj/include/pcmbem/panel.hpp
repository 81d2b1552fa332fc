#pragma once

#include <array>
#include <string>

#include "pcmbem/errors.hpp"
#include "pcmbem/vec3.hpp"

namespace pcm {

// Flat triangular boundary element carrying a constant density unknown.
struct Panel {
    std::array<Vec3, 3> v;
    Vec3 normal;       // unit, from winding
    double area = 0.0;
    Vec3 centroid;
    double diameter = 0.0;   // longest edge

    Panel() = default;

    Panel(const Vec3& a, const Vec3& b, const Vec3& c) : v{a, b, c} {
        Vec3 n2 = cross(b - a, c - a);
        double len = norm(n2);
        if (len <= 0.0) throw GeometryError("degenerate panel: zero area");
        area = 0.5 * len;
        normal = n2 / len;
        centroid = (a + b + c) / 3.0;
        double e0 = distance(a, b), e1 = distance(b, c), e2 = distance(c, a);
        diameter = std::max({e0, e1, e2});
    }
};

} // namespace pcm
