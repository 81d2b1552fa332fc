#include "pcmbem/kernels.hpp"

#include <cmath>

#include "pcmbem/constants.hpp"
#include "pcmbem/errors.hpp"

namespace pcm {

namespace {

constexpr double kNearSingularFrac = 1e-12;   // solid-angle guard
constexpr double kPlaneFrac = 1e-10;          // single-layer fallback triggers
constexpr double kEdgeFrac = 1e-10;

// Barycentric inside test for a point already known to lie (near) the panel
// plane. Tally is charged by the caller's rare guard branch.
bool projection_inside(const Panel& p, const Vec3& q, FlopLedger& ledger) {
    Vec3 e0 = p.v[1] - p.v[0];
    Vec3 e1 = p.v[2] - p.v[0];
    Vec3 e2 = q - p.v[0];
    double d00 = dot(e0, e0), d01 = dot(e0, e1), d11 = dot(e1, e1);
    double d20 = dot(e2, e0), d21 = dot(e2, e1);
    double denom = d00 * d11 - d01 * d01;
    double beta = (d11 * d20 - d01 * d21) / denom;
    double gamma = (d00 * d21 - d01 * d20) / denom;
    ledger.tally(22, 21, 2, 0, 0);
    return beta >= -1e-12 && gamma >= -1e-12 && beta + gamma <= 1.0 + 1e-12;
}

double edge_segment_distance(const Vec3& a, const Vec3& b, const Vec3& q) {
    Vec3 e = b - a;
    double t = dot(q - a, e) / dot(e, e);
    t = std::clamp(t, 0.0, 1.0);
    return norm(q - (a + e * t));
}

} // namespace

double coulomb_kernel(const Vec3& source, const Vec3& target, FlopLedger& ledger) {
    Vec3 d = target - source;
    double r2 = norm2(d);
    if (r2 == 0.0) throw SingularityError("coulomb kernel at coincident points");
    double r = std::sqrt(r2);
    ledger.tally(5, 4, 1, 1, 0);
    return 1.0 / (kFourPi * r);
}

double normal_field_kernel(const Vec3& source, const Vec3& target,
                           const Vec3& normal_at_target, FlopLedger& ledger) {
    Vec3 d = target - source;
    double r2 = norm2(d);
    if (r2 == 0.0) throw SingularityError("normal-field kernel at coincident points");
    double r = std::sqrt(r2);
    double r3 = r2 * r;
    double dn = dot(d, normal_at_target);
    ledger.tally(7, 8, 1, 1, 0);
    return -dn / (kFourPi * r3);
}

double triangle_solid_angle(const Panel& panel, const Vec3& viewpoint, FlopLedger& ledger) {
    Vec3 r1 = panel.v[0] - viewpoint;
    Vec3 r2 = panel.v[1] - viewpoint;
    Vec3 r3 = panel.v[2] - viewpoint;
    double plane_dist = dot(r1, panel.normal);   // signed, viewpoint side = -sign
    ledger.tally(11, 3, 0, 0, 0);

    if (std::abs(plane_dist) < kNearSingularFrac * panel.diameter) {
        Vec3 proj = viewpoint + panel.normal * plane_dist;
        ledger.tally(3, 3, 0, 0, 0);
        if (projection_inside(panel, proj, ledger))
            throw NearSingularError("solid-angle viewpoint on the panel interior");
    }

    double l1 = norm(r1), l2 = norm(r2), l3 = norm(r3);
    double numer = dot(r1, cross(r2, r3));
    double d12 = dot(r1, r2), d23 = dot(r2, r3), d31 = dot(r3, r1);
    double denom = l1 * l2 * l3 + d12 * l3 + d23 * l1 + d31 * l2;
    double omega = 2.0 * std::atan2(numer, denom);
    ledger.tally(20, 33, 0, 3, 1);
    return omega;
}

double panel_flux(const Panel& panel, const Vec3& source, FlopLedger& ledger, bool self_panel) {
    if (self_panel) return 0.0;   // flat-element principal value
    double omega = triangle_solid_angle(panel, source, ledger);
    ledger.tally(0, 1, 0, 0, 0);
    return omega * (-1.0 / kFourPi);
}

double single_layer_panel_potential(const Panel& panel, const Vec3& eval, FlopLedger& ledger) {
    const Vec3& n = panel.normal;
    double h = dot(eval - panel.v[0], n);
    Vec3 rho = eval - n * h;
    ledger.tally(8, 6, 0, 0, 0);

    bool near_plane = std::abs(h) < kPlaneFrac * panel.diameter;
    if (near_plane) {
        double dmin = edge_segment_distance(panel.v[0], panel.v[1], rho);
        dmin = std::min(dmin, edge_segment_distance(panel.v[1], panel.v[2], rho));
        dmin = std::min(dmin, edge_segment_distance(panel.v[2], panel.v[0], rho));
        ledger.tally(54, 36, 3, 3, 0);
        if (dmin < kEdgeFrac * panel.diameter) {
            // On an edge the per-edge logarithm degenerates; integrate
            // numerically instead.
            try {
                return adaptive_triangle_quadrature(
                    [&eval, &ledger](const Vec3& r) { return coulomb_kernel(r, eval, ledger); },
                    panel, 1e-12, ledger);
            } catch (const AccuracyError& err) {
                return err.best_estimate;   // silent best effort
            }
        }
    }

    double acc = 0.0;
    for (int e = 0; e < 3; ++e) {
        const Vec3& a = panel.v[e];
        const Vec3& b = panel.v[(e + 1) % 3];
        Vec3 edge = b - a;
        double len = norm(edge);
        Vec3 lhat = edge / len;
        Vec3 u = cross(lhat, n);   // in-plane outward edge normal
        double dperp = dot(a - rho, u);
        double ra = norm(eval - a);
        double rb = norm(eval - b);
        double s = ra + rb;
        double logterm = std::log((s + len) / (s - len));
        acc += dperp * logterm;
        ledger.tally(27, 19, 4, 3, 1);
    }

    if (near_plane) {
        ledger.tally(0, 0, 1, 0, 0);
        return acc / kFourPi;   // h*omega vanishes in the plane
    }
    double omega = triangle_solid_angle(panel, eval, ledger);
    ledger.tally(1, 1, 1, 0, 0);
    return (acc + h * omega) / kFourPi;
}

namespace {

struct QuadPoint {
    double b0, b1, b2, w;
};

// Symmetric 7-point rule, exact through degree 5, weights normalized to 1.
constexpr QuadPoint kRule7[7] = {
    {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225},
    {0.059715871789770, 0.470142064105115, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.059715871789770, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.470142064105115, 0.059715871789770, 0.132394152788506},
    {0.797426985353087, 0.101286507323456, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.797426985353087, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.101286507323456, 0.797426985353087, 0.125939180544827},
};

double rule7(const std::function<double(const Vec3&)>& f, const Vec3& a, const Vec3& b,
             const Vec3& c, FlopLedger& ledger) {
    double area = 0.5 * norm(cross(b - a, c - a));
    double acc = 0.0;
    for (const auto& q : kRule7) {
        Vec3 x = a * q.b0 + b * q.b1 + c * q.b2;
        acc += q.w * f(x);
    }
    ledger.tally(9 + 2 + 7 * 7, 6 + 3 + 1 + 7 * 10 + 1, 0, 1, 0);
    return area * acc;
}

struct AdaptiveResult {
    double value;
    bool converged;
};

AdaptiveResult adapt(const std::function<double(const Vec3&)>& f, const Vec3& a, const Vec3& b,
                     const Vec3& c, double whole, double rel_tol, int depth, FlopLedger& ledger) {
    Vec3 mab = (a + b) * 0.5;
    Vec3 mbc = (b + c) * 0.5;
    Vec3 mca = (c + a) * 0.5;
    double s0 = rule7(f, a, mab, mca, ledger);
    double s1 = rule7(f, b, mbc, mab, ledger);
    double s2 = rule7(f, c, mca, mbc, ledger);
    double s3 = rule7(f, mab, mbc, mca, ledger);
    double sum = s0 + s1 + s2 + s3;
    ledger.tally(9 + 3, 9, 0, 0, 0);

    if (std::abs(sum - whole) <= rel_tol * std::max(std::abs(sum), 1e-300))
        return {sum, true};
    if (depth >= 20) return {sum, false};

    auto r0 = adapt(f, a, mab, mca, s0, rel_tol, depth + 1, ledger);
    auto r1 = adapt(f, b, mbc, mab, s1, rel_tol, depth + 1, ledger);
    auto r2 = adapt(f, c, mca, mbc, s2, rel_tol, depth + 1, ledger);
    auto r3 = adapt(f, mab, mbc, mca, s3, rel_tol, depth + 1, ledger);
    ledger.tally(3, 0, 0, 0, 0);
    return {r0.value + r1.value + r2.value + r3.value,
            r0.converged && r1.converged && r2.converged && r3.converged};
}

} // namespace

double adaptive_triangle_quadrature(const std::function<double(const Vec3&)>& integrand,
                                    const Panel& panel, double rel_tol, FlopLedger& ledger) {
    double whole = rule7(integrand, panel.v[0], panel.v[1], panel.v[2], ledger);
    auto r = adapt(integrand, panel.v[0], panel.v[1], panel.v[2], whole, rel_tol, 1, ledger);
    if (!r.converged)
        throw AccuracyError("adaptive triangle quadrature: depth 20 exhausted", r.value);
    return r.value;
}

double measured_panel_point_flop_ratio() {
    Panel panel({0.3, 0.1, -0.2}, {1.4, 0.2, 0.1}, {0.5, 1.2, 0.3});
    Vec3 point{2.0, 1.5, 2.5};
    FlopLedger flux_ledger;
    panel_flux(panel, point, flux_ledger);
    FlopLedger kernel_ledger;
    normal_field_kernel(point, panel.centroid, panel.normal, kernel_ledger);
    return static_cast<double>(flux_ledger.total()) / static_cast<double>(kernel_ledger.total());
}

} // namespace pcm
