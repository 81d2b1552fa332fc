#pragma once

#include <functional>

#include "pcmbem/flops.hpp"
#include "pcmbem/panel.hpp"
#include "pcmbem/vec3.hpp"

namespace pcm {

// Free-space Green's function 1/(4*pi*|target-source|).
double coulomb_kernel(const Vec3& source, const Vec3& target, FlopLedger& ledger);

// d/dn(target) of the Green's function:
//   -((target-source) . n) / (4*pi*|target-source|^3)
double normal_field_kernel(const Vec3& source, const Vec3& target,
                           const Vec3& normal_at_target, FlopLedger& ledger);

// Signed solid angle subtended by the panel at the viewpoint, by the
// van Oosterom-Strackee arctangent form. Positive when the panel's normal
// points away from the viewpoint; summing over a closed outward-oriented
// mesh gives 4*pi from inside. Throws NearSingularError when the viewpoint
// lies within 1e-12*diameter of the panel interior.
double triangle_solid_angle(const Panel& panel, const Vec3& viewpoint, FlopLedger& ledger);

// Analytic flux of a unit source through the panel,
//   integral over panel of d/dn 1/(4*pi*|r-source|) dA = -omega/(4*pi).
// The self-panel principal value is exactly 0 (flat element).
double panel_flux(const Panel& panel, const Vec3& source, FlopLedger& ledger,
                  bool self_panel = false);

// Single-layer potential of unit constant density,
//   integral over panel of dA' / (4*pi*|eval-r'|),
// via the per-edge logarithm closed form plus the plane-distance *
// solid-angle term. Falls back to adaptive quadrature only when the eval
// point is within 1e-10*diameter of both the panel plane and an edge.
double single_layer_panel_potential(const Panel& panel, const Vec3& eval, FlopLedger& ledger);

// Recursive 4-way subdivision with a symmetric 7-point degree-5 rule per
// sub-triangle; stops when parent and children agree within rel_tol or
// depth 20 is reached (then throws AccuracyError carrying the best
// composite estimate).
double adaptive_triangle_quadrature(const std::function<double(const Vec3&)>& integrand,
                                    const Panel& panel, double rel_tol, FlopLedger& ledger);

// Flop ratio of one analytic panel flux against one normal-field kernel
// evaluation, measured on a generic configuration.
double measured_panel_point_flop_ratio();

} // namespace pcm
