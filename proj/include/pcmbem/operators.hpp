#pragma once

#include <vector>

#include "pcmbem/dense_matrix.hpp"
#include "pcmbem/discretization.hpp"
#include "pcmbem/errors.hpp"
#include "pcmbem/flops.hpp"

namespace pcm {

// Solvent outside (eps_solvent), solute cavity inside (eps_solute).
struct DielectricConfig {
    double eps_solvent = 80.0;
    double eps_solute = 4.0;

    DielectricConfig() = default;
    DielectricConfig(double solvent, double solute) : eps_solvent(solvent), eps_solute(solute) {
        if (eps_solvent <= 0.0 || eps_solute <= 0.0)
            throw ConfigError("permittivities must be positive");
    }

    // Dielectric contrast multiplying the adjoint double-layer term; stays in
    // (-2, 2) for positive permittivities, which keeps the operator
    // second-kind invertible.
    double eps_hat() const {
        return 2.0 * (eps_solute - eps_solvent) / (eps_solute + eps_solvent);
    }
};

enum class Execution { Serial, Parallel };

// Qualocation system matrix: row i tests with the constant function on
// panel i (identity term a_i), columns weight centroid sources by a_j.
//   A_ij = a_i * delta_ij + eps_hat * a_j * panel_flux(panel_i, c_j)
DenseMatrix assemble_A_panel(const PanelSet& panels, const DielectricConfig& cfg,
                             Execution exec = Execution::Parallel);

// Nystrom collocation matrix with the singular diagonal dropped:
//   A_ii = 1,  A_ij = eps_hat * w_j * normal_field_kernel(r_j, r_i, n_i)
DenseMatrix assemble_A_point(const PointCloud& cloud, const DielectricConfig& cfg,
                             Execution exec = Execution::Parallel);

// Source term mapping charges to the boundary equation right-hand side:
//   panel rows  B_ik = -(eps_hat/eps_solute) * panel_flux(panel_i, r_k)
//   point rows  B_ik = -(eps_hat/eps_solute) * normal_field_kernel(r_k, r_i, n_i)
DenseMatrix assemble_B(const PanelSet& panels, const ChargeSet& charges,
                       const DielectricConfig& cfg, Execution exec = Execution::Parallel);
DenseMatrix assemble_B(const PointCloud& cloud, const ChargeSet& charges,
                       const DielectricConfig& cfg, Execution exec = Execution::Parallel);

// Surface-to-point potential map (1/(4*pi) convention, no permittivity):
//   panel  C_ej = analytic single-layer integral over panel j at p_e
//   point  C_ej = w_j * coulomb_kernel(r_j, p_e)
DenseMatrix assemble_C(const PanelSet& panels, const std::vector<Vec3>& eval_points,
                       Execution exec = Execution::Parallel);
DenseMatrix assemble_C(const PointCloud& cloud, const std::vector<Vec3>& eval_points,
                       Execution exec = Execution::Parallel);

// C * sigma with C formed on the fly.
std::vector<double> eval_reaction_potential(const PanelSet& panels,
                                            const std::vector<double>& sigma,
                                            const std::vector<Vec3>& eval_points,
                                            FlopLedger& ledger);
std::vector<double> eval_reaction_potential(const PointCloud& cloud,
                                            const std::vector<double>& sigma,
                                            const std::vector<Vec3>& eval_points,
                                            FlopLedger& ledger);

// Solid-angle winding test: total flux -1 inside, 0 outside.
bool point_strictly_inside(const PanelSet& panels, const Vec3& point);
bool charges_strictly_inside(const PanelSet& panels, const ChargeSet& charges);

} // namespace pcm
