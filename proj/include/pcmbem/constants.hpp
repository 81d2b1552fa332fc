#pragma once

#include <numbers>

namespace pcm {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPi = 4.0 * kPi;

// Coulomb constant in kcal*Angstrom/(mol*e^2). Internal potentials carry the
// 1/(4*pi) Green's function normalization, so the conversion to kcal/mol/e
// multiplies by 4*pi*kCoulombKcal; the multipole-series path is in the
// q/(eps*r) convention and multiplies by kCoulombKcal alone.
inline constexpr double kCoulombKcal = 332.0636;
inline constexpr double kFourPiCoulombKcal = kFourPi * kCoulombKcal;

} // namespace pcm
