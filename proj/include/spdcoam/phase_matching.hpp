#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spdcoam/transverse_vec.hpp"

namespace spdcoam {

enum class CrystalType { TypeI, TypeII };

// First-order longitudinal phase-matching coefficients of the medium.
// nu_bar_D is the detuning-dependent offset term (zero for the degenerate
// monochromatic case); K_bar and N are held fixed at the degenerate
// frequency. The walk-off axis is pinned to +x of the lab frame.
struct CrystalParams {
    CrystalType crystal_type;
    double l_c;        // medium length, um
    double K_bar;      // um^-1
    double N;          // walk-off parameter, dimensionless; 0 for TypeI
    double nu_bar_D;   // um^-1
    std::string label; // free metadata, e.g. "BBO theta=49.63deg"

    // Type-I mismatch has no azimuthal dependence, so N is forced to 0 for
    // TypeI regardless of the argument.
    CrystalParams(CrystalType type, double l_c, double K_bar, double N,
                  double nu_bar_D = 0.0, std::string label = "");
};

// Reduced first-order mismatch -nu_bar_D - |p_minus|^2/(4 K_bar) + (N/2) p_minus.x,
// valid when the center-of-momentum wavevector is negligible.
double delta_kz_reduced(const CrystalParams& c, const TransverseVec& p_minus);

// Full first-order mismatch -nu_bar_D - (|p_plus|^2 + |p_minus|^2)/(4 K_bar)
//   - (N/2) (p_plus - p_minus).x.
// With p_plus = (0,0) this reproduces delta_kz_reduced bit for bit (the
// implementations keep the same operation order; see the .cpp note).
double delta_kz_full(const CrystalParams& c, const TransverseVec& p_plus,
                     const TransverseVec& p_minus);

// Longitudinal phase-matching weight l_c * sinc_u(delta_kz * l_c / 2), in um.
double pm_weight(const CrystalParams& c, double delta_kz);

// W(delta_kz(phi)) / l_c sampled on the uniform azimuth grid phi_j = 2 pi j / n_phi
// at fixed |p_minus|. Values at j and n_phi - j are exact mirrors because the
// mismatch depends on azimuth only through cos(phi).
std::vector<std::pair<double, double>> pm_azimuthal_profile(const CrystalParams& c,
                                                            double p_minus_mag, int n_phi);

}  // namespace spdcoam
