#pragma once

#include <complex>

#include "spdcoam/transverse_vec.hpp"

namespace spdcoam {

// Laguerre-Gaussian pump description. The winding number is restricted to
// l >= 0: the mode carries the overall factor p^l, and how a negative
// winding should interact with that factor is deliberately not defined here.
struct PumpMode {
    int l;             // winding number
    int p;             // radial node count
    double k_P;        // pump wavenumber, um^-1
    double w0;         // waist radius, um
    double z_R;        // Rayleigh length, um; derived as k_P * w0^2 / 2
    double amplitude;  // overall mode scale, default 1

    PumpMode(int l, int p, double k_P, double w0, double amplitude = 1.0);
};

// Radial spectral envelope L_p^l(z_R p^2 / k_P) * exp(-z_R p^2 / (2 k_P))
// at transverse magnitude p_plus_mag. Equals 1 at the origin for l = p = 0.
double pump_radial_envelope(const PumpMode& mode, double p_plus_mag);

// Constant prefactor of the pump spectrum in its literal form. Every
// normalized spectrum in this library is independent of it, so callers
// almost always want the default B = 1 instead (see f_plus).
std::complex<double> b_prefactor(const PumpMode& mode);

// Center-of-momentum factor  B * p^l * envelope(p) * e^{i l phi} of the pump
// spectrum at p_plus. B = 1 unless use_b_prefactor requests the literal
// prefactor.
std::complex<double> f_plus(const PumpMode& mode, const TransverseVec& p_plus,
                            bool use_b_prefactor = false);

}  // namespace spdcoam
