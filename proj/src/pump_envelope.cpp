#include "spdcoam/pump_envelope.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spdcoam/special_functions.hpp"

namespace spdcoam {

PumpMode::PumpMode(int l_, int p_, double k_P_, double w0_, double amplitude_)
    : l(l_), p(p_), k_P(k_P_), w0(w0_), z_R(0.0), amplitude(amplitude_) {
    if (l < 0) throw std::invalid_argument("PumpMode: winding number l must be nonnegative");
    if (p < 0) throw std::invalid_argument("PumpMode: radial index p must be nonnegative");
    if (!(k_P > 0.0)) throw std::invalid_argument("PumpMode: k_P must be positive");
    if (!(w0 > 0.0)) throw std::invalid_argument("PumpMode: w0 must be positive");
    z_R = k_P * w0 * w0 / 2.0;
}

double pump_radial_envelope(const PumpMode& mode, double p_plus_mag) {
    double arg = (mode.z_R / mode.k_P) * (p_plus_mag * p_plus_mag);
    return assoc_laguerre(mode.p, mode.l, arg) * std::exp(-0.5 * arg);
}

std::complex<double> b_prefactor(const PumpMode& mode) {
    double scale = mode.amplitude * (mode.z_R * std::numbers::pi / std::pow(mode.k_P, mode.l + 1)) *
                   std::pow(std::sqrt(2.0) * mode.z_R / mode.w0, mode.l) *
                   std::pow(2.0, mode.p - mode.l + 1);
    // The phase -pi/2 * (1 - l - p) is an exact quarter turn, so pick the
    // factor from a table instead of rounding through cos/sin.
    static const std::complex<double> quarter[4] = {
        {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    int k = 1 - mode.l - mode.p;
    return scale * quarter[((k % 4) + 4) % 4];
}

std::complex<double> f_plus(const PumpMode& mode, const TransverseVec& p_plus,
                            bool use_b_prefactor) {
    double mag = p_plus.magnitude();
    double radial = std::pow(mag, mode.l) * pump_radial_envelope(mode, mag);
    double lphi = mode.l * p_plus.azimuth();
    std::complex<double> val = radial * std::complex<double>(std::cos(lphi), std::sin(lphi));
    if (use_b_prefactor) val *= b_prefactor(mode);
    return val;
}

}  // namespace spdcoam
