#include "spdcoam/phase_matching.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "spdcoam/errors.hpp"
#include "spdcoam/polar_grid.hpp"
#include "spdcoam/special_functions.hpp"

namespace spdcoam {

CrystalParams::CrystalParams(CrystalType type, double l_c_, double K_bar_, double N_,
                             double nu_bar_D_, std::string label_)
    : crystal_type(type), l_c(l_c_), K_bar(K_bar_), N(N_), nu_bar_D(nu_bar_D_),
      label(std::move(label_)) {
    if (!(l_c > 0.0)) throw std::invalid_argument("CrystalParams: l_c must be positive");
    if (!(K_bar > 0.0)) throw std::invalid_argument("CrystalParams: K_bar must be positive");
    if (crystal_type == CrystalType::TypeI) N = 0.0;
}

// The two mismatch forms are kept in the same operation order on purpose:
// with p_plus = (0,0) the extra terms of the full form are IEEE-exact
// no-ops (0 + x, 0 - x, and subtracting a negated product), so the reduced
// value is reproduced bit for bit. Tests rely on that equality.
double delta_kz_reduced(const CrystalParams& c, const TransverseVec& p_minus) {
    double t = -c.nu_bar_D - p_minus.magnitude_sq() / (4.0 * c.K_bar);
    return t + (0.5 * c.N) * p_minus.x;
}

double delta_kz_full(const CrystalParams& c, const TransverseVec& p_plus,
                     const TransverseVec& p_minus) {
    double t = -c.nu_bar_D - (p_plus.magnitude_sq() + p_minus.magnitude_sq()) / (4.0 * c.K_bar);
    return t - (0.5 * c.N) * (p_plus.x - p_minus.x);
}

double pm_weight(const CrystalParams& c, double delta_kz) {
    return c.l_c * sinc_u(delta_kz * c.l_c / 2.0);
}

std::vector<std::pair<double, double>> pm_azimuthal_profile(const CrystalParams& c,
                                                            double p_minus_mag, int n_phi) {
    if (n_phi < 8)
        throw BoundedDomainError("pm_azimuthal_profile: n_phi must be at least 8, got " +
                                 std::to_string(n_phi));
    if (!(p_minus_mag >= 0.0))
        throw BoundedDomainError("pm_azimuthal_profile: p_minus_mag must be nonnegative");
    UnitCircle circle(n_phi);
    std::vector<std::pair<double, double>> out;
    out.reserve(n_phi);
    // The magnitude is fixed, so evaluate the mismatch from it directly
    // instead of reassembling a vector; |p|^2 then never wobbles across the
    // ring and a type-I profile comes out exactly constant.
    double t = -c.nu_bar_D - (p_minus_mag * p_minus_mag) / (4.0 * c.K_bar);
    for (int j = 0; j < n_phi; ++j) {
        double dk = t + (0.5 * c.N) * (p_minus_mag * circle.cos_v[j]);
        out.emplace_back((2.0 * std::numbers::pi * j) / n_phi, pm_weight(c, dk) / c.l_c);
    }
    return out;
}

}  // namespace spdcoam
