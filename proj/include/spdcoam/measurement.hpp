#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "spdcoam/polar_grid.hpp"
#include "spdcoam/transverse_vec.hpp"

namespace spdcoam {

// One detection arm: a vortex phase mask of the given charge centered at
// `center` in momentum space, backed by a single-mode collection channel
// idealized as a Gaussian exp(-rho^2 / waist^2) about the same center.
struct MaskConfig {
    TransverseVec center;
    int charge = 0;
    double collection_waist = 0.1;  // um^-1
};

enum class Branch { Intrinsic, Extrinsic };

// Binomial weights of the shifted-center expansion of the branch's joint
// coordinate: order m gets C(l, m) on the intrinsic branch and
// C(l, m) (-1)^{l-m} on the extrinsic one, m = 0..total_charge.
std::vector<std::pair<int, double>> shifted_expansion_weights(int total_charge, Branch branch);

// Radial function sampled uniformly on [0, r_max]: linear interpolation
// between samples, zero beyond r_max.
class RadialProfile {
public:
    RadialProfile(double r_max, std::vector<double> samples);
    static RadialProfile from_function(double r_max, int n,
                                       const std::function<double(double)>& f);

    double operator()(double r) const;
    double r_max() const { return r_max_; }

private:
    double r_max_;
    std::vector<double> samples_;
};

// Integer winding factor z^L, with negative L meaning conj(z)^{-L}. Negating
// every charge in a projection therefore conjugates the whole amplitude
// exactly.
std::complex<double> pow_winding(const std::complex<double>& z, int L);

// Coincidence amplitude of one branch's pair mode
//   envelope_radial(|Z|) * Z^total_charge,  Z = z_s + z_i (intrinsic) or z_s - z_i (extrinsic),
// projected on two mask/collection modes. The integration runs over a local
// patch around each mask center, both patches discretized by `grid` (radial
// extent = the grid's outer radius). Masks must sit well clear of the
// origin: |center| > 3 * collection_waist for both arms, otherwise the
// collection regions are not disjoint and a BoundedDomainError is thrown.
// Parallel over signal patch nodes with a fixed reduction order.
std::complex<double> coincidence_projection(Branch branch, int total_charge,
                                            const RadialProfile& envelope_radial,
                                            const MaskConfig& mask_s, const MaskConfig& mask_i,
                                            const PolarGrid& grid);

}  // namespace spdcoam
