#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "spdcoam/polar_grid.hpp"
#include "spdcoam/transverse_vec.hpp"

namespace spdcoam {

// One photon's angular mode h(p) e^{i l phi}, with h sampled on the radial
// nodes of a companion grid.
struct AngularModeField {
    int winding = 0;
    std::vector<double> radial_profile;
};

// One term of the binomial re-expansion of a photon-pair mode into joint
// variables: coeff * p_plus^pow_plus p_minus^pow_minus e^{i(l_plus phi_plus + l_minus phi_minus)}.
struct ReexpansionTerm {
    int l_plus = 0;
    int l_minus = 0;
    std::complex<double> coeff;
    int pow_plus = 0;
    int pow_minus = 0;
};

// Expands e^{i(l_s phi_s + l_i phi_i)} p_s^{l_s} p_i^{l_i} into joint-variable
// terms, one per (m, n_s, n_i) with m running over h2_orders (the azimuthal
// orders of the residual pair envelope; {0} when it is azimuthally
// symmetric). Every term satisfies l_plus + l_minus = l_s + l_i.
std::vector<ReexpansionTerm> reexpand_pair(int l_s, int l_i, const std::vector<int>& h2_orders);

// Numerical check of the re-expansion: evaluates the pair mode directly at
// every (signal node, idler node) combination of the two grids and compares
// with the term sum in joint variables. Returns the maximum absolute
// discrepancy. Points where p_plus or p_minus vanish are fine: terms with
// positive powers vanish continuously there.
double verify_reexpansion(int l_s, int l_i, const std::function<double(double)>& h_s,
                          const std::function<double(double)>& h_i, const PolarGrid& grid_s,
                          const PolarGrid& grid_i);

// A complex function sampled on a polar momentum grid, values in node-major
// order: values[r * n_phi + j].
struct SampledPolarField {
    PolarGrid grid;
    std::vector<std::complex<double>> values;
};

// Builds a SampledPolarField from a callable f(p, phi).
SampledPolarField sample_polar_field(const PolarGrid& grid,
                                     const std::function<std::complex<double>(double, double)>& f);

struct RTransformResult {
    std::complex<double> value;
    // Set when the sampled field has not decayed at the outer radius
    // (above 1e-8 of its peak), i.e. the grid truncates real support.
    bool support_warning = false;
};

// 2D quadrature of f(p) exp(i (p.q/2 - z0_factor |p|^2)) over the field's
// grid. z0_factor carries the whole quadratic-phase combination; linear in f.
RTransformResult r_transform(const SampledPolarField& f, const TransverseVec& q,
                             double z0_factor);

// Factorized pair envelope: independent center-of-momentum and
// relative-movement factors on their own grids.
struct JointEnvelope {
    SampledPolarField f_plus_part;
    SampledPolarField f_minus_part;
};

// Product of the two transforms; support warnings are OR-ed together.
RTransformResult factorized_phi2(const JointEnvelope& env, const TransverseVec& q_plus,
                                 const TransverseVec& q_minus, double z0_factor);

}  // namespace spdcoam
