#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "spdcoam/phase_matching.hpp"
#include "spdcoam/polar_grid.hpp"
#include "spdcoam/transverse_vec.hpp"

namespace spdcoam {

// One detuning quadrature sample: the nu_bar_D offset it contributes to the
// mismatch and its weight (spectral density folded in).
struct DetuningSample {
    double nu_bar_D;  // um^-1
    double weight;    // >= 0

    bool operator==(const DetuningSample&) const = default;
};

// Quadrature for the detection-bandwidth integral over the signal frequency.
// Monochromatic means the single sample (0, 1); an empty sample list is
// shorthand for exactly that.
struct SpectralConfig {
    bool monochromatic = true;
    std::vector<DetuningSample> detuning_samples;

    static SpectralConfig mono() { return SpectralConfig{}; }

    // Throws std::invalid_argument on inconsistent contents.
    void validate() const;

    // The effective sample list after applying the monochromatic shorthand.
    std::vector<DetuningSample> resolved_samples() const;
};

// Relative-movement envelope: the detuning-weighted sum of phase-matching
// weights at p_minus. Each sample's nu_bar_D substitutes the crystal's own
// value; with one unit-weight sample this is literally one pm_weight call.
double f_minus(const CrystalParams& c, const SpectralConfig& s, const TransverseVec& p_minus);

// Azimuthal Fourier coefficients c_m = (1/n) sum_j samples[j] e^{-i m phi_j}
// for m in [-m_max, m_max], on the uniform grid phi_j = 2 pi j / n. Exact for
// band-limited inputs; the power-of-two / 2*m_max + 2 precondition is the
// aliasing guard. Real inputs with the j <-> n - j mirror symmetry produce
// exactly real coefficients with c_m == c_{-m} bit for bit (the sum is
// folded over that mirror).
std::map<int, std::complex<double>> angular_fourier_decompose(
    const std::vector<std::complex<double>>& samples, int m_max);

// Per-order radial functions F^(m) sampled on a grid's radial nodes.
struct AngularSpectrum {
    int m_max = 0;
    std::map<int, std::vector<std::complex<double>>> coeffs;
};

// Normalized probability per extrinsic OAM order.
struct OamSpectrum {
    std::map<int, double> probs;
};

// Weight of a radial node in the probability integral: the literal dp
// measure, or the polar-area measure with the extra factor p.
enum class RadialMeasure { PaperLinear, PolarJacobian };

// Samples f_minus over the azimuth grid at radial node r_index. Exposed so
// tests can recompute the Parseval partner of the decomposition.
std::vector<std::complex<double>> sample_f_minus_ring(const CrystalParams& c,
                                                      const SpectralConfig& s,
                                                      const PolarGrid& g, std::size_t r_index);

// Decomposes the relative-movement envelope on every radial node and
// integrates |F^(m)|^2 into a normalized spectrum. Parallel over radial
// nodes with a fixed reduction order, so results are bit-stable for any
// worker count. Throws NumericDegeneracyError if every order integrates
// to zero.
std::pair<AngularSpectrum, OamSpectrum> extrinsic_oam_spectrum(
    const CrystalParams& c, const SpectralConfig& s, const PolarGrid& g, int m_max,
    RadialMeasure measure = RadialMeasure::PaperLinear);

}  // namespace spdcoam
