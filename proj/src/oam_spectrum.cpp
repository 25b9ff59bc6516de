#include "spdcoam/oam_spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spdcoam/errors.hpp"
#include "spdcoam/parallel.hpp"

namespace spdcoam {

void SpectralConfig::validate() const {
    if (monochromatic) {
        if (detuning_samples.empty()) return;
        if (detuning_samples.size() != 1 || detuning_samples[0].nu_bar_D != 0.0)
            throw std::invalid_argument(
                "SpectralConfig: monochromatic requires exactly one sample at nu_bar_D = 0");
        if (!(detuning_samples[0].weight > 0.0))
            throw std::invalid_argument("SpectralConfig: sample weight must be positive");
        return;
    }
    if (detuning_samples.empty())
        throw std::invalid_argument("SpectralConfig: polychromatic config needs detuning samples");
    double sum = 0.0;
    for (const auto& s : detuning_samples) {
        if (!(s.weight >= 0.0))
            throw std::invalid_argument("SpectralConfig: sample weights must be nonnegative");
        sum += s.weight;
    }
    if (!(sum > 0.0))
        throw std::invalid_argument("SpectralConfig: sample weights must sum to a positive value");
}

std::vector<DetuningSample> SpectralConfig::resolved_samples() const {
    validate();
    if (monochromatic && detuning_samples.empty()) return {{0.0, 1.0}};
    return detuning_samples;
}

double f_minus(const CrystalParams& c, const SpectralConfig& s, const TransverseVec& p_minus) {
    double acc = 0.0;
    for (const auto& sample : s.resolved_samples()) {
        CrystalParams cs = c;
        cs.nu_bar_D = sample.nu_bar_D;
        acc += sample.weight * pm_weight(cs, delta_kz_reduced(cs, p_minus));
    }
    return acc;
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Coefficient pair (c_m, c_{-m}) for one order m >= 0, folded over the
// j <-> n - j mirror of the grid. The folding is what makes real
// mirror-symmetric inputs give exactly real coefficients: the two sine
// contributions of a mirror pair are computed as x + (-x), which is +0.0
// in IEEE arithmetic, not merely small.
std::pair<std::complex<double>, std::complex<double>> folded_pair(
    const std::vector<std::complex<double>>& samples, const UnitCircle& t, int m) {
    const int n = t.n;
    std::complex<double> pos = samples[0];  // kernel at j = 0 is 1 for every m
    std::complex<double> neg = samples[0];
    int half = n / 2;
    {
        int k = (static_cast<long long>(m) * half) % n;
        std::complex<double> kern(t.cos_v[k], -t.sin_v[k]);
        pos += samples[half] * kern;
        neg += samples[half] * std::conj(kern);
    }
    for (int j = 1; j < half; ++j) {
        int k = static_cast<int>((static_cast<long long>(m) * j) % n);
        std::complex<double> kern(t.cos_v[k], -t.sin_v[k]);
        pos += samples[j] * kern + samples[n - j] * std::conj(kern);
        neg += samples[j] * std::conj(kern) + samples[n - j] * kern;
    }
    double inv_n = 1.0 / n;
    return {pos * inv_n, neg * inv_n};
}

std::map<int, std::complex<double>> decompose_with_table(
    const std::vector<std::complex<double>>& samples, int m_max, const UnitCircle& t) {
    std::map<int, std::complex<double>> out;
    for (int m = 0; m <= m_max; ++m) {
        auto [cm, cmneg] = folded_pair(samples, t, m);
        out[m] = cm;
        if (m > 0) out[-m] = cmneg;
    }
    return out;
}

}  // namespace

std::map<int, std::complex<double>> angular_fourier_decompose(
    const std::vector<std::complex<double>>& samples, int m_max) {
    const int n = static_cast<int>(samples.size());
    if (m_max < 0)
        throw BoundedDomainError("angular_fourier_decompose: m_max must be nonnegative");
    if (!is_power_of_two(n) || n < 2 * m_max + 2)
        throw BoundedDomainError(
            "angular_fourier_decompose: need a power-of-two sample count of at least 2*m_max + 2 "
            "(aliasing guard), got n = " + std::to_string(n) + " for m_max = " +
            std::to_string(m_max));
    UnitCircle t(n);
    return decompose_with_table(samples, m_max, t);
}

std::vector<std::complex<double>> sample_f_minus_ring(const CrystalParams& c,
                                                      const SpectralConfig& s,
                                                      const PolarGrid& g, std::size_t r_index) {
    const double p = g.radial().at(r_index).p;
    std::vector<std::complex<double>> row(g.n_phi());
    for (int j = 0; j < g.n_phi(); ++j) {
        TransverseVec pm{p * g.cos_phi(j), p * g.sin_phi(j)};
        row[j] = std::complex<double>(f_minus(c, s, pm), 0.0);
    }
    return row;
}

std::pair<AngularSpectrum, OamSpectrum> extrinsic_oam_spectrum(
    const CrystalParams& c, const SpectralConfig& s, const PolarGrid& g, int m_max,
    RadialMeasure measure) {
    if (m_max < 0)
        throw BoundedDomainError("extrinsic_oam_spectrum: m_max must be nonnegative");
    if (m_max > g.n_phi() / 2 - 1)
        throw BoundedDomainError("extrinsic_oam_spectrum: m_max must be at most n_phi/2 - 1");
    s.validate();

    const auto& nodes = g.radial();
    std::vector<std::map<int, std::complex<double>>> per_node(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t r) {
        per_node[r] = decompose_with_table(sample_f_minus_ring(c, s, g, r), m_max, g.circle());
    });

    AngularSpectrum angular;
    angular.m_max = m_max;
    for (int m = -m_max; m <= m_max; ++m) {
        auto& radial_fn = angular.coeffs[m];
        radial_fn.resize(nodes.size());
        for (std::size_t r = 0; r < nodes.size(); ++r) radial_fn[r] = per_node[r].at(m);
    }

    std::map<int, double> intensity;
    double total = 0.0;
    for (int m = -m_max; m <= m_max; ++m) {
        double im = 0.0;
        const auto& radial_fn = angular.coeffs.at(m);
        for (std::size_t r = 0; r < nodes.size(); ++r) {
            double mu = measure == RadialMeasure::PolarJacobian ? nodes[r].p : 1.0;
            im += nodes[r].w * mu * std::norm(radial_fn[r]);
        }
        intensity[m] = im;
        total += im;
    }
    if (!(total > 0.0))
        throw NumericDegeneracyError(
            "extrinsic_oam_spectrum: every angular order integrates to zero on this grid");

    OamSpectrum oam;
    for (const auto& [m, im] : intensity) oam.probs[m] = im / total;
    return {std::move(angular), std::move(oam)};
}

}  // namespace spdcoam
