#include "spdcoam/measurement.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spdcoam/errors.hpp"
#include "spdcoam/parallel.hpp"

namespace spdcoam {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i)
        acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return static_cast<double>(acc);
}

}  // namespace

std::vector<std::pair<int, double>> shifted_expansion_weights(int total_charge, Branch branch) {
    if (total_charge < 0)
        throw BoundedDomainError("shifted_expansion_weights: total_charge must be nonnegative");
    if (total_charge > 20)
        throw BoundedDomainError("shifted_expansion_weights: total_charge above the binomial guard (20)");
    std::vector<std::pair<int, double>> out;
    out.reserve(total_charge + 1);
    for (int m = 0; m <= total_charge; ++m) {
        double c = binomial(total_charge, m);
        if (branch == Branch::Extrinsic && (total_charge - m) % 2 != 0) c = -c;
        out.emplace_back(m, c);
    }
    return out;
}

RadialProfile::RadialProfile(double r_max, std::vector<double> samples)
    : r_max_(r_max), samples_(std::move(samples)) {
    if (!(r_max_ > 0.0)) throw std::invalid_argument("RadialProfile: r_max must be positive");
    if (samples_.size() < 2)
        throw std::invalid_argument("RadialProfile: need at least two samples");
    for (double v : samples_)
        if (!std::isfinite(v)) throw std::invalid_argument("RadialProfile: samples must be finite");
}

RadialProfile RadialProfile::from_function(double r_max, int n,
                                           const std::function<double(double)>& f) {
    if (n < 2) throw std::invalid_argument("RadialProfile: need at least two samples");
    std::vector<double> samples(n);
    for (int i = 0; i < n; ++i) samples[i] = f(r_max * i / (n - 1));
    return RadialProfile(r_max, std::move(samples));
}

double RadialProfile::operator()(double r) const {
    if (!(r >= 0.0) || r >= r_max_) return 0.0;
    double t = r / r_max_ * (samples_.size() - 1);
    std::size_t idx = static_cast<std::size_t>(t);
    if (idx + 1 >= samples_.size()) return samples_.back();
    double frac = t - static_cast<double>(idx);
    return samples_[idx] + frac * (samples_[idx + 1] - samples_[idx]);
}

std::complex<double> pow_winding(const std::complex<double>& z, int L) {
    std::complex<double> base = L >= 0 ? z : std::conj(z);
    int n = L >= 0 ? L : -L;
    std::complex<double> out(1.0, 0.0);
    for (int k = 0; k < n; ++k) out *= base;
    return out;
}

std::complex<double> coincidence_projection(Branch branch, int total_charge,
                                            const RadialProfile& envelope_radial,
                                            const MaskConfig& mask_s, const MaskConfig& mask_i,
                                            const PolarGrid& grid) {
    auto check_mask = [](const MaskConfig& m, const char* name) {
        if (!(m.collection_waist > 0.0))
            throw std::invalid_argument(std::string("coincidence_projection: ") + name +
                                        " collection_waist must be positive");
        if (!(m.center.magnitude() > 3.0 * m.collection_waist))
            throw BoundedDomainError(std::string("coincidence_projection: ") + name +
                                     " mask center must satisfy |p0| > 3 * collection_waist "
                                     "(disjoint collection regions)");
    };
    check_mask(mask_s, "signal");
    check_mask(mask_i, "idler");

    // Local patch samples shared by both arms: the collection mode about each
    // center is Gaussian in the local radius with the conjugated vortex
    // phase e^{-i q phi} folded in, times the polar area element.
    const std::size_t n_rad = grid.radial().size();
    const int n_phi = grid.n_phi();
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    auto patch_modes = [&](const MaskConfig& m) {
        std::vector<std::complex<double>> modes(n_rad * n_phi);
        for (std::size_t r = 0; r < n_rad; ++r) {
            double p = grid.radial()[r].p;
            double gauss = std::exp(-(p * p) / (m.collection_waist * m.collection_waist));
            double jw = grid.radial()[r].w * p * dphi;
            for (int j = 0; j < n_phi; ++j) {
                double qphi = -static_cast<double>(m.charge) * grid.phi(j);
                modes[r * n_phi + j] =
                    gauss * jw * std::complex<double>(std::cos(qphi), std::sin(qphi));
            }
        }
        return modes;
    };
    std::vector<std::complex<double>> offsets(n_rad * n_phi);
    for (std::size_t r = 0; r < n_rad; ++r) {
        double p = grid.radial()[r].p;
        for (int j = 0; j < n_phi; ++j)
            offsets[r * n_phi + j] = {p * grid.cos_phi(j), p * grid.sin_phi(j)};
    }
    auto modes_s = patch_modes(mask_s);
    auto modes_i = patch_modes(mask_i);

    const std::complex<double> c_s = mask_s.center.as_complex();
    const std::complex<double> c_i = mask_i.center.as_complex();
    const double sign = branch == Branch::Intrinsic ? 1.0 : -1.0;
    const std::size_t n_nodes = offsets.size();

    std::vector<std::complex<double>> partial(n_nodes, std::complex<double>(0.0, 0.0));
    parallel_for(n_nodes, [&](std::size_t ks) {
        std::complex<double> z_s = c_s + offsets[ks];
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t ki = 0; ki < n_nodes; ++ki) {
            std::complex<double> z_i = c_i + offsets[ki];
            std::complex<double> joint = z_s + sign * z_i;
            std::complex<double> pair_mode =
                envelope_radial(std::abs(joint)) * pow_winding(joint, total_charge);
            acc += modes_i[ki] * pair_mode;
        }
        partial[ks] = modes_s[ks] * acc;
    });

    std::complex<double> amp(0.0, 0.0);
    for (std::size_t ks = 0; ks < n_nodes; ++ks) amp += partial[ks];
    return amp;
}

}  // namespace spdcoam
