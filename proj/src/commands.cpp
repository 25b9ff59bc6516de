#include "spdcoam/commands.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "spdcoam/errors.hpp"
#include "spdcoam/joint_amplitude.hpp"
#include "spdcoam/measurement.hpp"
#include "spdcoam/oam_spectrum.hpp"
#include "spdcoam/rng.hpp"

namespace spdcoam {

namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string header(const char* command, const RunConfig& cfg) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "# spdc-oam %s config_hash=%016llx\n", command,
                  static_cast<unsigned long long>(config_hash(cfg)));
    return buf;
}

CrystalParams with_l_c(const CrystalParams& c, double l_c) {
    return CrystalParams(c.crystal_type, l_c, c.K_bar, c.N, c.nu_bar_D, c.label);
}

}  // namespace

std::vector<CsvFile> run_pm_profile(const RunConfig& cfg) {
    const CrystalParams base = cfg.crystal();
    std::vector<double> l_c_list = cfg.profile_l_c;
    if (l_c_list.empty()) l_c_list.push_back(base.l_c);

    std::vector<CsvFile> out;
    for (double l_c : l_c_list) {
        const CrystalParams c = with_l_c(base, l_c);
        for (double p_minus : cfg.profile_p_minus) {
            auto profile = pm_azimuthal_profile(c, p_minus, cfg.profile_n_phi);
            std::ostringstream body;
            body << header("pm-profile", cfg);
            body << "# l_c = " << g17(l_c) << ", p_minus = " << g17(p_minus) << "\n";
            body << "# columns: phi,weight_over_l_c\n";
            for (const auto& [phi, w] : profile) body << g17(phi) << "," << g17(w) << "\n";
            char name[96];
            std::snprintf(name, sizeof name, "pm_profile_lc%g_p%g.csv", l_c, p_minus);
            out.push_back({name, body.str()});
        }
    }
    return out;
}

std::vector<CsvFile> run_oam_spectrum(const RunConfig& cfg) {
    const CrystalParams c = cfg.crystal();
    const SpectralConfig s = cfg.spectral();
    const PolarGrid g = cfg.spectrum_grid();
    auto [angular, spectrum] =
        extrinsic_oam_spectrum(c, s, g, cfg.grid_m_max, cfg.spectrum_radial_measure);

    std::ostringstream probs;
    probs << header("oam-spectrum", cfg);
    probs << "# columns: m,probability\n";
    for (const auto& [m, p] : spectrum.probs) probs << m << "," << g17(p) << "\n";

    std::ostringstream modes;
    modes << header("oam-spectrum", cfg);
    modes << "# columns: m,node,p,re,im\n";
    for (const auto& [m, radial] : angular.coeffs)
        for (std::size_t r = 0; r < radial.size(); ++r)
            modes << m << "," << r << "," << g17(g.radial()[r].p) << "," << g17(radial[r].real())
                  << "," << g17(radial[r].imag()) << "\n";

    return {{"oam_spectrum.csv", probs.str()}, {"angular_spectrum.csv", modes.str()}};
}

RadialProfile measurement_envelope(const RunConfig& cfg, double r_max) {
    constexpr int kSamples = 2048;
    if (cfg.meas_envelope == "crystal-ring") {
        // Walk-off-free radial section of the relative-movement envelope:
        // p_minus on the y axis, where the N term vanishes.
        const CrystalParams c = cfg.crystal();
        const SpectralConfig s = cfg.spectral();
        return RadialProfile::from_function(r_max, kSamples, [&](double r) {
            return std::abs(f_minus(c, s, TransverseVec{0.0, r}));
        });
    }
    const double sigma = cfg.meas_envelope_width;
    return RadialProfile::from_function(r_max, kSamples, [&](double r) {
        return std::exp(-(r * r) / (2.0 * sigma * sigma));
    });
}

std::vector<CsvFile> run_measurement(const RunConfig& cfg) {
    const PolarGrid patch = cfg.measurement_patch_grid();
    const double patch_radius = cfg.meas_patch_extent_factor * cfg.meas_collection_waist;
    const double r_max = 2.0 * (cfg.meas_p0 + patch_radius);
    const RadialProfile envelope = measurement_envelope(cfg, r_max);

    const TransverseVec center_s{cfg.meas_p0 * std::cos(cfg.meas_phi0),
                                 cfg.meas_p0 * std::sin(cfg.meas_phi0)};
    const TransverseVec opposed{-center_s.x, -center_s.y};
    const double w = cfg.meas_collection_waist;

    std::ostringstream body;
    body << header("measurement", cfg);
    body << "# columns: branch,total_charge,mask_s_charge,mask_i_charge,amplitude,relative\n";

    auto emit = [&](const char* branch, int total, int q_s, int q_i, double amp, double rel) {
        body << branch << "," << total << "," << q_s << "," << q_i << "," << g17(amp) << ","
             << g17(rel) << "\n";
    };

    // Intrinsic branch: opposed masks, idler charge scan. The amplitude is
    // nonzero only where mask_s_charge + mask_i_charge hits the total.
    {
        const int total = cfg.meas_intrinsic_total;
        const int q_s = cfg.meas_mask_s_charge;
        std::vector<double> amps;
        for (int q_i = cfg.meas_scan_min; q_i <= cfg.meas_scan_max; ++q_i) {
            MaskConfig ms{center_s, q_s, w};
            MaskConfig mi{opposed, q_i, w};
            amps.push_back(
                std::abs(coincidence_projection(Branch::Intrinsic, total, envelope, ms, mi, patch)));
        }
        double peak = 0.0;
        for (double a : amps) peak = std::max(peak, a);
        int idx = 0;
        for (int q_i = cfg.meas_scan_min; q_i <= cfg.meas_scan_max; ++q_i, ++idx)
            emit("intrinsic", total, q_s, q_i, amps[idx], peak > 0.0 ? amps[idx] / peak : 0.0);
        idx = 0;
        for (int q_i = cfg.meas_scan_min; q_i <= cfg.meas_scan_max; ++q_i, ++idx) {
            MaskConfig ms{center_s, -q_s, w};
            MaskConfig mi{opposed, -q_i, w};
            double a =
                std::abs(coincidence_projection(Branch::Intrinsic, -total, envelope, ms, mi, patch));
            emit("intrinsic-conj", -total, -q_s, -q_i, a, peak > 0.0 ? a / peak : 0.0);
        }
    }

    // Extrinsic branch: every split of the total across the two masks, with
    // the same-side geometry as the visibility reference for the opposed one.
    {
        const int total = cfg.meas_extrinsic_total;
        std::vector<double> same(total + 1);
        for (int m = 0; m <= total; ++m) {
            MaskConfig ms{center_s, m, w};
            MaskConfig mi{center_s, total - m, w};
            same[m] =
                std::abs(coincidence_projection(Branch::Extrinsic, total, envelope, ms, mi, patch));
            emit("extrinsic-same", total, m, total - m, same[m], 1.0);
        }
        for (int m = 0; m <= total; ++m) {
            MaskConfig ms{center_s, m, w};
            MaskConfig mi{opposed, total - m, w};
            double a =
                std::abs(coincidence_projection(Branch::Extrinsic, total, envelope, ms, mi, patch));
            emit("extrinsic-opposed", total, m, total - m, a, same[m] > 0.0 ? a / same[m] : 0.0);
        }
    }

    return {{"measurement.csv", body.str()}};
}

std::vector<CsvFile> run_reexpansion_check(const RunConfig& cfg) {
    const PolarGrid grid =
        PolarGrid::gauss_legendre(cfg.reexp_n_radial, cfg.reexp_p_max, cfg.reexp_n_phi);
    std::mt19937_64 eng(cfg.reexp_seed);

    std::ostringstream body;
    body << header("reexpansion-check", cfg);
    body << "# columns: l_s,l_i,n_terms,max_error,sum_rule_ok\n";
    for (int l_s = 0; l_s <= cfg.reexp_l_max; ++l_s) {
        for (int l_i = 0; l_i <= cfg.reexp_l_max; ++l_i) {
            const double a_s = 0.5 + 1.5 * uniform01(eng);
            const double a_i = 0.5 + 1.5 * uniform01(eng);
            auto h_s = [a_s](double p) { return std::exp(-a_s * p * p); };
            auto h_i = [a_i](double p) { return std::exp(-a_i * p * p); };
            auto terms = reexpand_pair(l_s, l_i, {0});
            bool sum_rule = true;
            for (const auto& t : terms)
                if (t.l_plus + t.l_minus != l_s + l_i) sum_rule = false;
            double err = verify_reexpansion(l_s, l_i, h_s, h_i, grid, grid);
            body << l_s << "," << l_i << "," << terms.size() << "," << g17(err) << ","
                 << (sum_rule ? 1 : 0) << "\n";
        }
    }
    return {{"reexpansion_check.csv", body.str()}};
}

}  // namespace spdcoam
