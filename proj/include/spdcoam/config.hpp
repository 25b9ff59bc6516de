#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spdcoam/oam_spectrum.hpp"
#include "spdcoam/phase_matching.hpp"
#include "spdcoam/pump_envelope.hpp"
#include "spdcoam/polar_grid.hpp"

namespace spdcoam {

// Fully validated run configuration in canonical units (um, um^-1, radians).
// parse_config fills it from the flat dotted key=value format; emit_config
// writes the canonical form back out, and parse(emit(cfg)) == cfg holds
// exactly (all floats are printed with 17 significant digits).
struct RunConfig {
    // pump block
    int pump_l = 0;
    int pump_p = 0;
    double pump_k_P = 0.0;      // um^-1; config may instead give pump.wavelength
    double pump_w0 = 0.0;       // um
    double pump_amplitude = 1.0;
    bool pump_use_b_prefactor = false;

    // crystal block
    CrystalType crystal_type = CrystalType::TypeII;
    double crystal_l_c = 0.0;   // um
    double crystal_K_bar = 0.0; // um^-1
    double crystal_N = 0.0;
    double crystal_nu_bar_D = 0.0;
    bool crystal_swap_signal_idler = false;  // flips the sign of N (e-beam choice)
    std::string crystal_label;

    // spectral block
    bool spectral_monochromatic = true;
    std::vector<DetuningSample> spectral_samples;

    // grid block (spectrum discretization)
    int grid_n_radial = 128;
    double grid_p_max = 3.0;    // um^-1
    int grid_n_phi = 256;
    int grid_m_max = 48;

    // spectrum block
    RadialMeasure spectrum_radial_measure = RadialMeasure::PaperLinear;

    // profile block (pm-profile command)
    std::vector<double> profile_p_minus{1.0};  // um^-1
    std::vector<double> profile_l_c;           // um; empty means crystal.l_c
    int profile_n_phi = 256;

    // measurement block
    double meas_p0 = 1.0;               // ring radius, um^-1
    double meas_phi0 = 0.0;             // signal mask azimuth, radians
    double meas_collection_waist = 0.1; // um^-1
    std::string meas_envelope = "gaussian";  // or "crystal-ring"
    double meas_envelope_width = 0.25;  // um^-1, gaussian envelope scale
    int meas_intrinsic_total = 2;
    int meas_extrinsic_total = 1;
    int meas_mask_s_charge = 1;
    int meas_scan_min = -3;
    int meas_scan_max = 3;
    int meas_patch_n_radial = 48;
    int meas_patch_n_phi = 64;
    double meas_patch_extent_factor = 4.0;  // patch radius in collection waists

    // reexpansion block
    int reexp_l_max = 3;
    int reexp_n_radial = 16;
    int reexp_n_phi = 16;
    double reexp_p_max = 3.0;   // um^-1
    std::uint64_t reexp_seed = 12345;

    std::string output_dir = ".";

    bool operator==(const RunConfig&) const = default;

    // Constructed module values (each re-validates its own invariants).
    PumpMode pump_mode() const;
    CrystalParams crystal() const;
    SpectralConfig spectral() const;
    PolarGrid spectrum_grid() const;
    PolarGrid measurement_patch_grid() const;
};

// Parses the flat key=value document (lines "section.key = value", '#'
// comments), applies --override style key=value strings on top, validates
// everything, and converts units (mm/nm/um length suffixes; pump.wavelength
// in nm to k_P = 2 pi / lambda). Unknown keys, duplicates, malformed values
// and invariant violations throw ConfigError carrying the key path.
RunConfig parse_config(const std::string& text,
                       const std::vector<std::string>& overrides = {});

// Canonical form: every key, fixed order, 17 significant digits.
std::string emit_config(const RunConfig& cfg);

// FNV-1a (64-bit) over the canonical form; stamped into CSV headers.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace spdcoam
