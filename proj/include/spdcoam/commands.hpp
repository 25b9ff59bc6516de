#pragma once

#include <string>
#include <vector>

#include "spdcoam/config.hpp"
#include "spdcoam/measurement.hpp"

namespace spdcoam {

// One output artifact: a file name (no directory) plus its full contents.
// Commands are pure functions of the config so repeated runs are
// byte-identical; the CLI is the only place that touches the filesystem.
struct CsvFile {
    std::string filename;
    std::string content;
};

// Azimuthal phase-matching profile W(delta_kz)/l_c, one file per
// (l_c, p_minus) combination. profile.l_c empty means the crystal's own l_c.
std::vector<CsvFile> run_pm_profile(const RunConfig& cfg);

// Extrinsic OAM spectrum: oam_spectrum.csv with the normalized P(m) rows and
// angular_spectrum.csv with the per-order radial functions F^(m).
std::vector<CsvFile> run_oam_spectrum(const RunConfig& cfg);

// Coincidence projections: an intrinsic mask-charge scan with opposed masks,
// the same scan with every charge conjugated, and the extrinsic
// opposed-vs-same-side comparison, all in measurement.csv.
std::vector<CsvFile> run_measurement(const RunConfig& cfg);

// Re-expansion self-check over all winding pairs up to reexpansion.l_max
// with seeded random Gaussian radial profiles; reexpansion_check.csv.
std::vector<CsvFile> run_reexpansion_check(const RunConfig& cfg);

// The envelope_radial profile the measurement command feeds to
// coincidence_projection, resampled on [0, r_max]. Exposed so tests can run
// projections under the exact CLI envelope.
RadialProfile measurement_envelope(const RunConfig& cfg, double r_max);

}  // namespace spdcoam
