#include "spdcoam/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spdcoam/errors.hpp"

namespace spdcoam {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Ordered key=value store with duplicate detection and consumption tracking,
// so leftover (unknown) keys can be reported by path.
class KvStore {
public:
    void insert(const std::string& key, const std::string& value, bool allow_replace) {
        if (!allow_replace && kv_.count(key))
            throw ConfigError(key, "duplicate key");
        kv_[key] = value;
    }

    std::optional<std::string> take(const std::string& key) {
        auto it = kv_.find(key);
        if (it == kv_.end()) return std::nullopt;
        consumed_.insert(key);
        return it->second;
    }

    void reject_unconsumed() const {
        for (const auto& [k, v] : kv_)
            if (!consumed_.count(k)) throw ConfigError(k, "unknown key");
    }

private:
    std::map<std::string, std::string> kv_;
    std::set<std::string> consumed_;
};

double parse_number(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ConfigError(key, "expected a number, got an empty value");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw ConfigError(key, "malformed number '" + s + "'");
    if (!std::isfinite(v)) throw ConfigError(key, "number must be finite");
    return v;
}

// Number with an optional um/mm/nm suffix; bare values are um.
double parse_length_um(const std::string& key, const std::string& raw) {
    std::string s = trim(raw);
    double scale = 1.0;
    if (s.size() > 2) {
        std::string suffix = s.substr(s.size() - 2);
        if (suffix == "um") {
            scale = 1.0;
            s = s.substr(0, s.size() - 2);
        } else if (suffix == "mm") {
            scale = 1e3;
            s = s.substr(0, s.size() - 2);
        } else if (suffix == "nm") {
            scale = 1e-3;
            s = s.substr(0, s.size() - 2);
        }
    }
    return scale * parse_number(key, s);
}

// Wavelengths default to nm when bare.
double parse_wavelength_um(const std::string& key, const std::string& raw) {
    std::string s = trim(raw);
    if (s.size() > 2) {
        std::string suffix = s.substr(s.size() - 2);
        if (suffix == "um" || suffix == "mm" || suffix == "nm")
            return parse_length_um(key, s);
    }
    return 1e-3 * parse_number(key, s);
}

int parse_int(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ConfigError(key, "expected an integer, got an empty value");
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size())
        throw ConfigError(key, "malformed integer '" + s + "'");
    if (v < -1000000000L || v > 1000000000L) throw ConfigError(key, "integer out of range");
    return static_cast<int>(v);
}

std::uint64_t parse_u64(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ConfigError(key, "expected an unsigned integer, got an empty value");
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size())
        throw ConfigError(key, "malformed unsigned integer '" + s + "'");
    return v;
}

bool parse_bool(const std::string& key, const std::string& raw) {
    const std::string s = trim(raw);
    if (s == "true") return true;
    if (s == "false") return false;
    throw ConfigError(key, "expected true or false, got '" + s + "'");
}

std::vector<double> parse_number_list(const std::string& key, const std::string& raw) {
    std::vector<double> out;
    if (trim(raw).empty()) return out;
    for (const auto& piece : split(raw, ',')) out.push_back(parse_number(key, piece));
    return out;
}

std::vector<double> parse_length_list(const std::string& key, const std::string& raw) {
    std::vector<double> out;
    if (trim(raw).empty()) return out;
    for (const auto& piece : split(raw, ',')) out.push_back(parse_length_um(key, piece));
    return out;
}

std::vector<DetuningSample> parse_samples(const std::string& key, const std::string& raw) {
    std::vector<DetuningSample> out;
    if (trim(raw).empty()) return out;
    for (const auto& piece : split(raw, ',')) {
        auto parts = split(piece, ':');
        if (parts.size() != 2)
            throw ConfigError(key, "expected nu_bar_D:weight pairs, got '" + trim(piece) + "'");
        out.push_back({parse_number(key, parts[0]), parse_number(key, parts[1])});
    }
    return out;
}

void add_line(KvStore& store, const std::string& line, bool allow_replace,
              const std::string& origin) {
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') return;
    std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
        throw ConfigError("", origin + ": expected key = value, got '" + stripped + "'");
    std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("", origin + ": empty key in '" + stripped + "'");
    store.insert(key, value, allow_replace);
}

}  // namespace

PumpMode RunConfig::pump_mode() const {
    try {
        return PumpMode(pump_l, pump_p, pump_k_P, pump_w0, pump_amplitude);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("pump", e.what());
    }
}

CrystalParams RunConfig::crystal() const {
    double n = crystal_swap_signal_idler ? -crystal_N : crystal_N;
    try {
        return CrystalParams(crystal_type, crystal_l_c, crystal_K_bar, n, crystal_nu_bar_D,
                             crystal_label);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("crystal", e.what());
    }
}

SpectralConfig RunConfig::spectral() const {
    SpectralConfig s{spectral_monochromatic, spectral_samples};
    try {
        s.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("spectral", e.what());
    }
    return s;
}

PolarGrid RunConfig::spectrum_grid() const {
    try {
        return PolarGrid::gauss_legendre(grid_n_radial, grid_p_max, grid_n_phi);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("grid", e.what());
    }
}

PolarGrid RunConfig::measurement_patch_grid() const {
    try {
        return PolarGrid::gauss_legendre(meas_patch_n_radial,
                                         meas_patch_extent_factor * meas_collection_waist,
                                         meas_patch_n_phi);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("measurement", e.what());
    }
}

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
    KvStore store;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) add_line(store, line, false, "config");
    for (const auto& ov : overrides) add_line(store, ov, true, "override");

    RunConfig cfg;

    // pump
    if (auto v = store.take("pump.l")) cfg.pump_l = parse_int("pump.l", *v);
    if (auto v = store.take("pump.p")) cfg.pump_p = parse_int("pump.p", *v);
    auto k_p = store.take("pump.k_P");
    auto wavelength = store.take("pump.wavelength");
    if (k_p && wavelength)
        throw ConfigError("pump.wavelength", "mutually exclusive with pump.k_P");
    if (k_p) {
        cfg.pump_k_P = parse_number("pump.k_P", *k_p);
    } else if (wavelength) {
        double lambda_um = parse_wavelength_um("pump.wavelength", *wavelength);
        if (!(lambda_um > 0.0))
            throw ConfigError("pump.wavelength", "wavelength must be positive");
        cfg.pump_k_P = 2.0 * std::numbers::pi / lambda_um;
    } else {
        throw ConfigError("pump.k_P", "required (or give pump.wavelength)");
    }
    if (auto v = store.take("pump.w0")) cfg.pump_w0 = parse_length_um("pump.w0", *v);
    else throw ConfigError("pump.w0", "required");
    if (auto v = store.take("pump.amplitude")) cfg.pump_amplitude = parse_number("pump.amplitude", *v);
    if (auto v = store.take("pump.use_b_prefactor"))
        cfg.pump_use_b_prefactor = parse_bool("pump.use_b_prefactor", *v);

    // crystal
    if (auto v = store.take("crystal.type")) {
        std::string t = trim(*v);
        if (t == "type-I") cfg.crystal_type = CrystalType::TypeI;
        else if (t == "type-II") cfg.crystal_type = CrystalType::TypeII;
        else throw ConfigError("crystal.type", "expected type-I or type-II, got '" + t + "'");
    } else {
        throw ConfigError("crystal.type", "required");
    }
    if (auto v = store.take("crystal.l_c")) cfg.crystal_l_c = parse_length_um("crystal.l_c", *v);
    else throw ConfigError("crystal.l_c", "required");
    if (auto v = store.take("crystal.K_bar")) cfg.crystal_K_bar = parse_number("crystal.K_bar", *v);
    else throw ConfigError("crystal.K_bar", "required");
    if (auto v = store.take("crystal.N")) {
        cfg.crystal_N = parse_number("crystal.N", *v);
        if (cfg.crystal_type == CrystalType::TypeI && cfg.crystal_N != 0.0)
            throw ConfigError("crystal.N", "type-I phase matching requires N = 0");
    } else if (cfg.crystal_type == CrystalType::TypeII) {
        throw ConfigError("crystal.N", "required for type-II");
    }
    if (auto v = store.take("crystal.nu_bar_D"))
        cfg.crystal_nu_bar_D = parse_number("crystal.nu_bar_D", *v);
    if (auto v = store.take("crystal.swap_signal_idler"))
        cfg.crystal_swap_signal_idler = parse_bool("crystal.swap_signal_idler", *v);
    if (auto v = store.take("crystal.label")) cfg.crystal_label = trim(*v);

    // spectral
    if (auto v = store.take("spectral.monochromatic"))
        cfg.spectral_monochromatic = parse_bool("spectral.monochromatic", *v);
    if (auto v = store.take("spectral.samples"))
        cfg.spectral_samples = parse_samples("spectral.samples", *v);

    // grid
    if (auto v = store.take("grid.n_radial")) cfg.grid_n_radial = parse_int("grid.n_radial", *v);
    if (auto v = store.take("grid.p_max")) cfg.grid_p_max = parse_number("grid.p_max", *v);
    if (auto v = store.take("grid.n_phi")) cfg.grid_n_phi = parse_int("grid.n_phi", *v);
    if (auto v = store.take("grid.m_max")) cfg.grid_m_max = parse_int("grid.m_max", *v);

    // spectrum
    if (auto v = store.take("spectrum.radial_measure")) {
        std::string t = trim(*v);
        if (t == "paper-linear") cfg.spectrum_radial_measure = RadialMeasure::PaperLinear;
        else if (t == "polar-jacobian") cfg.spectrum_radial_measure = RadialMeasure::PolarJacobian;
        else
            throw ConfigError("spectrum.radial_measure",
                              "expected paper-linear or polar-jacobian, got '" + t + "'");
    }

    // profile
    if (auto v = store.take("profile.p_minus"))
        cfg.profile_p_minus = parse_number_list("profile.p_minus", *v);
    if (auto v = store.take("profile.l_c"))
        cfg.profile_l_c = parse_length_list("profile.l_c", *v);
    if (auto v = store.take("profile.n_phi")) cfg.profile_n_phi = parse_int("profile.n_phi", *v);

    // measurement
    if (auto v = store.take("measurement.p0")) cfg.meas_p0 = parse_number("measurement.p0", *v);
    if (auto v = store.take("measurement.phi0")) cfg.meas_phi0 = parse_number("measurement.phi0", *v);
    if (auto v = store.take("measurement.collection_waist"))
        cfg.meas_collection_waist = parse_number("measurement.collection_waist", *v);
    if (auto v = store.take("measurement.envelope")) {
        std::string t = trim(*v);
        if (t != "gaussian" && t != "crystal-ring")
            throw ConfigError("measurement.envelope",
                              "expected gaussian or crystal-ring, got '" + t + "'");
        cfg.meas_envelope = t;
    }
    if (auto v = store.take("measurement.envelope_width"))
        cfg.meas_envelope_width = parse_number("measurement.envelope_width", *v);
    if (auto v = store.take("measurement.intrinsic_total"))
        cfg.meas_intrinsic_total = parse_int("measurement.intrinsic_total", *v);
    if (auto v = store.take("measurement.extrinsic_total"))
        cfg.meas_extrinsic_total = parse_int("measurement.extrinsic_total", *v);
    if (auto v = store.take("measurement.mask_s_charge"))
        cfg.meas_mask_s_charge = parse_int("measurement.mask_s_charge", *v);
    if (auto v = store.take("measurement.scan_min"))
        cfg.meas_scan_min = parse_int("measurement.scan_min", *v);
    if (auto v = store.take("measurement.scan_max"))
        cfg.meas_scan_max = parse_int("measurement.scan_max", *v);
    if (auto v = store.take("measurement.patch_n_radial"))
        cfg.meas_patch_n_radial = parse_int("measurement.patch_n_radial", *v);
    if (auto v = store.take("measurement.patch_n_phi"))
        cfg.meas_patch_n_phi = parse_int("measurement.patch_n_phi", *v);
    if (auto v = store.take("measurement.patch_extent_factor"))
        cfg.meas_patch_extent_factor = parse_number("measurement.patch_extent_factor", *v);

    // reexpansion
    if (auto v = store.take("reexpansion.l_max")) cfg.reexp_l_max = parse_int("reexpansion.l_max", *v);
    if (auto v = store.take("reexpansion.n_radial"))
        cfg.reexp_n_radial = parse_int("reexpansion.n_radial", *v);
    if (auto v = store.take("reexpansion.n_phi")) cfg.reexp_n_phi = parse_int("reexpansion.n_phi", *v);
    if (auto v = store.take("reexpansion.p_max"))
        cfg.reexp_p_max = parse_number("reexpansion.p_max", *v);
    if (auto v = store.take("reexpansion.seed")) cfg.reexp_seed = parse_u64("reexpansion.seed", *v);

    if (auto v = store.take("output_dir")) cfg.output_dir = trim(*v);

    store.reject_unconsumed();

    // Cross-field validation; the module constructors re-check their own
    // invariants.
    cfg.pump_mode();
    cfg.crystal();
    cfg.spectral();
    cfg.spectrum_grid();
    if (cfg.grid_m_max < 0 || cfg.grid_m_max > cfg.grid_n_phi / 2 - 1)
        throw ConfigError("grid.m_max", "must lie in [0, n_phi/2 - 1]");
    if (cfg.profile_n_phi < 8) throw ConfigError("profile.n_phi", "must be at least 8");
    for (double p : cfg.profile_p_minus)
        if (!(p >= 0.0)) throw ConfigError("profile.p_minus", "entries must be nonnegative");
    for (double lc : cfg.profile_l_c)
        if (!(lc > 0.0)) throw ConfigError("profile.l_c", "entries must be positive");
    if (!(cfg.meas_collection_waist > 0.0))
        throw ConfigError("measurement.collection_waist", "must be positive");
    if (!(cfg.meas_p0 > 3.0 * cfg.meas_collection_waist))
        throw ConfigError("measurement.p0",
                          "must exceed 3 * collection_waist (disjoint collection regions)");
    if (!(cfg.meas_envelope_width > 0.0))
        throw ConfigError("measurement.envelope_width", "must be positive");
    if (cfg.meas_intrinsic_total < 0 || cfg.meas_intrinsic_total > 20)
        throw ConfigError("measurement.intrinsic_total", "must lie in [0, 20]");
    if (cfg.meas_extrinsic_total < 0 || cfg.meas_extrinsic_total > 20)
        throw ConfigError("measurement.extrinsic_total", "must lie in [0, 20]");
    if (cfg.meas_scan_min > cfg.meas_scan_max)
        throw ConfigError("measurement.scan_min", "must not exceed measurement.scan_max");
    if (!(cfg.meas_patch_extent_factor > 0.0))
        throw ConfigError("measurement.patch_extent_factor", "must be positive");
    cfg.measurement_patch_grid();
    if (cfg.reexp_l_max < 0 || cfg.reexp_l_max > 20)
        throw ConfigError("reexpansion.l_max", "must lie in [0, 20]");
    if (cfg.reexp_n_radial < 1 || cfg.reexp_n_radial > 32)
        throw ConfigError("reexpansion.n_radial", "must lie in [1, 32]");
    if (cfg.reexp_n_phi != 16 && cfg.reexp_n_phi != 32)
        throw ConfigError("reexpansion.n_phi", "must be 16 or 32");
    if (!(cfg.reexp_p_max > 0.0)) throw ConfigError("reexpansion.p_max", "must be positive");
    if (cfg.output_dir.empty()) throw ConfigError("output_dir", "must not be empty");

    return cfg;
}

std::string emit_config(const RunConfig& cfg) {
    std::ostringstream out;
    out << "# spdc-oam configuration (canonical form)\n";
    out << "pump.l = " << cfg.pump_l << "\n";
    out << "pump.p = " << cfg.pump_p << "\n";
    out << "pump.k_P = " << g17(cfg.pump_k_P) << "\n";
    out << "pump.w0 = " << g17(cfg.pump_w0) << "\n";
    out << "pump.amplitude = " << g17(cfg.pump_amplitude) << "\n";
    out << "pump.use_b_prefactor = " << (cfg.pump_use_b_prefactor ? "true" : "false") << "\n";
    out << "crystal.type = " << (cfg.crystal_type == CrystalType::TypeI ? "type-I" : "type-II")
        << "\n";
    out << "crystal.l_c = " << g17(cfg.crystal_l_c) << "\n";
    out << "crystal.K_bar = " << g17(cfg.crystal_K_bar) << "\n";
    out << "crystal.N = " << g17(cfg.crystal_N) << "\n";
    out << "crystal.nu_bar_D = " << g17(cfg.crystal_nu_bar_D) << "\n";
    out << "crystal.swap_signal_idler = " << (cfg.crystal_swap_signal_idler ? "true" : "false")
        << "\n";
    out << "crystal.label = " << cfg.crystal_label << "\n";
    out << "spectral.monochromatic = " << (cfg.spectral_monochromatic ? "true" : "false") << "\n";
    out << "spectral.samples = ";
    for (std::size_t i = 0; i < cfg.spectral_samples.size(); ++i) {
        if (i) out << ",";
        out << g17(cfg.spectral_samples[i].nu_bar_D) << ":" << g17(cfg.spectral_samples[i].weight);
    }
    out << "\n";
    out << "grid.n_radial = " << cfg.grid_n_radial << "\n";
    out << "grid.p_max = " << g17(cfg.grid_p_max) << "\n";
    out << "grid.n_phi = " << cfg.grid_n_phi << "\n";
    out << "grid.m_max = " << cfg.grid_m_max << "\n";
    out << "spectrum.radial_measure = "
        << (cfg.spectrum_radial_measure == RadialMeasure::PaperLinear ? "paper-linear"
                                                                      : "polar-jacobian")
        << "\n";
    out << "profile.p_minus = ";
    for (std::size_t i = 0; i < cfg.profile_p_minus.size(); ++i) {
        if (i) out << ",";
        out << g17(cfg.profile_p_minus[i]);
    }
    out << "\n";
    out << "profile.l_c = ";
    for (std::size_t i = 0; i < cfg.profile_l_c.size(); ++i) {
        if (i) out << ",";
        out << g17(cfg.profile_l_c[i]);
    }
    out << "\n";
    out << "profile.n_phi = " << cfg.profile_n_phi << "\n";
    out << "measurement.p0 = " << g17(cfg.meas_p0) << "\n";
    out << "measurement.phi0 = " << g17(cfg.meas_phi0) << "\n";
    out << "measurement.collection_waist = " << g17(cfg.meas_collection_waist) << "\n";
    out << "measurement.envelope = " << cfg.meas_envelope << "\n";
    out << "measurement.envelope_width = " << g17(cfg.meas_envelope_width) << "\n";
    out << "measurement.intrinsic_total = " << cfg.meas_intrinsic_total << "\n";
    out << "measurement.extrinsic_total = " << cfg.meas_extrinsic_total << "\n";
    out << "measurement.mask_s_charge = " << cfg.meas_mask_s_charge << "\n";
    out << "measurement.scan_min = " << cfg.meas_scan_min << "\n";
    out << "measurement.scan_max = " << cfg.meas_scan_max << "\n";
    out << "measurement.patch_n_radial = " << cfg.meas_patch_n_radial << "\n";
    out << "measurement.patch_n_phi = " << cfg.meas_patch_n_phi << "\n";
    out << "measurement.patch_extent_factor = " << g17(cfg.meas_patch_extent_factor) << "\n";
    out << "reexpansion.l_max = " << cfg.reexp_l_max << "\n";
    out << "reexpansion.n_radial = " << cfg.reexp_n_radial << "\n";
    out << "reexpansion.n_phi = " << cfg.reexp_n_phi << "\n";
    out << "reexpansion.p_max = " << g17(cfg.reexp_p_max) << "\n";
    out << "reexpansion.seed = " << cfg.reexp_seed << "\n";
    out << "output_dir = " << cfg.output_dir << "\n";
    return out.str();
}

std::uint64_t config_hash(const RunConfig& cfg) {
    std::string text = emit_config(cfg);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace spdcoam
