// spdc-oam: CSV pipelines for down-conversion pair spectra and projections.
//
// Subcommands share one config file; --override patches individual keys.
// Exit codes: 0 success, 2 config or domain error, 3 numeric degeneracy,
// 1 anything else.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spdcoam/commands.hpp"
#include "spdcoam/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spdcoam::ConfigError("", "cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_outputs(const std::vector<spdcoam::CsvFile>& files, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& f : files) {
        std::filesystem::path path = std::filesystem::path(out_dir) / f.filename;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out.write(f.content.data(), static_cast<std::streamsize>(f.content.size()));
        if (!out) throw std::runtime_error("short write to " + path.string());
        std::cout << "wrote " << path.string() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OAM spectra and coincidence projections for down-converted photon pairs"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "key=value config file")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory (created if missing)");
    app.add_option("--override", overrides, "extra key=value applied on top of the config");

    using Runner = std::function<std::vector<spdcoam::CsvFile>(const spdcoam::RunConfig&)>;
    Runner runner;
    auto add = [&](const char* name, const char* desc, Runner r) {
        app.add_subcommand(name, desc)->callback([&runner, r] { runner = r; })->fallthrough();
    };
    add("pm-profile", "azimuthal phase-matching weight profiles", spdcoam::run_pm_profile);
    add("oam-spectrum", "extrinsic OAM spectrum and angular modes", spdcoam::run_oam_spectrum);
    add("measurement", "mask/fiber coincidence projection scans", spdcoam::run_measurement);
    add("reexpansion-check", "joint-variable re-expansion self check",
        spdcoam::run_reexpansion_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        spdcoam::RunConfig cfg = spdcoam::parse_config(read_file(config_path), overrides);
        if (!cfg.output_dir.empty() && cfg.output_dir != "." && out_dir == ".")
            out_dir = cfg.output_dir;
        write_outputs(runner(cfg), out_dir);
        return 0;
    } catch (const spdcoam::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const spdcoam::BoundedDomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const spdcoam::NumericDegeneracyError& e) {
        std::cerr << "degenerate result: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
