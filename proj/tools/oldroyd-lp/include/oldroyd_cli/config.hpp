#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "oldroyd/integrate/integrator.hpp"
#include "oldroyd/model/params.hpp"

namespace oldroyd::cli {

enum class InitialMode { random_spectrum, analytic_preset, checkpoint };

struct InitialDataSpec {
    InitialMode mode = InitialMode::random_spectrum;
    double uh = 0.0;   // |u_0^h|_{B^{d/2-1}}
    double ud = 0.0;   // |u_0^d|_{B^{d/2-1}}
    double tau = 0.0;  // |tau_0|_{B^{d/2}}
    double envelope = 2.5;
    double k_cut = 8.0;  // in units of the box wavenumber
    std::uint64_t seed = 1;
    std::string preset = "single_modes";
    std::filesystem::path checkpoint;
};

struct AnalysisSpec {
    bool yq = true;
    bool fit_constants = true;  // false: use C1..C3 as given
    double C1 = 1.0, C2 = 1.0, C3 = 1.0;
    double C0 = 1.0;
};

struct EstimatesSpec {
    std::vector<std::string> kinds;  // empty: all
    int ensemble_size = 50;
    std::vector<double> envelopes{1.5, 2.5};
    double k_cut = 0.0;  // in units of the box wavenumber; 0: n/6
};

struct LinearDecaySpec {
    std::vector<int> q;  // empty: q1, q0, q0 + 1
    int n = 8;
    int samples = 200;
    double resolution = 0.05;
};

struct SweepSpec {
    std::vector<double> omega{0.05, 0.1, 0.25, 0.5, 0.75, 0.9};
    std::vector<double> scale{1e-4, 1e-3, 1e-2, 1e-1, 1.0};
};

struct ExperimentConfig {
    int dim = 2;
    int n = 32;
    double box_length = 6.283185307179586;
    double Re = 0.0, We = 0.0, omega = 0.0, alpha = 0.0;
    integrate::IntegratorConfig integrator;
    InitialDataSpec initial;
    AnalysisSpec analysis;
    EstimatesSpec estimates;
    LinearDecaySpec linear_decay;
    SweepSpec sweep;
    std::filesystem::path out_dir = "out";
    int threads = 1;

    model::ModelParams params() const;
};

// Parses TOML text; throws ConfigError on syntax errors, missing physics
// parameters, out-of-range values and unknown keys.
ExperimentConfig parse_config(const std::string& text, const std::string& source = "<config>");
// Throws IoError when the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace oldroyd::cli
