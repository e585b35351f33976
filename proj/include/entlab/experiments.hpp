// Copyright 2026 The entlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "entlab/liouville.hpp"
#include "entlab/states.hpp"

namespace entlab {

inline constexpr const char* kVersion = "0.1.0";

/// Uniform scan axis: count values from lo to hi inclusive.
struct GridAxis {
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;

    double value(int i) const { return lo + (hi - lo) * i / (count - 1); }
    void validate() const;
};

struct ExperimentConfig {
    std::string experiment; // evolve | steady | phase-diagram | fidelities |
                            // transfer-scan | single-qubit
    SystemParams params;
    ReservoirModel reservoir = ReservoirModel::Separate;
    std::string initial;    // state spec, e.g. "werner:f=0.5"; empty = default
    double t_final = 15.0;
    int samples = 500;
    std::optional<double> g_tau; // collapses the transfer scan to one point
    std::map<std::string, GridAxis> grid;
    std::string output; // empty = "<experiment>.csv"
};

/// Parses "werner:f=X | ye:alpha=X | egge:a=X | bell:psi+|psi-|phi+|phi-".
DensityMatrix parse_initial_state(const std::string& spec);

/// Parses "name=lo:hi:count[,name=lo:hi:count...]".
std::map<std::string, GridAxis> parse_grid_spec(const std::string& spec);

/// Baseline configuration per experiment; each one produces a complete
/// dataset when run on its defaults, with no extra arguments.
ExperimentConfig default_config(const std::string& experiment);

// Each runner writes one CSV (phase-diagram also writes
// "<stem>_boundary.csv") and returns the config it actually ran, with grid
// and output fields resolved.
ExperimentConfig run_evolve(ExperimentConfig cfg);
ExperimentConfig run_steady(ExperimentConfig cfg);
ExperimentConfig run_phase_diagram(ExperimentConfig cfg);
ExperimentConfig run_fidelities(ExperimentConfig cfg);
ExperimentConfig run_transfer_scan(ExperimentConfig cfg);
ExperimentConfig run_single_qubit(ExperimentConfig cfg);

/// Dispatch on cfg.experiment.
ExperimentConfig run_experiment(ExperimentConfig cfg);

} // namespace entlab
