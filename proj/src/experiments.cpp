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

#include "entlab/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "entlab/closed_form.hpp"
#include "entlab/transfer.hpp"

namespace entlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

/// CSV with '#'-prefixed comment header, fixed 12-significant-digit
/// scientific formatting, '\n' line endings. Byte-deterministic for a
/// fixed configuration.
class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }

    void comment(const std::string& line) { out_ << "# " << line << "\n"; }

    void columns(const std::vector<std::string>& names) {
        for (size_t i = 0; i < names.size(); ++i) {
            if (i) out_ << ",";
            out_ << names[i];
        }
        out_ << "\n";
    }

    void row(const std::vector<double>& values, const std::string& label = {}) {
        bool first = true;
        if (!label.empty()) {
            out_ << label;
            first = false;
        }
        for (double v : values) {
            if (!first) out_ << ",";
            out_ << fmt(v);
            first = false;
        }
        out_ << "\n";
    }

  private:
    std::ofstream out_;
};

const char* reservoir_name(ReservoirModel m) {
    return m == ReservoirModel::Common ? "common" : "separate";
}

void write_config_header(CsvWriter& w, const ExperimentConfig& cfg) {
    w.comment(std::string("entlab ") + kVersion);
    w.comment("experiment = " + cfg.experiment);
    w.comment("omega1 = " + fmt(cfg.params.omega1));
    w.comment("omega2 = " + fmt(cfg.params.omega2));
    w.comment("delta1 = " + fmt(cfg.params.delta1));
    w.comment("delta2 = " + fmt(cfg.params.delta2));
    w.comment("coupling = " + fmt(cfg.params.coupling));
    w.comment("gamma1 = " + fmt(cfg.params.gamma1));
    w.comment("gamma2 = " + fmt(cfg.params.gamma2));
    w.comment(std::string("reservoir = ") + reservoir_name(cfg.reservoir));
    if (!cfg.initial.empty()) w.comment("initial = " + cfg.initial);
    for (const auto& [name, axis] : cfg.grid) {
        std::ostringstream line;
        line << "grid." << name << " = " << fmt(axis.lo) << ":" << fmt(axis.hi) << ":"
             << axis.count;
        w.comment(line.str());
    }
    if (cfg.g_tau) w.comment("g_tau = " + fmt(*cfg.g_tau));
}

double parse_number(const std::string& s) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed number: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("malformed number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct BellColumns {
    PureState psi_plus = bell_state(BellKind::PsiPlus);
    PureState psi_minus = bell_state(BellKind::PsiMinus);
    PureState phi_plus = bell_state(BellKind::PhiPlus);
    PureState phi_minus = bell_state(BellKind::PhiMinus);
};

std::string output_path(const ExperimentConfig& cfg) {
    return cfg.output.empty() ? cfg.experiment + ".csv" : cfg.output;
}

GridAxis grid_or(const ExperimentConfig& cfg, const std::string& name, GridAxis fallback) {
    auto it = cfg.grid.find(name);
    if (it == cfg.grid.end()) return fallback;
    it->second.validate();
    return it->second;
}

} // namespace

void GridAxis::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("grid axis: range not finite");
    if (count < 2) throw std::invalid_argument("grid axis: step count must be >= 2");
    if (!(lo < hi)) throw std::invalid_argument("grid axis: lo must be below hi");
}

DensityMatrix parse_initial_state(const std::string& spec) {
    const auto head = split(spec, ':');
    if (head.size() != 2) throw std::invalid_argument("initial state spec: '" + spec + "'");
    const std::string& family = head[0];
    const std::string& arg = head[1];

    if (family == "bell") {
        if (arg == "psi+") return DensityMatrix::from_pure(bell_state(BellKind::PsiPlus));
        if (arg == "psi-") return DensityMatrix::from_pure(bell_state(BellKind::PsiMinus));
        if (arg == "phi+") return DensityMatrix::from_pure(bell_state(BellKind::PhiPlus));
        if (arg == "phi-") return DensityMatrix::from_pure(bell_state(BellKind::PhiMinus));
        throw std::invalid_argument("unknown Bell label: '" + arg + "'");
    }

    const auto kv = split(arg, '=');
    if (kv.size() != 2) throw std::invalid_argument("initial state spec: '" + spec + "'");
    const double value = parse_number(kv[1]);
    if (family == "werner" && kv[0] == "f") return werner_state(value);
    if (family == "ye" && kv[0] == "alpha") return ye_state(value);
    if (family == "egge" && kv[0] == "a") return egge_state(value);
    throw std::invalid_argument("initial state spec: '" + spec + "'");
}

std::map<std::string, GridAxis> parse_grid_spec(const std::string& spec) {
    std::map<std::string, GridAxis> grid;
    if (spec.empty()) return grid;
    for (const auto& part : split(spec, ',')) {
        const auto kv = split(part, '=');
        if (kv.size() != 2) throw std::invalid_argument("grid spec: '" + part + "'");
        const auto rng = split(kv[1], ':');
        if (rng.size() != 3) throw std::invalid_argument("grid spec: '" + part + "'");
        GridAxis axis;
        axis.lo = parse_number(rng[0]);
        axis.hi = parse_number(rng[1]);
        const double cnt = parse_number(rng[2]);
        axis.count = static_cast<int>(cnt);
        if (axis.count != cnt) throw std::invalid_argument("grid spec: non-integer count");
        axis.validate();
        grid[kv[0]] = axis;
    }
    return grid;
}

ExperimentConfig default_config(const std::string& experiment) {
    ExperimentConfig cfg;
    cfg.experiment = experiment;
    cfg.params.gamma1 = cfg.params.gamma2 = 1.0;
    if (experiment == "evolve" || experiment == "steady") {
        cfg.params.omega1 = cfg.params.omega2 = 2.0;
        cfg.params.coupling = 5.0;
    } else if (experiment == "phase-diagram") {
        cfg.grid["omega"] = {0.0, 6.0, 61};
        cfg.grid["coupling"] = {0.0, 30.0, 61};
    } else if (experiment == "fidelities") {
        cfg.params.coupling = 7.0;
        cfg.grid["omega"] = {0.0, 6.0, 121};
    } else if (experiment == "transfer-scan") {
        cfg.params.omega1 = cfg.params.omega2 = 2.0;
        cfg.params.coupling = 20.0;
        cfg.grid["gtau"] = {0.0, kPi, 181};
    } else if (experiment == "single-qubit") {
        cfg.grid["omega"] = {0.05, 8.0, 160};
    } else {
        throw std::invalid_argument("unknown experiment: '" + experiment + "'");
    }
    return cfg;
}

ExperimentConfig run_evolve(ExperimentConfig cfg) {
    cfg.experiment = "evolve";
    cfg.params.validate();

    std::vector<std::string> members;
    const bool family = cfg.initial.empty();
    if (family) {
        members = {"werner:f=0.3", "werner:f=0.5", "werner:f=0.7", "werner:f=0.9",
                   "werner:f=1.0"};
    } else {
        members = {cfg.initial};
    }

    const Superoperator l = liouvillian(cfg.params, cfg.reservoir);
    const BellColumns bell;

    CsvWriter w(output_path(cfg));
    write_config_header(w, cfg);
    w.comment("t_final = " + fmt(cfg.t_final));
    std::ostringstream sc;
    sc << "samples = " << cfg.samples;
    w.comment(sc.str());
    std::vector<std::string> cols = {"t",
                                     "concurrence",
                                     "fidelity_psi_plus",
                                     "fidelity_psi_minus",
                                     "fidelity_phi_plus",
                                     "fidelity_phi_minus",
                                     "purity"};
    if (family) cols.insert(cols.begin(), "initial");
    w.columns(cols);

    for (const auto& spec : members) {
        const DensityMatrix rho0 = parse_initial_state(spec);
        const Trajectory traj = evolve(rho0, l, cfg.t_final, cfg.samples);
        for (const auto& [t, rho] : traj) {
            w.row({t, concurrence(rho), fidelity(bell.psi_plus, rho),
                   fidelity(bell.psi_minus, rho), fidelity(bell.phi_plus, rho),
                   fidelity(bell.phi_minus, rho), rho.purity()},
                  family ? spec : std::string());
        }
    }
    return cfg;
}

ExperimentConfig run_steady(ExperimentConfig cfg) {
    cfg.experiment = "steady";
    cfg.params.validate();

    const Superoperator l = liouvillian(cfg.params, cfg.reservoir);
    const SteadyStateResult res = steady_state(l);
    const BellColumns bell;

    CsvWriter w(output_path(cfg));
    write_config_header(w, cfg);
    {
        std::ostringstream line;
        line << "null_dim = " << res.null_dim;
        w.comment(line.str());
    }
    w.comment("residual = " + fmt(res.residual));
    w.comment("concurrence_signed = " + fmt(concurrence_signed(res.state)));
    w.comment("concurrence = " + fmt(concurrence(res.state)));
    w.comment("fidelity_psi_plus = " + fmt(fidelity(bell.psi_plus, res.state)));
    w.comment("fidelity_psi_minus = " + fmt(fidelity(bell.psi_minus, res.state)));
    w.comment("fidelity_phi_plus = " + fmt(fidelity(bell.phi_plus, res.state)));
    w.comment("fidelity_phi_minus = " + fmt(fidelity(bell.phi_minus, res.state)));
    w.columns({"row", "col", "re", "im"});
    for (int r = 0; r < res.state.dim(); ++r)
        for (int c = 0; c < res.state.dim(); ++c)
            w.row({static_cast<double>(r), static_cast<double>(c),
                   res.state.element(r, c).real(), res.state.element(r, c).imag()});
    return cfg;
}

ExperimentConfig run_phase_diagram(ExperimentConfig cfg) {
    cfg.experiment = "phase-diagram";
    cfg.params.validate();
    const GridAxis omega_axis = grid_or(cfg, "omega", {0.0, 6.0, 61});
    const GridAxis coupling_axis = grid_or(cfg, "coupling", {0.0, 30.0, 61});
    cfg.grid["omega"] = omega_axis;
    cfg.grid["coupling"] = coupling_axis;

    const std::string path = output_path(cfg);
    CsvWriter w(path);
    write_config_header(w, cfg);

    // Long-integration spot checks: the scan itself uses the kernel solver,
    // so a few grid points are independently evolved to t = 1000 and the
    // resulting concurrences recorded alongside.
    const double spot_points[][2] = {{2.0, 5.0}, {4.0, 20.0}, {6.0, 30.0}};
    for (const auto& pt : spot_points) {
        SystemParams p = cfg.params;
        p.omega1 = p.omega2 = pt[0];
        p.coupling = pt[1];
        const Superoperator l = liouvillian(p, cfg.reservoir);
        const double c_kernel = concurrence(steady_state(l).state);
        const Trajectory traj = evolve(werner_state(0.25), l, 1000.0, 2, 1e-9);
        const double c_evolved = concurrence(traj.back().second);
        std::ostringstream line;
        line << "spot-check omega = " << fmt(pt[0]) << ", coupling = " << fmt(pt[1])
             << ", c_kernel = " << fmt(c_kernel) << ", c_evolved = " << fmt(c_evolved)
             << ", diff = " << fmt(std::abs(c_kernel - c_evolved));
        w.comment(line.str());
    }

    w.columns({"omega", "coupling", "concurrence", "concurrence_signed"});
    for (int i = 0; i < omega_axis.count; ++i) {
        SystemParams p = cfg.params;
        p.omega1 = p.omega2 = omega_axis.value(i);
        for (int j = 0; j < coupling_axis.count; ++j) {
            p.coupling = coupling_axis.value(j);
            const Superoperator l = liouvillian(p, cfg.reservoir);
            const double cs = concurrence_signed(steady_state(l).state);
            w.row({p.omega1, p.coupling, std::max(0.0, cs), cs});
        }
    }

    // companion boundary curves over the same omega axis
    std::string boundary_path = path;
    const size_t dot = boundary_path.rfind(".csv");
    if (dot != std::string::npos && dot == boundary_path.size() - 4)
        boundary_path.replace(dot, 4, "_boundary.csv");
    else
        boundary_path += "_boundary.csv";
    CsvWriter wb(boundary_path);
    write_config_header(wb, cfg);
    wb.columns({"omega", "coupling_crossover", "coupling_max"});
    for (int i = 0; i < omega_axis.count; ++i) {
        const double om = omega_axis.value(i);
        wb.row({om, closed_form::crossover_coupling(om, cfg.params.gamma1),
                closed_form::optimal_coupling(om, cfg.params.gamma1)});
    }
    return cfg;
}

ExperimentConfig run_fidelities(ExperimentConfig cfg) {
    cfg.experiment = "fidelities";
    cfg.params.validate();
    const GridAxis omega_axis = grid_or(cfg, "omega", {0.0, 6.0, 121});
    cfg.grid["omega"] = omega_axis;
    const BellColumns bell;

    CsvWriter w(output_path(cfg));
    write_config_header(w, cfg);
    w.columns({"omega", "F_psi_plus", "F_psi_minus", "F_phi_plus", "F_phi_minus",
               "F_psi_plus_num", "F_psi_minus_num", "F_phi_plus_num", "F_phi_minus_num"});
    for (int i = 0; i < omega_axis.count; ++i) {
        const double om = omega_axis.value(i);
        const auto s = closed_form::detuned_summary(om, cfg.params.gamma1, cfg.params.coupling,
                                                    cfg.params.delta1);
        SystemParams p = cfg.params;
        p.omega1 = p.omega2 = om;
        const DensityMatrix rho = steady_state(liouvillian(p, cfg.reservoir)).state;
        w.row({om, s.fidelity_psi_plus, s.fidelity_psi_minus, s.fidelity_phi_plus,
               s.fidelity_phi_minus, fidelity(bell.psi_plus, rho), fidelity(bell.psi_minus, rho),
               fidelity(bell.phi_plus, rho), fidelity(bell.phi_minus, rho)});
    }
    return cfg;
}

ExperimentConfig run_transfer_scan(ExperimentConfig cfg) {
    cfg.experiment = "transfer-scan";
    cfg.params.validate();
    GridAxis gtau_axis = grid_or(cfg, "gtau", {0.0, kPi, 181});
    if (!cfg.g_tau) cfg.grid["gtau"] = gtau_axis;

    const Superoperator l = liouvillian(cfg.params, cfg.reservoir);
    const DensityMatrix rho_inf = steady_state(l).state;

    CsvWriter w(output_path(cfg));
    write_config_header(w, cfg);
    w.comment("source_concurrence = " + fmt(concurrence(rho_inf)));
    w.columns({"g_tau", "photon_concurrence"});
    const int count = cfg.g_tau ? 1 : gtau_axis.count;
    for (int i = 0; i < count; ++i) {
        const double gt = cfg.g_tau ? *cfg.g_tau : gtau_axis.value(i);
        const DensityMatrix photons = transfer(rho_inf, TransferSettings{gt});
        w.row({gt, concurrence(photons)});
    }
    return cfg;
}

ExperimentConfig run_single_qubit(ExperimentConfig cfg) {
    cfg.experiment = "single-qubit";
    cfg.params.validate();
    const GridAxis omega_axis = grid_or(cfg, "omega", {0.05, 8.0, 160});
    cfg.grid["omega"] = omega_axis;

    CsvWriter w(output_path(cfg));
    write_config_header(w, cfg);
    w.columns({"omega_over_gamma", "rho00", "rho11", "im_rho01", "r_x", "r_y", "r_z",
               "semicircle_residual"});
    for (int i = 0; i < omega_axis.count; ++i) {
        const double om = omega_axis.value(i);
        const DensityMatrix rho = closed_form::single_qubit_steady(om, cfg.params.gamma1);
        const BlochVector r = bloch_vector(rho);
        const double residual =
            std::abs((r.z + 0.5) * (r.z + 0.5) + r.y * r.y / 2.0 - 0.25);
        w.row({om / cfg.params.gamma1, rho.element(1, 1).real(), rho.element(0, 0).real(),
               rho.element(1, 0).imag(), r.x, r.y, r.z, residual});
    }
    return cfg;
}

ExperimentConfig run_experiment(ExperimentConfig cfg) {
    if (cfg.experiment == "evolve") return run_evolve(std::move(cfg));
    if (cfg.experiment == "steady") return run_steady(std::move(cfg));
    if (cfg.experiment == "phase-diagram") return run_phase_diagram(std::move(cfg));
    if (cfg.experiment == "fidelities") return run_fidelities(std::move(cfg));
    if (cfg.experiment == "transfer-scan") return run_transfer_scan(std::move(cfg));
    if (cfg.experiment == "single-qubit") return run_single_qubit(std::move(cfg));
    throw std::invalid_argument("unknown experiment: '" + cfg.experiment + "'");
}

} // namespace entlab
