// SPDX-License-Identifier: Apache-2.0
//
// Experiment runner: reproduces the beam-squint, array-gain, spectral- and
// energy-efficiency sweeps and writes CSV tables with a JSON manifest.

#pragma once

#include "dsfttd/channel.hpp"
#include "dsfttd/metrics.hpp"
#include "dsfttd/rd_solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsfttd {

/// System-level defaults shared by all experiments. `paper` is the full-scale
/// setup, `desk` a reduced one for CI runtimes.
struct SystemProfile {
    std::string name = "paper";
    double center_frequency = 300e9;
    double bandwidth = 50e9;
    arma::uword carrier_count = 50;
    arma::uword tx_side = 32; // N_t = tx_side^2
    arma::uword rx_side = 32;
    arma::uword chain_count = 4;
    arma::uword stream_count = 4;
    arma::uword fttd_per_chain = 32;
    double transmit_power_dbm = 20.0;
    double distance = 50.0;
    double noise_figure_db = 10.0;
    arma::uword path_count = 5;
    SectorAntenna antenna{2.0 * arma::datum::pi / 3.0, arma::datum::pi / 4.0};
    Direction target = direction_deg(45.0, 30.0);
    RdConfig rd;
    DevicePowers devices;

    arma::uword tx_antennas() const { return tx_side * tx_side; }
    arma::uword rx_antennas() const { return rx_side * rx_side; }
    double transmit_power_watts() const {
        return std::pow(10.0, transmit_power_dbm / 10.0) * 1e-3;
    }
    UpaGeometry tx_geometry() const { return UpaGeometry::square(tx_side, center_frequency); }
    UpaGeometry rx_geometry() const { return UpaGeometry::square(rx_side, center_frequency); }
    FrequencyGrid grid() const {
        return frequency_grid(center_frequency, bandwidth, carrier_count);
    }

    static SystemProfile paper();
    static SystemProfile desk();
};

enum class ExperimentKind {
    GainVsFrequency,
    GainVsQ,
    SeVsQ,
    EeVsQ,
    SeVsPower,
    EeVsPower,
    SeVsAntennas,
    EeVsAntennas,
    SeVsBandwidth,
    SeVsCsi,
    ConvergenceTrace,
};

ExperimentKind experiment_kind_from_string(const std::string& name);
std::string experiment_kind_to_string(ExperimentKind kind);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::GainVsFrequency;
    SystemProfile profile;
    std::vector<arma::uword> seeds = {1};
    std::vector<double> sweep;  // kind-specific sweep values; empty = default
    arma::uword thread_count = 1;
    bool strict = false;        // fail on solver degeneracy
    std::string output_path;    // empty = stdout

    void validate() const;      // throws std::invalid_argument with field path
};

/// Apply JSON overrides (profile fields, sweep, seeds, device powers) to a
/// config; unknown keys are rejected.
void apply_config_file(ExperimentConfig& cfg, const std::string& json_text);

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> annotations; // per row; empty = none
    bool degenerate = false;

    std::string to_csv() const;
};

ResultTable run_experiment(const ExperimentConfig& cfg);

/// Write the CSV and the adjacent `<path>.manifest.json` (config echo, seeds,
/// library version).
void write_results(const ExperimentConfig& cfg, const ResultTable& table);

/// One full pipeline run: channel -> optimal precoders -> RD -> metrics.
struct PipelineResult {
    double se_optimal = 0.0;
    double se_dsfttd = 0.0;
    double se_narrowband_ps = 0.0;
    double power_watts = 0.0;       // DS-FTTD total draw
    double energy_eff = 0.0;        // DS-FTTD
    arma::uword active_fttd = 0;
    arma::uword iterations = 0;
    bool degenerate = false;
    std::vector<double> objective_trace;
};

/// `csi_accuracy` is the xi of the imperfect-CSI model; the solver sees the
/// perturbed channel, metrics use the true one.
PipelineResult run_pipeline(const SystemProfile& profile, arma::uword seed,
                            double csi_accuracy = 1.0);

/// RD with L_t = 1 and per-carrier steering vectors as targets; returns the
/// dB-domain average array gain toward the profile target direction.
double dsfttd_average_gain_db(const SystemProfile& profile, arma::uword q,
                              arma::uword seed, arma::uword* iterations = nullptr);

inline const char* kLibraryVersion = "0.1.0";

} // namespace dsfttd
