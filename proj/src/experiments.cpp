// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/experiments.hpp"

#include "dsfttd/beam_squint.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dsfttd {

SystemProfile SystemProfile::paper() {
    SystemProfile p;
    p.name = "paper";
    return p;
}

SystemProfile SystemProfile::desk() {
    SystemProfile p;
    p.name = "desk";
    p.tx_side = 16;
    p.rx_side = 16;
    p.carrier_count = 16;
    return p;
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
    if (name == "gain-vs-frequency") return ExperimentKind::GainVsFrequency;
    if (name == "gain-vs-Q") return ExperimentKind::GainVsQ;
    if (name == "se-vs-Q") return ExperimentKind::SeVsQ;
    if (name == "ee-vs-Q") return ExperimentKind::EeVsQ;
    if (name == "se-vs-power") return ExperimentKind::SeVsPower;
    if (name == "ee-vs-power") return ExperimentKind::EeVsPower;
    if (name == "se-vs-antennas") return ExperimentKind::SeVsAntennas;
    if (name == "ee-vs-antennas") return ExperimentKind::EeVsAntennas;
    if (name == "se-vs-bandwidth") return ExperimentKind::SeVsBandwidth;
    if (name == "se-vs-csi") return ExperimentKind::SeVsCsi;
    if (name == "convergence-trace") return ExperimentKind::ConvergenceTrace;
    throw std::invalid_argument("unknown experiment kind: " + name);
}

std::string experiment_kind_to_string(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::GainVsFrequency: return "gain-vs-frequency";
    case ExperimentKind::GainVsQ: return "gain-vs-Q";
    case ExperimentKind::SeVsQ: return "se-vs-Q";
    case ExperimentKind::EeVsQ: return "ee-vs-Q";
    case ExperimentKind::SeVsPower: return "se-vs-power";
    case ExperimentKind::EeVsPower: return "ee-vs-power";
    case ExperimentKind::SeVsAntennas: return "se-vs-antennas";
    case ExperimentKind::EeVsAntennas: return "ee-vs-antennas";
    case ExperimentKind::SeVsBandwidth: return "se-vs-bandwidth";
    case ExperimentKind::SeVsCsi: return "se-vs-csi";
    case ExperimentKind::ConvergenceTrace: return "convergence-trace";
    }
    throw std::logic_error("unreachable");
}

void ExperimentConfig::validate() const {
    if (profile.carrier_count < 2)
        throw std::invalid_argument("profile.carrier_count: must be >= 2");
    if (profile.bandwidth <= 0.0)
        throw std::invalid_argument("profile.bandwidth: must be positive");
    if (profile.tx_side < 1 || profile.rx_side < 1)
        throw std::invalid_argument("profile.tx_side/rx_side: must be >= 1");
    if (profile.stream_count > profile.chain_count)
        throw std::invalid_argument("profile.stream_count: must be <= chain_count");
    if (profile.fttd_per_chain < 2)
        throw std::invalid_argument("profile.fttd_per_chain: must be >= 2");
    if (profile.path_count < 1 || profile.path_count > 5)
        throw std::invalid_argument("profile.path_count: must be in [1, 5]");
    if (profile.rd.max_iterations < 1 || profile.rd.relative_tolerance <= 0.0)
        throw std::invalid_argument("profile.rd: invalid solver config");
    if (seeds.empty() && kind != ExperimentKind::GainVsFrequency)
        throw std::invalid_argument("seeds: must be non-empty for stochastic experiments");
    if (thread_count < 1)
        throw std::invalid_argument("thread_count: must be >= 1");
}

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& scope) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed)
            ok = ok || it.key() == key;
        if (!ok)
            throw std::invalid_argument("config: unknown key " + scope + it.key());
    }
}

void apply_profile_json(SystemProfile& p, const json& j) {
    check_keys(j,
               {"center_frequency_hz", "bandwidth_hz", "carrier_count", "tx_side", "rx_side",
                "chain_count", "stream_count", "fttd_per_chain", "transmit_power_dbm",
                "distance_m", "noise_figure_db", "path_count", "azimuth_beamwidth_deg",
                "elevation_beamwidth_deg", "target_azimuth_deg", "target_elevation_deg"},
               "profile.");
    const double deg = arma::datum::pi / 180.0;
    if (j.contains("center_frequency_hz")) p.center_frequency = j["center_frequency_hz"];
    if (j.contains("bandwidth_hz")) p.bandwidth = j["bandwidth_hz"];
    if (j.contains("carrier_count")) p.carrier_count = j["carrier_count"].get<arma::uword>();
    if (j.contains("tx_side")) p.tx_side = j["tx_side"].get<arma::uword>();
    if (j.contains("rx_side")) p.rx_side = j["rx_side"].get<arma::uword>();
    if (j.contains("chain_count")) p.chain_count = j["chain_count"].get<arma::uword>();
    if (j.contains("stream_count")) p.stream_count = j["stream_count"].get<arma::uword>();
    if (j.contains("fttd_per_chain")) p.fttd_per_chain = j["fttd_per_chain"].get<arma::uword>();
    if (j.contains("transmit_power_dbm")) p.transmit_power_dbm = j["transmit_power_dbm"];
    if (j.contains("distance_m")) p.distance = j["distance_m"];
    if (j.contains("noise_figure_db")) p.noise_figure_db = j["noise_figure_db"];
    if (j.contains("path_count")) p.path_count = j["path_count"].get<arma::uword>();
    if (j.contains("azimuth_beamwidth_deg"))
        p.antenna.azimuth_beamwidth = j["azimuth_beamwidth_deg"].get<double>() * deg;
    if (j.contains("elevation_beamwidth_deg"))
        p.antenna.elevation_beamwidth = j["elevation_beamwidth_deg"].get<double>() * deg;
    if (j.contains("target_azimuth_deg"))
        p.target.azimuth = j["target_azimuth_deg"].get<double>() * deg;
    if (j.contains("target_elevation_deg"))
        p.target.elevation = j["target_elevation_deg"].get<double>() * deg;
}

void apply_devices_json(DevicePowers& d, const json& j) {
    check_keys(j,
               {"pa_mw", "rf_mw", "dac_mw", "baseband_mw", "phase_shifter_mw", "ttd_mw",
                "fttd_mw", "switch_mw", "power_divider_mw", "power_combiner_mw"},
               "devices.");
    if (j.contains("pa_mw")) d.pa = j["pa_mw"];
    if (j.contains("rf_mw")) d.rf = j["rf_mw"];
    if (j.contains("dac_mw")) d.dac = j["dac_mw"];
    if (j.contains("baseband_mw")) d.baseband = j["baseband_mw"];
    if (j.contains("phase_shifter_mw")) d.phase_shifter = j["phase_shifter_mw"];
    if (j.contains("ttd_mw")) d.ttd = j["ttd_mw"];
    if (j.contains("fttd_mw")) d.fttd = j["fttd_mw"];
    if (j.contains("switch_mw")) d.sw = j["switch_mw"];
    if (j.contains("power_divider_mw")) d.power_divider = j["power_divider_mw"];
    if (j.contains("power_combiner_mw")) d.power_combiner = j["power_combiner_mw"];
}

} // namespace

void apply_config_file(ExperimentConfig& cfg, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
    }
    check_keys(j, {"profile", "devices", "rd", "seeds", "sweep", "threads", "strict"}, "");
    if (j.contains("profile"))
        apply_profile_json(cfg.profile, j["profile"]);
    if (j.contains("devices"))
        apply_devices_json(cfg.profile.devices, j["devices"]);
    if (j.contains("rd")) {
        check_keys(j["rd"], {"max_iterations", "relative_tolerance"}, "rd.");
        if (j["rd"].contains("max_iterations"))
            cfg.profile.rd.max_iterations = j["rd"]["max_iterations"].get<arma::uword>();
        if (j["rd"].contains("relative_tolerance"))
            cfg.profile.rd.relative_tolerance = j["rd"]["relative_tolerance"];
    }
    if (j.contains("seeds"))
        cfg.seeds = j["seeds"].get<std::vector<arma::uword>>();
    if (j.contains("sweep"))
        cfg.sweep = j["sweep"].get<std::vector<double>>();
    if (j.contains("threads"))
        cfg.thread_count = j["threads"].get<arma::uword>();
    if (j.contains("strict"))
        cfg.strict = j["strict"].get<bool>();
}

namespace {

// Analog steering matrix toward the channel's departure directions, one
// column per RF chain (paths reused cyclically).
arma::cx_mat narrowband_analog(const SystemProfile& profile, const ChannelSet& ch) {
    const UpaGeometry geom = profile.tx_geometry();
    arma::cx_mat analog(geom.antenna_count(), profile.chain_count);
    for (arma::uword l = 0; l < profile.chain_count; ++l) {
        const Direction dir = ch.paths[l % ch.paths.size()].departure;
        analog.col(l) = narrowband_weights(geom, dir);
    }
    return analog;
}

// min_{D semi-unitary} ||P - A*D|| via the SVD of P^H A, then per-carrier
// power normalization to ||A*D[m]||_F = ||P[m]||_F.
std::vector<arma::cx_mat> projected_precoders(const arma::cx_mat& analog,
                                              const std::vector<arma::cx_mat>& targets) {
    std::vector<arma::cx_mat> out;
    out.reserve(targets.size());
    for (const arma::cx_mat& p : targets) {
        arma::cx_mat u, v;
        arma::vec s;
        if (!arma::svd(u, s, v, arma::cx_mat(p.t() * analog)))
            throw std::runtime_error("projected_precoders: SVD failed");
        const arma::uword streams = p.n_cols;
        arma::cx_mat digital = v.cols(0, streams - 1) * u.cols(0, streams - 1).t();
        const double norm = arma::norm(arma::cx_mat(analog * digital), "fro");
        if (norm > 0.0)
            digital *= arma::norm(p, "fro") / norm;
        out.push_back(analog * digital);
    }
    return out;
}

} // namespace

PipelineResult run_pipeline(const SystemProfile& profile, arma::uword seed,
                            double csi_accuracy) {
    const FrequencyGrid grid = profile.grid();
    const UpaGeometry tx = profile.tx_geometry();
    const UpaGeometry rx = profile.rx_geometry();
    const double sigma = noise_power(profile.bandwidth, profile.carrier_count,
                                     profile.noise_figure_db);
    const double rho = profile.transmit_power_watts();

    const ChannelSet ch = generate_channel(tx, rx, grid, profile.antenna,
                                           profile.path_count, seed, profile.distance);
    const OptimalPrecoderSet p_true =
        optimal_precoders(ch, profile.stream_count, rho, sigma);

    // What the solver believes: perturbed CSI when xi < 1.
    ChannelSet ch_est = ch;
    OptimalPrecoderSet p_est = p_true;
    if (csi_accuracy < 1.0) {
        ch_est = perturb_csi(ch, csi_accuracy, seed + 0x5eed);
        p_est = optimal_precoders(ch_est, profile.stream_count, rho, sigma);
    }

    const FttdBank bank = build_delay_bank(tx, profile.chain_count, profile.fttd_per_chain);
    RdConfig rd_cfg = profile.rd;
    rd_cfg.seed = seed;
    const RdResult rd = rd_solve(p_est.precoders, bank, grid, rd_cfg);

    std::vector<arma::cx_mat> composite;
    composite.reserve(grid.carrier_count());
    for (arma::uword m = 0; m < grid.carrier_count(); ++m)
        composite.push_back(composite_precoder(rd.switches, fttd_matrix(bank, grid.carriers[m]),
                                               rd.digital[m]));

    PipelineResult result;
    result.se_optimal = spectral_efficiency(ch.matrices, p_true.precoders, sigma);
    result.se_dsfttd = spectral_efficiency(ch.matrices, composite, sigma);
    result.se_narrowband_ps = spectral_efficiency(
        ch.matrices, projected_precoders(narrowband_analog(profile, ch_est), p_est.precoders),
        sigma);
    result.active_fttd = active_fttd_count(rd.switches);
    result.iterations = rd.iterations_used;
    result.degenerate = rd.degenerate;
    result.objective_trace = rd.objective_trace;

    ArchitectureSpec spec;
    spec.kind = Architecture::DsFttd;
    spec.antenna_count = profile.tx_antennas();
    spec.chain_count = profile.chain_count;
    spec.fttd_per_chain = profile.fttd_per_chain;
    spec.active_fttd = result.active_fttd;
    spec.transmit_power = rho;
    result.power_watts = power_consumption(spec, profile.devices);
    result.energy_eff = energy_efficiency(result.se_dsfttd, result.power_watts);
    return result;
}

double dsfttd_average_gain_db(const SystemProfile& profile, arma::uword q, arma::uword seed,
                              arma::uword* iterations) {
    const UpaGeometry geom = profile.tx_geometry();
    const FrequencyGrid grid = profile.grid();

    std::vector<arma::cx_mat> targets;
    targets.reserve(grid.carrier_count());
    for (double f_m : grid.carriers)
        targets.push_back(arma::cx_mat(steering_vector(geom, f_m, profile.target)));

    const FttdBank bank = build_delay_bank(geom, 1, q);
    RdConfig cfg = profile.rd;
    cfg.seed = seed;
    const RdResult rd = rd_solve(targets, bank, grid, cfg);
    if (iterations != nullptr)
        *iterations = rd.iterations_used;

    const double n_t = static_cast<double>(geom.antenna_count());
    std::vector<double> gains;
    gains.reserve(grid.carrier_count());
    for (arma::uword m = 0; m < grid.carrier_count(); ++m) {
        const arma::cx_mat w =
            composite_precoder(rd.switches, fttd_matrix(bank, grid.carriers[m]), rd.digital[m]);
        const std::complex<double> inner = arma::cdot(w.col(0), targets[m].col(0));
        gains.push_back(std::norm(inner) / n_t);
    }
    return average_gain_db(gains);
}

namespace {

std::string format_cell(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

struct TaskResult {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> annotations;
    bool degenerate = false;
};

// Runs one task per (sweep value, seed) pair with bounded parallelism and
// merges results in declared order.
ResultTable run_tasks(const ExperimentConfig& cfg, const std::vector<double>& sweep,
                      std::vector<std::string> columns,
                      const std::function<TaskResult(double, arma::uword)>& task,
                      bool append_means) {
    struct Job {
        double value;
        arma::uword seed;
    };
    std::vector<Job> jobs;
    for (double v : sweep)
        for (arma::uword s : cfg.seeds)
            jobs.push_back({v, s});

    std::vector<TaskResult> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            results[i] = task(jobs[i].value, jobs[i].seed);
    };
    const arma::uword workers =
        std::max<arma::uword>(1, std::min<arma::uword>(cfg.thread_count, jobs.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (arma::uword w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    ResultTable table;
    table.columns = std::move(columns);
    size_t idx = 0;
    for (size_t vi = 0; vi < sweep.size(); ++vi) {
        const size_t first = table.rows.size();
        for (size_t si = 0; si < cfg.seeds.size(); ++si, ++idx) {
            for (size_t r = 0; r < results[idx].rows.size(); ++r) {
                table.rows.push_back(results[idx].rows[r]);
                table.annotations.push_back(results[idx].annotations[r]);
            }
            table.degenerate = table.degenerate || results[idx].degenerate;
        }
        if (append_means && cfg.seeds.size() > 0) {
            // Seed-averaged row: seed column (index 1) marked -1.
            std::vector<double> mean(table.columns.size(), 0.0);
            const size_t count = table.rows.size() - first;
            if (count > 0) {
                for (size_t r = first; r < table.rows.size(); ++r)
                    for (size_t c = 0; c < mean.size(); ++c)
                        mean[c] += table.rows[r][c];
                for (double& v : mean)
                    v /= static_cast<double>(count);
                mean[0] = sweep[vi];
                if (mean.size() > 1)
                    mean[1] = -1.0;
                table.rows.push_back(mean);
                table.annotations.push_back("mean");
            }
        }
    }
    return table;
}

std::vector<double> default_sweep(const ExperimentConfig& cfg) {
    if (!cfg.sweep.empty())
        return cfg.sweep;
    switch (cfg.kind) {
    case ExperimentKind::GainVsFrequency: {
        std::vector<double> freqs;
        const double lo = cfg.profile.center_frequency - cfg.profile.bandwidth / 2.0;
        const double hi = cfg.profile.center_frequency + cfg.profile.bandwidth / 2.0;
        const arma::uword points = 201;
        for (arma::uword i = 0; i < points; ++i)
            freqs.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                     static_cast<double>(points - 1));
        return freqs;
    }
    case ExperimentKind::GainVsQ:
    case ExperimentKind::SeVsQ:
    case ExperimentKind::EeVsQ:
        return {4, 8, 16, 32, 64, 128};
    case ExperimentKind::SeVsPower:
    case ExperimentKind::EeVsPower:
        return {0, 5, 10, 15, 20, 25, 30}; // dBm
    case ExperimentKind::SeVsAntennas:
    case ExperimentKind::EeVsAntennas:
        return {8, 16, 24, 32}; // UPA side; N_t = side^2
    case ExperimentKind::SeVsBandwidth:
        return {10e9, 20e9, 30e9, 40e9, 50e9};
    case ExperimentKind::SeVsCsi:
        return {0.6, 0.7, 0.8, 0.9, 1.0};
    case ExperimentKind::ConvergenceTrace:
        return {0.0}; // placeholder single sweep point
    }
    throw std::logic_error("unreachable");
}

TaskResult pipeline_rows(const SystemProfile& profile, double sweep_value, arma::uword seed,
                         double xi) {
    const PipelineResult r = run_pipeline(profile, seed, xi);
    TaskResult out;
    out.rows.push_back({sweep_value, static_cast<double>(seed), r.se_optimal, r.se_dsfttd,
                        r.se_narrowband_ps, r.power_watts, r.energy_eff,
                        static_cast<double>(r.active_fttd), static_cast<double>(r.iterations)});
    out.annotations.push_back(r.degenerate ? "degenerate" : "");
    out.degenerate = r.degenerate;
    return out;
}

const std::vector<std::string> kPipelineColumns = {
    "sweep",      "seed",          "se_optimal_bps_hz", "se_dsfttd_bps_hz",
    "se_nb_ps_bps_hz", "power_w",  "ee_bps_hz_w",       "active_fttd",
    "iterations"};

std::vector<std::string> pipeline_columns(const std::string& sweep_name) {
    std::vector<std::string> cols = kPipelineColumns;
    cols[0] = sweep_name;
    return cols;
}

} // namespace

ResultTable run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::vector<double> sweep = default_sweep(cfg);
    const SystemProfile& profile = cfg.profile;

    switch (cfg.kind) {
    case ExperimentKind::GainVsFrequency: {
        ResultTable table;
        table.columns = {"frequency_hz", "narrowband_gain_db", "gain_loss_db",
                         "ideal_ttd_gain_db"};
        const UpaGeometry geom = profile.tx_geometry();
        const double max_db = 10.0 * std::log10(static_cast<double>(geom.antenna_count()));
        for (double f : sweep) {
            const double gain = array_gain(geom, profile.target, f);
            table.rows.push_back({f, 10.0 * std::log10(std::max(gain, 1e-300)),
                                  array_gain_loss(geom, profile.target, f), max_db});
            table.annotations.emplace_back();
        }
        return table;
    }
    case ExperimentKind::GainVsQ:
        return run_tasks(
            cfg, sweep, {"q", "seed", "avg_gain_db", "iterations"},
            [&](double q, arma::uword seed) {
                arma::uword iterations = 0;
                const double gain = dsfttd_average_gain_db(
                    profile, static_cast<arma::uword>(q), seed, &iterations);
                TaskResult out;
                out.rows.push_back({q, static_cast<double>(seed), gain,
                                    static_cast<double>(iterations)});
                out.annotations.emplace_back();
                return out;
            },
            true);
    case ExperimentKind::SeVsQ:
    case ExperimentKind::EeVsQ:
        return run_tasks(
            cfg, sweep, pipeline_columns("q"),
            [&](double q, arma::uword seed) {
                SystemProfile p = profile;
                p.fttd_per_chain = static_cast<arma::uword>(q);
                return pipeline_rows(p, q, seed, 1.0);
            },
            true);
    case ExperimentKind::SeVsPower:
    case ExperimentKind::EeVsPower:
        return run_tasks(
            cfg, sweep, pipeline_columns("power_dbm"),
            [&](double dbm, arma::uword seed) {
                SystemProfile p = profile;
                p.transmit_power_dbm = dbm;
                return pipeline_rows(p, dbm, seed, 1.0);
            },
            true);
    case ExperimentKind::SeVsAntennas:
    case ExperimentKind::EeVsAntennas:
        return run_tasks(
            cfg, sweep, pipeline_columns("upa_side"),
            [&](double side, arma::uword seed) {
                SystemProfile p = profile;
                p.tx_side = static_cast<arma::uword>(side);
                p.rx_side = static_cast<arma::uword>(side);
                return pipeline_rows(p, side, seed, 1.0);
            },
            true);
    case ExperimentKind::SeVsBandwidth:
        return run_tasks(
            cfg, sweep, pipeline_columns("bandwidth_hz"),
            [&](double bandwidth, arma::uword seed) {
                SystemProfile p = profile;
                // Constant transmit power per GHz keeps the SNR comparable.
                const double watts_per_hz =
                    profile.transmit_power_watts() / profile.bandwidth;
                p.bandwidth = bandwidth;
                p.transmit_power_dbm =
                    10.0 * std::log10(watts_per_hz * bandwidth * 1e3);
                return pipeline_rows(p, bandwidth, seed, 1.0);
            },
            true);
    case ExperimentKind::SeVsCsi:
        return run_tasks(
            cfg, sweep, pipeline_columns("xi"),
            [&](double xi, arma::uword seed) { return pipeline_rows(profile, xi, seed, xi); },
            true);
    case ExperimentKind::ConvergenceTrace:
        return run_tasks(
            cfg, sweep, {"placeholder", "seed", "iteration", "objective"},
            [&](double, arma::uword seed) {
                const PipelineResult r = run_pipeline(profile, seed, 1.0);
                TaskResult out;
                for (size_t k = 0; k < r.objective_trace.size(); ++k) {
                    out.rows.push_back({0.0, static_cast<double>(seed),
                                        static_cast<double>(k), r.objective_trace[k]});
                    out.annotations.push_back(r.degenerate ? "degenerate" : "");
                }
                out.degenerate = r.degenerate;
                return out;
            },
            false);
    }
    throw std::logic_error("unreachable");
}

std::string ResultTable::to_csv() const {
    std::ostringstream out;
    for (size_t c = 0; c < columns.size(); ++c)
        out << (c ? "," : "") << columns[c];
    out << ",annotation\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c)
            out << (c ? "," : "") << format_cell(rows[r][c]);
        out << "," << (r < annotations.size() ? annotations[r] : "") << "\n";
    }
    return out.str();
}

void write_results(const ExperimentConfig& cfg, const ResultTable& table) {
    const std::string csv = table.to_csv();
    if (cfg.output_path.empty())
        throw std::invalid_argument("write_results: empty output path");
    std::ofstream out(cfg.output_path);
    if (!out)
        throw std::runtime_error("write_results: cannot open " + cfg.output_path);
    out << csv;

    nlohmann::json manifest;
    manifest["experiment"] = experiment_kind_to_string(cfg.kind);
    manifest["library_version"] = kLibraryVersion;
    manifest["seeds"] = std::vector<arma::uword>(cfg.seeds.begin(), cfg.seeds.end());
    manifest["threads"] = cfg.thread_count;
    manifest["strict"] = cfg.strict;
    manifest["profile"] = {
        {"name", cfg.profile.name},
        {"center_frequency_hz", cfg.profile.center_frequency},
        {"bandwidth_hz", cfg.profile.bandwidth},
        {"carrier_count", cfg.profile.carrier_count},
        {"tx_side", cfg.profile.tx_side},
        {"rx_side", cfg.profile.rx_side},
        {"chain_count", cfg.profile.chain_count},
        {"stream_count", cfg.profile.stream_count},
        {"fttd_per_chain", cfg.profile.fttd_per_chain},
        {"transmit_power_dbm", cfg.profile.transmit_power_dbm},
        {"distance_m", cfg.profile.distance},
        {"noise_figure_db", cfg.profile.noise_figure_db},
        {"path_count", cfg.profile.path_count},
        {"target_azimuth_deg", cfg.profile.target.azimuth * 180.0 / arma::datum::pi},
        {"target_elevation_deg", cfg.profile.target.elevation * 180.0 / arma::datum::pi},
    };
    if (!cfg.sweep.empty())
        manifest["sweep"] = cfg.sweep;
    std::ofstream mf(cfg.output_path + ".manifest.json");
    mf << manifest.dump(2) << "\n";
}

} // namespace dsfttd
