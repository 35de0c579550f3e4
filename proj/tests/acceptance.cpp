// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks. Each test case prints one PASS/FAIL line so
// the suite doubles as a readable report:
//   acceptance <n> PASS|FAIL: <criterion>

#include "dsfttd/beam_squint.hpp"
#include "dsfttd/experiments.hpp"

#include <doctest.h>

#include <chrono>
#include <iostream>
#include <random>

using namespace dsfttd;

namespace {

void report(int number, bool ok, const std::string& what) {
    std::cout << "acceptance " << number << (ok ? " PASS: " : " FAIL: ") << what << std::endl;
    CHECK_MESSAGE(ok, "acceptance criterion ", number, ": ", what);
}

std::vector<arma::cx_mat> random_targets(arma::uword nt, arma::uword ns, arma::uword m,
                                         arma::uword seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<arma::cx_mat> out;
    for (arma::uword i = 0; i < m; ++i) {
        arma::cx_mat t(nt, ns);
        t.imbue([&]() { return std::complex<double>(gauss(rng), gauss(rng)); });
        out.push_back(t);
    }
    return out;
}

} // namespace

TEST_CASE("1: beam-squint loss curve") {
    const UpaGeometry geom = UpaGeometry::square(32, 300e9);
    const Direction target = direction_deg(20.0, 30.0);

    const double loss_center = array_gain_loss(geom, target, 300e9);
    const double loss_edge = array_gain_loss(geom, target, 275e9);

    // Pseudo-periodic lobes: the loss curve over the band has several interior
    // local maxima, not a single monotone ramp.
    int local_maxima = 0;
    std::vector<double> losses;
    for (int i = 0; i <= 200; ++i)
        losses.push_back(array_gain_loss(geom, target, 275e9 + 50e9 * i / 200.0));
    for (size_t i = 1; i + 1 < losses.size(); ++i)
        if (losses[i] > losses[i - 1] && losses[i] > losses[i + 1])
            ++local_maxima;

    const bool ok = std::abs(loss_center) <= 1e-9 &&
                    std::abs(loss_edge - 22.0) <= 1.0 && local_maxima >= 3;
    report(1, ok,
           "narrowband array-gain loss is 0 dB at 300 GHz, 22 +/- 1 dB at 275 GHz, "
           "with lobed structure (loss@275 = " + std::to_string(loss_edge) +
           " dB, interior maxima = " + std::to_string(local_maxima) + ")");
}

TEST_CASE("2: narrowband vs ideal-TTD average gain") {
    const UpaGeometry geom = UpaGeometry::square(32, 300e9);
    const Direction target = direction_deg(45.0, 30.0);
    const FrequencyGrid grid = frequency_grid(300e9, 50e9, 50);

    std::vector<double> nb_gains;
    bool ttd_ok = true;
    const double full_db = 10.0 * std::log10(1024.0);
    for (double f : grid.carriers) {
        nb_gains.push_back(array_gain(geom, target, f));
        const arma::cx_vec w = ideal_ttd_weights(geom, target, f);
        const arma::cx_vec a = steering_vector(geom, f, target);
        const double g_db = 10.0 * std::log10(std::norm(arma::cdot(w, a)) / 1024.0);
        ttd_ok = ttd_ok && std::abs(g_db - full_db) <= 0.01;
    }
    const double mean_db = average_gain_db(nb_gains);

    const bool ok = std::abs(mean_db - 9.8) <= 1.0 && ttd_ok;
    report(2, ok,
           "1024-antenna narrowband mean gain 9.8 +/- 1.0 dB and ideal-TTD 30.1 dB at "
           "every carrier (narrowband mean = " + std::to_string(mean_db) + " dB)");
}

TEST_CASE("3: average array gain versus delay-bank size") {
    const std::vector<arma::uword> q_values = {4, 8, 16, 32, 64, 128};
    const std::vector<double> reference_db = {12.6, 16.8, 21.3, 27.9, 29.0, 29.7};

    SystemProfile profile = SystemProfile::paper();
    bool ok = true;
    std::string detail = "gains(dB):";
    for (size_t i = 0; i < q_values.size(); ++i) {
        const double gain = dsfttd_average_gain_db(profile, q_values[i], 1);
        detail += " " + std::to_string(gain);
        if (std::abs(gain - reference_db[i]) > 1.5)
            ok = false;
    }

    // Reduced-scale trend: rising in Q overall. Adjacent delay grids do not
    // nest (uniform [0, tau_max] with different Q), so allow a 0.25 dB dip
    // between neighbors and require at least 5 dB total rise.
    SystemProfile desk = SystemProfile::desk();
    std::vector<double> desk_gains;
    for (arma::uword q : q_values)
        desk_gains.push_back(dsfttd_average_gain_db(desk, q, 1));
    bool monotone = desk_gains.back() - desk_gains.front() >= 5.0;
    for (size_t i = 1; i < desk_gains.size(); ++i)
        monotone = monotone && desk_gains[i] >= desk_gains[i - 1] - 0.25;
    ok = ok && monotone;
    report(3, ok,
           "mean gain vs Q in {4..128} matches 12.6/16.8/21.3/27.9/29.0/29.7 +/- 1.5 dB, "
           "reduced profile monotone (" + detail + ", monotone=" +
           (monotone ? "yes" : "no") + ")");
}

TEST_CASE("4: power-consumption formulas") {
    ArchitectureSpec spec;
    spec.antenna_count = 1024;
    spec.chain_count = 4;
    spec.fttd_per_chain = 32;
    spec.ttd_count = 128;
    spec.active_fttd = 128;

    spec.kind = Architecture::FcTtd;
    const double fc_ttd = analog_power(spec);
    spec.kind = Architecture::TtdAided;
    const double ttd_aided = analog_power(spec);
    spec.kind = Architecture::DsFttd;
    const double ds_full = analog_power(spec);
    spec.active_fttd = 64;
    const double ds_partial = analog_power(spec);

    const bool ok = std::abs(fc_ttd - 327.68) <= 0.01 &&
                    std::abs(ttd_aided - 182.27) <= 0.01 &&
                    ds_full <= 14.08 + 0.01 && std::abs(ds_full - 14.08) <= 0.01 &&
                    ds_partial < ds_full;
    report(4, ok,
           "analog power 327.68 W (fully connected TTD), 182.27 W (TTD-aided), "
           "<= 14.08 W (DS-FTTD) to 0.01 W");
}

TEST_CASE("5: solver monotonicity and convergence") {
    // 100 seeded reduced-scale problem instances: each seed drives a fresh
    // channel realization whose optimal precoders become the solver targets.
    const SystemProfile desk = SystemProfile::desk();

    bool monotone = true, converged = true;
    arma::uword worst_iterations = 0;
    for (arma::uword seed = 1; seed <= 100; ++seed) {
        const PipelineResult res = run_pipeline(desk, seed);
        for (size_t i = 1; i < res.objective_trace.size(); ++i)
            monotone = monotone && res.objective_trace[i] <= res.objective_trace[i - 1] + 1e-9;
        worst_iterations = std::max(worst_iterations, res.iterations);
        converged = converged && res.iterations <= 20;
    }

    // One full-scale pipeline run; fast convergence expected (about 8 rounds).
    const PipelineResult full = run_pipeline(SystemProfile::paper(), 1);
    const bool full_ok = full.iterations <= 20;

    const bool ok = monotone && converged && full_ok;
    report(5, ok,
           "objective trace non-increasing and <= 20 iterations on 100 reduced-scale "
           "instances (worst = " + std::to_string(worst_iterations) +
           "), full-scale run converges in " + std::to_string(full.iterations) +
           " iterations");
}

TEST_CASE("6: switch update matches exhaustive enumeration; planted recovery") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<arma::uword> pick_nt(2, 6), pick_m(2, 3);
    std::normal_distribution<double> gauss;

    bool enumeration_ok = true;
    for (arma::uword seed = 0; seed < 50 && enumeration_ok; ++seed) {
        const arma::uword nt = pick_nt(rng);
        const arma::uword lt = 1 + seed % 2;
        const arma::uword q = (lt == 1) ? 2 + seed % 7 : 2 + seed % 3; // L_t*Q <= 8
        const arma::uword m = pick_m(rng);
        const arma::uword ns = 1 + seed % lt;
        const FttdBank bank = build_delay_bank(146e-12, lt, q);
        const FrequencyGrid grid = frequency_grid(300e9, 50e9, m);
        std::vector<FttdMatrix> fttd;
        for (double f : grid.carriers)
            fttd.push_back(fttd_matrix(bank, f));
        const std::vector<arma::cx_mat> targets = random_targets(nt, ns, m, 7000 + seed);
        std::vector<arma::cx_mat> digital;
        for (arma::uword i = 0; i < m; ++i) {
            arma::cx_mat g(lt, ns);
            g.imbue([&]() { return std::complex<double>(gauss(rng), gauss(rng)); });
            digital.push_back(g);
        }

        const SwitchMatrix fast = update_switch(targets, fttd, digital);
        for (arma::uword i = 0; i < nt; ++i) {
            // Exhaustive per-row minimum of the true objective contribution.
            const arma::vec cost = switch_row_cost(i, targets, fttd, digital);
            double best = cost(0);
            for (arma::uword c = 1; c < cost.n_elem; ++c)
                best = std::min(best, cost(c));
            double direct_best = arma::datum::inf;
            for (arma::uword c = 0; c < bank.column_count(); ++c) {
                double value = 0.0;
                const arma::uword chain = c / q, delay = c % q;
                for (arma::uword mm = 0; mm < m; ++mm) {
                    const arma::cx_rowvec row = fttd[mm].block(delay) * digital[mm].row(chain);
                    value += std::pow(arma::norm(targets[mm].row(i) - row), 2);
                }
                direct_best = std::min(direct_best, value);
            }
            // Costs drop the constant ||P_i||^2 term; compare achieved values.
            double achieved = 0.0;
            const arma::uword chain = fast.chain_of(i, q), delay = fast.delay_of(i, q);
            for (arma::uword mm = 0; mm < m; ++mm) {
                const arma::cx_rowvec row = fttd[mm].block(delay) * digital[mm].row(chain);
                achieved += std::pow(arma::norm(targets[mm].row(i) - row), 2);
            }
            if (std::abs(achieved - direct_best) > 1e-9 ||
                std::abs(cost(fast.selection(i)) - best) > 1e-12)
                enumeration_ok = false;
        }
    }

    bool planted_ok = true;
    double worst_residual = 0.0;
    for (arma::uword seed = 1; seed <= 10; ++seed) {
        const arma::uword nt = 6, lt = 2, q = 3, m = 3, ns = 2;
        const FttdBank bank = build_delay_bank(146e-12, lt, q);
        const FrequencyGrid grid = frequency_grid(300e9, 50e9, m);
        const SwitchMatrix plant = random_switch(nt, lt * q, 800 + seed);
        std::vector<arma::cx_mat> plant_d;
        std::mt19937_64 prng(810 + seed);
        for (arma::uword i = 0; i < m; ++i) {
            arma::cx_mat g(lt, ns);
            g.imbue([&]() { return std::complex<double>(gauss(prng), gauss(prng)); });
            arma::cx_mat qm, rm;
            arma::qr_econ(qm, rm, g);
            plant_d.push_back(arma::cx_mat(qm.cols(0, ns - 1)));
        }
        std::vector<arma::cx_mat> targets;
        for (arma::uword i = 0; i < m; ++i)
            targets.push_back(
                composite_precoder(plant, fttd_matrix(bank, grid.carriers[i]), plant_d[i]));
        // Multi-start: one random start of an alternating-descent solver lands
        // in a local minimum roughly half the time on these tiny instances.
        double best = arma::datum::inf;
        for (arma::uword start = 1; start <= 10 && best >= 1e-6; ++start) {
            RdConfig cfg;
            cfg.seed = start;
            cfg.max_iterations = 100;
            cfg.relative_tolerance = 1e-12;
            best = std::min(best, rd_solve(targets, bank, grid, cfg).objective_trace.back());
        }
        worst_residual = std::max(worst_residual, best);
        planted_ok = planted_ok && best < 1e-6;
    }

    const bool ok = enumeration_ok && planted_ok;
    report(6, ok,
           "switch update equals exhaustive per-row enumeration on 50 small instances; "
           "planted solutions recovered below 1e-6 (worst residual = " +
           std::to_string(worst_residual) + ")");
}

TEST_CASE("7: spectral-efficiency ordering") {
    // Full 1024-antenna aperture (where squint is severe enough to separate the
    // architectures) with a reduced 16-carrier grid to bound the SVD cost.
    SystemProfile profile = SystemProfile::paper();
    profile.carrier_count = 16;
    bool ok = true;
    for (arma::uword seed = 1; seed <= 5; ++seed) {
        const PipelineResult r = run_pipeline(profile, seed);
        if (!(r.se_optimal >= r.se_dsfttd - 1e-9 && r.se_dsfttd >= r.se_narrowband_ps - 1e-9))
            ok = false;
    }
    report(7, ok,
           "SE(optimal) >= SE(DS-FTTD) >= SE(narrowband phase-shifter projection) for "
           "every seed (5 full-aperture seeds, 16 carriers)");
}

TEST_CASE("8: robustness to imperfect channel knowledge") {
    const SystemProfile desk = SystemProfile::desk();
    const std::vector<double> xis = {0.6, 0.8, 1.0};
    std::vector<double> mean_se(xis.size(), 0.0);
    const arma::uword seeds = 10;
    for (size_t x = 0; x < xis.size(); ++x) {
        for (arma::uword seed = 1; seed <= seeds; ++seed)
            mean_se[x] += run_pipeline(desk, seed, xis[x]).se_dsfttd;
        mean_se[x] /= static_cast<double>(seeds);
    }
    const double ratio = mean_se[0] / mean_se[2];
    const bool ok = mean_se[0] <= mean_se[1] + 1e-9 && mean_se[1] <= mean_se[2] + 1e-9 &&
                    ratio >= 0.70 && ratio <= 0.95;
    report(8, ok,
           "seed-averaged SE non-decreasing in CSI accuracy and SE(0.6)/SE(1.0) in "
           "[0.70, 0.95] (ratio = " + std::to_string(ratio) + ")");
}

TEST_CASE("9: per-iteration runtime scales linearly with antennas") {
    // Rectangular arrays give N_t in {128, 256, 512, 1024}.
    const std::vector<std::pair<arma::uword, arma::uword>> shapes = {
        {16, 8}, {16, 16}, {32, 16}, {32, 32}};
    const arma::uword lt = 4, q = 32, m = 16, ns = 4;
    const FrequencyGrid grid = frequency_grid(300e9, 50e9, m);

    std::vector<double> sizes, times;
    for (auto [l, w] : shapes) {
        const arma::uword nt = l * w;
        const UpaGeometry geom(l, w, kSpeedOfLight / 300e9, 300e9);
        const FttdBank bank = build_delay_bank(geom, lt, q);
        std::vector<FttdMatrix> fttd;
        for (double f : grid.carriers)
            fttd.push_back(fttd_matrix(bank, f));
        const std::vector<arma::cx_mat> targets = random_targets(nt, ns, m, nt);
        std::vector<arma::cx_mat> digital = update_digital(
            targets, random_switch(nt, lt * q, nt), fttd);

        // Best of five timed iterations (one switch + one digital update).
        double best = arma::datum::inf;
        for (int rep = 0; rep < 5; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const SwitchMatrix sw = update_switch(targets, fttd, digital);
            digital = update_digital(targets, sw, fttd);
            const auto stop = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(stop - start).count());
        }
        sizes.push_back(static_cast<double>(nt));
        times.push_back(best);
    }

    // Least-squares slope through the origin; every point within 1.5x of it.
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < sizes.size(); ++i) {
        num += times[i] * sizes[i];
        den += sizes[i] * sizes[i];
    }
    const double slope = num / den;
    double worst_ratio = 1.0;
    std::string detail = "ms/iter:";
    for (size_t i = 0; i < sizes.size(); ++i) {
        const double predicted = slope * sizes[i];
        worst_ratio = std::max({worst_ratio, times[i] / predicted, predicted / times[i]});
        detail += " " + std::to_string(times[i] * 1e3);
    }
    const bool ok = worst_ratio <= 1.5;
    report(9, ok,
           "per-iteration wall time over N_t in {128, 256, 512, 1024} within 1.5x of a "
           "linear fit (worst ratio = " + std::to_string(worst_ratio) + ", " + detail + ")");
}
