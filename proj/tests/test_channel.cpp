// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/channel.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dsfttd;

namespace {

ChannelSet small_channel(arma::uword seed, arma::uword n_paths = 3) {
    const UpaGeometry tx = UpaGeometry::square(4, 300e9);
    const UpaGeometry rx = UpaGeometry::square(4, 300e9);
    const FrequencyGrid grid = frequency_grid(300e9, 50e9, 8);
    const SectorAntenna ant{2.0 * arma::datum::pi / 3.0, arma::datum::pi / 4.0};
    return generate_channel(tx, rx, grid, ant, n_paths, seed);
}

// Grid-search water-filling oracle: scan the water level directly.
arma::vec water_fill_oracle(const arma::vec& gains, double budget) {
    double lo = 0.0, hi = budget + 1.0 / gains.min();
    for (int it = 0; it < 200; ++it) {
        const double mu = 0.5 * (lo + hi);
        double used = 0.0;
        for (double g : gains) used += std::max(0.0, mu - 1.0 / g);
        (used < budget ? lo : hi) = mu;
    }
    const double mu = 0.5 * (lo + hi);
    arma::vec p(gains.n_elem);
    for (arma::uword i = 0; i < gains.n_elem; ++i) p(i) = std::max(0.0, mu - 1.0 / gains(i));
    return p;
}

} // namespace

TEST_CASE("channel generation basics") {
    const ChannelSet ch = small_channel(5);
    REQUIRE(ch.carrier_count() == 8);
    REQUIRE(ch.paths.size() == 3);
    for (const arma::cx_mat& h : ch.matrices) {
        REQUIRE(h.n_rows == 16);
        REQUIRE(h.n_cols == 16);
        CHECK(arma::norm(h, "fro") > 0.0);
    }

    SUBCASE("deterministic per seed") {
        const ChannelSet again = small_channel(5);
        for (arma::uword m = 0; m < 8; ++m)
            CHECK(arma::norm(ch.matrices[m] - again.matrices[m], "fro") == 0.0);
        const ChannelSet other = small_channel(6);
        double diff = 0.0;
        for (arma::uword m = 0; m < 8; ++m)
            diff += arma::norm(ch.matrices[m] - other.matrices[m], "fro");
        CHECK(diff > 0.0);
    }

    SUBCASE("line-of-sight path dominates and has free-space amplitude") {
        const double los = std::abs(ch.paths[0].gain);
        CHECK(los == doctest::Approx(ch.tx_geometry.wavelength() /
                                     (4.0 * arma::datum::pi * 50.0)).epsilon(1e-12));
        for (size_t n = 1; n < ch.paths.size(); ++n) {
            const double ratio_db = 20.0 * std::log10(los / std::abs(ch.paths[n].gain));
            CHECK(ratio_db >= 10.0 - 1e-9);
            CHECK(ratio_db <= 20.0 + 1e-9);
        }
    }

    SUBCASE("path delays inside [0, 20 ns] and directions inside the sector") {
        for (const PathSpec& p : ch.paths) {
            CHECK(p.delay >= 0.0);
            CHECK(p.delay <= 20e-9);
            CHECK(std::abs(p.departure.azimuth) <= arma::datum::pi / 3.0 + 1e-12);
            CHECK(std::abs(p.departure.elevation - arma::datum::pi / 2.0) <=
                  arma::datum::pi / 8.0 + 1e-12);
        }
    }

    SUBCASE("matrices match the explicit path-sum reconstruction") {
        const std::vector<arma::cx_mat> rebuilt = rebuild_matrices(ch);
        for (arma::uword m = 0; m < 8; ++m)
            CHECK(arma::norm(ch.matrices[m] - rebuilt[m], "fro") <
                  1e-12 * arma::norm(ch.matrices[m], "fro"));
    }

    SUBCASE("path count validation") {
        const UpaGeometry g = UpaGeometry::square(2, 300e9);
        const FrequencyGrid grid = frequency_grid(300e9, 50e9, 2);
        CHECK_THROWS_AS(generate_channel(g, g, grid, SectorAntenna{}, 0, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(generate_channel(g, g, grid, SectorAntenna{}, 6, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("CSI perturbation preserves scale and interpolates") {
    const ChannelSet ch = small_channel(9);

    SUBCASE("xi = 1 reproduces the true channel") {
        const ChannelSet same = perturb_csi(ch, 1.0, 123);
        for (arma::uword m = 0; m < ch.carrier_count(); ++m)
            CHECK(arma::norm(same.matrices[m] - ch.matrices[m], "fro") <
                  1e-14 * arma::norm(ch.matrices[m], "fro"));
    }

    SUBCASE("error term is scaled to the true channel norm") {
        const ChannelSet hat = perturb_csi(ch, 0.7, 123);
        CHECK(hat.perturbed);
        for (arma::uword m = 0; m < ch.carrier_count(); ++m) {
            const arma::cx_mat err = hat.matrices[m] - 0.7 * ch.matrices[m];
            CHECK(arma::norm(err, "fro") ==
                  doctest::Approx(std::sqrt(1.0 - 0.49) * arma::norm(ch.matrices[m], "fro"))
                      .epsilon(1e-10));
        }
    }

    SUBCASE("xi validation") {
        CHECK_THROWS_AS(perturb_csi(ch, -0.1, 1), std::invalid_argument);
        CHECK_THROWS_AS(perturb_csi(ch, 1.1, 1), std::invalid_argument);
    }
}

TEST_CASE("water-filling") {
    SUBCASE("single channel takes the whole budget") {
        const arma::vec p = water_fill(arma::vec{2.0}, 3.0);
        CHECK(p(0) == doctest::Approx(3.0));
    }
    SUBCASE("equal gains split evenly") {
        const arma::vec p = water_fill(arma::vec{1.0, 1.0, 1.0, 1.0}, 2.0);
        for (double v : p) CHECK(v == doctest::Approx(0.5));
    }
    SUBCASE("weak channel is shut off") {
        const arma::vec p = water_fill(arma::vec{10.0, 1e-6}, 1.0);
        CHECK(p(0) == doctest::Approx(1.0));
        CHECK(p(1) == doctest::Approx(0.0));
    }
    SUBCASE("matches the level-scan oracle on random instances") {
        arma::arma_rng::set_seed(42);
        for (int trial = 0; trial < 30; ++trial) {
            const arma::uword n = 1 + trial % 12;
            const arma::vec gains = arma::randu<arma::vec>(n) * 10.0 + 1e-3;
            const double budget = 0.1 + 5.0 * arma::randu<double>();
            const arma::vec p = water_fill(gains, budget);
            const arma::vec oracle = water_fill_oracle(gains, budget);
            CHECK(arma::accu(p) == doctest::Approx(budget).epsilon(1e-10));
            CHECK(arma::abs(p - oracle).max() < 1e-6);
            CHECK(p.min() >= 0.0);
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(water_fill(arma::vec{}, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(water_fill(arma::vec{1.0, -2.0}, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(water_fill(arma::vec{1.0}, -1.0), std::invalid_argument);
    }
}

TEST_CASE("optimal precoders meet the power budget and diagonalize the channel") {
    const ChannelSet ch = small_channel(3);
    const double rho = 0.1;
    const double sigma = noise_power(50e9, 8);
    const OptimalPrecoderSet opt = optimal_precoders(ch, 2, rho, sigma);
    REQUIRE(opt.precoders.size() == 8);

    double total = 0.0;
    for (const arma::cx_mat& p : opt.precoders) {
        REQUIRE(p.n_rows == 16);
        REQUIRE(p.n_cols == 2);
        total += std::pow(arma::norm(p, "fro"), 2);
    }
    CHECK(total == doctest::Approx(rho).epsilon(1e-9));

    for (arma::uword m = 0; m < 8; ++m) {
        // Effective channel H*P has orthogonal columns (diagonal Gram).
        const arma::cx_mat eff = ch.matrices[m] * opt.precoders[m];
        const arma::cx_mat gram = eff.t() * eff;
        const double off = arma::norm(gram - arma::diagmat(gram.diag()), "fro");
        CHECK(off < 1e-9 * std::max(1.0, arma::norm(gram, "fro")));
        CHECK(arma::norm(opt.precoders[m].col(0)) ==
              doctest::Approx(opt.allocations[m](0)).epsilon(1e-10));
    }
}

TEST_CASE("noise power") {
    // -174 dBm/Hz over 50 GHz / 50 carriers = 1 GHz, plus a 10 dB noise figure.
    const double expect = std::pow(10.0, (-174.0 + 10.0 * std::log10(1e9) + 10.0 - 30.0) / 10.0);
    CHECK(noise_power(50e9, 50) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(noise_power(50e9, 50, 0.0) == doctest::Approx(expect / 10.0).epsilon(1e-12));
}

TEST_CASE("channel JSON round trip") {
    const ChannelSet ch = small_channel(17);
    const std::string text = channel_to_json(ch);
    const ChannelSet back = channel_from_json(text);
    REQUIRE(back.paths.size() == ch.paths.size());
    REQUIRE(back.carrier_count() == ch.carrier_count());
    for (arma::uword m = 0; m < ch.carrier_count(); ++m)
        CHECK(arma::norm(back.matrices[m] - ch.matrices[m], "fro") <
              1e-12 * arma::norm(ch.matrices[m], "fro"));

    const ChannelSet hat = perturb_csi(ch, 0.8, 5);
    CHECK_THROWS_AS(channel_to_json(hat), std::logic_error);
}
