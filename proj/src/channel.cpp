// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/channel.hpp"

#include <json.hpp>

#include <random>
#include <stdexcept>

namespace dsfttd {

namespace {

Direction draw_in_sector(std::mt19937_64& rng, const SectorAntenna& antenna) {
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    Direction dir;
    dir.azimuth = unit(rng) * antenna.azimuth_beamwidth;
    dir.elevation = arma::datum::pi / 2.0 + unit(rng) * antenna.elevation_beamwidth;
    return dir;
}

} // namespace

ChannelSet generate_channel(const UpaGeometry& tx, const UpaGeometry& rx,
                            const FrequencyGrid& grid, const SectorAntenna& antenna,
                            arma::uword n_paths, arma::uword seed, double distance) {
    if (n_paths < 1 || n_paths > 5)
        throw std::invalid_argument("generate_channel: path count must be in [1, 5]");

    ChannelSet ch;
    ch.tx_geometry = tx;
    ch.rx_geometry = rx;
    ch.grid = grid;
    ch.antenna = antenna;
    ch.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> delay_dist(0.0, 20e-9);
    std::uniform_real_distribution<double> excess_loss_db(10.0, 20.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * arma::datum::pi);

    const double lambda_c = kSpeedOfLight / grid.center;
    const double los_amplitude = lambda_c / (4.0 * arma::datum::pi * distance);

    for (arma::uword n = 0; n < n_paths; ++n) {
        PathSpec path;
        path.departure = draw_in_sector(rng, antenna);
        path.arrival = draw_in_sector(rng, antenna);
        path.delay = delay_dist(rng);
        double amp = los_amplitude;
        if (n > 0)
            amp *= std::pow(10.0, -excess_loss_db(rng) / 20.0);
        path.gain = std::polar(amp, phase(rng));
        ch.paths.push_back(path);
    }

    ch.matrices = rebuild_matrices(ch);
    return ch;
}

std::vector<arma::cx_mat> rebuild_matrices(const ChannelSet& ch) {
    std::vector<arma::cx_mat> out;
    out.reserve(ch.grid.carrier_count());
    for (double f_m : ch.grid.carriers) {
        arma::cx_mat h(ch.rx_geometry.antenna_count(), ch.tx_geometry.antenna_count(),
                       arma::fill::zeros);
        for (const PathSpec& path : ch.paths) {
            const double g_t = sector_gain(ch.antenna, path.departure);
            const double g_r = sector_gain(ch.antenna, path.arrival);
            if (g_t == 0.0 || g_r == 0.0)
                continue;
            const std::complex<double> alpha_m =
                path.gain * std::polar(1.0, -2.0 * arma::datum::pi * f_m * path.delay);
            const arma::cx_vec a_t = steering_vector(ch.tx_geometry, f_m, path.departure);
            const arma::cx_vec a_r = steering_vector(ch.rx_geometry, f_m, path.arrival);
            h += (alpha_m * g_t * g_r) * (a_r * a_t.t());
        }
        out.push_back(std::move(h));
    }
    return out;
}

ChannelSet perturb_csi(const ChannelSet& ch, double xi, arma::uword seed) {
    if (xi < 0.0 || xi > 1.0)
        throw std::invalid_argument("perturb_csi: xi must lie in [0, 1]");

    ChannelSet out = ch;
    out.perturbed = true;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));

    for (arma::cx_mat& h : out.matrices) {
        arma::cx_mat error(h.n_rows, h.n_cols);
        for (arma::uword j = 0; j < h.n_cols; ++j)
            for (arma::uword i = 0; i < h.n_rows; ++i)
                error(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        const double err_norm = arma::norm(error, "fro");
        const double scale = err_norm > 0.0 ? arma::norm(h, "fro") / err_norm : 0.0;
        h = xi * h + std::sqrt(1.0 - xi * xi) * scale * error;
    }
    return out;
}

arma::vec water_fill(const arma::vec& gains, double budget) {
    if (gains.empty())
        throw std::invalid_argument("water_fill: empty gain vector");
    if (gains.min() < 0.0)
        throw std::invalid_argument("water_fill: gains must be non-negative");
    if (budget <= 0.0)
        throw std::invalid_argument("water_fill: budget must be positive");
    if (gains.max() <= 0.0)
        throw std::invalid_argument("water_fill: all gains are zero");
    arma::vec power(gains.n_elem, arma::fill::zeros);

    // Sort by inverse gain; admit subchannels while the water level stays
    // above their floor 1/g.
    arma::uvec order = arma::sort_index(gains, "descend");
    arma::vec floors(gains.n_elem);
    arma::uword usable = 0;
    for (; usable < gains.n_elem; ++usable) {
        const double g = gains(order(usable));
        if (g <= 0.0)
            break;
        floors(usable) = 1.0 / g;
    }

    arma::uword active = usable;
    double level = 0.0;
    while (active > 0) {
        double floor_sum = 0.0;
        for (arma::uword k = 0; k < active; ++k)
            floor_sum += floors(k);
        level = (budget + floor_sum) / static_cast<double>(active);
        if (level >= floors(active - 1))
            break;
        --active;
    }
    for (arma::uword k = 0; k < active; ++k)
        power(order(k)) = level - floors(k);
    return power;
}

OptimalPrecoderSet optimal_precoders(const ChannelSet& ch, arma::uword stream_count,
                                     double total_power, double noise) {
    const arma::uword m_count = ch.carrier_count();
    if (m_count == 0)
        throw std::invalid_argument("optimal_precoders: empty channel set");
    if (total_power <= 0.0)
        throw std::invalid_argument("optimal_precoders: total power must be positive");
    const arma::uword max_rank =
        std::min(ch.matrices[0].n_rows, ch.matrices[0].n_cols);
    if (stream_count > max_rank)
        throw std::invalid_argument("optimal_precoders: N_s exceeds min(N_t, N_r)");

    std::vector<arma::cx_mat> right_vectors(m_count);
    arma::vec gains(m_count * stream_count, arma::fill::zeros);
    for (arma::uword m = 0; m < m_count; ++m) {
        arma::cx_mat u, v;
        arma::vec s;
        if (!arma::svd_econ(u, s, v, ch.matrices[m]))
            throw std::runtime_error("optimal_precoders: SVD failed");
        right_vectors[m] = v.cols(0, stream_count - 1);
        for (arma::uword k = 0; k < stream_count; ++k)
            gains(m * stream_count + k) = s(k) * s(k) / noise;
    }

    const arma::vec power = water_fill(gains, total_power);

    OptimalPrecoderSet set;
    set.total_power = total_power;
    for (arma::uword m = 0; m < m_count; ++m) {
        arma::vec alloc(stream_count);
        for (arma::uword k = 0; k < stream_count; ++k)
            alloc(k) = std::sqrt(power(m * stream_count + k));
        set.allocations.push_back(alloc);
        set.precoders.push_back(right_vectors[m] * arma::diagmat(arma::cx_vec(
                                    alloc, arma::vec(stream_count, arma::fill::zeros))));
    }
    return set;
}

double noise_power(double bandwidth, arma::uword carrier_count, double noise_figure_db) {
    const double density_dbm_hz = -174.0;
    const double per_carrier_hz = bandwidth / static_cast<double>(carrier_count);
    const double dbm = density_dbm_hz + 10.0 * std::log10(per_carrier_hz) + noise_figure_db;
    return std::pow(10.0, dbm / 10.0) * 1e-3;
}

namespace {

using nlohmann::json;

json direction_to_json(const Direction& d) {
    return json{{"azimuth_rad", d.azimuth}, {"elevation_rad", d.elevation}};
}

Direction direction_from_json(const json& j) {
    return Direction{j.at("azimuth_rad").get<double>(), j.at("elevation_rad").get<double>()};
}

json geometry_to_json(const UpaGeometry& g) {
    return json{{"rows", g.rows_l},
                {"cols", g.cols_w},
                {"spacing_m", g.spacing},
                {"center_frequency_hz", g.center_frequency}};
}

UpaGeometry geometry_from_json(const json& j) {
    return UpaGeometry(j.at("rows").get<arma::uword>(), j.at("cols").get<arma::uword>(),
                       j.at("spacing_m").get<double>(),
                       j.at("center_frequency_hz").get<double>());
}

} // namespace

std::string channel_to_json(const ChannelSet& ch) {
    if (ch.perturbed)
        throw std::logic_error(
            "channel_to_json: perturbed channels are not replayable from their paths");
    json j;
    j["tx_geometry"] = geometry_to_json(ch.tx_geometry);
    j["rx_geometry"] = geometry_to_json(ch.rx_geometry);
    j["grid"] = {{"center_hz", ch.grid.center},
                 {"bandwidth_hz", ch.grid.bandwidth},
                 {"carrier_count", ch.grid.carrier_count()}};
    j["antenna"] = {{"azimuth_beamwidth_rad", ch.antenna.azimuth_beamwidth},
                    {"elevation_beamwidth_rad", ch.antenna.elevation_beamwidth}};
    j["seed"] = ch.seed;
    j["perturbed"] = ch.perturbed;
    j["paths"] = json::array();
    for (const PathSpec& p : ch.paths) {
        j["paths"].push_back({{"gain_re", p.gain.real()},
                              {"gain_im", p.gain.imag()},
                              {"departure", direction_to_json(p.departure)},
                              {"arrival", direction_to_json(p.arrival)},
                              {"delay_s", p.delay}});
    }
    return j.dump(2);
}

ChannelSet channel_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.value("perturbed", false))
        throw std::invalid_argument("channel_from_json: perturbed sets are not replayable");

    ChannelSet ch;
    ch.tx_geometry = geometry_from_json(j.at("tx_geometry"));
    ch.rx_geometry = geometry_from_json(j.at("rx_geometry"));
    ch.grid = frequency_grid(j.at("grid").at("center_hz").get<double>(),
                             j.at("grid").at("bandwidth_hz").get<double>(),
                             j.at("grid").at("carrier_count").get<arma::uword>());
    ch.antenna.azimuth_beamwidth = j.at("antenna").at("azimuth_beamwidth_rad").get<double>();
    ch.antenna.elevation_beamwidth =
        j.at("antenna").at("elevation_beamwidth_rad").get<double>();
    ch.seed = j.at("seed").get<arma::uword>();
    for (const json& p : j.at("paths")) {
        PathSpec path;
        path.gain = {p.at("gain_re").get<double>(), p.at("gain_im").get<double>()};
        path.departure = direction_from_json(p.at("departure"));
        path.arrival = direction_from_json(p.at("arrival"));
        path.delay = p.at("delay_s").get<double>();
        ch.paths.push_back(path);
    }
    ch.matrices = rebuild_matrices(ch);
    return ch;
}

} // namespace dsfttd
