// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/array_geometry.hpp"

#include <stdexcept>

namespace dsfttd {

UpaGeometry::UpaGeometry(arma::uword l, arma::uword w, double d, double f_c)
    : rows_l(l), cols_w(w), spacing(d), center_frequency(f_c) {
    if (l < 1 || w < 1)
        throw std::invalid_argument("UpaGeometry: L and W must be >= 1");
    if (d <= 0.0)
        throw std::invalid_argument("UpaGeometry: spacing must be positive");
    if (f_c <= 0.0)
        throw std::invalid_argument("UpaGeometry: center frequency must be positive");
}

UpaGeometry UpaGeometry::square(arma::uword side, double f_c) {
    return UpaGeometry(side, side, kSpeedOfLight / f_c, f_c);
}

FrequencyGrid frequency_grid(double f_c, double bandwidth, arma::uword carrier_count) {
    if (carrier_count < 2)
        throw std::invalid_argument("frequency_grid: need at least 2 carriers");
    if (bandwidth <= 0.0)
        throw std::invalid_argument("frequency_grid: bandwidth must be positive");

    FrequencyGrid grid;
    grid.center = f_c;
    grid.bandwidth = bandwidth;
    grid.carriers.resize(carrier_count);
    const double m_count = static_cast<double>(carrier_count);
    for (arma::uword m = 1; m <= carrier_count; ++m)
        grid.carriers[m - 1] =
            f_c + bandwidth / (m_count - 1.0) * (static_cast<double>(m) - (m_count + 1.0) / 2.0);
    return grid;
}

double SectorAntenna::gain_g0() const {
    const double two_pi = 2.0 * arma::datum::pi;
    const double az = std::min(azimuth_beamwidth, two_pi);
    const double el = std::min(elevation_beamwidth, two_pi);
    const double solid = std::min(az * el, 4.0 * arma::datum::pi);
    return 4.0 * arma::datum::pi / solid;
}

double sector_gain(const SectorAntenna& ant, const Direction& dir) {
    // Boresight at (phi = 0, theta = pi/2); the sector is closed.
    const double az_half = ant.azimuth_beamwidth / 2.0;
    const double el_half = ant.elevation_beamwidth / 2.0;
    const double el_off = dir.elevation - arma::datum::pi / 2.0;
    if (std::abs(dir.azimuth) <= az_half && std::abs(el_off) <= el_half)
        return std::sqrt(ant.gain_g0());
    return 0.0;
}

double effective_area(const SectorAntenna& ant, double f_c) {
    if (f_c <= 0.0)
        throw std::invalid_argument("effective_area: f_c must be positive");
    const double lambda_c = kSpeedOfLight / f_c;
    return lambda_c * lambda_c * ant.gain_g0() / (4.0 * arma::datum::pi);
}

arma::cx_vec steering_vector(const UpaGeometry& geom, double f, const Direction& dir) {
    if (f <= 0.0)
        throw std::invalid_argument("steering_vector: frequency must be positive");

    const double k = 2.0 * arma::datum::pi * f / kSpeedOfLight * geom.spacing;
    const double az_phase = k * std::sin(dir.azimuth) * std::sin(dir.elevation);
    const double el_phase = k * std::cos(dir.elevation);

    arma::cx_vec azimuth_factor(geom.rows_l);
    for (arma::uword a = 0; a < geom.rows_l; ++a)
        azimuth_factor(a) = std::polar(1.0, az_phase * static_cast<double>(a));
    arma::cx_vec elevation_factor(geom.cols_w);
    for (arma::uword b = 0; b < geom.cols_w; ++b)
        elevation_factor(b) = std::polar(1.0, el_phase * static_cast<double>(b));

    return arma::kron(azimuth_factor, elevation_factor);
}

} // namespace dsfttd
