// SPDX-License-Identifier: Apache-2.0
//
// Uniform planar array geometry, frequency grids, steering vectors, and the
// sector antenna-gain model.

#pragma once

#include <armadillo>
#include <vector>

namespace dsfttd {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Planar array on the yz-plane, L elements along y and W along z,
/// antennas ordered row-major over (a, b) with a in [0, L) and b in [0, W),
/// matching the Kronecker order azimuth (x) elevation.
struct UpaGeometry {
    arma::uword rows_l = 1;     // antennas along y
    arma::uword cols_w = 1;     // antennas along z
    double spacing = 0.0;       // meters
    double center_frequency = 0.0; // Hz

    UpaGeometry() = default;
    UpaGeometry(arma::uword l, arma::uword w, double d, double f_c);

    arma::uword antenna_count() const { return rows_l * cols_w; }
    double wavelength() const { return kSpeedOfLight / center_frequency; }

    /// Square UPA with the default spacing d = lambda_c.
    static UpaGeometry square(arma::uword side, double f_c);
};

/// Symmetric carrier grid f_m = f_c + B/(M-1) * (m - (M+1)/2), m = 1..M.
struct FrequencyGrid {
    double center = 0.0;    // Hz
    double bandwidth = 0.0; // Hz
    std::vector<double> carriers;

    arma::uword carrier_count() const { return carriers.size(); }
};

FrequencyGrid frequency_grid(double f_c, double bandwidth, arma::uword carrier_count);

/// Azimuth phi in [-pi, pi], elevation theta in [0, pi], radians.
struct Direction {
    double azimuth = 0.0;
    double elevation = 0.0;
};

inline Direction direction_deg(double az_deg, double el_deg) {
    return {az_deg * arma::datum::pi / 180.0, el_deg * arma::datum::pi / 180.0};
}

/// Sector antenna: flat gain sqrt(G0) inside the beamwidth box around the
/// boresight (azimuth 0, elevation pi/2), zero outside. Boundary counts as
/// inside. Beamwidths are clamped to 2*pi each and the product to the full
/// sphere 4*pi, so the omnidirectional limit gives G0 = 1.
struct SectorAntenna {
    double azimuth_beamwidth = 2.0 * arma::datum::pi;
    double elevation_beamwidth = 2.0 * arma::datum::pi;

    double gain_g0() const;
};

/// Amplitude gain of the sector model: sqrt(G0) in-sector, else 0.
double sector_gain(const SectorAntenna& ant, const Direction& dir);

/// Effective aperture lambda_c^2 * G0 / (4*pi).
double effective_area(const SectorAntenna& ant, double f_c);

/// UPA steering vector at frequency f toward dir; element (a, b) equals
/// exp(j*2*pi*f/c * d * (a*sin(phi)*sin(theta) + b*cos(theta))), laid out as
/// the Kronecker product of the length-L azimuth factor with the length-W
/// elevation factor.
arma::cx_vec steering_vector(const UpaGeometry& geom, double f, const Direction& dir);

} // namespace dsfttd
