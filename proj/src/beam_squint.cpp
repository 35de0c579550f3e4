// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/beam_squint.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace dsfttd {

namespace {

// sin(pi*d*N*psi) / sin(pi*d*psi) with the limit N at the removable pole.
double dirichlet_ratio(double n, double d, double psi) {
    const double denom = std::sin(arma::datum::pi * d * psi);
    if (std::abs(denom) < 1e-12)
        return n;
    return std::sin(arma::datum::pi * d * n * psi) / denom;
}

} // namespace

arma::cx_vec narrowband_weights(const UpaGeometry& geom, const Direction& target) {
    return steering_vector(geom, geom.center_frequency, target);
}

arma::cx_vec ideal_ttd_weights(const UpaGeometry& geom, const Direction& target, double f_m) {
    return steering_vector(geom, f_m, target);
}

Direction squinted_direction(const Direction& target, double f_c, double f_m) {
    const double ratio = f_c / f_m;
    const double cos_arg = ratio * std::cos(target.elevation);
    if (cos_arg < -1.0 || cos_arg > 1.0) {
        std::ostringstream msg;
        msg << "squinted_direction: arccos argument " << cos_arg << " outside [-1, 1]";
        throw std::domain_error(msg.str());
    }
    const double theta_sq = std::acos(cos_arg);

    const double sin_theta_sq = std::sin(theta_sq);
    double sin_arg;
    if (sin_theta_sq == 0.0) {
        // Beam squinted onto the array axis; azimuth is degenerate there.
        sin_arg = 0.0;
    } else {
        sin_arg = ratio * std::sin(target.azimuth) * std::sin(target.elevation) / sin_theta_sq;
    }
    if (sin_arg < -1.0 || sin_arg > 1.0) {
        std::ostringstream msg;
        msg << "squinted_direction: arcsin argument " << sin_arg << " outside [-1, 1]";
        throw std::domain_error(msg.str());
    }
    return Direction{std::asin(sin_arg), theta_sq};
}

double array_gain(const UpaGeometry& geom, const Direction& target, double f_m) {
    const double delta = (f_m - geom.center_frequency) / kSpeedOfLight;
    const double psi_a = delta * std::sin(target.azimuth) * std::sin(target.elevation);
    const double psi_e = delta * std::cos(target.elevation);
    const double l = static_cast<double>(geom.rows_l);
    const double w = static_cast<double>(geom.cols_w);
    const double num =
        dirichlet_ratio(l, geom.spacing, psi_a) * dirichlet_ratio(w, geom.spacing, psi_e);
    return num * num / (l * w);
}

double array_gain_loss(const UpaGeometry& geom, const Direction& target, double f_m) {
    const double gain = array_gain(geom, target, f_m);
    const double n = static_cast<double>(geom.antenna_count());
    if (gain <= 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(n) - 10.0 * std::log10(gain);
}

SquintReport squint_report(const UpaGeometry& geom, const Direction& target, double f_m) {
    SquintReport report;
    report.frequency = f_m;
    report.squinted_direction = squinted_direction(target, geom.center_frequency, f_m);
    report.array_gain = array_gain(geom, target, f_m);
    report.gain_loss_db = array_gain_loss(geom, target, f_m);
    return report;
}

double average_gain_db(const std::vector<double>& linear_gains) {
    if (linear_gains.empty())
        throw std::invalid_argument("average_gain_db: empty gain list");
    double acc = 0.0;
    for (double g : linear_gains) {
        if (g <= 0.0)
            return -std::numeric_limits<double>::infinity();
        acc += 10.0 * std::log10(g);
    }
    return acc / static_cast<double>(linear_gains.size());
}

} // namespace dsfttd
