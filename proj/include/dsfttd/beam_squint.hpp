// SPDX-License-Identifier: Apache-2.0
//
// Closed-form beam-squint analysis: squinted steering angles, per-frequency
// array gain, and array gain loss for frequency-flat (narrowband) weights.

#pragma once

#include "dsfttd/array_geometry.hpp"

namespace dsfttd {

struct SquintReport {
    double frequency = 0.0;       // Hz
    Direction squinted_direction; // where the beam actually points
    double array_gain = 0.0;      // linear, in [0, L*W]
    double gain_loss_db = 0.0;    // 10log10(LW) - 10log10(array_gain)
};

/// Phase-shifter weights designed at the center frequency:
/// the steering vector of the array at f_c toward the target.
arma::cx_vec narrowband_weights(const UpaGeometry& geom, const Direction& target);

/// Per-carrier matched weights of an ideal (fully adjustable) TTD front end;
/// achieves the maximal gain L*W at every frequency.
arma::cx_vec ideal_ttd_weights(const UpaGeometry& geom, const Direction& target, double f_m);

/// Direction the center-frequency beam actually points at frequency f_m.
/// Throws std::domain_error when the inverse-trig arguments leave [-1, 1].
Direction squinted_direction(const Direction& target, double f_c, double f_m);

/// Array gain at f_m for narrowband weights toward the target; Dirichlet
/// closed form with the 0/0 limits substituted.
double array_gain(const UpaGeometry& geom, const Direction& target, double f_m);

/// 10log10(LW) - 10log10(array_gain); +inf when the gain underflows to zero.
double array_gain_loss(const UpaGeometry& geom, const Direction& target, double f_m);

SquintReport squint_report(const UpaGeometry& geom, const Direction& target, double f_m);

/// Average of per-carrier gains, taken in the dB domain (mean of
/// 10log10(g_m)); carriers with zero gain propagate -inf.
double average_gain_db(const std::vector<double>& linear_gains);

} // namespace dsfttd
