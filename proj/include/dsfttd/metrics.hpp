// SPDX-License-Identifier: Apache-2.0
//
// Spectral efficiency, per-architecture power consumption, and energy
// efficiency.

#pragma once

#include "dsfttd/ds_fttd.hpp"

#include <vector>

namespace dsfttd {

/// Per-device power draw, milliwatts. Defaults are the reference values
/// around 300 GHz.
struct DevicePowers {
    double pa = 60.0;       // power amplifier
    double rf = 26.0;       // RF chain
    double dac = 110.0;
    double baseband = 200.0;
    double phase_shifter = 42.0;
    double ttd = 80.0;      // adjustable TTD
    double fttd = 30.0;
    double sw = 10.0;       // switch
    double power_divider = 6.6;
    double power_combiner = 6.6;
};

enum class Architecture { DsFttd, FcTtd, TtdAided, FcPs, DsPs, AosaPs, Gosa };

Architecture architecture_from_string(const std::string& name);
std::string architecture_to_string(Architecture kind);

struct ArchitectureSpec {
    Architecture kind = Architecture::DsFttd;
    arma::uword antenna_count = 1024;  // N_t
    arma::uword chain_count = 4;       // L_t
    arma::uword fttd_per_chain = 32;   // Q (DS-FTTD)
    arma::uword ttd_count = 128;       // N_k (TTD-aided)
    arma::uword gosa_group = 4;        // Q_GoSA
    arma::uword active_fttd = 128;     // N^a_FTTD (DS-FTTD), <= L_t*Q
    double transmit_power = 0.1;       // rho, watts
};

/// Analog beamforming devices only (TTDs / phase shifters / FTTDs plus
/// switches), watts.
double analog_power(const ArchitectureSpec& spec, const DevicePowers& dev = {});

/// Full per-architecture total: common part P_u = P_PA*N_t + P_RF*L_t +
/// P_DAC*L_t + P_BB + rho plus the architecture row, watts.
double power_consumption(const ArchitectureSpec& spec, const DevicePowers& dev = {});

/// (1/M) * sum_m log2 det(I + (1/sigma_n^2) * H[m]T[m]T[m]^H H[m]^H) with
/// T[m] the N_t x N_s precoder, evaluated on the N_s x N_s Gram form.
double spectral_efficiency(const std::vector<arma::cx_mat>& channels,
                           const std::vector<arma::cx_mat>& precoders,
                           double noise_power);

/// se / power, bits/s/Hz/W.
double energy_efficiency(double se, double power_watts);

} // namespace dsfttd
