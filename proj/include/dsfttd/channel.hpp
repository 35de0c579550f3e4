// SPDX-License-Identifier: Apache-2.0
//
// Multicarrier multipath channel generation, optimal precoders via SVD plus
// joint water-filling, and the imperfect-CSI perturbation model.

#pragma once

#include "dsfttd/array_geometry.hpp"

#include <complex>
#include <string>
#include <vector>

namespace dsfttd {

struct PathSpec {
    std::complex<double> gain;   // alpha_n at f_c (amplitude, complex)
    Direction departure;
    Direction arrival;
    double delay = 0.0;          // propagation delay T_n, seconds
};

struct ChannelSet {
    UpaGeometry tx_geometry;
    UpaGeometry rx_geometry;
    FrequencyGrid grid;
    SectorAntenna antenna;
    std::vector<PathSpec> paths;
    arma::uword seed = 0;
    bool perturbed = false;      // true after perturb_csi; paths then describe
                                 // the underlying true channel only
    std::vector<arma::cx_mat> matrices; // H[m], N_r x N_t

    arma::uword carrier_count() const { return matrices.size(); }
};

/// H[m] = sum_n alpha_n * exp(-j*2*pi*f_m*T_n) * G_t * G_r * a_rn[m] * a_tn[m]^H.
/// Path directions are drawn inside the sector beamwidths, the first path is
/// line-of-sight with free-space amplitude at `distance`, the rest sit 10-20 dB
/// below it. Deterministic for a fixed seed.
ChannelSet generate_channel(const UpaGeometry& tx, const UpaGeometry& rx,
                            const FrequencyGrid& grid, const SectorAntenna& antenna,
                            arma::uword n_paths, arma::uword seed,
                            double distance = 50.0);

/// Rebuild H[m] from the stored path list; equals `matrices` for an
/// unperturbed set.
std::vector<arma::cx_mat> rebuild_matrices(const ChannelSet& ch);

/// Hhat[m] = xi*H[m] + e_m*sqrt(1-xi^2)*E[m], E[m] i.i.d. CN(0,1) and e_m
/// scaled so that ||e_m*E[m]||_F = ||H[m]||_F.
ChannelSet perturb_csi(const ChannelSet& ch, double xi, arma::uword seed);

struct OptimalPrecoderSet {
    std::vector<arma::cx_mat> precoders;   // P[m], N_t x N_s
    std::vector<arma::vec> allocations;    // diag of Gamma[m], sqrt(power)
    double total_power = 0.0;              // rho
};

/// P[m] = V_Ns[m] * Gamma[m]: per-carrier SVD right vectors with one global
/// water level over all M*N_s subchannels, sum_m ||P[m]||_F^2 = rho.
OptimalPrecoderSet optimal_precoders(const ChannelSet& ch, arma::uword stream_count,
                                     double total_power, double noise_power);

/// Water-filling over subchannel gains g_i (linear SNR per unit power):
/// returns p_i = max(0, mu - 1/g_i) with sum p_i = budget.
arma::vec water_fill(const arma::vec& gains, double budget);

/// Thermal noise power per carrier: -174 dBm/Hz over bandwidth/M plus the
/// noise figure in dB.
double noise_power(double bandwidth, arma::uword carrier_count, double noise_figure_db = 10.0);

/// JSON layout with grid, paths, and seed; matrices are re-derived on load.
std::string channel_to_json(const ChannelSet& ch);
ChannelSet channel_from_json(const std::string& text);

} // namespace dsfttd
