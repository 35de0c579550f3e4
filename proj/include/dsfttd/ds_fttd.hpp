// SPDX-License-Identifier: Apache-2.0
//
// DS-FTTD architecture model: fixed delay bank, per-carrier FTTD matrix,
// one-hot-per-row switch network, and the composite precoder S*F[m]*D[m].

#pragma once

#include "dsfttd/array_geometry.hpp"

namespace dsfttd {

/// Fixed delay bank shared by all RF chains: tau_q uniform on [0, tau_max]
/// with tau_max = d*(L + W - 2) / (sqrt(2)*c).
struct FttdBank {
    arma::uword chain_count = 1; // L_t
    arma::vec delays;            // tau_q, q = 1..Q, seconds

    arma::uword delay_count() const { return delays.n_elem; } // Q
    arma::uword column_count() const { return chain_count * delay_count(); } // L_t*Q
};

FttdBank build_delay_bank(const UpaGeometry& geom, arma::uword chain_count, arma::uword delay_count);

/// Delay bank over an explicit [0, tau_max]; used by tests and sweeps.
FttdBank build_delay_bank(double tau_max, arma::uword chain_count, arma::uword delay_count);

/// Per-carrier FTTD response. The full matrix is blkdiag(f, ..., f) with
/// f_q = exp(j*2*pi*f_m*tau_q); only the shared block is stored.
struct FttdMatrix {
    arma::cx_vec block;          // f[m], length Q
    arma::uword chain_count = 1; // L_t

    arma::cx_mat dense() const;  // (L_t*Q) x L_t block-diagonal matrix
};

FttdMatrix fttd_matrix(const FttdBank& bank, double f_m);

/// Switch network: each antenna selects one column of the L_t*Q bank.
/// Stored as the selected column index per antenna; the binary matrix is a
/// view. Column p maps to chain p/Q and delay p%Q.
struct SwitchMatrix {
    arma::uvec selection;        // length N_t, values in [0, L_t*Q)
    arma::uword column_count = 0;

    arma::uword antenna_count() const { return selection.n_elem; }
    arma::uword chain_of(arma::uword antenna, arma::uword delay_count) const {
        return selection(antenna) / delay_count;
    }
    arma::uword delay_of(arma::uword antenna, arma::uword delay_count) const {
        return selection(antenna) % delay_count;
    }
    arma::mat dense() const;     // N_t x (L_t*Q) binary matrix
    void validate() const;
};

/// Uniformly random one-hot rows, used to initialize the solver.
SwitchMatrix random_switch(arma::uword antenna_count, arma::uword column_count, arma::uword seed);

/// S*F[m]*D[m]; row i is f_{q_i}[m] times the digital row of antenna i's chain.
arma::cx_mat composite_precoder(const SwitchMatrix& sw, const FttdMatrix& fttd,
                                const arma::cx_mat& digital);

/// Number of bank columns selected by at least one antenna (active FTTDs).
arma::uword active_fttd_count(const SwitchMatrix& sw);

} // namespace dsfttd
