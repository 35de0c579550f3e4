// SPDX-License-Identifier: Apache-2.0
//
// Row-decomposition alternating minimization for the DS-FTTD hybrid
// beamforming problem: per-antenna ranking update of the switch matrix,
// orthogonal-Procrustes update of the digital precoders, and a final power
// normalization.

#pragma once

#include "dsfttd/ds_fttd.hpp"

#include <string>
#include <vector>

namespace dsfttd {

struct RdConfig {
    arma::uword max_iterations = 50;
    double relative_tolerance = 1e-4;
    arma::uword seed = 0;
    arma::uword thread_count = 1; // parallel switch-row updates
};

struct RdResult {
    SwitchMatrix switches;
    std::vector<arma::cx_mat> digital;  // D[m], L_t x N_s, power-normalized
    std::vector<double> objective_trace; // value after each iteration, plus init
    arma::uword iterations_used = 0;
    bool degenerate = false;             // rank-deficient Procrustes or zero norm
};

/// sum_m ||P[m] - S*F[m]*D[m]||_F^2.
double objective(const std::vector<arma::cx_mat>& targets, const SwitchMatrix& sw,
                 const std::vector<FttdMatrix>& fttd,
                 const std::vector<arma::cx_mat>& digital);

/// Cost of placing antenna i's one-hot row at each of the L_t*Q columns:
/// sum_m (-2*Re(F[m]*D[m]*P_i[m]^H) + diag(F[m]*D[m]*D[m]^H*F[m]^H)).
arma::vec switch_row_cost(arma::uword antenna, const std::vector<arma::cx_mat>& targets,
                          const std::vector<FttdMatrix>& fttd,
                          const std::vector<arma::cx_mat>& digital);

/// Row-wise argmin of switch_row_cost; ties break toward the lowest column.
SwitchMatrix update_switch(const std::vector<arma::cx_mat>& targets,
                           const std::vector<FttdMatrix>& fttd,
                           const std::vector<arma::cx_mat>& digital,
                           arma::uword thread_count = 1);

/// Per-carrier orthogonal Procrustes: D[m] = Vhat_Ns[m]*Uhat[m]^H from the SVD
/// of P[m]^H*S*F[m]; each D[m] is semi-unitary. Sets `degenerate` when the
/// product is rank-deficient below N_s.
std::vector<arma::cx_mat> update_digital(const std::vector<arma::cx_mat>& targets,
                                         const SwitchMatrix& sw,
                                         const std::vector<FttdMatrix>& fttd,
                                         bool* degenerate = nullptr);

/// D[m] <- (||P[m]||_F / ||S*F[m]*D[m]||_F) * D[m]. Throws on a zero norm.
std::vector<arma::cx_mat> normalize_power(const std::vector<arma::cx_mat>& targets,
                                          const SwitchMatrix& sw,
                                          const std::vector<FttdMatrix>& fttd,
                                          const std::vector<arma::cx_mat>& digital);

/// Full alternation: random one-hot S, Procrustes D, repeat the two
/// updates until the relative objective decrease drops below tolerance or the
/// iteration cap, then normalize once. The trace is non-increasing.
RdResult rd_solve(const std::vector<arma::cx_mat>& targets, const FttdBank& bank,
                  const FrequencyGrid& grid, const RdConfig& cfg);

/// JSON with switch indices, objective trace, iteration count, and digital
/// precoder dimensions; values included when `include_values`.
std::string rd_result_to_json(const RdResult& result, bool include_values = false);

} // namespace dsfttd
