// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/rd_solver.hpp"

#include <json.hpp>

#include <stdexcept>
#include <thread>

namespace dsfttd {

namespace {

// F[m]*D[m], exploiting the block-diagonal structure: rows l*Q..l*Q+Q-1 are
// the outer product of f[m] with the l-th digital row.
arma::cx_mat fttd_times_digital(const FttdMatrix& fttd, const arma::cx_mat& digital) {
    const arma::uword q = fttd.block.n_elem;
    arma::cx_mat g(q * fttd.chain_count, digital.n_cols);
    for (arma::uword l = 0; l < fttd.chain_count; ++l)
        g.rows(l * q, (l + 1) * q - 1) = fttd.block * digital.row(l);
    return g;
}

// diag(F*D*D^H*F^H): the FTTD phases are unit-modulus, so entry l*Q+q is the
// squared norm of the l-th digital row.
arma::vec composite_diag(const FttdMatrix& fttd, const arma::cx_mat& digital) {
    const arma::uword q = fttd.block.n_elem;
    arma::vec d(q * fttd.chain_count);
    for (arma::uword l = 0; l < fttd.chain_count; ++l)
        d.subvec(l * q, (l + 1) * q - 1)
            .fill(std::pow(arma::norm(digital.row(l).t()), 2.0));
    return d;
}

// Cost of every (antenna, column) placement, rows independent.
arma::mat switch_cost_matrix(const std::vector<arma::cx_mat>& targets,
                             const std::vector<FttdMatrix>& fttd,
                             const std::vector<arma::cx_mat>& digital,
                             arma::uword thread_count) {
    const arma::uword m_count = targets.size();
    const arma::uword n_t = targets[0].n_rows;
    const arma::uword columns = fttd[0].block.n_elem * fttd[0].chain_count;

    const arma::uword workers = std::max<arma::uword>(1, std::min<arma::uword>(thread_count, m_count));
    std::vector<arma::mat> partial(workers, arma::mat(n_t, columns, arma::fill::zeros));
    auto work = [&](arma::uword w) {
        for (arma::uword m = w; m < m_count; m += workers) {
            const arma::cx_mat g = fttd_times_digital(fttd[m], digital[m]);
            partial[w] -= 2.0 * arma::real(arma::conj(targets[m]) * g.st());
            partial[w].each_row() += composite_diag(fttd[m], digital[m]).t();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (arma::uword w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (std::thread& t : pool)
            t.join();
    }
    for (arma::uword w = 1; w < workers; ++w)
        partial[0] += partial[w];
    return partial[0];
}

} // namespace

double objective(const std::vector<arma::cx_mat>& targets, const SwitchMatrix& sw,
                 const std::vector<FttdMatrix>& fttd,
                 const std::vector<arma::cx_mat>& digital) {
    if (targets.size() != fttd.size() || targets.size() != digital.size())
        throw std::invalid_argument("objective: carrier count mismatch");
    double acc = 0.0;
    for (arma::uword m = 0; m < targets.size(); ++m) {
        const arma::cx_mat composite = composite_precoder(sw, fttd[m], digital[m]);
        const double d = arma::norm(targets[m] - composite, "fro");
        acc += d * d;
    }
    return acc;
}

arma::vec switch_row_cost(arma::uword antenna, const std::vector<arma::cx_mat>& targets,
                          const std::vector<FttdMatrix>& fttd,
                          const std::vector<arma::cx_mat>& digital) {
    const arma::uword columns = fttd[0].block.n_elem * fttd[0].chain_count;
    arma::vec cost(columns, arma::fill::zeros);
    for (arma::uword m = 0; m < targets.size(); ++m) {
        const arma::cx_mat g = fttd_times_digital(fttd[m], digital[m]);
        // g * P_i[m]^H with P_i the antenna's target row
        cost -= 2.0 * arma::real(g * targets[m].row(antenna).t());
        cost += composite_diag(fttd[m], digital[m]);
    }
    return cost;
}

SwitchMatrix update_switch(const std::vector<arma::cx_mat>& targets,
                           const std::vector<FttdMatrix>& fttd,
                           const std::vector<arma::cx_mat>& digital,
                           arma::uword thread_count) {
    const arma::mat cost = switch_cost_matrix(targets, fttd, digital, thread_count);
    SwitchMatrix sw;
    sw.column_count = cost.n_cols;
    sw.selection.set_size(cost.n_rows);
    for (arma::uword i = 0; i < cost.n_rows; ++i)
        sw.selection(i) = cost.row(i).index_min(); // first minimum wins ties
    return sw;
}

std::vector<arma::cx_mat> update_digital(const std::vector<arma::cx_mat>& targets,
                                         const SwitchMatrix& sw,
                                         const std::vector<FttdMatrix>& fttd,
                                         bool* degenerate) {
    std::vector<arma::cx_mat> digital;
    digital.reserve(targets.size());
    for (arma::uword m = 0; m < targets.size(); ++m) {
        const arma::uword q = fttd[m].block.n_elem;
        const arma::uword chains = fttd[m].chain_count;
        const arma::uword streams = targets[m].n_cols;
        if (streams > chains)
            throw std::invalid_argument("update_digital: N_s exceeds L_t");

        // P[m]^H * S * F[m], accumulated per antenna: column l_i picks up
        // f_{q_i} times the conjugated target row.
        arma::cx_mat product(streams, chains, arma::fill::zeros);
        for (arma::uword i = 0; i < sw.antenna_count(); ++i) {
            const arma::uword chain = sw.chain_of(i, q);
            const arma::uword delay = sw.delay_of(i, q);
            product.col(chain) += fttd[m].block(delay) * targets[m].row(i).t();
        }

        arma::cx_mat u, v;
        arma::vec s;
        if (!arma::svd(u, s, v, product))
            throw std::runtime_error("update_digital: SVD failed");
        if (degenerate != nullptr && (s.n_elem < streams || s(streams - 1) <= 1e-14 * s(0)))
            *degenerate = true;
        digital.push_back(v.cols(0, streams - 1) * u.cols(0, streams - 1).t());
    }
    return digital;
}

std::vector<arma::cx_mat> normalize_power(const std::vector<arma::cx_mat>& targets,
                                          const SwitchMatrix& sw,
                                          const std::vector<FttdMatrix>& fttd,
                                          const std::vector<arma::cx_mat>& digital) {
    std::vector<arma::cx_mat> out;
    out.reserve(digital.size());
    for (arma::uword m = 0; m < digital.size(); ++m) {
        const double composite_norm =
            arma::norm(composite_precoder(sw, fttd[m], digital[m]), "fro");
        if (composite_norm == 0.0)
            throw std::runtime_error("normalize_power: degenerate zero-norm solution");
        out.push_back(arma::norm(targets[m], "fro") / composite_norm * digital[m]);
    }
    return out;
}

RdResult rd_solve(const std::vector<arma::cx_mat>& targets, const FttdBank& bank,
                  const FrequencyGrid& grid, const RdConfig& cfg) {
    if (cfg.max_iterations < 1 || cfg.relative_tolerance <= 0.0)
        throw std::invalid_argument("rd_solve: invalid config");
    if (targets.size() != grid.carrier_count())
        throw std::invalid_argument("rd_solve: target count != carrier count");

    std::vector<FttdMatrix> fttd;
    fttd.reserve(grid.carrier_count());
    for (double f_m : grid.carriers)
        fttd.push_back(fttd_matrix(bank, f_m));

    RdResult result;
    result.switches = random_switch(targets[0].n_rows, bank.column_count(), cfg.seed);
    result.digital = update_digital(targets, result.switches, fttd, &result.degenerate);

    double previous = objective(targets, result.switches, fttd, result.digital);
    result.objective_trace.push_back(previous);

    for (arma::uword k = 0; k < cfg.max_iterations; ++k) {
        result.switches = update_switch(targets, fttd, result.digital, cfg.thread_count);
        result.digital = update_digital(targets, result.switches, fttd, &result.degenerate);
        const double current = objective(targets, result.switches, fttd, result.digital);
        result.objective_trace.push_back(current);
        result.iterations_used = k + 1;
        if (previous - current < cfg.relative_tolerance * std::max(previous, 1e-300))
            break;
        previous = current;
    }

    result.digital = normalize_power(targets, result.switches, fttd, result.digital);
    return result;
}

std::string rd_result_to_json(const RdResult& result, bool include_values) {
    nlohmann::json j;
    j["switch_selection"] = std::vector<arma::uword>(result.switches.selection.begin(),
                                                     result.switches.selection.end());
    j["switch_columns"] = result.switches.column_count;
    j["objective_trace"] = result.objective_trace;
    j["iterations_used"] = result.iterations_used;
    j["degenerate"] = result.degenerate;
    j["carriers"] = result.digital.size();
    if (!result.digital.empty()) {
        j["digital_rows"] = result.digital[0].n_rows;
        j["digital_cols"] = result.digital[0].n_cols;
    }
    if (include_values) {
        nlohmann::json values = nlohmann::json::array();
        for (const arma::cx_mat& d : result.digital) {
            nlohmann::json carrier = nlohmann::json::array();
            for (arma::uword r = 0; r < d.n_rows; ++r)
                for (arma::uword c = 0; c < d.n_cols; ++c)
                    carrier.push_back({d(r, c).real(), d(r, c).imag()});
            values.push_back(carrier);
        }
        j["digital_values"] = values;
    }
    return j.dump(2);
}

} // namespace dsfttd
