// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/ds_fttd.hpp"

#include <random>
#include <stdexcept>

namespace dsfttd {

FttdBank build_delay_bank(double tau_max, arma::uword chain_count, arma::uword delay_count) {
    if (delay_count < 2)
        throw std::invalid_argument("build_delay_bank: need at least 2 delays");
    if (chain_count < 1)
        throw std::invalid_argument("build_delay_bank: need at least 1 RF chain");
    FttdBank bank;
    bank.chain_count = chain_count;
    bank.delays = arma::linspace(0.0, tau_max, delay_count);
    return bank;
}

FttdBank build_delay_bank(const UpaGeometry& geom, arma::uword chain_count,
                          arma::uword delay_count) {
    const double tau_max = geom.spacing *
                           static_cast<double>(geom.rows_l + geom.cols_w - 2) /
                           (std::sqrt(2.0) * kSpeedOfLight);
    return build_delay_bank(tau_max, chain_count, delay_count);
}

arma::cx_mat FttdMatrix::dense() const {
    const arma::uword q = block.n_elem;
    arma::cx_mat full(q * chain_count, chain_count, arma::fill::zeros);
    for (arma::uword l = 0; l < chain_count; ++l)
        full.submat(l * q, l, (l + 1) * q - 1, l) = block;
    return full;
}

FttdMatrix fttd_matrix(const FttdBank& bank, double f_m) {
    FttdMatrix fttd;
    fttd.chain_count = bank.chain_count;
    fttd.block.set_size(bank.delay_count());
    for (arma::uword q = 0; q < bank.delay_count(); ++q)
        fttd.block(q) = std::polar(1.0, 2.0 * arma::datum::pi * f_m * bank.delays(q));
    return fttd;
}

arma::mat SwitchMatrix::dense() const {
    arma::mat full(antenna_count(), column_count, arma::fill::zeros);
    for (arma::uword i = 0; i < antenna_count(); ++i)
        full(i, selection(i)) = 1.0;
    return full;
}

void SwitchMatrix::validate() const {
    if (column_count == 0)
        throw std::invalid_argument("SwitchMatrix: no bank columns");
    for (arma::uword i = 0; i < antenna_count(); ++i)
        if (selection(i) >= column_count)
            throw std::invalid_argument("SwitchMatrix: selection index out of range");
}

SwitchMatrix random_switch(arma::uword antenna_count, arma::uword column_count,
                           arma::uword seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<arma::uword> pick(0, column_count - 1);
    SwitchMatrix sw;
    sw.column_count = column_count;
    sw.selection.set_size(antenna_count);
    for (arma::uword i = 0; i < antenna_count; ++i)
        sw.selection(i) = pick(rng);
    return sw;
}

arma::cx_mat composite_precoder(const SwitchMatrix& sw, const FttdMatrix& fttd,
                                const arma::cx_mat& digital) {
    const arma::uword q_count = fttd.block.n_elem;
    if (digital.n_rows != fttd.chain_count)
        throw std::invalid_argument("composite_precoder: digital rows != chain count");
    if (sw.column_count != fttd.chain_count * q_count)
        throw std::invalid_argument("composite_precoder: switch columns != L_t*Q");

    arma::cx_mat out(sw.antenna_count(), digital.n_cols);
    for (arma::uword i = 0; i < sw.antenna_count(); ++i) {
        const arma::uword chain = sw.chain_of(i, q_count);
        const arma::uword delay = sw.delay_of(i, q_count);
        out.row(i) = fttd.block(delay) * digital.row(chain);
    }
    return out;
}

arma::uword active_fttd_count(const SwitchMatrix& sw) {
    std::vector<bool> used(sw.column_count, false);
    for (arma::uword i = 0; i < sw.antenna_count(); ++i)
        used[sw.selection(i)] = true;
    arma::uword count = 0;
    for (bool u : used)
        count += u ? 1 : 0;
    return count;
}

} // namespace dsfttd
