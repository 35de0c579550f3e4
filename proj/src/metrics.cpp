// SPDX-License-Identifier: Apache-2.0

#include "dsfttd/metrics.hpp"

#include <stdexcept>

namespace dsfttd {

Architecture architecture_from_string(const std::string& name) {
    if (name == "ds-fttd") return Architecture::DsFttd;
    if (name == "fc-ttd") return Architecture::FcTtd;
    if (name == "ttd-aided") return Architecture::TtdAided;
    if (name == "fc-ps") return Architecture::FcPs;
    if (name == "ds-ps") return Architecture::DsPs;
    if (name == "aosa-ps") return Architecture::AosaPs;
    if (name == "gosa") return Architecture::Gosa;
    throw std::invalid_argument("unknown architecture: " + name);
}

std::string architecture_to_string(Architecture kind) {
    switch (kind) {
    case Architecture::DsFttd: return "ds-fttd";
    case Architecture::FcTtd: return "fc-ttd";
    case Architecture::TtdAided: return "ttd-aided";
    case Architecture::FcPs: return "fc-ps";
    case Architecture::DsPs: return "ds-ps";
    case Architecture::AosaPs: return "aosa-ps";
    case Architecture::Gosa: return "gosa";
    }
    throw std::logic_error("unreachable");
}

namespace {
constexpr double kMilli = 1e-3;

double n(arma::uword v) { return static_cast<double>(v); }
} // namespace

double analog_power(const ArchitectureSpec& spec, const DevicePowers& dev) {
    const double nt = n(spec.antenna_count);
    const double lt = n(spec.chain_count);
    switch (spec.kind) {
    case Architecture::DsFttd:
        if (spec.active_fttd > spec.chain_count * spec.fttd_per_chain)
            throw std::invalid_argument("analog_power: active FTTDs exceed L_t*Q");
        return kMilli * (dev.sw * nt + dev.fttd * n(spec.active_fttd));
    case Architecture::FcTtd:
        return kMilli * dev.ttd * nt * lt;
    case Architecture::TtdAided:
        return kMilli * (dev.phase_shifter * nt * lt + dev.ttd * n(spec.ttd_count));
    case Architecture::FcPs:
        return kMilli * dev.phase_shifter * nt * lt;
    case Architecture::DsPs:
        return kMilli * (dev.phase_shifter * nt + dev.sw * nt);
    case Architecture::AosaPs:
        return kMilli * dev.phase_shifter * nt;
    case Architecture::Gosa:
        return kMilli * dev.phase_shifter * nt / n(spec.gosa_group);
    }
    throw std::logic_error("unreachable");
}

double power_consumption(const ArchitectureSpec& spec, const DevicePowers& dev) {
    const double nt = n(spec.antenna_count);
    const double lt = n(spec.chain_count);
    const double common = kMilli * (dev.pa * nt + dev.rf * lt + dev.dac * lt + dev.baseband) +
                          spec.transmit_power;

    double extra = 0.0;
    switch (spec.kind) {
    case Architecture::DsFttd:
        extra = kMilli * dev.power_divider * (lt + n(spec.active_fttd));
        break;
    case Architecture::FcTtd:
        extra = kMilli * (dev.power_divider * lt + dev.power_combiner * nt);
        break;
    case Architecture::TtdAided:
        extra = kMilli * (dev.power_divider * (lt + n(spec.ttd_count)) +
                          dev.power_combiner * nt);
        break;
    case Architecture::FcPs:
        extra = kMilli * (dev.power_divider * lt + dev.power_combiner * nt);
        break;
    case Architecture::DsPs:
    case Architecture::AosaPs:
        extra = kMilli * dev.power_divider * lt;
        break;
    case Architecture::Gosa:
        extra = kMilli * dev.power_divider * (lt + nt / n(spec.gosa_group));
        break;
    }
    return common + analog_power(spec, dev) + extra;
}

double spectral_efficiency(const std::vector<arma::cx_mat>& channels,
                           const std::vector<arma::cx_mat>& precoders,
                           double noise_power) {
    if (channels.size() != precoders.size())
        throw std::invalid_argument("spectral_efficiency: carrier count mismatch");
    if (noise_power <= 0.0)
        throw std::invalid_argument("spectral_efficiency: noise power must be positive");

    double acc = 0.0;
    for (arma::uword m = 0; m < channels.size(); ++m) {
        const arma::cx_mat effective = channels[m] * precoders[m]; // N_r x N_s
        // det(I_Nr + X X^H / s2) = det(I_Ns + X^H X / s2)
        arma::cx_mat gram = effective.t() * effective / noise_power;
        gram.diag() += 1.0;
        gram = 0.5 * (gram + gram.t()); // clear Hermitian round-off
        const arma::cx_double logdet = arma::log_det(gram);
        acc += logdet.real() / std::log(2.0);
    }
    return acc / static_cast<double>(channels.size());
}

double energy_efficiency(double se, double power_watts) {
    if (power_watts <= 0.0)
        throw std::invalid_argument("energy_efficiency: power must be positive");
    return se / power_watts;
}

} // namespace dsfttd
