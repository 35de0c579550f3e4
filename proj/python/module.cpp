// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the core operations: geometry/steering, beam-squint
// analysis, channel generation, the row-decomposition solver, and metrics.
// Armadillo matrices cross the boundary as numpy arrays (copies).

#include "dsfttd/beam_squint.hpp"
#include "dsfttd/experiments.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dsfttd;

namespace {

py::array_t<std::complex<double>> to_numpy(const arma::cx_mat& m) {
    py::array_t<std::complex<double>> out(std::vector<py::ssize_t>{
        static_cast<py::ssize_t>(m.n_rows), static_cast<py::ssize_t>(m.n_cols)});
    auto view = out.mutable_unchecked<2>();
    for (arma::uword r = 0; r < m.n_rows; ++r)
        for (arma::uword c = 0; c < m.n_cols; ++c)
            view(r, c) = m(r, c);
    return out;
}

py::array_t<std::complex<double>> to_numpy(const arma::cx_vec& v) {
    py::array_t<std::complex<double>> out(
        std::vector<py::ssize_t>{static_cast<py::ssize_t>(v.n_elem)});
    auto view = out.mutable_unchecked<1>();
    for (arma::uword i = 0; i < v.n_elem; ++i)
        view(i) = v(i);
    return out;
}

arma::cx_mat from_numpy(const py::array_t<std::complex<double>>& a) {
    const auto buf = a.request();
    if (buf.ndim != 2)
        throw std::invalid_argument("expected a 2-D complex array");
    arma::cx_mat m(buf.shape[0], buf.shape[1]);
    auto view = a.unchecked<2>();
    for (arma::uword r = 0; r < m.n_rows; ++r)
        for (arma::uword c = 0; c < m.n_cols; ++c)
            m(r, c) = view(r, c);
    return m;
}

std::vector<arma::cx_mat> from_numpy_list(const std::vector<py::array_t<std::complex<double>>>& v) {
    std::vector<arma::cx_mat> out;
    out.reserve(v.size());
    for (const auto& a : v)
        out.push_back(from_numpy(a));
    return out;
}

} // namespace

PYBIND11_MODULE(_dsfttd, mod) {
    mod.doc() = "Wideband THz hybrid beamforming: dynamic-subarray fixed "
                "true-time-delay simulation core";
    mod.attr("__version__") = kLibraryVersion;
    mod.attr("SPEED_OF_LIGHT") = kSpeedOfLight;

    py::class_<Direction>(mod, "Direction")
        .def(py::init<double, double>(), py::arg("azimuth"), py::arg("elevation"))
        .def_readwrite("azimuth", &Direction::azimuth)
        .def_readwrite("elevation", &Direction::elevation);
    mod.def("direction_deg", &direction_deg, py::arg("azimuth_deg"), py::arg("elevation_deg"));

    py::class_<UpaGeometry>(mod, "UpaGeometry")
        .def(py::init<arma::uword, arma::uword, double, double>(), py::arg("rows_l"),
             py::arg("cols_w"), py::arg("spacing"), py::arg("center_frequency"))
        .def_static("square", &UpaGeometry::square, py::arg("side"), py::arg("f_c"))
        .def_readonly("rows_l", &UpaGeometry::rows_l)
        .def_readonly("cols_w", &UpaGeometry::cols_w)
        .def_readonly("spacing", &UpaGeometry::spacing)
        .def_readonly("center_frequency", &UpaGeometry::center_frequency)
        .def_property_readonly("antenna_count", &UpaGeometry::antenna_count)
        .def_property_readonly("wavelength", &UpaGeometry::wavelength);

    py::class_<FrequencyGrid>(mod, "FrequencyGrid")
        .def_readonly("center", &FrequencyGrid::center)
        .def_readonly("bandwidth", &FrequencyGrid::bandwidth)
        .def_readonly("carriers", &FrequencyGrid::carriers);
    mod.def("frequency_grid", &frequency_grid, py::arg("f_c"), py::arg("bandwidth"),
            py::arg("carrier_count"));

    mod.def(
        "steering_vector",
        [](const UpaGeometry& g, double f, const Direction& d) {
            return to_numpy(steering_vector(g, f, d));
        },
        py::arg("geometry"), py::arg("frequency"), py::arg("direction"));
    mod.def(
        "narrowband_weights",
        [](const UpaGeometry& g, const Direction& d) { return to_numpy(narrowband_weights(g, d)); },
        py::arg("geometry"), py::arg("target"));
    mod.def("squinted_direction", &squinted_direction, py::arg("target"), py::arg("f_c"),
            py::arg("f_m"));
    mod.def("array_gain", &array_gain, py::arg("geometry"), py::arg("target"), py::arg("f_m"));
    mod.def("array_gain_loss", &array_gain_loss, py::arg("geometry"), py::arg("target"),
            py::arg("f_m"));
    mod.def("average_gain_db", &average_gain_db, py::arg("linear_gains"));

    py::class_<FttdBank>(mod, "FttdBank")
        .def_readonly("chain_count", &FttdBank::chain_count)
        .def_property_readonly("delays",
                               [](const FttdBank& b) {
                                   return std::vector<double>(b.delays.begin(), b.delays.end());
                               })
        .def_property_readonly("delay_count", &FttdBank::delay_count)
        .def_property_readonly("column_count", &FttdBank::column_count);
    mod.def(
        "build_delay_bank",
        [](const UpaGeometry& g, arma::uword chains, arma::uword delays) {
            return build_delay_bank(g, chains, delays);
        },
        py::arg("geometry"), py::arg("chain_count"), py::arg("delay_count"));

    py::class_<SwitchMatrix>(mod, "SwitchMatrix")
        .def_property_readonly("selection",
                               [](const SwitchMatrix& s) {
                                   return std::vector<arma::uword>(s.selection.begin(),
                                                                   s.selection.end());
                               })
        .def_readonly("column_count", &SwitchMatrix::column_count)
        .def("dense", [](const SwitchMatrix& s) {
            const arma::mat d = s.dense();
            py::array_t<double> out(std::vector<py::ssize_t>{
                static_cast<py::ssize_t>(d.n_rows), static_cast<py::ssize_t>(d.n_cols)});
            auto view = out.mutable_unchecked<2>();
            for (arma::uword r = 0; r < d.n_rows; ++r)
                for (arma::uword c = 0; c < d.n_cols; ++c)
                    view(r, c) = d(r, c);
            return out;
        });
    mod.def("active_fttd_count", &active_fttd_count, py::arg("switches"));

    py::class_<ChannelSet>(mod, "ChannelSet")
        .def_readonly("seed", &ChannelSet::seed)
        .def_readonly("perturbed", &ChannelSet::perturbed)
        .def_property_readonly("matrices",
                               [](const ChannelSet& ch) {
                                   std::vector<py::array_t<std::complex<double>>> out;
                                   for (const arma::cx_mat& h : ch.matrices)
                                       out.push_back(to_numpy(h));
                                   return out;
                               })
        .def("to_json", &channel_to_json);
    mod.def("generate_channel", &generate_channel, py::arg("tx"), py::arg("rx"), py::arg("grid"),
            py::arg("antenna"), py::arg("n_paths"), py::arg("seed"), py::arg("distance") = 50.0);
    mod.def("perturb_csi", &perturb_csi, py::arg("channel"), py::arg("xi"), py::arg("seed"));

    py::class_<SectorAntenna>(mod, "SectorAntenna")
        .def(py::init<double, double>(), py::arg("azimuth_beamwidth"),
             py::arg("elevation_beamwidth"))
        .def_readwrite("azimuth_beamwidth", &SectorAntenna::azimuth_beamwidth)
        .def_readwrite("elevation_beamwidth", &SectorAntenna::elevation_beamwidth);

    mod.def("noise_power", &noise_power, py::arg("bandwidth"), py::arg("carrier_count"),
            py::arg("noise_figure_db") = 10.0);
    mod.def(
        "water_fill",
        [](const std::vector<double>& gains, double budget) {
            const arma::vec p = water_fill(arma::vec(gains), budget);
            return std::vector<double>(p.begin(), p.end());
        },
        py::arg("gains"), py::arg("budget"));
    mod.def(
        "optimal_precoders",
        [](const ChannelSet& ch, arma::uword ns, double rho, double sigma) {
            const OptimalPrecoderSet set = optimal_precoders(ch, ns, rho, sigma);
            std::vector<py::array_t<std::complex<double>>> out;
            for (const arma::cx_mat& p : set.precoders)
                out.push_back(to_numpy(p));
            return out;
        },
        py::arg("channel"), py::arg("stream_count"), py::arg("total_power"),
        py::arg("noise_power"));

    py::class_<RdConfig>(mod, "RdConfig")
        .def(py::init<>())
        .def_readwrite("max_iterations", &RdConfig::max_iterations)
        .def_readwrite("relative_tolerance", &RdConfig::relative_tolerance)
        .def_readwrite("seed", &RdConfig::seed)
        .def_readwrite("thread_count", &RdConfig::thread_count);

    py::class_<RdResult>(mod, "RdResult")
        .def_readonly("switches", &RdResult::switches)
        .def_readonly("objective_trace", &RdResult::objective_trace)
        .def_readonly("iterations_used", &RdResult::iterations_used)
        .def_readonly("degenerate", &RdResult::degenerate)
        .def_property_readonly("digital",
                               [](const RdResult& r) {
                                   std::vector<py::array_t<std::complex<double>>> out;
                                   for (const arma::cx_mat& d : r.digital)
                                       out.push_back(to_numpy(d));
                                   return out;
                               })
        .def("to_json", [](const RdResult& r, bool values) { return rd_result_to_json(r, values); },
             py::arg("include_values") = false);

    mod.def(
        "rd_solve",
        [](const std::vector<py::array_t<std::complex<double>>>& targets, const FttdBank& bank,
           const FrequencyGrid& grid, const RdConfig& cfg) {
            return rd_solve(from_numpy_list(targets), bank, grid, cfg);
        },
        py::arg("targets"), py::arg("bank"), py::arg("grid"), py::arg("config") = RdConfig{});

    mod.def(
        "composite_precoder",
        [](const SwitchMatrix& sw, const FttdBank& bank, double f_m,
           const py::array_t<std::complex<double>>& digital) {
            return to_numpy(composite_precoder(sw, fttd_matrix(bank, f_m), from_numpy(digital)));
        },
        py::arg("switches"), py::arg("bank"), py::arg("f_m"), py::arg("digital"));

    mod.def(
        "spectral_efficiency",
        [](const std::vector<py::array_t<std::complex<double>>>& channels,
           const std::vector<py::array_t<std::complex<double>>>& precoders, double sigma) {
            return spectral_efficiency(from_numpy_list(channels), from_numpy_list(precoders),
                                       sigma);
        },
        py::arg("channels"), py::arg("precoders"), py::arg("noise_power"));
    mod.def("energy_efficiency", &energy_efficiency, py::arg("se"), py::arg("power_watts"));

    py::enum_<Architecture>(mod, "Architecture")
        .value("DS_FTTD", Architecture::DsFttd)
        .value("FC_TTD", Architecture::FcTtd)
        .value("TTD_AIDED", Architecture::TtdAided)
        .value("FC_PS", Architecture::FcPs)
        .value("DS_PS", Architecture::DsPs)
        .value("AOSA_PS", Architecture::AosaPs)
        .value("GOSA", Architecture::Gosa);

    py::class_<ArchitectureSpec>(mod, "ArchitectureSpec")
        .def(py::init<>())
        .def_readwrite("kind", &ArchitectureSpec::kind)
        .def_readwrite("antenna_count", &ArchitectureSpec::antenna_count)
        .def_readwrite("chain_count", &ArchitectureSpec::chain_count)
        .def_readwrite("fttd_per_chain", &ArchitectureSpec::fttd_per_chain)
        .def_readwrite("ttd_count", &ArchitectureSpec::ttd_count)
        .def_readwrite("gosa_group", &ArchitectureSpec::gosa_group)
        .def_readwrite("active_fttd", &ArchitectureSpec::active_fttd)
        .def_readwrite("transmit_power", &ArchitectureSpec::transmit_power);
    mod.def("analog_power", [](const ArchitectureSpec& s) { return analog_power(s); },
            py::arg("spec"));
    mod.def("power_consumption", [](const ArchitectureSpec& s) { return power_consumption(s); },
            py::arg("spec"));

    py::class_<SystemProfile>(mod, "SystemProfile")
        .def_static("paper", &SystemProfile::paper)
        .def_static("desk", &SystemProfile::desk)
        .def_readwrite("name", &SystemProfile::name)
        .def_readwrite("tx_side", &SystemProfile::tx_side)
        .def_readwrite("rx_side", &SystemProfile::rx_side)
        .def_readwrite("carrier_count", &SystemProfile::carrier_count)
        .def_readwrite("chain_count", &SystemProfile::chain_count)
        .def_readwrite("stream_count", &SystemProfile::stream_count)
        .def_readwrite("fttd_per_chain", &SystemProfile::fttd_per_chain)
        .def_readwrite("transmit_power_dbm", &SystemProfile::transmit_power_dbm);

    py::class_<PipelineResult>(mod, "PipelineResult")
        .def_readonly("se_optimal", &PipelineResult::se_optimal)
        .def_readonly("se_dsfttd", &PipelineResult::se_dsfttd)
        .def_readonly("se_narrowband_ps", &PipelineResult::se_narrowband_ps)
        .def_readonly("power_watts", &PipelineResult::power_watts)
        .def_readonly("energy_eff", &PipelineResult::energy_eff)
        .def_readonly("active_fttd", &PipelineResult::active_fttd)
        .def_readonly("iterations", &PipelineResult::iterations)
        .def_readonly("degenerate", &PipelineResult::degenerate)
        .def_readonly("objective_trace", &PipelineResult::objective_trace);
    mod.def("run_pipeline", &run_pipeline, py::arg("profile"), py::arg("seed"),
            py::arg("csi_accuracy") = 1.0);
    mod.def("dsfttd_average_gain_db",
            [](const SystemProfile& p, arma::uword q, arma::uword seed) {
                return dsfttd_average_gain_db(p, q, seed);
            },
            py::arg("profile"), py::arg("q"), py::arg("seed"));
}
