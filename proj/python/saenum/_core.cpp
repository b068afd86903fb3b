#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "saenum/config.hpp"
#include "saenum/errors.hpp"
#include "saenum/harness.hpp"
#include "saenum/io.hpp"

namespace py = pybind11;
using namespace sae;

namespace {

Scenario make_scenario(const ArrayGeometry& geometry, std::vector<double> source_u,
                       std::vector<double> source_power, double noise_power,
                       std::vector<double> freqs, double f_center, double prop_speed,
                       int snapshots) {
    Scenario s;
    s.geometry = geometry;
    s.source_u = std::move(source_u);
    s.source_power = std::move(source_power);
    s.noise_power = noise_power;
    s.freqs = std::move(freqs);
    s.f_center = f_center;
    s.prop_speed = prop_speed;
    s.snapshots = snapshots;
    s.validate();
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Wideband source enumeration on sparse arrays";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<numerical_error>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def(py::init([](std::vector<int> positions, double spacing_m) {
                 ArrayGeometry g{std::move(positions), spacing_m};
                 g.validate();
                 return g;
             }),
             py::arg("positions"), py::arg("spacing_m") = 0.0)
        .def_readonly("positions", &ArrayGeometry::positions)
        .def_readonly("spacing_m", &ArrayGeometry::spacing_m)
        .def_property_readonly("sensor_count", &ArrayGeometry::sensor_count)
        .def("__repr__", [](const ArrayGeometry& g) {
            std::string r = "ArrayGeometry([";
            for (std::size_t i = 0; i < g.positions.size(); ++i)
                r += (i ? "," : "") + std::to_string(g.positions[i]);
            return r + "])";
        });
    m.def("mra6", &mra6, py::arg("spacing_m") = 0.0);
    m.def("nested", &nested, py::arg("n1"), py::arg("n2"), py::arg("spacing_m") = 0.0);
    m.def("coprime", &coprime, py::arg("a"), py::arg("b"), py::arg("spacing_m") = 0.0);

    py::class_<Coarray>(m, "Coarray")
        .def_readonly("contiguous_p", &Coarray::contiguous_p)
        .def("weight", &Coarray::weight, py::arg("lag"))
        .def("pairs_at", &Coarray::pairs_at, py::arg("lag"))
        .def_property_readonly("lags", [](const Coarray& c) {
            std::vector<int> lags;
            for (const auto& [lag, pairs] : c.lag_pairs) lags.push_back(lag);
            return lags;
        });
    m.def("difference_coarray", &difference_coarray, py::arg("geometry"));

    py::class_<Scenario>(m, "Scenario")
        .def(py::init(&make_scenario), py::arg("geometry"), py::arg("source_u"),
             py::arg("source_power"), py::arg("noise_power"), py::arg("freqs"),
             py::arg("f_center"), py::arg("prop_speed") = 343.0,
             py::arg("snapshots") = 1)
        .def_readonly("source_u", &Scenario::source_u)
        .def_readonly("source_power", &Scenario::source_power)
        .def_readonly("noise_power", &Scenario::noise_power)
        .def_readonly("freqs", &Scenario::freqs)
        .def_readonly("f_center", &Scenario::f_center)
        .def_readonly("snapshots", &Scenario::snapshots)
        .def("narrowband_equivalent", &Scenario::narrowband_equivalent);
    m.def("nine_source_u", &nine_source_u);

    py::class_<SnapshotTensor>(m, "SnapshotTensor")
        .def_property_readonly("bins",
                               [](const SnapshotTensor& t) { return t.bins; })
        .def_readonly("freqs", &SnapshotTensor::freqs)
        .def_property_readonly("sensor_count", &SnapshotTensor::sensor_count)
        .def_property_readonly("bin_count", &SnapshotTensor::bin_count)
        .def_property_readonly("snapshot_count", &SnapshotTensor::snapshot_count);
    m.def("synthesize", &synthesize, py::arg("scenario"), py::arg("seed"));
    m.def("manifold", &manifold, py::arg("geometry"), py::arg("f"), py::arg("u"),
          py::arg("prop_speed") = 343.0);

    py::class_<SampleCovariance>(m, "SampleCovariance")
        .def_readonly("matrix", &SampleCovariance::matrix)
        .def_readonly("snapshot_count", &SampleCovariance::snapshot_count)
        .def_readonly("freq", &SampleCovariance::freq);
    py::class_<Periodogram>(m, "Periodogram")
        .def_readonly("u", &Periodogram::u)
        .def_readonly("value", &Periodogram::value);
    py::class_<CorrelationVector>(m, "CorrelationVector")
        .def_readonly("half_extent", &CorrelationVector::half_extent)
        .def_readonly("values", &CorrelationVector::values)
        .def("at", [](const CorrelationVector& r, int lag) { return r.at(lag); },
             py::arg("lag"));
    m.def("scm", &scm, py::arg("snapshots"), py::arg("bin"));
    m.def("coarray_correlation", &coarray_correlation, py::arg("scm"), py::arg("coarray"));
    m.def("narrowband_periodogram", &narrowband_periodogram, py::arg("snapshots"),
          py::arg("bin"), py::arg("grid_size") = 256);
    m.def("wideband_periodogram", &wideband_periodogram, py::arg("snapshots"),
          py::arg("grid_size") = 256);
    m.def("correlation_from_periodogram", &correlation_from_periodogram,
          py::arg("periodogram"), py::arg("coarray"));

    py::enum_<AcmKind>(m, "AcmKind")
        .value("spatial_smoothing", AcmKind::spatial_smoothing)
        .value("lag_redundancy", AcmKind::lag_redundancy);
    py::class_<AugmentedCovariance>(m, "AugmentedCovariance")
        .def_readonly("matrix", &AugmentedCovariance::matrix)
        .def_readonly("kind", &AugmentedCovariance::kind)
        .def_readonly("extent", &AugmentedCovariance::extent);
    py::class_<EigSpectrum>(m, "EigSpectrum")
        .def(py::init([](Eigen::VectorXd magnitudes, int effective_snapshots) {
                 return EigSpectrum{std::move(magnitudes), effective_snapshots};
             }),
             py::arg("magnitudes"), py::arg("effective_snapshots"))
        .def_readonly("magnitudes", &EigSpectrum::magnitudes)
        .def_readonly("effective_snapshots", &EigSpectrum::effective_snapshots);
    m.def("ss_acm", &ss_acm, py::arg("r"));
    m.def("lra_acm", &lra_acm, py::arg("r"));
    m.def("eig_magnitudes", &eig_magnitudes, py::arg("acm"),
          py::arg("effective_snapshots"));

    py::enum_<Criterion>(m, "Criterion")
        .value("mdl", Criterion::mdl)
        .value("mdlgap", Criterion::mdlgap)
        .value("sorte", Criterion::sorte);
    py::class_<CriterionCurve>(m, "CriterionCurve")
        .def_readonly("q_begin", &CriterionCurve::q_begin)
        .def_readonly("values", &CriterionCurve::values)
        .def_readonly("argmin_q", &CriterionCurve::argmin_q);
    m.def("mdl", &mdl, py::arg("spectrum"));
    m.def("mdlgap", &mdlgap, py::arg("spectrum"));
    m.def("sorte", &sorte, py::arg("spectrum"));
    m.def("h_asymptotic", &h_asymptotic, py::arg("ensemble_eigs"), py::arg("q"));
    m.def("f_concave", &f_concave, py::arg("x"), py::arg("p"), py::arg("d"),
          py::arg("snr"));

    py::enum_<Strategy>(m, "Strategy")
        .value("ap", Strategy::ap)
        .value("iss", Strategy::iss)
        .value("nb", Strategy::nb);
    py::enum_<SnapshotConvention>(m, "SnapshotConvention")
        .value("total", SnapshotConvention::total)
        .value("per_bin", SnapshotConvention::per_bin);
    py::class_<PipelineOptions>(m, "PipelineOptions")
        .def(py::init<>())
        .def_readwrite("u_grid_size", &PipelineOptions::u_grid_size)
        .def_readwrite("ap_acm", &PipelineOptions::ap_acm)
        .def_readwrite("iss_acm", &PipelineOptions::iss_acm)
        .def_readwrite("criterion_snapshots", &PipelineOptions::criterion_snapshots);
    py::class_<EnumerationResult>(m, "EnumerationResult")
        .def_readonly("strategy", &EnumerationResult::strategy)
        .def_readonly("criterion", &EnumerationResult::criterion)
        .def_readonly("estimate", &EnumerationResult::estimate)
        .def_readonly("curve", &EnumerationResult::curve)
        .def_readonly("bin_curves", &EnumerationResult::bin_curves)
        .def_readonly("effective_snapshots", &EnumerationResult::effective_snapshots)
        .def("to_json", [](const EnumerationResult& r) { return to_json(r); });
    m.def("run_ap", &run_ap, py::arg("snapshots"), py::arg("criterion"),
          py::arg("options") = PipelineOptions{});
    m.def("run_iss", &run_iss, py::arg("snapshots"), py::arg("criterion"),
          py::arg("options") = PipelineOptions{});
    m.def("run_nb", &run_nb, py::arg("snapshots"), py::arg("criterion"),
          py::arg("options") = PipelineOptions{});

    py::enum_<SweepParameter>(m, "SweepParameter")
        .value("snapshots", SweepParameter::snapshots)
        .value("snr_db", SweepParameter::snr_db)
        .value("separation_u", SweepParameter::separation_u);
    py::class_<WilsonInterval>(m, "WilsonInterval")
        .def_readonly("lo", &WilsonInterval::lo)
        .def_readonly("hi", &WilsonInterval::hi);
    m.def("wilson_interval", &wilson_interval, py::arg("detect_count"),
          py::arg("trials"), py::arg("z") = 1.959964);
    py::class_<CellStats>(m, "CellStats")
        .def_readonly("detect_count", &CellStats::detect_count)
        .def_readonly("trials", &CellStats::trials)
        .def_readonly("p_detect", &CellStats::p_detect)
        .def_readonly("ci", &CellStats::ci);
    py::class_<DetectionStats>(m, "DetectionStats")
        .def_readonly("sweep_name", &DetectionStats::sweep_name)
        .def_readonly("grid", &DetectionStats::grid)
        .def_readonly("combos", &DetectionStats::combos)
        .def_property_readonly("cells",
                               [](const DetectionStats& s) { return s.cells; })
        .def("cell", &DetectionStats::cell, py::arg("grid_index"), py::arg("strategy"),
             py::arg("criterion"), py::return_value_policy::copy);
    py::class_<Sweep>(m, "Sweep")
        .def(py::init<>())
        .def_readwrite("name", &Sweep::name)
        .def_readwrite("base", &Sweep::base)
        .def_readwrite("parameter", &Sweep::parameter)
        .def_readwrite("grid", &Sweep::grid)
        .def_readwrite("trials", &Sweep::trials)
        .def_readwrite("strategies", &Sweep::strategies)
        .def_readwrite("criteria", &Sweep::criteria)
        .def_readwrite("master_seed", &Sweep::master_seed)
        .def_readwrite("options", &Sweep::options);
    m.def("run_sweep", &run_sweep, py::arg("sweep"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("figure_scenario", &figure_scenario, py::arg("name"));
    m.def("apply_grid_value", &apply_grid_value, py::arg("base"), py::arg("parameter"),
          py::arg("value"));
    m.def("load_config", [](const std::string& path) {
        const LoadedConfig cfg = load_config(path);
        return py::make_tuple(cfg.scenario, cfg.options,
                              cfg.has_sweep ? py::cast(cfg.sweep) : py::none());
    });
}
