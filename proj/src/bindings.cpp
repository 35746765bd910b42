#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rksamp/debranges.hpp"
#include "rksamp/io.hpp"
#include "rksamp/jacobi.hpp"
#include "rksamp/kernel_core.hpp"
#include "rksamp/pw.hpp"
#include "rksamp/reconstruct.hpp"
#include "rksamp/verify.hpp"

namespace py = pybind11;

namespace rk = rksamp;

namespace {

rk::StateVector make_state(const rk::Model& model,
                           std::vector<rk::Complex> coeffs) {
    if (coeffs.size() != model.dimension())
        throw std::invalid_argument("make_state: coefficient count must equal dimension");
    rk::StateVector s;
    s.coeffs = std::move(coeffs);
    s.basis_tag = model.basis_tag();
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "reproducing-kernel sampling toolkit";

    py::class_<rk::StateVector>(m, "StateVector")
        .def_readwrite("coeffs", &rk::StateVector::coeffs)
        .def_readonly("basis_tag", &rk::StateVector::basis_tag)
        .def("norm", &rk::StateVector::norm);

    py::class_<rk::SamplingSet>(m, "SamplingSet")
        .def_readonly("points", &rk::SamplingSet::points)
        .def_readonly("kernel_norms", &rk::SamplingSet::kernel_norms)
        .def_readonly("weights", &rk::SamplingSet::weights)
        .def_readonly("extension_param", &rk::SamplingSet::extension_param)
        .def("__len__", &rk::SamplingSet::size);

    py::class_<rk::SampledSignal>(m, "SampledSignal")
        .def_readonly("set", &rk::SampledSignal::set)
        .def_readonly("values", &rk::SampledSignal::values);

    py::class_<rk::Model>(m, "Model")
        .def("basis_tag", &rk::Model::basis_tag)
        .def("dimension", &rk::Model::dimension)
        .def("transform", &rk::Model::transform)
        .def("kernel", &rk::Model::kernel)
        .def("extension_spectrum", &rk::Model::extension_spectrum,
             py::arg("param"), py::arg("window") = 8)
        .def("xi_state", &rk::Model::xi_state)
        .def("supports_gauge", &rk::Model::supports_gauge);

    py::class_<rk::JacobiModel, rk::Model>(m, "JacobiModel")
        .def(py::init([](const std::string& rule, std::size_t n) {
                 return rk::JacobiModel(rk::JacobiCoefficients::from_rule(rule), n);
             }),
             py::arg("rule"), py::arg("n"))
        .def(py::init([](std::vector<double> b, std::vector<double> q,
                         std::size_t n) {
                 return rk::JacobiModel(
                     rk::JacobiCoefficients::from_arrays(std::move(b), std::move(q)), n);
             }),
             py::arg("b"), py::arg("q"), py::arg("n"));

    py::class_<rk::PWModel, rk::Model>(m, "PWModel")
        .def(py::init([](double a, std::size_t cutoff) {
                 return rk::PWModel(rk::PWConfig{a, cutoff});
             }),
             py::arg("a"), py::arg("cutoff"));

    m.def("make_state", &make_state, py::arg("model"), py::arg("coeffs"));

    m.def("load_model",
          [](const std::string& json_text) {
              return rk::load_model_text(json_text).model;
          },
          py::arg("json_text"));

    m.def("sample_transform", &rk::sample_transform);

    m.def("kernel_series", &rk::kernel_series, py::arg("model"), py::arg("signal"),
          py::arg("z"), py::arg("terms"));

    m.def("lagrange_reconstruct",
          [](const rk::Model& model, const rk::SampledSignal& signal, rk::Complex z,
             std::size_t terms) {
              const auto order = rk::series_order(signal.set);
              const auto gen =
                  rk::make_lagrange_generator(model, signal.set, order[0]);
              return rk::lagrange_series(gen, signal, z, terms);
          },
          py::arg("model"), py::arg("signal"), py::arg("z"), py::arg("terms"));

    m.def("place_sampling_point",
          [](const rk::JacobiModel& model, double x_star) {
              const rk::BoundaryAngle tau = rk::place_sampling_point(
                  model.coefficients(), model.dimension(), x_star);
              return py::make_tuple(tau.tau,
                                    model.extension_spectrum(tau.tau, 0));
          },
          py::arg("model"), py::arg("x_star"));

    m.def("limit_circle",
          [](const std::string& rule, rk::Complex z, std::size_t k_max, double tol) {
              const auto rep = rk::limit_circle_diagnostic(
                  rk::JacobiCoefficients::from_rule(rule), z, k_max, tol);
              return py::make_tuple(rep.converged, rep.partial_sums,
                                    rep.last_increment);
          },
          py::arg("rule"), py::arg("z"), py::arg("k_max"), py::arg("tol"));

    m.def("st_zeros",
          [](const rk::Model& model, rk::Complex w0, double t, double lo, double hi) {
              return rk::st_zeros(rk::make_structure_function(model, w0), t, lo, hi);
          },
          py::arg("model"), py::arg("w0"), py::arg("t"), py::arg("lo"), py::arg("hi"));

    m.def("run_verification",
          [](std::uint64_t seed) {
              rk::VerifyOptions opts;
              opts.seed = seed;
              py::list out;
              for (const rk::CheckResult& r : rk::run_verification(opts)) {
                  py::dict row;
                  row["name"] = r.name;
                  row["pass"] = r.pass;
                  row["max_err"] = r.max_err;
                  row["tolerance"] = r.tolerance;
                  out.append(row);
              }
              return out;
          },
          py::arg("seed") = 42);
}
