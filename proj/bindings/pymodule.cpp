#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bel/bounds.hpp"
#include "bel/codebook.hpp"
#include "bel/decoder.hpp"
#include "bel/error_model.hpp"
#include "bel/mc_sim.hpp"
#include "bel/quantizer.hpp"
#include "bel/toytrain.hpp"

namespace py = pybind11;

PYBIND11_MODULE(belpy, m) {
    m.doc() = "binary-encoded-label regression core";

    py::class_<bel::CodeMatrix>(m, "CodeMatrix")
        .def_property_readonly("kind",
                               [](const bel::CodeMatrix& c) { return bel::kind_name(c.kind); })
        .def_readonly("levels", &bel::CodeMatrix::levels)
        .def_readonly("bits", &bel::CodeMatrix::bits)
        .def_readonly("rows", &bel::CodeMatrix::rows)
        .def("row", &bel::CodeMatrix::row, py::arg("level"),
             py::return_value_policy::copy);

    m.def(
        "make_code",
        [](const std::string& kind, int levels) {
            return bel::make_code(bel::kind_from_name(kind), levels);
        },
        py::arg("kind"), py::arg("levels"));

    py::class_<bel::QuantizationSpec>(m, "QuantizationSpec")
        .def(py::init<double, double, int>(), py::arg("a"), py::arg("b"), py::arg("levels"))
        .def_readonly("a", &bel::QuantizationSpec::a)
        .def_readonly("b", &bel::QuantizationSpec::b)
        .def_readonly("levels", &bel::QuantizationSpec::levels);

    m.def("quantize", &bel::quantize, py::arg("y"), py::arg("spec"));
    m.def("dequantize", &bel::dequantize, py::arg("level_coord"), py::arg("spec"));
    m.def("level_coordinate", &bel::level_coordinate, py::arg("y"), py::arg("spec"));

    m.def("threshold", &bel::threshold, py::arg("z"));
    m.def("decode_unary", &bel::decode_unary, py::arg("bits"));
    m.def("decode_johnson", &bel::decode_johnson, py::arg("bits"));
    m.def("decode_gen", &bel::decode_gen, py::arg("z"), py::arg("code"));
    m.def("decode_gen_ex", &bel::decode_gen_ex, py::arg("z"), py::arg("code"));

    py::class_<bel::ClassifierErrorModel>(m, "ClassifierErrorModel")
        .def_readonly("centers", &bel::ClassifierErrorModel::centers)
        .def_readonly("r", &bel::ClassifierErrorModel::r)
        .def_readonly("sigma", &bel::ClassifierErrorModel::sigma)
        .def_readonly("n_labels", &bel::ClassifierErrorModel::n_labels);

    m.def("model_from_code", &bel::model_from_code, py::arg("code"), py::arg("r"),
          py::arg("sigma"));
    m.def("error_prob", &bel::error_prob, py::arg("model"), py::arg("classifier"),
          py::arg("y"));

    m.def(
        "bound_unary",
        [](const bel::ClassifierErrorModel& model, int N) {
            const auto rep = bel::bound_unary(model, N);
            return py::make_tuple(rep.per_label, rep.aggregate);
        },
        py::arg("model"), py::arg("N"), "Returns (per_label, aggregate)");
    m.def(
        "expected_err_johnson",
        [](const bel::ClassifierErrorModel& model, int N) {
            const auto rep = bel::expected_err_johnson(model, N);
            return py::make_tuple(rep.per_label, rep.aggregate);
        },
        py::arg("model"), py::arg("N"), "Returns (per_label, aggregate)");

    m.def(
        "simulate",
        [](const bel::CodeMatrix& code, const std::string& decoder,
           const bel::ClassifierErrorModel& model, std::uint64_t samples,
           std::uint64_t seed, int streams) {
            const auto rep = bel::simulate(code, bel::decoder_from_name(decoder), model,
                                           samples, seed, streams);
            py::dict d;
            d["kind"] = bel::kind_name(rep.kind);
            d["decoder"] = bel::decoder_name(rep.decoder);
            d["levels"] = rep.levels;
            d["samples"] = rep.samples;
            d["seed"] = rep.seed;
            d["streams"] = rep.streams;
            d["rng"] = rep.rng;
            d["mean_abs_error"] = rep.mean_abs_error;
            d["std_error"] = rep.std_error;
            return d;
        },
        py::arg("code"), py::arg("decoder"), py::arg("model"), py::arg("samples"),
        py::arg("seed"), py::arg("streams") = 1);
}
