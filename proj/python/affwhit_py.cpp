// Python bindings.  Rationals cross the boundary as fractions.Fraction on the
// way out and as anything whose str() is "p" or "p/q" on the way in.
// Reports are handed over as JSON text and decoded in affwhit/__init__.py.

#include "affwhit/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace affwhit;
using literals::json;

namespace {

Scalar to_scalar(const py::handle& h) { return parse_scalar(py::str(h).cast<std::string>()); }

py::object to_fraction(const Scalar& s) {
    return py::module_::import("fractions").attr("Fraction")(to_string(s));
}

std::map<seq::Index, Scalar> index_map(const py::dict& d) {
    std::map<seq::Index, Scalar> out;
    for (const auto& [k, v] : d) out[k.cast<seq::Index>()] = to_scalar(v);
    return out;
}

config::RunConfig resolve(const std::string& source) {
    for (const auto& name : config::preset_names())
        if (name == source) return config::preset(name);
    return config::parse_config(json::parse(source));
}

void override_truncation(config::RunConfig& c, std::optional<int> D, std::optional<int> E, std::optional<int> J) {
    if (D) c.truncation.max_degree = *D;
    if (E) c.truncation.max_exponent = *E;
    if (J) c.truncation.condition_window = *J;
}

} // namespace

PYBIND11_MODULE(_affwhit, m) {
    m.doc() = "Exact computations with induced Whittaker modules over affine sl(n)";

    py::register_exception<Error>(m, "AffwhitError", PyExc_ValueError);

    py::class_<seq::BiSequence>(m, "Sequence")
        .def_static("finite", [](const py::dict& d) { return seq::BiSequence::finite(index_map(d)); })
        .def_static("delta", [](seq::Index at) { return seq::BiSequence::delta(at); })
        .def_static("geometric", [](const py::object& j) { return seq::BiSequence::geometric(to_scalar(j)); })
        .def_static("constant", [](const py::object& c) { return seq::BiSequence::constant(to_scalar(c)); })
        .def_static("recurrence",
                    [](const py::dict& v, const std::vector<py::object>& initial) {
                        std::vector<Scalar> init;
                        for (const auto& x : initial) init.push_back(to_scalar(x));
                        return seq::BiSequence::recurrence(seq::FinVector(index_map(v)), init);
                    })
        .def_static("from_literal",
                    [](const std::string& text) { return literals::parse_sequence(json::parse(text)); })
        .def("literal", [](const seq::BiSequence& s) { return literals::to_literal(s).dump(); })
        .def("entry", [](const seq::BiSequence& s, seq::Index i) { return to_fraction(s.entry(i)); })
        .def("translate", [](const seq::BiSequence& s, seq::Index n) { return seq::translate(s, n); })
        .def("weighted", [](const seq::BiSequence& s) { return seq::weighted(s); })
        .def("is_generic",
             [](const seq::BiSequence& s) {
                 const auto v = seq::is_generic(s);
                 return py::make_tuple(seq::to_string(v.kind),
                                       v.witness ? py::object(py::str(v.witness->str())) : py::none());
             })
        .def("size", [](const seq::BiSequence& s) { return seq::size(s); })
        .def("__repr__", [](const seq::BiSequence& s) { return "Sequence(" + literals::describe(s) + ")"; });

    m.def("pairing", [](const seq::BiSequence& x, const seq::BiSequence& y) { return to_fraction(seq::pairing(x, y)); });
    m.def("is_strongly_generic_set", [](const std::vector<seq::BiSequence>& q) {
        const auto v = seq::is_strongly_generic_set(q);
        return py::make_tuple(seq::to_string(v.kind), v.reason);
    });
    m.def(
        "window_rank_check",
        [](const std::vector<seq::BiSequence>& q, seq::Index S, seq::Index W, bool weighted) {
            const auto r = seq::window_rank_check(q, S, W, weighted);
            return py::make_tuple(r.full_rank, r.rank, r.count);
        },
        py::arg("sequences"), py::arg("S"), py::arg("W"), py::arg("weighted") = true);

    m.def(
        "bracket",
        [](const std::string& x, const std::string& y, int rank, std::vector<int> levi, const std::string& cocycle) {
            config::RunConfig c;
            c.rank = rank;
            c.levi = std::set<int>(levi.begin(), levi.end());
            c.cocycle = affine::parse_cocycle(cocycle);
            return report::bracket(c, x, y).at("result").get<std::string>();
        },
        py::arg("x"), py::arg("y"), py::arg("rank") = 1, py::arg("levi") = std::vector<int>{},
        py::arg("cocycle") = "standard");

    m.def("presets", [] { return config::preset_names(); });
    m.def("_describe", [](const std::string& source) { return report::describe(resolve(source)).dump(); });
    m.def("_check_sequences",
          [](const std::string& source) { return report::check_sequences(resolve(source)).dump(); });
    m.def(
        "_whittaker",
        [](const std::string& source, std::optional<int> D, std::optional<int> E, std::optional<int> J) {
            auto c = resolve(source);
            override_truncation(c, D, E, J);
            py::gil_scoped_release release;
            return report::whittaker(c).report.dump();
        },
        py::arg("source"), py::arg("D") = py::none(), py::arg("E") = py::none(), py::arg("J") = py::none());
    m.def(
        "_tensor",
        [](const std::string& a, const std::string& b, std::optional<int> D, std::optional<int> E,
           std::optional<int> J) {
            auto ca = resolve(a);
            auto cb = resolve(b);
            override_truncation(ca, D, E, J);
            py::gil_scoped_release release;
            return report::tensor(ca, cb).report.dump();
        },
        py::arg("a"), py::arg("b"), py::arg("D") = py::none(), py::arg("E") = py::none(),
        py::arg("J") = py::none());
}
