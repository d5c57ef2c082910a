#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lcdawg/errors.hpp"
#include "lcdawg/index.hpp"
#include "lcdawg/measures.hpp"
#include "lcdawg/persistence.hpp"
#include "lcdawg/slp.hpp"

namespace py = pybind11;
using namespace lcdawg;

namespace {

py::dict to_dict(const IndexStats& s) {
    py::dict d;
    d["n"] = s.n;
    d["sigma"] = s.sigma;
    d["mu"] = s.mu;
    d["e_r"] = s.e_r;
    d["e_l"] = s.e_l;
    d["e_tilde"] = s.e_tilde;
    d["type1_count"] = s.type1_count;
    d["type2_count"] = s.type2_count;
    d["edge_count"] = s.edge_count;
    d["production_count"] = s.production_count;
    d["grammar_height"] = s.grammar_height;
    if (s.z) d["z"] = *s.z;
    if (s.r) d["r"] = *s.r;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-index over byte strings";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<BoundsError>(m, "BoundsError", base.ptr());
    py::register_exception<FormatError>(m, "FormatError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    py::class_<Index>(m, "Index")
        .def_static(
            "build",
            [](const std::string& data, bool check) {
                Text text = Text::from_string(data);
                py::gil_scoped_release release;
                return Index::build(text, {.check_fingerprints = check});
            },
            py::arg("data"), py::arg("check") = true,
            "Index `data` (bytes, or str encoded as UTF-8). Zero bytes are rejected.")
        .def_static("load", [](const std::string& path) { return load_index(path); }, py::arg("path"))
        .def_static(
            "from_bytes",
            [](const py::bytes& b) {
                std::string_view view = b;
                return deserialize(as_symbols(view));
            },
            py::arg("data"))
        .def("save", [](const Index& idx, const std::string& path) { save_index(idx, path); }, py::arg("path"))
        .def("to_bytes",
             [](const Index& idx) {
                 auto bytes = serialize(idx);
                 return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
             })
        .def_property_readonly("n", &Index::size)
        .def_property_readonly("sigma", &Index::sigma)
        .def("__len__", &Index::size)
        .def(
            "find", [](const Index& idx, const std::string& p) { return idx.find(std::string_view(p)); },
            py::arg("pattern"), "Sorted 1-based start positions of `pattern`.")
        .def(
            "count", [](const Index& idx, const std::string& p) { return idx.count(std::string_view(p)); },
            py::arg("pattern"))
        .def(
            "exists", [](const Index& idx, const std::string& p) { return idx.exists(std::string_view(p)); },
            py::arg("pattern"))
        .def("__contains__", [](const Index& idx, const std::string& p) { return idx.exists(std::string_view(p)); })
        .def(
            "extract",
            [](const Index& idx, std::uint64_t pos, std::uint64_t length) {
                return py::bytes(idx.extract(pos, length));
            },
            py::arg("pos"), py::arg("length"), "Bytes T[pos .. pos+length-1], 1-based, clipped at the end.")
        .def(
            "stats",
            [](const Index& idx, bool lz, bool bwt_runs) { return to_dict(measure_index(idx, {lz, bwt_runs})); },
            py::arg("lz") = false, py::arg("bwt_runs") = false)
        .def("grammar",
             [](const Index& idx) {
                 std::ostringstream out;
                 write_grammar(idx.slp(), out);
                 return out.str();
             })
        .def("__eq__", [](const Index& a, const Index& b) { return a == b; })
        .def("__repr__", [](const Index& idx) {
            return "<lcdawg.Index n=" + std::to_string(idx.size()) + " nodes=" +
                   std::to_string(idx.graph().node_count()) + " edges=" + std::to_string(idx.graph().edge_count()) +
                   ">";
        });

    m.def(
        "measure",
        [](const std::string& data, bool lz, bool bwt_runs) {
            return to_dict(measure_text(Text::from_string(data), {lz, bwt_runs}));
        },
        py::arg("data"), py::arg("lz") = false, py::arg("bwt_runs") = false,
        "Repetitiveness measures of `data` and size figures of its index.");
}
