// Copyright 2026 The conid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings: module conid._core. Rationals cross the boundary as
// fractions.Fraction; domain errors raise conid.ConidError.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "conid/channel.hpp"
#include "conid/cli.hpp"
#include "conid/combinatorics.hpp"
#include "conid/contextuality.hpp"
#include "conid/error.hpp"
#include "conid/graph.hpp"
#include "conid/identification.hpp"
#include "conid/newman.hpp"
#include "conid/quantum.hpp"

namespace py = pybind11;
using namespace conid;

namespace {

py::object fraction(const Rational &q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(q));
}

Rational rational_from(const py::handle &h) {
    return parse_rational(py::str(h).cast<std::string>());
}

py::list fractions(const std::vector<Rational> &v) {
    py::list out;
    for (const auto &q : v) {
        out.append(fraction(q));
    }
    return out;
}

Channel make_channel(std::vector<std::string> inputs, std::vector<std::string> outputs, const py::sequence &matrix) {
    std::vector<std::vector<Rational>> m;
    for (const auto &row : matrix) {
        std::vector<Rational> r;
        for (const auto &v : py::reinterpret_borrow<py::sequence>(row)) {
            r.push_back(rational_from(v));
        }
        m.push_back(std::move(r));
    }
    return Channel(std::move(inputs), std::move(outputs), std::move(m));
}

VectorSystem make_system(std::size_t dim, const py::sequence &vectors, std::vector<std::vector<std::size_t>> contexts,
                         std::vector<std::string> labels) {
    VectorSystem vs;
    vs.dim = dim;
    for (const auto &vec : vectors) {
        ComplexVector v;
        for (const auto &z : py::reinterpret_borrow<py::sequence>(vec)) {
            if (py::isinstance<py::int_>(z)) {
                v.push_back({z.cast<std::int64_t>(), 0});
            } else {
                const auto c = z.cast<std::complex<double>>();
                v.push_back({static_cast<std::int64_t>(c.real()), static_cast<std::int64_t>(c.imag())});
                if (static_cast<double>(v.back().re) != c.real() || static_cast<double>(v.back().im) != c.imag()) {
                    throw Error(ErrorCode::invalid_parameter, "coordinates must be Gaussian integers");
                }
            }
        }
        vs.vectors.push_back(std::move(v));
    }
    vs.contexts = std::move(contexts);
    vs.labels = std::move(labels);
    vs.validate();
    return vs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact conclusive-identification toolkit";
    m.attr("__version__") = cli::kVersion;

    static py::handle error_type = py::exception<Error>(m, "ConidError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object err = error_type(e.what());
            err.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), err.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<Edge> &edges, bool self_loops) {
                 return Graph::from_edges(n, edges, self_loops);
             }),
             py::arg("n"), py::arg("edges") = std::vector<Edge>{}, py::arg("self_loops") = false)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("self_loops", &Graph::has_self_loops)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("with_self_loops", &Graph::with_self_loops)
        .def("complement", &Graph::complement)
        .def("induced", [](const Graph &g, std::vector<Vertex> vs) { return g.induced(vs); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph &g) {
            std::ostringstream os;
            os << "Graph(n=" << g.vertex_count() << ", edges=" << g.edge_count()
               << (g.has_self_loops() ? ", self_loops=True)" : ")");
            return os.str();
        });

    m.def("family", &family_from_spec, py::arg("spec"), "Named family, e.g. 'wheel:7' or 'turan:6,2'");
    m.def("pentagon_variant", &pentagon_variant);
    m.def("diameter", &diameter);
    m.def("strong_product", &strong_product);
    m.def("conormal_product", &conormal_product);
    m.def("conormal_power", &conormal_power);

    m.def("independence_number", [](const Graph &g) { return independence_number(g).vertices; });
    m.def("clique_number", [](const Graph &g) { return clique_number(g).vertices; });
    m.def("chromatic_number", [](const Graph &g) {
        const auto r = chromatic_number(g);
        return py::make_tuple(r.chromatic, r.witness.color);
    });
    m.def("fractional_chromatic", [](const Graph &g) { return fraction(fractional_chromatic(g).value); });

    py::class_<Channel>(m, "Channel")
        .def(py::init(&make_channel), py::arg("inputs"), py::arg("outputs"), py::arg("matrix"),
             "matrix[y][x] = P(y|x); entries are int, str 'p/q' or Fraction")
        .def_property_readonly("inputs", &Channel::inputs)
        .def_property_readonly("outputs", &Channel::outputs)
        .def("probability", [](const Channel &c, std::size_t y, std::size_t x) { return fraction(c.probability(y, x)); })
        .def_property_readonly("matrix",
                               [](const Channel &c) {
                                   py::list rows;
                                   for (const auto &r : c.matrix()) {
                                       rows.append(fractions(r));
                                   }
                                   return rows;
                               })
        .def(py::self == py::self);

    m.def("canonical_channel", &canonical_channel, py::arg("graph"), py::arg("labels") = std::vector<std::string>{});
    m.def("identity_channel", &identity_channel);
    m.def("support_graph", &support_graph);
    m.def("confusability_graph", &confusability_graph);
    m.def("is_snfc", [](const Channel &c) { return validate_snfc(c).passes(); });

    py::class_<IdentificationScheme>(m, "IdentificationScheme")
        .def_readonly("partition", &IdentificationScheme::partition)
        .def_readonly("class_count", &IdentificationScheme::class_count)
        .def_readonly("decision", &IdentificationScheme::decision);

    m.def("ci_unassisted", [](const Channel &c) { return ci_unassisted(c).inputs; });
    m.def("scheme_from_coloring", [](const Channel &c, std::vector<std::size_t> colors) {
        Coloring col;
        col.color_count = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
        col.color = std::move(colors);
        return scheme_from_coloring(c, col);
    });
    m.def("verify_scheme", [](const Channel &c, const IdentificationScheme &s) {
        const auto r = verify_scheme(c, s);
        py::list fa;
        for (const auto &f : r.false_accepts) {
            fa.append(py::make_tuple(f.input, f.output, f.declared));
        }
        return py::dict(py::arg("identified_count") = r.identified_count, py::arg("identified") = r.identified,
                        py::arg("false_accepts") = fa);
    });
    m.def("assisted_ci", [](const Channel &c, std::size_t k) {
        const auto r = assisted_ci(c, k);
        return py::make_tuple(r.identified, r.partition);
    });
    m.def("min_classical_assistance", [](const Channel &c) {
        const auto r = min_classical_assistance(c);
        return py::dict(py::arg("chromatic") = r.chromatic, py::arg("coloring") = r.coloring.color,
                        py::arg("oracle") = r.oracle);
    });
    m.def("zero_error_index", [](const Channel &c) { return zero_error_index(c).alpha; });
    m.def("superactivation_gap", &superactivation_gap);
    m.def(
        "simulate",
        [](const Channel &c, const IdentificationScheme &s, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
            const auto r = simulate_protocol(c, s, {trials, seed, workers});
            py::list rows;
            for (const auto &in : r.inputs) {
                rows.append(py::dict(py::arg("input") = c.inputs()[in.input], py::arg("trials") = in.trials,
                                     py::arg("conclusive") = in.conclusive, py::arg("inconclusive") = in.inconclusive,
                                     py::arg("false_accepts") = in.false_accepts,
                                     py::arg("expected_conclusive_rate") = fraction(in.expected_conclusive_rate)));
            }
            return rows;
        },
        py::arg("channel"), py::arg("scheme"), py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("workers") = 1);

    py::class_<VectorSystem>(m, "VectorSystem")
        .def(py::init(&make_system), py::arg("dim"), py::arg("vectors"),
             py::arg("contexts") = std::vector<std::vector<std::size_t>>{},
             py::arg("labels") = std::vector<std::string>{})
        .def_readonly("dim", &VectorSystem::dim)
        .def_readonly("contexts", &VectorSystem::contexts)
        .def("__len__", &VectorSystem::size)
        .def("label", &VectorSystem::label)
        .def_property_readonly("vectors", [](const VectorSystem &vs) {
            py::list out;
            for (const auto &v : vs.vectors) {
                py::list row;
                for (const auto &z : v) {
                    row.append(z.im == 0 ? py::object(py::int_(z.re))
                                         : py::object(py::cast(std::complex<double>(z.re, z.im))));
                }
                out.append(row);
            }
            return out;
        });

    m.def("builtin_system", [](const std::string &name) { return builtin_system(name).system; });
    m.def("orthogonality_graph", py::overload_cast<const VectorSystem &>(&orthogonality_graph));
    m.def("tensor_product", &tensor_product);
    m.def("hadamard_clique", &hadamard_clique);
    m.def("is_orthogonal_representation",
          [](const VectorSystem &vs, const Graph &g) { return is_orthogonal_representation(vs, g).ok; });
    m.def("certify_orthogonal_rank", [](const Graph &g, const VectorSystem &vs) {
        const auto r = certify_orthogonal_rank(g, vs);
        return py::make_tuple(r.lower, r.upper, r.tight);
    });
    m.def("quantum_protocol_outcome",
          [](const VectorSystem &vs, std::size_t x, std::size_t y) { return fraction(quantum_protocol_outcome(vs, x, y)); });
    m.def("quantum_assisted_ci", [](const Channel &c, const VectorSystem &vs) { return quantum_assisted_ci(c, vs).identified; });

    m.def("ks_colorable", [](const VectorSystem &vs) -> py::object {
        const auto r = ks_colorable(KSSystem(vs));
        if (!r.colorable) {
            return py::none();
        }
        return py::cast(std::vector<int>(r.assignment.begin(), r.assignment.end()));
    });
    m.def("parity_obstruction", [](const VectorSystem &vs) { return parity_obstruction(KSSystem(vs)); });

    m.def("newman_graph", &newman_graph);
    m.def("newman_qa_bound", [](std::size_t d) {
        const auto r = newman_qa_bound(d);
        return py::dict(py::arg("d") = r.d, py::arg("diameter") = r.diameter, py::arg("alpha") = r.alpha,
                        py::arg("alpha_cap") = r.alpha_cap, py::arg("chi_lower_bound") = r.qa.chi,
                        py::arg("qa_lower_bound") = r.qa.qa_lower_bound ? fraction(*r.qa.qa_lower_bound) : py::none(),
                        py::arg("target") = fraction(r.target), py::arg("bound_holds") = r.bound_holds);
    });

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end in-process; returns (exit code, stdout, stderr).");
}
