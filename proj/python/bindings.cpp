#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "kntw/errors.hpp"
#include "kntw/exact_treewidth.hpp"
#include "kntw/pace_io.hpp"
#include "kntw/separators.hpp"
#include "kntw/subsets.hpp"
#include "kntw/theorems.hpp"
#include "kntw/tree_decomposition.hpp"

namespace py = pybind11;
using namespace kntw;

namespace {

py::object to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

// Accepts "num/den", int or fractions.Fraction. Floats are refused on purpose.
Rational to_rational(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    if (py::isinstance<py::float_>(obj) || !py::hasattr(obj, "numerator") || !py::hasattr(obj, "denominator"))
        throw py::type_error("expected an int, a fractions.Fraction or a 'num/den' string");
    BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
    BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
    return Rational(num, den);
}

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions")
        .attr("Fraction")(to_py(boost::multiprecision::numerator(r)), to_py(boost::multiprecision::denominator(r)));
}

VertexSet to_set(const std::vector<int>& vs, std::size_t n) {
    VertexSet s(n);
    for (int v : vs) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw InvalidInput("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        s.insert(static_cast<std::size_t>(v));
    }
    return s;
}

py::dict tw_dict(const TwResult& r) {
    py::dict d;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["exact"] = r.is_exact();
    if (r.certificate)
        d["certificate"] = *r.certificate;
    else
        d["certificate"] = py::none();
    return d;
}

py::dict verdict_dict(const FormulaVerdict& v) {
    py::dict d;
    d["predicted_tw"] = to_py(v.predicted_tw);
    d["applicable"] = v.applicable;
    d["threshold_used"] = v.threshold_used;
    d["regime"] = v.regime;
    return d;
}

Budget budget(double seconds) {
    Budget b;
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Treewidth of Kneser-type graphs: generators, exact solvers, certificates";

    static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InvalidInput& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ResourceError& e) {
            resource_error(e.what());
        } catch (const ParseError& e) {
            parse_error(e.what());
        }
    });

    m.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(binomial(n, k)); });

    m.def(
        "colex_rank",
        [](const std::vector<int>& elements, int n) { return colex_rank(KSubset::from_elements(n, elements)); },
        py::arg("elements"), py::arg("n"), "1-based colex rank of a subset of {1..n}.");
    m.def(
        "colex_unrank", [](std::uint64_t rank, int n, int k) { return colex_unrank(rank, n, k).elements(); },
        py::arg("rank"), py::arg("n"), py::arg("k"));
    m.def("min_shadow_size", &min_shadow_size, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("g"));
    m.def(
        "shadow",
        [](const std::vector<std::vector<int>>& family, int n, int g) {
            std::vector<KSubset> members;
            for (const auto& f : family) members.push_back(KSubset::from_elements(n, f));
            std::vector<std::vector<int>> out;
            for (const auto& s : shadow(SetFamily(n, members), g)) out.push_back(s.elements());
            return out;
        },
        py::arg("family"), py::arg("n"), py::arg("g"), "g-shadow of a family of subsets of {1..n}, colex order.");

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("num_vertices") = 0)
        .def_static("from_edges", &Graph::from_edges, py::arg("num_vertices"), py::arg("edges"))
        .def("add_edge", &Graph::add_edge)
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
        .def("edges", &Graph::edges)
        .def_property_readonly("family", [](const Graph& g) { return g.family().describe(); })
        .def_property_readonly("labels",
                               [](const Graph& g) -> py::object {
                                   if (!g.labels()) return py::none();
                                   py::list out;
                                   for (const auto& s : *g.labels()) out.append(s.elements());
                                   return out;
                               })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + g.family().describe() + " |V|=" + std::to_string(g.num_vertices()) +
                   " |E|=" + std::to_string(g.num_edges()) + ">";
        });

    m.def(
        "generalized_kneser",
        [](int n, int k, int t, std::size_t cap) { return build_generalized_kneser({n, k, t}, GraphLimits{cap}); },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("max_vertices") = GraphLimits{}.max_vertices);
    m.def(
        "johnson", [](int n, int k, std::size_t cap) { return build_johnson(n, k, GraphLimits{cap}); },
        py::arg("n"), py::arg("k"), py::arg("max_vertices") = GraphLimits{}.max_vertices);
    m.def(
        "johnson_complement",
        [](int n, int k, std::size_t cap) { return build_johnson_complement(n, k, GraphLimits{cap}); },
        py::arg("n"), py::arg("k"), py::arg("max_vertices") = GraphLimits{}.max_vertices);
    m.def("complement", &complement);
    m.def("degree_formula", [](int n, int k, int t) { return to_py(degree_formula({n, k, t})); });
    m.def("ekr_independence_number", [](int n, int k, int t) {
        auto b = ekr_independence_number({n, k, t});
        return py::make_tuple(to_py(b.value), b.applicable);
    });
    m.def("maximum_independent_set", [](const Graph& g) { return maximum_independent_set(g).to_vector(); });
    m.def("ekr_star_family", [](const Graph& g) { return ekr_star_family(g).to_vector(); });

    py::class_<TreeDecomposition>(m, "TreeDecomposition")
        .def(py::init([](std::size_t n, const std::vector<std::vector<int>>& bags,
                         std::vector<std::pair<int, int>> edges) {
                 std::vector<VertexSet> sets;
                 for (const auto& b : bags) sets.push_back(to_set(b, n));
                 return TreeDecomposition(n, std::move(sets), std::move(edges));
             }),
             py::arg("host_vertices"), py::arg("bags"), py::arg("tree_edges"))
        .def_property_readonly("host_vertices", &TreeDecomposition::host_vertices)
        .def_property_readonly("bags",
                               [](const TreeDecomposition& td) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& b : td.bags()) out.push_back(b.to_vector());
                                   return out;
                               })
        .def_property_readonly("tree_edges", &TreeDecomposition::tree_edges)
        .def_property_readonly("width", [](const TreeDecomposition& td) { return width(td); });

    m.def(
        "validate",
        [](const TreeDecomposition& td, const Graph& g) {
            auto v = validate(td, g);
            return py::make_tuple(v.valid(), v.message);
        },
        "Returns (valid, message).");
    m.def("star_decomposition", [](const Graph& g, const std::vector<int>& s) {
        return build_star_decomposition(g, to_set(s, g.num_vertices()));
    });
    m.def("six_bag_decomposition", [](const std::string& which) {
        SixBagVariant v;
        if (which == "J53c")
            v = SixBagVariant::J53c;
        else if (which == "J63c")
            v = SixBagVariant::J63c;
        else
            throw InvalidInput("variant must be 'J53c' or 'J63c'");
        auto d = build_six_bag_decomposition(v);
        return py::make_tuple(d.graph, d.decomposition);
    });
    m.def("decomposition_from_elimination_order", &decomposition_from_elimination_order);

    m.def(
        "exact_tw",
        [](const Graph& g, double seconds) {
            TwResult r;
            {
                py::gil_scoped_release unlocked;
                r = exact_tw(g, budget(seconds));
            }
            return tw_dict(r);
        },
        py::arg("graph"), py::arg("time_limit") = 60.0);
    m.def("upper_bound_heuristic", [](const Graph& g) { return tw_dict(upper_bound_heuristic(g)); });
    m.def("lower_bound", &lower_bound);
    m.def("degeneracy", &degeneracy);

    m.def(
        "check_p_separator",
        [](const Graph& g, const std::vector<int>& x, const py::object& p) {
            auto r = check_p_separator(g, to_set(x, g.num_vertices()), to_rational(p));
            py::dict d;
            d["balanced"] = r.balanced;
            d["component_sizes"] = r.component_sizes;
            std::vector<std::vector<int>> comps;
            for (const auto& c : r.components) comps.push_back(c.to_vector());
            d["components"] = comps;
            d["p"] = to_fraction(r.p);
            return d;
        },
        py::arg("graph"), py::arg("separator"), py::arg("p"));
    m.def(
        "min_p_separator_order",
        [](const Graph& g, const py::object& p) { return min_p_separator_order(g, to_rational(p)); },
        py::arg("graph"), py::arg("p"));

    m.def("tw_formula_gkneser", [](int n, int k, int t) { return verdict_dict(tw_formula_gkneser({n, k, t})); });
    m.def("tw_formula_johnson_complement",
          [](int n, int k) { return verdict_dict(tw_formula_johnson_complement(n, k)); });
    m.def("kneser_threshold", [](int k, int t) { return to_py(kneser_threshold(k, t)); });
    m.def("star_concentration_inequality", [](int n, int k, int t) { return star_concentration_inequality({n, k, t}); });
    m.def("separator_balance_inequality", [](int n, int k, int t, const py::object& p) {
        return separator_balance_inequality({n, k, t}, to_rational(p));
    });
    m.def("upper_bound_dominance", [](int n, int k, int t) { return upper_bound_dominance({n, k, t}); });

    m.def("read_gr", [](const std::string& text) { return read_gr(text).graph; });
    m.def("write_gr", py::overload_cast<const Graph&>(&write_gr));
    m.def("read_td", [](const std::string& text) { return read_td(text).decomposition; });
    m.def("write_td", [](const TreeDecomposition& td) { return write_td(td); });
}
