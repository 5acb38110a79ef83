// Python bindings. Values cross the boundary in their text forms wrapped in
// small value classes, so Python sees the same grammar as the CLI.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bigfree/cayley.hpp"
#include "bigfree/combinatorial.hpp"
#include "bigfree/suite.hpp"
#include "bigfree/topology.hpp"
#include "bigfree/tree.hpp"
#include "bigfree/words.hpp"

namespace py = pybind11;
using namespace bigfree;

namespace {

std::string rational_text(const Rational& r) {
  return CoordTraits<Rational>::format(r);
}

}  // namespace

PYBIND11_MODULE(_bigfree, m) {
  m.doc() = "Exact computations in the big free group BF(omega)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InstanceMismatch>(m, "InstanceMismatch", PyExc_ValueError);
  py::register_exception<HalfError>(m, "HalfError", PyExc_ArithmeticError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  py::enum_<Alphabet>(m, "Alphabet")
      .value("omega", Alphabet::omega)
      .value("omega_plus_one", Alphabet::omega_plus_one);

  py::class_<LexVector>(m, "LexVector")
      .def(py::init([](const std::string& text, Alphabet a) { return parse_lex_vector(text, a); }),
           py::arg("text"), py::arg("alphabet") = Alphabet::omega)
      .def("__str__", [](const LexVector& x) { return to_string(x); })
      .def("__repr__", [](const LexVector& x) { return "LexVector('" + to_string(x) + "')"; })
      .def("sign", &LexVector::sign)
      .def("is_zero", &LexVector::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__", [](const LexVector& x) { return py::hash(py::str(to_string(x))); });
  m.def("half_exact", &half_exact);

  py::class_<Word>(m, "Word")
      .def(py::init([](const std::string& text, Alphabet a) { return Word::parse(text, a); }),
           py::arg("text") = "", py::arg("alphabet") = Alphabet::omega)
      .def("__str__", [](const Word& w) { return to_string(w); })
      .def("__repr__", [](const Word& w) { return "Word('" + to_string(w) + "')"; })
      .def("__len__", &Word::size)
      .def("is_reduced", &Word::is_reduced)
      .def("__mul__", [](const Word& w, const Word& v) { return multiply(w, v); })
      .def("inverse", [](const Word& w) { return inverse(w); })
      .def(py::self == py::self)
      .def("__hash__", [](const Word& w) { return py::hash(py::str(to_string(w))); });

  m.def("reduce", &reduce);
  m.def("multiply", &multiply);
  m.def("inverse", py::overload_cast<const Word&>(&inverse));
  m.def("length", &length_vector);
  m.def("word_dist", &word_dist);
  m.def("gromov", &gromov);
  m.def("common_prefix", &common_prefix);
  m.def("is_subword", &is_subword);
  m.def("subwords", &subwords);
  m.def("y_point", &y_point);
  m.def(
      "verify_cancellation",
      [](const Word& w, const std::string& pairs) -> std::optional<std::string> {
        const auto v = verify_cancellation(w, Cancellation::parse(pairs));
        if (!v) return std::nullopt;
        return to_string(v->condition);
      },
      "None if the pairing is a cancellation, else the first failing condition");
  m.def("apply_cancellation", [](const Word& w, const std::string& pairs) {
    return apply_cancellation(w, Cancellation::parse(pairs));
  });

  py::class_<TreePoint>(m, "TreePoint")
      .def(py::init([](const std::string& text, Alphabet a) { return TreePoint::parse(text, a); }),
           py::arg("text"), py::arg("alphabet") = Alphabet::omega)
      .def_static("vertex", &TreePoint::vertex)
      .def_property_readonly("n", &TreePoint::n)
      .def_property_readonly("g", &TreePoint::g)
      .def("__str__", [](const TreePoint& p) { return to_string(p); })
      .def("__eq__", &point_eq);
  m.def("tree_dist", &tree_dist);
  m.def("tree_act", &tree_act);

  m.def("to_triple", [](const TreePoint& p) { return to_string(to_triple(p)); },
        "Canonical triple of a tree point, in text form");
  m.def("from_triple", [](const std::string& e, Alphabet a) {
    return from_triple(parse_triple_point(e, a));
  }, py::arg("triple"), py::arg("alphabet") = Alphabet::omega);
  m.def("act_triple", [](const Word& u, const std::string& e) {
    return to_string(act_triple(u, parse_triple_point(e, u.alphabet())));
  });
  m.def("triple_dist", [](const std::string& x, const std::string& y) {
    const TripleDistance d = triple_dist(parse_triple_point(x), parse_triple_point(y));
    return py::make_tuple(d.exact, d.simplified);
  }, "Tree distance and the simplified formula's value");
  m.def("project", [](const std::string& e) { return to_string(project(parse_triple_point(e))); });
  m.def("circle_dist", [](const std::string& x, const std::string& y) {
    return circle_dist(CirclePoint::parse(x), CirclePoint::parse(y));
  });
  m.def("orbit_witness", [](const std::string& x, const std::string& y) {
    return orbit_witness(parse_triple_point(x), parse_triple_point(y));
  });
  m.def("omega_plus_one_edges", [](std::size_t depth) {
    std::vector<std::string> out;
    for (const auto& row : omega_plus_one_instability(depth)) {
      out.push_back(row.edge_letter ? to_string(*row.edge_letter) : std::string());
    }
    return out;
  });

  m.def("cayley_dist", [](const std::string& x, const std::string& y) {
    return to_string(cayley_dist(CayleyPoint::parse(x), CayleyPoint::parse(y)));
  });
  m.def("cayley_act", [](const Word& u, const std::string& x) {
    return to_string(cayley_act(u, CayleyPoint::parse(x, u.alphabet())));
  });
  m.def("embed_coincidences", [](const Word& w, std::uint32_t a, std::size_t grid) {
    const auto index = AlphabetIndex::letter(a);
    const auto r = embed_compare(w, index, rational_grid(grid), offset_grid(index, w.alphabet()));
    std::vector<std::pair<std::string, LexVector>> out;
    for (const auto& c : r.coincidences) out.emplace_back(rational_text(c.t), c.s);
    return out;
  }, py::arg("w"), py::arg("a"), py::arg("grid") = 100);
  m.def("cayley_height", [](const std::string& x) {
    return to_string(CayleyPoint::parse(x).height());
  });
  m.def("ball_json", [](const Word& center, std::size_t radius, std::uint32_t letters) {
    return ball_graph(center, radius, letters).to_json();
  });
  m.def("ball_dot", [](const Word& center, std::size_t radius, std::uint32_t letters) {
    return ball_graph(center, radius, letters).to_dot();
  });

  m.def("in_letter_ball", [](const Word& w, std::uint32_t a, const Word& v) {
    return in_letter_ball(w, AlphabetIndex::letter(a), v);
  });
  m.def("in_metric_ball", &in_metric_ball);

  m.def("run_check", [](const std::string& id, std::uint64_t seed, std::size_t samples) {
    SuiteOptions o;
    o.seed = seed;
    o.samples = samples;
    o.parallel = false;
    const CheckResult r = run_check(id, o);
    return py::make_tuple(r.passed, r.cases, r.detail);
  }, py::arg("id"), py::arg("seed") = SuiteOptions{}.seed, py::arg("samples") = 1000);
}
