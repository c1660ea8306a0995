#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpalg/constructor.hpp"
#include "cpalg/finite/growth.hpp"
#include "cpalg/finite/group_table.hpp"
#include "cpalg/parser.hpp"

namespace py = pybind11;
using namespace cpalg;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
  return fraction_type(r.num(), r.den());
}

Rational rational_from(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<std::int64_t>());
  if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
    return Rational(obj.attr("numerator").cast<std::int64_t>(),
                    obj.attr("denominator").cast<std::int64_t>());
  throw py::type_error("expected an int, a 'p/q' string, or a fractions.Fraction");
}

finite::Family family_from(const std::string& name) { return finite::family_from_name(name); }

}  // namespace

PYBIND11_MODULE(_cpalg, m) {
  m.doc() = "exact commuting probabilities of connected linear algebraic groups";

  py::class_<GroupExpr>(m, "GroupExpr")
      .def_static("parse", [](const std::string& s) { return parse_group_expr(s); }, py::arg("text"))
      .def("dimension", &GroupExpr::dimension)
      .def("regular_rank", &GroupExpr::regular_rank)
      .def("probability", [](const GroupExpr& g) { return to_fraction(g.commuting_probability()); })
      .def("is_reductive", [](const GroupExpr& g) { return g.profile().is_reductive; })
      .def("is_nilpotent", [](const GroupExpr& g) { return g.profile().is_nilpotent; })
      .def("is_abelian", [](const GroupExpr& g) { return g.profile().is_abelian; })
      .def("__str__", &GroupExpr::str)
      .def("__repr__", [](const GroupExpr& g) { return "GroupExpr(\"" + g.str() + "\")"; })
      .def("__eq__", [](const GroupExpr& a, const GroupExpr& b) { return a == b; });

  m.def("parse", [](const std::string& s) { return parse_group_expr(s); }, py::arg("text"),
        "parse a group expression such as 'GL(2) x Gm^3'");
  m.def("probability",
        [](const std::string& s) { return to_fraction(parse_group_expr(s).commuting_probability()); },
        py::arg("text"), "commuting probability of an expression, as a Fraction");
  m.def("construct_reductive",
        [](const py::object& target) { return construct_reductive(rational_from(target)); },
        py::arg("target"));
  m.def("construct_nilpotent",
        [](const py::object& target) { return construct_nilpotent(rational_from(target)); },
        py::arg("target"));
  m.def("simple_groups_above",
        [](const py::object& threshold) { return simple_groups_above(rational_from(threshold)); },
        py::arg("threshold"));
  m.def("approach_target",
        [](const py::object& alpha, const py::object& eps) {
          return approach_target(rational_from(alpha), rational_from(eps));
        },
        py::arg("alpha"), py::arg("eps"));

  py::register_exception<ParseError>(m, "GroupParseError", PyExc_ValueError);

  py::class_<finite::FiniteGroupTable>(m, "FiniteGroup")
      .def(py::init([](const std::string& family, int n, unsigned q, std::uint64_t max_order) {
             return finite::FiniteGroupTable::enumerate(family_from(family), n,
                                                        static_cast<finite::Entry>(q), max_order);
           }),
           py::arg("family"), py::arg("n"), py::arg("q"),
           py::arg("max_order") = finite::FiniteGroupTable::kDefaultMaxOrder)
      .def_property_readonly("order", &finite::FiniteGroupTable::order)
      .def_property_readonly("name", &finite::FiniteGroupTable::name)
      .def("commuting_probability",
           [](const finite::FiniteGroupTable& t) { return to_fraction(t.commuting_probability()); })
      .def("commuting_pair_count", &finite::FiniteGroupTable::commuting_pair_count)
      .def("class_counts",
           [](const finite::FiniteGroupTable& t) {
             py::dict d;
             d["conjugacy"] = t.conjugacy_classes().block_count();
             d["z"] = finite::z_classes(t).block_count();
             d["iz"] = finite::iz_classes(t).block_count();
             d["dz"] = finite::dz_classes(t).block_count();
             return d;
           })
      .def("regular_element_count",
           [](const finite::FiniteGroupTable& t) { return finite::regular_elements(t).size(); })
      .def("centralizer_orders", [](const finite::FiniteGroupTable& t) {
        return t.analysis().centralizers.size;
      });

  m.def("growth_degree",
        [](const std::string& family, int n, const std::string& counter,
           const std::vector<unsigned>& primes, std::uint64_t max_order) {
          finite::Counter c;
          if (counter == "order")
            c = finite::Counter::order;
          else if (counter == "class_count")
            c = finite::Counter::class_count;
          else
            throw py::value_error("counter must be 'order' or 'class_count'");
          std::vector<finite::Entry> qs(primes.begin(), primes.end());
          return finite::growth_degree(family_from(family), n, c, qs, max_order);
        },
        py::arg("family"), py::arg("n"), py::arg("counter"), py::arg("primes"),
        py::arg("max_order") = finite::FiniteGroupTable::kDefaultMaxOrder);
}
