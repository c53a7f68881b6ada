// Python bindings: a thin, exact mirror of the C++ surface that the smoke
// tests and notebook exploration need — group construction, connection-set
// parsing, degree queries with field certificates, the circulant
// construction, theorem verification, and the eigenvalue-count bounds.
// Big integers cross the boundary as Python ints (via decimal strings).

#include "caydeg/construct.hpp"
#include "caydeg/degree.hpp"
#include "caydeg/graph.hpp"
#include "caydeg/group.hpp"
#include "caydeg/spectra.hpp"
#include "caydeg/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace caydeg;

namespace {

py::int_ to_py_int(const Int& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list poly_coeffs(const IntPoly& p) {
  py::list out;
  for (const Int& c : p.coeffs()) out.append(to_py_int(c));
  return out;
}

py::object field_to_py(const std::optional<SplittingFieldInfo>& f) {
  if (!f) return py::none();
  py::dict d;
  switch (f->kind) {
  case SplittingFieldInfo::Kind::rational: d["kind"] = "rational"; break;
  case SplittingFieldInfo::Kind::multiquadratic: d["kind"] = "multiquadratic"; break;
  case SplittingFieldInfo::Kind::partial: d["kind"] = "partial"; break;
  }
  d["degree"] = f->degree;
  d["lower_bound"] = f->lower_bound;
  py::list disc;
  for (const Int& v : f->discriminants) disc.append(to_py_int(v));
  d["discriminants"] = disc;
  if (f->kind == SplittingFieldInfo::Kind::partial) {
    d["witness_factor"] = poly_coeffs(f->witness);
    d["witness_display"] = f->witness.str();
  }
  d["display"] = f->str();
  return d;
}

py::dict degree_to_py(const DegreeResult& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["lower_bound"] = r.lower_bound;
  d["path"] = r.path;
  d["stabilizer"] = r.stabilizer;
  d["stab_modulus"] = r.stab_modulus;
  d["field"] = field_to_py(r.field);
  return d;
}

py::dict report_to_py(const VerificationReport& R) {
  py::dict d;
  d["theorem"] = R.theorem;
  d["search_space"] = R.search_space;
  d["match"] = R.match;
  d["verdict"] = R.match ? "match" : "mismatch";
  d["partial"] = R.partial;
  d["sets_scanned"] = R.sets_scanned;
  d["positives_checked"] = R.positives_checked;
  d["found"] = R.found;
  d["expected"] = R.expected;
  d["missing"] = R.missing;
  d["extra"] = R.extra;
  d["notes"] = R.notes;
  d["seconds"] = R.seconds;
  if (R.counterexample) {
    py::dict c;
    c["set"] = R.counterexample->set;
    c["set_members"] = R.counterexample->words;
    c["degree"] = degree_to_py(R.counterexample->degree);
    py::list fs;
    for (const auto& f : R.counterexample->factors) fs.append(f.str());
    c["factor_display"] = fs;
    d["counterexample"] = c;
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact algebraic degrees of Cayley graphs over finite groups";

  static py::exception<error> exc(m, "CaydegError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      const char* code = e.code() == errc::validation     ? "validation"
                         : e.code() == errc::cap_exceeded ? "cap_exceeded"
                                                          : "internal";
      exc((std::string(code) + ": " + e.what()).c_str());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_readonly("n", &FiniteGroup::n)
      .def_readonly("spec", &FiniteGroup::spec)
      .def_readonly("abelian", &FiniteGroup::abelian)
      .def_readonly("exponent", &FiniteGroup::exponent)
      .def_readonly("names", &FiniteGroup::names)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("power", &FiniteGroup::power)
      .def("element_order", &FiniteGroup::element_order)
      .def("parse_element", &FiniteGroup::parse_element)
      .def("__len__", [](const FiniteGroup& G) { return G.n; })
      .def("__repr__",
           [](const FiniteGroup& G) { return "<Group " + G.spec + ">"; });

  m.def("group", &parse_group_spec, py::arg("spec"),
        "build a group from its spec string (Z12, Z5xZ2, D10, GDih(Z5^2), G5, G250.1, ...)");
  m.def("parse_set", &parse_connection_set, py::arg("group"), py::arg("spec"),
        "parse a comma-separated connection set into sorted element indices");
  m.def("set_words", &set_to_words, py::arg("group"), py::arg("set"),
        "render a connection set as comma-separated element words");
  m.def("generates", &generates, py::arg("group"), py::arg("set"));

  m.def(
      "degree",
      [](const FiniteGroup& G, const std::vector<int>& S, bool with_field) {
        return degree_to_py(algebraic_degree(G, S, with_field));
      },
      py::arg("group"), py::arg("set"), py::arg("with_field") = true,
      "algebraic degree of Cay(group, set) with path and optional field certificate");

  m.def(
      "is_two_integral",
      [](const FiniteGroup& G, const std::vector<int>& S) {
        return algebraic_degree(G, S, false).degree == 2;
      },
      py::arg("group"), py::arg("set"));

  m.def(
      "char_poly",
      [](const FiniteGroup& G, const std::vector<int>& S) {
        return poly_coeffs(char_poly(build_cayley(G, S)));
      },
      py::arg("group"), py::arg("set"),
      "characteristic polynomial of Cay(group, set), coefficients low to high");

  m.def(
      "construct_p_integral_circulant",
      [](long n, long p) {
        CirculantResult r = construct_p_integral_circulant(n, p);
        py::dict d;
        d["n"] = r.n;
        d["p"] = r.p;
        d["set"] = r.set;
        d["unit_subgroup"] = r.K;
        d["degree"] = degree_to_py(r.degree);
        return d;
      },
      py::arg("n"), py::arg("p"),
      "inverse-closed generating circulant set over Z_n with degree exactly p");

  m.def(
      "odd_valency_lift",
      [](const FiniteGroup& G, const std::vector<int>& S) {
        LiftResult r = odd_valency_lift(G, S);
        py::dict d;
        d["set"] = r.set;
        d["added"] = r.added;
        d["degree"] = degree_to_py(r.degree);
        return d;
      },
      py::arg("group"), py::arg("set"));

  m.def(
      "verify",
      [](const std::string& theorem, std::optional<long> max_order) {
        if (theorem == "G2") return report_to_py(verify_G2(max_order.value_or(100)));
        if (theorem == "G3") return report_to_py(verify_G3(max_order.value_or(40)));
        if (theorem == "G4") return report_to_py(verify_G4(max_order.value_or(60)));
        if (theorem == "G5") return report_to_py(verify_G5(max_order.value_or(30)));
        if (theorem == "B2") return report_to_py(verify_B2_theorem());
        if (theorem == "B3") return report_to_py(verify_B3_theorem());
        if (theorem == "Z20" || theorem == "z20") return report_to_py(verify_z20_example());
        fail(errc::validation, "unknown theorem '" + theorem + "'");
      },
      py::arg("theorem"), py::arg("max_order") = py::none(),
      "run a classification-theorem verification and return its report");

  m.def(
      "verify_Bk",
      [](const FiniteGroup& G, int k) { return report_to_py(verify_Bk(G, k)); },
      py::arg("group"), py::arg("k"),
      "scan every inverse-closed set of size 2..k for a non-2-integral Cayley graph");

  m.def(
      "distinct_eigenvalue_bound",
      [](long k, long delta) { return to_py_int(distinct_eigenvalue_bound(k, delta)); },
      py::arg("k"), py::arg("delta"));
  m.def(
      "order_bound", [](long k, long delta) { return to_py_int(order_bound(k, delta)); },
      py::arg("k"), py::arg("delta"));
}
