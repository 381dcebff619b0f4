#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "refinemask/error.hpp"
#include "refinemask/refinement.hpp"
#include "refinemask/text.hpp"

namespace py = pybind11;
using namespace refinemask;

// Rational <-> fractions.Fraction. Python ints are accepted on input.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    const auto numbers = py::module_::import("numbers");
    if (!py::isinstance(src, numbers.attr("Rational"))) return false;
    const std::string num = py::str(src.attr("numerator"));
    const std::string den = py::str(src.attr("denominator"));
    value = Rational::parse(num + "/" + den);
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    const auto fraction = py::module_::import("fractions").attr("Fraction");
    const py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(r.numerator_str().c_str(), nullptr, 10)));
    const py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(r.denominator_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::vector<Rational>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m(r, c));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact refinable polynomials and their masks";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

  py::class_<Mask>(mod, "Mask")
      .def(py::init<>())
      .def(py::init<std::int64_t, std::vector<Rational>>(), py::arg("offset"), py::arg("coeffs"))
      .def_static("parse", [](const std::string& text) { return parse_mask(text); })
      .def_static("delta", &Mask::delta, py::arg("index") = 0, py::arg("value") = Rational(1))
      .def_property_readonly("offset", &Mask::offset)
      .def_property_readonly("coeffs", &Mask::coeffs)
      .def("is_zero", &Mask::is_zero)
      .def("__getitem__", [](const Mask& m, std::int64_t j) { return m[j]; })
      .def("__len__", &Mask::size)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const Mask& m, const Rational& c) { return c * m; })
      .def("__mul__", [](const Mask& a, const Mask& b) { return mask_convolve(a, b); })
      .def("__str__", &format_mask)
      .def("__repr__", [](const Mask& m) { return "Mask.parse('" + format_mask(m) + "')"; });

  py::class_<Polynomial>(mod, "Polynomial")
      .def(py::init<>())
      .def(py::init<std::vector<Rational>>(), py::arg("coeffs"))
      .def_static("parse", [](const std::string& text) { return parse_polynomial(text); })
      .def_property_readonly("coeffs", &Polynomial::coeffs)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("__call__", [](const Polynomial& p, const Rational& t) { return eval(p, t); })
      .def("derivative", &derivative)
      .def("antiderivative", &antiderivative)
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__rmul__", [](const Polynomial& p, const Rational& c) { return c * p; })
      .def("__str__", &format_polynomial)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial.parse('" + format_polynomial(p) + "')"; });

  py::class_<RefinablePair>(mod, "RefinablePair")
      .def(py::init<Mask, Polynomial>(), py::arg("mask"), py::arg("poly"))
      .def_property_readonly("mask", &RefinablePair::mask)
      .def_property_readonly("poly", &RefinablePair::poly)
      .def_property_readonly("degree", &RefinablePair::degree)
      .def("derivative", &derivative_pair)
      .def("antiderivative", &antiderivative_pair)
      .def(py::self == py::self);

  py::class_<CascadeReport>(mod, "CascadeReport")
      .def_readonly("result", &CascadeReport::result)
      .def_readonly("iterations", &CascadeReport::iterations)
      .def_readonly("final_delta", &CascadeReport::final_delta)
      .def_readonly("converged", &CascadeReport::converged);

  mod.def("mask_sum", &mask_sum);
  mod.def("poly_from_mask", &poly_from_mask, py::arg("mask"));
  mod.def("mask_from_poly", &mask_from_poly, py::arg("poly"));
  mod.def(
      "mask_from_poly_at_nodes",
      [](const Polynomial& p, const std::vector<std::int64_t>& nodes) { return mask_from_poly_at_nodes(p, nodes); },
      py::arg("poly"), py::arg("nodes"));
  mod.def("verify_refines", &verify_refines, py::arg("mask"), py::arg("poly"));
  mod.def("refine_apply", &refine_apply, py::arg("mask"), py::arg("poly"));
  mod.def(
      "refinement_matrix", [](const Mask& m, std::size_t n) { return matrix_rows(refinement_matrix(m, n)); },
      py::arg("mask"), py::arg("n"));
  mod.def("extend_mask", &extend_mask, py::arg("mask"), py::arg("v"), py::arg("n"));
  mod.def("equivalence_witness", &equivalence_witness);
  mod.def("masks_equivalent", &masks_equivalent);
  mod.def(
      "reduce_mod_difference",
      [](const Mask& m, int n) {
        auto d = reduce_mod_difference(m, n);
        return py::make_tuple(d.remainder, d.quotient);
      },
      py::arg("mask"), py::arg("n"));
  mod.def(
      "antiderivative_constant",
      [](const Mask& m, const Polynomial& phi) -> py::object {
        const auto c = antiderivative_constant(m, phi);
        switch (c.kind) {
          case IntegrationConstant::Kind::unique:
            return py::cast(*c.value);
          case IntegrationConstant::Kind::arbitrary:
            return py::str("arbitrary");
          case IntegrationConstant::Kind::none:
            break;
        }
        return py::none();
      },
      py::arg("mask"), py::arg("phi"),
      "The unique constant as a Fraction, 'arbitrary' when any constant works, None when none does.");
  mod.def(
      "cascade",
      [](const Mask& m, const std::optional<Polynomial>& p0, std::size_t max_iter, const Rational& tol) {
        return p0 ? cascade(m, *p0, max_iter, tol) : cascade(m, max_iter, tol);
      },
      py::arg("mask"), py::arg("p0") = py::none(), py::arg("max_iter") = 200, py::arg("tol") = Rational::pow2(-40));
}
