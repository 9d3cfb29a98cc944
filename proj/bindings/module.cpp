#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "piharmonic/catalog.hpp"
#include "piharmonic/errors.hpp"
#include "piharmonic/wz.hpp"

namespace py = pybind11;
using namespace piharmonic;

namespace {

py::dict to_dict(const VerifyReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["anchor"] = r.anchor;
  d["digits_requested"] = r.digits_requested;
  d["digits_matched"] = r.digits_matched;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["terms"] = r.terms;
  d["method"] = r.method;
  d["pass"] = r.pass;
  d["ms"] = r.ms;
  return d;
}

int checked_digits(int digits) {
  if (digits < 5) throw DomainError("digits must be at least 5");
  if (digits > 2000) throw DomainError("digits is capped at 2000");
  return digits;
}

}  // namespace

PYBIND11_MODULE(_piharmonic, m) {
  m.doc() = "arbitrary-precision verification of harmonic-number series for 1/pi";

  py::register_exception<Error>(m, "Error");

  m.def("record_ids", [] {
    std::vector<std::string> out;
    for (const auto& r : catalog_records()) out.push_back(r.id);
    return out;
  });
  m.def("family_ids", [] {
    std::vector<std::string> out;
    for (const auto& f : catalog_families()) out.push_back(f.id);
    return out;
  });
  m.def("record_anchor",
        [](const std::string& id) { return catalog_record(id).anchor; }, py::arg("id"));
  m.def("rhs_string",
        [](const std::string& id) { return catalog_record(id).rhs.to_string(); },
        py::arg("id"));

  m.def(
      "verify",
      [](const std::string& id, int digits) {
        return to_dict(verify_record(id, checked_digits(digits)));
      },
      py::arg("id"), py::arg("digits") = 40);
  m.def(
      "verify_all",
      [](int digits) {
        checked_digits(digits);
        py::list out;
        for (const auto& r : catalog_records()) out.append(to_dict(verify_record(r, digits)));
        return out;
      },
      py::arg("digits") = 40);

  m.def(
      "verify_family",
      [](const std::string& id, const std::string& value, int digits, bool derivative) {
        const ParamFamily& f = catalog_family(id);
        Rational p0 = Rational::parse(value);
        checked_digits(digits);
        return to_dict(derivative ? verify_family_derivative_point(f, p0, digits)
                                  : verify_family_point(f, p0, digits));
      },
      py::arg("id"), py::arg("value"), py::arg("digits") = 40,
      py::arg("derivative") = false);

  m.def(
      "central_difference",
      [](const std::string& id, const std::string& value) {
        CentralDiffReport r =
            central_difference_check(catalog_family(id), Rational::parse(value));
        py::dict d;
        d["id"] = r.id;
        d["at"] = r.at.to_string();
        d["agree"] = r.agree;
        d["numeric"] = r.numeric;
        d["analytic"] = r.analytic;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("id"), py::arg("value"));

  m.def(
      "transform",
      [](const std::string& kind, const std::string& a, const std::string& b,
         const std::string& c, const std::string& d, const std::string& e, int digits) {
        TransformTuple t{Rational::parse(a), Rational::parse(b), Rational::parse(c),
                         Rational::parse(d), Rational::parse(e)};
        return to_dict(verify_transformation(kind, t, checked_digits(digits)));
      },
      py::arg("kind"), py::arg("a") = "1/2", py::arg("b") = "1/2", py::arg("c") = "1/2",
      py::arg("d") = "1/2", py::arg("e") = "1/3", py::arg("digits") = 30);

  m.def(
      "combinations",
      [](int digits) {
        py::list out;
        for (const auto& r : combination_checks(checked_digits(digits))) {
          py::dict d;
          d["id"] = r.id;
          d["term_level_pass"] = r.term_level_pass;
          d["terms_checked"] = r.terms_checked;
          d["digits_matched"] = r.digits_matched;
          d["pass"] = r.pass;
          out.append(d);
        }
        return out;
      },
      py::arg("digits") = 40);

  m.def(
      "wz_pair_check",
      [](long nmax, long kmax, bool perturbshift) {
        PairSweepReport r = wz_pair_sweep(nmax, kmax, perturbshift);
        py::dict d;
        d["pass"] = r.pass;
        d["checked"] = r.checked;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("nmax") = 30, py::arg("kmax") = 30, py::arg("perturb_row") = false);

  m.def(
      "wz_row_sum",
      [](long k, int digits) {
        PrecisionContext ctx(checked_digits(digits));
        SumResult s = wz_sum_G(Rational(k), ctx);
        return s.value.to_decimal(digits + 5);
      },
      py::arg("k") = 0, py::arg("digits") = 40);
}
