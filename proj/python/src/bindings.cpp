#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seifnet/extfrac.hpp"
#include "seifnet/family.hpp"
#include "seifnet/network.hpp"
#include "seifnet/seifert.hpp"
#include "seifnet/tangle.hpp"
#include "seifnet/verify.hpp"

#include <optional>
#include <string>
#include <utility>

namespace py = pybind11;

namespace pybind11::detail {

// Route boost cpp_int through python ints (decimal strings; these values are
// tiny by bignum standards).
template <>
struct type_caster<seifnet::Int> {
  PYBIND11_TYPE_CASTER(seifnet::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    value = seifnet::Int(std::string(py::str(src)));
    return true;
  }

  static handle cast(const seifnet::Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace seifnet;

std::optional<Int> order_to_py(const H1Order& h) {
  if (h.is_infinite()) return std::nullopt;
  return h.value();
}

std::string census_to_str(FibrationCensus c) {
  return c == FibrationCensus::DiskAndMoebius ? "DISK_AND_MOEBIUS" : "UNIQUE";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact invariants of rational tangles, Montesinos links, and Seifert "
      "fibered surgeries";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<vanishing_denominator>(m, "VanishingDenominator",
                                                PyExc_ArithmeticError);
  py::register_exception<constraint_error>(m, "ConstraintError", PyExc_ValueError);

  py::class_<ExtFrac>(m, "ExtFrac")
      .def(py::init<Int>(), py::arg("num"))
      .def(py::init<Int, Int>(), py::arg("num"), py::arg("den"))
      .def_static("infinity", &ExtFrac::infinity)
      .def_property_readonly("num", &ExtFrac::num)
      .def_property_readonly("den", &ExtFrac::den)
      .def("is_infinite", &ExtFrac::is_infinite)
      .def("is_zero", &ExtFrac::is_zero)
      .def("is_integer", &ExtFrac::is_integer)
      .def("inverse", &ExtFrac::inverse)
      .def("floor", &ExtFrac::floor)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__str__", &ExtFrac::str)
      .def("__repr__", [](const ExtFrac& f) { return "ExtFrac(" + f.str() + ")"; })
      .def("__hash__", [](const ExtFrac& f) { return py::hash(py::str(f.str())); });
  py::implicitly_convertible<py::int_, ExtFrac>();

  m.def("cf_eval", &cf_eval, py::arg("seq"));
  m.def("cf_expand", &cf_expand, py::arg("r"));

  py::class_<RationalTangle>(m, "RationalTangle")
      .def(py::init<std::vector<Int>>(), py::arg("seq"))
      .def_property_readonly("seq", &RationalTangle::seq)
      .def_property_readonly("fraction", &RationalTangle::fraction)
      .def(py::self == py::self);

  m.def(
      "meridian_lift",
      [](const ExtFrac& r) {
        HomologyClass h = meridian_lift(r);
        return py::make_tuple(h.mu_coeff, h.lambda_coeff);
      },
      py::arg("r"), "([mu_inf], [lambda]) coefficients of the lifted meridian");
  m.def("covering_slope", &covering_slope, py::arg("framing_n"), py::arg("s"));

  py::enum_<BaseSurface>(m, "BaseSurface")
      .value("Sphere", BaseSurface::Sphere)
      .value("Disk", BaseSurface::Disk)
      .value("Moebius", BaseSurface::Moebius);

  py::class_<SeifertSpace>(m, "SeifertSpace")
      .def(py::init<BaseSurface, std::vector<ExtFrac>>(), py::arg("base"),
           py::arg("slots"))
      .def_static("from_raw", &SeifertSpace::from_raw, py::arg("base"),
                  py::arg("raw"))
      .def_property_readonly("base", &SeifertSpace::base)
      .def_property_readonly("slots", &SeifertSpace::slots)
      .def("degenerate", &SeifertSpace::degenerate)
      .def("reduction_occurred", &SeifertSpace::reduction_occurred)
      .def("__str__", &SeifertSpace::str)
      .def("__repr__", [](const SeifertSpace& s) { return s.str(); });

  m.def(
      "h1_order", [](const SeifertSpace& x) { return order_to_py(h1_order(x)); },
      py::arg("x"), "|H1| as an int, or None for infinite");
  m.def("normalize", &normalize, py::arg("x"));
  m.def("exceptional_fiber_count", &exceptional_fiber_count, py::arg("x"));
  m.def(
      "is_lens_or_s3",
      [](const SeifertSpace& x) {
        LensClassification c = is_lens_or_s3(x);
        const char* kind = c.kind == LensKind::S3       ? "S3"
                           : c.kind == LensKind::Neither ? "NEITHER"
                                                         : "LENS";
        return py::make_tuple(kind, order_to_py(c.order));
      },
      py::arg("x"), "(kind, order) with order None for infinite");
  m.def("boundary_irreducible", &boundary_irreducible, py::arg("x"));
  m.def(
      "fibration_census",
      [](const SeifertSpace& x) { return census_to_str(fibration_census(x)); },
      py::arg("x"));
  m.def("mirror", &mirror, py::arg("x"));
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));

  py::class_<FamilyParams>(m, "FamilyParams")
      .def(py::init<long long, long long, long long, long long>(), py::arg("l"),
           py::arg("m"), py::arg("n"), py::arg("p"))
      .def_readonly("l", &FamilyParams::l)
      .def_readonly("m", &FamilyParams::m)
      .def_readonly("n", &FamilyParams::n)
      .def_readonly("p", &FamilyParams::p)
      .def(py::self == py::self)
      .def("__repr__", [](const FamilyParams& x) {
        return "FamilyParams(" + std::to_string(x.l) + ", " + std::to_string(x.m) +
               ", " + std::to_string(x.n) + ", " + std::to_string(x.p) + ")";
      });

  m.def("montesinos_fractions", &montesinos_fractions, py::arg("params"));
  m.def("tangle_sequences", &tangle_sequences, py::arg("params"));
  m.def("surgery_slope", &surgery_slope, py::arg("params"));
  m.def("decomposition_pieces", &decomposition_pieces, py::arg("params"));
  m.def("toroidal_hypotheses", &toroidal_hypotheses, py::arg("params"));
  m.def("nonps_hypotheses", &nonps_hypotheses, py::arg("params"));
  m.def("claim_seifert_invariant1", &claim_seifert_invariant1, py::arg("l"),
        py::arg("m"), py::arg("n"));
  m.def("case4_h1_orders", &case4_h1_orders, py::arg("params"));

  py::enum_<Seiferter>(m, "Seiferter")
      .value("A", Seiferter::A)
      .value("B", Seiferter::B);
  py::enum_<TwistTarget>(m, "TwistTarget")
      .value("SEIFERTER_A", TwistTarget::SeiferterA)
      .value("SEIFERTER_B", TwistTarget::SeiferterB)
      .value("ANNULAR_PAIR", TwistTarget::AnnularPair);

  py::class_<SurgeryVertex>(m, "SurgeryVertex")
      .def(py::init([](Int slope, Int lk_a, Int lk_b, Int lk_ab) {
             return SurgeryVertex{std::move(slope), std::move(lk_a),
                                  std::move(lk_b), std::move(lk_ab)};
           }),
           py::arg("slope"), py::arg("lk_a"), py::arg("lk_b"), py::arg("lk_ab") = 2)
      .def_static("start", &SurgeryVertex::start, py::arg("l"))
      .def_readonly("slope", &SurgeryVertex::slope)
      .def_readonly("lk_a", &SurgeryVertex::lk_a)
      .def_readonly("lk_b", &SurgeryVertex::lk_b)
      .def_readonly("lk_ab", &SurgeryVertex::lk_ab)
      .def(py::self == py::self)
      .def("__repr__", [](const SurgeryVertex& v) {
        return "SurgeryVertex(slope=" + v.slope.str() + ", lk_a=" + v.lk_a.str() +
               ", lk_b=" + v.lk_b.str() + ", lk_ab=" + v.lk_ab.str() + ")";
      });

  py::class_<TwistStep>(m, "TwistStep")
      .def(py::init<TwistTarget, long long>(), py::arg("target"), py::arg("count"))
      .def_readonly("target", &TwistStep::target)
      .def_readonly("count", &TwistStep::count)
      .def(py::self == py::self);

  m.def("twist_seiferter", &twist_seiferter, py::arg("v"), py::arg("which"),
        py::arg("t"));
  m.def("annular_twist", &annular_twist, py::arg("v"), py::arg("n"));
  m.def("path_from_trefoil", &path_from_trefoil, py::arg("params"));
  m.def("realize_path", &realize_path, py::arg("start"), py::arg("steps"));
  m.def("annular_surgery_coeffs", &annular_surgery_coeffs, py::arg("p"),
        py::arg("lk"));
  m.def("compose_two_twists", &compose_two_twists, py::arg("t1"), py::arg("t2"),
        py::arg("lk"));

  m.def(
      "_verify_json",
      [](const std::string& suite, std::pair<long long, long long> l,
         std::pair<long long, long long> mm, std::pair<long long, long long> n,
         std::pair<long long, long long> p, bool enforce_mp_zero,
         std::uint64_t cap, unsigned jobs) {
        auto s = verify::suite_from_name(suite);
        if (!s) throw constraint_error("unknown suite '" + suite + "'");
        verify::SweepBox box;
        box.l = {l.first, l.second};
        box.m = {mm.first, mm.second};
        box.n = {n.first, n.second};
        box.p = {p.first, p.second};
        box.enforce_mp_zero = enforce_mp_zero;
        box.cap = cap;
        return verify::to_json(verify::run_suite(*s, box, jobs));
      },
      py::arg("suite"), py::arg("l"), py::arg("m"), py::arg("n"), py::arg("p"),
      py::arg("enforce_mp_zero"), py::arg("cap"), py::arg("jobs"));
}
