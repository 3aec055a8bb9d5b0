#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lpm/cli.hpp"
#include "lpm/cutoff.hpp"
#include "lpm/io.hpp"
#include "lpm/localtrans.hpp"
#include "lpm/morse.hpp"
#include "lpm/pencil.hpp"
#include "lpm/radial.hpp"

namespace py = pybind11;
using namespace lpm;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
std::string dump(const io::json& j) { return j.dump(); }

Pencil pencil_from_text(const std::string& text) {
  io::json j;
  try {
    j = io::json::parse(text);
  } catch (const io::json::exception& e) {
    throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
  }
  return io::pencil_from_json(j);
}

Polynomial poly1(const std::vector<cplx>& coeffs) {
  Polynomial f(1);
  for (std::size_t e = 0; e < coeffs.size(); ++e) f.add({static_cast<int>(e)}, coeffs[e]);
  return f;
}

py::dict certificate_dict(const TransversalityCertificate& c) {
  py::dict d;
  d["w0"] = c.w0;
  d["sigma"] = c.sigma;
  d["margin"] = c.margin;
  d["clearance_area"] = c.clearance_area;
  d["clearance_ratio"] = c.clearance_ratio;
  d["area_claim_holds"] = c.area_claim_holds;
  d["refined"] = c.refined;
  d["grid"] = py::make_tuple(c.z_per_axis, c.verify_per_axis, c.w_per_axis);
  d["p_sup"] = c.p_sup;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lpm, m) {
  m.doc() = "Lefschetz pencil monodromy calculus and numerical verifiers";

  static py::exception<CutoffThresholdError> threshold_error(m, "CutoffThresholdError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CutoffThresholdError& e) {
      py::object err = py::handle(threshold_error.ptr())(e.what());
      err.attr("min_k") = e.min_k();
      PyErr_SetObject(threshold_error.ptr(), err.ptr());
    }
  });
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);
  py::register_exception<HypothesisFailure>(m, "HypothesisFailure", PyExc_RuntimeError);

  py::class_<FreeWord>(m, "FreeWord")
      .def(py::init([](int rank, const std::string& text) { return parse_free_word(text, rank); }),
           py::arg("rank"), py::arg("word") = "")
      .def_property_readonly("rank", &FreeWord::rank)
      .def_property_readonly("letters", &FreeWord::letters)
      .def("inverse", &FreeWord::inverse)
      .def("__mul__", &free_mul)
      .def("__eq__", [](const FreeWord& a, const FreeWord& b) { return a == b; })
      .def("__len__", &FreeWord::size)
      .def("__str__", [](const FreeWord& w) { return to_string(w); })
      .def("__repr__", [](const FreeWord& w) { return "FreeWord(" + std::to_string(w.rank()) + ", '" + to_string(w) + "')"; });

  py::class_<Braid>(m, "Braid")
      .def(py::init([](int strands, const std::string& text) { return parse_braid(text, strands); }),
           py::arg("strands"), py::arg("word") = "")
      .def_property_readonly("strands", &Braid::strands)
      .def_property_readonly("letters", &Braid::letters)
      .def("inverse", &Braid::inverse)
      .def("pow", &Braid::pow)
      .def("__mul__", [](const Braid& a, const Braid& b) { return a * b; })
      .def("__len__", &Braid::length)
      .def("__str__", [](const Braid& b) { return to_string(b); })
      .def("__repr__", [](const Braid& b) { return "Braid(" + std::to_string(b.strands()) + ", '" + to_string(b) + "')"; });

  m.def("artin_apply", &artin_apply, py::arg("braid"), py::arg("word"));
  m.def("braid_eq", &braid_eq);
  m.def("full_twist", &full_twist, py::arg("strands"), py::arg("first"), py::arg("last"));

  py::class_<Arc>(m, "Arc")
      .def(py::init([](int base, const Braid& carrier) { return Arc{base, carrier}; }), py::arg("base"),
           py::arg("carrier"))
      .def_readonly("base", &Arc::base)
      .def_readonly("carrier", &Arc::carrier)
      .def("__repr__", [](const Arc& a) { return "Arc(" + std::to_string(a.base) + ", '" + to_string(a.carrier) + "')"; });

  m.def("half_twist", &half_twist);
  m.def("supporting_pair", [](const Arc& a) {
    auto [e1, e2] = supporting_pair(a);
    return py::make_tuple(e1.word(), e2.word());
  });

  py::class_<Pencil>(m, "Pencil")
      .def_static("from_json", &pencil_from_text)
      .def("to_json", [](const Pencil& p) { return dump(io::pencil_to_json(p)); })
      .def("__len__", &Pencil::size)
      .def("__eq__", [](const Pencil& a, const Pencil& b) { return a == b; })
      .def("total_monodromy", [](const Pencil& p) { return dump(io::element_to_json(total_monodromy(p))); })
      .def("is_closed", &is_closed)
      .def("label", [](const Pencil& p, const FreeWord& g) { return dump(io::cycle_to_json(vanishing_label(p, g))); })
      .def("hurwitz", [](const Pencil& p, const Braid& b) { return hurwitz_apply(b, p); })
      .def(
          "classify",
          [](const Pencil& p, const Arc& a, bool trust) {
            const ArcClass c = classify_arc(a, p, {trust, {}});
            return py::make_tuple(to_string(c.kind), c.reason);
          },
          py::arg("arc"), py::arg("trust_algebraic") = false)
      .def(
          "kernel_element",
          [](const Pencil& p, const Arc& a, bool trust) {
            const Automorphism x = automorphism_from_arc(a, p, {trust, {}});
            return py::make_tuple(x.b, dump(io::element_to_json(x.g)));
          },
          py::arg("arc"), py::arg("trust_algebraic") = false)
      .def("in_gamma",
           [](const Pencil& p, const std::string& automorphism) {
             const Automorphism a =
                 io::automorphism_from_json(p.fiber(), p.size(), io::json::parse(automorphism));
             return in_gamma(a, p);
           })
      .def(
          "matching_arcs",
          [](const Pencil& p, int max_len, bool trust) { return enumerate_matching_arcs(p, max_len, {trust, {}}); },
          py::arg("max_len"), py::arg("trust_algebraic") = false)
      .def("hurwitz_orbit", [](const Pencil& p, int depth) { return hurwitz_orbit(p, depth); });

  py::class_<CutoffProfile>(m, "CutoffProfile")
      .def_static("build", &CutoffProfile::build, py::arg("k"), py::arg("D"), py::arg("c0"))
      .def_static("min_k", &CutoffProfile::min_k, py::arg("D"), py::arg("c0"))
      .def_property_readonly("k", &CutoffProfile::k)
      .def_property_readonly("D", &CutoffProfile::D)
      .def_property_readonly("c0", &CutoffProfile::c0)
      .def_property_readonly("eps", &CutoffProfile::eps)
      .def_property_readonly("a", &CutoffProfile::a)
      .def_property_readonly("outer_end", &CutoffProfile::outer_end)
      .def("__call__", &CutoffProfile::operator())
      .def("eval", [](const CutoffProfile& p, double t) {
        const CutoffValue v = p.eval(t);
        return py::make_tuple(v.l, v.d1, v.d2, v.d3);
      });

  m.def(
      "verify_deform",
      [](double k, double D, std::optional<double> c0, int n) {
        MorseModel model;
        model.dimension = n;
        CriticalPoint cp;
        cp.center = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) cp.signs.push_back(i % 2 == 0 ? 1 : -1);
        model.points = {cp};
        const DeformReport r = verify_deform_bounds(deform_morse(model, CutoffProfile::build(k, D, c0.value_or(D))));
        py::dict d;
        d["max_grad"] = r.max_grad;
        d["eta_observed"] = r.eta_observed;
        d["max_third"] = r.max_third;
        d["annulus_grad_ratio"] = r.annulus_grad_ratio;
        d["points"] = r.points;
        return d;
      },
      py::arg("k"), py::arg("D"), py::arg("c0") = py::none(), py::arg("n") = 2);

  m.def(
      "radial_check",
      [](std::function<double(double)> l, std::function<double(double)> dl, const std::vector<double>& x) {
        Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<long>(x.size()));
        const RadialReport r = radial_map_check(RadialProfile{std::move(l), std::move(dl)}, v);
        py::dict d;
        d["det"] = r.det_closed;
        d["det_numeric"] = r.det_numeric;
        d["lambda_min"] = r.lambda_min_closed;
        d["lambda_max"] = r.lambda_max_closed;
        d["jacobian_rel_error"] = r.jacobian_rel_error;
        d["eigen_rel_error"] = r.eigen_rel_error;
        d["ok"] = r.ok();
        return d;
      },
      py::arg("l"), py::arg("dl"), py::arg("x"));

  m.def("solve_w", py::overload_cast<cplx, cplx>(&solve_w), py::arg("p"), py::arg("q"));
  m.def(
      "find_good_w0",
      [](const std::vector<cplx>& p, const std::vector<cplx>& q, double kappa, double delta, int pexp) {
        LocalTransInstance inst;
        inst.p = poly1(p);
        inst.q = poly1(q);
        inst.kappa = kappa;
        inst.delta = delta;
        inst.pexp = pexp;
        return certificate_dict(find_good_w0(inst));
      },
      py::arg("p"), py::arg("q"), py::arg("kappa") = 0.2, py::arg("delta") = 0.1, py::arg("pexp") = 2);
  m.def(
      "random_certificate",
      [](std::uint64_t seed, double kappa, double delta, int pexp) {
        return certificate_dict(find_good_w0(random_instance(seed, 1, 4, kappa, delta, pexp)));
      },
      py::arg("seed"), py::arg("kappa") = 0.2, py::arg("delta") = 0.1, py::arg("pexp") = 2);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"lpm"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
