#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grunsky/errors.hpp"
#include "grunsky/json_io.hpp"
#include "grunsky/verify.hpp"

namespace py = pybind11;
using namespace grunsky;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grunsky coefficients, Grunsky norms, and abelian-differential bounds";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<LaurentMap>(m, "LaurentMap")
      .def(py::init([](Complex b0, std::vector<Complex> tail) {
             LaurentMap map;
             map.b0 = b0;
             map.tail = std::move(tail);
             return map;
           }),
           py::arg("b0") = Complex(0.0), py::arg("tail") = std::vector<Complex>{})
      .def_readwrite("b0", &LaurentMap::b0)
      .def_readwrite("tail", &LaurentMap::tail)
      .def("padded", &LaurentMap::padded, py::arg("min_tail"))
      .def("__call__", &LaurentMap::evaluate, py::arg("z"));

  py::class_<TaylorMap>(m, "TaylorMap")
      .def_readonly("coeffs", &TaylorMap::coeffs);

  py::class_<GrunskyTable>(m, "GrunskyTable")
      .def_readonly("alpha", &GrunskyTable::alpha)
      .def_property_readonly("N", &GrunskyTable::N);

  py::class_<GrunskyMatrix>(m, "GrunskyMatrix")
      .def_readonly("entries", &GrunskyMatrix::entries)
      .def_property_readonly("N", &GrunskyMatrix::N);

  py::class_<SymmetricNormResult>(m, "SymmetricNormResult")
      .def_readonly("sigma", &SymmetricNormResult::sigma)
      .def_readonly("argmax_x", &SymmetricNormResult::argmax_x)
      .def_readonly("iterations", &SymmetricNormResult::iterations)
      .def_readonly("residual", &SymmetricNormResult::residual)
      .def_readonly("converged", &SymmetricNormResult::converged)
      .def_readonly("degenerate", &SymmetricNormResult::degenerate);

  py::class_<ConvergenceRow>(m, "ConvergenceRow")
      .def_readonly("N", &ConvergenceRow::N)
      .def_readonly("kappa", &ConvergenceRow::kappa)
      .def_readonly("residual", &ConvergenceRow::residual)
      .def_readonly("converged", &ConvergenceRow::converged);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("rows", &ConvergenceReport::rows)
      .def_readonly("univalence_violated", &ConvergenceReport::univalence_violated)
      .def("max_kappa", &ConvergenceReport::max_kappa);

  py::class_<PolarTerm>(m, "PolarTerm")
      .def(py::init([](Complex c, double a, int k) {
             return PolarTerm{c, a, k};
           }),
           py::arg("c"), py::arg("a") = 0.0, py::arg("k") = 0)
      .def_readwrite("c", &PolarTerm::c)
      .def_readwrite("a", &PolarTerm::a)
      .def_readwrite("k", &PolarTerm::k);

  py::class_<BeltramiSpec>(m, "BeltramiSpec")
      .def_static("polar", &BeltramiSpec::polar, py::arg("terms"), py::arg("sup_norm"))
      .def_static(
          "sampled",
          [](std::function<Complex(double, double)> mu, double sup_norm,
             int radial_order, int angular_nodes) {
            SampledBeltrami samples;
            samples.mu = std::move(mu);
            samples.radial_order = radial_order;
            samples.angular_nodes = angular_nodes;
            return BeltramiSpec::sampled(std::move(samples), sup_norm);
          },
          py::arg("mu"), py::arg("sup_norm"), py::arg("radial_order") = 64,
          py::arg("angular_nodes") = 512)
      .def_static("zero", &BeltramiSpec::zero)
      .def_property_readonly("sup_norm", &BeltramiSpec::sup_norm)
      .def_property_readonly("is_polar", &BeltramiSpec::is_polar)
      .def("eval", &BeltramiSpec::eval, py::arg("r"), py::arg("theta"))
      .def("validate", &BeltramiSpec::validate)
      .def("scaled", &BeltramiSpec::scaled, py::arg("factor"))
      .def("normalized", &BeltramiSpec::normalized)
      .def("rotated", &BeltramiSpec::rotated, py::arg("phi"));

  py::class_<MomentVector>(m, "MomentVector")
      .def_readonly("values", &MomentVector::values);

  py::class_<AbelianMatrix>(m, "AbelianMatrix").def_readonly("B", &AbelianMatrix::B);

  py::class_<ExtremalDifferential>(m, "ExtremalDifferential")
      .def_readonly("omega", &ExtremalDifferential::omega)
      .def_readonly("psi", &ExtremalDifferential::psi)
      .def_readonly("psi_a1_norm", &ExtremalDifferential::psi_a1_norm)
      .def_readonly("degenerate", &ExtremalDifferential::degenerate);

  py::enum_<FamilyKind>(m, "FamilyKind")
      .value("joukowski", FamilyKind::joukowski)
      .value("power", FamilyKind::power);

  py::class_<FamilySpec>(m, "FamilySpec")
      .def_readwrite("kind", &FamilySpec::kind)
      .def_readwrite("m", &FamilySpec::m)
      .def_readwrite("t", &FamilySpec::t)
      .def("with_t", &FamilySpec::with_t, py::arg("t"))
      .def("label", &FamilySpec::label);

  py::class_<VerificationRow>(m, "VerificationRow")
      .def_readonly("r", &VerificationRow::r)
      .def_readonly("kappa", &VerificationRow::kappa)
      .def_readonly("alpha", &VerificationRow::alpha)
      .def_readonly("lower", &VerificationRow::lower)
      .def_readonly("upper", &VerificationRow::upper)
      .def_readonly("residual_theorem1", &VerificationRow::residual_theorem1)
      .def_readonly("residual_upper", &VerificationRow::residual_upper)
      .def_readonly("sandwich_ok", &VerificationRow::sandwich_ok);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("rows", &VerificationReport::rows)
      .def_readonly("N", &VerificationReport::N)
      .def("all_sandwich_ok", &VerificationReport::all_sandwich_ok);

  py::class_<MetricSample>(m, "MetricSample")
      .def_readonly("r", &MetricSample::r)
      .def_readonly("lambda_est", &MetricSample::lambda_est)
      .def_readonly("achieving_x", &MetricSample::achieving_x)
      .def_readonly("optimizer_budget", &MetricSample::optimizer_budget);

  py::class_<GolusinResult>(m, "GolusinResult")
      .def_readonly("ok", &GolusinResult::ok)
      .def_readonly("worst_margin", &GolusinResult::worst_margin)
      .def_readonly("order", &GolusinResult::order)
      .def_readonly("leading", &GolusinResult::leading)
      .def_readonly("degenerate", &GolusinResult::degenerate);

  py::class_<Lemma4Result>(m, "Lemma4Result")
      .def_readonly("r_max", &Lemma4Result::r_max)
      .def_readonly("grid_size", &Lemma4Result::grid_size)
      .def_readonly("N", &Lemma4Result::N)
      .def_readonly("lhs", &Lemma4Result::lhs)
      .def_readonly("rhs", &Lemma4Result::rhs)
      .def_readonly("residual", &Lemma4Result::residual)
      .def_readonly("nodes", &Lemma4Result::nodes);

  py::class_<FredholmResult>(m, "FredholmResult")
      .def_readonly("circle", &FredholmResult::circle)
      .def_readonly("rho", &FredholmResult::rho)
      .def_readonly("kappa", &FredholmResult::kappa)
      .def_readonly("rho_abelian", &FredholmResult::rho_abelian);

  py::class_<BNormEstimate>(m, "BNormEstimate")
      .def_readonly("value", &BNormEstimate::value)
      .def_readonly("r_at_max", &BNormEstimate::r_at_max)
      .def_readonly("theta_at_max", &BNormEstimate::theta_at_max)
      .def_readonly("radial_samples", &BNormEstimate::radial_samples)
      .def_readonly("angular_samples", &BNormEstimate::angular_samples);

  m.def("parse_family", &parse_family, py::arg("name"), py::arg("t"));
  m.def("family_map", &family_map, py::arg("spec"), py::arg("K"));
  m.def("family_extension", &family_extension, py::arg("spec"), py::arg("z"));
  m.def(
      "family_beltrami",
      [](const FamilySpec& spec) { return family_beltrami(spec); },
      py::arg("spec"));
  m.def("beltrami_oracle_at", &beltrami_oracle_at, py::arg("spec"), py::arg("r"),
        py::arg("theta"));
  m.def(
      "grunsky_coefficients",
      [](const LaurentMap& map, int N) { return grunsky_coefficients(map, N); },
      py::arg("map"), py::arg("N"));
  m.def("grunsky_matrix", &grunsky_matrix, py::arg("table"));
  m.def(
      "symmetric_bilinear_norm",
      [](const Eigen::MatrixXcd& matrix, std::uint64_t seed) {
        NormOptions options;
        options.seed = seed;
        return symmetric_bilinear_norm(matrix, options);
      },
      py::arg("matrix"), py::arg("seed") = 0);
  m.def(
      "grunsky_norm",
      [](const LaurentMap& map, std::vector<int> n_list, std::uint64_t seed) {
        NormOptions options;
        options.seed = seed;
        return grunsky_norm(map, std::move(n_list), options);
      },
      py::arg("map"), py::arg("N_list"), py::arg("seed") = 0);
  m.def("qc_bound_check", &qc_bound_check, py::arg("report"), py::arg("k"));
  m.def("inversion_map", &inversion_map, py::arg("map"), py::arg("K"));
  m.def("beltrami_moments", &beltrami_moments, py::arg("spec"), py::arg("P"));
  m.def("abelian_matrix", &abelian_matrix, py::arg("moments"), py::arg("N"));
  m.def(
      "alpha_norm",
      [](const BeltramiSpec& spec, int N, std::uint64_t seed) {
        NormOptions options;
        options.seed = seed;
        return alpha_norm(spec, N, options);
      },
      py::arg("spec"), py::arg("N"), py::arg("seed") = 0);
  m.def("extremal_omega", &extremal_omega, py::arg("result"), py::arg("N"));
  m.def(
      "pairing",
      [](const BeltramiSpec& spec, const std::vector<Complex>& psi) {
        return pairing(spec, psi);
      },
      py::arg("spec"), py::arg("psi_coeffs"));
  m.def("schwarzian", &schwarzian, py::arg("map"), py::arg("z"));
  m.def("bnorm", &bnorm, py::arg("map"), py::arg("radial_samples") = 64,
        py::arg("angular_samples") = 64);
  m.def(
      "h_eval",
      [](const FamilySpec& family, const Eigen::VectorXcd& x, int N) {
        return h_eval(family, x, N);
      },
      py::arg("family"), py::arg("x"), py::arg("N"));
  m.def("golusin_bound_check", &golusin_bound_check, py::arg("family"), py::arg("x"),
        py::arg("t_grid"), py::arg("N"));
  m.def(
      "verify_theorem1",
      [](const FamilySpec& family, const std::vector<double>& grid, int N,
         std::uint64_t seed) {
        NormOptions options;
        options.seed = seed;
        return verify_theorem1(family, grid, N, options);
      },
      py::arg("family"), py::arg("t_magnitudes"), py::arg("N"), py::arg("seed") = 0);
  m.def("metric_lambda_kappa", &metric_lambda_kappa, py::arg("family"), py::arg("r"),
        py::arg("N"), py::arg("budget") = 256, py::arg("seed") = 0);
  m.def("lemma4_check", &lemma4_check, py::arg("family"), py::arg("r_max"),
        py::arg("grid_size"), py::arg("N"), py::arg("budget") = 256, py::arg("seed") = 0);
  m.def(
      "fredholm_eigenvalue",
      [](const FamilySpec& family, int N) { return fredholm_eigenvalue(family, N); },
      py::arg("family"), py::arg("N"));
  m.def(
      "fredholm_eigenvalue_map",
      [](const LaurentMap& map, int N) { return fredholm_eigenvalue(map, N); },
      py::arg("map"), py::arg("N"));
  m.def("default_n_ladder", &default_n_ladder);
  m.def("default_t_grid", &default_t_grid);
}
