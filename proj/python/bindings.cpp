#include "rrcf/catalog.hpp"
#include "rrcf/cli.hpp"
#include "rrcf/errors.hpp"
#include "rrcf/invariants.hpp"
#include "rrcf/recognition.hpp"
#include "rrcf/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rrcf;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.

Real eval_named(const std::string& fn, const SurdArg& r, const PrecisionCtx& ctx) {
  if (fn == "R") return eval_R_product(r, ctx);
  if (fn == "R_cf") return eval_R_cf(r, ctx);
  if (fn == "f") return eval_f_neg_q(r, ctx);
  if (fn == "theta2") return eval_theta2(nome(r, ctx), ctx);
  if (fn == "theta3") return eval_theta3(nome(r, ctx), ctx);
  if (fn == "yi_s") return yi_s(r, ctx);
  return evaluate_invariant(invariant_kind_from_string(fn), r, ctx).value;
}

std::string eval_value(const std::string& fn, const std::string& arg, int digits, int guard) {
  const PrecisionCtx ctx(digits, guard);
  return cli::format_value(eval_named(fn, SurdArg::parse(arg), ctx), digits - guard);
}

std::string recognize_value(const std::string& fn, const std::string& arg, int degree, int digits, int guard) {
  const PrecisionCtx ctx(digits, guard);
  const SurdArg r = SurdArg::parse(arg);
  const RealSource src = [fn, r](const PrecisionCtx& c) { return eval_named(fn, r, c); };
  const auto cand = recognize_minpoly(src, degree, 0, ctx);
  return cand ? cand->to_json().dump() : "null";
}

std::string recognize_literal(const std::string& text, int degree, int digits, int guard) {
  const PrecisionCtx ctx(digits, guard);
  const auto cand = recognize_minpoly(Real(text, ctx.working_bits()), degree, 0, ctx);
  return cand ? cand->to_json().dump() : "null";
}

std::string recognize_field(const std::string& text, const std::vector<long>& basis, long denom_cap, int digits,
                            int guard) {
  const PrecisionCtx ctx(digits, guard);
  const auto fe = recognize_in_field(Real(text, ctx.working_bits()), basis, denom_cap, ctx);
  return fe ? fe->to_json().dump() : "null";
}

std::string yi(const std::string& n, int digits, int guard) {
  return yi_recognize(SurdArg::parse(n), PrecisionCtx(digits, guard)).to_json().dump();
}

std::string reproduce(const std::string& id, int digits, int guard) {
  return reproduce_theorem(theorem_id_from_string(id), PrecisionCtx(digits, guard)).to_json().dump();
}

std::string order25(std::int64_t n, int digits, int guard) {
  auto [alpha, beta] = order25_sources(n);
  return check_order25(alpha, beta, PrecisionCtx(digits, guard)).to_json().dump();
}

std::string identities(const std::string& q, int digits, int guard) {
  const PrecisionCtx ctx(digits, guard);
  const Real x(q, ctx.working_bits());
  nlohmann::json out = nlohmann::json::array({check_companion(x, ctx).to_json(), check_recursions(x, ctx).to_json()});
  return out.dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "High-precision Rogers-Ramanujan continued fraction evaluations";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
  py::register_exception<MismatchError>(m, "MismatchError", PyExc_RuntimeError);

  const auto release = py::call_guard<py::gil_scoped_release>();
  m.def("eval", &eval_value, py::arg("fn"), py::arg("arg"), py::arg("digits") = 300, py::arg("guard") = 50, release);
  m.def("recognize_value", &recognize_value, py::arg("fn"), py::arg("arg"), py::arg("degree") = 8,
        py::arg("digits") = 300, py::arg("guard") = 50, release);
  m.def("recognize_literal", &recognize_literal, py::arg("text"), py::arg("degree") = 8, py::arg("digits") = 300,
        py::arg("guard") = 50, release);
  m.def("recognize_field", &recognize_field, py::arg("text"), py::arg("basis"), py::arg("denom_cap") = 10000,
        py::arg("digits") = 300, py::arg("guard") = 50, release);
  m.def("yi_recognize", &yi, py::arg("n"), py::arg("digits") = 300, py::arg("guard") = 50, release);
  m.def("reproduce", &reproduce, py::arg("id"), py::arg("digits") = 300, py::arg("guard") = 50, release);
  m.def("check_order25", &order25, py::arg("n"), py::arg("digits") = 300, py::arg("guard") = 50, release);
  m.def("check_identities", &identities, py::arg("q"), py::arg("digits") = 200, py::arg("guard") = 50, release);
  m.def("catalog", [] { return Catalog::builtin().to_json().dump(); });
  m.def("run_cli", &run_cli, py::arg("args"));
}
