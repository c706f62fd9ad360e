#include "rrcf/recognition.hpp"

#include "rrcf/errors.hpp"
#include "rrcf/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace rrcf {

std::string to_string(Confidence c) {
  return c == Confidence::EscalationStable ? "escalation-stable" : "provisional";
}

RootSelection select_root(const IntPoly& p, const Real& target, const PrecisionCtx& ctx) {
  const auto intervals = isolate_real_roots(p);
  if (intervals.empty()) throw MismatchError("polynomial has no real roots");
  const mpfr_prec_t coarse = bits_for_digits(ctx.guard + 20);
  size_t best = 0;
  Real best_dist;
  for (size_t i = 0; i < intervals.size(); ++i) {
    const Real r = refine_root(p, intervals[i], coarse);
    const Real d = abs(r - target);
    if (i == 0 || d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  const Real tol = pow10(-ctx.guard, coarse) * max(Real(1L, coarse), abs(target.with_bits(coarse)));
  if (!(best_dist < tol)) {
    throw MismatchError("no real root within 10^-" + std::to_string(ctx.guard) + " of the target");
  }
  RootSelection sel;
  sel.root_index = static_cast<int>(best) + 1;
  sel.cas_index = sel.root_index;
  sel.real_root_count = static_cast<int>(intervals.size());
  sel.refined = refine_root(p, intervals[best], ctx.working_bits());
  sel.refined.set_at_digits(ctx.digits);
  return sel;
}

nlohmann::json AlgebraicCandidate::to_json() const {
  return {{"coeffs", poly.descending_strings()},
          {"root_index", root_index},
          {"witness_digits", witness.at_digits()},
          {"confidence", to_string(confidence)}};
}

namespace {

// |value| <= scale * 10^-(digits + guard/2), the acceptance test for a relation
// evaluated on an input accurate to about digits + guard.
bool small_relative(const Real& value, const Real& scale, const PrecisionCtx& ctx) {
  const Real bound = scale * pow10(-(ctx.digits + ctx.guard / 2), value.bits());
  return abs(value) <= bound;
}

int effective_height_digits(int height_digits, int terms, const PrecisionCtx& ctx) {
  if (height_digits > 0) return height_digits;
  return std::max(1, (ctx.digits - 4 * ctx.guard) / terms);
}

// Integer relations among `values`, scaled by 10^(digits - guard). Returns the
// reduced coefficient rows, shortest first.
//
// The scale is raised in stages: each stage reduces [U | U round(2^b v)] for
// the transform U found so far, which keeps every pass at moderate precision.
IntMatrix relation_basis(const std::vector<Real>& values, const PrecisionCtx& ctx) {
  const size_t n = values.size();
  const mpfr_prec_t bits = ctx.working_bits();
  const Real final_scale = pow10(ctx.digits - ctx.guard, bits);
  const long final_bits = static_cast<long>(std::ceil((ctx.digits - ctx.guard) * std::log2(10.0)));
  const long step = std::max<long>(256, 40 * static_cast<long>(n));

  IntMatrix u(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;

  for (long b = std::min(step, final_bits);; b = std::min(b + step, final_bits)) {
    const bool last = b >= final_bits;
    const Real scale = last ? final_scale : pow(Real(2L, bits), b);
    std::vector<mpz_class> scaled;
    for (const auto& v : values) scaled.push_back((v * scale).round_to_mpz());
    IntMatrix basis(n, std::vector<mpz_class>(n + 1, 0));
    for (size_t i = 0; i < n; ++i) {
      mpz_class acc = 0;
      for (size_t j = 0; j < n; ++j) {
        basis[i][j] = u[i][j];
        acc += u[i][j] * scaled[j];
      }
      basis[i][n] = acc;
    }
    lll_reduce(basis);
    for (size_t i = 0; i < n; ++i) {
      basis[i].pop_back();
      u[i] = std::move(basis[i]);
    }
    if (last) break;
  }
  return u;
}

std::optional<IntPoly> minpoly_at_degree(const Real& x, int d, int height_digits, const PrecisionCtx& ctx) {
  std::vector<Real> powers;
  Real pw(1L, x.bits());
  for (int i = 0; i <= d; ++i) {
    powers.push_back(pw);
    pw *= x;
  }
  const IntMatrix rows = relation_basis(powers, ctx);
  const mpz_class cap = [&] {
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), 10, static_cast<unsigned long>(height_digits));
    return c;
  }();
  for (const auto& row : rows) {
    IntPoly p(row);
    if (p.degree() != d) continue;
    p = p.primitive();
    if (p.height() > cap) continue;
    if (!small_relative(p.eval(x), p.eval_abs_terms(x), ctx)) continue;
    return p;
  }
  return std::nullopt;
}

std::optional<AlgebraicCandidate> recognize_minpoly_impl(const Real& x, const RealSource* source, int degree_max,
                                                         int height_digits, const PrecisionCtx& ctx) {
  if (degree_max < 1) throw PreconditionError("degree_max must be at least 1");
  if (height_digits > 0 && ctx.digits < degree_max * height_digits + 4 * ctx.guard) {
    throw PreconditionError("recognize_minpoly needs digits >= degree_max * height_digits + 4 * guard");
  }
  if (ctx.digits <= 4 * ctx.guard) {
    throw PreconditionError("recognize_minpoly needs digits > 4 * guard");
  }
  if (x.bits() < ctx.working_bits()) throw PreconditionError("input value carries less than the working precision");
  const Real xw = x.with_bits(ctx.working_bits());

  for (int d = 1; d <= degree_max; ++d) {
    const int h = effective_height_digits(height_digits, d + 1, ctx);
    auto p = minpoly_at_degree(xw, d, h, ctx);
    if (!p) continue;
    if (!is_irreducible(*p)) continue;

    AlgebraicCandidate cand;
    cand.poly = *p;
    cand.witness = x;
    cand.witness.set_at_digits(ctx.digits);
    const RootSelection sel = select_root(cand.poly, xw, ctx);
    cand.root_index = sel.root_index;
    cand.cas_index = sel.cas_index;
    cand.real_root_count = sel.real_root_count;

    if (source != nullptr) {
      const PrecisionCtx hi = ctx.doubled();
      const Real x2 = (*source)(hi).with_bits(hi.working_bits());
      if (!small_relative(cand.poly.eval(x2), cand.poly.eval_abs_terms(x2), hi)) continue;
      cand.confidence = Confidence::EscalationStable;
    }
    return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AlgebraicCandidate> recognize_minpoly(const RealSource& x, int degree_max, int height_digits,
                                                    const PrecisionCtx& ctx) {
  return recognize_minpoly_impl(x(ctx), &x, degree_max, height_digits, ctx);
}

std::optional<AlgebraicCandidate> recognize_minpoly(const Real& x, int degree_max, int height_digits,
                                                    const PrecisionCtx& ctx) {
  return recognize_minpoly_impl(x, nullptr, degree_max, height_digits, ctx);
}

// ---------------------------------------------------------------------------
// Field elements

Real FieldElement::evaluate(mpfr_prec_t bits) const {
  Real acc(bits);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    acc += Real(coeffs[i], bits) * sqrt(Real(basis[i], bits));
  }
  return acc;
}

std::string FieldElement::to_string() const {
  std::string s;
  for (size_t i = 0; i < basis.size(); ++i) {
    const mpq_class& c = coeffs[i];
    if (c == 0) continue;
    const mpq_class a = abs(c);
    if (c < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    if (basis[i] == 1) {
      s += a.get_str();
      continue;
    }
    if (a != 1) s += a.get_str() + "*";
    s += "sqrt(" + std::to_string(basis[i]) + ")";
  }
  return s.empty() ? "0" : s;
}

RadicalExpr FieldElement::to_expr() const { return RadicalExpr::parse(to_string()); }

nlohmann::json FieldElement::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs) cs.push_back(c.get_str());
  return {{"basis", basis}, {"coeffs", cs}, {"text", to_string()}};
}

FieldElement FieldElement::from_json(const nlohmann::json& j) {
  FieldElement f;
  f.basis = j.at("basis").get<std::vector<long>>();
  for (const auto& c : j.at("coeffs")) {
    mpq_class q(c.get<std::string>());
    q.canonicalize();
    f.coeffs.push_back(q);
  }
  if (f.coeffs.size() != f.basis.size()) throw DomainError("field element: basis/coeff length mismatch");
  return f;
}

FieldElement FieldElement::parse(const std::string& text, std::vector<long> basis) {
  FieldElement f;
  f.basis = std::move(basis);
  f.coeffs.assign(f.basis.size(), 0);
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  size_t pos = 0;
  auto fail = [&] { throw DomainError("cannot parse field element '" + text + "'"); };
  while (pos < t.size()) {
    int sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    }
    mpq_class coef = 1;
    long radicand = 1;
    size_t start = pos;
    while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
    if (pos > start) {
      coef = mpq_class(t.substr(start, pos - start));
      coef.canonicalize();
      if (pos < t.size() && t[pos] == '*') ++pos;
    }
    if (t.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      const size_t close = t.find(')', pos);
      if (close == std::string::npos) fail();
      radicand = std::stol(t.substr(pos, close - pos));
      pos = close + 1;
    } else if (pos == start) {
      fail();
    }
    const auto it = std::find(f.basis.begin(), f.basis.end(), radicand);
    if (it == f.basis.end()) fail();
    f.coeffs[static_cast<size_t>(it - f.basis.begin())] += sign * coef;
  }
  return f;
}

namespace {

bool is_squarefree(long b) {
  for (long p = 2; p * p <= b; ++p) {
    if (b % (p * p) == 0) return false;
  }
  return true;
}

std::optional<FieldElement> field_relation(const Real& x, const std::vector<long>& basis, long denom_cap,
                                           const PrecisionCtx& ctx) {
  const mpfr_prec_t bits = ctx.working_bits();
  std::vector<Real> values{x.with_bits(bits)};
  for (long b : basis) values.push_back(sqrt(Real(b, bits)));
  const IntMatrix rows = relation_basis(values, ctx);
  const int h = effective_height_digits(0, static_cast<int>(values.size()), ctx);
  mpz_class cap;
  mpz_ui_pow_ui(cap.get_mpz_t(), 10, static_cast<unsigned long>(h));
  for (const auto& row : rows) {
    if (row[0] == 0) continue;
    mpz_class g = 0;
    for (const auto& v : row) g = gcd(g, v);
    std::vector<mpz_class> m;
    for (const auto& v : row) m.push_back(v / g);
    if (m[0] < 0) {
      for (auto& v : m) v = -v;
    }
    if (std::any_of(m.begin(), m.end(), [&](const mpz_class& v) { return abs(v) > cap; })) continue;
    Real residual(bits);
    Real scale(bits);
    for (size_t i = 0; i < m.size(); ++i) {
      const Real term = Real(m[i], bits) * values[i];
      residual += term;
      scale += abs(term);
    }
    if (!small_relative(residual, scale, ctx)) continue;
    FieldElement f;
    f.basis = basis;
    bool ok = true;
    for (size_t i = 1; i < m.size(); ++i) {
      mpq_class c(mpz_class(-m[i]), m[0]);
      c.canonicalize();
      if (c.get_den() > denom_cap) ok = false;
      f.coeffs.push_back(c);
    }
    if (ok) return f;
  }
  return std::nullopt;
}

std::optional<FieldElement> recognize_in_field_impl(const Real& x, const RealSource* source,
                                                    const std::vector<long>& basis, long denom_cap,
                                                    const PrecisionCtx& ctx) {
  if (basis.empty() || std::find(basis.begin(), basis.end(), 1L) == basis.end()) {
    throw PreconditionError("field basis must contain 1");
  }
  std::set<long> seen;
  for (long b : basis) {
    if (b < 1 || !is_squarefree(b) || !seen.insert(b).second) {
      throw PreconditionError("field basis entries must be distinct squarefree positive integers");
    }
  }
  if (ctx.digits <= 4 * ctx.guard) throw PreconditionError("recognize_in_field needs digits > 4 * guard");
  auto f = field_relation(x, basis, denom_cap, ctx);
  if (!f) return std::nullopt;
  if (source != nullptr) {
    const PrecisionCtx hi = ctx.doubled();
    const Real x2 = (*source)(hi).with_bits(hi.working_bits());
    const Real value = f->evaluate(hi.working_bits());
    if (!small_relative(x2 - value, max(abs(x2), Real(1L, hi.working_bits())), hi)) return std::nullopt;
  }
  return f;
}

}  // namespace

std::optional<FieldElement> recognize_in_field(const RealSource& x, const std::vector<long>& basis, long denom_cap,
                                               const PrecisionCtx& ctx) {
  return recognize_in_field_impl(x(ctx), &x, basis, denom_cap, ctx);
}

std::optional<FieldElement> recognize_in_field(const Real& x, const std::vector<long>& basis, long denom_cap,
                                               const PrecisionCtx& ctx) {
  return recognize_in_field_impl(x, nullptr, basis, denom_cap, ctx);
}

// ---------------------------------------------------------------------------
// Yi's s_n

Real yi_s(const SurdArg& n, const PrecisionCtx& ctx) {
  // q = exp(-2 pi sqrt(n/5)) = exp(-pi sqrt(4n/5))
  const SurdArg r = n.scaled(4, 5);
  const Real q = nome(r, ctx);
  const Real f1 = eval_f_neg_q(r, ctx);
  const Real f5 = eval_f_neg_q(r.scaled(25), ctx);
  const mpfr_prec_t bits = ctx.working_bits();
  Real s = pow(f1 / f5, 6) / (5L * sqrt(Real(5L, bits)) * q);
  s.set_at_digits(ctx.digits);
  return s;
}

Real yi_a_from_s(const Real& s) { return (5L * sqrt(Real(5L, s.bits())) * s + 11L) / 2L; }

namespace {

std::vector<long> prime_factors(std::int64_t v) {
  std::vector<long> out;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(static_cast<long>(p));
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(static_cast<long>(v));
  return out;
}

// Largest rational k > 0 with X = n1 / (5 k^2), Y = n2 / (5 k^2) integers.
mpq_class nesting_factor(const mpq_class& n1, const mpq_class& n2) {
  const mpq_class a = n1 / 5;
  const mpq_class b = n2 / 5;
  // Smallest integer m with m^2 a, m^2 b integral.
  mpz_class den = lcm(a.get_den(), b.get_den());
  mpz_class m = 1;
  {
    mpz_class d = den;
    for (mpz_class p = 2; p * p <= d; ++p) {
      while (d % p == 0) {
        d /= p;
        m *= p;
        if (d % p == 0) d /= p;
      }
    }
    if (d > 1) m *= d;
  }
  const mpq_class am = a * m * m;
  const mpq_class bm = b * m * m;
  const mpz_class g = gcd(am.get_num(), bm.get_num());
  // Largest square divisor of g.
  mpz_class sq = 1;
  mpz_class rest = abs(g);
  for (mpz_class p = 2; p * p <= rest && p < 1000000; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      sq *= p;
    }
    while (rest % p == 0) rest /= p;
  }
  mpq_class k(sq, m);
  k.canonicalize();
  return k;
}

}  // namespace

std::optional<std::string> nested_sqrt5_form(const FieldElement& s) {
  if (s.basis.size() != 4) return std::nullopt;
  auto idx = [&](long b) -> long {
    const auto it = std::find(s.basis.begin(), s.basis.end(), b);
    return it == s.basis.end() ? -1 : static_cast<long>(it - s.basis.begin());
  };
  const long i1 = idx(1);
  const long i5 = idx(5);
  if (i1 < 0 || i5 < 0) return std::nullopt;
  long p = 0;
  for (long b : s.basis) {
    if (b != 1 && b != 5 && idx(5 * b) >= 0) p = b;
  }
  if (p == 0) return std::nullopt;
  const mpq_class u = s.coeffs[static_cast<size_t>(i1)];
  const mpq_class v = s.coeffs[static_cast<size_t>(i5)];
  const mpq_class w = s.coeffs[static_cast<size_t>(idx(p))];
  const mpq_class z = s.coeffs[static_cast<size_t>(idx(5 * p))];

  FieldElement head{{1, 5}, {u, v}};
  std::string out = head.to_string();
  if (w == 0 && z == 0) return out;

  // t = w sqrt(p) + z sqrt(5p), t^2 = 5p (X + Y sqrt 5) k^2.
  const mpq_class n1 = w * w + 5 * z * z;
  const mpq_class n2 = 2 * w * z;
  const mpq_class k = nesting_factor(n1, n2);
  const mpq_class X = n1 / (5 * k * k);
  const mpq_class Y = n2 / (5 * k * k);
  // sign(t): compare w^2 p with 5 z^2 p when the signs differ.
  int sign_t;
  if (w >= 0 && z >= 0) {
    sign_t = 1;
  } else if (w <= 0 && z <= 0) {
    sign_t = -1;
  } else {
    sign_t = (w * w > 5 * z * z) ? sgn(w) : sgn(z);
  }
  const FieldElement inner{{1, 5}, {X, Y}};
  std::string kstr = k == 1 ? "" : k.get_str() + "*";
  if (!out.empty() && out != "0") {
    out += sign_t < 0 ? "-" : "+";
  } else {
    out = sign_t < 0 ? "-" : "";
  }
  out += kstr + "sqrt(" + std::to_string(5 * p) + "*(" + inner.to_string() + "))";
  return out;
}

nlohmann::json YiResult::to_json() const {
  nlohmann::json j{{"n", n.str()}, {"recognized", recognized()}};
  if (s_field) j["s_field"] = s_field->to_json();
  if (a_field) j["a_field"] = a_field->to_json();
  if (s_minpoly) j["s_minpoly"] = s_minpoly->to_json();
  if (closed_form) j["form"] = *closed_form;
  return j;
}

YiResult yi_recognize(const SurdArg& n, const PrecisionCtx& ctx) {
  YiResult res;
  res.n = n;
  const RealSource s_src = [n](const PrecisionCtx& c) { return yi_s(n, c); };
  const RealSource a_src = [n](const PrecisionCtx& c) { return yi_a_from_s(yi_s(n, c)); };
  res.s = s_src(ctx);
  res.a = yi_a_from_s(res.s);

  std::set<long> primes{2, 3};
  for (long p : prime_factors(n.num())) primes.insert(p);
  for (long p : prime_factors(n.den())) primes.insert(p);
  primes.erase(5);
  // Primes dividing n first, then the small ones.
  std::vector<long> order;
  for (long p : prime_factors(n.num())) {
    if (p != 5) order.push_back(p);
  }
  for (long p : prime_factors(n.den())) {
    if (p != 5 && std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
  }
  for (long p : primes) {
    if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
  }

  constexpr long kDenomCap = 10000;
  for (long p : order) {
    const std::vector<long> basis{1, 5, p, 5 * p};
    auto sf = recognize_in_field(s_src, basis, kDenomCap, ctx);
    if (!sf) continue;
    res.s_field = sf;
    res.a_field = recognize_in_field(a_src, basis, kDenomCap, ctx);
    res.closed_form = nested_sqrt5_form(*sf);
    break;
  }
  try {
    res.s_minpoly = recognize_minpoly(s_src, 8, 0, ctx);
  } catch (const PreconditionError&) {
    res.s_minpoly.reset();
  }
  return res;
}

}  // namespace rrcf
