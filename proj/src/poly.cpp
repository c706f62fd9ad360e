#include "rrcf/poly.hpp"

#include "rrcf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace rrcf {

IntPoly::IntPoly(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly IntPoly::from_descending(const std::vector<std::string>& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) c.emplace_back(*it);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::from_ascending(const std::vector<std::string>& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.emplace_back(s);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::height() const {
  mpz_class h = 0;
  for (const auto& c : coeffs_) h = std::max<mpz_class>(h, abs(c));
  return h;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(v / g);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  std::vector<mpz_class> c;
  for (size_t i = 1; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const mpz_class& k) const {
  std::vector<mpz_class> c;
  for (const auto& v : coeffs_) c.push_back(v * k);
  return IntPoly(std::move(c));
}

Real IntPoly::eval(const Real& x) const {
  Real acc(x.bits());
  acc.set_at_digits(x.at_digits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += Real(*it, x.bits());
  }
  return acc;
}

Real IntPoly::eval_abs_terms(const Real& x) const {
  const Real ax = abs(x);
  Real acc(x.bits());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= ax;
    acc += Real(mpz_class(abs(*it)), x.bits());
  }
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  return acc;
}

std::vector<std::string> IntPoly::descending_strings() const {
  std::vector<std::string> out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out.push_back(it->get_str());
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<size_t>(i)];
    if (c == 0) continue;
    const mpz_class a = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? "-" : "+";
    }
    const bool unit = a == 1 && i > 0;
    if (!unit) s += a.get_str();
    if (i > 0) {
      if (!unit) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

namespace {

using QPoly = std::vector<mpq_class>;  // ascending

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& p) {
  QPoly q;
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const mpq_class f = a.back() / b.back();
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
  qtrim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {};
  QPoly q(static_cast<size_t>(da - db + 1));
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int dcur = static_cast<int>(a.size()) - 1;
    const mpq_class f = a.back() / b.back();
    q[static_cast<size_t>(dcur - db)] = f;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(dcur - db + i)] -= f * b[static_cast<size_t>(i)];
    a.pop_back();
    qtrim(a);
  }
  return q;
}

// Positive rational multiple of p with coprime integer coefficients.
IntPoly to_primitive_positive_scale(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.get_den());
  std::vector<mpz_class> z;
  for (const auto& c : p) {
    mpq_class v = c * l;
    z.push_back(v.get_num());
  }
  IntPoly ip(std::move(z));
  const mpz_class g = ip.content();
  if (g == 0) return ip;
  std::vector<mpz_class> w;
  for (const auto& c : ip.coeffs()) w.push_back(c / g);
  return IntPoly(std::move(w));
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  const QPoly qp = to_q(p);
  const QPoly g = qgcd(qp, to_q(p.derivative()));
  if (g.size() <= 1) return p.primitive();
  return to_primitive_positive_scale(qquot(qp, g)).primitive();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p, p.derivative()};
  for (;;) {
    const QPoly r = qrem(to_q(chain[chain.size() - 2]), to_q(chain.back()));
    if (r.empty()) break;
    QPoly neg;
    for (const auto& c : r) neg.push_back(-c);
    chain.push_back(to_primitive_positive_scale(neg));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sgn(s.eval(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

mpz_class cauchy_bound(const IntPoly& p) {
  const mpz_class lead = abs(p.leading());
  mpz_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max<mpz_class>(m, abs(p[i]));
  mpz_class b = m / lead + 2;
  return b;
}

}  // namespace

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const IntPoly& p_in) {
  if (p_in.degree() < 1) return {};
  const IntPoly p = squarefree_part(p_in);
  const auto chain = sturm_chain(p);
  const mpq_class bound(cauchy_bound(p));

  std::vector<std::pair<mpq_class, mpq_class>> out;
  // Depth-first, left before right, so output is ascending.
  std::function<void(const mpq_class&, const mpq_class&, int, int)> split =
      [&](const mpq_class& lo, const mpq_class& hi, int v_lo, int v_hi) {
        const int count = v_lo - v_hi;
        if (count <= 0) return;
        if (count == 1) {
          out.emplace_back(lo, hi);
          return;
        }
        const mpq_class mid = (lo + hi) / 2;
        const int v_mid = sign_variations(chain, mid);
        split(lo, mid, v_lo, v_mid);
        split(mid, hi, v_mid, v_hi);
      };
  split(-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound));

  // Collapse exact rational roots at the right endpoint; move left endpoints
  // off roots so each interval brackets a sign change.
  for (auto& [lo, hi] : out) {
    if (p.eval(hi) == 0) {
      lo = hi;
      continue;
    }
    while (p.eval(lo) == 0) {
      const mpq_class mid = (lo + hi) / 2;
      if (sign_variations(chain, mid) - sign_variations(chain, hi) == 1) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  return out;
}

int count_real_roots(const IntPoly& p) { return static_cast<int>(isolate_real_roots(p).size()); }

Real refine_root(const IntPoly& p_in, const std::pair<mpq_class, mpq_class>& interval, mpfr_prec_t bits) {
  const mpfr_prec_t wb = bits + 32;
  if (interval.first == interval.second) return Real(interval.first, bits);
  const IntPoly p = squarefree_part(p_in);
  const IntPoly dp = p.derivative();
  const int s_lo = sgn(p.eval(interval.first));
  Real a(interval.first, wb);
  Real b(interval.second, wb);
  Real x = (a + b) / 2L;
  const Real tol_scale = pow(Real(2L, wb), -static_cast<long>(bits) - 4);
  for (int iter = 0; iter < 100000; ++iter) {
    const Real fx = p.eval(x);
    if (fx.is_zero()) break;
    if (fx.sign() == s_lo) {
      a = x;
    } else {
      b = x;
    }
    const Real scale = max(Real(1L, wb), abs(x));
    const Real width = b - a;
    if (width <= tol_scale * scale) {
      x = (a + b) / 2L;
      break;
    }
    const Real dfx = dp.eval(x);
    bool newton_ok = false;
    if (!dfx.is_zero()) {
      Real xn = x - fx / dfx;
      if (xn > a && xn < b) {
        const Real step = abs(xn - x);
        x = std::move(xn);
        newton_ok = true;
        if (step <= tol_scale * scale) break;
      }
    }
    if (!newton_ok) x = (a + b) / 2L;
  }
  return x.with_bits(bits);
}

std::vector<Real> real_roots(const IntPoly& p, mpfr_prec_t bits) {
  std::vector<Real> roots;
  for (const auto& iv : isolate_real_roots(p)) roots.push_back(refine_root(p, iv, bits));
  return roots;
}

namespace {

struct Cx {
  Real re;
  Real im;
};

Cx cadd(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx csub(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx cmul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Real cabs2(const Cx& a) { return a.re * a.re + a.im * a.im; }
Cx cdiv(const Cx& a, const Cx& b) {
  const Real d = cabs2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// Upper convex hull of (i, log|a_i|) gives the root moduli clusters.
std::vector<Cx> newton_polygon_start(const IntPoly& p, mpfr_prec_t bits) {
  const int n = p.degree();
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i <= n; ++i) {
    if (p[i] == 0) continue;
    long e = 0;
    const double m = mpz_get_d_2exp(&e, p[i].get_mpz_t());
    pts.emplace_back(i, std::log(std::fabs(m)) + static_cast<double>(e) * std::numbers::ln2);
  }
  std::vector<std::pair<int, double>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<Cx> z;
  int placed = 0;
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    const int k = hull[h + 1].first - hull[h].first;
    const double log_r = (hull[h].second - hull[h + 1].second) / k;
    for (int j = 0; j < k; ++j) {
      const double ang = 2.0 * std::numbers::pi * j / k + 0.7 + 0.37 * placed / n;
      Real rr(bits);
      mpfr_set_d(rr.get(), log_r, MPFR_RNDN);
      rr = exp(rr);
      Real c(bits);
      Real s(bits);
      mpfr_set_d(c.get(), std::cos(ang), MPFR_RNDN);
      mpfr_set_d(s.get(), std::sin(ang), MPFR_RNDN);
      z.push_back({rr * c, rr * s});
      ++placed;
    }
  }
  // Roots at zero (trailing zero coefficients) are not covered by the hull.
  while (static_cast<int>(z.size()) < n) z.push_back({Real(bits), Real(bits)});
  return z;
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const IntPoly& p, mpfr_prec_t bits) {
  const int n = p.degree();
  if (n < 1) return {};
  const mpfr_prec_t wb = bits + 32;
  int zeros = 0;
  while (p[zeros] == 0) ++zeros;
  std::vector<mpz_class> shifted(p.coeffs().begin() + zeros, p.coeffs().end());
  const IntPoly q(std::move(shifted));
  const int m = q.degree();

  std::vector<Cx> z = m > 0 ? newton_polygon_start(q, wb) : std::vector<Cx>{};
  std::vector<Real> coef;
  for (const auto& c : q.coeffs()) coef.emplace_back(c, wb);

  auto eval_pd = [&](const Cx& x, Cx& px, Cx& dpx) {
    px = {coef.back(), Real(wb)};
    dpx = {Real(wb), Real(wb)};
    for (int i = m - 1; i >= 0; --i) {
      dpx = cadd(cmul(dpx, x), px);
      px = cmul(px, x);
      px.re += coef[static_cast<size_t>(i)];
    }
  };

  const Real tol = pow(Real(2L, wb), -static_cast<long>(bits));
  std::vector<bool> done(static_cast<size_t>(m), false);
  for (int iter = 0; iter < 2000 && m > 0; ++iter) {
    bool all_done = true;
    for (int i = 0; i < m; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      Cx px;
      Cx dpx;
      eval_pd(z[static_cast<size_t>(i)], px, dpx);
      if (cabs2(px).is_zero()) {
        done[static_cast<size_t>(i)] = true;
        continue;
      }
      const Cx ratio = cdiv(px, dpx);
      Cx sum{Real(wb), Real(wb)};
      for (int j = 0; j < m; ++j) {
        if (j == i) continue;
        sum = cadd(sum, cdiv({Real(1L, wb), Real(wb)}, csub(z[static_cast<size_t>(i)], z[static_cast<size_t>(j)])));
      }
      const Cx denom = csub({Real(1L, wb), Real(wb)}, cmul(ratio, sum));
      const Cx w = cdiv(ratio, denom);
      z[static_cast<size_t>(i)] = csub(z[static_cast<size_t>(i)], w);
      const Real scale = max(Real(1L, wb), cabs2(z[static_cast<size_t>(i)]));
      if (cabs2(w) <= tol * tol * scale) {
        done[static_cast<size_t>(i)] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  if (!std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
    throw ConvergenceError("Aberth iteration did not converge");
  }

  std::vector<ComplexRoot> out;
  for (int i = 0; i < zeros; ++i) out.push_back({Real(bits), Real(bits)});
  for (auto& r : z) out.push_back({r.re.with_bits(bits), r.im.with_bits(bits)});
  return out;
}

bool divides(const IntPoly& d, const IntPoly& p) {
  if (d.is_zero()) return false;
  return qrem(to_q(p), to_q(d)).empty();
}

bool is_irreducible(const IntPoly& p_in) {
  const IntPoly p = p_in.primitive();
  const int n = p.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  if (p[0] == 0) return false;

  // Landau: coefficients of any factor scaled by lc(p) are bounded by
  // lc * ||p||_2 * 2^n; carry 40 extra digits.
  mpz_class norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  const double log10_norm = 0.5 * static_cast<double>(mpz_sizeinbase(norm2.get_mpz_t(), 2)) * 0.30103;
  const double log10_lc = static_cast<double>(mpz_sizeinbase(p.leading().get_mpz_t(), 2)) * 0.30103;
  const int digits = static_cast<int>(40 + log10_norm + log10_lc + n * 0.30103);
  const mpfr_prec_t bits = bits_for_digits(digits);
  const auto roots = complex_roots(p, bits);

  const Real lc(p.leading(), bits);
  const Real tol("1e-12", bits);
  bool reducible = false;
  std::vector<Cx> prod{{lc, Real(bits)}};  // ascending coefficients

  std::function<void(int, int)> dfs = [&](int start, int size) {
    if (reducible) return;
    for (int i = start; i < n && !reducible; ++i) {
      const Cx r{roots[static_cast<size_t>(i)].re, roots[static_cast<size_t>(i)].im};
      std::vector<Cx> saved = prod;
      std::vector<Cx> next(prod.size() + 1, Cx{Real(bits), Real(bits)});
      for (size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] = cadd(next[k + 1], prod[k]);
        next[k] = csub(next[k], cmul(r, prod[k]));
      }
      prod = std::move(next);
      const int new_size = size + 1;
      bool integral = true;
      std::vector<mpz_class> cand;
      for (const auto& c : prod) {
        if (abs(c.im) > tol) {
          integral = false;
          break;
        }
        const mpz_class zi = c.re.round_to_mpz();
        if (abs(c.re - Real(zi, bits)) > tol) {
          integral = false;
          break;
        }
        cand.push_back(zi);
      }
      if (integral) {
        const IntPoly g = IntPoly(cand).primitive();
        if (g.degree() >= 1 && g.degree() < n && divides(g, p)) {
          reducible = true;
        }
      }
      if (!reducible && 2 * (new_size + 1) <= n) {
        dfs(i + 1, new_size);
      }
      prod = std::move(saved);
    }
  };
  dfs(0, 0);
  return !reducible;
}

}  // namespace rrcf
