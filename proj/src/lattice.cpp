#include "rrcf/lattice.hpp"

#include "rrcf/errors.hpp"
#include "rrcf/real.hpp"

#include <algorithm>

namespace rrcf {

mpz_class norm2(const std::vector<mpz_class>& v) {
  mpz_class s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

class Reducer {
 public:
  Reducer(IntMatrix& b, const LllOptions& opts) : b_(b), n_(b.size()), delta_(opts.delta) {
    gram_.assign(n_, std::vector<mpz_class>(n_));
    size_t max_bits = 1;
    for (size_t i = 0; i < n_; ++i) {
      for (size_t j = 0; j <= i; ++j) {
        gram_[i][j] = dot(b_[i], b_[j]);
        gram_[j][i] = gram_[i][j];
      }
      max_bits = std::max(max_bits, mpz_sizeinbase(gram_[i][i].get_mpz_t(), 2));
    }
    bits_ = opts.float_bits > 0 ? opts.float_bits
                                : static_cast<long>(max_bits) + 8 * static_cast<long>(n_) + 128;
    mu_.assign(n_, std::vector<Real>(n_, Real(bits_)));
    r_.assign(n_, std::vector<Real>(n_, Real(bits_)));
    B_.assign(n_, Real(bits_));
  }

  long run() {
    if (n_ < 2) return 0;
    long swaps = 0;
    size_t k = 1;
    compute_row(0);
    const Real half_plus(mpq_class(51, 100), bits_);
    while (k < n_) {
      if (k == 1) compute_row(0);
      for (int pass = 0;; ++pass) {
        if (pass > 1000) throw ConvergenceError("LLL size reduction did not stabilise");
        compute_row(k);
        bool changed = false;
        for (size_t jj = k; jj-- > 0;) {
          if (abs(mu_[k][jj]) > half_plus) {
            const mpz_class x = mu_[k][jj].round_to_mpz();
            for (size_t c = 0; c < b_[k].size(); ++c) b_[k][c] -= x * b_[jj][c];
            const Real xr(x, bits_);
            for (size_t i = 0; i < jj; ++i) mu_[k][i] -= xr * mu_[jj][i];
            mu_[k][jj] -= xr;
            changed = true;
          }
        }
        if (!changed) break;
        refresh_gram_row(k);
      }
      const Real lhs = B_[k];
      const Real rhs = (Real(std::to_string(delta_), bits_) - mu_[k][k - 1] * mu_[k][k - 1]) * B_[k - 1];
      if (lhs < rhs) {
        std::swap(b_[k], b_[k - 1]);
        swap_gram(k);
        ++swaps;
        k = std::max<size_t>(k - 1, 1);
      } else {
        ++k;
      }
    }
    return swaps;
  }

 private:
  void compute_row(size_t k) {
    for (size_t j = 0; j < k; ++j) {
      Real r(gram_[k][j], bits_);
      for (size_t i = 0; i < j; ++i) r -= mu_[j][i] * r_[k][i];
      r_[k][j] = r;
      mu_[k][j] = r / B_[j];
    }
    Real bk(gram_[k][k], bits_);
    for (size_t j = 0; j < k; ++j) bk -= mu_[k][j] * r_[k][j];
    if (!(bk > 0L)) throw PreconditionError("LLL: basis rows are linearly dependent");
    B_[k] = bk;
  }

  void refresh_gram_row(size_t k) {
    for (size_t i = 0; i < n_; ++i) {
      gram_[k][i] = dot(b_[k], b_[i]);
      gram_[i][k] = gram_[k][i];
    }
  }

  void swap_gram(size_t k) {
    std::swap(gram_[k], gram_[k - 1]);
    for (size_t i = 0; i < n_; ++i) std::swap(gram_[i][k], gram_[i][k - 1]);
  }

  IntMatrix& b_;
  size_t n_;
  double delta_;
  long bits_ = 0;
  std::vector<std::vector<mpz_class>> gram_;
  std::vector<std::vector<Real>> mu_;
  std::vector<std::vector<Real>> r_;
  std::vector<Real> B_;
};

}  // namespace

long lll_reduce(IntMatrix& basis, const LllOptions& opts) {
  if (basis.empty()) return 0;
  const size_t m = basis.front().size();
  for (const auto& row : basis) {
    if (row.size() != m) throw PreconditionError("LLL: ragged basis");
  }
  Reducer r(basis, opts);
  return r.run();
}

}  // namespace rrcf
