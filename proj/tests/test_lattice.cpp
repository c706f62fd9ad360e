#include "rrcf/errors.hpp"
#include "rrcf/lattice.hpp"

#include <doctest.h>

using namespace rrcf;

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpz_class det3(const IntMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("textbook 3x3 example") {
  IntMatrix b{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  const mpz_class d = abs(det3(b));
  lll_reduce(b);
  CHECK(abs(det3(b)) == d);
  // Known reduced basis (up to signs): (0,1,0), (1,0,1), (-1,0,2).
  CHECK(norm2(b[0]) == 1);
  CHECK(norm2(b[1]) == 2);
  CHECK(norm2(b[2]) == 5);
}

TEST_CASE("short integer relation among 1, 3, 5") {
  const mpz_class N("1000000000000");
  IntMatrix b{{1, 0, 0, N * 1}, {0, 1, 0, N * 3}, {0, 0, 1, N * 5}};
  lll_reduce(b);
  // The shortest relations are (1, -2, 1) and (2, 1, -1).
  CHECK(b[0][3] == 0);
  CHECK(dot(b[0], {1, 3, 5, 0}) == 0);
  CHECK(norm2(b[0]) <= 10);
}

TEST_CASE("dependent rows are rejected") {
  IntMatrix b{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(lll_reduce(b), PreconditionError);
}
