#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numeric>

#include "paradelta/cyclotomic.hpp"

using namespace paradelta;

namespace {

// Brute-force oracles.
int mobius_naive(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t phi_naive(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) ++count;
  return count;
}

IntegerPolynomial P(std::initializer_list<long> c) { return IntegerPolynomial::from_ints(c); }

}  // namespace

TEST_CASE("mobius and totient") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(79) == 78);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    CHECK(mobius(n) == mobius_naive(n));
    CHECK(euler_phi(n) == phi_naive(n));
  }
  CHECK_THROWS_AS(mobius(0), Error);
}

TEST_CASE("divisors are sorted and complete") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::vector<std::uint64_t> naive;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) naive.push_back(d);
    CHECK(divisors(n) == naive);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == P({-1, 1}));
  CHECK(cyclotomic_poly(6) == P({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == P({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_poly(5, "y").var() == "y");

  for (std::uint64_t n = 1; n <= 100; ++n) {
    auto product = IntegerPolynomial::constant(1);
    for (auto d : divisors(n)) product *= cyclotomic_poly(d);
    CHECK(product == IntegerPolynomial::monomial(1, static_cast<int>(n)) - IntegerPolynomial::constant(1));
    CHECK(cyclotomic_poly(n).degree() == static_cast<int>(euler_phi(n)));
  }
}

TEST_CASE("primitive roots of unity are the roots") {
  for (int k = 1; k <= 30; ++k) {
    const auto phi = cyclotomic_poly(k);
    for (int j = 0; j < k; ++j) {
      const auto z = std::polar(1.0, 2 * std::acos(-1.0) * j / k);
      std::complex<double> v = 0;
      for (int i = phi.degree(); i >= 0; --i) v = v * z + phi.coeff(i).get_d();
      if (std::gcd(j, k) == 1)
        CHECK(std::abs(v) < 1e-9);
      else
        CHECK(std::abs(v) > 1e-6);
    }
  }
}

TEST_CASE("prime power relation") {
  // Phi_{k p^e}(x) = Phi_k(x^{p^e}) / Phi_k(x^{p^{e-1}}) for p not dividing k.
  const int cases[][3] = {{2, 3, 1}, {3, 2, 2}, {5, 2, 1}};
  for (const auto& c : cases) {
    const int k = c[0], p = c[1], e = c[2];
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const auto base = cyclotomic_poly(k);
    const auto top = compose(base, IntegerPolynomial::monomial(1, pe));
    const auto bottom = compose(base, IntegerPolynomial::monomial(1, pe / p));
    CHECK(exact_divide(top, bottom) == cyclotomic_poly(static_cast<std::uint64_t>(k * pe)));
  }
}

TEST_CASE("discriminants") {
  auto d8 = cyclotomic_discriminant(8);
  CHECK(d8.value == 256);
  CHECK(d8.is_square);
  auto d5 = cyclotomic_discriminant(5);
  CHECK(d5.value == 125);
  CHECK_FALSE(d5.is_square);
  auto d12 = cyclotomic_discriminant(12);
  CHECK(d12.value == 144);
  CHECK(d12.is_square);
  CHECK(cyclotomic_discriminant(2).value == 1);

  // Oracle: the discriminant from the resultant with the derivative.
  for (std::uint64_t k = 3; k <= 60; ++k) {
    CAPTURE(k);
    CHECK(cyclotomic_discriminant(k).value == discriminant(cyclotomic_poly(k)));
  }

  std::vector<std::uint64_t> squares;
  for (std::uint64_t k = 3; k <= 20; ++k)
    if (cyclotomic_discriminant(k).is_square) squares.push_back(k);
  CHECK(squares == std::vector<std::uint64_t>{8, 12, 15, 16, 20});
}

TEST_CASE("records") {
  auto r = cyclotomic_record(12);
  CHECK(r.poly == cyclotomic_poly(12));
  CHECK(r.disc == 144);
  CHECK(r.disc_is_square);
}
