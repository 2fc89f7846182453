#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paradelta/exactpoly.hpp"
#include "paradelta/resultant.hpp"
#include "paradelta/serialize.hpp"

using namespace paradelta;

namespace {

IntegerPolynomial P(std::initializer_list<long> c, const char* var = "x") {
  return IntegerPolynomial::from_ints(c, var);
}

// Bivariate from a list of (i, j, coeff) triples.
BivariatePolynomial B(std::initializer_list<std::tuple<int, int, long>> terms,
                      const char* v1, const char* v2) {
  BivariatePolynomial p(v1, v2);
  for (auto [i, j, c] : terms) p.set(i, j, p.coeff(i, j) + c);
  return p;
}

IntegerPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound,
                              const char* var = "x") {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntegerPolynomial(c, var);
}

// Fraction-free integer determinant (Bareiss); independent of the library.
Integer bareiss(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer sylvester_oracle(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  const int na = a.degree(), nb = b.degree();
  const int n = na + nb;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (int r = 0; r < nb; ++r)
    for (int t = 0; t <= na; ++t) m[r][r + t] = a.coeff(na - t);
  for (int r = 0; r < na; ++r)
    for (int t = 0; t <= nb; ++t) m[nb + r][r + t] = b.coeff(nb - t);
  return bareiss(m);
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
  CHECK(pow(P({-1, 1}), 0) == P({1}));
  auto f1 = B({{2, 0, 1}, {1, 0, -1}, {0, 1, 1}}, "z", "c");
  auto f2 = B({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, "z", "c");
  auto expect = B({{4, 0, 1}, {2, 1, 2}, {1, 0, -1}, {0, 2, 1}, {0, 1, 1}}, "z", "c");
  CHECK(f1 * f2 == expect);
  CHECK_THROWS_AS(P({1, 1}, "x") + P({1, 1}, "t"), Error);
  CHECK(P({1, 1}, "x") + P({2}, "t") == P({3, 1}, "x"));
}

TEST_CASE("exact division") {
  auto num = B({{4, 0, 1}, {2, 1, 2}, {1, 0, -1}, {0, 2, 1}, {0, 1, 1}}, "z", "c");
  auto den = B({{2, 0, 1}, {1, 0, -1}, {0, 1, 1}}, "z", "c");
  CHECK(exact_divide(num, den, "z") == B({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, "z", "c"));
  CHECK(exact_divide(P({-1, 0, 1}), P({-1, 1})) == P({1, 1}));
  try {
    exact_divide(P({0, 0, 1}), P({1, 1}));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng, 8, 50);
    auto q = random_poly(rng, 6, 50);
    if (q.is_zero()) continue;
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("derivatives") {
  auto p = B({{3, 0, 1}, {1, 1, 1}}, "z", "c");
  CHECK(derivative(p, "z") == B({{2, 0, 3}, {0, 1, 1}}, "z", "c"));
  CHECK(derivative(B({{2, 0, 1}, {0, 1, 1}}, "z", "c"), "z") == B({{1, 0, 2}}, "z", "c"));
  CHECK(derivative(P({81, 18, 8, 1}, "C"), "C") == P({18, 16, 3}, "C"));
  CHECK_THROWS_AS(derivative(p, "w"), Error);
}

TEST_CASE("composition") {
  auto g = P({1, 7, -1, 1}, "t");
  CHECK(compose(P({1, 1}, "y"), g) == P({2, 7, -1, 1}, "t"));
  CHECK(compose(P({0, 0, 1}), P({1, 1}, "t")) == P({1, 2, 1}, "t"));
  CHECK(compose(P({5}), g) == P({5}, "t"));
  CHECK(compose(P({3, 0, 2, 1}), g).degree() == 9);
}

TEST_CASE("integer interpolation") {
  using V = std::vector<std::pair<Integer, Integer>>;
  CHECK(interpolate_integer(V{{0, 1}, {1, 2}, {2, 5}}, "t") == P({1, 0, 1}, "t"));
  CHECK(interpolate_integer(V{{0, 0}, {1, 0}, {2, 0}}).is_zero());
  try {
    interpolate_integer(V{{0, 1}, {2, 2}});
    FAIL("expected NonIntegralInterpolant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralInterpolant);
  }
}

TEST_CASE("crt reconstruction") {
  CHECK(crt_reconstruct({{5, 7}, {2, 3}}) == 17);
  CHECK(crt_reconstruct({{5, 7}, {4, 6}}) == -1);
  CHECK(crt_reconstruct({{5, 7}, {0, 0}}) == 0);
  CHECK_THROWS_AS(crt_reconstruct({{5, 7}, {1}}), Error);

  std::mt19937_64 rng(3);
  const std::vector<std::uint64_t> primes = {1000003, 998244353, 4611686018427387847ULL};
  Integer modulus = 1;
  for (auto q : primes) modulus *= Integer(std::to_string(q));
  Integer half = modulus / 2;
  for (int trial = 0; trial < 100; ++trial) {
    Integer v = Integer(static_cast<long>(rng() >> 2)) * Integer(static_cast<long>(rng() >> 2));
    if (trial % 2) v = -v;
    v %= half;
    PrimeResidueSystem sys{primes, {}};
    for (auto q : primes) sys.residues.push_back(mpz_fdiv_ui(v.get_mpz_t(), q));
    CHECK(crt_reconstruct(sys) == v);
  }
}

TEST_CASE("univariate resultant") {
  CHECK(resultant(P({-3, 1}), P({-5, 1})) == -2);
  CHECK(resultant(P({1, 1, 1}), P({-2, 1})) == 7);
  CHECK(resultant(P({1, 0, 1}), P({1, 0, 1})) == 0);
}

TEST_CASE("resultant matches Sylvester determinant and its identities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_poly(rng, 7, 20);
    auto b = random_poly(rng, 7, 20);
    auto c = random_poly(rng, 4, 20);
    if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
    CHECK(resultant(a, b) == sylvester_oracle(a, b));
    const int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
    CHECK(resultant(a, b) == sign * resultant(b, a));
    CHECK(resultant(a, b * c) == resultant(a, b) * resultant(a, c));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({1, 1, 1})) == -3);
  CHECK(discriminant(P({1, 0, 1})) == -4);
  CHECK(discriminant(P({-2, 0, 1})) == 8);
}

TEST_CASE("nth root") {
  auto lin = B({{1, 0, 1}, {0, 1, -1}, {0, 0, -4}}, "x", "C");
  CHECK(nth_root(pow(lin, 2), 2, "x") == lin);
  auto quad = B({{2, 0, 1}, {1, 0, -2}, {0, 1, 1}}, "x", "C");
  CHECK(nth_root(pow(quad, 3), 3, "x") == quad);
  try {
    nth_root(B({{2, 0, 1}, {0, 0, 1}}, "x", "C"), 2, "x");
    FAIL("expected NotAPerfectPower");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPerfectPower);
  }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (unsigned n : {2u, 3u, 6u}) {
    for (int trial = 0; trial < 10; ++trial) {
      BivariatePolynomial r("x", "C");
      const int d = 1 + static_cast<int>(rng() % 3);
      r.set(d, 0, 1);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j <= 2; ++j) r.set(i, j, coef(rng));
      CHECK(nth_root(pow(r, n), n, "x") == r);
    }
  }
}

TEST_CASE("rebase to C = 4c") {
  auto d1 = B({{2, 0, 1}, {1, 0, -2}, {0, 1, 4}}, "x", "c");
  CHECK(rebase_4c(d1) == B({{2, 0, 1}, {1, 0, -2}, {0, 1, 1}}, "x", "C"));
  auto d2 = B({{1, 0, 1}, {0, 1, -4}, {0, 0, -4}}, "x", "c");
  CHECK(rebase_4c(d2) == B({{1, 0, 1}, {0, 1, -1}, {0, 0, -4}}, "x", "C"));
  try {
    rebase_4c(B({{1, 0, 1}, {0, 1, -2}}, "x", "c"));
    FAIL("expected NotIn4cRing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIn4cRing);
  }
}

TEST_CASE("serialization") {
  auto d3 = B({{2, 0, 1}, {1, 1, -2}, {1, 0, -16}, {0, 3, 1}, {0, 2, 8}, {0, 1, 16}, {0, 0, 64}},
              "x", "C");
  auto j = to_json(d3);
  CHECK(j.dump() ==
        R"({"vars":["x","C"],"terms":[[2,0,"1"],[1,1,"-2"],[1,0,"-16"],[0,3,"1"],[0,2,"8"],[0,1,"16"],[0,0,"64"]]})");
  CHECK(bivariate_from_json(j) == d3);
  CHECK(to_text(d3) == "x^2 - 2*x*C - 16*x + C^3 + 8*C^2 + 16*C + 64");
  auto g = P({2, 7, -1, 1}, "t");
  CHECK(to_text(g) == "t^3 - t^2 + 7*t + 2");
  CHECK(univariate_from_json(to_json(g)) == g);
  CHECK(to_text(P({-7, -1}, "C")) == "-C - 7");
  CHECK(to_text(IntegerPolynomial({}, "C")) == "0");
  CHECK_THROWS_AS(bivariate_from_json(nlohmann::ordered_json::parse(R"({"vars":["x"]})")), Error);
}
