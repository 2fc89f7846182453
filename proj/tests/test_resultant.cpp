#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "paradelta/resultant.hpp"

using namespace paradelta;

namespace {

BivariatePolynomial B(std::initializer_list<std::tuple<int, int, long>> terms,
                      const char* v1, const char* v2) {
  BivariatePolynomial p(v1, v2);
  for (auto [i, j, c] : terms) p.set(i, j, p.coeff(i, j) + c);
  return p;
}

// Exact determinant by fraction-free elimination over Z.
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

// Coefficients of z^i in a (z, w) bivariate after fixing the two
// surviving variables: a(z; u, v) is stored as terms in z, u, v.
struct Trivariate {
  std::map<std::tuple<int, int, int>, long> terms;  // (z, u, v) -> coeff
  int deg_z() const {
    int d = 0;
    for (auto& [e, c] : terms) d = std::max(d, std::get<0>(e));
    return d;
  }
  std::vector<Integer> at(const Integer& u, const Integer& v, int nz) const {
    std::vector<Integer> out(nz + 1, 0);
    for (auto& [e, c] : terms) {
      Integer t = c;
      Integer pu, pv;
      mpz_pow_ui(pu.get_mpz_t(), u.get_mpz_t(), std::get<1>(e));
      mpz_pow_ui(pv.get_mpz_t(), v.get_mpz_t(), std::get<2>(e));
      out[std::get<0>(e)] += t * pu * pv;
    }
    return out;
  }
  EliminationPoly lifted() const {
    EliminationPoly out(deg_z() + 1, BivariatePolynomial("u", "v"));
    for (auto& [e, c] : terms) {
      auto& slot = out[std::get<0>(e)];
      slot.set(std::get<1>(e), std::get<2>(e), slot.coeff(std::get<1>(e), std::get<2>(e)) + c);
    }
    return out;
  }
};

Integer sylvester_at(const Trivariate& a, const Trivariate& b, const Integer& u,
                     const Integer& v) {
  const int na = a.deg_z(), nb = b.deg_z();
  auto ca = a.at(u, v, na);
  auto cb = b.at(u, v, nb);
  const int n = na + nb;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  for (int r = 0; r < nb; ++r)
    for (int t = 0; t <= na; ++t) m[r][r + t] = ca[na - t];
  for (int r = 0; r < na; ++r)
    for (int t = 0; t <= nb; ++t) m[nb + r][r + t] = cb[nb - t];
  return bareiss(m);
}

Trivariate random_trivariate(std::mt19937_64& rng, int dz, int du, int dv) {
  std::uniform_int_distribution<long> coef(-5, 5);
  Trivariate t;
  t.terms[{dz, 0, 0}] = 1 + static_cast<long>(rng() % 3);
  for (int k = 0; k < 3 * dz + 2; ++k) {
    int i = static_cast<int>(rng() % dz);
    int j = static_cast<int>(rng() % (du + 1));
    int l = static_cast<int>(rng() % (dv + 1));
    t.terms[{i, j, l}] += coef(rng);
  }
  return t;
}

}  // namespace

TEST_CASE("small eliminations") {
  auto a = B({{2, 0, 1}, {1, 0, -1}, {0, 1, 1}}, "z", "c");
  auto b = BivariatePolynomial::from_rows(
      {IntegerPolynomial::from_ints({0, 1}, "x"), IntegerPolynomial::from_ints({-2}, "x")}, "z",
      "x");
  auto r = resultant_in_z(a, b, {2, 1}, "x", "c");
  CHECK(r == B({{2, 0, 1}, {1, 0, -2}, {0, 1, 4}}, "x", "c"));

  auto a2 = B({{1, 0, 1}, {0, 1, -1}}, "z", "c");
  auto b2 = B({{2, 0, -1}, {0, 1, 1}}, "z", "x");
  CHECK(resultant_in_z(a2, b2, {1, 2}, "x", "c") == B({{1, 0, 1}, {0, 2, -1}}, "x", "c"));

  auto sq = B({{2, 0, 1}, {0, 0, 1}}, "z", "c");
  CHECK(resultant_in_z(sq, sq, {0, 0}, "x", "c").is_zero());
}

TEST_CASE("bounds that are too small are rejected") {
  auto a = B({{2, 0, 1}, {1, 0, -1}, {0, 1, 1}}, "z", "c");
  auto b = B({{1, 0, -2}, {0, 1, 1}}, "z", "x");
  try {
    resultant_in_z(a, b, {1, 1}, "x", "c");
    FAIL("expected DegreeBoundViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBoundViolated);
  }
}

TEST_CASE("elimination agrees with exact Sylvester determinants on a full grid") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const int dza = 1 + static_cast<int>(rng() % 4);
    const int dzb = 1 + static_cast<int>(rng() % 4);
    auto a = random_trivariate(rng, dza, 2, 1);
    auto b = random_trivariate(rng, dzb, 1, 2);
    if (trial % 3 == 0) a = random_trivariate(rng, 8, 1, 1);
    const int na = a.deg_z(), nb = b.deg_z();
    // Each Sylvester row of A contributes its (u, v) degree nb times.
    const ResultantBounds bounds{2 * nb + 1 * na, 1 * nb + 2 * na};
    ResultantOptions opts;
    opts.threads = 1 + trial % 2;
    ResultantTrace trace;
    auto r = resultant_eliminate(a.lifted(), b.lifted(), "u", "v", bounds, opts, &trace);
    CHECK(trace.primes_used >= 1);
    // Agreement on (deg_u + 1) x (deg_v + 1) points plus extras pins the polynomial.
    for (int u = -bounds.deg_u / 2 - 1; u <= bounds.deg_u / 2 + 2; ++u)
      for (int v = -bounds.deg_v / 2 - 1; v <= bounds.deg_v / 2 + 2; ++v)
        CHECK(r.evaluate(Integer(u), Integer(v)) == sylvester_at(a, b, u, v));
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937_64 rng(99);
  auto a = random_trivariate(rng, 5, 2, 2);
  auto b = random_trivariate(rng, 4, 2, 2);
  const ResultantBounds bounds{18, 18};
  ResultantOptions one, four;
  four.threads = 4;
  CHECK(resultant_eliminate(a.lifted(), b.lifted(), "u", "v", bounds, one) ==
        resultant_eliminate(a.lifted(), b.lifted(), "u", "v", bounds, four));
}
