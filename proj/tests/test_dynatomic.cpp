#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "paradelta/cyclotomic.hpp"
#include "paradelta/dynatomic.hpp"
#include "paradelta/regions.hpp"
#include "paradelta/serialize.hpp"

using namespace paradelta;
namespace fs = std::filesystem;

namespace {

BivariatePolynomial B(std::initializer_list<std::tuple<int, int, long>> terms, const char* v1,
                      const char* v2) {
  BivariatePolynomial p(v1, v2);
  for (auto [i, j, c] : terms) p.set(i, j, p.coeff(i, j) + c);
  return p;
}

IntegerPolynomial P(std::initializer_list<long> c, const char* var) {
  return IntegerPolynomial::from_ints(c, var);
}

fs::path scratch_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() /
             ("paradelta-test-" + tag + "-" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Shared tower backed by the test cache when one is configured.
Tower& shared_tower() {
  static Tower tower([] {
    TowerOptions o;
    if (const char* env = std::getenv("PARADELTA_CACHE")) o.cache_dir = env;
    o.threads = 2;
    return o;
  }());
  return tower;
}

// Multipliers of the period-m cycles at an integer parameter, found from the
// numeric roots of the dynatomic polynomial; each cycle contributes once.
std::vector<std::complex<double>> numeric_multipliers(int m, long c0) {
  const auto phi = dynatomic_poly(m).evaluate("c", c0);
  const auto zs = polynomial_roots(phi);
  std::vector<std::complex<double>> lambdas;
  for (auto z : zs) {
    std::complex<double> lambda = 1, w = z;
    for (int i = 0; i < m; ++i) {
      lambda *= 2.0 * w;
      w = w * w + static_cast<double>(c0);
    }
    lambdas.push_back(lambda);
  }
  // Every multiplier appears m times; keep one per cluster.
  std::vector<std::complex<double>> out;
  for (auto l : lambdas) {
    bool seen = false;
    for (auto o : out) seen = seen || std::abs(o - l) < 1e-6 * (1 + std::abs(l));
    if (!seen) out.push_back(l);
  }
  return out;
}

}  // namespace

TEST_CASE("iterates") {
  CHECK(iterate(0) == B({{1, 0, 1}}, "z", "c"));
  CHECK(iterate(1) == B({{2, 0, 1}, {0, 1, 1}}, "z", "c"));
  CHECK(iterate(2) == B({{4, 0, 1}, {2, 1, 2}, {0, 2, 1}, {0, 1, 1}}, "z", "c"));
  CHECK(iterate_derivative(1) == B({{1, 0, 2}}, "z", "c"));
  CHECK(iterate_derivative(2) == B({{3, 0, 4}, {1, 1, 4}}, "z", "c"));
  const auto d3 = iterate_derivative(3);
  CHECK(d3.degree_in("z") == 7);
  CHECK(d3.leading_in("z") == IntegerPolynomial::constant(8, "c"));
}

TEST_CASE("dynatomic polynomials") {
  CHECK(dynatomic_poly(1) == B({{2, 0, 1}, {1, 0, -1}, {0, 1, 1}}, "z", "c"));
  CHECK(dynatomic_poly(2) == B({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, "z", "c"));
  for (int n = 1; n <= 6; ++n) {
    long expect = 0;
    for (auto d : divisors(n)) expect += mobius(n / d) * (1L << d);
    CHECK(dynatomic_degree(n) == expect);
    CHECK(dynatomic_poly(n).degree_in("z") == expect);
  }
  // Product over divisors recovers f^n(z) - z.
  for (int n = 1; n <= 5; ++n) {
    auto lhs = iterate(n) - B({{1, 0, 1}}, "z", "c");
    auto product = B({{0, 0, 1}}, "z", "c");
    for (auto d : divisors(n)) product = product * dynatomic_poly(static_cast<int>(d));
    CHECK(product == lhs);
  }
}

TEST_CASE("gamma polynomials") {
  CHECK(g_map() == P({1, 7, -1, 1}, "t"));
  CHECK(gamma_poly(2) == P({2, 7, -1, 1}, "t"));
  CHECK(gamma_poly(12).degree() == 12);
  CHECK(gamma_poly(5).coeff(0) == 5);
  for (int k = 2; k <= 15; ++k) CHECK(gamma_poly(k).degree() == 3 * static_cast<int>(euler_phi(k)));
}

TEST_CASE("small multiplier polynomials") {
  Tower& tower = shared_tower();
  CHECK(tower.multiplier(1).tilde == B({{2, 0, 1}, {1, 0, -2}, {0, 1, 1}}, "x", "C"));
  CHECK(tower.multiplier(2).tilde == B({{1, 0, 1}, {0, 1, -1}, {0, 0, -4}}, "x", "C"));
  CHECK(tower.multiplier(3).tilde ==
        B({{2, 0, 1}, {1, 1, -2}, {1, 0, -16}, {0, 3, 1}, {0, 2, 8}, {0, 1, 16}, {0, 0, 64}}, "x", "C"));
  const int deg_x[] = {0, 2, 1, 2, 3, 6, 9};
  for (int m = 1; m <= 5; ++m) {
    const auto mp = tower.multiplier(m);
    CHECK(mp.deg_x == deg_x[m]);
    CHECK(mp.tilde.is_monic_in("x"));
  }
  CHECK_THROWS_AS(tower.multiplier(7), Error);
  CHECK_THROWS_AS(tower.multiplier(0), Error);
}

TEST_CASE("multipliers agree with numerically computed cycles") {
  Tower& tower = shared_tower();
  const std::pair<int, long> cases[] = {{3, 1}, {4, 1}, {4, -3}, {5, 1}};
  for (auto [m, c0] : cases) {
    CAPTURE(m);
    CAPTURE(c0);
    const auto row = tower.multiplier(m).tilde.evaluate("C", 4 * c0);
    auto exact = polynomial_roots(row);
    auto numeric = numeric_multipliers(m, c0);
    REQUIRE(exact.size() == numeric.size());
    for (auto lambda : numeric) {
      double best = 1e300;
      for (auto r : exact) best = std::min(best, std::abs(r - lambda));
      CHECK(best < 1e-6 * (1 + std::abs(lambda)));
    }
  }
}

TEST_CASE("delta factors") {
  Tower& tower = shared_tower();
  CHECK(tower.delta_factor(3, 3).poly == P({7, 1}, "C"));
  CHECK(tower.delta_factor(3, 1).poly == P({7, 1, 1}, "C"));
  CHECK(tower.delta_factor(6, 3).poly == P({81, 18, 8, 1}, "C"));
  const auto d22 = tower.delta_factor(2, 2);
  CHECK(d22.poly == IntegerPolynomial::constant(-1, "C"));
  CHECK(d22.degenerate);
  CHECK_FALSE(tower.delta_factor(3, 3).degenerate);
  CHECK_THROWS_AS(tower.delta_factor(6, 4), Error);

  // The factors multiply back to delta-tilde_n(1, C).
  for (int n = 2; n <= 4; ++n) {
    auto product = IntegerPolynomial::constant(1, "C");
    for (auto d : divisors(n)) product *= tower.delta_factor(n, static_cast<int>(d)).poly;
    CHECK(product == tower.multiplier(n).tilde.evaluate("x", 1));
  }
}

TEST_CASE("delta factor (6,3) from the explicit formula") {
  // delta-tilde_3(-1, C): x = -1 is the primitive square root of unity.
  const auto explicit3 =
      B({{2, 0, 1}, {1, 1, -2}, {1, 0, -16}, {0, 3, 1}, {0, 2, 8}, {0, 1, 16}, {0, 0, 64}}, "x", "C");
  CHECK(shared_tower().delta_factor(6, 3).poly == explicit3.evaluate("x", -1));
}

TEST_CASE("parametrizations") {
  Tower& tower = shared_tower();
  CHECK(tower.verify_parametrization(Parametrization::X3));
  CHECK(tower.verify_parametrization(Parametrization::X4));
  CHECK_FALSE(tower.verify_parametrization(Parametrization::X3Perturbed));
}

TEST_CASE("gamma and delta factors agree") {
  Tower& tower = shared_tower();
  for (int k : {2, 3, 7}) {
    const auto r = tower.gamma_delta_identity(k);
    CHECK(r.identity);
    CHECK(r.separable);
  }
}

TEST_CASE("laurent substitution") {
  // p = x + C with x = t^2 / t and C = 1 / t, cleared by t: t^2 + 1.
  const auto p = B({{1, 0, 1}, {0, 1, 1}}, "x", "C");
  CHECK(laurent_substitute(p, P({0, 0, 1}, "t"), 1, P({1}, "t"), 1, 1) == P({1, 0, 1}, "t"));
  CHECK_THROWS_AS(laurent_substitute(p, P({0, 0, 1}, "t"), 1, P({1}, "t"), 1, 0), Error);
}

TEST_CASE("disk cache") {
  const auto dir = scratch_dir("cache");
  TowerOptions opts;
  opts.cache_dir = dir;
  MultiplierPolynomial first;
  {
    Tower t(opts);
    first = t.multiplier(4);
    CHECK(t.cache_path(4).filename() == "delta_m4.v1.json");
  }
  const auto path = dir / "delta_m4.v1.json";
  REQUIRE(fs::exists(path));
  {
    std::ifstream in(path);
    const auto j = nlohmann::ordered_json::parse(in);
    CHECK(j.contains("key"));
    CHECK(j.contains("digest"));
    CHECK(j["digest"].get<std::string>().size() == 64);
    CHECK(bivariate_from_json(j) == first.tilde);
  }
  {
    Tower t(opts);
    CHECK(t.multiplier(4).tilde == first.tilde);
  }
  // A damaged file is recomputed and rewritten.
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{\"key\": 1, \"digest\": \"00\"";
  }
  {
    Tower t(opts);
    CHECK(t.multiplier(4).tilde == first.tilde);
  }
  {
    std::ifstream in(path);
    CHECK(bivariate_from_json(nlohmann::ordered_json::parse(in)) == first.tilde);
  }
  // A file whose digest no longer matches its terms is ignored as well.
  {
    std::ifstream in(path);
    auto j = nlohmann::ordered_json::parse(in);
    j["terms"][0][2] = "5";
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
  }
  {
    Tower t(opts);
    CHECK(t.multiplier(4).tilde == first.tilde);
  }
  fs::remove_all(dir);
}

TEST_CASE("concurrent callers see one result") {
  Tower tower;
  std::vector<BivariatePolynomial> seen(4);
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { seen[i] = tower.multiplier(4).tilde; });
  }
  for (const auto& s : seen) CHECK(s == seen.front());
}
