#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "paradelta/paradelta.h"

namespace {

struct Context {
  pd_context* ctx = nullptr;
  Context() {
    const char* dir = std::getenv("PARADELTA_CACHE");
    REQUIRE(pd_context_new(dir, 2, &ctx) == PD_OK);
  }
  ~Context() { pd_context_free(ctx); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  pd_string_free(s);
  return out;
}

std::string text_of(pd_poly* p) {
  char* s = nullptr;
  REQUIRE(pd_poly_text(p, &s) == PD_OK);
  return take(s);
}

std::string json_of(pd_poly* p) {
  char* s = nullptr;
  REQUIRE(pd_poly_json(p, &s) == PD_OK);
  return take(s);
}

struct Checks {
  int ok = 0, bad = 0;
  std::vector<std::string> names;
};

void collect(void* user, int ok, const char* name, const char* /*detail*/) {
  auto* c = static_cast<Checks*>(user);
  (ok ? c->ok : c->bad)++;
  c->names.emplace_back(name);
}

}  // namespace

TEST_CASE("polynomials through the C interface") {
  Context c;
  pd_poly* p = nullptr;
  REQUIRE(pd_multiplier(c.ctx, 3, &p) == PD_OK);
  CHECK(text_of(p) == "x^2 - 2*x*C - 16*x + C^3 + 8*C^2 + 16*C + 64");
  CHECK(json_of(p) ==
        R"({"vars":["x","C"],"terms":[[2,0,"1"],[1,1,"-2"],[1,0,"-16"],[0,3,"1"],[0,2,"8"],[0,1,"16"],[0,0,"64"]]})");
  pd_poly_free(p);

  int degenerate = -1;
  REQUIRE(pd_delta_factor(c.ctx, 3, 3, &p, &degenerate) == PD_OK);
  CHECK(text_of(p) == "C + 7");
  CHECK(degenerate == 0);
  pd_poly_free(p);
  REQUIRE(pd_delta_factor(c.ctx, 2, 2, &p, &degenerate) == PD_OK);
  CHECK(degenerate == 1);
  pd_poly_free(p);

  REQUIRE(pd_gamma(2, &p) == PD_OK);
  CHECK(text_of(p) == "t^3 - t^2 + 7*t + 2");
  pd_poly_free(p);
  REQUIRE(pd_iterate(1, &p) == PD_OK);
  CHECK(text_of(p) == "z^2 + c");
  pd_poly_free(p);
  REQUIRE(pd_dynatomic(2, &p) == PD_OK);
  CHECK(text_of(p) == "z^2 + z + c + 1");
  pd_poly_free(p);
  pd_poly_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  Context c;
  pd_poly* p = nullptr;
  CHECK(pd_multiplier(c.ctx, 7, &p) == PD_UNSUPPORTED_PERIOD);
  CHECK(p == nullptr);
  CHECK(std::string(pd_last_error()).find("UnsupportedPeriod") != std::string::npos);
  CHECK(std::string(pd_status_name(PD_UNSUPPORTED_PERIOD)) == "UnsupportedPeriod");
  int ok = 0;
  CHECK(pd_congruence(c.ctx, 3, 4, 2, 1, &ok) == PD_P_INVALID_DIVIDES_K);
  CHECK(pd_iterate(-1, &p) == PD_INVALID_ARGUMENT);
  CHECK(pd_poly_text(nullptr, nullptr) == PD_INVALID_ARGUMENT);
  CHECK(pd_context_new(nullptr, 1, nullptr) == PD_INVALID_ARGUMENT);
  REQUIRE(pd_gamma(2, &p) == PD_OK);
  CHECK(std::string(pd_last_error()).empty());
  pd_poly_free(p);
}

TEST_CASE("table rows and congruences") {
  Context c;
  uint64_t* primes = nullptr;
  size_t n = 0;
  REQUIRE(pd_table1_scan(c.ctx, 4, 2, 120, &primes, &n) == PD_OK);
  CHECK(std::vector<uint64_t>(primes, primes + n) == std::vector<uint64_t>{11, 37, 71, 83, 101, 103, 109});
  pd_u64_free(primes);
  int ok = 0;
  REQUIRE(pd_congruence(c.ctx, 3, 2, 5, 1, &ok) == PD_OK);
  CHECK(ok == 1);
}

TEST_CASE("regions through the C interface") {
  pd_gamma_root* roots = nullptr;
  size_t n = 0;
  REQUIRE(pd_gamma_roots(7, &roots, &n) == PD_OK);
  CHECK(n == 18);
  int a = 0;
  for (size_t i = 0; i < n; ++i) {
    if (roots[i].region == PD_REGION_A) ++a;
    CHECK(roots[i].re_c == doctest::Approx((-(roots[i].re_t * roots[i].re_t - roots[i].im_t * roots[i].im_t) - 7) / 4));
  }
  CHECK(a == 6);
  pd_gamma_roots_free(roots);

  pd_census census{};
  REQUIRE(pd_region_census(12, &census) == PD_OK);
  CHECK(census.count_a == 4);
  CHECK(census.count_b == 8);
  CHECK(census.per_cubic_split == 1);
  CHECK(std::string(pd_region_name(PD_REGION_NEITHER)) == "Neither");

  pd_point* pts = nullptr;
  REQUIRE(pd_parabolic_period3(5, &pts, &n) == PD_OK);
  CHECK(n == 1 + 3 * (1 + 2 + 2 + 4));
  CHECK(pts[0].re == -1.75);
  CHECK(pts[0].im == 0);
  pd_points_free(pts);

  int inside = 0, iterations = 0;
  REQUIRE(pd_mandelbrot(-1.75, 0, 500, 2, &inside, &iterations) == PD_OK);
  CHECK(inside == 1);
  REQUIRE(pd_mandelbrot(1, 0, 500, 2, &inside, &iterations) == PD_OK);
  CHECK(inside == 0);
  CHECK(iterations == 3);
}

TEST_CASE("verification callback") {
  Context c;
  Checks checks;
  int all_ok = 0;
  REQUIRE(pd_verify(c.ctx, "constants", 0, collect, &checks, &all_ok) == PD_OK);
  CHECK(all_ok == 1);
  CHECK(checks.ok == 9);
  CHECK(checks.bad == 0);
  CHECK(pd_verify(c.ctx, "nonsense", 0, collect, &checks, &all_ok) == PD_INVALID_ARGUMENT);
}
