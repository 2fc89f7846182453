#include "paradelta/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "paradelta/cyclotomic.hpp"
#include "paradelta/modp.hpp"
#include "paradelta/regions.hpp"
#include "paradelta/serialize.hpp"

namespace paradelta {

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "identities") return Suite::Identities;
  if (name == "regions") return Suite::Regions;
  if (name == "constants") return Suite::Constants;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

namespace {

class Runner {
 public:
  explicit Runner(const CheckSink& sink) : sink_(sink) {}

  // fn returns an empty string on success, otherwise the failure detail.
  template <typename Fn>
  void check(const std::string& name, Fn&& fn) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = fn();
    } catch (const Error& e) {
      r.detail = std::string(error_code_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.ok = r.detail.empty();
    all_ok_ = all_ok_ && r.ok;
    sink_(r);
  }

  bool all_ok() const { return all_ok_; }

 private:
  const CheckSink& sink_;
  bool all_ok_ = true;
};

BivariatePolynomial xc(std::initializer_list<std::tuple<long, int, int>> terms) {
  BivariatePolynomial p("x", "C");
  for (const auto& [c, i, j] : terms) p += BivariatePolynomial::monomial(c, i, j, "x", "C");
  return p;
}

std::string mismatch(const std::string& what, const std::string& got) {
  return what + " got " + got;
}

// Number of period-n hyperbolic components: sum_{d | n} mu(n/d) 2^{d-1}.
long components(int n) {
  long total = 0;
  for (auto d : divisors(static_cast<std::uint64_t>(n)))
    total += mobius(static_cast<std::uint64_t>(n) / d) * (1L << (d - 1));
  return total;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void identities(Runner& run, Tower& tower, const VerifyOptions& opt) {
  run.check("delta1-fixture", [&] {
    const auto got = tower.multiplier(1).tilde;
    return got == xc({{1, 2, 0}, {-2, 1, 0}, {1, 0, 1}}) ? "" : mismatch("x^2 - 2*x + C", to_text(got));
  });
  run.check("delta2-fixture", [&] {
    const auto got = tower.multiplier(2).tilde;
    return got == xc({{1, 1, 0}, {-1, 0, 1}, {-4, 0, 0}}) ? "" : mismatch("x - C - 4", to_text(got));
  });
  run.check("delta3-formula", [&] {
    const auto got = tower.multiplier(3).tilde;
    const auto want = xc({{1, 2, 0}, {-2, 1, 1}, {-16, 1, 0}, {1, 0, 3}, {8, 0, 2}, {16, 0, 1}, {64, 0, 0}});
    return got == want ? "" : mismatch(to_text(want), to_text(got));
  });

  for (int n = 2; n <= opt.product_nmax; ++n) {
    run.check("product n=" + std::to_string(n), [&]() -> std::string {
      const auto at_one = tower.multiplier(n).tilde.evaluate("x", 1);
      auto product = IntegerPolynomial::constant(1, "C");
      for (auto d : divisors(static_cast<std::uint64_t>(n)))
        product *= tower.delta_factor(n, static_cast<int>(d)).poly;
      return product == at_one ? "" : mismatch(to_text(at_one), to_text(product));
    });
    run.check("factor-degrees n=" + std::to_string(n), [&]() -> std::string {
      // m < n: each period-m component carries phi(n/m) satellites.
      long primitive = components(n);
      for (auto d : divisors(static_cast<std::uint64_t>(n))) {
        const int m = static_cast<int>(d);
        if (m == n) continue;
        const long want = static_cast<long>(euler_phi(n / m)) * components(m);
        const int got = tower.delta_factor(n, m).poly.degree();
        if (got != want)
          return "m=" + std::to_string(m) + " degree " + std::to_string(got) + " expected " +
                 std::to_string(want);
        primitive -= want;
      }
      const auto& top = tower.delta_factor(n, n).poly;
      const long got = top.is_zero() ? -1 : top.degree();
      return got == primitive ? ""
                              : "m=n degree " + std::to_string(got) + " expected " +
                                    std::to_string(primitive);
    });
  }

  run.check("X3-parametrization",
            [&] { return tower.verify_parametrization(Parametrization::X3) ? "" : "nonzero remainder"; });
  run.check("X4-parametrization",
            [&] { return tower.verify_parametrization(Parametrization::X4) ? "" : "nonzero remainder"; });
  run.check("X3-perturbed-rejected", [&] {
    return tower.verify_parametrization(Parametrization::X3Perturbed) ? "perturbed map accepted" : "";
  });

  for (int k = 2; k <= opt.gamma_kmax; ++k)
    run.check("gamma-bijection k=" + std::to_string(k), [&]() -> std::string {
      const auto r = tower.gamma_delta_identity(k);
      if (!r.identity) return "resultant differs from the delta factor";
      if (!r.separable) return "Gamma_k not separable";
      return "";
    });

  const int cases[][4] = {{3, 2, 5, 1}, {3, 4, 3, 1}, {4, 3, 5, 1}};
  for (const auto& c : cases) {
    std::ostringstream name;
    name << "congruence (" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
    run.check(name.str(), [&] {
      return congruence_check(tower, c[0], c[1], static_cast<std::uint64_t>(c[2]), c[3]).ok
                 ? ""
                 : "congruence fails";
    });
  }

  run.check("sieve Gamma_2 primes<=17", [&]() -> std::string {
    const auto v = degree_sieve(gamma_poly(2), 1, 7);
    if (v.status != SieveStatus::Irreducible) return "not certified";
    if (v.primes_used.empty() || v.primes_used.back() > 17) return "needed primes above 17";
    return "";
  });
}

void regions(Runner& run, Tower& tower, const VerifyOptions& opt) {
  for (int k = 2; k <= opt.kmax; ++k) {
    const int ph = static_cast<int>(euler_phi(static_cast<std::uint64_t>(k)));
    const std::string name = "census k=" + std::to_string(k) + " (" + std::to_string(ph) + "," +
                             std::to_string(2 * ph) + ")";
    run.check(name, [&]() -> std::string {
      const auto c = region_census(k);
      if (c.count_A != ph || c.count_B != 2 * ph || c.count_neither != 0)
        return "counts (" + std::to_string(c.count_A) + "," + std::to_string(c.count_B) + "," +
               std::to_string(c.count_neither) + ")";
      if (!c.per_cubic_split) return "a cubic does not split 1+2";
      if (c.max_residual >= 1e-12) return "residual " + fmt(c.max_residual);
      if (c.max_abs_A >= kS1) return "|t| in A reaches " + fmt(c.max_abs_A);
      if (c.min_re_A < -kS1 || c.max_re_A >= 0)
        return "Re A in [" + fmt(c.min_re_A) + "," + fmt(c.max_re_A) + "]";
      if (c.max_abs_B >= kS2) return "|t| in B reaches " + fmt(c.max_abs_B);
      if (c.min_re_B < kS3 - 1e-9 || c.max_re_B > kS4 + 1e-9)
        return "Re B in [" + fmt(c.min_re_B) + "," + fmt(c.max_re_B) + "]";
      return "";
    });
  }

  for (int i = 0; i < 16; ++i) {
    run.check("winding z0=exp(2pi*i*" + std::to_string(i) + "/16) (1,2,0,0,2)",
              [&]() -> std::string {
                const auto w = winding_integrals(std::polar(1.0, 2 * std::acos(-1.0) * i / 16));
                if (w.I1 == 1 && w.I2 == 2 && w.I3 == 0 && w.I4 == 0 && w.I5 == 2) return "";
                std::ostringstream s;
                s << "got (" << w.I1 << "," << w.I2 << "," << w.I3 << "," << w.I4 << "," << w.I5 << ")";
                return s.str();
              });
  }

  for (const auto& p : sampled_positivity())
    run.check((p.name.substr(0, 2) == "S6" || p.name.substr(0, 2) == "S7" ? "G2>0 on " : "G1>0 on ") +
                  p.name,
              [&] { return p.ok ? std::string() : "minimum " + fmt(p.min_value); });

  run.check("totally-real d<=5 roots in {-1,0,1}", [&]() -> std::string {
    for (const auto& d : totally_real_enumerate(5))
      if (!d.roots_trivial) return "degree " + std::to_string(d.degree) + ": " + to_text(d.exceptions.front());
    return "";
  });

  for (int k = 1; k <= opt.gamma_kmax; ++k)
    run.check("parabolic k=" + std::to_string(k) + " matches delta factor", [&]() -> std::string {
      const double dev = parabolic_crosscheck(tower, k);
      return dev <= 1e-8 ? "" : "deviation " + fmt(dev);
    });
}

void constants(Runner& run) {
  for (const auto& c : paper_constants_check())
    run.check(c.name, [&] {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.10g", c.value);
      return c.ok ? std::string() : std::string("computed ") + buf;
    });
}

}  // namespace

bool run_verify(Suite suite, Tower& tower, const VerifyOptions& options, const CheckSink& sink) {
  if (options.kmax < 2 || options.gamma_kmax < 2 || options.product_nmax < 2 ||
      options.product_nmax > kMaxPeriod)
    throw Error(ErrorCode::InvalidArgument, "verify ranges out of bounds");
  Runner run(sink);
  if (suite == Suite::Identities || suite == Suite::All) identities(run, tower, options);
  if (suite == Suite::Regions || suite == Suite::All) regions(run, tower, options);
  if (suite == Suite::Constants || suite == Suite::All) constants(run);
  return run.all_ok();
}

}  // namespace paradelta
