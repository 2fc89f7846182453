#include "paradelta/paradelta.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

#include "paradelta/dynatomic.hpp"
#include "paradelta/modp.hpp"
#include "paradelta/regions.hpp"
#include "paradelta/serialize.hpp"
#include "paradelta/verify.hpp"

using namespace paradelta;

struct pd_context {
  std::unique_ptr<Tower> tower;
};

struct pd_poly {
  std::variant<IntegerPolynomial, BivariatePolynomial> rep;
};

namespace {

thread_local std::string last_error;

pd_status to_status(ErrorCode code) {
  return static_cast<pd_status>(static_cast<int>(code) + 1);
}

template <typename Fn>
pd_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return PD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return PD_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return PD_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InvalidArgument, what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
T* copy_array(const std::vector<T>& values) {
  T* out = static_cast<T*>(std::malloc(sizeof(T) * (values.empty() ? 1 : values.size())));
  if (!out) throw std::bad_alloc();
  if (!values.empty()) std::memcpy(out, values.data(), sizeof(T) * values.size());
  return out;
}

template <typename P>
pd_status emit(pd_poly** out, P&& poly) {
  *out = new pd_poly{std::forward<P>(poly)};
  return PD_OK;
}

}  // namespace

extern "C" {

const char* pd_status_name(pd_status status) {
  if (status == PD_OK) return "Ok";
  if (status == PD_INTERNAL) return "Internal";
  if (status < PD_OK || status > PD_INTERNAL) return "Unknown";
  return error_code_name(static_cast<ErrorCode>(static_cast<int>(status) - 1));
}

const char* pd_last_error(void) { return last_error.c_str(); }

pd_status pd_context_new(const char* cache_dir, int threads, pd_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(threads >= 1, "threads must be at least 1");
    TowerOptions opts;
    if (cache_dir && *cache_dir) opts.cache_dir = cache_dir;
    opts.threads = threads;
    *out = new pd_context{std::make_unique<Tower>(opts)};
  });
}

void pd_context_free(pd_context* ctx) { delete ctx; }

pd_status pd_iterate(int n, pd_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    emit(out, iterate(n));
  });
}

pd_status pd_dynatomic(int n, pd_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    emit(out, dynatomic_poly(n));
  });
}

pd_status pd_gamma(int k, pd_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    emit(out, gamma_poly(k));
  });
}

pd_status pd_multiplier(pd_context* ctx, int m, pd_poly** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    emit(out, ctx->tower->multiplier(m).tilde);
  });
}

pd_status pd_delta_factor(pd_context* ctx, int n, int m, pd_poly** out, int* degenerate) {
  return guarded([&] {
    require(ctx && out, "null argument");
    auto f = ctx->tower->delta_factor(n, m);
    if (degenerate) *degenerate = f.degenerate ? 1 : 0;
    emit(out, std::move(f.poly));
  });
}

void pd_poly_free(pd_poly* poly) { delete poly; }

pd_status pd_poly_text(const pd_poly* poly, char** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    *out = duplicate(std::visit([](const auto& p) { return to_text(p); }, poly->rep));
  });
}

pd_status pd_poly_json(const pd_poly* poly, char** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    *out = duplicate(std::visit([](const auto& p) { return to_json(p).dump(); }, poly->rep));
  });
}

void pd_string_free(char* s) { std::free(s); }

pd_status pd_table1_scan(pd_context* ctx, int m, int k, uint64_t pmax, uint64_t** primes,
                         size_t* count) {
  return guarded([&] {
    require(ctx && primes && count, "null argument");
    const auto found = table1_scan(*ctx->tower, m, k, pmax);
    *primes = copy_array(found);
    *count = found.size();
  });
}

void pd_u64_free(uint64_t* values) { std::free(values); }

pd_status pd_congruence(pd_context* ctx, int m, int k, uint64_t p, int e, int* ok) {
  return guarded([&] {
    require(ctx && ok, "null argument");
    *ok = congruence_check(*ctx->tower, m, k, p, e).ok ? 1 : 0;
  });
}

pd_status pd_verify(pd_context* ctx, const char* suite, int kmax, pd_check_fn fn, void* user,
                    int* all_ok) {
  return guarded([&] {
    require(ctx && suite && all_ok, "null argument");
    const auto which = parse_suite(suite);
    require(which.has_value(), "unknown suite");
    VerifyOptions opts;
    if (kmax > 0) opts.kmax = kmax;
    *all_ok = run_verify(*which, *ctx->tower, opts, [&](const CheckResult& r) {
      if (fn) fn(user, r.ok ? 1 : 0, r.name.c_str(), r.detail.c_str());
    }) ? 1 : 0;
  });
}

const char* pd_region_name(pd_region region) {
  switch (region) {
    case PD_REGION_A: return region_name(Region::A);
    case PD_REGION_B: return region_name(Region::B);
    case PD_REGION_NEITHER: return region_name(Region::Neither);
  }
  return "?";
}

pd_status pd_gamma_roots(int k, pd_gamma_root** out, size_t* count) {
  return guarded([&] {
    require(out && count, "null argument");
    std::vector<pd_gamma_root> rows;
    for (const auto& r : gamma_roots(k)) {
      pd_gamma_root g{};
      g.k = r.k;
      g.j = r.j;
      g.re_t = r.t.value.real();
      g.im_t = r.t.value.imag();
      g.residual = r.t.residual;
      g.region = static_cast<pd_region>(static_cast<int>(r.region));
      g.re_c = r.c.real();
      g.im_c = r.c.imag();
      rows.push_back(g);
    }
    *out = copy_array(rows);
    *count = rows.size();
  });
}

void pd_gamma_roots_free(pd_gamma_root* roots) { std::free(roots); }

pd_status pd_region_census(int k, pd_census* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto c = region_census(k);
    *out = pd_census{c.k,         c.count_A,   c.count_B,   c.count_neither, c.per_cubic_split ? 1 : 0,
                     c.max_abs_A, c.max_abs_B, c.min_re_A,  c.max_re_A,      c.min_re_B,
                     c.max_re_B,  c.max_residual};
  });
}

pd_status pd_parabolic_period3(int k_max, pd_point** out, size_t* count) {
  return guarded([&] {
    require(out && count, "null argument");
    std::vector<pd_point> rows;
    for (const auto& p : parabolic_parameters_period3(k_max)) rows.push_back({p.k, p.c.real(), p.c.imag()});
    *out = copy_array(rows);
    *count = rows.size();
  });
}

void pd_points_free(pd_point* points) { std::free(points); }

pd_status pd_mandelbrot(double re, double im, int max_iter, double escape_radius, int* inside,
                        int* iterations) {
  return guarded([&] {
    require(inside && iterations, "null argument");
    const auto r = mandelbrot_membership({re, im}, max_iter, escape_radius);
    *inside = r.inside ? 1 : 0;
    *iterations = r.iterations;
  });
}

}  // extern "C"
