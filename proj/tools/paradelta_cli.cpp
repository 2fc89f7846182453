// Command-line front end over the C interface of libparadelta.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "paradelta/paradelta.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct RunConfig {
  std::string cache;
  std::string output = "-";
  std::string format = "text";
  int precision_bits = 53;
  int threads = 1;
};

// Thrown to leave with a given exit code after a message went to stderr.
struct Exit {
  int code;
};

int exit_code_for(pd_status s) {
  switch (s) {
    case PD_OK: return 0;
    case PD_INVALID_ARGUMENT:
    case PD_UNSUPPORTED_PERIOD:
    case PD_P_INVALID_DIVIDES_K:
    case PD_VARIABLE_MISMATCH: return 2;
    default: return 1;
  }
}

void check(pd_status s) {
  if (s == PD_OK) return;
  std::cerr << "paradelta: " << pd_last_error() << "\n";
  throw Exit{exit_code_for(s)};
}

[[noreturn]] void usage(const std::string& msg) {
  std::cerr << "paradelta: " << msg << "\n";
  throw Exit{2};
}

std::string resolve_cache(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PARADELTA_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return (fs::path(xdg) / "paradelta").string();
  if (const char* home = std::getenv("HOME"); home && *home)
    return (fs::path(home) / ".cache" / "paradelta").string();
  return {};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) {
      std::cerr << "paradelta: cannot open " << path << " for writing\n";
      throw Exit{1};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string num(double v) {
  if (v == 0) v = 0;  // no negative zero in output
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Context {
  pd_context* ctx = nullptr;
  explicit Context(const RunConfig& cfg) {
    check(pd_context_new(resolve_cache(cfg.cache).c_str(), cfg.threads, &ctx));
  }
  ~Context() { pd_context_free(ctx); }
};

struct Poly {
  pd_poly* p = nullptr;
  ~Poly() { pd_poly_free(p); }
};

struct CString {
  char* s = nullptr;
  ~CString() { pd_string_free(s); }
};

void print_poly(const RunConfig& cfg, const pd_poly* poly) {
  CString s;
  if (cfg.format == "json")
    check(pd_poly_json(poly, &s.s));
  else if (cfg.format == "text")
    check(pd_poly_text(poly, &s.s));
  else
    usage("polynomials are printed as text or json, not " + cfg.format);
  Output out(cfg.output);
  out.stream() << s.s << "\n";
}

struct PolyArgs {
  int n = 0, m = 0, k = 0;
};

// Registers iterate/dynatomic/delta/delta-factor/gamma under parent.
void add_poly_commands(CLI::App& parent, const RunConfig& cfg, PolyArgs& a,
                       std::function<void()>& action) {
  auto* it = parent.add_subcommand("iterate", "f_c^n(z) in (z, c)");
  it->add_option("--n", a.n, "iteration count")->required();
  it->callback([&] {
    action = [&] {
      Poly p;
      check(pd_iterate(a.n, &p.p));
      print_poly(cfg, p.p);
    };
  });

  auto* dy = parent.add_subcommand("dynatomic", "dynatomic polynomial of period n");
  dy->add_option("--n", a.n, "period")->required();
  dy->callback([&] {
    action = [&] {
      Poly p;
      check(pd_dynatomic(a.n, &p.p));
      print_poly(cfg, p.p);
    };
  });

  auto* de = parent.add_subcommand("delta", "reduced multiplier polynomial in (x, C)");
  de->add_option("--m", a.m, "period (1..6)")->required();
  de->callback([&] {
    action = [&] {
      Context c(cfg);
      Poly p;
      check(pd_multiplier(c.ctx, a.m, &p.p));
      print_poly(cfg, p.p);
    };
  });

  auto* df = parent.add_subcommand("delta-factor", "delta factor of (n, m) in C");
  df->add_option("--n", a.n, "n, a multiple of m")->required();
  df->add_option("--m", a.m, "period")->required();
  df->callback([&] {
    action = [&] {
      Context c(cfg);
      Poly p;
      int degenerate = 0;
      check(pd_delta_factor(c.ctx, a.n, a.m, &p.p, &degenerate));
      if (degenerate) std::cerr << "paradelta: note: degenerate constant factor\n";
      print_poly(cfg, p.p);
    };
  });

  auto* ga = parent.add_subcommand("gamma", "Phi_k(t^3 - t^2 + 7t + 1)");
  ga->add_option("--k", a.k, "k >= 1")->required();
  ga->callback([&] {
    action = [&] {
      Poly p;
      check(pd_gamma(a.k, &p.p));
      print_poly(cfg, p.p);
    };
  });
}

void write_figure(const RunConfig& cfg, int kmax, bool mandelbrot, const std::string& grid_path,
                  double step, int max_iter) {
  pd_point* pts = nullptr;
  std::size_t count = 0;
  check(pd_parabolic_period3(kmax, &pts, &count));
  std::unique_ptr<pd_point, void (*)(pd_point*)> hold(pts, pd_points_free);
  {
    Output out(cfg.output);
    auto& os = out.stream();
    os << "k,re_c,im_c\n";
    for (std::size_t i = 0; i < count; ++i)
      os << pts[i].k << "," << num(pts[i].re) << "," << num(pts[i].im) << "\n";
  }
  if (!mandelbrot) return;
  if (!(step > 0)) usage("--grid-step must be positive");
  Output grid(grid_path);
  auto& os = grid.stream();
  os << "re_c,im_c,iterations,inside\n";
  const long nre = std::lround(3.0 / step), nim = std::lround(3.0 / step);
  for (long i = 0; i <= nim; ++i) {
    const double im = -1.5 + i * step;
    for (long r = 0; r <= nre; ++r) {
      const double re = -2.25 + r * step;
      int inside = 0, iters = 0;
      check(pd_mandelbrot(re, im, max_iter, 2.0, &inside, &iters));
      os << num(re) << "," << num(im) << "," << iters << "," << inside << "\n";
    }
  }
}

void write_roots(const RunConfig& cfg, int kmin, int kmax) {
  if (kmin < 2 || kmax < kmin) usage("roots needs 2 <= kmin <= kmax");
  Output out(cfg.output);
  auto& os = out.stream();
  if (cfg.format == "csv") {
    os << "k,j,re_t,im_t,region,re_c,im_c\n";
    for (int k = kmin; k <= kmax; ++k) {
      pd_gamma_root* roots = nullptr;
      std::size_t count = 0;
      check(pd_gamma_roots(k, &roots, &count));
      std::unique_ptr<pd_gamma_root, void (*)(pd_gamma_root*)> hold(roots, pd_gamma_roots_free);
      for (std::size_t i = 0; i < count; ++i) {
        const auto& r = roots[i];
        os << r.k << "," << r.j << "," << num(r.re_t) << "," << num(r.im_t) << ","
           << pd_region_name(r.region) << "," << num(r.re_c) << "," << num(r.im_c) << "\n";
      }
    }
    return;
  }
  ordered_json all = ordered_json::array();
  for (int k = kmin; k <= kmax; ++k) {
    pd_census c{};
    check(pd_region_census(k, &c));
    if (cfg.format == "text") {
      os << "k=" << c.k << " A=" << c.count_a << " B=" << c.count_b << " neither=" << c.count_neither
         << " max|t|_A=" << num(c.max_abs_a) << " max|t|_B=" << num(c.max_abs_b) << " ReA=["
         << num(c.min_re_a) << "," << num(c.max_re_a) << "] ReB=[" << num(c.min_re_b) << ","
         << num(c.max_re_b) << "] residual=" << num(c.max_residual) << "\n";
    } else {
      all.push_back({{"k", c.k},
                     {"count_A", c.count_a},
                     {"count_B", c.count_b},
                     {"count_neither", c.count_neither},
                     {"per_cubic_split", c.per_cubic_split != 0},
                     {"max_abs_A", c.max_abs_a},
                     {"max_abs_B", c.max_abs_b},
                     {"min_re_A", c.min_re_a},
                     {"max_re_A", c.max_re_a},
                     {"min_re_B", c.min_re_b},
                     {"max_re_B", c.max_re_b},
                     {"max_residual", c.max_residual}});
    }
  }
  if (cfg.format == "json") os << all.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Multiplier polynomials, delta factors and period-3 parabolic parameters"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", "paradelta 1.0");

  RunConfig cfg;
  app.add_option("--cache", cfg.cache, "cache directory (default: $PARADELTA_CACHE, then ~/.cache)");
  app.add_option("--output,-o", cfg.output, "output file, - for stdout");
  app.add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision-bits", cfg.precision_bits, "minimum floating precision")
      ->check(CLI::Range(53, 4096));
  app.add_option("--threads,-j", cfg.threads, "worker threads")->check(CLI::Range(1, 1024));

  std::function<void()> action;
  PolyArgs pa;

  auto* compute = app.add_subcommand("compute", "print a polynomial");
  compute->require_subcommand(1);
  add_poly_commands(*compute, cfg, pa, action);
  add_poly_commands(app, cfg, pa, action);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  int vkmax = 50;
  verify->add_option("--suite", suite, "identities, regions, constants or all")
      ->check(CLI::IsMember({"identities", "regions", "constants", "all"}));
  verify->add_option("--kmax", vkmax, "census range upper bound")->check(CLI::Range(2, 100000));
  verify->callback([&] {
    action = [&] {
      Context c(cfg);
      Output out(cfg.output);
      auto& os = out.stream();
      struct Sink {
        std::ostream* os;
      } sink{&os};
      int all_ok = 0;
      check(pd_verify(
          c.ctx, suite.c_str(), vkmax,
          [](void* user, int ok, const char* name, const char* detail) {
            auto& s = *static_cast<Sink*>(user)->os;
            if (ok)
              s << "ok " << name << "\n";
            else
              s << "not ok " << name << " " << detail << "\n";
            s.flush();
          },
          &sink, &all_ok));
      if (!all_ok) throw Exit{1};
    };
  });

  auto* table1 = app.add_subcommand("table1", "primes p < pmax with irreducible reduction");
  int tm = 0, tk = 0;
  std::uint64_t pmax = 1000;
  table1->add_option("--m", tm, "period")->required();
  table1->add_option("--k", tk, "k >= 2")->required();
  table1->add_option("--pmax", pmax, "exclusive prime bound");
  table1->callback([&] {
    action = [&] {
      Context c(cfg);
      std::uint64_t* primes = nullptr;
      std::size_t count = 0;
      check(pd_table1_scan(c.ctx, tm, tk, pmax, &primes, &count));
      std::unique_ptr<std::uint64_t, void (*)(std::uint64_t*)> hold(primes, pd_u64_free);
      Output out(cfg.output);
      auto& os = out.stream();
      if (cfg.format == "json") {
        ordered_json j{{"m", tm}, {"k", tk}, {"pmax", pmax}, {"primes", ordered_json::array()}};
        for (std::size_t i = 0; i < count; ++i) j["primes"].push_back(primes[i]);
        os << j.dump() << "\n";
      } else {
        os << "m,k,p\n";
        for (std::size_t i = 0; i < count; ++i) os << tm << "," << tk << "," << primes[i] << "\n";
      }
    };
  });

  auto* figure = app.add_subcommand("figure", "period-3 parabolic parameters as CSV");
  int fkmax = 0, max_iter = 500;
  bool mandelbrot = false;
  std::string grid_path = "mandelbrot.csv";
  double step = 0.01;
  figure->add_option("--kmax", fkmax, "largest k")->required()->check(CLI::Range(1, 100000));
  figure->add_flag("--mandelbrot", mandelbrot, "also write the escape-time grid");
  figure->add_option("--grid-output", grid_path, "grid CSV path");
  figure->add_option("--grid-step", step, "grid spacing over [-2.25,0.75]x[-1.5,1.5]");
  figure->add_option("--max-iter", max_iter, "escape-time iterations")->check(CLI::Range(1, 1000000));
  figure->callback([&] {
    action = [&] {
      if (!app.count("--output")) cfg.output = "figure1.csv";
      write_figure(cfg, fkmax, mandelbrot, grid_path, step, max_iter);
    };
  });

  auto* roots = app.add_subcommand("roots", "roots of Gamma_k with their regions");
  int rkmin = 2, rkmax = 0;
  roots->add_option("--kmin", rkmin, "first k (>= 2)");
  roots->add_option("--kmax", rkmax, "last k")->required();
  roots->callback([&] {
    action = [&] {
      if (!app.count("--format")) cfg.format = "csv";
      write_roots(cfg, rkmin, rkmax);
    };
  });

  auto* cong = app.add_subcommand("congruence", "check one congruence instance mod p");
  int cm = 0, ck = 0, ce = 1;
  std::uint64_t cp = 0;
  cong->add_option("--m", cm, "period")->required();
  cong->add_option("--k", ck, "k")->required();
  cong->add_option("--p", cp, "prime not dividing k")->required();
  cong->add_option("--e", ce, "exponent")->check(CLI::Range(1, 64));
  cong->callback([&] {
    action = [&] {
      Context c(cfg);
      int ok = 0;
      check(pd_congruence(c.ctx, cm, ck, cp, ce, &ok));
      Output out(cfg.output);
      auto& os = out.stream();
      os << (ok ? "OK" : "FAIL") << " m=" << cm << " k=" << ck << " p=" << cp << " e=" << ce << "\n";
      os << ordered_json{{"m", cm}, {"k", ck}, {"p", cp}, {"e", ce}, {"ok", ok != 0}}.dump() << "\n";
      if (!ok) throw Exit{1};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!action) usage("no command given");
  action();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "paradelta: " << e.what() << "\n";
    return 1;
  }
}
