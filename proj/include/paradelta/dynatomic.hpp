#ifndef PARADELTA_DYNATOMIC_HPP
#define PARADELTA_DYNATOMIC_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "paradelta/exactpoly.hpp"

namespace paradelta {

inline constexpr int kMaxPeriod = 6;
inline constexpr int kCacheFormatVersion = 1;

/// f_c^n(z) in (z, c).
BivariatePolynomial iterate(int n);
/// d/dz f_c^n(z) = prod_{k<n} 2 f_c^k(z).
BivariatePolynomial iterate_derivative(int n);
/// Phi_n^*(z, c) by Mobius inversion over the divisors of n.
BivariatePolynomial dynatomic_poly(int n);
/// deg_z Phi_n^* = sum_{d | n} mu(n/d) 2^d.
int dynatomic_degree(int n);

/// g(t) = t^3 - t^2 + 7t + 1.
IntegerPolynomial g_map();
/// Gamma_k(t) = Phi_k(g(t)).
IntegerPolynomial gamma_poly(int k);

struct MultiplierPolynomial {
  int m = 0;
  BivariatePolynomial tilde;  // in (x, C)
  int deg_x = 0;
  int deg_C = 0;
};

struct DeltaFactor {
  int n = 0;
  int m = 0;
  IntegerPolynomial poly;  // in C
  // Set when the quotient of the m = n case is a constant other than 1.
  bool degenerate = false;
};

enum class Parametrization { X3, X3Perturbed, X4 };

struct TowerOptions {
  std::filesystem::path cache_dir;  // empty disables the disk cache
  int threads = 1;
};

/// Owns the memo tables and the optional disk cache for the multiplier
/// polynomials and the delta factors built from them. Safe to share across
/// threads.
class Tower {
 public:
  explicit Tower(TowerOptions options = {});

  const TowerOptions& options() const { return options_; }

  /// The reduced multiplier polynomial of period m (1 <= m <= 6).
  MultiplierPolynomial multiplier(int m);
  /// Delta factor for m | n.
  DeltaFactor delta_factor(int n, int m);
  /// Res_t(Gamma_k(t), t^2 + 7 + C), a polynomial in C.
  IntegerPolynomial delta_factor_via_gamma(int k);

  /// Substitutes the named parametrization into its multiplier polynomial and
  /// tests for the zero polynomial.
  bool verify_parametrization(Parametrization which);

  struct GammaDeltaReport {
    bool identity = false;
    bool separable = false;
    bool ok() const { return identity && separable; }
  };
  GammaDeltaReport gamma_delta_identity(int k);

  /// Path of the cache file for period m, e.g. delta_m4.v1.json.
  std::filesystem::path cache_path(int m) const;

 private:
  MultiplierPolynomial compute_multiplier(int m) const;
  std::optional<MultiplierPolynomial> load_cached(int m) const;
  void store_cached(const MultiplierPolynomial& mp) const;

  TowerOptions options_;
  std::mutex mutex_;
  std::map<int, MultiplierPolynomial> multipliers_;
  std::map<std::pair<int, int>, DeltaFactor> factors_;
};

/// Writes p(x(t), C(t)) with x(t) = xnum(t) / t^a and C(t) = cnum(t) / t^b,
/// multiplied through by t^clear. Throws InvalidArgument when clear is too
/// small to give a polynomial.
IntegerPolynomial laurent_substitute(const BivariatePolynomial& p,
                                     const IntegerPolynomial& xnum, int a,
                                     const IntegerPolynomial& cnum, int b, int clear);

}  // namespace paradelta

#endif  // PARADELTA_DYNATOMIC_HPP
