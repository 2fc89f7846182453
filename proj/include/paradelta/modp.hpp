#ifndef PARADELTA_MODP_HPP
#define PARADELTA_MODP_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "paradelta/dynatomic.hpp"
#include "paradelta/zmod.hpp"

namespace paradelta {

/// Univariate polynomial over F_p, lowest degree first.
class ModularPolynomial {
 public:
  ModularPolynomial(std::uint64_t p, zmod::Poly coeffs);

  std::uint64_t p() const { return p_; }
  const zmod::Poly& coeffs() const { return coeffs_; }
  int degree() const { return zmod::degree(coeffs_); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Divides by the leading coefficient.
  ModularPolynomial monic() const;

  friend bool operator==(const ModularPolynomial& a, const ModularPolynomial& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::uint64_t p_;
  zmod::Poly coeffs_;
};

ModularPolynomial reduce_mod(std::uint64_t p, const IntegerPolynomial& f);

namespace zmod {
Poly mul(const Poly& a, const Poly& b, const Field& f);
Poly rem(Poly a, const Poly& b, const Field& f);
Poly quo(const Poly& a, const Poly& b, const Field& f);
Poly gcd(Poly a, Poly b, const Field& f);  // monic
Poly derivative(const Poly& a, const Field& f);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, const Field& f);
}  // namespace zmod

/// Rabin's test: f | x^{p^d} - x and gcd(f, x^{p^{d/q}} - x) = 1 for every
/// prime q | d. Non-monic input is normalized first.
bool rabin_irreducible(const ModularPolynomial& f);

struct DegreePattern {
  std::uint64_t p = 0;
  std::map<int, int> entries;  // factor degree -> number of factors
  bool squarefree = false;
};

/// Distinct-degree factorization of a squarefree f; a non-squarefree f gives
/// squarefree = false and no entries.
DegreePattern factor_degree_pattern(const ModularPolynomial& f);

enum class SieveStatus { Irreducible, Inconclusive };

struct SieveVerdict {
  SieveStatus status = SieveStatus::Inconclusive;
  std::vector<std::uint64_t> primes_used;
  std::set<int> surviving_degrees;
};

/// Intersects the attainable factor degrees of f over the first prime_budget
/// primes (2, 3, 5, ...), starting from the multiples of degree_constraint.
/// Primes where the reduction drops degree or is not squarefree are skipped.
SieveVerdict degree_sieve(const IntegerPolynomial& f, int degree_constraint,
                          int prime_budget);

/// Primes p < pmax (p = 2 included) for which the delta factor of (mk, m)
/// reduces to an irreducible polynomial over F_p, ascending.
std::vector<std::uint64_t> table1_scan(Tower& tower, int m, int k, std::uint64_t pmax);

struct CongruenceResult {
  int m = 0;
  int k = 0;
  std::uint64_t p = 0;
  int e = 0;
  bool ok = false;
};

/// Compares the delta factor of (m k p^e, m) with the phi(p^e)-th power of the
/// delta factor of (mk, m) modulo p. For m = 3 the large side goes through
/// Gamma_{k p^e}.
CongruenceResult congruence_check(Tower& tower, int m, int k, std::uint64_t p, int e);

}  // namespace paradelta

#endif  // PARADELTA_MODP_HPP
