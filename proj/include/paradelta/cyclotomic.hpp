#ifndef PARADELTA_CYCLOTOMIC_HPP
#define PARADELTA_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "paradelta/exactpoly.hpp"

namespace paradelta {

/// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Phi_k in the given variable; memoized, safe for concurrent callers.
IntegerPolynomial cyclotomic_poly(std::uint64_t k, const std::string& var = "x");

struct CyclotomicDiscriminant {
  Integer value;
  bool is_square = false;
};

/// Closed form (-1)^{phi(k)/2} k^phi(k) prod_{p | k} p^{-phi(k)/(p-1)};
/// k = 2 is defined as 1.
CyclotomicDiscriminant cyclotomic_discriminant(std::uint64_t k);

struct CyclotomicRecord {
  std::uint64_t k = 1;
  IntegerPolynomial poly;
  Integer disc;
  bool disc_is_square = false;
};

CyclotomicRecord cyclotomic_record(std::uint64_t k);

}  // namespace paradelta

#endif  // PARADELTA_CYCLOTOMIC_HPP
