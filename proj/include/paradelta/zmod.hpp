#ifndef PARADELTA_ZMOD_HPP
#define PARADELTA_ZMOD_HPP

// Word-size prime field arithmetic shared by the modular resultant pipeline
// and the finite-field factorization code.

#include <cstdint>
#include <span>
#include <vector>

#include "paradelta/exactpoly.hpp"

namespace paradelta::zmod {

using Residue = std::uint64_t;
using Poly = std::vector<Residue>;  // lowest degree first, trimmed

class Field {
 public:
  explicit Field(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    if (small_) return a * b % p_;
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t exponent) const;
  Residue inv(Residue a) const;
  Residue from_signed(long long v) const;
  Residue reduce(const Integer& v) const;

 private:
  std::uint64_t p_;
  bool small_;
};

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);      // smallest prime > n
std::uint64_t previous_prime(std::uint64_t n);  // largest prime < n
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

void trim(Poly& p);
int degree(const Poly& p);

Poly reduce(const IntegerPolynomial& p, const Field& f);
Residue evaluate(const Poly& p, Residue at, const Field& f);

/// Resultant of polynomials of their actual degrees, same convention as the
/// exact resultant.
Residue resultant(Poly a, Poly b, const Field& f);

/// Resultant of the Sylvester matrix built with formal degrees (na, nb); the
/// inputs may have lower actual degree after specialization.
Residue resultant_formal(const Poly& a, const Poly& b, int na, int nb,
                         const Field& f);

/// Determinant of the (na + nb) Sylvester matrix by Gaussian elimination.
Residue sylvester_determinant(const Poly& a, const Poly& b, int na, int nb,
                              const Field& f);

/// Coefficients of the interpolant through (xs[i], ys[i]); xs distinct mod p.
Poly interpolate(std::span<const Residue> xs, std::span<const Residue> ys,
                 const Field& f);

}  // namespace paradelta::zmod

#endif  // PARADELTA_ZMOD_HPP
