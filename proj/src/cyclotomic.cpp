#include "paradelta/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace paradelta {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "prime_factors of 0");
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "divisors of 0");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "mobius of 0");
  int sign = 1;
  for (std::uint64_t q : prime_factors(n)) {
    if ((n / q) % q == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "euler_phi of 0");
  std::uint64_t result = n;
  for (std::uint64_t q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

namespace {

std::mutex memo_mutex;
std::map<std::uint64_t, IntegerPolynomial> memo;

IntegerPolynomial compute_cyclotomic(std::uint64_t k) {
  IntegerPolynomial num =
      IntegerPolynomial::monomial(1, static_cast<int>(k)) - IntegerPolynomial::constant(1);
  IntegerPolynomial den = IntegerPolynomial::constant(1);
  for (std::uint64_t d : divisors(k))
    if (d < k) den *= cyclotomic_poly(d);
  return exact_divide(num, den);
}

}  // namespace

IntegerPolynomial cyclotomic_poly(std::uint64_t k, const std::string& var) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second.with_var(var);
  }
  IntegerPolynomial p = compute_cyclotomic(k);
  {
    std::lock_guard lock(memo_mutex);
    memo.emplace(k, p);
  }
  return p.with_var(var);
}

CyclotomicDiscriminant cyclotomic_discriminant(std::uint64_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "discriminant needs k >= 2");
  CyclotomicDiscriminant out;
  if (k == 2) {
    out.value = 1;
    out.is_square = true;
    return out;
  }
  const std::uint64_t phi = euler_phi(k);
  const auto primes = prime_factors(k);
  Integer value;
  mpz_ui_pow_ui(value.get_mpz_t(), k, phi);
  for (std::uint64_t q : primes) {
    Integer qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), q, phi / (q - 1));
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), qpow.get_mpz_t());
  }
  // Sign of the discriminant is (-1)^{phi/2}. A factor #{p | k} in the
  // exponent disagrees with the determinant for k = 2 p^a, p = 3 mod 4.
  if ((phi / 2) % 2 == 1) value = -value;
  out.value = value;
  out.is_square = value >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
  return out;
}

CyclotomicRecord cyclotomic_record(std::uint64_t k) {
  CyclotomicRecord r;
  r.k = k;
  r.poly = cyclotomic_poly(k);
  if (k >= 2) {
    auto d = cyclotomic_discriminant(k);
    r.disc = d.value;
    r.disc_is_square = d.is_square;
  } else {
    r.disc = 1;
    r.disc_is_square = true;
  }
  return r;
}

}  // namespace paradelta
