#include "paradelta/zmod.hpp"

#include <algorithm>
#include <utility>

namespace paradelta::zmod {

Field::Field(std::uint64_t p) : p_(p), small_(p < (1ULL << 32)) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
}

Residue Field::pow(Residue base, std::uint64_t exponent) const {
  Residue result = 1 % p_;
  base %= p_;
  while (exponent != 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Residue Field::inv(Residue a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  // Extended Euclid on (p, a) tracking the coefficient of a.
  std::int64_t t0 = 0, t1 = 1;
  std::uint64_t r0 = p_, r1 = a;
  while (r1 != 0) {
    const std::uint64_t q = r0 / r1;
    const std::uint64_t r2 = r0 - q * r1;
    const std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return t0 < 0 ? static_cast<Residue>(t0 + static_cast<std::int64_t>(p_))
                : static_cast<Residue>(t0);
}

Residue Field::from_signed(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<Residue>(r);
}

Residue Field::reduce(const Integer& v) const {
  // mpz_fdiv_ui returns the nonnegative residue.
  return mpz_fdiv_ui(v.get_mpz_t(), p_);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::uint64_t previous_prime(std::uint64_t n) {
  if (n <= 2) throw Error(ErrorCode::InvalidArgument, "no prime below 2");
  std::uint64_t c = n - 1;
  while (!is_prime(c)) --c;
  return c;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly reduce(const IntegerPolynomial& p, const Field& f) {
  Poly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(f.reduce(c));
  trim(out);
  return out;
}

Residue evaluate(const Poly& p, Residue at, const Field& f) {
  Residue acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, at), *it);
  return acc;
}

namespace {

// a <- a mod b, b nonzero with trimmed leading coefficient.
void remainder_in_place(Poly& a, const Poly& b, const Field& f) {
  const int db = degree(b);
  const Residue inv_lead = f.inv(b.back());
  for (int i = degree(a); i >= db; --i) {
    Residue q = f.mul(a[i], inv_lead);
    if (q == 0) continue;
    for (int t = 0; t <= db; ++t) a[i - db + t] = f.sub(a[i - db + t], f.mul(q, b[t]));
  }
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(db)));
  trim(a);
}

}  // namespace

Residue resultant(Poly a, Poly b, const Field& f) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Residue acc = 1;
  for (;;) {
    const int m = degree(a);
    const int n = degree(b);
    if (m == 0) return f.mul(acc, f.pow(a[0], n));
    if (n == 0) return f.mul(acc, f.pow(b[0], m));
    if (m < n) {
      if ((m & 1) && (n & 1)) acc = f.neg(acc);
      std::swap(a, b);
      continue;
    }
    // Res(A, B) = (-1)^{mn} lc(B)^{m - r} Res(B, A mod B)
    Residue lead_b = b.back();
    remainder_in_place(a, b, f);
    if (a.empty()) return 0;
    const int r = degree(a);
    if ((m & 1) && (n & 1)) acc = f.neg(acc);
    acc = f.mul(acc, f.pow(lead_b, static_cast<std::uint64_t>(m - r)));
    std::swap(a, b);
  }
}

Residue resultant_formal(const Poly& a, const Poly& b, int na, int nb,
                         const Field& f) {
  const int da = degree(a);
  const int db = degree(b);
  if (na == 0) return f.pow(a.empty() ? 0 : a[0], nb);
  if (nb == 0) return f.pow(b.empty() ? 0 : b[0], na);
  if (da == na) {
    if (b.empty()) return 0;
    return f.mul(f.pow(a.back(), nb - db), resultant(a, b, f));
  }
  if (db == nb) {
    if (a.empty()) return 0;
    Residue r = f.mul(f.pow(b.back(), na - da), resultant(b, a, f));
    return ((na & 1) && (nb & 1)) ? f.neg(r) : r;
  }
  return 0;
}

Residue sylvester_determinant(const Poly& a, const Poly& b, int na, int nb,
                              const Field& f) {
  const int size = na + nb;
  if (size == 0) return 1 % f.p();
  auto coef = [](const Poly& p, int i) -> Residue {
    return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : 0;
  };
  std::vector<std::vector<Residue>> m(size, std::vector<Residue>(size, 0));
  for (int r = 0; r < nb; ++r)
    for (int t = 0; t <= na; ++t) m[r][r + t] = coef(a, na - t);
  for (int r = 0; r < na; ++r)
    for (int t = 0; t <= nb; ++t) m[nb + r][r + t] = coef(b, nb - t);

  Residue det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col][col]);
    const Residue inv = f.inv(m[col][col]);
    for (int r = col + 1; r < size; ++r) {
      if (m[r][col] == 0) continue;
      const Residue factor = f.mul(m[r][col], inv);
      for (int c = col; c < size; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
    }
  }
  return det;
}

Poly interpolate(std::span<const Residue> xs, std::span<const Residue> ys,
                 const Field& f) {
  const std::size_t n = xs.size();
  std::vector<Residue> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const Residue denom = f.sub(xs[i], xs[i - j]);
      c[i] = f.mul(f.sub(c[i], c[i - 1]), f.inv(denom));
      if (i == j) break;
    }
  }
  Poly poly;
  if (n == 0) return poly;
  poly.push_back(c[n - 1]);
  for (std::size_t step = n - 1; step-- > 0;) {
    // poly <- poly * (X - xs[step]) + c[step]
    Poly next(poly.size() + 1, 0);
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] = f.add(next[t + 1], poly[t]);
      next[t] = f.sub(next[t], f.mul(poly[t], xs[step]));
    }
    next[0] = f.add(next[0], c[step]);
    poly = std::move(next);
  }
  trim(poly);
  return poly;
}

}  // namespace paradelta::zmod
