#include "paradelta/modp.hpp"

#include <algorithm>
#include <thread>

#include "paradelta/cyclotomic.hpp"

namespace paradelta {

namespace zmod {

Poly mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly rem(Poly a, const Poly& b, const Field& f) {
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return a;
  const Residue inv_lead = f.inv(b.back());
  for (int i = degree(a); i >= db; --i) {
    const Residue q = f.mul(a[i], inv_lead);
    if (q == 0) continue;
    for (int t = 0; t <= db; ++t) a[i - db + t] = f.sub(a[i - db + t], f.mul(q, b[t]));
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  return a;
}

Poly quo(const Poly& a_in, const Poly& b, const Field& f) {
  if (b.empty()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  Poly a = a_in;
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {};
  Poly q(static_cast<std::size_t>(degree(a) - db + 1), 0);
  const Residue inv_lead = f.inv(b.back());
  for (int i = degree(a); i >= db; --i) {
    const Residue c = f.mul(a[i], inv_lead);
    q[i - db] = c;
    if (c == 0) continue;
    for (int t = 0; t <= db; ++t) a[i - db + t] = f.sub(a[i - db + t], f.mul(c, b[t]));
  }
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = rem(std::move(a), b, f);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const Residue inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

Poly derivative(const Poly& a, const Field& f) {
  Poly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(f.mul(a[i], i % f.p()));
  trim(out);
  return out;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, const Field& f) {
  Poly result = rem({1 % f.p()}, modulus, f);
  Poly b = rem(base, modulus, f);
  while (e != 0) {
    if (e & 1) result = rem(mul(result, b, f), modulus, f);
    e >>= 1;
    if (e != 0) b = rem(mul(b, b, f), modulus, f);
  }
  return result;
}

}  // namespace zmod

namespace {

using zmod::Field;
using zmod::Poly;

// Frobenius h -> h^p modulo a fixed f, as the matrix of rows x^{ip} mod f.
class Frobenius {
 public:
  Frobenius(const Poly& f, const Poly& xp, const Field& field) : field_(field) {
    const int d = zmod::degree(f);
    rows_.reserve(d);
    rows_.push_back(zmod::rem({1 % field.p()}, f, field));
    for (int i = 1; i < d; ++i) rows_.push_back(zmod::rem(zmod::mul(rows_.back(), xp, field), f, field));
  }

  Poly apply(const Poly& h) const {
    const std::size_t d = rows_.size();
    Poly out(d, 0);
    for (std::size_t i = 0; i < h.size() && i < d; ++i) {
      if (h[i] == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < row.size(); ++j) out[j] = field_.add(out[j], field_.mul(h[i], row[j]));
    }
    zmod::trim(out);
    return out;
  }

 private:
  const Field& field_;
  std::vector<Poly> rows_;
};

Poly minus_x(Poly h, const Field& f) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = f.sub(h[1], 1 % f.p());
  zmod::trim(h);
  return h;
}

bool coprime(const Poly& a, const Poly& b, const Field& f) {
  return zmod::degree(zmod::gcd(a, b, f)) == 0;
}

std::vector<int> prime_divisors(int d) {
  std::vector<int> out;
  for (auto q : prime_factors(static_cast<std::uint64_t>(d))) out.push_back(static_cast<int>(q));
  return out;
}

}  // namespace

ModularPolynomial::ModularPolynomial(std::uint64_t p, zmod::Poly coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (!zmod::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
  for (auto& c : coeffs_) c %= p_;
  zmod::trim(coeffs_);
}

ModularPolynomial ModularPolynomial::monic() const {
  if (coeffs_.empty()) return *this;
  Field f(p_);
  const auto inv = f.inv(coeffs_.back());
  zmod::Poly out = coeffs_;
  for (auto& c : out) c = f.mul(c, inv);
  return ModularPolynomial(p_, std::move(out));
}

ModularPolynomial reduce_mod(std::uint64_t p, const IntegerPolynomial& f) {
  if (!zmod::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
  return ModularPolynomial(p, zmod::reduce(f, Field(p)));
}

bool rabin_irreducible(const ModularPolynomial& input) {
  const int d = input.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const auto mf = input.monic();
  const Field field(mf.p());
  const Poly& f = mf.coeffs();
  const Poly x{0, 1 % field.p()};

  // A root in F_p settles most inputs before the Frobenius matrix is built.
  const Poly xp = zmod::powmod(x, field.p(), f, field);
  if (!coprime(f, minus_x(xp, field), field)) return false;

  Frobenius frob(f, xp, field);
  std::vector<Poly> powers{x, xp};  // powers[j] = x^{p^j} mod f
  for (int j = 2; j <= d; ++j) {
    powers.push_back(frob.apply(powers.back()));
    if (j <= 4 && 2 * j <= d && !coprime(f, minus_x(powers.back(), field), field)) return false;
  }
  if (!minus_x(powers[d], field).empty()) return false;
  for (int q : prime_divisors(d))
    if (!coprime(f, minus_x(powers[d / q], field), field)) return false;
  return true;
}

DegreePattern factor_degree_pattern(const ModularPolynomial& input) {
  DegreePattern out;
  out.p = input.p();
  const int d = input.degree();
  if (d < 1) return out;
  const auto mf = input.monic();
  const Field field(mf.p());
  const Poly& f = mf.coeffs();
  const Poly df = zmod::derivative(f, field);
  if (df.empty() || !coprime(f, df, field)) return out;
  out.squarefree = true;

  const Poly x{0, 1 % field.p()};
  const Poly xp = zmod::powmod(x, field.p(), f, field);
  Frobenius frob(f, xp, field);
  Poly rest = f;
  Poly h = xp;
  for (int j = 1; 2 * j <= zmod::degree(rest); ++j) {
    if (j > 1) h = frob.apply(h);
    const Poly g = zmod::gcd(rest, minus_x(h, field), field);
    const int dg = zmod::degree(g);
    if (dg > 0) {
      out.entries[j] += dg / j;
      rest = zmod::quo(rest, g, field);
    }
  }
  if (zmod::degree(rest) > 0) out.entries[zmod::degree(rest)] += 1;
  return out;
}

SieveVerdict degree_sieve(const IntegerPolynomial& f, int degree_constraint, int prime_budget) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sieve needs a nonconstant polynomial");
  if (degree_constraint < 1 || n % degree_constraint != 0)
    throw Error(ErrorCode::InvalidArgument, "degree constraint must divide the degree");
  SieveVerdict verdict;
  for (int s = 0; s <= n; s += degree_constraint) verdict.surviving_degrees.insert(s);
  auto collapsed = [&] {
    return verdict.surviving_degrees == std::set<int>{0, n};
  };
  std::uint64_t p = 1;
  for (int examined = 0; examined < prime_budget && !collapsed(); ++examined) {
    p = zmod::next_prime(p);
    const auto red = reduce_mod(p, f);
    if (red.degree() != n) continue;
    const auto pattern = factor_degree_pattern(red);
    if (!pattern.squarefree) continue;
    verdict.primes_used.push_back(p);
    std::vector<bool> reach(n + 1, false);
    reach[0] = true;
    for (const auto& [deg, count] : pattern.entries)
      for (int c = 0; c < count; ++c)
        for (int s = n; s >= deg; --s)
          if (reach[s - deg]) reach[s] = true;
    std::set<int> next;
    for (int s : verdict.surviving_degrees)
      if (reach[s]) next.insert(s);
    verdict.surviving_degrees = std::move(next);
  }
  if (collapsed()) verdict.status = SieveStatus::Irreducible;
  return verdict;
}

std::vector<std::uint64_t> table1_scan(Tower& tower, int m, int k, std::uint64_t pmax) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  if (m < 1 || m > kMaxPeriod)
    throw Error(ErrorCode::UnsupportedPeriod,
                "period " + std::to_string(m) + " outside 1.." + std::to_string(kMaxPeriod));
  const auto delta = tower.delta_factor(m * k, m).poly;
  const auto primes = zmod::primes_below(pmax);
  std::vector<char> hit(primes.size(), 0);
  const int threads = std::max(1, std::min<int>(tower.options().threads,
                                                static_cast<int>(primes.size())));
  auto work = [&](int id) {
    for (std::size_t i = id; i < primes.size(); i += threads) {
      const auto red = reduce_mod(primes[i], delta);
      hit[i] = red.degree() == delta.degree() && rabin_irreducible(red);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (hit[i]) out.push_back(primes[i]);
  return out;
}

CongruenceResult congruence_check(Tower& tower, int m, int k, std::uint64_t p, int e) {
  if (k < 1 || e < 1) throw Error(ErrorCode::InvalidArgument, "k and e must be positive");
  if (!zmod::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (static_cast<std::uint64_t>(k) % p == 0)
    throw Error(ErrorCode::PInvalidDividesK,
                "p=" + std::to_string(p) + " divides k=" + std::to_string(k));
  if (m < 1 || m > kMaxPeriod)
    throw Error(ErrorCode::UnsupportedPeriod, "period " + std::to_string(m) + " unsupported");
  std::uint64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  const int big_k = static_cast<int>(static_cast<std::uint64_t>(k) * pe);
  const auto large = m == 3 ? tower.delta_factor_via_gamma(big_k)
                            : tower.delta_factor(m * big_k, m).poly;
  const auto small = tower.delta_factor(m * k, m).poly;

  const Field field(p);
  const auto lhs = zmod::reduce(large, field);
  const std::uint64_t exponent = euler_phi(pe);
  Poly rhs{1 % p};
  const Poly base = zmod::reduce(small, field);
  for (std::uint64_t i = 0; i < exponent; ++i) rhs = zmod::mul(rhs, base, field);

  CongruenceResult out;
  out.m = m;
  out.k = k;
  out.p = p;
  out.e = e;
  out.ok = lhs == rhs;
  return out;
}

}  // namespace paradelta
