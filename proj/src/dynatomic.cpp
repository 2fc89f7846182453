#include "paradelta/dynatomic.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "paradelta/cyclotomic.hpp"
#include "paradelta/resultant.hpp"
#include "paradelta/serialize.hpp"

namespace paradelta {

namespace {

std::mutex iterate_mutex;
std::vector<BivariatePolynomial> iterates;

void require_period(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  if (m > kMaxPeriod)
    throw Error(ErrorCode::UnsupportedPeriod,
                "period " + std::to_string(m) + " exceeds supported maximum " +
                    std::to_string(kMaxPeriod));
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::Io, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

bool multiplier_shape_ok(const MultiplierPolynomial& mp) {
  const auto& p = mp.tilde;
  // Monic in x; in C the leading coefficient is a unit (delta_2 = x - C - 4).
  if (p.var1() != "x" || p.var2() != "C") return false;
  if (p.degree_in("x") != mp.deg_x || p.degree_in("C") != mp.deg_C) return false;
  const auto lead_c = p.leading_in("C");
  return p.is_monic_in("x") && lead_c.is_constant() && abs(lead_c.leading()) == 1;
}

nlohmann::ordered_json multiplier_key(int m) {
  return {{"kind", "multiplier"}, {"m", m}, {"version", kCacheFormatVersion}};
}

}  // namespace

BivariatePolynomial iterate(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "iterate count must be nonnegative");
  std::lock_guard lock(iterate_mutex);
  if (iterates.empty())
    iterates.push_back(BivariatePolynomial::monomial(1, 1, 0, "z", "c"));
  const auto c = BivariatePolynomial::monomial(1, 0, 1, "z", "c");
  while (static_cast<int>(iterates.size()) <= n) {
    const auto& last = iterates.back();
    iterates.push_back(last * last + c);
  }
  return iterates[n];
}

BivariatePolynomial iterate_derivative(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "derivative needs n >= 1");
  auto out = BivariatePolynomial::constant(1, "z", "c");
  for (int k = 0; k < n; ++k) out = out * iterate(k) * Integer(2);
  return out;
}

int dynatomic_degree(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  long total = 0;
  for (auto d : divisors(static_cast<std::uint64_t>(n)))
    total += mobius(static_cast<std::uint64_t>(n) / d) * (1L << d);
  return static_cast<int>(total);
}

BivariatePolynomial dynatomic_poly(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  const auto z = BivariatePolynomial::monomial(1, 1, 0, "z", "c");
  auto num = BivariatePolynomial::constant(1, "z", "c");
  auto den = BivariatePolynomial::constant(1, "z", "c");
  for (auto d : divisors(static_cast<std::uint64_t>(n))) {
    const int mu = mobius(static_cast<std::uint64_t>(n) / d);
    if (mu == 0) continue;
    auto factor = iterate(static_cast<int>(d)) - z;
    if (mu > 0)
      num = num * factor;
    else
      den = den * factor;
  }
  return exact_divide(num, den, "z");
}

IntegerPolynomial g_map() { return IntegerPolynomial::from_ints({1, 7, -1, 1}, "t"); }

IntegerPolynomial gamma_poly(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "gamma index must be positive");
  return compose(cyclotomic_poly(static_cast<std::uint64_t>(k), "y"), g_map());
}

IntegerPolynomial laurent_substitute(const BivariatePolynomial& p,
                                     const IntegerPolynomial& xnum, int a,
                                     const IntegerPolynomial& cnum, int b, int clear) {
  const std::string t = xnum.is_constant() ? cnum.var() : xnum.var();
  const int dx = p.degree1();
  const int dc = p.degree2();
  std::vector<IntegerPolynomial> xpow{IntegerPolynomial::constant(1, t)};
  for (int i = 1; i <= std::max(dx, 0); ++i) xpow.push_back(xpow.back() * xnum);
  std::vector<IntegerPolynomial> cpow{IntegerPolynomial::constant(1, t)};
  for (int j = 1; j <= std::max(dc, 0); ++j) cpow.push_back(cpow.back() * cnum);
  IntegerPolynomial out({}, t);
  for (const auto& [e, coeff] : p.terms()) {
    const int shift = clear - a * e.first - b * e.second;
    if (shift < 0) throw Error(ErrorCode::InvalidArgument, "clearing exponent too small");
    out += IntegerPolynomial::monomial(coeff, shift, t) * xpow[e.first] * cpow[e.second];
  }
  return out;
}

Tower::Tower(TowerOptions options) : options_(std::move(options)) {
  if (options_.threads < 1) options_.threads = 1;
}

std::filesystem::path Tower::cache_path(int m) const {
  return options_.cache_dir /
         ("delta_m" + std::to_string(m) + ".v" + std::to_string(kCacheFormatVersion) + ".json");
}

MultiplierPolynomial Tower::compute_multiplier(int m) const {
  const int nu = dynatomic_degree(m);
  const auto phi = dynatomic_poly(m);
  auto a = lift(phi, "z", "x", "c");
  auto b = lift(iterate_derivative(m), "z", "x", "c");
  for (auto& coeff : b) coeff = -coeff;
  b[0] += BivariatePolynomial::monomial(1, 1, 0, "x", "c");

  ResultantOptions ropts;
  ropts.threads = options_.threads;
  const auto power = resultant_eliminate(a, b, "x", "c", {nu, m * nu / 2}, ropts);
  const auto root = nth_root(power, static_cast<unsigned>(m), "x");

  MultiplierPolynomial mp;
  mp.m = m;
  mp.tilde = rebase_4c(root, "c", "C");
  mp.deg_x = nu / m;
  mp.deg_C = nu / 2;
  if (!multiplier_shape_ok(mp))
    throw Error(ErrorCode::NotIn4cRing,
                "multiplier polynomial for m=" + std::to_string(m) + " is not monic in x and 4c");
  return mp;
}

std::optional<MultiplierPolynomial> Tower::load_cached(int m) const {
  if (options_.cache_dir.empty()) return std::nullopt;
  std::ifstream in(cache_path(m));
  if (!in) return std::nullopt;
  try {
    auto doc = nlohmann::ordered_json::parse(in);
    if (doc.at("key") != multiplier_key(m)) return std::nullopt;
    nlohmann::ordered_json body = {{"vars", doc.at("vars")}, {"terms", doc.at("terms")}};
    if (sha256_hex(body.dump()) != doc.at("digest").get<std::string>()) return std::nullopt;
    MultiplierPolynomial mp;
    mp.m = m;
    mp.tilde = bivariate_from_json(body);
    const int nu = dynatomic_degree(m);
    mp.deg_x = nu / m;
    mp.deg_C = nu / 2;
    if (!multiplier_shape_ok(mp)) return std::nullopt;
    return mp;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Tower::store_cached(const MultiplierPolynomial& mp) const {
  if (options_.cache_dir.empty()) return;
  static std::atomic<unsigned> counter{0};
  try {
    std::filesystem::create_directories(options_.cache_dir);
    auto body = to_json(mp.tilde);
    nlohmann::ordered_json doc;
    doc["key"] = multiplier_key(mp.m);
    doc["vars"] = body["vars"];
    doc["terms"] = body["terms"];
    doc["digest"] = sha256_hex(body.dump());
    const auto target = cache_path(mp.m);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << doc.dump() << "\n";
      if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  } catch (const std::exception&) {
    // The cache is an optimization; an unwritable directory is not fatal.
  }
}

MultiplierPolynomial Tower::multiplier(int m) {
  require_period(m);
  {
    std::lock_guard lock(mutex_);
    auto it = multipliers_.find(m);
    if (it != multipliers_.end()) return it->second;
  }
  auto cached = load_cached(m);
  MultiplierPolynomial mp;
  if (cached) {
    mp = std::move(*cached);
  } else {
    mp = compute_multiplier(m);
    store_cached(mp);
  }
  std::lock_guard lock(mutex_);
  return multipliers_.emplace(m, std::move(mp)).first->second;
}

DeltaFactor Tower::delta_factor(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "n and m must be positive");
  if (n % m != 0)
    throw Error(ErrorCode::InvalidArgument,
                "m=" + std::to_string(m) + " does not divide n=" + std::to_string(n));
  require_period(m);
  {
    std::lock_guard lock(mutex_);
    auto it = factors_.find({n, m});
    if (it != factors_.end()) return it->second;
  }
  DeltaFactor out;
  out.n = n;
  out.m = m;
  if (m < n) {
    const auto k = static_cast<std::uint64_t>(n / m);
    const auto mp = multiplier(m);
    ResultantOptions ropts;
    ropts.threads = options_.threads;
    const int bound = static_cast<int>(euler_phi(k)) * mp.deg_C;
    auto r = resultant_eliminate(lift(cyclotomic_poly(k, "x"), "C", "w"),
                                 lift(mp.tilde, "x", "C", "w"), "C", "w", {bound, 0}, ropts);
    out.poly = r.evaluate("w", 0).with_var("C");
  } else {
    require_period(n);
    auto value = multiplier(n).tilde.evaluate("x", 1).with_var("C");
    auto den = IntegerPolynomial::constant(1, "C");
    for (auto d : divisors(static_cast<std::uint64_t>(n)))
      if (static_cast<int>(d) < n) den *= delta_factor(n, static_cast<int>(d)).poly;
    out.poly = exact_divide(value, den).with_var("C");
    out.degenerate = out.poly.is_constant() && !(out.poly.is_monic());
  }
  std::lock_guard lock(mutex_);
  return factors_.emplace(std::make_pair(n, m), std::move(out)).first->second;
}

IntegerPolynomial Tower::delta_factor_via_gamma(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "gamma route needs k >= 2");
  const auto gamma = gamma_poly(k);
  EliminationPoly quad{
      BivariatePolynomial::monomial(1, 1, 0, "C", "w") + BivariatePolynomial::constant(7, "C", "w"),
      BivariatePolynomial("C", "w"), BivariatePolynomial::constant(1, "C", "w")};
  ResultantOptions ropts;
  ropts.threads = options_.threads;
  auto r = resultant_eliminate(lift(gamma, "C", "w"), quad, "C", "w", {gamma.degree(), 0}, ropts);
  return r.evaluate("w", 0).with_var("C");
}

bool Tower::verify_parametrization(Parametrization which) {
  switch (which) {
    case Parametrization::X3:
    case Parametrization::X3Perturbed: {
      auto x = which == Parametrization::X3 ? g_map()
                                            : IntegerPolynomial::from_ints({2, 7, -1, 1}, "t");
      auto c = IntegerPolynomial::from_ints({-7, 0, -1}, "t");
      return multiplier(3).tilde.substitute(x, c).is_zero();
    }
    case Parametrization::X4: {
      const auto mp = multiplier(4);
      auto x = IntegerPolynomial::from_ints({16, 8, 5, -6, -4, -2, -1}, "t");
      auto c = IntegerPolynomial::from_ints({-4, -3, 0, -1}, "t");
      const int clear = 2 * mp.deg_x + 3 * mp.deg_C;
      return laurent_substitute(mp.tilde, x, 2, c, 1, clear).is_zero();
    }
  }
  return false;
}

Tower::GammaDeltaReport Tower::gamma_delta_identity(int k) {
  GammaDeltaReport report;
  const auto gamma = gamma_poly(k);
  report.separable = gcd(gamma, derivative(gamma)).is_constant();
  report.identity = delta_factor_via_gamma(k) == delta_factor(3 * k, 3).poly;
  return report;
}

}  // namespace paradelta
