#include "paradelta/resultant.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "paradelta/zmod.hpp"

namespace paradelta {

Integer crt_reconstruct(const PrimeResidueSystem& system) {
  if (system.primes.size() != system.residues.size() || system.primes.empty())
    throw Error(ErrorCode::InconsistentResidues, "residue count does not match prime count");
  std::set<std::uint64_t> distinct(system.primes.begin(), system.primes.end());
  if (distinct.size() != system.primes.size())
    throw Error(ErrorCode::InconsistentResidues, "primes must be pairwise distinct");

  Integer value = 0;
  Integer modulus = 1;
  for (std::size_t i = 0; i < system.primes.size(); ++i) {
    zmod::Field f(system.primes[i]);
    const zmod::Residue current = f.reduce(value);
    const zmod::Residue target = system.residues[i] % f.p();
    const zmod::Residue t = f.mul(f.sub(target, current), f.inv(f.reduce(modulus)));
    value += modulus * Integer(static_cast<unsigned long>(t));
    modulus *= Integer(static_cast<unsigned long>(f.p()));
  }
  // Symmetric representative in (-M/2, M/2].
  if (2 * value > modulus) value -= modulus;
  return value;
}

EliminationPoly lift(const BivariatePolynomial& p, const std::string& elim,
                     const std::string& u, const std::string& v) {
  if (!p.has_var(elim)) throw Error(ErrorCode::VariableMismatch, "missing variable " + elim);
  const std::string other = p.var1() == elim ? p.var2() : p.var1();
  if (other != u && other != v && p.degree_in(other) > 0)
    throw Error(ErrorCode::VariableMismatch, "variable " + other + " not in (" + u + "," + v + ")");
  const auto rows = p.rows(elim);
  EliminationPoly out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    IntegerPolynomial r = row.with_var(other == u || other == v ? other : u);
    out.push_back(BivariatePolynomial::from_univariate(r, u, v));
  }
  return out;
}

EliminationPoly lift(const IntegerPolynomial& p, const std::string& u, const std::string& v) {
  EliminationPoly out;
  for (int i = 0; i <= p.degree(); ++i)
    out.push_back(BivariatePolynomial::constant(p.coeff(i), u, v));
  return out;
}

namespace {

struct Term {
  int i;
  int j;
  Integer value;
};

// Coefficient of z^t as a flat term list aligned to (u, v).
using TermList = std::vector<Term>;

std::vector<TermList> flatten(const EliminationPoly& p, const std::string& u,
                              const std::string& v) {
  std::vector<TermList> out;
  out.reserve(p.size());
  for (const auto& coeff : p) {
    BivariatePolynomial aligned = BivariatePolynomial(u, v) + coeff;
    TermList terms;
    for (const auto& [e, c] : aligned.terms()) terms.push_back({e.first, e.second, c});
    out.push_back(std::move(terms));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::vector<long> symmetric_grid(int count) {
  std::vector<long> g;
  g.reserve(count);
  for (int k = 0; static_cast<int>(g.size()) < count; ++k) {
    if (k == 0) {
      g.push_back(0);
      continue;
    }
    g.push_back(k);
    if (static_cast<int>(g.size()) < count) g.push_back(-k);
  }
  return g;
}

// Newton interpolation on a fixed node set with the inverse table built once
// per prime.
class Interpolator {
 public:
  Interpolator(std::vector<zmod::Residue> xs, const zmod::Field& f) : xs_(std::move(xs)), f_(f) {
    const std::size_t n = xs_.size();
    inverses_.assign(n * n, 0);
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = j; i < n; ++i)
        inverses_[j * n + i] = f_.inv(f_.sub(xs_[i], xs_[i - j]));
  }

  zmod::Poly operator()(std::vector<zmod::Residue> c) const {
    const std::size_t n = xs_.size();
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = n - 1; i >= j; --i) {
        c[i] = f_.mul(f_.sub(c[i], c[i - 1]), inverses_[j * n + i]);
        if (i == j) break;
      }
    zmod::Poly poly(n, 0);
    if (n == 0) return poly;
    // Expand the Newton form from the innermost term outwards.
    std::size_t len = 1;
    poly[0] = c[n - 1];
    for (std::size_t step = n - 1; step-- > 0;) {
      const zmod::Residue x = xs_[step];
      poly[len] = 0;
      for (std::size_t t = len; t > 0; --t) poly[t] = f_.sub(poly[t - 1], f_.mul(poly[t], x));
      poly[0] = f_.sub(c[step], f_.mul(poly[0], x));
      ++len;
    }
    return poly;
  }

 private:
  std::vector<zmod::Residue> xs_;
  zmod::Field f_;
  std::vector<zmod::Residue> inverses_;
};

struct ReducedTerm {
  int i;
  int j;
  zmod::Residue value;
};

using ReducedPoly = std::vector<std::vector<ReducedTerm>>;

ReducedPoly reduce_terms(const std::vector<TermList>& p, const zmod::Field& f) {
  ReducedPoly out(p.size());
  for (std::size_t t = 0; t < p.size(); ++t)
    for (const auto& term : p[t]) out[t].push_back({term.i, term.j, f.reduce(term.value)});
  return out;
}

// Fixes v: each z-coefficient becomes a dense polynomial in u.
std::vector<zmod::Poly> specialize_v(const ReducedPoly& p, const std::vector<zmod::Residue>& vpow,
                                     int max_u, const zmod::Field& f) {
  std::vector<zmod::Poly> out(p.size(), zmod::Poly(static_cast<std::size_t>(max_u) + 1, 0));
  for (std::size_t t = 0; t < p.size(); ++t)
    for (const auto& term : p[t])
      out[t][term.i] = f.add(out[t][term.i], f.mul(term.value, vpow[term.j]));
  return out;
}

zmod::Poly specialize_u(const std::vector<zmod::Poly>& p, zmod::Residue u, const zmod::Field& f) {
  zmod::Poly out(p.size(), 0);
  for (std::size_t t = 0; t < p.size(); ++t) out[t] = zmod::evaluate(p[t], u, f);
  zmod::trim(out);
  return out;
}

std::vector<zmod::Residue> powers(zmod::Residue x, int count, const zmod::Field& f) {
  std::vector<zmod::Residue> out(static_cast<std::size_t>(std::max(count, 0)) + 1);
  out[0] = 1;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = f.mul(out[k - 1], x);
  return out;
}

int max_exponent(const std::vector<TermList>& a, const std::vector<TermList>& b, bool first) {
  int d = 0;
  for (const auto* p : {&a, &b})
    for (const auto& terms : *p)
      for (const auto& t : terms) d = std::max(d, first ? t.i : t.j);
  return d;
}

}  // namespace

BivariatePolynomial resultant_eliminate(const EliminationPoly& a_in,
                                        const EliminationPoly& b_in,
                                        const std::string& u, const std::string& v,
                                        ResultantBounds bounds,
                                        const ResultantOptions& options,
                                        ResultantTrace* trace) {
  if (bounds.deg_u < 0 || bounds.deg_v < 0)
    throw Error(ErrorCode::InvalidArgument, "degree bounds must be nonnegative");
  const auto a = flatten(a_in, u, v);
  const auto b = flatten(b_in, u, v);
  if (a.empty() || b.empty()) return BivariatePolynomial(u, v);
  const int na = static_cast<int>(a.size()) - 1;
  const int nb = static_cast<int>(b.size()) - 1;
  const int max_u = max_exponent(a, b, true);
  const int max_v = max_exponent(a, b, false);

  const auto grid_u = symmetric_grid(bounds.deg_u + 1);
  const auto grid_v = symmetric_grid(bounds.deg_v + 1);
  const std::size_t nu = grid_u.size();
  const std::size_t nv = grid_v.size();
  const int threads = std::max(1, options.threads);

  // Reconstructed coefficients (i, j) stored row-major by i, symmetric range.
  std::vector<Integer> value(nu * nv, 0);
  Integer modulus = 1;
  int primes_used = 0;
  int quiet_primes = 0;
  std::uint64_t prime = 1ULL << 62;

  while (quiet_primes < 2) {
    if (primes_used >= options.max_primes)
      throw Error(ErrorCode::DegreeBoundViolated,
                  "CRT reconstruction did not stabilize; degree bounds too small");
    prime = zmod::previous_prime(prime);
    const zmod::Field f(prime);
    ++primes_used;

    std::vector<zmod::Residue> us(nu), vs(nv);
    for (std::size_t k = 0; k < nu; ++k) us[k] = f.from_signed(grid_u[k]);
    for (std::size_t k = 0; k < nv; ++k) vs[k] = f.from_signed(grid_v[k]);
    const ReducedPoly ra = reduce_terms(a, f);
    const ReducedPoly rb = reduce_terms(b, f);

    // samples[iu * nv + iv] = Res_z at (u_iu, v_iv)
    std::vector<zmod::Residue> samples(nu * nv);
    auto work = [&](std::size_t first) {
      for (std::size_t iv = first; iv < nv; iv += threads) {
        const auto vpow = powers(vs[iv], max_v, f);
        const auto av = specialize_v(ra, vpow, max_u, f);
        const auto bv = specialize_v(rb, vpow, max_u, f);
        for (std::size_t iu = 0; iu < nu; ++iu) {
          const auto sa = specialize_u(av, us[iu], f);
          const auto sb = specialize_u(bv, us[iu], f);
          samples[iu * nv + iv] = zmod::resultant_formal(sa, sb, na, nb, f);
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
    }

    // Interpolate in v for each u, then in u for each v-power.
    const Interpolator in_v(vs, f);
    const Interpolator in_u(us, f);
    std::vector<zmod::Residue> by_v(nu * nv);
    for (std::size_t iu = 0; iu < nu; ++iu) {
      std::vector<zmod::Residue> ys(samples.begin() + iu * nv, samples.begin() + (iu + 1) * nv);
      const auto coeffs = in_v(std::move(ys));
      for (std::size_t j = 0; j < nv; ++j) by_v[iu * nv + j] = coeffs[j];
    }
    std::vector<zmod::Residue> image(nu * nv);
    for (std::size_t j = 0; j < nv; ++j) {
      std::vector<zmod::Residue> ys(nu);
      for (std::size_t iu = 0; iu < nu; ++iu) ys[iu] = by_v[iu * nv + j];
      const auto coeffs = in_u(std::move(ys));
      for (std::size_t i = 0; i < nu; ++i) image[i * nv + j] = coeffs[i];
    }

    // Garner step; the symmetric representative is unchanged exactly when
    // every correction term vanishes.
    const zmod::Residue inv_m = f.inv(f.reduce(modulus));
    bool changed = false;
    const Integer half_p = Integer(static_cast<unsigned long>(prime / 2));
    for (std::size_t k = 0; k < value.size(); ++k) {
      const zmod::Residue t = f.mul(f.sub(image[k], f.reduce(value[k])), inv_m);
      if (t == 0) continue;
      changed = true;
      Integer step = Integer(static_cast<unsigned long>(t));
      if (step > half_p) step -= Integer(static_cast<unsigned long>(prime));
      value[k] += modulus * step;
    }
    modulus *= Integer(static_cast<unsigned long>(prime));
    quiet_primes = (changed || primes_used == 1) ? 0 : quiet_primes + 1;
  }

  BivariatePolynomial result(u, v);
  for (std::size_t i = 0; i < nu; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      if (value[i * nv + j] != 0) result.set(static_cast<int>(i), static_cast<int>(j), value[i * nv + j]);

  // Probe points off the grid, checked with an independent modular Sylvester
  // determinant under a prime not used above.
  std::mt19937_64 rng(options.probe_seed);
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  std::uint64_t probe_prime = 1ULL << 61;
  for (int k = 0; k < options.probes; ++k) {
    probe_prime = zmod::previous_prime(probe_prime);
    const zmod::Field f(probe_prime);
    const long pu = coord(rng);
    const long pv = coord(rng);
    const auto upow = powers(f.from_signed(pu), std::max(max_u, bounds.deg_u), f);
    const auto vpow = powers(f.from_signed(pv), std::max(max_v, bounds.deg_v), f);
    const auto sa = specialize_u(specialize_v(reduce_terms(a, f), vpow, max_u, f), f.from_signed(pu), f);
    const auto sb = specialize_u(specialize_v(reduce_terms(b, f), vpow, max_u, f), f.from_signed(pu), f);
    const zmod::Residue expected = zmod::sylvester_determinant(sa, sb, na, nb, f);
    zmod::Residue got = 0;
    for (const auto& [e, c] : result.terms())
      got = f.add(got, f.mul(f.reduce(c), f.mul(upow[e.first], vpow[e.second])));
    if (got != expected)
      throw Error(ErrorCode::DegreeBoundViolated,
                  "probe mismatch at (" + std::to_string(pu) + "," + std::to_string(pv) + ")");
  }

  if (trace) {
    trace->primes_used = primes_used;
    trace->grid_points = static_cast<int>(nu * nv);
  }
  return result;
}

BivariatePolynomial resultant_in_z(const BivariatePolynomial& a, const BivariatePolynomial& b,
                                   ResultantBounds bounds, const std::string& u,
                                   const std::string& v, const std::string& elim,
                                   const ResultantOptions& options) {
  return resultant_eliminate(lift(a, elim, u, v), lift(b, elim, u, v), u, v, bounds, options);
}

}  // namespace paradelta
