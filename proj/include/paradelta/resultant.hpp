#ifndef PARADELTA_RESULTANT_HPP
#define PARADELTA_RESULTANT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "paradelta/exactpoly.hpp"

namespace paradelta {

/// Images of one integer modulo pairwise distinct word-size primes.
struct PrimeResidueSystem {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> residues;
};

/// The representative in (-M/2, M/2], M the product of the primes.
Integer crt_reconstruct(const PrimeResidueSystem& system);

/// Polynomial in the eliminated variable whose coefficients are bivariate in
/// the two surviving variables: element i multiplies z^i.
using EliminationPoly = std::vector<BivariatePolynomial>;

/// Lifts p, a polynomial in `elim` and one of (u, v), into EliminationPoly.
EliminationPoly lift(const BivariatePolynomial& p, const std::string& elim,
                     const std::string& u, const std::string& v);
EliminationPoly lift(const IntegerPolynomial& p, const std::string& u,
                     const std::string& v);

struct ResultantBounds {
  int deg_u = 0;
  int deg_v = 0;
};

struct ResultantOptions {
  int threads = 1;
  int max_primes = 512;
  int probes = 3;
  std::uint64_t probe_seed = 0x5eed5eedULL;
};

/// Statistics from the last modular run, for diagnostics and tests.
struct ResultantTrace {
  int primes_used = 0;
  int grid_points = 0;
};

/// Res_z(a, b) as a polynomial in (u, v): evaluation on the symmetric integer
/// grid of (deg_u + 1) x (deg_v + 1) points, one modular resultant per point
/// and prime, interpolation modulo each prime, then CRT on the coefficients
/// until the reconstruction is stable. Three random probe points are checked
/// against a modular Sylvester determinant; a mismatch (or a reconstruction
/// that never stabilizes) raises DegreeBoundViolated.
BivariatePolynomial resultant_eliminate(const EliminationPoly& a,
                                        const EliminationPoly& b,
                                        const std::string& u, const std::string& v,
                                        ResultantBounds bounds,
                                        const ResultantOptions& options = {},
                                        ResultantTrace* trace = nullptr);

/// Convenience form: a and b each contain `elim` and at most one of (u, v).
BivariatePolynomial resultant_in_z(const BivariatePolynomial& a,
                                   const BivariatePolynomial& b,
                                   ResultantBounds bounds, const std::string& u,
                                   const std::string& v,
                                   const std::string& elim = "z",
                                   const ResultantOptions& options = {});

}  // namespace paradelta

#endif  // PARADELTA_RESULTANT_HPP
