#ifndef PARADELTA_EXACTPOLY_HPP
#define PARADELTA_EXACTPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paradelta/error.hpp"

namespace paradelta {

using Integer = mpz_class;

/// Dense univariate polynomial over Z. `coeffs()[i]` is the coefficient of
/// var^i; the highest stored coefficient is never zero.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<Integer> coeffs, std::string var = "x");

  static IntegerPolynomial constant(const Integer& value, std::string var = "x");
  static IntegerPolynomial monomial(const Integer& coeff, int degree,
                                    std::string var = "x");
  // Builds from small coefficients, lowest degree first.
  static IntegerPolynomial from_ints(std::initializer_list<long> coeffs,
                                     std::string var = "x");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(int i) const;
  const Integer& leading() const;
  const std::string& var() const { return var_; }

  IntegerPolynomial with_var(std::string var) const;
  Integer operator()(const Integer& at) const;

  IntegerPolynomial& operator+=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator-=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
  IntegerPolynomial& operator*=(const Integer& rhs);

  friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) {
    return a += b;
  }
  friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) {
    return a -= b;
  }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a,
                                     const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(IntegerPolynomial a, const Integer& b) {
    return a *= b;
  }
  friend IntegerPolynomial operator-(IntegerPolynomial a);
  friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  void require_same_var(const IntegerPolynomial& other) const;

  std::vector<Integer> coeffs_;
  std::string var_ = "x";
};

IntegerPolynomial pow(const IntegerPolynomial& base, unsigned exponent);

// Quotient of num by den; throws NotDivisible unless the division is exact
// over Z.
IntegerPolynomial exact_divide(const IntegerPolynomial& num,
                               const IntegerPolynomial& den);

IntegerPolynomial derivative(const IntegerPolynomial& p);
IntegerPolynomial derivative(const IntegerPolynomial& p, const std::string& var);

/// outer(inner(t)); the result carries inner's variable.
IntegerPolynomial compose(const IntegerPolynomial& outer,
                          const IntegerPolynomial& inner);

/// p(var^e): substitutes a monomial power for the variable.
IntegerPolynomial inflate(const IntegerPolynomial& p, int exponent);

Integer content(const IntegerPolynomial& p);
IntegerPolynomial primitive_part(const IntegerPolynomial& p);

/// Greatest common divisor over Q, returned primitive with positive leading
/// coefficient (primitive remainder sequence).
IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// True when gcd(p, p') is constant.
bool is_separable(const IntegerPolynomial& p);

/// The interpolant of degree < points.size(); throws NonIntegralInterpolant
/// when a Newton divided difference is not an integer.
IntegerPolynomial interpolate_integer(
    const std::vector<std::pair<Integer, Integer>>& points, std::string var = "x");

/// Resultant under the convention Res(A, B) = lc(A)^deg B * prod_{A(a)=0} B(a)
/// (Sylvester matrix with the rows of A first).
Integer resultant(const IntegerPolynomial& a, const IntegerPolynomial& b);

/// Discriminant with the usual sign: (-1)^{n(n-1)/2} Res(p, p') / lc(p).
Integer discriminant(const IntegerPolynomial& p);

/// Sparse polynomial in two named variables. Terms are keyed by the exponent
/// pair (i, j) of var1^i var2^j; zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, Integer>;

  BivariatePolynomial() = default;
  BivariatePolynomial(std::string var1, std::string var2);

  static BivariatePolynomial constant(const Integer& value, std::string var1,
                                      std::string var2);
  static BivariatePolynomial monomial(const Integer& coeff, int i, int j,
                                      std::string var1, std::string var2);
  /// Embeds a univariate polynomial whose variable must be var1 or var2.
  static BivariatePolynomial from_univariate(const IntegerPolynomial& p,
                                             std::string var1, std::string var2);
  /// Builds from rows: rows[i] is the coefficient of var1^i as a polynomial
  /// in var2.
  static BivariatePolynomial from_rows(const std::vector<IntegerPolynomial>& rows,
                                       std::string var1, std::string var2);

  const std::string& var1() const { return var1_; }
  const std::string& var2() const { return var2_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coeff(int i, int j) const;
  void set(int i, int j, const Integer& value);

  int degree_in(const std::string& var) const;
  int degree1() const;
  int degree2() const;
  bool has_var(const std::string& var) const { return var == var1_ || var == var2_; }

  /// rows()[i] = coefficient of main^i, a polynomial in the other variable.
  std::vector<IntegerPolynomial> rows(const std::string& main) const;

  /// Leading coefficient with respect to var, as a polynomial in the other.
  IntegerPolynomial leading_in(const std::string& var) const;
  bool is_monic_in(const std::string& var) const;

  /// Fixes `var` to `value`; the result is univariate in the other variable.
  IntegerPolynomial evaluate(const std::string& var, const Integer& value) const;
  Integer evaluate(const Integer& at1, const Integer& at2) const;

  /// Substitutes univariate polynomials (sharing one variable) for both
  /// variables.
  IntegerPolynomial substitute(const IntegerPolynomial& for1,
                               const IntegerPolynomial& for2) const;

  BivariatePolynomial rename(std::string var1, std::string var2) const;
  /// Same polynomial with the variables listed in the other order.
  BivariatePolynomial swapped() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const Integer& rhs);

  friend BivariatePolynomial operator+(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a,
                                       const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Integer& b) {
    return a *= b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b);

 private:
  void require_same_vars(const BivariatePolynomial& other) const;
  // Maps a term of `other` onto this object's (var1, var2) ordering.
  BivariatePolynomial aligned(const BivariatePolynomial& other) const;

  std::string var1_ = "x";
  std::string var2_ = "y";
  TermMap terms_;
};

BivariatePolynomial pow(const BivariatePolynomial& base, unsigned exponent);

/// Exact quotient treating main_var as the outer variable; throws
/// NotDivisible when any remainder appears.
BivariatePolynomial exact_divide(const BivariatePolynomial& num,
                                 const BivariatePolynomial& den,
                                 const std::string& main_var);

BivariatePolynomial derivative(const BivariatePolynomial& p, const std::string& var);

/// r with r^n = p and r monic in main_var; throws NotAPerfectPower.
BivariatePolynomial nth_root(const BivariatePolynomial& p, unsigned n,
                             const std::string& main_var);

/// Rewrites p(x, c) = sum_j b_j(x) c^j as sum_j (b_j / 4^j) C^j; throws
/// NotIn4cRing when 4^j does not divide b_j.
BivariatePolynomial rebase_4c(const BivariatePolynomial& p,
                              const std::string& param = "c",
                              const std::string& rebased = "C");

}  // namespace paradelta

#endif  // PARADELTA_EXACTPOLY_HPP
