#include "paradelta/exactpoly.hpp"

#include <algorithm>
#include <set>

#include "paradelta/resultant.hpp"
#include "paradelta/zmod.hpp"

namespace paradelta {

namespace {

const Integer& zero_integer() {
  static const Integer zero = 0;
  return zero;
}

bool divisible(const Integer& n, const Integer& d) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntegerPolynomial

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

IntegerPolynomial IntegerPolynomial::constant(const Integer& value, std::string var) {
  return IntegerPolynomial(std::vector<Integer>{value}, std::move(var));
}

IntegerPolynomial IntegerPolynomial::monomial(const Integer& coeff, int degree,
                                              std::string var) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return IntegerPolynomial(std::move(c), std::move(var));
}

IntegerPolynomial IntegerPolynomial::from_ints(std::initializer_list<long> coeffs,
                                               std::string var) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntegerPolynomial(std::move(c), std::move(var));
}

const Integer& IntegerPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero_integer();
  return coeffs_[i];
}

const Integer& IntegerPolynomial::leading() const {
  return coeffs_.empty() ? zero_integer() : coeffs_.back();
}

IntegerPolynomial IntegerPolynomial::with_var(std::string var) const {
  IntegerPolynomial out = *this;
  out.var_ = std::move(var);
  return out;
}

Integer IntegerPolynomial::operator()(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

void IntegerPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void IntegerPolynomial::require_same_var(const IntegerPolynomial& other) const {
  // Constants are variable-free and combine with anything.
  if (var_ != other.var_ && !is_constant() && !other.is_constant())
    throw Error(ErrorCode::VariableMismatch, var_ + " vs " + other.var_);
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& rhs) {
  require_same_var(rhs);
  if (is_constant()) var_ = rhs.var_;
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& rhs) {
  require_same_var(rhs);
  if (is_constant()) var_ = rhs.var_;
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntegerPolynomial& IntegerPolynomial::operator*=(const Integer& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  a.require_same_var(b);
  std::string var = a.is_constant() ? b.var_ : a.var_;
  if (a.is_zero() || b.is_zero()) return IntegerPolynomial({}, var);
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
  }
  return IntegerPolynomial(std::move(out), std::move(var));
}

IntegerPolynomial operator-(IntegerPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntegerPolynomial pow(const IntegerPolynomial& base, unsigned exponent) {
  IntegerPolynomial result = IntegerPolynomial::constant(1, base.var());
  IntegerPolynomial square = base;
  while (exponent != 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

IntegerPolynomial exact_divide(const IntegerPolynomial& num,
                               const IntegerPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (num.var() != den.var() && !num.is_constant() && !den.is_constant())
    throw Error(ErrorCode::VariableMismatch, num.var() + " vs " + den.var());
  const std::string var = num.is_constant() ? den.var() : num.var();
  if (num.is_zero()) return IntegerPolynomial({}, var);
  const int dn = num.degree();
  const int dd = den.degree();
  if (dn < dd) throw Error(ErrorCode::NotDivisible, "numerator degree below divisor");
  std::vector<Integer> rem = num.coeffs();
  std::vector<Integer> quot(static_cast<std::size_t>(dn - dd) + 1);
  const Integer& lead = den.leading();
  for (int i = dn; i >= dd; --i) {
    if (rem[i] == 0) continue;
    if (!divisible(rem[i], lead))
      throw Error(ErrorCode::NotDivisible, "leading coefficient does not divide");
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (int t = 0; t <= dd; ++t)
      mpz_submul(rem[i - dd + t].get_mpz_t(), q.get_mpz_t(), den.coeff(t).get_mpz_t());
    quot[i - dd] = std::move(q);
  }
  for (int i = 0; i < dd; ++i)
    if (rem[i] != 0) throw Error(ErrorCode::NotDivisible, "nonzero remainder");
  return IntegerPolynomial(std::move(quot), var);
}

IntegerPolynomial derivative(const IntegerPolynomial& p) {
  std::vector<Integer> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i) * i);
  return IntegerPolynomial(std::move(out), p.var());
}

IntegerPolynomial derivative(const IntegerPolynomial& p, const std::string& var) {
  if (var != p.var()) throw Error(ErrorCode::VariableMismatch, "unknown variable " + var);
  return derivative(p);
}

IntegerPolynomial compose(const IntegerPolynomial& outer,
                          const IntegerPolynomial& inner) {
  IntegerPolynomial acc({}, inner.var());
  for (int i = outer.degree(); i >= 0; --i) {
    acc = acc * inner;
    acc += IntegerPolynomial::constant(outer.coeff(i), inner.var());
  }
  return acc.with_var(inner.var());
}

IntegerPolynomial inflate(const IntegerPolynomial& p, int exponent) {
  if (exponent < 1) throw Error(ErrorCode::InvalidArgument, "inflation exponent must be >= 1");
  if (p.is_zero()) return p;
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()) * exponent + 1);
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i) * exponent] = p.coeff(i);
  return IntegerPolynomial(std::move(out), p.var());
}

Integer content(const IntegerPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntegerPolynomial primitive_part(const IntegerPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> out = p.coeffs();
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntegerPolynomial(std::move(out), p.var());
}

namespace {

IntegerPolynomial pseudo_remainder(const IntegerPolynomial& a,
                                   const IntegerPolynomial& b) {
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db) {
    Integer lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int t = 0; t <= db; ++t)
      mpz_submul(r[dr - db + t].get_mpz_t(), lr.get_mpz_t(), b.coeff(t).get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  return IntegerPolynomial(std::move(r), a.var());
}

}  // namespace

IntegerPolynomial gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  IntegerPolynomial x = primitive_part(a);
  IntegerPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntegerPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_separable(const IntegerPolynomial& p) {
  if (p.degree() <= 0) return !p.is_zero();
  const IntegerPolynomial dp = derivative(p);
  // A nonvanishing discriminant modulo one good prime certifies
  // separability; otherwise fall back to the exact gcd.
  std::uint64_t q = 1ULL << 62;
  for (int attempt = 0; attempt < 4; ++attempt) {
    q = zmod::previous_prime(q);
    zmod::Field f(q);
    if (f.reduce(p.leading()) == 0) continue;
    if (zmod::resultant(zmod::reduce(p, f), zmod::reduce(dp, f), f) != 0) return true;
  }
  return gcd(p, dp).degree() == 0;
}

IntegerPolynomial interpolate_integer(
    const std::vector<std::pair<Integer, Integer>>& points, std::string var) {
  const std::size_t n = points.size();
  std::set<Integer> seen;
  for (const auto& [x, y] : points)
    if (!seen.insert(x).second)
      throw Error(ErrorCode::InvalidArgument, "repeated abscissa");
  std::vector<Integer> c;
  c.reserve(n);
  for (const auto& pt : points) c.push_back(pt.second);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      Integer num = c[i] - c[i - 1];
      Integer den = points[i].first - points[i - j].first;
      if (!divisible(num, den))
        throw Error(ErrorCode::NonIntegralInterpolant,
                    "divided difference is not an integer");
      mpz_divexact(c[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      if (i == j) break;
    }
  }
  IntegerPolynomial poly({}, var);
  for (std::size_t step = n; step-- > 0;) {
    poly = poly * IntegerPolynomial({Integer(-points[step].first), Integer(1)}, var);
    poly += IntegerPolynomial::constant(c[step], var);
  }
  return poly.with_var(std::move(var));
}

Integer resultant(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int na = a.degree();
  const int nb = b.degree();
  if (na == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.coeff(0).get_mpz_t(), nb);
    return r;
  }
  if (nb == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.coeff(0).get_mpz_t(), na);
    return r;
  }
  // Hadamard bound on the Sylvester determinant: ||a||^nb * ||b||^na.
  auto norm_bits = [](const IntegerPolynomial& p) {
    Integer s = 0;
    for (const auto& c : p.coeffs()) s += c * c;
    return mpz_sizeinbase(s.get_mpz_t(), 2) / 2 + 1;
  };
  const std::size_t bits = norm_bits(a) * nb + norm_bits(b) * na + 2;
  PrimeResidueSystem system;
  std::uint64_t q = 1ULL << 62;
  while (system.primes.size() * 61 < bits) {
    q = zmod::previous_prime(q);
    zmod::Field f(q);
    system.primes.push_back(q);
    system.residues.push_back(
        zmod::resultant_formal(zmod::reduce(a, f), zmod::reduce(b, f), na, nb, f));
  }
  return crt_reconstruct(system);
}

Integer discriminant(const IntegerPolynomial& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "discriminant of a constant");
  Integer r = resultant(p, derivative(p));
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(std::string var1, std::string var2)
    : var1_(std::move(var1)), var2_(std::move(var2)) {
  if (var1_ == var2_) throw Error(ErrorCode::InvalidArgument, "variables must differ");
}

BivariatePolynomial BivariatePolynomial::constant(const Integer& value, std::string var1,
                                                  std::string var2) {
  BivariatePolynomial p(std::move(var1), std::move(var2));
  p.set(0, 0, value);
  return p;
}

BivariatePolynomial BivariatePolynomial::monomial(const Integer& coeff, int i, int j,
                                                  std::string var1, std::string var2) {
  BivariatePolynomial p(std::move(var1), std::move(var2));
  p.set(i, j, coeff);
  return p;
}

BivariatePolynomial BivariatePolynomial::from_univariate(const IntegerPolynomial& p,
                                                         std::string var1,
                                                         std::string var2) {
  BivariatePolynomial out(var1, var2);
  const bool first = p.var() == var1;
  if (!first && p.var() != var2 && !p.is_constant())
    throw Error(ErrorCode::VariableMismatch, "variable " + p.var() + " not in pair");
  for (int i = 0; i <= p.degree(); ++i) {
    if (first) out.set(i, 0, p.coeff(i));
    else out.set(0, i, p.coeff(i));
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::from_rows(
    const std::vector<IntegerPolynomial>& rows, std::string var1, std::string var2) {
  BivariatePolynomial out(std::move(var1), std::move(var2));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j <= rows[i].degree(); ++j)
      out.set(static_cast<int>(i), j, rows[i].coeff(j));
  return out;
}

Integer BivariatePolynomial::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivariatePolynomial::set(int i, int j, const Integer& value) {
  if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  if (value == 0) terms_.erase({i, j});
  else terms_[{i, j}] = value;
}

int BivariatePolynomial::degree1() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivariatePolynomial::degree2() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BivariatePolynomial::degree_in(const std::string& var) const {
  if (var == var1_) return degree1();
  if (var == var2_) return degree2();
  throw Error(ErrorCode::VariableMismatch, "unknown variable " + var);
}

std::vector<IntegerPolynomial> BivariatePolynomial::rows(const std::string& main) const {
  const bool first = main == var1_;
  if (!first && main != var2_) throw Error(ErrorCode::VariableMismatch, "unknown variable " + main);
  const std::string& other = first ? var2_ : var1_;
  const int d = degree_in(main);
  std::vector<std::vector<Integer>> dense(d + 1);
  for (const auto& [e, c] : terms_) {
    const int i = first ? e.first : e.second;
    const int j = first ? e.second : e.first;
    auto& row = dense[i];
    if (static_cast<int>(row.size()) <= j) row.resize(j + 1);
    row[j] = c;
  }
  std::vector<IntegerPolynomial> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row), other);
  return out;
}

IntegerPolynomial BivariatePolynomial::leading_in(const std::string& var) const {
  auto r = rows(var);
  if (r.empty()) return IntegerPolynomial({}, var == var1_ ? var2_ : var1_);
  return r.back();
}

bool BivariatePolynomial::is_monic_in(const std::string& var) const {
  auto lead = leading_in(var);
  return lead.degree() == 0 && lead.coeff(0) == 1;
}

IntegerPolynomial BivariatePolynomial::evaluate(const std::string& var,
                                                const Integer& value) const {
  const bool first = var == var1_;
  if (!first && var != var2_) throw Error(ErrorCode::VariableMismatch, "unknown variable " + var);
  const std::string& other = first ? var2_ : var1_;
  std::vector<Integer> out;
  // Horner per exponent of the surviving variable.
  for (const auto& [e, c] : terms_) {
    const int fixed = first ? e.first : e.second;
    const int kept = first ? e.second : e.first;
    if (static_cast<int>(out.size()) <= kept) out.resize(kept + 1);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), fixed);
    mpz_addmul(out[kept].get_mpz_t(), c.get_mpz_t(), power.get_mpz_t());
  }
  return IntegerPolynomial(std::move(out), other);
}

Integer BivariatePolynomial::evaluate(const Integer& at1, const Integer& at2) const {
  return evaluate(var1_, at1)(at2);
}

IntegerPolynomial BivariatePolynomial::substitute(const IntegerPolynomial& for1,
                                                  const IntegerPolynomial& for2) const {
  const std::string var = for1.is_constant() ? for2.var() : for1.var();
  IntegerPolynomial acc({}, var);
  auto r = rows(var1_);
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
    acc = acc * for1;
    acc += compose(r[i], for2.with_var(var));
  }
  return acc.with_var(var);
}

BivariatePolynomial BivariatePolynomial::rename(std::string var1, std::string var2) const {
  BivariatePolynomial out(std::move(var1), std::move(var2));
  out.terms_ = terms_;
  return out;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial out(var2_, var1_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.second, e.first}, c);
  return out;
}

BivariatePolynomial BivariatePolynomial::aligned(const BivariatePolynomial& other) const {
  if (other.var1_ == var1_ && other.var2_ == var2_) return other;
  if (other.var1_ == var2_ && other.var2_ == var1_) return other.swapped();
  // A polynomial free of both of its variables is a constant and aligns with
  // any pair.
  bool constant = other.terms_.empty() ||
                  (other.terms_.size() == 1 && other.terms_.begin()->first == Exponents{0, 0});
  if (constant) return other.rename(var1_, var2_);
  throw Error(ErrorCode::VariableMismatch,
              "(" + var1_ + "," + var2_ + ") vs (" + other.var1_ + "," + other.var2_ + ")");
}

void BivariatePolynomial::require_same_vars(const BivariatePolynomial& other) const {
  (void)aligned(other);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  for (const auto& [e, c] : aligned(rhs).terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
  return *this += -rhs;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Integer& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  const BivariatePolynomial bb = a.aligned(b);
  BivariatePolynomial out(a.var1_, a.var2_);
  if (a.is_zero() || bb.is_zero()) return out;
  const int d1 = a.degree1() + bb.degree1();
  const int d2 = a.degree2() + bb.degree2();
  const std::size_t width = static_cast<std::size_t>(d2) + 1;
  std::vector<Integer> dense((static_cast<std::size_t>(d1) + 1) * width);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : bb.terms_)
      mpz_addmul(dense[(ea.first + eb.first) * width + ea.second + eb.second].get_mpz_t(),
                 ca.get_mpz_t(), cb.get_mpz_t());
  for (int i = 0; i <= d1; ++i)
    for (int j = 0; j <= d2; ++j) {
      auto& c = dense[i * width + j];
      if (c != 0) out.terms_.emplace_hint(out.terms_.end(), BivariatePolynomial::Exponents{i, j},
                                          std::move(c));
    }
  return out;
}

BivariatePolynomial operator-(BivariatePolynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() && b.is_zero()) return true;
  try {
    return a.terms_ == a.aligned(b).terms_;
  } catch (const Error&) {
    return false;
  }
}

BivariatePolynomial pow(const BivariatePolynomial& base, unsigned exponent) {
  BivariatePolynomial result =
      BivariatePolynomial::constant(1, base.var1(), base.var2());
  BivariatePolynomial square = base;
  while (exponent != 0) {
    if (exponent & 1) result = result * square;
    exponent >>= 1;
    if (exponent != 0) square = square * square;
  }
  return result;
}

BivariatePolynomial exact_divide(const BivariatePolynomial& num,
                                 const BivariatePolynomial& den,
                                 const std::string& main_var) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (!num.has_var(main_var)) throw Error(ErrorCode::VariableMismatch, "unknown variable " + main_var);
  const std::string other = main_var == num.var1() ? num.var2() : num.var1();
  const BivariatePolynomial d = BivariatePolynomial(num.var1(), num.var2()) + den;
  auto rem = num.rows(main_var);
  auto drows = d.rows(main_var);
  for (auto& r : rem) r = r.with_var(other);
  for (auto& r : drows) r = r.with_var(other);
  const int dd = static_cast<int>(drows.size()) - 1;
  const int dn = static_cast<int>(rem.size()) - 1;
  std::vector<IntegerPolynomial> quot;
  if (dn >= dd) quot.assign(dn - dd + 1, IntegerPolynomial({}, other));
  for (int i = dn; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    IntegerPolynomial q = exact_divide(rem[i], drows[dd]);
    for (int t = 0; t <= dd; ++t) rem[i - dd + t] -= q * drows[t];
    quot[i - dd] = std::move(q);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "nonzero remainder");
  BivariatePolynomial out = BivariatePolynomial::from_rows(quot, main_var, other);
  return main_var == num.var1() ? out : out.swapped();
}

BivariatePolynomial derivative(const BivariatePolynomial& p, const std::string& var) {
  if (!p.has_var(var)) throw Error(ErrorCode::VariableMismatch, "unknown variable " + var);
  const bool first = var == p.var1();
  BivariatePolynomial out(p.var1(), p.var2());
  for (const auto& [e, c] : p.terms()) {
    const int k = first ? e.first : e.second;
    if (k == 0) continue;
    if (first) out.set(e.first - 1, e.second, c * k);
    else out.set(e.first, e.second - 1, c * k);
  }
  return out;
}

BivariatePolynomial nth_root(const BivariatePolynomial& p, unsigned n,
                             const std::string& main_var) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (!p.has_var(main_var)) throw Error(ErrorCode::VariableMismatch, "unknown variable " + main_var);
  if (!p.is_monic_in(main_var))
    throw Error(ErrorCode::InvalidArgument, "nth_root needs a polynomial monic in " + main_var);
  const std::string other = main_var == p.var1() ? p.var2() : p.var1();
  const int total = p.degree_in(main_var);
  if (total % static_cast<int>(n) != 0)
    throw Error(ErrorCode::NotAPerfectPower, "degree not divisible by root index");
  const int d = total / static_cast<int>(n);

  // Reversed coefficients P_k = coefficient of main^(total - k), P_0 = 1.
  auto rows = p.rows(main_var);
  std::vector<IntegerPolynomial> rev(total + 1);
  for (int k = 0; k <= total; ++k) rev[k] = rows[total - k].with_var(other);

  // Q = P^(1/n) as a power series in 1/main:
  //   n k Q_k = sum_{i=1..k} ((n + 1) i - n k) P_i Q_{k-i}.
  const long nn = static_cast<long>(n);
  std::vector<IntegerPolynomial> root(d + 1, IntegerPolynomial({}, other));
  root[0] = IntegerPolynomial::constant(1, other);
  for (int k = 1; k <= d; ++k) {
    IntegerPolynomial sum({}, other);
    for (int i = 1; i <= k; ++i) {
      const long weight = (nn + 1) * i - nn * k;
      if (weight == 0 || rev[i].is_zero() || root[k - i].is_zero()) continue;
      sum += rev[i] * root[k - i] * Integer(weight);
    }
    const Integer divisor = nn * k;
    std::vector<Integer> coeffs = sum.coeffs();
    for (auto& c : coeffs) {
      if (!divisible(c, divisor))
        throw Error(ErrorCode::NotAPerfectPower, "coefficient matching failed");
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    }
    root[k] = IntegerPolynomial(std::move(coeffs), other);
  }
  std::vector<IntegerPolynomial> forward(root.rbegin(), root.rend());
  BivariatePolynomial r = BivariatePolynomial::from_rows(forward, main_var, other);
  if (main_var != p.var1()) r = r.swapped();
  if (!(pow(r, n) == p)) throw Error(ErrorCode::NotAPerfectPower, "power check failed");
  return r;
}

BivariatePolynomial rebase_4c(const BivariatePolynomial& p, const std::string& param,
                              const std::string& rebased) {
  if (!p.has_var(param)) throw Error(ErrorCode::VariableMismatch, "unknown variable " + param);
  const bool first = param == p.var1();
  BivariatePolynomial out(first ? rebased : p.var1(), first ? p.var2() : rebased);
  for (const auto& [e, c] : p.terms()) {
    const int j = first ? e.first : e.second;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 4, j);
    if (!divisible(c, scale))
      throw Error(ErrorCode::NotIn4cRing, "coefficient not divisible by 4^" + std::to_string(j));
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
    out.set(e.first, e.second, q);
  }
  return out;
}

}  // namespace paradelta
