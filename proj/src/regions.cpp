#include "paradelta/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "paradelta/cyclotomic.hpp"

namespace paradelta {

namespace {

constexpr double kPi = std::numbers::pi;

// Double-word arithmetic for the rare polishing escalation.
struct DD {
  double hi = 0, lo = 0;
};

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD quick(double hi, double lo) {
  const double s = hi + lo;
  return {s, lo - (s - hi)};
}

DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  return quick(s.hi, s.lo + a.lo + b.lo);
}
DD operator-(DD a) { return {-a.hi, -a.lo}; }
DD operator-(DD a, DD b) { return a + (-b); }
DD operator*(DD a, DD b) {
  const double p = a.hi * b.hi;
  const double e = std::fma(a.hi, b.hi, -p);
  return quick(p, e + a.hi * b.lo + a.lo * b.hi);
}
DD operator/(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = a - b * DD{q1, 0};
  const double q2 = r.hi / b.hi;
  return quick(q1, q2);
}

struct CDD {
  DD re, im;
};
CDD operator+(CDD a, CDD b) { return {a.re + b.re, a.im + b.im}; }
CDD operator-(CDD a, CDD b) { return {a.re - b.re, a.im - b.im}; }
CDD operator*(CDD a, CDD b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CDD operator/(CDD a, CDD b) {
  DD den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
CDD lift(Complex z) { return {{z.real(), 0}, {z.imag(), 0}}; }
CDD lift(double v) { return {{v, 0}, {0, 0}}; }
Complex lower(CDD z) { return {z.re.hi + z.re.lo, z.im.hi + z.im.lo}; }

struct MpComplex {
  mpf_class re, im;
  Complex lower() const { return {re.get_d(), im.get_d()}; }
};
MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {a.re + b.re, a.im + b.im}; }
MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {a.re - b.re, a.im - b.im}; }
MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
MpComplex operator/(const MpComplex& a, const MpComplex& b) {
  const mpf_class den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

// Horner over lowest-first complex coefficients.
template <typename T>
T horner(const std::vector<T>& c, T x) {
  T acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

// Aberth iteration for a monic polynomial given lowest-first.
std::vector<Complex> aberth(const std::vector<Complex>& c, double radius) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(radius, 2 * kPi * i / n + 0.4);
  const auto dc = derivative_coeffs(c);
  for (int iter = 0; iter < 1000; ++iter) {
    double largest = 0;
    for (int i = 0; i < n; ++i) {
      const Complex pv = horner(c, z[i]);
      const Complex dv = horner(dc, z[i]);
      if (pv == Complex(0)) continue;
      const Complex ratio = pv / dv;
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const Complex w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      largest = std::max(largest, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (largest < 1e-16) break;
  }
  for (auto& root : z)
    for (int it = 0; it < 3; ++it) {
      const Complex dv = horner(dc, root);
      if (dv == Complex(0)) break;
      root -= horner(c, root) / dv;
    }
  return z;
}

bool by_re_im(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

const char* region_name(Region r) {
  switch (r) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::Neither: return "Neither";
  }
  return "?";
}

std::vector<int> primitive_indices(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  std::vector<int> out;
  for (int j = 0; j < k; ++j)
    if (std::gcd(j, k) == 1) out.push_back(j);
  return out;
}

std::vector<ComplexSample> primitive_unit_roots(int k) {
  std::vector<ComplexSample> out;
  for (int j : primitive_indices(k)) {
    ComplexSample s;
    s.value = std::polar(1.0, 2 * kPi * j / k);
    Complex power = 1;
    for (int i = 0; i < k; ++i) power *= s.value;
    s.residual = std::abs(power - 1.0);
    out.push_back(s);
  }
  return out;
}

Complex g_eval(Complex t) { return ((t - 1.0) * t + 7.0) * t + 1.0; }

std::array<ComplexSample, 3> solve_g_equals(Complex z0) {
  const std::vector<Complex> coeffs{1.0 - z0, 7.0, -1.0, 1.0};
  double bound = 0;
  for (int i = 0; i < 3; ++i) bound = std::max(bound, std::abs(coeffs[i]));
  auto roots = aberth(coeffs, 1 + bound);
  std::sort(roots.begin(), roots.end(), by_re_im);
  std::array<ComplexSample, 3> out;
  for (int i = 0; i < 3; ++i) {
    ComplexSample& s = out[i];
    s.value = roots[i];
    s.residual = std::abs(g_eval(roots[i]) - z0);
    if (s.residual > kResidualTarget) {
      const std::vector<CDD> cd{lift(1.0 - z0), lift(7.0), lift(-1.0), lift(1.0)};
      const std::vector<CDD> dd{lift(7.0), lift(-2.0), lift(3.0)};
      CDD t = lift(roots[i]);
      for (int it = 0; it < 8; ++it) t = t - horner(cd, t) / horner(dd, t);
      s.value = lower(t);
      s.residual = std::abs(lower(horner(cd, t)));
      s.precision_bits = 106;
      if (s.residual > kResidualTarget)
        throw Error(ErrorCode::ConvergenceFailure, "cubic root residual above target");
    }
  }
  return out;
}

Region classify_point(Complex t) {
  if (std::abs(std::abs(g_eval(t)) - 1.0) > kRegionTol) return Region::Neither;
  return t.real() <= 0 ? Region::A : Region::B;
}

std::vector<GammaRoot> gamma_roots(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  std::vector<GammaRoot> out;
  const auto zetas = primitive_unit_roots(k);
  const auto idx = primitive_indices(k);
  for (std::size_t n = 0; n < zetas.size(); ++n) {
    for (const auto& s : solve_g_equals(zetas[n].value)) {
      GammaRoot r;
      r.k = k;
      r.j = idx[n];
      r.t = s;
      r.region = classify_point(s.value);
      r.c = (-s.value * s.value - 7.0) / 4.0;
      out.push_back(r);
    }
  }
  return out;
}

RegionCensus region_census(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "census needs k >= 2");
  RegionCensus c;
  c.k = k;
  c.min_re_A = c.min_re_B = std::numeric_limits<double>::infinity();
  c.max_re_A = c.max_re_B = -std::numeric_limits<double>::infinity();
  const auto roots = gamma_roots(k);
  for (std::size_t start = 0; start < roots.size(); start += 3) {
    int a = 0, b = 0;
    for (std::size_t i = start; i < start + 3; ++i) {
      const auto& r = roots[i];
      const double re = r.t.value.real();
      const double mod = std::abs(r.t.value);
      c.max_residual = std::max(c.max_residual, r.t.residual);
      if (r.region == Region::A) {
        ++a;
        c.max_abs_A = std::max(c.max_abs_A, mod);
        c.min_re_A = std::min(c.min_re_A, re);
        c.max_re_A = std::max(c.max_re_A, re);
      } else if (r.region == Region::B) {
        ++b;
        c.max_abs_B = std::max(c.max_abs_B, mod);
        c.min_re_B = std::min(c.min_re_B, re);
        c.max_re_B = std::max(c.max_re_B, re);
      } else {
        ++c.count_neither;
      }
    }
    c.count_A += a;
    c.count_B += b;
    if (a != 1 || b != 2) c.per_cubic_split = false;
  }
  return c;
}

double eval_G1(double r, double T) {
  const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3;
  return 8 * r3 * T * T * T + (28 * r4 - 4 * r2) * T * T + (-2 * r5 - 20 * r3 + 14 * r) * T +
         (r6 - 13 * r4 + 51 * r2);
}

double eval_G2(double x, double Y) {
  const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x3 * x3;
  return Y * Y * Y + (3 * x2 - 2 * x - 13) * Y * Y + (3 * x4 - 4 * x3 + 2 * x2 - 20 * x + 51) * Y +
         (x6 - 2 * x5 + 15 * x4 - 12 * x3 + 47 * x2 + 14 * x);
}

std::optional<std::pair<double, double>> crit_T(double r) {
  if (r <= 0) throw Error(ErrorCode::InvalidArgument, "crit_T needs r > 0");
  const double rad = 52 * std::pow(r, 4) + 16 * r * r - 20;
  if (rad < 0) return std::nullopt;
  const double s = std::sqrt(rad);
  return std::make_pair((-7 * r * r + 1 - s) / (6 * r), (-7 * r * r + 1 + s) / (6 * r));
}

std::optional<std::pair<double, double>> crit_Y(double x) {
  const double rad = -80 * x * x + 112 * x + 16;
  if (rad < 0) return std::nullopt;
  const double s = std::sqrt(rad);
  return std::make_pair((-3 * x * x + 2 * x + 13 - s) / 3, (-3 * x * x + 2 * x + 13 + s) / 3);
}

Complex ContourSpec::Piece::at(double s) const {
  if (!arc) return from + (to - from) * s;
  return std::polar(radius, theta0 + (theta1 - theta0) * s);
}

namespace {

ContourSpec::Piece segment(Complex a, Complex b) {
  ContourSpec::Piece p;
  p.from = a;
  p.to = b;
  return p;
}

ContourSpec::Piece arc(double radius, double t0, double t1) {
  ContourSpec::Piece p;
  p.arc = true;
  p.radius = radius;
  p.theta0 = t0;
  p.theta1 = t1;
  p.from = std::polar(radius, t0);
  p.to = std::polar(radius, t1);
  return p;
}

}  // namespace

ContourSpec ContourSpec::omega1(double r, double eps) {
  if (!(r > eps && eps > 0)) throw Error(ErrorCode::InvalidArgument, "need r > eps > 0");
  const Complex I(0, 1);
  ContourSpec c;
  c.pieces_ = {segment(-r * I, -eps * I), arc(eps, -kPi / 2, kPi / 2),
               segment(eps * I, r * I), arc(r, kPi / 2, 3 * kPi / 2)};
  return c;
}

ContourSpec ContourSpec::omega2(double r, double eps) {
  if (!(r > eps && eps > 0)) throw Error(ErrorCode::InvalidArgument, "need r > eps > 0");
  const Complex I(0, 1);
  ContourSpec c;
  c.pieces_ = {segment(r * I, eps * I), arc(eps, kPi / 2, -kPi / 2),
               segment(-eps * I, -r * I), arc(r, -kPi / 2, kPi / 2)};
  return c;
}

ContourSpec ContourSpec::omega3(double y0) {
  if (!(y0 > 0)) throw Error(ErrorCode::InvalidArgument, "need y0 > 0");
  const Complex a(kS3, -y0), b(kS4, -y0), c2(kS4, y0), d(kS3, y0);
  ContourSpec c;
  c.pieces_ = {segment(a, b), segment(b, c2), segment(c2, d), segment(d, a)};
  return c;
}

std::vector<Complex> ContourSpec::samples(int per_piece) const {
  std::vector<Complex> out;
  for (const auto& p : pieces_)
    for (int i = 0; i < per_piece; ++i) out.push_back(p.at(static_cast<double>(i) / per_piece));
  if (!out.empty()) out.push_back(out.front());
  return out;
}

namespace {

constexpr double kRootOnPathTol = 1e-12;
constexpr int kMaxDepth = 40;

Complex shifted(Complex z, Complex z0) {
  const Complex v = g_eval(z) - z0;
  if (std::abs(v) < kRootOnPathTol)
    throw Error(ErrorCode::RootOnPath, "g(z) - z0 vanishes on the contour");
  return v;
}

double phase_change(const ContourSpec::Piece& piece, Complex z0, double s0, double s1,
                    Complex f0, Complex f1, int depth) {
  const double d = std::arg(f1 / f0);
  if (std::abs(d) < kPi / 2) return d;
  if (depth >= kMaxDepth) throw Error(ErrorCode::PathTooCoarse, "phase refinement depth exceeded");
  const double sm = 0.5 * (s0 + s1);
  const Complex fm = shifted(piece.at(sm), z0);
  return phase_change(piece, z0, s0, sm, f0, fm, depth + 1) +
         phase_change(piece, z0, sm, s1, fm, f1, depth + 1);
}

}  // namespace

int winding_number(const ContourSpec& contour, Complex z0) {
  constexpr int kInitial = 256;
  double total = 0;
  for (const auto& piece : contour.pieces()) {
    Complex prev = shifted(piece.at(0), z0);
    for (int i = 1; i <= kInitial; ++i) {
      const double s0 = static_cast<double>(i - 1) / kInitial;
      const double s1 = static_cast<double>(i) / kInitial;
      const Complex next = shifted(piece.at(s1), z0);
      total += phase_change(piece, z0, s0, s1, prev, next, 0);
      prev = next;
    }
  }
  const double raw = total / (2 * kPi);
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) > 0.1)
    throw Error(ErrorCode::PathTooCoarse, "winding number not near an integer");
  return static_cast<int>(nearest);
}

WindingReport winding_integrals(Complex z0, double R, double eps, double y0) {
  WindingReport w;
  w.z0 = z0;
  w.I1 = winding_number(ContourSpec::omega1(kS1, eps), z0);
  w.I2 = winding_number(ContourSpec::omega2(kS2, eps), z0);
  w.I3 = winding_number(ContourSpec::omega1(R, eps), z0) - w.I1;
  w.I4 = winding_number(ContourSpec::omega2(R, eps), z0) - w.I2;
  w.I5 = winding_number(ContourSpec::omega3(y0), z0);
  return w;
}

std::vector<PositivityCheck> sampled_positivity(double R, double eps, int samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
  std::vector<PositivityCheck> out;
  auto scan = [&](std::string name, double lo, double hi, auto&& fn) {
    PositivityCheck c{std::move(name), samples, std::numeric_limits<double>::infinity(), false};
    for (int i = 0; i < samples; ++i)
      c.min_value = std::min(c.min_value, fn(lo + (hi - lo) * i / (samples - 1)));
    c.ok = c.min_value > 0;
    out.push_back(std::move(c));
  };
  scan("S1", R / samples, R, [](double r) { return eval_G1(r, 0); });
  scan("S2", -1, 1, [&](double t) { return eval_G1(R, t); });
  scan("S3", -1, 0, [](double t) { return eval_G1(kS1, t); });
  scan("S4", 0, 1, [](double t) { return eval_G1(kS2, t); });
  scan("S5", 0, 1, [&](double t) { return eval_G1(eps, t); });
  scan("S6", 0, 100, [](double y) { return eval_G2(kS3, y); });
  scan("S7", 0, 100, [](double y) { return eval_G2(kS4, y); });
  return out;
}

namespace {

// Sign of a + b sqrt(2).
int sign_sqrt2(const Integer& a, const Integer& b) {
  const int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  const int cmp = sgn(Integer(a * a - 2 * b * b));
  return sa > 0 ? cmp : -cmp;
}

int sign_sqrt2(long long a, long long b) {
  if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
  if (a <= 0 && b <= 0) return -1;
  const __int128 diff = static_cast<__int128>(a) * a - 2 * static_cast<__int128>(b) * b;
  const int cmp = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
  return a > 0 ? cmp : -cmp;
}

// Sign of p(s sqrt 2), s = +-1.
int sign_at(const IntegerPolynomial& p, int s) {
  Integer a = 0, b = 0, pow2 = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    Integer term = p.coeff(i) * pow2;
    if (s < 0 && (i % 2)) term = -term;
    if (i % 2 == 0) {
      a += term;
    } else {
      b += term;
      pow2 *= 2;
    }
  }
  return sign_sqrt2(a, b);
}

IntegerPolynomial positive_primitive(IntegerPolynomial p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    std::vector<Integer> cs = p.coeffs();
    for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    p = IntegerPolynomial(cs, p.var());
  }
  return p;
}

// Negated pseudo-remainder scaled by a positive factor.
IntegerPolynomial sturm_next(IntegerPolynomial a, const IntegerPolynomial& b) {
  const Integer lb = b.leading();
  int steps = 0;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    a = a * lb - IntegerPolynomial::monomial(a.leading(), a.degree() - b.degree(), a.var()) * b;
    ++steps;
  }
  if (lb < 0 && steps % 2) a = -a;
  return positive_primitive(-a);
}

int variations(const std::vector<IntegerPolynomial>& seq, int s) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    const int v = sign_at(p, s);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Distinct real roots of a squarefree p in (-sqrt 2, sqrt 2), p(+-sqrt 2) != 0.
int sturm_count(const IntegerPolynomial& p) {
  std::vector<IntegerPolynomial> seq{p, derivative(p)};
  while (!seq.back().is_zero() && seq.back().degree() > 0)
    seq.push_back(sturm_next(seq[seq.size() - 2], seq.back()));
  if (seq.back().is_zero()) seq.pop_back();
  return variations(seq, -1) - variations(seq, 1);
}

// Necessary sign pattern of every derivative at +-sqrt 2 for a monic
// polynomial with all roots in the open interval; coefficients lowest first.
bool derivative_signs_ok(const std::vector<long long>& a, int d) {
  static const long long fall[7][7] = {
      {1, 1, 1, 1, 1, 1, 1},      {0, 1, 2, 3, 4, 5, 6},       {0, 0, 2, 6, 12, 20, 30},
      {0, 0, 0, 6, 24, 60, 120},  {0, 0, 0, 0, 24, 120, 360},  {0, 0, 0, 0, 0, 120, 720},
      {0, 0, 0, 0, 0, 0, 720}};
  for (int j = 0; j < d; ++j) {
    long long ae = 0, bo = 0;  // value at +sqrt2 is ae + bo sqrt2; at -sqrt2 it is ae - bo
    for (int i = j; i <= d; ++i) {
      const int e = i - j;
      const long long coef = a[i] * fall[j][i];
      if (e % 2 == 0)
        ae += coef << (e / 2);
      else
        bo += coef << (e / 2);
    }
    if (sign_sqrt2(ae, bo) <= 0) return false;
    const int want = ((d - j) % 2) ? -1 : 1;
    if (sign_sqrt2(ae, -bo) != want) return false;
  }
  return true;
}

// Power sums of the roots must fit |root| < sqrt 2, and every 2x2 principal
// minor of the Hankel matrix of power sums is nonnegative for real roots.
bool power_sums_ok(const std::vector<long long>& a, int d) {
  long long e[8] = {1};
  for (int i = 1; i <= d; ++i) e[i] = (i % 2 ? -1 : 1) * a[d - i];
  __int128 ps[16] = {d};
  for (int k = 1; k <= 2 * d - 2; ++k) {
    __int128 acc = 0;
    for (int i = 1; i <= std::min(k - 1, d); ++i) acc += (i % 2 ? 1 : -1) * e[i] * ps[k - i];
    if (k <= d) acc += (k % 2 ? 1 : -1) * static_cast<__int128>(k) * e[k];
    ps[k] = acc;
  }
  for (int m = 1; 2 * m <= 2 * d - 2; ++m)
    if (ps[2 * m] < 0 || ps[2 * m] >= static_cast<__int128>(d) << m) return false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (ps[2 * i] * ps[2 * j] < ps[i + j] * ps[i + j]) return false;
  return true;
}

}  // namespace

std::vector<TotallyRealDegree> totally_real_enumerate(int d_max) {
  if (d_max < 1 || d_max > 6)
    throw Error(ErrorCode::InvalidArgument, "totally real enumeration supports 1 <= d <= 6");
  std::vector<TotallyRealDegree> report;
  for (int d = 1; d <= d_max; ++d) {
    TotallyRealDegree rep;
    rep.degree = d;
    // bound[i] on the coefficient of t^{d-i}
    std::vector<long long> bound(d + 1);
    for (int i = 1; i <= d; ++i) {
      long long binom = 1;
      for (int q = 0; q < i; ++q) binom = binom * (d - q) / (q + 1);
      bound[i] = static_cast<long long>(std::floor(binom * std::pow(2.0, i / 2.0) + 1e-9));
    }
    std::vector<long long> e(d + 1);
    for (int i = 1; i <= d; ++i) e[i] = -bound[i];
    std::vector<long long> a(d + 1);
    for (;;) {
      ++rep.candidates;
      for (int i = 0; i <= d; ++i) a[d - i] = i == 0 ? 1 : e[i];
      if (power_sums_ok(a, d) && derivative_signs_ok(a, d)) {
        std::vector<Integer> cs;
        for (auto v : a) cs.emplace_back(static_cast<long>(v));
        IntegerPolynomial p(cs, "t");
        const auto g = gcd(p, derivative(p));
        const auto q = g.is_constant() ? p : exact_divide(p, g);
        if (sturm_count(q) == q.degree()) {
          ++rep.qualifying;
          IntegerPolynomial rest = p;
          for (long root : {0L, 1L, -1L}) {
            const auto lin = IntegerPolynomial::from_ints({-root, 1}, "t");
            while (rest.degree() >= 1 && rest(Integer(root)) == 0) rest = exact_divide(rest, lin);
          }
          if (rest.degree() >= 1) {
            rep.roots_trivial = false;
            rep.exceptions.push_back(p);
          }
        }
      }
      int pos = d;
      while (pos >= 1 && e[pos] == bound[pos]) {
        e[pos] = -bound[pos];
        --pos;
      }
      if (pos < 1) break;
      ++e[pos];
    }
    report.push_back(std::move(rep));
  }
  return report;
}

std::vector<ParabolicPoint> parabolic_parameters_period3(int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be positive");
  std::vector<ParabolicPoint> out{{1, Complex(-1.75, 0)}};
  for (int k = 2; k <= k_max; ++k)
    for (const auto& r : gamma_roots(k)) out.push_back({k, r.c});
  return out;
}

std::vector<Complex> polynomial_roots(const IntegerPolynomial& p) {
  if (p.degree() < 1) return {};
  const double lead = p.leading().get_d();
  std::vector<Complex> c;
  for (const auto& v : p.coeffs()) c.emplace_back(v.get_d() / lead, 0.0);
  c.back() = 1.0;
  // Fujiwara's bound keeps the starting points where z^n stays finite.
  const int deg = p.degree();
  double fujiwara = 0;
  for (int i = 1; i <= deg; ++i) {
    double term = std::pow(std::abs(c[deg - i]), 1.0 / i);
    if (i == deg) term = std::pow(std::abs(c[0]) / 2, 1.0 / deg);
    fujiwara = std::max(fujiwara, term);
  }
  auto roots = aberth(c, 2 * fujiwara + 1e-3);

  // The double-precision start is only a guide once coefficients exceed what
  // doubles hold exactly; refine simultaneously in GMP floats.
  std::size_t bits = 0;
  for (const auto& v : p.coeffs()) bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
  const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits + 160);
  std::vector<MpComplex> cm, dm;
  for (const auto& v : p.coeffs()) cm.push_back({mpf_class(v, prec), mpf_class(0, prec)});
  for (std::size_t i = 1; i < cm.size(); ++i)
    dm.push_back({mpf_class(cm[i].re * static_cast<unsigned long>(i), prec), mpf_class(0, prec)});
  std::vector<MpComplex> z;
  for (auto r : roots) z.push_back({mpf_class(r.real(), prec), mpf_class(r.imag(), prec)});
  const std::size_t n = z.size();
  const MpComplex one{mpf_class(1, prec), mpf_class(0, prec)};
  for (int it = 0; it < 500; ++it) {
    double largest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const MpComplex pv = horner(cm, z[i]);
      if (sgn(pv.re) == 0 && sgn(pv.im) == 0) continue;
      const MpComplex ratio = pv / horner(dm, z[i]);
      MpComplex sum{mpf_class(0, prec), mpf_class(0, prec)};
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum = sum + one / (z[i] - z[j]);
      const MpComplex w = ratio / (one - ratio * sum);
      z[i] = z[i] - w;
      largest = std::max(largest, std::abs(w.lower()) / (1 + std::abs(z[i].lower())));
    }
    if (largest < 1e-30) break;
  }
  for (std::size_t i = 0; i < n; ++i) roots[i] = z[i].lower();
  return roots;
}

double parabolic_crosscheck(Tower& tower, int k) {
  std::vector<Complex> from_gamma;
  if (k == 1) {
    from_gamma.push_back(Complex(-1.75, 0));
  } else {
    for (const auto& r : gamma_roots(k)) from_gamma.push_back(r.c);
  }
  auto exact = polynomial_roots(tower.delta_factor(3 * k, 3).poly);
  for (auto& v : exact) v /= 4.0;
  if (exact.size() != from_gamma.size()) return std::numeric_limits<double>::infinity();
  for (const auto& v : exact)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::ConvergenceFailure, "root finder produced a non-finite value");
  // Greedy matching on globally sorted pair distances.
  struct Pair {
    double dist;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < from_gamma.size(); ++i)
    for (std::size_t j = 0; j < exact.size(); ++j)
      pairs.push_back({std::abs(from_gamma[i] - exact[j]), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.dist < b.dist; });
  std::vector<bool> used_i(from_gamma.size()), used_j(exact.size());
  double worst = 0;
  std::size_t matched = 0;
  for (const auto& pr : pairs) {
    if (used_i[pr.i] || used_j[pr.j]) continue;
    used_i[pr.i] = used_j[pr.j] = true;
    worst = std::max(worst, pr.dist);
    if (++matched == from_gamma.size()) break;
  }
  return worst;
}

MandelbrotResult mandelbrot_membership(Complex c, int max_iter, double escape_radius) {
  if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be positive");
  Complex z = 0;
  const double r2 = escape_radius * escape_radius;
  for (int i = 0; i < max_iter; ++i) {
    z = z * z + c;
    if (std::norm(z) > r2) return {false, i + 1};
  }
  return {true, max_iter};
}

bool matches_printed(double value, const std::string& printed) {
  const auto dot = printed.find('.');
  const int decimals = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  std::string digits = printed;
  if (dot != std::string::npos) digits.erase(dot, 1);
  const long long expect = std::stoll(digits);
  const double scaled = std::abs(value) * std::pow(10.0, decimals);
  const long long got = static_cast<long long>(std::floor(scaled));
  return (value < 0) == (printed.front() == '-') && got == std::llabs(expect);
}

std::vector<ConstantCheck> paper_constants_check() {
  std::vector<ConstantCheck> out;
  auto add = [&](std::string name, double value, std::string printed) {
    ConstantCheck c{std::move(name), value, std::move(printed), false};
    c.ok = matches_printed(c.value, c.printed);
    out.push_back(std::move(c));
  };
  const double tplus = crit_T(kS2)->second;
  const double y3 = crit_Y(kS3)->second;
  const double y4 = crit_Y(kS4)->second;
  const double l = -std::log10(kS1 * kS2);
  add("G1(s1,-1)=0.04330", eval_G1(kS1, -1), "0.04330");
  // The printed 1.2027 is |g|^2 = G1 + 1 at the critical point.
  add("G1(s2,T+(s2))+1=1.2027", eval_G1(kS2, tplus) + 1, "1.2027");
  add("G2(s3,Y+(s3))=0.1065", eval_G2(kS3, y3), "0.1065");
  add("G2(s3,0)=17.8465", eval_G2(kS3, 0), "17.8465");
  add("G2(s4,Y+(s4))=0.00023", eval_G2(kS4, y4), "0.00023");
  add("G2(s4,0)=27.436", eval_G2(kS4, 0), "27.436");
  add("-log10(s1*s2)=0.1213", l, "0.1213");
  add("(1-L/3)*log(2*s4)=0.2368", (1 - l / 3) * std::log(2 * kS4), "0.2368");
  add("log(golden)/2=0.2406", 0.5 * std::log((1 + std::sqrt(5.0)) / 2), "0.2406");
  return out;
}

}  // namespace paradelta
