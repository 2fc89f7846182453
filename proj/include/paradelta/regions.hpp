#ifndef PARADELTA_REGIONS_HPP
#define PARADELTA_REGIONS_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paradelta/dynatomic.hpp"

namespace paradelta {

using Complex = std::complex<double>;

inline constexpr double kS1 = 0.275;
inline constexpr double kS2 = 2.75;
inline constexpr double kS3 = 0.495;
inline constexpr double kS4 = 0.64;
inline constexpr double kRegionTol = 1e-8;
inline constexpr double kResidualTarget = 1e-12;
inline constexpr double kContourR = 10.0;
inline constexpr double kContourEps = 0.05;

struct ComplexSample {
  Complex value;
  int precision_bits = 53;
  double residual = 0.0;
};

enum class Region { A, B, Neither };
const char* region_name(Region r);

/// e^{2 pi i j / k} for 0 <= j < k with gcd(j, k) = 1, in increasing j.
std::vector<ComplexSample> primitive_unit_roots(int k);
/// Index j of each primitive root returned by primitive_unit_roots.
std::vector<int> primitive_indices(int k);

Complex g_eval(Complex t);

/// Roots of t^3 - t^2 + 7t + 1 - z0 ordered by (Re, Im). Residuals are
/// |g(t) - z0|; double-word polishing is used when plain doubles miss
/// kResidualTarget. Throws ConvergenceFailure if that also fails.
std::array<ComplexSample, 3> solve_g_equals(Complex z0);

/// Neither when ||g(t)| - 1| > kRegionTol, else A for Re t <= 0 and B otherwise.
Region classify_point(Complex t);

struct GammaRoot {
  int k = 0;
  int j = 0;  // index of the primitive root zeta = e^{2 pi i j / k}
  ComplexSample t;
  Region region = Region::Neither;
  Complex c;  // (-t^2 - 7) / 4
};

/// The 3 phi(k) roots of Gamma_k, grouped by j, each group ordered by (Re, Im).
std::vector<GammaRoot> gamma_roots(int k);

struct RegionCensus {
  int k = 0;
  int count_A = 0;
  int count_B = 0;
  int count_neither = 0;
  bool per_cubic_split = true;  // every cubic has one A root and two B roots
  double max_abs_A = 0, max_abs_B = 0;
  double min_re_A = 0, max_re_A = 0;
  double min_re_B = 0, max_re_B = 0;
  double max_residual = 0;
};

RegionCensus region_census(int k);

double eval_G1(double r, double T);
double eval_G2(double x, double Y);
/// Critical points (T-, T+) of G1(r, .), absent when not real.
std::optional<std::pair<double, double>> crit_T(double r);
/// Critical points (Y-, Y+) of G2(x, .), absent when not real.
std::optional<std::pair<double, double>> crit_Y(double x);

/// Closed piecewise path made of segments and circular arcs.
class ContourSpec {
 public:
  struct Piece {
    bool arc = false;
    Complex from, to;          // segment endpoints
    double radius = 0;         // arc centered at 0
    double theta0 = 0, theta1 = 0;
    Complex at(double s) const;
  };

  static ContourSpec omega1(double r, double eps);
  static ContourSpec omega2(double r, double eps);
  static ContourSpec omega3(double y0);

  const std::vector<Piece>& pieces() const { return pieces_; }
  /// n points per piece, first point repeated at the end.
  std::vector<Complex> samples(int per_piece) const;

 private:
  std::vector<Piece> pieces_;
};

/// Winding number of g(z) - z0 around 0 along the contour, by phase
/// unwrapping with adaptive bisection. Throws RootOnPath or PathTooCoarse.
int winding_number(const ContourSpec& contour, Complex z0);

struct WindingReport {
  Complex z0;
  int I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0;
};

/// I1..I4 from Omega1/Omega2 with radii s1, s2 and R, and I5 from Omega3(y0).
WindingReport winding_integrals(Complex z0, double R = kContourR, double eps = kContourEps,
                                double y0 = 10.0);

struct PositivityCheck {
  std::string name;
  int samples = 0;
  double min_value = 0;
  bool ok = false;
};

/// Minimum of G1 on S1..S5 (r in (0, R] at T = 0; r = R, s1, s2, eps on
/// their T ranges) and of G2 on x = s3, s4 for Y in [0, 100].
std::vector<PositivityCheck> sampled_positivity(double R = kContourR, double eps = kContourEps,
                                                int samples = 1000);

struct TotallyRealDegree {
  int degree = 0;
  long long candidates = 0;
  long long qualifying = 0;
  bool roots_trivial = true;  // every qualifying root lies in {-1, 0, 1}
  std::vector<IntegerPolynomial> exceptions;
};

/// Monic integer polynomials of degree d <= d_max with all roots real and in
/// (-sqrt 2, sqrt 2), enumerated within the symmetric-function bounds.
std::vector<TotallyRealDegree> totally_real_enumerate(int d_max);

struct ParabolicPoint {
  int k = 0;
  Complex c;
};

/// c = -7/4 for k = 1, then (-t^2 - 7) / 4 over the roots of Gamma_k.
std::vector<ParabolicPoint> parabolic_parameters_period3(int k_max);

/// Numeric roots of an integer polynomial (simultaneous iteration plus Newton).
std::vector<Complex> polynomial_roots(const IntegerPolynomial& p);

/// Largest distance between the c-values of Gamma_k and the roots of the
/// exact delta factor of (3k, 3) scaled by 1/4, after greedy nearest matching.
double parabolic_crosscheck(Tower& tower, int k);

struct MandelbrotResult {
  bool inside = false;
  int iterations = 0;
};

MandelbrotResult mandelbrot_membership(Complex c, int max_iter = 500, double escape_radius = 2.0);

struct ConstantCheck {
  std::string name;
  double value = 0;
  std::string printed;
  bool ok = false;
};

/// Agreement with a printed decimal means the value truncated to the printed
/// number of decimals reproduces it.
bool matches_printed(double value, const std::string& printed);

std::vector<ConstantCheck> paper_constants_check();

}  // namespace paradelta

#endif  // PARADELTA_REGIONS_HPP
