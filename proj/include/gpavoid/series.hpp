#pragma once

#include <string>
#include <vector>

#include "gpavoid/numeric.hpp"

namespace gpavoid {

// An element of the field Q(sqrt(3)): the value rat + rad*sqrt(3) with
// exact rational parts. Rational numbers embed with rad = 0.
class Root3 {
 public:
  Root3() = default;
  Root3(int v) : rat_(v) {}                       // NOLINT: implicit by design
  Root3(const Rational& a) : rat_(a) {}           // NOLINT
  Root3(Rational a, Rational b) : rat_(std::move(a)), rad_(std::move(b)) {}

  static Root3 sqrt3() { return Root3(Rational(0), Rational(1)); }

  const Rational& rat() const { return rat_; }
  const Rational& rad() const { return rad_; }
  bool is_rational() const { return rad_ == 0; }
  bool is_zero() const { return rat_ == 0 && rad_ == 0; }

  Root3 operator-() const { return Root3(-rat_, -rad_); }
  Root3& operator+=(const Root3& o);
  Root3& operator-=(const Root3& o);
  Root3& operator*=(const Root3& o);
  Root3& operator/=(const Root3& o);  // throws std::domain_error on /0

  friend Root3 operator+(Root3 a, const Root3& b) { return a += b; }
  friend Root3 operator-(Root3 a, const Root3& b) { return a -= b; }
  friend Root3 operator*(Root3 a, const Root3& b) { return a *= b; }
  friend Root3 operator/(Root3 a, const Root3& b) { return a /= b; }
  bool operator==(const Root3&) const = default;

  std::string str() const;

 private:
  Rational rat_ = 0;
  Rational rad_ = 0;
};

// A truncated formal power series sum c_n x^n with exact Q(sqrt(3))
// coefficients, exact up to its order and silent beyond it. Under the
// EGF reading, the count at n is a_n = n! * c_n.
class PowerSeries {
 public:
  explicit PowerSeries(int order);  // zero series
  explicit PowerSeries(std::vector<Root3> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Root3& coeff(int n) const;
  void set_coeff(int n, Root3 v);

  static PowerSeries constant(const Root3& v, int order);
  // v * x^power, truncated to `order`.
  static PowerSeries monomial(const Root3& v, int power, int order);

  PowerSeries truncated(int order) const;  // order must not exceed order()

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Root3> coeffs_;
};

// Exact arithmetic to the common (minimum) truncation order.
PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);  // Cauchy product
PowerSeries scale(const PowerSeries& a, const Root3& v);

// 1/a; requires a nonzero constant term, else throws std::domain_error.
PowerSeries reciprocal(const PowerSeries& a);

// Termwise derivative; the result's order drops by one.
PowerSeries derive(const PowerSeries& a);

// The definite primitive vanishing at 0; the result's order grows by one.
PowerSeries integrate(const PowerSeries& a);

bool equal_to_order(const PowerSeries& a, const PowerSeries& b, int order);
bool is_zero_to_order(const PowerSeries& a, int order);

// The fixed base catalog. Every entry is exact and pi-free:
//   gauss                     exp(-x^2/2)
//   int_gauss                 integral_0^x exp(-t^2/2) dt
//   inv_one_minus_int_gauss   1 / (1 - int_gauss)
//   exp_half                  exp(x/2)
//   cos_shift                 cos(sqrt(3)x/2 + pi/6), built by angle
//                             addition from cos(pi/6) = sqrt(3)/2
//   sin_shift                 sin(sqrt(3)x/2 + pi/6)
//   erf                       the combination sqrt(pi/2)*erf(x/sqrt(2)),
//                             whose Taylor coefficients are rational; it
//                             coincides termwise with int_gauss
//   T_func                    -x^2/2 + integral_0^x gauss/(1 - int_gauss)
enum class SeriesName {
  gauss,
  int_gauss,
  inv_one_minus_int_gauss,
  exp_half,
  cos_shift,
  sin_shift,
  erf,
  T_func,
};

SeriesName series_name_from_string(const std::string& s);
std::string to_string(SeriesName name);

PowerSeries build_base(SeriesName name, int order);

// exp(a*x) for rational a; handy for assembling the shifted-trig forms.
PowerSeries exp_ax(const Rational& a, int order);

// The closed-form EGF of a table row at parameter k (see counting.hpp for
// the row map). Every coefficient of the result is asserted rational with
// n! * c_n a non-negative integer; a violation throws std::runtime_error,
// it would falsify the transcription. Row 1 with k >= 3 is the zero
// series. Requires k >= 1 and order >= k.
PowerSeries egf_table(int row, int k, int order);

// Auxiliary closed forms for permutations avoiding contiguous 213 that
// also end with an ascent, with the stated beginning; these feed the row
// 5/6 assemblies and the differential-equation residual checks.
PowerSeries egf_avoid213_begin_inc_end12(int k, int order);  // k >= 2
PowerSeries egf_avoid213_begin_dec_end12(int k, int order);  // k >= 1; k = 1 drops the begin constraint

// a_n = n! * c_n as an exact rational. Throws on n beyond the truncation
// order or an irrational coefficient.
Rational egf_coefficient(const PowerSeries& s, int n);

// Like egf_coefficient but also insists the value is a non-negative
// integer, which every counting EGF must produce.
BigCount egf_count(const PowerSeries& s, int n);

// Builds the error-function closed expression for the row 4 EGF (avoid
// 132, begin with a decreasing run of length k): the even branch uses
// (k/2-1)! 2^(k/2-1) and the partial sum of x^(2i)/(2^i i!), the odd
// branch double factorials; both are assembled radical-free. Exposed for
// tests.
PowerSeries erf_form_decreasing_132(int k, int order);

// True iff the erf-form expression agrees coefficientwise with
// egf_table(4, k, order). Requires k >= 2.
bool erf_equivalence(int k, int order);

}  // namespace gpavoid
