#include "gpavoid/series.hpp"

#include <stdexcept>
#include <utility>

namespace gpavoid {

Root3& Root3::operator+=(const Root3& o) {
  rat_ += o.rat_;
  rad_ += o.rad_;
  return *this;
}

Root3& Root3::operator-=(const Root3& o) {
  rat_ -= o.rat_;
  rad_ -= o.rad_;
  return *this;
}

Root3& Root3::operator*=(const Root3& o) {
  // (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s,  s = sqrt(3)
  const Rational a = rat_, b = rad_;
  rat_ = a * o.rat_ + 3 * b * o.rad_;
  rad_ = a * o.rad_ + b * o.rat_;
  return *this;
}

Root3& Root3::operator/=(const Root3& o) {
  // Multiply by the conjugate; the norm c^2 - 3d^2 vanishes only at 0
  // because sqrt(3) is irrational.
  const Rational norm = o.rat_ * o.rat_ - 3 * o.rad_ * o.rad_;
  if (norm == 0) throw std::domain_error("division by zero in Q(sqrt(3))");
  *this *= Root3(o.rat_ / norm, -o.rad_ / norm);
  return *this;
}

std::string Root3::str() const {
  std::string out = rat_.str();
  if (rad_ != 0) out += (rad_ > 0 ? "+" : "") + rad_.str() + "*sqrt(3)";
  return out;
}

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.assign(order + 1, Root3());
}

PowerSeries::PowerSeries(std::vector<Root3> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

const Root3& PowerSeries::coeff(int n) const {
  if (n < 0 || n > order())
    throw std::out_of_range("coefficient " + std::to_string(n) + " beyond truncation order " +
                            std::to_string(order()));
  return coeffs_[n];
}

void PowerSeries::set_coeff(int n, Root3 v) {
  if (n < 0 || n > order()) throw std::out_of_range("coefficient beyond truncation order");
  coeffs_[n] = std::move(v);
}

PowerSeries PowerSeries::constant(const Root3& v, int order) {
  PowerSeries s(order);
  s.coeffs_[0] = v;
  return s;
}

PowerSeries PowerSeries::monomial(const Root3& v, int power, int order) {
  if (power < 0) throw std::invalid_argument("monomial power must be non-negative");
  PowerSeries s(order);
  if (power <= order) s.coeffs_[power] = v;
  return s;
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > this->order())
    throw std::invalid_argument("cannot extend a series past its truncation order");
  std::vector<Root3> c(coeffs_.begin(), coeffs_.begin() + order + 1);
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (int n = 0; n <= order; ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (int n = 0; n <= order; ++n) out.set_coeff(n, a.coeff(n) - b.coeff(n));
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  PowerSeries out(order);
  for (int n = 0; n <= order; ++n) {
    Root3 acc;
    for (int i = 0; i <= n; ++i) acc += a.coeff(i) * b.coeff(n - i);
    out.set_coeff(n, acc);
  }
  return out;
}

PowerSeries scale(const PowerSeries& a, const Root3& v) {
  PowerSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n) * v);
  return out;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a.coeff(0).is_zero())
    throw std::domain_error("reciprocal of a series with zero constant term");
  const int order = a.order();
  PowerSeries out(order);
  const Root3 inv0 = Root3(1) / a.coeff(0);
  out.set_coeff(0, inv0);
  for (int n = 1; n <= order; ++n) {
    Root3 acc;
    for (int i = 1; i <= n; ++i) acc += a.coeff(i) * out.coeff(n - i);
    out.set_coeff(n, -(inv0 * acc));
  }
  return out;
}

PowerSeries derive(const PowerSeries& a) {
  if (a.order() < 1) throw std::invalid_argument("cannot differentiate an order-0 series");
  PowerSeries out(a.order() - 1);
  for (int n = 0; n < a.order(); ++n) out.set_coeff(n, a.coeff(n + 1) * Root3(n + 1));
  return out;
}

PowerSeries integrate(const PowerSeries& a) {
  PowerSeries out(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n)
    out.set_coeff(n + 1, a.coeff(n) / Root3(n + 1));
  return out;
}

bool equal_to_order(const PowerSeries& a, const PowerSeries& b, int order) {
  if (order > a.order() || order > b.order())
    throw std::invalid_argument("comparison order exceeds a truncation order");
  for (int n = 0; n <= order; ++n)
    if (!(a.coeff(n) == b.coeff(n))) return false;
  return true;
}

bool is_zero_to_order(const PowerSeries& a, int order) {
  if (order > a.order()) throw std::invalid_argument("order exceeds the truncation order");
  for (int n = 0; n <= order; ++n)
    if (!a.coeff(n).is_zero()) return false;
  return true;
}

// -----------------------------------------------------------------------

PowerSeries exp_ax(const Rational& a, int order) {
  PowerSeries out(order);
  Rational term = 1;  // a^n / n!
  out.set_coeff(0, Root3(term));
  for (int n = 1; n <= order; ++n) {
    term = term * a / n;
    out.set_coeff(n, Root3(term));
  }
  return out;
}

namespace {

PowerSeries ps_one(int order) { return PowerSeries::constant(Root3(1), order); }
PowerSeries ps_x(int order) { return PowerSeries::monomial(Root3(1), 1, order); }

// x^p / p!
PowerSeries monomial_over_factorial(int p, int order) {
  return PowerSeries::monomial(Root3(Rational(BigCount(1), factorial(p))), p, order);
}

PowerSeries gauss_series(int order) {
  // exp(-x^2/2) = sum (-1)^m x^(2m) / (2^m m!)
  PowerSeries out(order);
  Rational term = 1;
  for (int m = 0; 2 * m <= order; ++m) {
    if (m > 0) term = term / (-2 * m);
    out.set_coeff(2 * m, Root3(term));
  }
  return out;
}

PowerSeries cos_sqrt3_half(int order) {
  // cos(sqrt(3) x / 2) = sum (-1)^m (3/4)^m x^(2m) / (2m)!  - rational
  PowerSeries out(order);
  Rational term = 1;
  for (int m = 0; 2 * m <= order; ++m) {
    if (m > 0) term = term * Rational(-3, 4) / ((2 * m - 1) * 2 * m);
    out.set_coeff(2 * m, Root3(term));
  }
  return out;
}

PowerSeries sin_sqrt3_half(int order) {
  // sin(sqrt(3) x / 2) = sqrt(3) * sum (-1)^m (1/2)(3/4)^m x^(2m+1) / (2m+1)!
  PowerSeries out(order);
  Rational term(1, 2);
  for (int m = 0; 2 * m + 1 <= order; ++m) {
    if (m > 0) term = term * Rational(-3, 4) / (2 * m * (2 * m + 1));
    out.set_coeff(2 * m + 1, Root3(Rational(0), term));
  }
  return out;
}

PowerSeries iterated_integrate(PowerSeries s, int times) {
  for (int i = 0; i < times; ++i) s = integrate(s);
  return s;
}

}  // namespace

PowerSeries build_base(SeriesName name, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  switch (name) {
    case SeriesName::gauss:
      return gauss_series(order);
    case SeriesName::int_gauss:
      return integrate(gauss_series(order)).truncated(order);
    case SeriesName::erf:
      // sqrt(pi/2) * erf(x/sqrt(2)) has plain rational Taylor
      // coefficients and coincides termwise with int_gauss; it is kept as
      // its own catalog name so the error-function forms read naturally.
      return build_base(SeriesName::int_gauss, order);
    case SeriesName::inv_one_minus_int_gauss:
      return reciprocal(ps_one(order) - build_base(SeriesName::int_gauss, order));
    case SeriesName::exp_half:
      return exp_ax(Rational(1, 2), order);
    case SeriesName::cos_shift:
      // cos(a + pi/6) = cos(pi/6) cos a - sin(pi/6) sin a with a = sqrt(3)x/2;
      // no numerical pi ever enters.
      return scale(cos_sqrt3_half(order), Root3(Rational(0), Rational(1, 2))) -
             scale(sin_sqrt3_half(order), Root3(Rational(1, 2)));
    case SeriesName::sin_shift:
      return scale(sin_sqrt3_half(order), Root3(Rational(0), Rational(1, 2))) +
             scale(cos_sqrt3_half(order), Root3(Rational(1, 2)));
    case SeriesName::T_func:
      return (PowerSeries::monomial(Root3(Rational(-1, 2)), 2, order) +
              integrate(gauss_series(order) *
                        build_base(SeriesName::inv_one_minus_int_gauss, order)))
          .truncated(order);
  }
  throw std::invalid_argument("unknown series name");
}

SeriesName series_name_from_string(const std::string& s) {
  if (s == "gauss") return SeriesName::gauss;
  if (s == "int_gauss") return SeriesName::int_gauss;
  if (s == "inv_one_minus_int_gauss") return SeriesName::inv_one_minus_int_gauss;
  if (s == "exp_half") return SeriesName::exp_half;
  if (s == "cos_shift") return SeriesName::cos_shift;
  if (s == "sin_shift") return SeriesName::sin_shift;
  if (s == "erf") return SeriesName::erf;
  if (s == "T_func") return SeriesName::T_func;
  throw std::invalid_argument("unknown series name '" + s + "'");
}

std::string to_string(SeriesName name) {
  switch (name) {
    case SeriesName::gauss: return "gauss";
    case SeriesName::int_gauss: return "int_gauss";
    case SeriesName::inv_one_minus_int_gauss: return "inv_one_minus_int_gauss";
    case SeriesName::exp_half: return "exp_half";
    case SeriesName::cos_shift: return "cos_shift";
    case SeriesName::sin_shift: return "sin_shift";
    case SeriesName::erf: return "erf";
    case SeriesName::T_func: return "T_func";
  }
  return "?";
}

// -----------------------------------------------------------------------

namespace {

// Everything below is assembled at a padded working order so the nested
// integrals and products cannot eat into the requested order; the final
// series is truncated back.

// 1 / (1 - int_gauss): the unrestricted count for the gauss family.
PowerSeries family_gauss_unrestricted(int order) {
  return build_base(SeriesName::inv_one_minus_int_gauss, order);
}

// gauss * E1 - x - 1: avoid 132 and begin with an ascent. Also equal,
// through reverse-complement, to avoid-213-and-end-with-an-ascent.
PowerSeries family_gauss_begin12(int order) {
  return gauss_series(order) * family_gauss_unrestricted(order) - ps_x(order) - ps_one(order);
}

// (sqrt(3)/2) exp(x/2) / cos(sqrt(3)x/2 + pi/6): unrestricted avoid-123.
PowerSeries family_trig_unrestricted(int order) {
  return scale(build_base(SeriesName::exp_half, order) *
                   reciprocal(build_base(SeriesName::cos_shift, order)),
               Root3(Rational(0), Rational(1, 2)));
}

// (sqrt(3)/2) tan(sqrt(3)x/2 + pi/6) - x - 1/2: avoid 123, begin with a
// descent.
PowerSeries family_trig_begin21(int order) {
  const PowerSeries tan_shift = build_base(SeriesName::sin_shift, order) *
                                reciprocal(build_base(SeriesName::cos_shift, order));
  return scale(tan_shift, Root3(Rational(0), Rational(1, 2))) - ps_x(order) -
         PowerSeries::constant(Root3(Rational(1, 2)), order);
}

PowerSeries exp_T(int order) {
  // e^T = gauss / (1 - int_gauss): T' = D + 1 with D the end-with-ascent
  // count, and the integral in T telescopes into -log(1 - int_gauss).
  return gauss_series(order) * family_gauss_unrestricted(order);
}

PowerSeries table_series(int row, int k, int order) {
  switch (row) {
    case 1: {
      if (k == 1) return family_trig_unrestricted(order);
      // Splitting length >= 2 permutations by their first step would give
      // unrestricted minus descent-start; the closed form additionally
      // subtracts x + 1 so lengths 0 and 1 count zero.
      if (k == 2)
        return family_trig_unrestricted(order) - family_trig_begin21(order) - ps_x(order) -
               ps_one(order);
      return PowerSeries(order);  // an increasing k-prefix already contains 123
    }
    case 2: {
      if (k == 1) return family_trig_unrestricted(order);
      // The integrating factor exp(-t/2)*cos(sqrt(3)t/2 + pi/6) folds the
      // growth term (sqrt(3)/2)tan(..) + 1/2 into a sine at phase pi/3:
      // sin(a + pi/3) = (sqrt(3)/2) sin(a + pi/6) + (1/2) cos(a + pi/6).
      const PowerSeries sine_third =
          scale(build_base(SeriesName::sin_shift, order), Root3(Rational(0), Rational(1, 2))) +
          scale(build_base(SeriesName::cos_shift, order), Root3(Rational(1, 2)));
      const PowerSeries integrand = exp_ax(Rational(-1, 2), order) *
                                    PowerSeries::monomial(Root3(1), k - 1, order) * sine_third;
      return scale(build_base(SeriesName::exp_half, order) * integrate(integrand) *
                       reciprocal(build_base(SeriesName::cos_shift, order)),
                   Root3(Rational(BigCount(1), factorial(k - 1))));
    }
    case 3: {
      if (k == 1) return family_gauss_unrestricted(order);
      if (k == 2) return family_gauss_begin12(order);
      const PowerSeries one_minus_int = ps_one(order) - build_base(SeriesName::int_gauss, order);
      const PowerSeries integrand =
          gauss_series(order) - (ps_x(order) + ps_one(order)) * one_minus_int;
      return family_gauss_unrestricted(order) * iterated_integrate(integrand, k - 2);
    }
    case 4: {
      if (k == 1) return family_gauss_unrestricted(order);
      const PowerSeries integrand =
          PowerSeries::monomial(Root3(1), k - 1, order) * gauss_series(order);
      return scale(family_gauss_unrestricted(order) * integrate(integrand),
                   Root3(Rational(BigCount(1), factorial(k - 1))));
    }
    case 5: {
      if (k == 1) return family_gauss_unrestricted(order);
      const PowerSeries eT = exp_T(order);
      const PowerSeries inner = integrate(monomial_over_factorial(k - 2, order) * reciprocal(eT));
      return integrate(eT * inner * family_gauss_unrestricted(order)).truncated(order);
    }
    case 6: {
      if (k == 1) return family_gauss_unrestricted(order);
      const PowerSeries eT = exp_T(order);
      const PowerSeries emT = reciprocal(eT);
      const PowerSeries D = family_gauss_begin12(order);  // = eT - x - 1
      const PowerSeries A = family_gauss_unrestricted(order);
      // C_1 = D and C_m = e^T I^(m-1)[e^-T D]; the iterated integrals of
      // one shared integrand are peeled off level by level.
      std::vector<PowerSeries> C(k + 1, PowerSeries(order));
      C[1] = D;
      PowerSeries iter = emT * D;
      for (int m = 2; m <= k; ++m) {
        iter = integrate(iter).truncated(order);
        C[m] = eT * iter;
      }
      PowerSeries out =
          PowerSeries::monomial(Root3(-Rational(BigCount(1), factorial(k - 1))), k - 1, order);
      for (int j = 0; j <= k - 2; ++j) {
        PowerSeries term = C[k - j];
        if (j == k - 2) term = term + ps_one(order);
        out = out + iterated_integrate(term * A, j + 1).truncated(order);
      }
      return out;
    }
    default:
      throw std::invalid_argument("row must be 1..6");
  }
}

void assert_counting_egf(const PowerSeries& s, int row, int k) {
  BigCount fact = 1;
  for (int n = 0; n <= s.order(); ++n) {
    if (n > 0) fact *= n;
    const Root3& c = s.coeff(n);
    if (!c.is_rational())
      throw std::runtime_error("table series row " + std::to_string(row) + ", k=" +
                               std::to_string(k) + " has an irrational coefficient at n=" +
                               std::to_string(n));
    const Rational a = c.rat() * fact;
    if (boost::multiprecision::denominator(a) != 1 || a < 0)
      throw std::runtime_error("table series row " + std::to_string(row) + ", k=" +
                               std::to_string(k) + " has a non-counting value " + a.str() +
                               " at n=" + std::to_string(n));
  }
}

}  // namespace

PowerSeries egf_table(int row, int k, int order) {
  if (row < 1 || row > 6) throw std::invalid_argument("row must be 1..6");
  if (k < 1) throw std::domain_error("egf_table needs k >= 1");
  if (order < k) throw std::domain_error("egf_table needs order >= k");
  const int padded = order + k + 2;
  const PowerSeries out = table_series(row, k, padded).truncated(order);
  assert_counting_egf(out, row, k);
  return out;
}

PowerSeries egf_avoid213_begin_inc_end12(int k, int order) {
  if (k < 2) throw std::domain_error("the begin-increasing form needs k >= 2");
  const int padded = order + k + 2;
  const PowerSeries eT = exp_T(padded);
  const PowerSeries inner =
      integrate(monomial_over_factorial(k - 2, padded) * reciprocal(eT)).truncated(padded);
  return (eT * inner - monomial_over_factorial(k - 1, padded)).truncated(order);
}

PowerSeries egf_avoid213_begin_dec_end12(int k, int order) {
  if (k < 1) throw std::domain_error("k must be positive");
  const int padded = order + k + 2;
  const PowerSeries D = family_gauss_begin12(padded);
  if (k == 1) return D.truncated(order);
  const PowerSeries eT = exp_T(padded);
  PowerSeries iter = reciprocal(eT) * D;
  for (int m = 2; m <= k; ++m) iter = integrate(iter).truncated(padded);
  return (eT * iter).truncated(order);
}

Rational egf_coefficient(const PowerSeries& s, int n) {
  const Root3& c = s.coeff(n);  // range-checked there
  if (!c.is_rational())
    throw std::domain_error("coefficient at n=" + std::to_string(n) + " is irrational: " +
                            c.str());
  return c.rat() * Rational(factorial(n));
}

BigCount egf_count(const PowerSeries& s, int n) {
  const Rational a = egf_coefficient(s, n);
  if (boost::multiprecision::denominator(a) != 1 || a < 0)
    throw std::domain_error("EGF value at n=" + std::to_string(n) + " is not a count: " + a.str());
  return boost::multiprecision::numerator(a);
}

PowerSeries erf_form_decreasing_132(int k, int order) {
  if (k < 2) throw std::domain_error("the error-function forms need k >= 2");
  const int padded = order + 2;
  const PowerSeries inv_denom =
      reciprocal(ps_one(padded) - build_base(SeriesName::erf, padded));
  const PowerSeries g = gauss_series(padded);
  if (k % 2 == 0) {
    // (k/2-1)! 2^(k/2-1) / (k-1)! * (1 - gauss * sum x^(2i)/(2^i i!)) / (1 - erf-part)
    const int h = k / 2;
    PowerSeries partial(padded);
    for (int i = 0; i <= h - 1; ++i)
      partial.set_coeff(2 * i, Root3(Rational(BigCount(1), pow2(i) * factorial(i))));
    const Rational front(factorial(h - 1) * pow2(h - 1), factorial(k - 1));
    return scale(inv_denom * (ps_one(padded) - g * partial), Root3(front)).truncated(order);
  }
  // odd k: (1/(k-1)!!) * (-1 + (1 - gauss * sum x^(2i+1)/(2i+1)!!) / (1 - erf-part))
  PowerSeries partial(padded);
  for (int i = 0; 2 * i + 1 <= padded && i <= (k - 3) / 2; ++i)
    partial.set_coeff(2 * i + 1, Root3(Rational(BigCount(1), double_factorial(2 * i + 1))));
  const PowerSeries inner = inv_denom * (ps_one(padded) - g * partial) - ps_one(padded);
  return scale(inner, Root3(Rational(BigCount(1), double_factorial(k - 1)))).truncated(order);
}

bool erf_equivalence(int k, int order) {
  if (k < 2) throw std::domain_error("erf_equivalence needs k >= 2");
  return equal_to_order(erf_form_decreasing_132(k, order), egf_table(4, k, order), order);
}

}  // namespace gpavoid
