#pragma once

// Exact coefficients: rational functions in the deformation parameter u over
// the quadratic field Q(w), w^2 = -2.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace spinhecke {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a + b*w with w*w = -2.
class QOmega {
 public:
  QOmega() = default;
  QOmega(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QOmega(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QOmega omega() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& omega_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return sgn(b_) == 0 && a_ == 1; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Field norm a^2 + 2 b^2; zero only for zero.
  Rational norm() const { return a_ * a_ + 2 * b_ * b_; }
  QOmega conjugate() const { return {a_, -b_}; }
  QOmega inverse() const;

  QOmega operator-() const { return {-a_, -b_}; }
  QOmega& operator+=(const QOmega& o);
  QOmega& operator-=(const QOmega& o);
  QOmega& operator*=(const QOmega& o);
  QOmega& operator/=(const QOmega& o);

  friend QOmega operator+(QOmega l, const QOmega& r) { return l += r; }
  friend QOmega operator-(QOmega l, const QOmega& r) { return l -= r; }
  friend QOmega operator*(QOmega l, const QOmega& r) { return l *= r; }
  friend QOmega operator/(QOmega l, const QOmega& r) { return l /= r; }
  friend bool operator==(const QOmega& l, const QOmega& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

  /// Sign of the first nonzero component (a, then b); used to pull minus
  /// signs out when rendering.
  int leading_sign() const;
  /// True when the rendering is a single factor ("3", "-1/2*w", "w").
  bool is_atomic() const { return sgn(a_) == 0 || sgn(b_) == 0; }

  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

/// Dense univariate polynomial in u with QOmega coefficients; coefficient k
/// belongs to u^k and the leading coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  UPoly(QOmega c);  // NOLINT(google-explicit-constructor)

  static UPoly u_power(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Single nonzero coefficient.
  bool is_monomial() const;
  /// Smallest k with nonzero coefficient; 0 for the zero polynomial.
  int low_order() const;
  int term_count() const;

  const QOmega& coeff(int k) const;
  const QOmega& lead() const { return c_.back(); }
  const std::vector<QOmega>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly l, const UPoly& r) { return l += r; }
  friend UPoly operator-(UPoly l, const UPoly& r) { return l -= r; }
  friend UPoly operator*(const UPoly& l, const UPoly& r);
  UPoly scaled(const QOmega& s) const;
  /// Divide by u^k; the low k coefficients must vanish.
  UPoly shifted_down(int k) const;
  UPoly monic() const;

  static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  QOmega eval(const QOmega& at) const;

  friend bool operator==(const UPoly& l, const UPoly& r) { return l.c_ == r.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<QOmega> c_;
};

/// Element of Q(w)(u) in lowest terms with a monic denominator.
class Scalar {
 public:
  Scalar() : den_(QOmega(1)) {}
  Scalar(long v) : num_(QOmega(v)), den_(QOmega(1)) {}  // NOLINT
  Scalar(QOmega v) : num_(std::move(v)), den_(QOmega(1)) {}  // NOLINT
  Scalar(Rational v) : num_(QOmega(std::move(v))), den_(QOmega(1)) {}  // NOLINT
  Scalar(UPoly num, UPoly den);

  static Scalar u() { return {UPoly::u_power(1), UPoly(QOmega(1))}; }
  static Scalar omega() { return Scalar(QOmega::omega()); }

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DivisionByZero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(int k) const;

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.num_ == r.num_ && l.den_ == r.den_;
  }

  /// Specialize u := at. Throws PoleError when the denominator vanishes.
  QOmega eval(const QOmega& at) const;

  /// Sign of the leading coefficient of the numerator.
  int leading_sign() const;
  /// Renders without top-level '+' or binary '-' (may start with '-').
  bool is_atomic() const;

  std::string to_string() const;

 private:
  void reduce();
  UPoly num_;
  UPoly den_;
};

}  // namespace spinhecke
