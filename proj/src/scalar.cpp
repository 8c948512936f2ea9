#include "spinhecke/scalar.hpp"

#include <algorithm>
#include <utility>

namespace spinhecke {

// ---------------------------------------------------------------- QOmega

QOmega QOmega::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
  Rational n = norm();
  return {a_ / n, -b_ / n};
}

QOmega& QOmega::operator+=(const QOmega& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QOmega& QOmega::operator-=(const QOmega& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QOmega& QOmega::operator*=(const QOmega& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ - 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QOmega& QOmega::operator/=(const QOmega& o) { return *this *= o.inverse(); }

int QOmega::leading_sign() const {
  if (sgn(a_) != 0) return sgn(a_);
  return sgn(b_);
}

std::string QOmega::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string wpart;
  Rational mag = abs(b_);
  wpart = mag == 1 ? "w" : mag.get_str() + "*w";
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + wpart;
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + wpart;
}

// ----------------------------------------------------------------- UPoly

UPoly::UPoly(QOmega c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

UPoly UPoly::u_power(int k) {
  UPoly p;
  p.c_.assign(k + 1, QOmega());
  p.c_[k] = QOmega(1);
  return p;
}

bool UPoly::is_monomial() const { return term_count() == 1; }

int UPoly::low_order() const {
  for (int k = 0; k < static_cast<int>(c_.size()); ++k)
    if (!c_[k].is_zero()) return k;
  return 0;
}

int UPoly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(),
                                        [](const QOmega& q) { return !q.is_zero(); }));
}

const QOmega& UPoly::coeff(int k) const {
  static const QOmega zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[k];
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& l, const UPoly& r) {
  UPoly p;
  if (l.is_zero() || r.is_zero()) return p;
  p.c_.assign(l.c_.size() + r.c_.size() - 1, QOmega());
  for (size_t i = 0; i < l.c_.size(); ++i) {
    if (l.c_[i].is_zero()) continue;
    for (size_t j = 0; j < r.c_.size(); ++j) p.c_[i + j] += l.c_[i] * r.c_[j];
  }
  p.trim();
  return p;
}

UPoly UPoly::scaled(const QOmega& s) const {
  if (s.is_zero()) return {};
  UPoly r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

UPoly UPoly::shifted_down(int k) const {
  UPoly r;
  if (k >= static_cast<int>(c_.size())) return r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return scaled(lead().inverse());
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  quot = UPoly();
  rem = a;
  if (a.degree() < b.degree()) return;
  quot.c_.assign(a.degree() - b.degree() + 1, QOmega());
  QOmega inv_lead = b.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    QOmega f = rem.lead() * inv_lead;
    for (int k = 0; k <= b.degree(); ++k) rem.c_[k + shift] -= f * b.c_[k];
    quot.c_[shift] = f;
    rem.trim();
  }
  quot.trim();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QOmega UPoly::eval(const QOmega& at) const {
  QOmega acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  const bool multi = term_count() > 1;
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const QOmega& c = c_[k];
    if (c.is_zero()) continue;
    // Compound coefficients (a + b*w) keep their sign inside parentheses.
    const int sign = c.is_atomic() ? c.leading_sign() : 1;
    const QOmega mag = sign < 0 ? -c : c;
    std::string body;
    if (k == 0) {
      body = mag.to_string();
      if (!mag.is_atomic() && multi) body = "(" + body + ")";
    } else {
      if (!mag.is_one())
        body = mag.is_atomic() ? mag.to_string() + "*" : "(" + mag.to_string() + ")*";
      body += "u";
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (first) {
      out = (sign < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (sign < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = UPoly(QOmega(1));
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(den_.coeff(0).inverse());
      den_ = UPoly(QOmega(1));
    }
    return;
  }
  if (den_.is_monomial()) {
    int k = std::min(den_.degree(), num_.low_order());
    QOmega inv_lead = den_.lead().inverse();
    num_ = num_.shifted_down(k).scaled(inv_lead);
    den_ = UPoly::u_power(den_.degree() - k);
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  if (!g.is_one()) {
    UPoly q, r;
    UPoly::divmod(num_, g, q, r);
    num_ = std::move(q);
    UPoly::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  if (!den_.lead().is_one()) {
    QOmega inv_lead = den_.lead().inverse();
    num_ = num_.scaled(inv_lead);
    den_ = den_.scaled(inv_lead);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) {
    *this = Scalar();
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    if (o.num_.is_constant()) {
      num_ = num_.scaled(o.num_.coeff(0));
    } else {
      num_ = num_ * o.num_;
    }
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  return {den_, num_};
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

QOmega Scalar::eval(const QOmega& at) const {
  QOmega d = den_.eval(at);
  if (d.is_zero())
    throw PoleError("denominator " + den_.to_string() + " vanishes at u = " + at.to_string());
  return num_.eval(at) / d;
}

int Scalar::leading_sign() const {
  if (num_.is_zero()) return 0;
  return num_.lead().is_atomic() ? num_.lead().leading_sign() : 1;
}

bool Scalar::is_atomic() const { return to_string().find(' ') == std::string::npos; }

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1 || n.find(' ') != std::string::npos) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace spinhecke
