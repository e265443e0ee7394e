#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "romdom/alpha.hpp"

namespace romdom {

// Exact element r + c*alpha of the field Q + Q*alpha. Arithmetic is purely
// symbolic; ordering needs the AlphaSpec.
class QAlpha {
 public:
  QAlpha() = default;
  QAlpha(const mpq_class& rational) : r_(rational) {}  // NOLINT(implicit)
  QAlpha(long rational) : r_(rational) {}              // NOLINT(implicit)
  QAlpha(const mpq_class& rational, const mpq_class& alpha_coeff)
      : r_(rational), c_(alpha_coeff) {}

  const mpq_class& rational() const noexcept { return r_; }
  const mpq_class& alpha_coeff() const noexcept { return c_; }
  bool is_rational() const { return c_ == 0; }
  bool is_zero() const { return r_ == 0 && c_ == 0; }

  QAlpha& operator+=(const QAlpha& o) {
    r_ += o.r_;
    c_ += o.c_;
    return *this;
  }
  QAlpha& operator-=(const QAlpha& o) {
    r_ -= o.r_;
    c_ -= o.c_;
    return *this;
  }
  QAlpha& operator*=(const mpq_class& k) {
    r_ *= k;
    c_ *= k;
    return *this;
  }

  friend QAlpha operator+(QAlpha a, const QAlpha& b) { return a += b; }
  friend QAlpha operator-(QAlpha a, const QAlpha& b) { return a -= b; }
  friend QAlpha operator-(const QAlpha& a) { return QAlpha(-a.r_, -a.c_); }
  friend QAlpha operator*(const mpq_class& k, QAlpha a) { return a *= k; }
  friend QAlpha operator*(QAlpha a, const mpq_class& k) { return a *= k; }

  // Symbolic equality; sound as a real-number equality when alpha is
  // irrational.
  friend bool operator==(const QAlpha& a, const QAlpha& b) {
    return a.r_ == b.r_ && a.c_ == b.c_;
  }

  int sign(const AlphaSpec& alpha) const { return alpha.sign(r_, c_); }
  double approx(const AlphaSpec& alpha) const {
    return r_.get_d() + c_.get_d() * alpha.approx();
  }
  std::string decimal(const AlphaSpec& alpha, int digits = 12) const {
    return alpha.decimal(r_, c_, digits);
  }

  // "p/q" for rationals (always with a denominator), otherwise "p/q+ka" or
  // "p/q-ka"; a non-integral alpha coefficient renders as "+k/m a".
  std::string to_string() const;
  // Inverse of to_string(); also accepts integers without a denominator.
  static QAlpha parse(std::string_view text);

 private:
  mpq_class r_;
  mpq_class c_;
};

// Three-way comparison certified through alpha.sign(); 0 means equal.
inline int compare(const QAlpha& a, const QAlpha& b, const AlphaSpec& alpha) {
  return (a - b).sign(alpha);
}
inline bool less_equal(const QAlpha& a, const QAlpha& b, const AlphaSpec& alpha) {
  return compare(a, b, alpha) <= 0;
}
inline bool less(const QAlpha& a, const QAlpha& b, const AlphaSpec& alpha) {
  return compare(a, b, alpha) < 0;
}

// Renders a rational as "p/q", keeping the denominator for integers.
std::string rational_string(const mpq_class& x);

}  // namespace romdom
