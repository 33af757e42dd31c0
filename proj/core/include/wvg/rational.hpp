#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wvg {

/**
 * Exact rational number backed by GMP.
 *
 * Always kept in canonical form: positive denominator, numerator and
 * denominator coprime, zero stored as 0/1. The textual form produced by
 * str() is always "p/q", including integers ("2/1") and zero ("0/1").
 */
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by intent

  template <std::integral I, std::integral J>
  Rational(I numerator, J denominator)
      : Rational(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator))) {}

  Rational(const mpz_class& numerator, const mpz_class& denominator) { set(numerator, denominator); }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "p/q", "p" and optional leading sign. Throws Error(Parse).
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  /// Canonical "p/q".
  std::string str() const;
  /// Decimal rendering with the given number of significant digits (display only).
  std::string decimal(int significant_digits = 20) const;
  double to_double() const { return value_.get_d(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  mpz_class floor() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void set(const mpz_class& numerator, const mpz_class& denominator);

  mpq_class value_{0};
};

using RationalVector = std::vector<Rational>;

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

Rational sum(std::span<const Rational> values);
/// Sum of |a_i - b_i|. Throws DimensionMismatch on length mismatch.
Rational l1_distance(std::span<const Rational> a, std::span<const Rational> b);
/// max |a_i - b_i| (0 for empty vectors).
Rational linf_distance(std::span<const Rational> a, std::span<const Rational> b);

std::vector<std::string> to_strings(std::span<const Rational> values);
RationalVector parse_rationals(std::span<const std::string> texts);

}  // namespace wvg
