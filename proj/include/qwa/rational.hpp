#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qwa {

namespace detail {
__extension__ typedef __int128 i128;
}

/// Exact rational number in lowest terms.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger moves to a GMP rational. Every probability, weight and
/// value in the library is a Rational; there is no floating-point path in
/// the exact computations.
class Rational {
public:
  Rational() = default;
  Rational(long value) : num_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "k", "-k", "p/q" or "-p/q". Decimal notation is rejected.
  static Rational parse(std::string_view text);

  /// "k" for integers, "p/q" otherwise.
  std::string str() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;
  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

private:
  static int compare(const Rational& a, const Rational& b);
  void assign(const mpq_class& q); // normalizes back to inline form if it fits
  void assign(detail::i128 num, detail::i128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_; // set iff the value does not fit inline
};

Rational pow(const Rational& base, std::size_t exponent);
Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace qwa

template <>
struct std::hash<qwa::Rational> {
  std::size_t operator()(const qwa::Rational& r) const noexcept { return r.hash(); }
};
