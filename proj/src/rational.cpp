#include "qwa/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "qwa/errors.hpp"

namespace qwa {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

u128 magnitude(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 x) {
  const u128 m = magnitude(x);
  const std::uint64_t parts[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, parts);
  if (x < 0) z = -z;
  return z;
}

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

} // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  assign(numerator, denominator);
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  assign(q);
}

void Rational::assign(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num <= kMax && num >= -kMax && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
  num_ = 0;
  den_ = 1;
}

void Rational::assign(const mpq_class& q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t()) &&
      mpz_cmp_si(q.get_num_mpz_t(), -std::numeric_limits<long>::max()) >= 0) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(q);
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

double Rational::to_double() const {
  return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) assign(static_cast<i128>(num_) + o.num_, den_);
    else assign(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
  } else {
    assign(to_mpq() + o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == o.den_) assign(static_cast<i128>(num_) - o.num_, den_);
    else assign(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_, static_cast<i128>(den_) * o.den_);
  } else {
    assign(to_mpq() - o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) assign(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  else assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) assign(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  else assign(to_mpq() / o.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) r.assign(mpq_class(-*big_));
  else r.assign(-static_cast<i128>(num_), den_);
  return r;
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

std::size_t Rational::hash() const {
  std::size_t n = 0, d = 0;
  if (big_) {
    // low limbs only; collisions are resolved by operator==
    n = mpz_get_ui(big_->get_num_mpz_t());
    d = mpz_get_ui(big_->get_den_mpz_t());
  } else {
    n = static_cast<std::size_t>(num_);
    d = static_cast<std::size_t>(den_);
  }
  return (n * 0x9E3779B97F4A7C15ULL) ^ (d + static_cast<std::size_t>(sign() + 1));
}

Rational pow(const Rational& base, std::size_t exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error([&] {
        std::string msg = "automaton violates " + std::to_string(violations.size()) + " invariant(s)";
        for (const auto& v : violations) msg += "\n  " + v.location + ": " + v.message;
        return msg;
      }()),
      violations_(std::move(violations)) {}

} // namespace qwa
