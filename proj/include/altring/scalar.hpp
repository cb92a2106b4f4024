#ifndef ALTRING_SCALAR_HPP
#define ALTRING_SCALAR_HPP

#include <altring/error.hpp>

#include <gmpxx.h>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace altring {

enum class FieldKind { rational, prime };

inline bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

/// Runtime descriptor of the coefficient field: Q or GF(p) with p prime.
struct Field {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;

  static Field rationals() { return {}; }

  static Field gf(std::uint64_t p) {
    if (p > 0x7fffffffULL)
      throw Error(Errc::not_prime, "modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime_number(p))
      throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    return {FieldKind::prime, static_cast<std::uint32_t>(p)};
  }

  bool finite() const { return kind == FieldKind::prime; }
  std::uint32_t characteristic() const { return finite() ? p : 0; }

  std::string to_string() const {
    return finite() ? "GF(" + std::to_string(p) + ")" : std::string("Q");
  }

  friend bool operator==(const Field&, const Field&) = default;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b))
    throw Error(Errc::field_mismatch, a.to_string() + " vs " + b.to_string());
}

namespace detail {

inline long long parse_integer(std::string_view s) {
  long long v = 0;
  auto first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw Error(Errc::syntax_error, "bad integer '" + std::string(s) + "'");
  return v;
}

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Element of Q, always stored in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(long n, long d = 1) : v_(n, d) {
    if (d == 0) throw Error(Errc::division_by_zero, "zero denominator");
    v_.canonicalize();
  }

  static Rational zero(const Field&) { return Rational(); }
  static Rational one(const Field&) { return Rational(1); }
  static Rational from_int(const Field&, long long n) { return Rational(static_cast<long>(n)); }

  /// Accepts "n", "-n" or "n/d".
  static Rational parse(const Field&, std::string_view s) {
    auto slash = s.find('/');
    auto num = s.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den) ||
        (!den.empty() && den.front() == '-'))
      throw Error(Errc::syntax_error, "bad rational '" + std::string(s) + "'");
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
    mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den));
    if (d == 0) throw Error(Errc::division_by_zero, "zero denominator in '" + std::string(s) + "'");
    return Rational(mpq_class(n, d));
  }

  Field field() const { return Field::rationals(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  const mpq_class& value() const { return v_; }

  std::string to_string() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of 0");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::division_by_zero, "division by 0");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

/// Residue modulo a prime p < 2^31, always reduced into [0, p).
/// A default-constructed ModP carries p = 0 and only serves as a placeholder.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t v, std::uint32_t p) : v_(p ? v % p : 0), p_(p) {}

  static ModP zero(const Field& f) { return ModP(0, f.p); }
  static ModP one(const Field& f) { return ModP(1, f.p); }
  static ModP from_int(const Field& f, long long n) {
    long long r = n % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    return ModP(static_cast<std::uint64_t>(r), f.p);
  }

  /// Accepts an integer (any sign, reduced mod p) or "n/d" with d invertible.
  static ModP parse(const Field& f, std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      if (!detail::is_integer_literal(s))
        throw Error(Errc::syntax_error, "bad residue '" + std::string(s) + "'");
      return from_int(f, detail::parse_integer(s));
    }
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
      throw Error(Errc::syntax_error, "bad residue '" + std::string(s) + "'");
    auto d = from_int(f, detail::parse_integer(den));
    if (d.is_zero()) throw Error(Errc::division_by_zero, "denominator vanishes mod p in '" + std::string(s) + "'");
    return from_int(f, detail::parse_integer(num)) / d;
  }

  Field field() const { return Field{FieldKind::prime, p_}; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint64_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  std::string to_string() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.to_string(); }

  ModP inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "inverse of 0 mod " + std::to_string(p_));
    // Extended Euclid on signed 64-bit values; p < 2^31 keeps this in range.
    std::int64_t a = static_cast<std::int64_t>(v_), m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m; a = m; m = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (x0 < 0) x0 += p_;
    return ModP(static_cast<std::uint64_t>(x0), p_);
  }

  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(const ModP& o) { check(o); v_ += o.v_; if (v_ >= p_) v_ -= p_; return *this; }
  ModP& operator-=(const ModP& o) { check(o); v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_; return *this; }
  ModP& operator*=(const ModP& o) { check(o); v_ = (v_ * o.v_) % p_; return *this; }
  ModP& operator/=(const ModP& o) { check(o); return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  void check(const ModP& o) const {
    if (o.p_ != p_)
      throw Error(Errc::field_mismatch, "GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
  }

  std::uint64_t v_ = 0;
  std::uint32_t p_ = 0;
};

template <class S>
concept FieldScalar = requires(const S a, const S b, const Field f, std::string_view s) {
  { S::zero(f) } -> std::same_as<S>;
  { S::one(f) } -> std::same_as<S>;
  { S::from_int(f, 1LL) } -> std::same_as<S>;
  { S::parse(f, s) } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<S>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<ModP>);

}  // namespace altring

#endif  // ALTRING_SCALAR_HPP
