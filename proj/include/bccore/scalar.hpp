#pragma once

// Exact scalar fields. Each field is a small value object that owns the
// arithmetic for its value_type; matrices never do arithmetic on their own.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bccore {

/// Raised when a scalar literal does not parse under the declared field.
class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

inline mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ScalarParseError("not an integer literal: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

/// "p" or "p/q" with q != 0; result is canonical.
inline mpq_class parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(s));
  const mpz_class num = parse_integer(s.substr(0, slash));
  const auto den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
    throw ScalarParseError("denominator must be unsigned: '" + std::string(s) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ScalarParseError("zero denominator: '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline std::string format_rational(const mpq_class& q) { return q.get_str(10); }

}  // namespace detail

/// The rationals, with arbitrary-precision numerator and denominator.
class RationalField {
 public:
  using value_type = mpq_class;
  static constexpr bool is_complex = false;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }

  value_type add(const value_type& x, const value_type& y) const { return x + y; }
  value_type sub(const value_type& x, const value_type& y) const { return x - y; }
  value_type mul(const value_type& x, const value_type& y) const { return x * y; }
  value_type neg(const value_type& x) const { return -x; }
  value_type inv(const value_type& x) const {
    if (x == 0) throw std::domain_error("division by zero");
    return 1 / x;
  }
  value_type conj(const value_type& x) const { return x; }
  bool is_zero(const value_type& x) const { return x == 0; }

  value_type parse(std::string_view s) const { return detail::parse_rational(s); }
  std::string format(const value_type& x) const { return detail::format_rational(x); }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const = default;
};

/// a + b i with a, b rational.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};

/// The field Q(i). Conjugation negates the imaginary part.
class GaussianRationalField {
 public:
  using value_type = GaussianRational;
  static constexpr bool is_complex = true;

  value_type zero() const { return {0, 0}; }
  value_type one() const { return {1, 0}; }
  value_type from_int(long v) const { return {v, 0}; }

  value_type add(const value_type& x, const value_type& y) const {
    return {x.re + y.re, x.im + y.im};
  }
  value_type sub(const value_type& x, const value_type& y) const {
    return {x.re - y.re, x.im - y.im};
  }
  value_type mul(const value_type& x, const value_type& y) const {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  value_type neg(const value_type& x) const { return {-x.re, -x.im}; }
  value_type inv(const value_type& x) const {
    const mpq_class norm = x.re * x.re + x.im * x.im;
    if (norm == 0) throw std::domain_error("division by zero");
    return {x.re / norm, -x.im / norm};
  }
  value_type conj(const value_type& x) const { return {x.re, -x.im}; }
  bool is_zero(const value_type& x) const { return x.re == 0 && x.im == 0; }

  /// Accepts "a", "bi", "a+bi", "a-bi"; a bare "i" / "-i" means unit coefficient.
  value_type parse(std::string_view s) const {
    if (s.empty()) throw ScalarParseError("empty gaussian rational");
    if (s.back() != 'i') return {detail::parse_rational(s), 0};
    s.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    const std::string_view real_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
    std::string_view imag_part = split == std::string_view::npos ? s : s.substr(split);
    mpq_class im;
    if (imag_part.empty() || imag_part == "+") {
      im = 1;
    } else if (imag_part == "-") {
      im = -1;
    } else {
      im = detail::parse_rational(imag_part);
    }
    const mpq_class re = real_part.empty() ? mpq_class(0) : detail::parse_rational(real_part);
    return {re, im};
  }

  std::string format(const value_type& x) const {
    if (x.im == 0) return detail::format_rational(x.re);
    std::string imag = detail::format_rational(abs(x.im)) + "i";
    if (x.re == 0) return (x.im < 0 ? "-" : "") + imag;
    return detail::format_rational(x.re) + (x.im < 0 ? "-" : "+") + imag;
  }
  std::string name() const { return "QI"; }

  bool operator==(const GaussianRationalField&) const = default;
};

/// Z/pZ for a prime p < 2^31, values held in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr bool is_complex = false;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
    if (p >= (1u << 31)) throw std::invalid_argument("characteristic too large");
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type x, value_type y) const { return static_cast<value_type>((std::uint64_t{x} + y) % p_); }
  value_type sub(value_type x, value_type y) const { return static_cast<value_type>((std::uint64_t{x} + p_ - y) % p_); }
  value_type mul(value_type x, value_type y) const { return static_cast<value_type>((std::uint64_t{x} * y) % p_); }
  value_type neg(value_type x) const { return x == 0 ? 0 : p_ - x; }
  value_type inv(value_type x) const {
    if (x == 0) throw std::domain_error("division by zero");
    // Fermat: x^(p-2)
    std::uint64_t result = 1, base = x;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
      if (e & 1u) result = result * base % p_;
      base = base * base % p_;
    }
    return static_cast<value_type>(result);
  }
  value_type conj(value_type x) const { return x; }
  bool is_zero(value_type x) const { return x == 0; }

  value_type parse(std::string_view s) const {
    const mpz_class v = detail::parse_integer(s);
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }
  std::string format(value_type x) const { return std::to_string(x); }
  std::string name() const { return "GF" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace bccore
