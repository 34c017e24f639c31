#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ffcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Throws std::domain_error if an index that must be a natural number is negative.
inline void require_natural(long long value, const char* what) {
  if (value < 0) {
    throw std::domain_error(std::string(what) + " must be non-negative, got " + std::to_string(value));
  }
}

/// (-1)^e for any integer exponent.
constexpr int minus_one_pow(long long e) noexcept { return (e % 2 == 0) ? 1 : -1; }

/// Iverson bracket.
constexpr int iverson(bool condition) noexcept { return condition ? 1 : 0; }

inline Integer factorial(int n) {
  require_natural(n, "factorial argument");
  Integer result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

/// C(n, k); zero when k > n or k < 0 so that out-of-range summation terms vanish.
inline Integer binomial(int n, int k) {
  require_natural(n, "binomial n");
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// x(x-1)...(x-n+1); 1 for n = 0.
inline Rational falling_power(const Rational& x, int n) {
  require_natural(n, "falling power order");
  Rational result = 1;
  for (int j = 0; j < n; ++j) {
    result *= x - j;
  }
  return result;
}

inline Integer kronecker_delta(int n) {
  require_natural(n, "kronecker delta index");
  return n == 0 ? 1 : 0;
}

/// x^e for signed e. 0^0 = 1; 0 raised to a negative power is a domain error.
inline Rational power(const Rational& x, long long e) {
  if (e < 0) {
    if (x == 0) {
      throw std::domain_error("zero raised to a negative power");
    }
    return Rational(1) / power(x, -e);
  }
  Rational result = 1;
  Rational base = x;
  while (e > 0) {
    if (e & 1) {
      result *= base;
    }
    e >>= 1;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

/// num/den with the sign moved onto the numerator; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::domain_error("zero denominator");
  }
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

inline Rational absolute(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// "p/q", or bare "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += '/';
    out += denominator(x).str();
  }
  return out;
}

namespace detail {

inline Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p", "p/q" or a plain decimal such as "-0.75" or "1.39e-3".
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("malformed rational: empty string");
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = detail::parse_integer(text.substr(0, slash), text);
    const Integer den = detail::parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return make_rational(num, den);
  }
  std::string_view mantissa = text;
  long long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const Integer exp = detail::parse_integer(text.substr(e + 1), text);
    if (exp > 10000 || exp < -10000) {
      throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    }
    exponent = exp.convert_to<long long>();
    mantissa = text.substr(0, e);
  }
  std::string digits(mantissa);
  if (const auto dot = digits.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long long>(digits.size() - dot - 1);
    digits.erase(dot, 1);
    if (digits.empty() || digits == "-" || digits == "+") {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
  }
  return Rational(detail::parse_integer(digits, text)) * power(Rational(10), exponent);
}

/// Decimal rendering with `significant` significant figures, rounding half away from zero.
///
/// Integers print bare. Other values print in fixed notation when the leading digit's
/// decimal exponent e satisfies -1 <= e < significant, otherwise as "d.dde-N".
inline std::string to_decimal(const Rational& x, int significant = 3) {
  if (significant < 1) {
    throw std::domain_error("significant figures must be positive");
  }
  if (is_integer(x)) {
    return numerator(x).str();
  }
  const Rational magnitude = absolute(x);
  long long e = static_cast<long long>(numerator(magnitude).str().size()) -
                static_cast<long long>(denominator(magnitude).str().size());
  while (power(Rational(10), e) > magnitude) {
    --e;
  }
  while (power(Rational(10), e + 1) <= magnitude) {
    ++e;
  }
  const Rational scaled = magnitude * power(Rational(10), significant - 1 - e);
  Integer q = numerator(scaled) / denominator(scaled);
  if (2 * (numerator(scaled) - q * denominator(scaled)) >= denominator(scaled)) {
    ++q;
  }
  std::string digits = q.str();
  if (static_cast<int>(digits.size()) > significant) {
    digits.pop_back();
    ++e;
  }

  std::string out = x < 0 ? "-" : "";
  if (e >= -1 && e < significant) {
    if (e == -1) {
      out += "0." + digits;
    } else {
      const auto int_len = static_cast<std::size_t>(e + 1);
      out += digits.substr(0, int_len);
      if (int_len < digits.size()) {
        out += "." + digits.substr(int_len);
      }
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += "." + digits.substr(1);
    }
    out += "e" + std::to_string(e);
  }
  return out;
}

}  // namespace ffcalc
