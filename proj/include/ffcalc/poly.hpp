#pragma once

#include "ffcalc/numeric.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffcalc {

/**
 * Dense univariate polynomial with exact rational coefficients.
 *
 * coefficients()[j] is the coefficient of x^j. The highest stored coefficient is
 * always nonzero; the zero polynomial stores nothing and has no degree.
 */
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

  /// x - root
  static Poly linear_factor(const Rational& root) { return Poly(std::vector<Rational>{-root, 1}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) {
      return std::nullopt;
    }
    return coeffs_.size() - 1;
  }

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^j; zero beyond the stored range.
  Rational coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }

  const Rational& leading() const {
    if (coeffs_.empty()) {
      throw std::domain_error("zero polynomial has no leading coefficient");
    }
    return coeffs_.back();
  }

  Poly& operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      coeffs_[j] += other.coeffs_[j];
    }
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      coeffs_[j] -= other.coeffs_[j];
    }
    trim();
    return *this;
  }

  Poly& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) {
      c *= scalar;
    }
    return *this;
  }

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  std::vector<Rational> coeffs_;
};

inline Poly multiply(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) {
    return {};
  }
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return Poly(std::move(out));
}

inline Poly operator*(const Poly& p, const Poly& q) { return multiply(p, q); }

/// x(x-1)...(x-n+1) expanded; the constant 1 for n = 0.
inline Poly falling_factorial_poly(int n) {
  require_natural(n, "falling factorial order");
  Poly result = Poly::constant(1);
  for (int j = 0; j < n; ++j) {
    result = multiply(result, Poly::linear_factor(j));
  }
  return result;
}

/// l-th formal derivative, taken as l successive first derivatives.
inline Poly differentiate(const Poly& p, int l) {
  require_natural(l, "derivative order");
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  for (int step = 0; step < l && !c.empty(); ++step) {
    for (std::size_t j = 1; j < c.size(); ++j) {
      c[j - 1] = c[j] * static_cast<long long>(j);
    }
    c.pop_back();
  }
  return Poly(std::move(c));
}

struct LinearDivision {
  Poly quotient;
  Rational remainder;
};

/// Synthetic division: p = quotient * (x - root) + remainder.
inline LinearDivision divide_linear(const Poly& p, const Rational& root) {
  if (p.is_zero()) {
    throw std::domain_error("cannot divide the zero polynomial");
  }
  const auto c = p.coefficients();
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t j = c.size(); j-- > 0;) {
    carry = carry * root + c[j];
    if (j > 0) {
      q[j - 1] = carry;
    }
  }
  return {Poly(std::move(q)), carry};
}

/// Horner evaluation.
inline Rational evaluate(const Poly& p, const Rational& x) {
  Rational acc = 0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

}  // namespace ffcalc
