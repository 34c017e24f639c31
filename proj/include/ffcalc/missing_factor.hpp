#pragma once

#include "ffcalc/combinations.hpp"
#include "ffcalc/numeric.hpp"
#include "ffcalc/poly.hpp"
#include "ffcalc/stirling.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffcalc {

/// Coefficients of the falling factorial of order n with the factors in `missing`
/// removed; coefficients[j] multiplies x^j and there are n - l + 1 of them.
struct ThetaCoefficients {
  int n = 0;
  MissingFactorSet missing;
  std::vector<Rational> coefficients;
};

namespace detail {

inline void require_universe(int n, const MissingFactorSet& missing) {
  require_natural(n, "falling factorial order");
  if (missing.universe() != n) {
    throw std::domain_error("missing-factor set over universe " + std::to_string(missing.universe()) +
                            " used with order " + std::to_string(n));
  }
}

}  // namespace detail

/// prod over j in {0..n-1} \ missing of (x - j), obtained by dividing the full falling
/// factorial by each removed linear factor in turn.
inline Poly theta_poly(int n, const MissingFactorSet& missing) {
  detail::require_universe(n, missing);
  Poly p = falling_factorial_poly(n);
  for (int k : missing.members()) {
    auto [quotient, remainder] = divide_linear(p, k);
    if (remainder != 0) {
      throw std::logic_error("nonzero remainder dividing out a root of the falling factorial");
    }
    p = std::move(quotient);
  }
  return p;
}

/**
 * Coefficients of theta_poly(n, missing) without any polynomial division.
 *
 * With nothing removed the coefficients are s(n, j). Removing a single factor k uses the
 * closed form
 *     s(n, j+1)                          if k = 0
 *     0                                  if k > 0, j = 0
 *     -sum_{i=1..j} s(n, i) k^(i-j-1)    if k > 0, j > 0
 * and each further factor k_t folds the previous row as
 *     c_t(j) = sum_{i=0..n-j-t} c_{t-1}(i+j+1) k_t^i.
 */
inline ThetaCoefficients theta_coefficients(int n, const MissingFactorSet& missing) {
  detail::require_universe(n, missing);
  const auto members = missing.members();
  const auto l = static_cast<int>(members.size());

  std::vector<Rational> row;
  if (l == 0) {
    for (int j = 0; j <= n; ++j) {
      row.push_back(stirling1(n, j));
    }
    return {n, missing, std::move(row)};
  }

  const int k1 = members[0];
  row.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& c = row[static_cast<std::size_t>(j)];
    if (k1 == 0) {
      c = stirling1(n, j + 1);
    } else if (j > 0) {
      for (int i = 1; i <= j; ++i) {
        c -= stirling1(n, i) * power(Rational(k1), i - j - 1);
      }
    }
  }

  for (int t = 2; t <= l; ++t) {
    const Rational k = members[static_cast<std::size_t>(t - 1)];
    std::vector<Rational> next(static_cast<std::size_t>(n - t + 1));
    for (int j = 0; j <= n - t; ++j) {
      Rational acc = 0;
      Rational k_pow = 1;
      for (int i = 0; i <= n - j - t; ++i) {
        acc += row[static_cast<std::size_t>(i + j + 1)] * k_pow;
        k_pow *= k;
      }
      next[static_cast<std::size_t>(j)] = std::move(acc);
    }
    row = std::move(next);
  }
  return {n, missing, std::move(row)};
}

/// Coefficient of x^j in theta_poly(n, missing); zero for j > n - l.
inline Rational vartheta(int n, const MissingFactorSet& missing, int j) {
  require_natural(j, "coefficient index");
  const auto c = theta_coefficients(n, missing).coefficients;
  return static_cast<std::size_t>(j) < c.size() ? c[static_cast<std::size_t>(j)] : Rational(0);
}

/// Value of the falling factorial with missing factors at x. Total: removed factors are
/// never divided out, so x may coincide with a removed root.
inline Rational theta_eval(int n, const MissingFactorSet& missing, const Rational& x) {
  return evaluate(theta_poly(n, missing), x);
}

/// x^(n) / prod_{k in missing}(x - k), or nullopt when x is one of the removed roots.
inline std::optional<Rational> theta_eval_by_division(int n, const MissingFactorSet& missing, const Rational& x) {
  detail::require_universe(n, missing);
  Rational denominator_product = 1;
  for (int k : missing.members()) {
    if (x == k) {
      return std::nullopt;
    }
    denominator_product *= x - k;
  }
  return falling_power(x, n) / denominator_product;
}

}  // namespace ffcalc
