#pragma once

#include "ffcalc/combinations.hpp"
#include "ffcalc/harmonic.hpp"
#include "ffcalc/missing_factor.hpp"
#include "ffcalc/numeric.hpp"
#include "ffcalc/poly.hpp"
#include "ffcalc/stirling.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ffcalc {

/// Independent ways of computing F_n^(l)(m), the l-th derivative of x^(n) at x = m.
enum class Route { oracle, symbolic, harmonic, stirling };

inline constexpr Route all_routes[] = {Route::oracle, Route::symbolic, Route::harmonic, Route::stirling};

inline std::string_view to_string(Route route) {
  switch (route) {
    case Route::oracle:
      return "oracle";
    case Route::symbolic:
      return "symbolic";
    case Route::harmonic:
      return "harmonic";
    case Route::stirling:
      return "stirling";
  }
  return "unknown";
}

inline std::optional<Route> parse_route(std::string_view name) {
  for (Route r : all_routes) {
    if (to_string(r) == name) {
      return r;
    }
  }
  return std::nullopt;
}

struct DerivativeQuery {
  int n = 0;
  int l = 0;
  int m = 0;
  Route route = Route::stirling;
};

namespace detail {

class PolyMemo {
 public:
  template <class Compute>
  Poly get(int n, int l, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = polys_.find({n, l}); it != polys_.end()) {
        return it->second;
      }
    }
    Poly p = compute();
    std::lock_guard lock(mutex_);
    polys_.emplace(std::pair{n, l}, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, Poly> polys_;
};

inline PolyMemo& oracle_memo() {
  static PolyMemo memo;
  return memo;
}

inline PolyMemo& symbolic_memo() {
  static PolyMemo memo;
  return memo;
}

inline void require_derivative_indices(int n, int l) {
  require_natural(n, "falling factorial order");
  require_natural(l, "derivative order");
}

}  // namespace detail

/// Brute force: expand x^(n) and differentiate it l times.
inline Poly deriv_poly_oracle(int n, int l) {
  detail::require_derivative_indices(n, l);
  return detail::oracle_memo().get(n, l, [&] { return differentiate(falling_factorial_poly(n), l); });
}

/// l! times the sum of the falling factorials of order n with every possible choice of
/// l factors removed; the zero polynomial when l > n.
inline Poly deriv_poly_symbolic(int n, int l) {
  detail::require_derivative_indices(n, l);
  if (l > n) {
    return {};
  }
  return detail::symbolic_memo().get(n, l, [&] {
    Poly sum;
    for (const auto& missing : enumerate_subsets(n, l)) {
      sum += theta_poly(n, missing);
    }
    return sum * Rational(factorial(l));
  });
}

namespace forms {

/// l! m^(n) H_{m,l,m-n}, valid for integer m >= n.
inline Rational harmonic_outer(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  if (m < n) {
    throw std::domain_error("outer harmonic form needs m >= n");
  }
  return Rational(factorial(l)) * falling_power(m, n) * esh(m, l, m - n);
}

/**
 * Pole-free harmonic form for (n-1)/2 <= m < n. With p = n - m - 1 removed roots on the
 * far side of m, terms pairing +y with -y cancel except for squared pairs:
 *   (-1)^p l! m! p! sum_k (-1)^k H^(2)_{p,k,0} H_{m,l-2k-1,p}.
 */
inline Rational harmonic_inner(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  if (m < 0 || m >= n || 2 * m < n - 1) {
    throw std::domain_error("inner harmonic form needs (n-1)/2 <= m < n");
  }
  const int p = n - m - 1;
  Rational sum = 0;
  for (int k = 0; 2 * k + 1 <= l; ++k) {
    sum += minus_one_pow(k) * esh(p, k, 0, 2) * esh(m, l - 2 * k - 1, p);
  }
  return minus_one_pow(p) * Rational(factorial(l) * factorial(m) * factorial(p)) * sum;
}

/// l! sum_{k=0..l+1} (-1)^(m+k+1) s(n-m, l-k+1) s(m+1, k), valid for every integer m.
inline Rational stirling_unified(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  Rational sum = 0;
  for (int k = 0; k <= l + 1; ++k) {
    sum += minus_one_pow(m + k + 1) * stirling1(n - m, l - k + 1) * stirling1(m + 1, k);
  }
  return Rational(factorial(l)) * sum;
}

/// The mirrored single-line form l! sum_k (-1)^(m+l+k) s(m+1, l-k+1) s(n-m, k).
inline Rational stirling_unified_alt(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  Rational sum = 0;
  for (int k = 0; k <= l + 1; ++k) {
    sum += minus_one_pow(m + l + k) * stirling1(m + 1, l - k + 1) * stirling1(n - m, k);
  }
  return Rational(factorial(l)) * sum;
}

/// The unified form restricted to m >= n, where s(n-m, .) has a non-positive row.
inline Rational stirling_outer(int n, int l, int m) {
  if (m < n) {
    throw std::domain_error("outer Stirling form needs m >= n");
  }
  return stirling_unified(n, l, m);
}

/// (-1)^(m+1) l! sum_j (-1)^j s(n-m, l-j+1) s(m+1, j) for (n-1)/2 <= m < n.
inline Rational stirling_inner(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  if (m < 0 || m >= n || 2 * m < n - 1) {
    throw std::domain_error("inner Stirling form needs (n-1)/2 <= m < n");
  }
  Rational sum = 0;
  for (int j = 0; j <= l + 1; ++j) {
    sum += minus_one_pow(j) * stirling1(n - m, l - j + 1) * stirling1(m + 1, j);
  }
  return minus_one_pow(m + 1) * Rational(factorial(l)) * sum;
}

/**
 * The inner harmonic form with each H_{m,.,p} expanded over first-kind numbers:
 *   (-1)^n l! (p!)^2 sum_j (-1)^j s(m+1, j) sum_k (-1)^k s(-p, l-2k-j) H^(2)_{p,k,0},
 * p = n - m - 1, for (n-1)/2 <= m < n.
 */
inline Rational paired_expansion(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  if (m < 0 || m >= n || 2 * m < n - 1) {
    throw std::domain_error("paired expansion needs (n-1)/2 <= m < n");
  }
  const int p = n - m - 1;
  Rational outer = 0;
  for (int j = 0; j <= l; ++j) {
    Rational inner = 0;
    for (int k = 0; 2 * k <= l - j; ++k) {
      inner += minus_one_pow(k) * stirling1(-p, l - 2 * k - j) * esh(p, k, 0, 2);
    }
    outer += minus_one_pow(j) * stirling1(m + 1, j) * inner;
  }
  const Integer pf = factorial(p);
  return minus_one_pow(n) * Rational(factorial(l) * pf * pf) * outer;
}

/// l! x^(n) sum over l-subsets C of prod_{k in C} 1/(x - k). Needs x outside the removed
/// roots, i.e. not an integer in [0, n-1] when 1 <= l <= n.
inline Rational harmonic_direct(int n, int l, const Rational& x) {
  detail::require_derivative_indices(n, l);
  if (l > n) {
    return 0;
  }
  if (l >= 1 && is_integer(x) && x >= 0 && x < n) {
    throw std::domain_error("harmonic sum has a pole at x = " + to_string(x));
  }
  Rational sum = 0;
  for (const auto& subset : enumerate_subsets(n, l)) {
    Rational term = 1;
    for (int k : subset.members()) {
      term /= x - k;
    }
    sum += term;
  }
  return Rational(factorial(l)) * falling_power(x, n) * sum;
}

}  // namespace forms

inline Rational deriv_oracle(int n, int l, const Rational& x) { return evaluate(deriv_poly_oracle(n, l), x); }

inline Rational deriv_symbolic(int n, int l, const Rational& x) { return evaluate(deriv_poly_symbolic(n, l), x); }

/// Harmonic forms: outer for m >= n, inner for (n-1)/2 <= m < n, and the reflection
/// F(m) = (-1)^(n-l) F(n-m-1) everywhere else.
inline Rational deriv_harmonic(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  auto direct = [&](int point) {
    return point >= n ? forms::harmonic_outer(n, l, point) : forms::harmonic_inner(n, l, point);
  };
  if (m >= n || (m >= 0 && 2 * m >= n - 1)) {
    return direct(m);
  }
  return minus_one_pow(n - l) * direct(n - m - 1);
}

inline Rational deriv_stirling(int n, int l, int m) { return forms::stirling_unified(n, l, m); }

inline Rational deriv_at(const DerivativeQuery& q) {
  switch (q.route) {
    case Route::oracle:
      return deriv_oracle(q.n, q.l, q.m);
    case Route::symbolic:
      return deriv_symbolic(q.n, q.l, q.m);
    case Route::harmonic:
      return deriv_harmonic(q.n, q.l, q.m);
    case Route::stirling:
      return deriv_stirling(q.n, q.l, q.m);
  }
  throw std::invalid_argument("unknown route");
}

/// s_m(n, l) = F_n^(l)(m) / l!
inline Rational noncentral_stirling(int n, int l, int m) {
  return deriv_stirling(n, l, m) / Rational(factorial(l));
}

/// l! [m+1, l+m-n+1]_{m-n+1}, valid for m >= n.
inline Rational r_stirling_form(int n, int l, int m) {
  detail::require_derivative_indices(n, l);
  if (m < n) {
    throw std::domain_error("r-Stirling form needs m >= n");
  }
  return Rational(factorial(l) * r_stirling1_bracket(m + 1, l + m - n + 1, m - n + 1));
}

/// Re-expands around m' the Taylor series of x^(n) about m:
///   l'! sum_{l=l'..n} C(l, l') F^(l)(m)/l! (m'-m)^(l-l'),
/// which equals F_n^(l')(m').
inline Rational taylor_translate(int n, int l_prime, int m, int m_prime) {
  detail::require_derivative_indices(n, l_prime);
  const Rational shift = m_prime - m;
  Rational sum = 0;
  for (int l = l_prime; l <= n; ++l) {
    sum += Rational(binomial(l, l_prime)) * deriv_stirling(n, l, m) / Rational(factorial(l)) *
           power(shift, l - l_prime);
  }
  return Rational(factorial(l_prime)) * sum;
}

}  // namespace ffcalc
