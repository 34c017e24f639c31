#pragma once

#include "ffcalc/numeric.hpp"
#include "ffcalc/poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffcalc {

/// H_n^(v) = 1 + 1/2^v + ... + 1/n^v.
inline Rational generalized_harmonic(int n, int v = 1) {
  require_natural(n, "harmonic index");
  require_natural(v, "harmonic power");
  Rational sum = 0;
  for (int k = 1; k <= n; ++k) {
    sum += Rational(1) / power(Rational(k), v);
  }
  return sum;
}

namespace detail {

/// Rows of H^(v)_{n,l,r} for one (r, v), grown in n by
///   H_{n,l,r} = H_{n-1,l,r} + H_{n-1,l-1,r} / n^v.
/// Row n stores l = 0..n; cells with n - l < r hold the conventional 0.
class EshTable {
 public:
  static EshTable& instance() {
    static EshTable table;
    return table;
  }

  Rational get(int n, int l, int r, int v) {
    std::lock_guard lock(mutex_);
    auto& rows = rows_[{r, v}];
    if (rows.empty()) {
      rows.push_back({Rational(r == 0 ? 1 : 0)});
    }
    while (static_cast<int>(rows.size()) <= n) {
      const int row_n = static_cast<int>(rows.size());
      const auto& prev = rows.back();
      const Rational weight = Rational(1) / power(Rational(row_n), v);
      std::vector<Rational> next(static_cast<std::size_t>(row_n) + 1);
      for (int ll = 0; ll <= row_n; ++ll) {
        if (row_n - ll < r) {
          continue;
        }
        if (ll == 0) {
          next[0] = 1;
          continue;
        }
        const auto idx = static_cast<std::size_t>(ll);
        Rational value = prev[idx - 1] * weight;
        if (idx < prev.size()) {
          value += prev[idx];
        }
        next[idx] = std::move(value);
      }
      rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<std::vector<Rational>>> rows_;
};

}  // namespace detail

/**
 * Elementary symmetric harmonic sum H^(v)_{n,l,r}.
 *
 * The sum of 1/(k_1 ... k_l)^v over r < k_1 < ... < k_l <= n, i.e. e_l evaluated at
 * 1/(r+1)^v, ..., 1/n^v. Total by convention: 0 when l < 0 or n - l < r, 1 when l = 0
 * and n >= r. H_{n,1,0} is the harmonic number H_n.
 */
inline Rational esh(int n, int l, int r, int v = 1) {
  require_natural(n, "esh n");
  require_natural(r, "esh r");
  require_natural(v, "esh power");
  if (l < 0 || n - l < r) {
    return 0;
  }
  return detail::EshTable::instance().get(n, l, r, v);
}

/// Lookup grid of H^(v)_{n,l,r} for fixed r and v, indexed grid[n][l] for 0 <= n, l <= n_max.
struct HarmonicMatrix {
  int n_max = 0;
  int r = 0;
  int v = 1;
  std::vector<std::vector<Rational>> grid;

  const Rational& at(int n, int l) const { return grid.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(l)); }
};

/**
 * Builds the H-sum lookup grid without calling esh:
 *   1. column l = 0 is 1 (for rows n >= r);
 *   2. the boundary line n - l = r gets the single surviving term 1/(n(n-1)...(n-l+1))^v;
 *   3. cells strictly between are filled row by row with H_{n,l} = H_{n-1,l} + H_{n-1,l-1}/n^v;
 *   4. everything beyond the boundary line (including the upper-right triangle) stays 0.
 * For r = 0 the boundary line is the main diagonal.
 */
inline HarmonicMatrix esh_matrix(int n_max, int r, int v = 1) {
  require_natural(n_max, "matrix size");
  require_natural(r, "esh r");
  require_natural(v, "esh power");
  HarmonicMatrix m{n_max, r, v, {}};
  const auto size = static_cast<std::size_t>(n_max) + 1;
  m.grid.assign(size, std::vector<Rational>(size, Rational(0)));
  auto cell = [&](int n, int l) -> Rational& { return m.grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)]; };

  for (int n = r; n <= n_max; ++n) {
    cell(n, 0) = 1;
  }
  for (int l = 1; l + r <= n_max; ++l) {
    const int n = l + r;
    cell(n, l) = Rational(1) / power(falling_power(Rational(n), l), v);
  }
  for (int n = r + 1; n <= n_max; ++n) {
    const Rational weight = Rational(1) / power(Rational(n), v);
    for (int l = 1; l < n - r; ++l) {
      cell(n, l) = cell(n - 1, l) + cell(n - 1, l - 1) * weight;
    }
  }
  return m;
}

/// The polynomial in r
///   sum_{l=l'..n} C(l, l') H_{n+m,l,m} r^(l-l'),
/// which times (n+m)^(n) / (n+m+r)^(n) continues H_{n+m+r, l', m+r} to non-integer r.
inline Poly esh_poly(int n, int l_prime, int m) {
  require_natural(n, "esh_poly n");
  require_natural(l_prime, "esh_poly l'");
  require_natural(m, "esh_poly m");
  if (l_prime > n) {
    throw std::domain_error("esh_poly requires l' <= n");
  }
  std::vector<Rational> c(static_cast<std::size_t>(n - l_prime) + 1);
  for (int l = l_prime; l <= n; ++l) {
    c[static_cast<std::size_t>(l - l_prime)] = Rational(binomial(l, l_prime)) * esh(n + m, l, m);
  }
  return Poly(std::move(c));
}

/// (n+m)^(n) / (n+m+r)^(n); domain error where the denominator vanishes.
inline Rational esh_poly_prefactor(int n, int m, const Rational& r) {
  const Rational denominator_value = falling_power(Rational(n + m) + r, n);
  if (denominator_value == 0) {
    throw std::domain_error("prefactor pole at r = " + to_string(r));
  }
  return falling_power(Rational(n + m), n) / denominator_value;
}

/// H_{n,l',m}(r): the H-sum continued to rational r through esh_poly.
inline Rational esh_extended(int n, int l_prime, int m, const Rational& r) {
  return esh_poly_prefactor(n, m, r) * evaluate(esh_poly(n, l_prime, m), r);
}

}  // namespace ffcalc
