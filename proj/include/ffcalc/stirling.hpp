#pragma once

#include "ffcalc/numeric.hpp"
#include "ffcalc/symmetric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace ffcalc {

enum class StirlingKind { first, second };

/**
 * How the first-kind triangle is continued to negative rows.
 *
 * negative_positive seeds column 0 with s(n, 0) = 1/(-n)! for n <= 0 and marches the
 * recurrence towards increasing column; values are rationals, nonzero for every k >= 0.
 * negative_negative seeds s(n, 0) = [n = 0] and marches towards decreasing column; it is
 * supported on the quadrant row <= 0, column <= 0 and vanishes at row < 0, column > 0.
 */
enum class Boundary { negative_positive, negative_negative };

struct StirlingKey {
  int row = 0;
  int column = 0;
  StirlingKind kind = StirlingKind::first;
  Boundary boundary = Boundary::negative_positive;  // only consulted when row < 0
};

namespace detail {

/// Memo for signed first-kind numbers. Rows >= 0 are integer; rows < 0 follow the
/// negative_positive boundary. Growth is serialized behind a mutex.
class FirstKindTable {
 public:
  static FirstKindTable& instance() {
    static FirstKindTable table;
    return table;
  }

  Rational get(int row, int column) {
    if (column < 0) {
      return 0;
    }
    std::lock_guard lock(mutex_);
    if (row >= 0) {
      if (column > row) {
        return 0;
      }
      grow_classic(row);
      return Rational(classic_[static_cast<std::size_t>(row)][static_cast<std::size_t>(column)]);
    }
    grow_negative(-row, column + 1);
    return negative_[static_cast<std::size_t>(-row - 1)][static_cast<std::size_t>(column)];
  }

 private:
  FirstKindTable() { classic_.push_back({Integer(1)}); }

  void grow_classic(int row) {
    while (static_cast<int>(classic_.size()) <= row) {
      const auto n = static_cast<long long>(classic_.size()) - 1;
      const auto& prev = classic_.back();
      std::vector<Integer> next(prev.size() + 1);
      for (std::size_t k = 0; k < next.size(); ++k) {
        Integer v = 0;
        if (k >= 1) {
          v += prev[k - 1];
        }
        if (k < prev.size()) {
          v -= n * prev[k];
        }
        next[k] = std::move(v);
      }
      classic_.push_back(std::move(next));
    }
  }

  // s(n, k) = (s(n, k-1) - s(n+1, k)) / n for n <= -1, seeded by s(n, 0) = 1/(-n)!.
  void grow_negative(int depth, int width) {
    if (depth <= depth_ && width <= width_) {
      return;
    }
    depth_ = std::max({depth, 2 * depth_, 8});
    width_ = std::max({width, 2 * width_, 8});
    negative_.assign(static_cast<std::size_t>(depth_), std::vector<Rational>(static_cast<std::size_t>(width_)));
    std::vector<Rational> above(static_cast<std::size_t>(width_), Rational(0));
    above[0] = 1;  // row 0
    for (int d = 1; d <= depth_; ++d) {
      const int n = -d;
      auto& row = negative_[static_cast<std::size_t>(d - 1)];
      row[0] = Rational(1, factorial(d));
      for (std::size_t k = 1; k < row.size(); ++k) {
        row[k] = (row[k - 1] - above[k]) / n;
      }
      above = row;
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Integer>> classic_;
  std::vector<std::vector<Rational>> negative_;  // negative_[d-1] holds row -d
  int depth_ = 0;
  int width_ = 0;
};

// t(a, b) = s(-a, -b) under the negative_negative boundary, from
// t(a, b+1) = t(a-1, b) - a t(a, b) with t(0, b) = [b = 0] and t(a, 0) = [a = 0].
inline Integer negative_negative_first_kind(int a, int b) {
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(a) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(b) + 1, Integer(0)));
  t[0][0] = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = 1; j < t[i].size(); ++j) {
      t[i][j] = t[i - 1][j - 1] - Integer(static_cast<long long>(i)) * t[i][j - 1];
    }
  }
  return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

class SecondKindMemo {
 public:
  static SecondKindMemo& instance() {
    static SecondKindMemo memo;
    return memo;
  }

  template <class Compute>
  Rational get(int row, int column, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find({row, column}); it != values_.end()) {
        return it->second;
      }
    }
    Rational value = compute();
    std::lock_guard lock(mutex_);
    values_.emplace(std::pair{row, column}, value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, Rational> values_;
};

class ACoefficientTable {
 public:
  static ACoefficientTable& instance() {
    static ACoefficientTable table;
    return table;
  }

  Rational get(int r, int k) {
    std::lock_guard lock(mutex_);
    if (r > max_r_ || k > max_k_) {
      rebuild(std::max({r, 2 * max_r_, 8}), std::max({k, 2 * max_k_, 8}));
    }
    return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
  }

 private:
  void rebuild(int max_r, int max_k) {
    max_r_ = max_r;
    max_k_ = max_k;
    grid_.assign(static_cast<std::size_t>(max_r) + 1, std::vector<Rational>(static_cast<std::size_t>(max_k) + 1));
    for (int r = 0; r <= max_r; ++r) {
      auto& row = grid_[static_cast<std::size_t>(r)];
      row[0] = 1;
      for (int k = 1; k <= max_k; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        row[kk] = r == 0 ? Rational(0) : grid_[static_cast<std::size_t>(r) - 1][kk] + row[kk - 1] / r;
      }
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<Rational>> grid_;
  int max_r_ = -1;
  int max_k_ = -1;
};

}  // namespace detail

/**
 * Signed Stirling number of the first kind s(row, column).
 *
 * For row >= 0 this is the coefficient of x^column in x(x-1)...(x-row+1). Negative rows
 * are continued according to `boundary` (see Boundary). Negative columns are only
 * populated under negative_negative.
 */
inline Rational stirling1(int row, int column, Boundary boundary = Boundary::negative_positive) {
  if (row < 0 && boundary == Boundary::negative_negative) {
    return column <= 0 ? Rational(detail::negative_negative_first_kind(-row, -column)) : Rational(0);
  }
  return detail::FirstKindTable::instance().get(row, column);
}

/// Stirling number of the second kind by the finite alternating sum
///   S(n, k) = (1/k!) sum_{j=1..k} (-1)^{k-j} C(k, j) j^n + [n = k = 0],
/// which stays meaningful for negative n (and at n = 0 gives (-1)^{k+1}/k! for k >= 1).
inline Rational stirling2(int row, int column) {
  if (column < 0) {
    return 0;
  }
  return detail::SecondKindMemo::instance().get(row, column, [&] {
    Rational sum = 0;
    for (int j = 1; j <= column; ++j) {
      sum += minus_one_pow(column - j) * Rational(binomial(column, j)) * power(Rational(j), row);
    }
    sum /= Rational(factorial(column));
    if (row == 0 && column == 0) {
      sum += 1;
    }
    return sum;
  });
}

inline Rational stirling(const StirlingKey& key) {
  return key.kind == StirlingKind::first ? stirling1(key.row, key.column, key.boundary)
                                         : stirling2(key.row, key.column);
}

/// A_{r,k} by its defining recurrence A_{r,k} = A_{r-1,k} + A_{r,k-1}/r,
/// with A_{r,0} = 1 and A_{0,k} = 0 for k >= 1.
inline Rational a_coefficient(int r, int k) {
  require_natural(r, "A-coefficient r");
  require_natural(k, "A-coefficient k");
  return detail::ACoefficientTable::instance().get(r, k);
}

/// A_{r,k} as the alternating sum sum_{j=1..r} (-1)^{j+1} C(r, j) / j^k.
inline Rational a_coefficient_closed_form(int r, int k) {
  require_natural(r, "A-coefficient r");
  require_natural(k, "A-coefficient k");
  if (r == 0) {
    return k == 0 ? 1 : 0;
  }
  Rational sum = 0;
  for (int j = 1; j <= r; ++j) {
    sum += minus_one_pow(j + 1) * Rational(binomial(r, j)) / power(Rational(j), k);
  }
  return sum;
}

/// e_k(r, r+1, ..., n): the unsigned r-Stirling number of the first kind with upper
/// index n+1 and lower index n-k+1. Zero outside k in [0, n-r+1].
inline Integer r_stirling1(int n, int k, int r) {
  require_natural(n, "r-Stirling n");
  require_natural(k, "r-Stirling k");
  require_natural(r, "r-Stirling r");
  const auto values = integer_range(r, n);
  return elementary_symmetric<Integer>(k, std::span<const Integer>(values));
}

/// The r-Stirling number in bracket notation [upper, lower]_r.
inline Integer r_stirling1_bracket(int upper, int lower, int r) {
  if (upper < 1 || lower > upper) {
    return 0;
  }
  return r_stirling1(upper - 1, upper - lower, r);
}

}  // namespace ffcalc
