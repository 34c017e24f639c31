#pragma once

#include "ffcalc/numeric.hpp"

#include <span>
#include <vector>

namespace ffcalc {

/// e_0 .. e_{max_degree} of `values`, by the column recurrence e_j += v * e_{j-1}.
template <class T>
std::vector<T> elementary_symmetric_all(int max_degree, std::span<const T> values) {
  require_natural(max_degree, "symmetric polynomial degree");
  std::vector<T> e(static_cast<std::size_t>(max_degree) + 1, T(0));
  e[0] = 1;
  for (const T& v : values) {
    for (std::size_t j = e.size() - 1; j >= 1; --j) {
      e[j] += v * e[j - 1];
    }
  }
  return e;
}

/// e_k(values); 0 for k < 0 or k > values.size().
template <class T>
T elementary_symmetric(int k, std::span<const T> values) {
  if (k < 0 || static_cast<std::size_t>(k) > values.size()) {
    return T(0);
  }
  return elementary_symmetric_all(k, values)[static_cast<std::size_t>(k)];
}

/// h_k(values): sum of all degree-k monomials over multisets of the values; h_0 = 1.
template <class T>
T complete_homogeneous(int k, std::span<const T> values) {
  if (k < 0) {
    return T(0);
  }
  std::vector<T> h(static_cast<std::size_t>(k) + 1, T(0));
  h[0] = 1;
  for (const T& v : values) {
    for (std::size_t j = 1; j < h.size(); ++j) {
      h[j] += v * h[j - 1];
    }
  }
  return h[static_cast<std::size_t>(k)];
}

inline Rational complete_homogeneous(int k, const std::vector<Rational>& values) {
  return complete_homogeneous<Rational>(k, std::span<const Rational>(values));
}

inline Rational elementary_symmetric(int k, const std::vector<Rational>& values) {
  return elementary_symmetric<Rational>(k, std::span<const Rational>(values));
}

/// The integers first, first+1, ..., last (empty when last < first).
inline std::vector<Integer> integer_range(int first, int last) {
  std::vector<Integer> out;
  for (int v = first; v <= last; ++v) {
    out.emplace_back(v);
  }
  return out;
}

}  // namespace ffcalc
