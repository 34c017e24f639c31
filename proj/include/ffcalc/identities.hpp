#pragma once

#include "ffcalc/combinations.hpp"
#include "ffcalc/derivative.hpp"
#include "ffcalc/harmonic.hpp"
#include "ffcalc/missing_factor.hpp"
#include "ffcalc/numeric.hpp"
#include "ffcalc/poly.hpp"
#include "ffcalc/stirling.hpp"
#include "ffcalc/symmetric.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace ffcalc {

/// A named integer parameter tuple, in axis order.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, int>> values) : values_(values) {}

  int operator[](std::string_view name) const {
    for (const auto& [key, value] : values_) {
      if (key == name) {
        return value;
      }
    }
    throw std::out_of_range("no parameter named " + std::string(name));
  }

  void push(std::string name, int value) { values_.emplace_back(std::move(name), value); }
  void pop() { values_.pop_back(); }
  const std::vector<std::pair<std::string, int>>& values() const { return values_; }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  std::vector<std::pair<std::string, int>> values_;
};

inline std::string to_string(const Params& p) {
  std::string out;
  for (const auto& [key, value] : p.values()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += key + '=' + std::to_string(value);
  }
  return out;
}

/// Inclusive bound of an axis; may depend on the grid scale and on earlier axes.
using Bound = std::function<int(const Params&, int max_n)>;

struct Axis {
  std::string name;
  Bound lo;
  Bound hi;
};

struct IdentitySpec {
  std::string id;
  std::string statement;
  std::string note;
  std::vector<Axis> axes;
  std::function<bool(const Params&)> valid;  // empty means every grid point
  std::function<Rational(const Params&)> lhs;
  std::function<Rational(const Params&)> rhs;
  std::function<std::vector<Params>(int max_n)> samples;  // extra points beyond the grid
};

struct Witness {
  Params params;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::string error;
};

struct IdentityReport {
  std::string id;
  std::string statement;
  std::string note;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<Witness> first_failure;

  bool ok() const { return checked == passed; }
};

namespace bounds {

inline Bound value(int v) {
  return [v](const Params&, int) { return v; };
}

/// max_n + offset, clamped to [floor, cap].
inline Bound scale(int offset = 0, int cap = INT_MAX, int floor = INT_MIN) {
  return [=](const Params&, int max_n) { return std::clamp(max_n + offset, floor, cap); };
}

/// factor * max_n + offset, clamped to cap.
inline Bound times(int factor, int offset = 0, int cap = INT_MAX) {
  return [=](const Params&, int max_n) { return std::min(factor * max_n + offset, cap); };
}

inline Bound of(std::string name, int offset = 0) {
  return [name = std::move(name), offset](const Params& p, int) { return p[name] + offset; };
}

/// 2^(max_n) - 1, the largest mask over max_n bits.
inline Bound all_masks(int cap_bits = 12) {
  return [=](const Params&, int max_n) { return (1 << std::min(max_n, cap_bits)) - 1; };
}

/// 2^n - 1 for the named axis n.
inline Bound masks_of(std::string name) {
  return [name = std::move(name)](const Params& p, int) { return (1 << p[name]) - 1; };
}

}  // namespace bounds

namespace detail {

inline Axis axis(std::string name, Bound lo, Bound hi) { return {std::move(name), std::move(lo), std::move(hi)}; }

inline Axis axis(std::string name, int lo, Bound hi) { return axis(std::move(name), bounds::value(lo), std::move(hi)); }

inline Axis axis(std::string name, int lo, int hi) { return axis(std::move(name), bounds::value(lo), bounds::value(hi)); }

inline MissingFactorSet set_from_mask(int n, int mask) {
  std::vector<int> members;
  for (int k = 0; k < n; ++k) {
    if (mask & (1 << k)) {
      members.push_back(k);
    }
  }
  return MissingFactorSet(n, std::move(members));
}

inline int popcount(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }

inline std::vector<MissingFactorSet> collect(int n, int l) {
  std::vector<MissingFactorSet> out;
  for (auto& s : enumerate_subsets(n, l)) {
    out.push_back(s);
  }
  return out;
}

inline Rational truth(bool b) { return b ? 1 : 0; }

inline Rational coefficient_at(const Poly& p, int j) { return p.coefficient(static_cast<std::size_t>(j)); }

inline Rational rational_point(const Params& p) { return Rational(p["p"]) / p["q"]; }

inline Rational vartheta_or_zero(int n, const MissingFactorSet& s, int j) { return j < 0 ? Rational(0) : vartheta(n, s, j); }

/// prod (x - root) over the given roots.
inline Poly product_of_linear(const std::vector<Rational>& roots) {
  Poly p = Poly::constant(1);
  for (const auto& r : roots) {
    p = multiply(p, Poly::linear_factor(r));
  }
  return p;
}

inline std::vector<Rational> unit_fractions(int k) {
  std::vector<Rational> out;
  for (int j = 1; j <= k; ++j) {
    out.push_back(Rational(1) / j);
  }
  return out;
}

inline std::vector<Rational> integer_values(int first, int last) {
  std::vector<Rational> out;
  for (int j = first; j <= last; ++j) {
    out.emplace_back(j);
  }
  return out;
}

/// The harmonic-series form of H_{n,l',0}(r) at rational r.
inline Rational shifted_harmonic_series(int n, int l_prime, const Rational& r) {
  Rational sum = 0;
  for (int k = l_prime; k <= n; ++k) {
    sum += Rational(binomial(k, l_prime)) * absolute(stirling1(n + 1, k + 1)) * power(r, k - l_prime);
  }
  return sum / falling_power(Rational(n) + r, n);
}

/// Deterministic across standard libraries: mt19937 output is fixed by the standard and
/// the reduction below avoids implementation-defined distributions.
inline int draw(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

inline bool inner_region(int n, int m) { return m >= 0 && m < n && 2 * m >= n - 1; }

}  // namespace detail

/// Catalog entries, keyed by equation numbers of the reference identities.
inline std::vector<IdentitySpec> identity_catalog() {
  using namespace bounds;
  using detail::axis;
  using detail::truth;
  std::vector<IdentitySpec> c;
  auto add = [&](IdentitySpec spec) { c.push_back(std::move(spec)); };

  // Stirling and symmetric-polynomial definitions

  add({"EQ4", "x^(n) = sum_k s(n,k) x^k", "", {axis("n", 0, times(3, 1, 25)), axis("k", 0, of("n"))}, {},
       [](const Params& p) { return detail::coefficient_at(falling_factorial_poly(p["n"]), p["k"]); },
       [](const Params& p) { return stirling1(p["n"], p["k"]); }, {}});

  add({"EQ5", "m^n = sum_k S(n,k) m^(k)",
       "the sum stops at k = n",
       {axis("n", 0, scale(2)), axis("m", -4, scale(4))}, {},
       [](const Params& p) { return power(Rational(p["m"]), p["n"]); },
       [](const Params& p) {
         Rational sum = 0;
         for (int k = 0; k <= p["n"]; ++k) {
           sum += stirling2(p["n"], k) * falling_power(p["m"], k);
         }
         return sum;
       },
       {}});

  add({"EQ7", "|s(n,n-k)| = e_k(0,1,...,n-1)", "", {axis("n", 1, times(1, 4, 12)), axis("k", 1, of("n"))}, {},
       [](const Params& p) { return absolute(stirling1(p["n"], p["n"] - p["k"])); },
       [](const Params& p) { return elementary_symmetric(p["k"], detail::integer_values(0, p["n"] - 1)); }, {}});

  // First derivative and the product rule

  add({"EQ8", "(prod (x - k_j))' = sum_r prod_{j != r} (x - k_j)", "roots are the odd integers -3, -1, 1, ... picked by a mask",
       {axis("mask", 0, all_masks(8)), axis("j", 0, scale())}, {},
       [](const Params& p) {
         std::vector<Rational> roots;
         for (int b = 0; b < 8; ++b) {
           if (p["mask"] & (1 << b)) {
             roots.emplace_back(2 * b - 3);
           }
         }
         return detail::coefficient_at(differentiate(detail::product_of_linear(roots), 1), p["j"]);
       },
       [](const Params& p) {
         std::vector<Rational> roots;
         for (int b = 0; b < 8; ++b) {
           if (p["mask"] & (1 << b)) {
             roots.emplace_back(2 * b - 3);
           }
         }
         Poly sum;
         for (std::size_t r = 0; r < roots.size(); ++r) {
           auto rest = roots;
           rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
           sum += detail::product_of_linear(rest);
         }
         return detail::coefficient_at(sum, p["j"]);
       },
       {}});

  add({"EQ9", "F_n'(x) = x^(n) sum_{k<n} 1/(x-k), x outside {0..n-1}", "",
       {axis("n", 0, scale()), axis("p", -6, scale(6)), axis("q", 1, 3)},
       [](const Params& p) {
         const Rational x = detail::rational_point(p);
         return !(is_integer(x) && x >= 0 && x < p["n"]);
       },
       [](const Params& p) { return deriv_oracle(p["n"], 1, detail::rational_point(p)); },
       [](const Params& p) {
         const Rational x = detail::rational_point(p);
         Rational sum = 0;
         for (int k = 0; k < p["n"]; ++k) {
           sum += Rational(1) / (x - k);
         }
         return falling_power(x, p["n"]) * sum;
       },
       {}});

  add({"EQ11", "F_n'(m) = (H_m - H_{m-n}) m^(n), m >= n+1", "",
       {axis("n", 0, scale()), axis("m", of("n", 1), times(2, 4))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], 1, p["m"]); },
       [](const Params& p) {
         return (generalized_harmonic(p["m"]) - generalized_harmonic(p["m"] - p["n"])) * falling_power(p["m"], p["n"]);
       },
       {}});

  add({"EQ12", "F_n'(x) = sum_k prod_{j != k} (x - j)", "compared coefficient by coefficient",
       {axis("n", 0, scale()), axis("j", 0, of("n"))}, {},
       [](const Params& p) { return detail::coefficient_at(deriv_poly_oracle(p["n"], 1), p["j"]); },
       [](const Params& p) {
         Poly sum;
         for (int k = 0; k < p["n"]; ++k) {
           std::vector<Rational> roots;
           for (int j = 0; j < p["n"]; ++j) {
             if (j != k) {
               roots.emplace_back(j);
             }
           }
           sum += detail::product_of_linear(roots);
         }
         return detail::coefficient_at(sum, p["j"]);
       },
       {}});

  // Falling factorial with missing factors

  add({"EQ13", "Theta(n,k;x) = x^(n) / prod (x - k_j) where x is not removed", "",
       {axis("n", 0, scale(0, 6)), axis("mask", 0, masks_of("n")), axis("p", -3, scale(3)), axis("q", 1, 2)},
       [](const Params& p) {
         const Rational x = detail::rational_point(p);
         return !(is_integer(x) && detail::set_from_mask(p["n"], p["mask"]).contains(static_cast<int>(numerator(x))));
       },
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         return theta_eval(p["n"], s, detail::rational_point(p));
       },
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         const Rational x = detail::rational_point(p);
         return theta_eval_by_division(p["n"], s, x).value();
       },
       {}});

  add({"EQ16", "vartheta(n,k1,j) single-factor closed form equals long division", "",
       {axis("n", 1, scale()), axis("k1", 0, of("n", -1)), axis("j", 0, of("n", -1))}, {},
       [](const Params& p) { return vartheta(p["n"], MissingFactorSet(p["n"], {p["k1"]}), p["j"]); },
       [](const Params& p) {
         return detail::coefficient_at(theta_poly(p["n"], MissingFactorSet(p["n"], {p["k1"]})), p["j"]);
       },
       {}});

  add({"EQ17", "vartheta(n+1,k1,j) = vartheta(n,k1,j-1) - n vartheta(n,k1,j)", "",
       {axis("n", 1, scale()), axis("k1", 0, of("n", -1)), axis("j", 0, of("n"))}, {},
       [](const Params& p) { return vartheta(p["n"] + 1, MissingFactorSet(p["n"] + 1, {p["k1"]}), p["j"]); },
       [](const Params& p) {
         const MissingFactorSet s(p["n"], {p["k1"]});
         return detail::vartheta_or_zero(p["n"], s, p["j"] - 1) - p["n"] * vartheta(p["n"], s, p["j"]);
       },
       {}});

  add({"EQ18", "vartheta(n,k1,n-1) = 1", "", {axis("n", 1, scale()), axis("k1", 0, of("n", -1))}, {},
       [](const Params& p) { return vartheta(p["n"], MissingFactorSet(p["n"], {p["k1"]}), p["n"] - 1); },
       [](const Params&) { return Rational(1); }, {}});

  add({"EQ19", "vartheta(n,k1,j) - k1 vartheta(n,k1,j+1) = s(n,j+1)", "",
       {axis("n", 1, scale()), axis("k1", 0, of("n", -1)), axis("j", 0, of("n", -1))}, {},
       [](const Params& p) {
         const MissingFactorSet s(p["n"], {p["k1"]});
         return vartheta(p["n"], s, p["j"]) - p["k1"] * vartheta(p["n"], s, p["j"] + 1);
       },
       [](const Params& p) { return stirling1(p["n"], p["j"] + 1); }, {}});

  add({"EQ20", "vartheta(n,k_l,j) = sum_i vartheta(n,k_{l-1},i+j+1) k_l^i equals long division", "",
       {axis("n", 0, scale()), axis("mask", 0, masks_of("n")), axis("j", 0, of("n"))}, {},
       [](const Params& p) { return vartheta(p["n"], detail::set_from_mask(p["n"], p["mask"]), p["j"]); },
       [](const Params& p) {
         return detail::coefficient_at(theta_poly(p["n"], detail::set_from_mask(p["n"], p["mask"])), p["j"]);
       },
       {}});

  add({"EQ21", "leading coefficient vartheta(n,k_l,n-l) = 1",
       "the index is read as n - l, the top coefficient of a monic degree n - l polynomial",
       {axis("n", 0, scale()), axis("mask", 0, masks_of("n"))}, {},
       [](const Params& p) {
         return vartheta(p["n"], detail::set_from_mask(p["n"], p["mask"]), p["n"] - detail::popcount(p["mask"]));
       },
       [](const Params&) { return Rational(1); }, {}});

  add({"EQ22", "vartheta(n,k_l,j) - k_l vartheta(n,k_l,j+1) = vartheta(n,k_{l-1},j+1)", "",
       {axis("n", 1, scale()), axis("mask", 1, masks_of("n")), axis("j", 0, of("n"))}, {},
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         const int last = s.members().back();
         return vartheta(p["n"], s, p["j"]) - last * vartheta(p["n"], s, p["j"] + 1);
       },
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         return vartheta(p["n"], s.prefix(s.size() - 1), p["j"] + 1);
       },
       {}});

  add({"EQ23", "vartheta(n+1,k_l,j) = vartheta(n,k_l,j-1) - n vartheta(n,k_l,j)",
       "the missing set is held fixed while the universe grows from n to n+1",
       {axis("n", 0, scale()), axis("mask", 0, masks_of("n")), axis("j", 0, of("n", 1))}, {},
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         return vartheta(p["n"] + 1, s.in_universe(p["n"] + 1), p["j"]);
       },
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         return detail::vartheta_or_zero(p["n"], s, p["j"] - 1) - p["n"] * vartheta(p["n"], s, p["j"]);
       },
       {}});

  add({"EQ24", "vartheta(n+1,k_l,j+1) + (n-k_l) vartheta(n,k_l,j+1) = vartheta(n,k_{l-1},j+1)", "",
       {axis("n", 1, scale()), axis("mask", 1, masks_of("n")), axis("j", 0, of("n"))}, {},
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         const int last = s.members().back();
         return vartheta(p["n"] + 1, s.in_universe(p["n"] + 1), p["j"] + 1) +
                (p["n"] - last) * vartheta(p["n"], s, p["j"] + 1);
       },
       [](const Params& p) {
         const auto s = detail::set_from_mask(p["n"], p["mask"]);
         return vartheta(p["n"], s.prefix(s.size() - 1), p["j"] + 1);
       },
       {}});

  add({"EQ27", "F_n'(x) = sum_k Theta(n,<k>;x)", "compared coefficient by coefficient",
       {axis("n", 0, scale()), axis("j", 0, of("n"))}, {},
       [](const Params& p) { return detail::coefficient_at(deriv_poly_oracle(p["n"], 1), p["j"]); },
       [](const Params& p) {
         Poly sum;
         for (int k = 0; k < p["n"]; ++k) {
           sum += theta_poly(p["n"], MissingFactorSet(p["n"], {k}));
         }
         return detail::coefficient_at(sum, p["j"]);
       },
       {}});

  // Enumeration

  add({"EQ30", "C_{n,1} lists <0>, <1>, ..., <n-1>", "", {axis("n", 1, scale(4)), axis("t", 0, of("n", -1))}, {},
       [](const Params& p) { return Rational(rank_value(detail::collect(p["n"], 1).at(static_cast<std::size_t>(p["t"])))); },
       [](const Params& p) { return Rational(p["t"]); }, {}});

  add({"EQ31", "C_{n,n} is the single tuple <0,1,...,n-1>", "", {axis("n", 0, scale(4))}, {},
       [](const Params& p) {
         const auto all = detail::collect(p["n"], p["n"]);
         std::vector<int> expected;
         for (int k = 0; k < p["n"]; ++k) {
           expected.push_back(k);
         }
         return truth(all.size() == 1 && all[0] == MissingFactorSet(p["n"], expected));
       },
       [](const Params&) { return Rational(1); }, {}});

  add({"EQ34", "C_{n,l} = C_{n-1,l} followed by C_{n-1,l-1} with n-1 appended",
       "both parts are compared in enumeration order",
       {axis("n", 1, scale(2)), axis("l", 1, of("n"))}, {},
       [](const Params& p) {
         const int n = p["n"];
         const int l = p["l"];
         std::vector<MissingFactorSet> without;
         std::vector<MissingFactorSet> with_top;
         for (const auto& s : detail::collect(n, l)) {
           if (s.contains(n - 1)) {
             with_top.push_back(MissingFactorSet(n - 1, std::vector<int>(s.members().begin(), s.members().end() - 1)));
           } else {
             without.push_back(s.in_universe(n - 1));
           }
         }
         const bool low_ok = l > n - 1 ? without.empty() : without == detail::collect(n - 1, l);
         return truth(low_ok && with_top == detail::collect(n - 1, l - 1));
       },
       [](const Params&) { return Rational(1); }, {}});

  add({"EQ36", "|C_{n,l}| = C(n,l)", "", {axis("n", 0, times(1, 4, 12)), axis("l", 0, of("n"))}, {},
       [](const Params& p) { return Rational(detail::collect(p["n"], p["l"]).size()); },
       [](const Params& p) { return Rational(binomial(p["n"], p["l"])); }, {}});

  add({"EQ37", "base-n ranks of successive tuples strictly increase", "",
       {axis("n", 0, times(1, 4, 12)), axis("l", 0, of("n"))}, {},
       [](const Params& p) {
         const auto all = detail::collect(p["n"], p["l"]);
         std::size_t increasing = 0;
         for (std::size_t i = 1; i < all.size(); ++i) {
           increasing += rank_value(all[i - 1]) < rank_value(all[i]) ? 1 : 0;
         }
         return Rational(increasing);
       },
       [](const Params& p) { return Rational(binomial(p["n"], p["l"]) - 1); }, {}});

  // Higher derivatives

  add({"EQ46", "F_n^(l)(x) = l! sum_k Theta(n, C_{n,l,k}; x)", "compared coefficient by coefficient",
       {axis("n", 0, scale()), axis("l", 0, of("n", 1)), axis("j", 0, of("n"))}, {},
       [](const Params& p) { return detail::coefficient_at(deriv_poly_symbolic(p["n"], p["l"]), p["j"]); },
       [](const Params& p) { return detail::coefficient_at(deriv_poly_oracle(p["n"], p["l"]), p["j"]); }, {}});

  add({"EQ48", "F_n^(l)(x) = l! x^(n) sum_C prod_{j in C} 1/(x-j) away from poles", "",
       {axis("n", 0, scale()), axis("l", 0, of("n")), axis("p", -5, scale(5)), axis("q", 1, 3)},
       [](const Params& p) {
         const Rational x = detail::rational_point(p);
         return p["l"] == 0 || !(is_integer(x) && x >= 0 && x < p["n"]);
       },
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], detail::rational_point(p)); },
       [](const Params& p) { return forms::harmonic_direct(p["n"], p["l"], detail::rational_point(p)); }, {}});

  // Elementary symmetric harmonic sums

  add({"EQ50", "H_{n,l,r} = sum_{k=r+1}^{n-l+1} H_{n,l-1,k} / k", "",
       {axis("n", 0, scale(2)), axis("l", 1, of("n")), axis("r", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         Rational sum = 0;
         for (int k = p["r"] + 1; k <= p["n"] - p["l"] + 1; ++k) {
           sum += esh(p["n"], p["l"] - 1, k) / k;
         }
         return sum;
       },
       {}});

  add({"EQ52", "H_{n,l,r} = sum_{r<k_1<...<k_l<=n} 1/(k_1...k_l)", "",
       {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("r", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         Rational sum = 0;
         for (const auto& s : enumerate_subsets(p["n"] - p["r"], p["l"])) {
           Rational term = 1;
           for (int k : s.members()) {
             term /= k + p["r"] + 1;
           }
           sum += term;
         }
         return sum;
       },
       {}});

  add({"EQ53", "H_{n,l,r} = e_l(1/(r+1), ..., 1/n)", "",
       {axis("n", 0, times(1, 4, 12)), axis("l", 0, of("n")), axis("r", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         std::vector<Rational> values;
         for (int k = p["r"] + 1; k <= p["n"]; ++k) {
           values.push_back(Rational(1) / k);
         }
         return elementary_symmetric(p["l"], values);
       },
       {}});

  add({"EQ54", "H^(v)_{n,1,0} = sum_{k<=n} 1/k^v", "covers every power v in 1..3",
       {axis("n", 0, times(2, 4, 20)), axis("v", 1, 3)}, {},
       [](const Params& p) { return esh(p["n"], 1, 0, p["v"]); },
       [](const Params& p) {
         Rational sum = 0;
         for (int k = 1; k <= p["n"]; ++k) {
           sum += Rational(1) / power(Rational(k), p["v"]);
         }
         return sum;
       },
       {}});

  add({"EQ55", "H^(v)_{n,l,n-l} = 1 / (n^(l))^v", "the power of n is a falling power",
       {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("v", 1, 3)}, {},
       [](const Params& p) { return esh(p["n"], p["l"], p["n"] - p["l"], p["v"]); },
       [](const Params& p) { return Rational(1) / power(falling_power(p["n"], p["l"]), p["v"]); }, {}});

  add({"EQ56", "H^(v)_{n,l,r} = H^(v)_{n,l,r+1} + H^(v)_{n,l-1,r+1} / (r+1)^v", "",
       {axis("n", 0, scale(2)), axis("l", 1, of("n")), axis("r", 0, of("n")), axis("v", 1, 3)},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"], p["v"]); },
       [](const Params& p) {
         const int r = p["r"];
         return esh(p["n"], p["l"], r + 1, p["v"]) +
                esh(p["n"], p["l"] - 1, r + 1, p["v"]) / power(Rational(r + 1), p["v"]);
       },
       {}});

  add({"EQ57", "H^(v)_{n,l,r} = H^(v)_{n-1,l,r} + H^(v)_{n-1,l-1,r} / n^v", "",
       {axis("n", 1, scale(2)), axis("l", 1, of("n")), axis("r", 0, of("n")), axis("v", 1, 3)},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"], p["v"]); },
       [](const Params& p) {
         const int n = p["n"];
         return esh(n - 1, p["l"], p["r"], p["v"]) +
                esh(n - 1, p["l"] - 1, p["r"], p["v"]) / power(Rational(n), p["v"]);
       },
       {}});

  add({"EQ58", "H_{n+1,l,r+1} - H_{n,l,r} = (1/(n+1) - 1/(r+1)) H_{n,l-1,r+1}", "",
       {axis("n", 0, scale(2)), axis("l", 1, of("n")), axis("r", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"] + 1, p["l"], p["r"] + 1) - esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         return (Rational(1) / (p["n"] + 1) - Rational(1) / (p["r"] + 1)) * esh(p["n"], p["l"] - 1, p["r"] + 1);
       },
       {}});

  add({"EQ62", "H^(v)_{n,l,r} = sum_{k=r+1}^{n-l+1} H^(v)_{n,l-1,k} / k^v", "powers v in 2..3",
       {axis("n", 0, scale(2)), axis("l", 1, of("n")), axis("r", 0, of("n")), axis("v", 2, 3)},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"], p["v"]); },
       [](const Params& p) {
         Rational sum = 0;
         for (int k = p["r"] + 1; k <= p["n"] - p["l"] + 1; ++k) {
           sum += esh(p["n"], p["l"] - 1, k, p["v"]) / power(Rational(k), p["v"]);
         }
         return sum;
       },
       {}});

  // Symmetry and integral-point solutions

  add({"EQ67", "x^(n) = (-1)^n (n-1-x)^(n)", "",
       {axis("n", 0, scale(2)), axis("p", -8, scale(8)), axis("q", 1, 3)}, {},
       [](const Params& p) { return falling_power(detail::rational_point(p), p["n"]); },
       [](const Params& p) {
         return minus_one_pow(p["n"]) * falling_power(Rational(p["n"] - 1) - detail::rational_point(p), p["n"]);
       },
       {}});

  add({"EQ68", "F_n^(l)(m) = (-1)^(n-l) F_n^(l)(n-m-1)", "",
       {axis("n", 0, scale()), axis("l", 0, of("n", 2)), axis("m", -6, scale(6))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) {
         return minus_one_pow(p["n"] - p["l"]) * deriv_oracle(p["n"], p["l"], p["n"] - p["m"] - 1);
       },
       {}});

  add({"EQ70", "F_n^(l)(m) = l! m^(n) H_{m,l,m-n}, m >= n", "",
       {axis("n", 0, scale()), axis("l", 0, of("n", 2)), axis("m", of("n"), scale(8))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::harmonic_outer(p["n"], p["l"], p["m"]); }, {}});

  add({"EQ71", "F_n^(l)(m) = (-1)^(n-m-1) l! m! (n-m-1)! sum_k (-1)^k H^(2)_{n-m-1,k,0} H_{m,l-2k-1,n-m-1}",
       "valid for (n-1)/2 <= m < n; k runs while l-2k-1 >= 0",
       {axis("n", 1, scale(2)), axis("l", 0, of("n", 2)), axis("m", 0, of("n", -1))},
       [](const Params& p) { return detail::inner_region(p["n"], p["m"]); },
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::harmonic_inner(p["n"], p["l"], p["m"]); }, {}});

  // Stirling bridges

  add({"EQ72", "H_{n,l,0} n! = |s(n+1,l+1)|", "", {axis("n", 0, times(2, 4, 30)), axis("l", 0, of("n"))}, {},
       [](const Params& p) { return esh(p["n"], p["l"], 0) * Rational(factorial(p["n"])); },
       [](const Params& p) { return absolute(stirling1(p["n"] + 1, p["l"] + 1)); }, {}});

  add({"EQ73", "H_{n,l,r} = (-1)^(n+l)/n! sum_k A_{r,l-k+1} s(n+1,k)", "",
       {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("r", 0, 5)},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         Rational sum = 0;
         for (int k = 0; k <= p["l"] + 1; ++k) {
           sum += a_coefficient(p["r"], p["l"] - k + 1) * stirling1(p["n"] + 1, k);
         }
         return minus_one_pow(p["n"] + p["l"]) * sum / Rational(factorial(p["n"]));
       },
       {}});

  add({"EQ75", "sum_k A_{r,l-k+1} s(n+1,k) = sum_k (A_{r+1,l-k+1} - A_{r+1,l-k}/(r+1)) s(n+1,k)",
       "A with a negative column is zero", {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("r", 0, 5)}, {},
       [](const Params& p) {
         Rational sum = 0;
         for (int k = 1; k <= p["l"] + 1; ++k) {
           sum += a_coefficient(p["r"], p["l"] - k + 1) * stirling1(p["n"] + 1, k);
         }
         return sum;
       },
       [](const Params& p) {
         const int r = p["r"];
         Rational sum = 0;
         for (int k = 1; k <= p["l"] + 1; ++k) {
           const int col = p["l"] - k;
           const Rational lower = col >= 0 ? a_coefficient(r + 1, col) : Rational(0);
           sum += (a_coefficient(r + 1, col + 1) - lower / (r + 1)) * stirling1(p["n"] + 1, k);
         }
         return sum;
       },
       {}});

  add({"EQ76", "sum_{k=1}^{l+1} s(n+1,k) = (-1)^(n+l) n! H_{n,l,1}",
       "checked where n - l >= 1; at n = l = 0 the two sides are 1 and 0",
       {axis("n", 0, times(1, 4, 12)), axis("l", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["l"] >= 1; },
       [](const Params& p) {
         Rational sum = 0;
         for (int k = 1; k <= p["l"] + 1; ++k) {
           sum += stirling1(p["n"] + 1, k);
         }
         return sum;
       },
       [](const Params& p) {
         return minus_one_pow(p["n"] + p["l"]) * Rational(factorial(p["n"])) * esh(p["n"], p["l"], 1);
       },
       {}});

  add({"EQ77", "A_{r,k} = sum_j (-1)^(j+1) C(r,j) / j^k", "the recursive definition is the left side",
       {axis("r", 0, times(2, 0, 15)), axis("k", 0, times(2, 0, 15))}, {},
       [](const Params& p) { return a_coefficient(p["r"], p["k"]); },
       [](const Params& p) { return a_coefficient_closed_form(p["r"], p["k"]); }, {}});

  add({"EQ78", "H_{n,l,r} = (-1)^(n+l+r+1)/n^(n-r) sum_k S(-l+k-1,r) s(n+1,k)",
       "checked with sign (-1)^(n+l+r+1) for r >= 1; the sign (-1)^(n+1) fails, e.g. at n=1, l=0, r=1",
       {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("r", 1, 5)},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         const int n = p["n"];
         const int l = p["l"];
         const int r = p["r"];
         Rational sum = 0;
         for (int k = 0; k <= l + 1; ++k) {
           sum += stirling2(-l + k - 1, r) * stirling1(n + 1, k);
         }
         return minus_one_pow(n + l + r + 1) * sum / falling_power(n, n - r);
       },
       {}});

  add({"EQ79", "A_{r,k} = (-1)^(r+1) r! S(-k,r)", "", {axis("r", 1, scale(4, 12)), axis("k", 0, scale(4, 12))}, {},
       [](const Params& p) { return a_coefficient(p["r"], p["k"]); },
       [](const Params& p) { return minus_one_pow(p["r"] + 1) * Rational(factorial(p["r"])) * stirling2(-p["k"], p["r"]); },
       {}});

  add({"EQ80", "H_{n,l,r} = (-1)^(n+1)/n^(n-r) sum_k (-1)^k s(-r,l-k+1) s(n+1,k)", "",
       {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("r", 0, 5)},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]); },
       [](const Params& p) {
         const int n = p["n"];
         Rational sum = 0;
         for (int k = 0; k <= p["l"] + 1; ++k) {
           sum += minus_one_pow(k) * stirling1(-p["r"], p["l"] - k + 1) * stirling1(n + 1, k);
         }
         return minus_one_pow(n + 1) * sum / falling_power(n, n - p["r"]);
       },
       {}});

  add({"EQ81", "S(n,k) = (-1)^(n+k) s(-k,-n) with s(n,0) = [n = 0] on the negative side",
       "checked for n >= 1, where row 0 conventions do not enter",
       {axis("n", 1, scale(2, 10)), axis("k", 0, scale(2, 10))}, {},
       [](const Params& p) { return stirling2(p["n"], p["k"]); },
       [](const Params& p) {
         return minus_one_pow(p["n"] + p["k"]) * stirling1(-p["k"], -p["n"], Boundary::negative_negative);
       },
       {}});

  add({"EQ83", "s(n,0) = [n <= 0]/(-n)! and s(n+1,k) = s(n,k-1) - n s(n,k) across all rows",
       "k = 0 checks the boundary column, k >= 1 the recursion",
       {axis("n", [](const Params&, int max_n) { return -max_n - 2; }, scale()), axis("k", 0, scale(1))}, {},
       [](const Params& p) {
         const int n = p["n"];
         const int k = p["k"];
         return k == 0 ? stirling1(n, 0) : stirling1(n + 1, k);
       },
       [](const Params& p) {
         const int n = p["n"];
         const int k = p["k"];
         if (k == 0) {
           return n <= 0 ? Rational(1) / Rational(factorial(-n)) : Rational(0);
         }
         return stirling1(n, k - 1) - n * stirling1(n, k);
       },
       {}});

  add({"EQ85", "F_n^(l)(m) = l! sum_k (-1)^(m+k+1) s(n-m,l-k+1) s(m+1,k), m >= n", "",
       {axis("n", 0, scale()), axis("l", 0, of("n", 2)), axis("m", of("n"), scale(8))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::stirling_outer(p["n"], p["l"], p["m"]); }, {}});

  add({"EQ86",
       "F_n^(l)(m) = (-1)^n l! (p!)^2 sum_j (-1)^j s(m+1,j) sum_k (-1)^k s(-p,l-2k-j) H^(2)_{p,k,0}, p = n-m-1",
       "checked with prefactor (-1)^n l! ((n-m-1)!)^2; the bare (-1)^(nl) prefactor is wrong in magnitude, "
       "e.g. n=2, l=2, m=1 gives 1 where the derivative is 2",
       {axis("n", 1, scale(2)), axis("l", 0, of("n", 2)), axis("m", 0, of("n", -1))},
       [](const Params& p) { return detail::inner_region(p["n"], p["m"]); },
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::paired_expansion(p["n"], p["l"], p["m"]); }, {}});

  add({"EQ87", "(-1)^m (m!)^2 sum_{k=0}^m (-1)^k s(-m,d-2k) H^(2)_{m,k,0} = s(m+1,d+1), d = l - j",
       "checked with prefactor (-1)^m; the (-1)^(l+j+1) prefactor differs by (-1)^(m+l+j+1)",
       {axis("m", 0, scale()), axis("d", -2, [](const Params& p, int) { return 2 * p["m"] + 3; })}, {},
       [](const Params& p) {
         const int m = p["m"];
         Rational sum = 0;
         for (int k = 0; k <= m; ++k) {
           sum += minus_one_pow(k) * stirling1(-m, p["d"] - 2 * k) * esh(m, k, 0, 2);
         }
         const Integer mf = factorial(m);
         return minus_one_pow(m) * Rational(mf * mf) * sum;
       },
       [](const Params& p) { return stirling1(p["m"] + 1, p["d"] + 1); }, {}});

  add({"EQ88", "F_n^(l)(m) = (-1)^(m+1) l! sum_j (-1)^j s(n-m,l-j+1) s(m+1,j), (n-1)/2 <= m < n", "",
       {axis("n", 1, scale(2)), axis("l", 0, of("n", 2)), axis("m", 0, of("n", -1))},
       [](const Params& p) { return detail::inner_region(p["n"], p["m"]); },
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::stirling_inner(p["n"], p["l"], p["m"]); }, {}});

  add({"EQ89", "F_n^(l)(m) = l! sum_k (-1)^(m+k+1) s(n-m,l-k+1) s(m+1,k)", "",
       {axis("n", 0, scale()), axis("l", 0, of("n", 2)), axis("m", -6, scale(6))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::stirling_unified(p["n"], p["l"], p["m"]); }, {}});

  add({"EQ90", "F_n^(l)(m) = l! sum_k (-1)^(m+l+k) s(m+1,l-k+1) s(n-m,k)", "",
       {axis("n", 0, scale()), axis("l", 0, of("n", 2)), axis("m", -6, scale(6))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return forms::stirling_unified_alt(p["n"], p["l"], p["m"]); }, {}});

  // Taylor translation family

  add({"EQ91", "x^(n) = sum_l (x-m)^l / l! F_n^(l)(m)", "",
       {axis("n", 0, scale()), axis("m", -4, scale(4)), axis("p", -4, scale(4)), axis("q", 1, 2)}, {},
       [](const Params& p) { return falling_power(detail::rational_point(p), p["n"]); },
       [](const Params& p) {
         const Rational shift = detail::rational_point(p) - p["m"];
         Rational sum = 0;
         for (int l = 0; l <= p["n"]; ++l) {
           sum += power(shift, l) / Rational(factorial(l)) * deriv_stirling(p["n"], l, p["m"]);
         }
         return sum;
       },
       {}});

  add({"EQ92", "F^(l')(m')/l'! = sum_l C(l,l') F^(l)(m)/l! (m'-m)^(l-l')", "",
       {axis("n", 0, scale()), axis("lp", 0, of("n")), axis("m", -4, of("n", 4)), axis("mp", -4, of("n", 4))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["lp"], p["mp"]); },
       [](const Params& p) { return taylor_translate(p["n"], p["lp"], p["m"], p["mp"]); }, {}});

  {
    auto lhs93 = [](const Params& p) {
      const int n = p["n"];
      const int m = p["m"];
      const int r = p["r"];
      const int lp = p["lp"];
      Rational total = 0;
      for (int l = lp; l <= n; ++l) {
        Rational inner = 0;
        for (int k = 0; k <= l + 1; ++k) {
          inner += minus_one_pow(k) * stirling1(n - m + 1, k) * stirling1(m, l - k + 1);
        }
        total += Rational(binomial(l, lp)) * inner * power(Rational(r), l - lp);
      }
      return total;
    };
    auto rhs93 = [](const Params& p) {
      const int n = p["n"];
      const int m = p["m"];
      const int r = p["r"];
      const int lp = p["lp"];
      Rational sum = 0;
      for (int k = 0; k <= lp + 1; ++k) {
        sum += minus_one_pow(k) * stirling1(n + r - m + 1, lp - k + 1) * stirling1(m - r, k);
      }
      return minus_one_pow(r + lp + 1) * sum;
    };
    auto sample93 = [](int max_n) {
      std::vector<Params> out;
      std::mt19937 rng(93);
      const int top = std::min(max_n, 8);
      for (int i = 0; i < 40; ++i) {
        const int n = detail::draw(rng, 0, top);
        const int m = detail::draw(rng, -4, n + 4);
        const int r = detail::draw(rng, -4, 6);
        const int lp = detail::draw(rng, 0, n);
        out.push_back({{"n", n}, {"m", m}, {"r", r}, {"lp", lp}});
      }
      return out;
    };
    add({"EQ93",
         "sum_k (-1)^k s(n-m+1,k) sum_l C(l,l') s(m,l-k+1) r^(l-l') = "
         "(-1)^(r+l'+1) sum_k (-1)^k s(n+r-m+1,l'-k+1) s(m-r,k)",
         "the double sum runs over l' <= l <= n and 0 <= k <= l+1; plus 40 fixed-seed samples with n <= 8",
         {axis("n", 0, scale(0, 5)), axis("m", -3, of("n", 3)), axis("r", -3, 4), axis("lp", 0, of("n"))}, {},
         lhs93, rhs93, sample93});
  }

  add({"EQ94", "sum_k C(k,l') s(n+1,k+1) n^(k-l') = |s(n,l')|", "", {axis("n", 0, scale(2)), axis("lp", 0, of("n"))}, {},
       [](const Params& p) {
         const int n = p["n"];
         Rational sum = 0;
         for (int k = p["lp"]; k <= n; ++k) {
           sum += Rational(binomial(k, p["lp"])) * stirling1(n + 1, k + 1) * power(Rational(n), k - p["lp"]);
         }
         return sum;
       },
       [](const Params& p) { return absolute(stirling1(p["n"], p["lp"])); }, {}});

  add({"EQ95", "sum_k C(k,l') s(n+1,k+1) 2^(k-l') = s(n-1,l') + s(n-1,l'-1)", "",
       {axis("n", 1, scale(2)), axis("lp", 0, of("n"))}, {},
       [](const Params& p) {
         const int n = p["n"];
         Rational sum = 0;
         for (int k = p["lp"]; k <= n; ++k) {
           sum += Rational(binomial(k, p["lp"])) * stirling1(n + 1, k + 1) * power(Rational(2), k - p["lp"]);
         }
         return sum;
       },
       [](const Params& p) { return stirling1(p["n"] - 1, p["lp"]) + stirling1(p["n"] - 1, p["lp"] - 1); }, {}});

  add({"EQ96", "H_{n+r,l',r} = 1/(n+r)^(n) sum_k C(k,l') |s(n+1,k+1)| r^(k-l') for natural r",
       "the prefactor is read as a falling power",
       {axis("n", 0, scale()), axis("lp", 0, of("n")), axis("r", 0, scale())}, {},
       [](const Params& p) { return esh(p["n"] + p["r"], p["lp"], p["r"]); },
       [](const Params& p) { return detail::shifted_harmonic_series(p["n"], p["lp"], p["r"]); }, {}});

  add({"EQ97", "H_{n,l',m}(r) = H_{n+m+r,l',m+r} for natural r", "",
       {axis("n", 0, scale()), axis("lp", 0, of("n")), axis("m", 0, scale(0, 6)), axis("r", 0, scale(0, 5))}, {},
       [](const Params& p) { return esh_extended(p["n"], p["lp"], p["m"], p["r"]); },
       [](const Params& p) { return esh(p["n"] + p["m"] + p["r"], p["lp"], p["m"] + p["r"]); }, {}});

  add({"EQ98",
       "sum_l C(l,l') H_{n+m,l,m} r^(l-l') = (-1)^(n+m+l'+r)/(n+m)^(n) sum_k (-1)^k s(n+m+r+1,l'-k+1) s(-m-r,k)", "",
       {axis("n", 0, scale(0, 7)), axis("lp", 0, of("n")), axis("m", 0, scale(0, 5)), axis("r", 0, 4)}, {},
       [](const Params& p) { return evaluate(esh_poly(p["n"], p["lp"], p["m"]), p["r"]); },
       [](const Params& p) {
         const int n = p["n"];
         const int m = p["m"];
         const int r = p["r"];
         const int lp = p["lp"];
         Rational sum = 0;
         for (int k = 0; k <= lp + 1; ++k) {
           sum += minus_one_pow(k) * stirling1(n + m + r + 1, lp - k + 1) * stirling1(-m - r, k);
         }
         return minus_one_pow(n + m + lp + r) * sum / falling_power(n + m, n);
       },
       {}});

  add({"EQ99", "H_{n,l',m}(r) continues to rational r; at m = 0 it matches the harmonic series form", "",
       {axis("n", 0, scale()), axis("lp", 0, of("n")), axis("p", -6, scale(6)), axis("q", 1, 3)},
       [](const Params& p) { return falling_power(Rational(p["n"]) + detail::rational_point(p), p["n"]) != 0; },
       [](const Params& p) { return esh_extended(p["n"], p["lp"], 0, detail::rational_point(p)); },
       [](const Params& p) { return detail::shifted_harmonic_series(p["n"], p["lp"], detail::rational_point(p)); }, {}});

  add({"EQ100", "sum_l C(l,l') H_{n+m,l,m} = (n+m+1)/(m+1) H_{n+m+1,l',m+1}", "",
       {axis("n", 0, scale()), axis("lp", 0, of("n")), axis("m", 0, scale())}, {},
       [](const Params& p) { return evaluate(esh_poly(p["n"], p["lp"], p["m"]), 1); },
       [](const Params& p) {
         const int n = p["n"];
         const int m = p["m"];
         return Rational(n + m + 1) / (m + 1) * esh(n + m + 1, p["lp"], m + 1);
       },
       {}});

  add({"EQ101", "sum_l H_{n+m,l,m} = (n+m+1)/(m+1)", "", {axis("n", 0, scale(2, 10)), axis("m", 0, scale(2, 10))}, {},
       [](const Params& p) {
         Rational sum = 0;
         for (int l = 0; l <= p["n"]; ++l) {
           sum += esh(p["n"] + p["m"], l, p["m"]);
         }
         return sum;
       },
       [](const Params& p) { return Rational(p["n"] + p["m"] + 1) / (p["m"] + 1); }, {}});

  add({"EQ102", "sum_l (-1)^l H_{n+m,l,m} = m/(n+m) for m >= 1, delta_n for m = 0", "",
       {axis("n", 0, scale(2, 10)), axis("m", 0, scale(2, 10))}, {},
       [](const Params& p) {
         Rational sum = 0;
         for (int l = 0; l <= p["n"]; ++l) {
           sum += minus_one_pow(l) * esh(p["n"] + p["m"], l, p["m"]);
         }
         return sum;
       },
       [](const Params& p) {
         return p["m"] >= 1 ? Rational(p["m"]) / (p["n"] + p["m"]) : Rational(kronecker_delta(p["n"]));
       },
       {}});

  add({"EQ103", "sum_l C(l,l') H_{n+m,l,m} (-m)^(l-l') = |s(n+1,l'+1)| / (n+m)^(n)", "",
       {axis("n", 0, scale()), axis("lp", 0, of("n")), axis("m", 0, scale())}, {},
       [](const Params& p) { return evaluate(esh_poly(p["n"], p["lp"], p["m"]), -p["m"]); },
       [](const Params& p) {
         return absolute(stirling1(p["n"] + 1, p["lp"] + 1)) / falling_power(p["n"] + p["m"], p["n"]);
       },
       {}});

  add({"EQ104", "sum_l H_{n+m,l,m} (-m)^l = 1/C(n+m,n)", "", {axis("n", 0, scale(2, 10)), axis("m", 0, scale(2, 10))}, {},
       [](const Params& p) {
         Rational sum = 0;
         for (int l = 0; l <= p["n"]; ++l) {
           sum += esh(p["n"] + p["m"], l, p["m"]) * power(Rational(-p["m"]), l);
         }
         return sum;
       },
       [](const Params& p) { return Rational(1) / Rational(binomial(p["n"] + p["m"], p["n"])); }, {}});

  add({"EQ105", "sum_l H_{n+m,l,m} (-m-1)^l = delta_n", "", {axis("n", 0, scale(2, 10)), axis("m", 0, scale(2, 10))}, {},
       [](const Params& p) {
         Rational sum = 0;
         for (int l = 0; l <= p["n"]; ++l) {
           sum += esh(p["n"] + p["m"], l, p["m"]) * power(Rational(-p["m"] - 1), l);
         }
         return sum;
       },
       [](const Params& p) { return Rational(kronecker_delta(p["n"])); }, {}});

  // r-Stirling numbers and complete homogeneous polynomials

  add({"EQ106", "[n+1, n-k+1]_r = e_k(r, ..., n)", "the right side is read off prod_{j=r}^n (x + j)",
       {axis("n", 0, scale(2)), axis("r", 1, of("n", 1)), axis("k", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["r"] + 1 >= p["k"]; },
       [](const Params& p) { return Rational(r_stirling1_bracket(p["n"] + 1, p["n"] - p["k"] + 1, p["r"])); },
       [](const Params& p) {
         std::vector<Rational> roots;
         for (int j = p["r"]; j <= p["n"]; ++j) {
           roots.emplace_back(-j);
         }
         return detail::coefficient_at(detail::product_of_linear(roots), p["n"] - p["r"] + 1 - p["k"]);
       },
       {}});

  add({"EQ107", "H_{n,l,r} n^(n-r) = [n+1, l+r+1]_{r+1}", "",
       {axis("n", 0, scale(2)), axis("l", 0, of("n")), axis("r", 0, of("n"))},
       [](const Params& p) { return p["n"] - p["l"] >= p["r"]; },
       [](const Params& p) { return esh(p["n"], p["l"], p["r"]) * falling_power(p["n"], p["n"] - p["r"]); },
       [](const Params& p) { return Rational(r_stirling1_bracket(p["n"] + 1, p["l"] + p["r"] + 1, p["r"] + 1)); }, {}});

  add({"EQ108", "F_n^(l)(m) = l! [m+1, l+m-n+1]_{m-n+1}, m >= n", "",
       {axis("n", 0, scale()), axis("l", 0, of("n", 2)), axis("m", of("n"), scale(8))}, {},
       [](const Params& p) { return deriv_oracle(p["n"], p["l"], p["m"]); },
       [](const Params& p) { return r_stirling_form(p["n"], p["l"], p["m"]); }, {}});

  add({"EQ111", "S(n+k,k) = h_n(1, ..., k)", "", {axis("n", 0, scale(2, 10)), axis("k", 0, scale(2, 10))}, {},
       [](const Params& p) { return stirling2(p["n"] + p["k"], p["k"]); },
       [](const Params& p) { return complete_homogeneous(p["n"], detail::integer_values(1, p["k"])); }, {}});

  add({"EQ112", "(-1)^(k-1) k! S(-n,k) = (-1)^n k! s(-k,n) = h_n(1, 1/2, ..., 1/k)",
       "form 0 is the second-kind expression, form 1 the first-kind one",
       {axis("n", 0, scale(2, 10)), axis("k", 1, scale(2, 10)), axis("form", 0, 1)}, {},
       [](const Params& p) {
         const int n = p["n"];
         const int k = p["k"];
         const Rational kf(factorial(k));
         return p["form"] == 0 ? minus_one_pow(k - 1) * kf * stirling2(-n, k) : minus_one_pow(n) * kf * stirling1(-k, n);
       },
       [](const Params& p) { return complete_homogeneous(p["n"], detail::unit_fractions(p["k"])); }, {}});

  return c;
}

/// Where each in-scope reference equation is exercised: a catalog id, or an operation
/// whose contract is the equation itself.
struct CoverageEntry {
  int equation;
  std::string_view owner;
};

inline constexpr CoverageEntry coverage_table[] = {
    {1, "op:deriv_at"},
    {2, "op:noncentral_stirling"},
    {4, "EQ4"},
    {5, "EQ5"},
    {6, "op:elementary_symmetric"},
    {7, "EQ7"},
    {8, "EQ8"},
    {9, "EQ9"},
    {11, "EQ11"},
    {12, "EQ12"},
    {13, "EQ13"},
    {14, "op:MissingFactorSet"},
    {15, "op:theta_coefficients"},
    {16, "EQ16"},
    {17, "EQ17"},
    {18, "EQ18"},
    {19, "EQ19"},
    {20, "EQ20"},
    {21, "EQ21"},
    {22, "EQ22"},
    {23, "EQ23"},
    {24, "EQ24"},
    {25, "EQ22"},
    {26, "EQ23"},
    {27, "EQ27"},
    {28, "op:enumerate_subsets"},
    {29, "op:enumerate_subsets"},
    {30, "EQ30"},
    {31, "EQ31"},
    {32, "EQ34"},
    {33, "EQ34"},
    {34, "EQ34"},
    {35, "EQ36"},
    {36, "EQ36"},
    {37, "EQ37"},
    {38, "EQ46"},
    {39, "EQ46"},
    {40, "EQ46"},
    {41, "EQ46"},
    {42, "EQ46"},
    {43, "EQ46"},
    {44, "EQ46"},
    {45, "EQ46"},
    {46, "EQ46"},
    {47, "EQ13"},
    {48, "EQ48"},
    {49, "EQ48"},
    {50, "EQ50"},
    {51, "op:esh"},
    {52, "EQ52"},
    {53, "EQ53"},
    {54, "EQ54"},
    {55, "EQ55"},
    {56, "EQ56"},
    {57, "EQ57"},
    {58, "EQ58"},
    {59, "EQ57"},
    {60, "EQ57"},
    {61, "op:generalized_harmonic"},
    {62, "EQ62"},
    {63, "EQ54"},
    {64, "EQ55"},
    {65, "EQ56"},
    {66, "EQ57"},
    {67, "EQ67"},
    {68, "EQ68"},
    {69, "EQ70"},
    {70, "EQ70"},
    {71, "EQ71"},
    {72, "EQ72"},
    {73, "EQ73"},
    {74, "EQ77"},
    {75, "EQ75"},
    {76, "EQ76"},
    {77, "EQ77"},
    {78, "EQ78"},
    {79, "EQ79"},
    {80, "EQ80"},
    {81, "EQ81"},
    {82, "op:stirling2"},
    {83, "EQ83"},
    {84, "EQ81"},
    {85, "EQ85"},
    {86, "EQ86"},
    {87, "EQ87"},
    {88, "EQ88"},
    {89, "EQ89"},
    {90, "EQ90"},
    {91, "EQ91"},
    {92, "EQ92"},
    {93, "EQ93"},
    {94, "EQ94"},
    {95, "EQ95"},
    {96, "EQ96"},
    {97, "EQ97"},
    {98, "EQ98"},
    {99, "EQ99"},
    {100, "EQ100"},
    {101, "EQ101"},
    {102, "EQ102"},
    {103, "EQ103"},
    {104, "EQ104"},
    {105, "EQ105"},
    {106, "EQ106"},
    {107, "EQ107"},
    {108, "EQ108"},
    {109, "op:esh_extended"},
    {110, "op:complete_homogeneous"},
    {111, "EQ111"},
    {112, "EQ112"},
};

namespace detail {

inline constexpr std::array<int, 2> excluded_equations = {3, 10};

consteval bool coverage_is_exact() {
  for (int eq = 1; eq <= 112; ++eq) {
    bool excluded = false;
    for (int x : excluded_equations) {
      excluded = excluded || x == eq;
    }
    int hits = 0;
    for (const auto& entry : coverage_table) {
      hits += entry.equation == eq ? 1 : 0;
    }
    if (hits != (excluded ? 0 : 1)) {
      return false;
    }
  }
  for (const auto& entry : coverage_table) {
    if (entry.equation < 1 || entry.equation > 112) {
      return false;
    }
  }
  return true;
}

static_assert(coverage_is_exact(), "every in-scope equation must be covered exactly once");

inline int id_number(std::string_view id) {
  int value = 0;
  std::from_chars(id.data() + 2, id.data() + id.size(), value);
  return value;
}

inline void walk(const IdentitySpec& spec, int max_n, std::size_t depth, Params& params,
                 const std::function<void(const Params&)>& visit) {
  if (depth == spec.axes.size()) {
    visit(params);
    return;
  }
  const auto& ax = spec.axes[depth];
  const int lo = ax.lo(params, max_n);
  const int hi = ax.hi(params, max_n);
  for (int v = lo; v <= hi; ++v) {
    params.push(ax.name, v);
    walk(spec, max_n, depth + 1, params, visit);
    params.pop();
  }
}

}  // namespace detail

/// Evaluates both sides at every valid grid point and sample; never throws.
inline IdentityReport run_identity(const IdentitySpec& spec, int max_n) {
  IdentityReport report{spec.id, spec.statement, spec.note, 0, 0, std::nullopt};
  auto check = [&](const Params& p) {
    Witness w{p, std::nullopt, std::nullopt, {}};
    try {
      if (spec.valid && !spec.valid(p)) {
        return;
      }
      ++report.checked;
      w.lhs = spec.lhs(p);
      w.rhs = spec.rhs(p);
      if (*w.lhs == *w.rhs) {
        ++report.passed;
        return;
      }
    } catch (const std::exception& e) {
      w.error = e.what();
    }
    if (!report.first_failure) {
      report.first_failure = std::move(w);
    }
  };
  Params params;
  detail::walk(spec, max_n, 0, params, check);
  if (spec.samples) {
    for (const auto& p : spec.samples(max_n)) {
      check(p);
    }
  }
  return report;
}

inline IdentityReport run_identity(const IdentitySpec& spec) { return run_identity(spec, 10); }

/// Runs the catalog (or the ids listed in `only`) in parallel; reports come back ordered by
/// equation number. Unknown ids in `only` raise invalid_argument.
inline std::vector<IdentityReport> run_all(int max_n, const std::vector<std::string>& only = {}) {
  require_natural(max_n, "max_n");
  auto catalog = identity_catalog();
  if (!only.empty()) {
    std::set<std::string> wanted(only.begin(), only.end());
    for (const auto& id : wanted) {
      const bool known = std::any_of(catalog.begin(), catalog.end(), [&](const auto& s) { return s.id == id; });
      if (!known) {
        throw std::invalid_argument("unknown identity id: " + id);
      }
    }
    std::erase_if(catalog, [&](const auto& s) { return !wanted.contains(s.id); });
  }
  std::sort(catalog.begin(), catalog.end(),
            [](const auto& a, const auto& b) { return detail::id_number(a.id) < detail::id_number(b.id); });

  std::vector<IdentityReport> reports(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      reports[i] = run_identity(catalog[i], max_n);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    worker();
  }
  return reports;
}

}  // namespace ffcalc
