#pragma once

#include "ffcalc/numeric.hpp"

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffcalc {

/**
 * A strictly increasing selection of factor indices from {0, ..., n-1}.
 *
 * Identifies which linear factors (x - k) are removed from the falling factorial of
 * order n. The constructor rejects repeated, unsorted or out-of-range members.
 */
class MissingFactorSet {
 public:
  MissingFactorSet() = default;

  MissingFactorSet(int universe, std::vector<int> members) : n_(universe), members_(std::move(members)) {
    require_natural(n_, "universe size");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] < 0 || members_[i] >= n_) {
        throw std::domain_error("missing factor " + std::to_string(members_[i]) + " outside [0, " +
                                std::to_string(n_ - 1) + "]");
      }
      if (i > 0 && members_[i] <= members_[i - 1]) {
        throw std::domain_error("missing factors must be strictly increasing");
      }
    }
  }

  int universe() const noexcept { return n_; }
  std::span<const int> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(int k) const noexcept {
    for (int m : members_) {
      if (m == k) {
        return true;
      }
    }
    return false;
  }

  /// The same members over a different universe (used when n grows to n+1).
  MissingFactorSet in_universe(int universe) const { return MissingFactorSet(universe, members_); }

  /// The first `length` members, same universe.
  MissingFactorSet prefix(std::size_t length) const {
    if (length > members_.size()) {
      throw std::out_of_range("prefix longer than the set");
    }
    return MissingFactorSet(n_, std::vector<int>(members_.begin(), members_.begin() + length));
  }

  friend bool operator==(const MissingFactorSet&, const MissingFactorSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> members_;
};

inline std::string to_string(const MissingFactorSet& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(s.members()[i]);
  }
  return out + ">";
}

/**
 * Resumable lexicographic enumerator of the l-subsets of {0, ..., n-1}.
 *
 * Holds the index state of the classic "odometer" walk: find the rightmost index
 * that is below its upper limit n-l+i, bump it, and reset everything to its right to
 * the smallest increasing continuation. The first call to next() yields <0, ..., l-1>;
 * l = 0 yields the empty selection once.
 *
 * The k-th yielded item (1-based) is the k-th combination C_{n,l,k}; iteration itself is
 * 0-based, so item i of the range corresponds to k = i + 1.
 */
class SubsetEnumerator {
 public:
  SubsetEnumerator(int n, int l) : n_(n), l_(l) {
    require_natural(n, "universe size");
    require_natural(l, "subset size");
    if (l > n) {
      throw std::domain_error("cannot choose " + std::to_string(l) + " of " + std::to_string(n));
    }
    upper_.resize(static_cast<std::size_t>(l));
    current_.resize(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
      upper_[static_cast<std::size_t>(i)] = n - l + i;
      current_[static_cast<std::size_t>(i)] = i;
    }
  }

  std::optional<MissingFactorSet> next() {
    if (done_) {
      return std::nullopt;
    }
    if (!started_) {
      started_ = true;
      return MissingFactorSet(n_, current_);
    }
    int i = l_ - 1;
    while (i >= 0 && current_[static_cast<std::size_t>(i)] >= upper_[static_cast<std::size_t>(i)]) {
      --i;
    }
    if (i < 0) {
      done_ = true;
      return std::nullopt;
    }
    const auto pivot = static_cast<std::size_t>(i);
    ++current_[pivot];
    for (std::size_t j = pivot + 1; j < current_.size(); ++j) {
      current_[j] = current_[pivot] + static_cast<int>(j - pivot);
    }
    return MissingFactorSet(n_, current_);
  }

  int universe() const noexcept { return n_; }
  int subset_size() const noexcept { return l_; }

 private:
  int n_;
  int l_;
  std::vector<int> upper_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Single-pass range over a SubsetEnumerator, usable in range-for.
class SubsetRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MissingFactorSet;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(SubsetEnumerator* source) : source_(source) { advance(); }

    const MissingFactorSet& operator*() const { return *current_; }
    const MissingFactorSet* operator->() const { return &*current_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_.has_value(); }

   private:
    void advance() { current_ = source_->next(); }

    SubsetEnumerator* source_ = nullptr;
    std::optional<MissingFactorSet> current_;
  };

  SubsetRange(int n, int l) : enumerator_(n, l) {}

  iterator begin() { return iterator(&enumerator_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  SubsetEnumerator enumerator_;
};

/// All l-subsets of {0, ..., n-1} in lexicographic order, produced lazily.
inline SubsetRange enumerate_subsets(int n, int l) { return SubsetRange(n, l); }

/// Members read as base-n digits, first member most significant.
inline Integer rank_value(const MissingFactorSet& s) {
  Integer value = 0;
  for (int k : s.members()) {
    value = value * s.universe() + k;
  }
  return value;
}

}  // namespace ffcalc
