#pragma once

// IMO 2020 Problem 5: if the arithmetic mean of every pair of cards equals the
// geometric mean of some collection of cards, the cards are all equal (for
// every deck size). This module decides the property exactly and searches
// small parameter spaces for counterexamples (the theorem predicts none).
//
// AM = GM is tested in the fraction-free integer form
//   (a_i + a_j)^m == 2^m * a_{i1} * ... * a_{im},
// so no rational or real arithmetic is involved. A "collection" is a set of
// distinct card indices; values may repeat across cards.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "imo2020/common.hpp"

namespace imo::deck {

using BigInt = boost::multiprecision::cpp_int;

// Values are kept sorted descending on construction.
struct Deck {
  std::vector<BigInt> values;

  Deck() = default;
  explicit Deck(std::vector<BigInt> vals) : values(std::move(vals)) {
    if (values.size() < 2) throw validation_error("deck needs more than one card");
    for (const BigInt& v : values)
      if (v < 1) throw validation_error("card values must be positive");
    std::sort(values.begin(), values.end(), std::greater<BigInt>());
  }

  int size() const { return static_cast<int>(values.size()); }
};

using IndexPair = std::pair<int, int>;

struct PropertyReport {
  bool satisfies = false;
  std::map<IndexPair, std::vector<int>> witnesses;
  std::optional<IndexPair> failing_pair;
};

inline Deck normalize_deck(const Deck& d) {
  BigInt g = 0;
  for (const BigInt& v : d.values) g = boost::multiprecision::gcd(g, v);
  std::vector<BigInt> vals;
  vals.reserve(d.values.size());
  for (const BigInt& v : d.values) vals.push_back(v / g);
  return Deck(std::move(vals));
}

namespace detail {

// Enumerates index subsets of {0..n-1} of size m in lexicographic order,
// calling fn on each until fn returns true. Returns whether fn accepted one.
template <typename Fn>
bool for_each_combination(int n, int m, Fn&& fn) {
  std::vector<int> idx(m);
  for (int i = 0; i < m; i++) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) i--;
    if (i < 0) return false;
    idx[i]++;
    for (int j = i + 1; j < m; j++) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Smallest-size, then lexicographically smallest subset of card indices whose
// GM equals the AM of cards i and j, or nullopt. Subsets whose max value is
// below the AM or min value above it cannot work (GM lies between min and max)
// and are skipped.
inline std::optional<std::vector<int>> gm_witness(int i, int j, const Deck& d) {
  int n = d.size();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw validation_error("gm_witness: bad indices");
  BigInt twice_am = d.values[i] + d.values[j];  // 2 * AM

  std::optional<std::vector<int>> found;
  for (int m = 1; m <= n && !found; m++) {
    detail::for_each_combination(n, m, [&](const std::vector<int>& idx) {
      // values sorted descending: idx.front() holds the max, idx.back() the min
      if (2 * d.values[idx.front()] < twice_am) return false;
      if (2 * d.values[idx.back()] > twice_am) return false;
      BigInt lhs = 1, rhs = 1;
      for (int k = 0; k < m; k++) {
        lhs *= twice_am;
        rhs *= 2 * d.values[idx[k]];
      }
      if (lhs == rhs) {
        found = idx;
        return true;
      }
      return false;
    });
  }
  return found;
}

inline PropertyReport deck_satisfies_property(const Deck& d) {
  PropertyReport rep;
  int n = d.size();
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      auto w = gm_witness(i, j, d);
      if (!w) {
        rep.satisfies = false;
        rep.failing_pair = IndexPair{i, j};
        return rep;
      }
      rep.witnesses[{i, j}] = *w;
    }
  rep.satisfies = true;
  return rep;
}

// All non-constant decks (up to reordering) with values in [1, max_value]
// that satisfy the property. The theorem predicts the empty list. Search caps
// keep the enumeration at desk scale.
inline std::vector<Deck> search_nonconstant(int n, int max_value) {
  if (n < 2 || n > 4)
    throw validation_error("search_nonconstant: n capped at 4");
  if (max_value < 1 || max_value > 12)
    throw validation_error("search_nonconstant: max_value capped at 12");

  std::vector<Deck> hits;
  std::vector<BigInt> vals(n);
  // non-increasing tuples; vals[0] is the largest
  auto rec = [&](auto&& self, int pos, int hi) -> void {
    if (pos == n) {
      if (vals.front() == vals.back()) return;  // constant deck
      Deck d(vals);
      if (deck_satisfies_property(d).satisfies) hits.push_back(d);
      return;
    }
    for (int v = hi; v >= 1; v--) {
      vals[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, max_value);
  return hits;
}

}  // namespace imo::deck
