#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "imo2020/deck.hpp"

using namespace imo::deck;

namespace {

Deck make(std::initializer_list<long long> vals) {
  std::vector<BigInt> v;
  for (long long x : vals) v.push_back(x);
  return Deck(std::move(v));
}

// Independent check of the fraction-free identity for a claimed witness.
bool witness_valid(const Deck& d, int i, int j, const std::vector<int>& w) {
  if (w.empty()) return false;
  BigInt lhs = 1, rhs = 1;
  for (size_t k = 0; k < w.size(); k++) {
    lhs *= d.values[i] + d.values[j];
    rhs *= 2 * d.values[w[k]];
  }
  return lhs == rhs;
}

BigInt smallest_prime_divisor(BigInt x) {
  for (BigInt p = 2; p * p <= x; p++)
    if (x % p == 0) return p;
  return x;
}

}  // namespace

TEST_CASE("deck construction and normalization") {
  SECTION("sorted descending on construction") {
    Deck d = make({6, 10, 4});
    REQUIRE(d.values == std::vector<BigInt>{10, 6, 4});
  }
  SECTION("gcd division") {
    Deck d = normalize_deck(make({6, 10, 4}));
    REQUIRE(d.values == std::vector<BigInt>{5, 3, 2});
    REQUIRE(normalize_deck(make({7, 7})).values == std::vector<BigInt>{1, 1});
  }
  SECTION("normalized gcd is 1") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> val(1, 1000000);
    for (int rep = 0; rep < 200; rep++) {
      std::vector<BigInt> vals;
      for (int i = 0; i < 5; i++) vals.push_back(val(rng));
      Deck d = normalize_deck(Deck(vals));
      BigInt g = 0;
      for (const BigInt& v : d.values) g = boost::multiprecision::gcd(g, v);
      REQUIRE(g == 1);
    }
  }
  SECTION("bad decks rejected") {
    REQUIRE_THROWS_AS(Deck(std::vector<BigInt>{5}), imo::validation_error);
    REQUIRE_THROWS_AS(Deck(std::vector<BigInt>{5, 0}), imo::validation_error);
  }
}

TEST_CASE("gm_witness") {
  SECTION("constant deck: singleton witness") {
    Deck d = make({5, 5, 5});
    auto w = gm_witness(0, 1, d);
    REQUIRE(w);
    REQUIRE(*w == std::vector<int>{0});  // smallest size, lexicographically first
  }
  SECTION("{2,1}: no subset matches AM 3/2") {
    // candidates: 3 != 2*2, 3 != 2*1, 3^2 != 2^2 * 2
    REQUIRE_FALSE(gm_witness(0, 1, make({1, 2})).has_value());
  }
  SECTION("{4,2,1}, pair (4,1): AM 5/2 has no witness") {
    Deck d = make({4, 1, 2});
    REQUIRE(d.values == std::vector<BigInt>{4, 2, 1});
    REQUIRE_FALSE(gm_witness(0, 2, d).has_value());
  }
  SECTION("singleton witness on another card") {
    // AM(27, 3) = 15, matched by the card of value 15
    Deck d = make({27, 3, 9, 15});
    REQUIRE(d.values == std::vector<BigInt>{27, 15, 9, 3});
    auto w = gm_witness(0, 3, d);  // values 27 and 3
    REQUIRE(w);
    REQUIRE(witness_valid(d, 0, 3, *w));
    REQUIRE(*w == std::vector<int>{1});
  }
  SECTION("two-card witness") {
    // AM(16, 2) = 9 = sqrt(27 * 3); fraction-free: (16+2)^2 == 4 * 27 * 3
    Deck d = make({2, 16, 27, 3});
    REQUIRE(d.values == std::vector<BigInt>{27, 16, 3, 2});
    auto w = gm_witness(1, 3, d);  // values 16 and 2
    REQUIRE(w);
    REQUIRE(witness_valid(d, 1, 3, *w));
    REQUIRE(*w == std::vector<int>{0, 2});  // cards 27 and 3
  }
  SECTION("index errors") {
    Deck d = make({1, 2});
    REQUIRE_THROWS_AS(gm_witness(0, 0, d), imo::validation_error);
    REQUIRE_THROWS_AS(gm_witness(0, 5, d), imo::validation_error);
  }
}

TEST_CASE("deck_satisfies_property") {
  SECTION("constant decks satisfy with singleton witnesses") {
    for (int n = 2; n <= 6; n++)
      for (long long c : {1LL, 7LL, 1000000007LL}) {
        Deck d(std::vector<BigInt>(n, BigInt(c)));
        auto rep = deck_satisfies_property(d);
        REQUIRE(rep.satisfies);
        for (const auto& [pair, w] : rep.witnesses) REQUIRE(w.size() == 1);
      }
  }
  SECTION("{1,2} fails at its only pair") {
    auto rep = deck_satisfies_property(make({1, 2}));
    REQUIRE_FALSE(rep.satisfies);
    REQUIRE(rep.failing_pair == IndexPair{0, 1});
  }
  SECTION("{2,2,1} fails") {
    auto rep = deck_satisfies_property(make({2, 2, 1}));
    REQUIRE_FALSE(rep.satisfies);
  }
  SECTION("scale invariance") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> val(1, 12);
    std::uniform_int_distribution<long long> scale(2, 1000);
    for (int rep = 0; rep < 200; rep++) {
      std::vector<BigInt> vals;
      int n = 2 + static_cast<int>(rng() % 3);
      for (int i = 0; i < n; i++) vals.push_back(val(rng));
      Deck d{vals};
      BigInt c = scale(rng);
      std::vector<BigInt> scaled;
      for (const BigInt& v : vals) scaled.push_back(c * v);
      REQUIRE(deck_satisfies_property(d).satisfies ==
              deck_satisfies_property(Deck(scaled)).satisfies);
    }
  }
}

TEST_CASE("prime barrier: the contradiction pair has no witness") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> val(1, 60);
  int checked = 0;
  for (int rep = 0; rep < 400; rep++) {
    std::vector<BigInt> vals;
    int n = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; i++) vals.push_back(val(rng));
    Deck d = normalize_deck(Deck(vals));
    if (d.values.front() == d.values.back()) continue;  // constant
    REQUIRE(d.values[0] >= 2);  // gcd 1 and non-constant force a_1 >= 2
    BigInt p = smallest_prime_divisor(d.values[0]);
    int k = -1;
    for (int i = 0; i < d.size(); i++)
      if (d.values[i] % p != 0) {
        k = i;
        break;
      }
    REQUIRE(k >= 1);
    REQUIRE_FALSE(gm_witness(0, k, d).has_value());
    REQUIRE_FALSE(deck_satisfies_property(d).satisfies);
    checked++;
  }
  REQUIRE(checked > 200);
}

TEST_CASE("search_nonconstant finds no counterexamples") {
  REQUIRE(search_nonconstant(2, 12).empty());
  REQUIRE(search_nonconstant(3, 12).empty());
  REQUIRE(search_nonconstant(4, 8).empty());
  REQUIRE_THROWS_AS(search_nonconstant(5, 8), imo::validation_error);
  REQUIRE_THROWS_AS(search_nonconstant(4, 13), imo::validation_error);
}
