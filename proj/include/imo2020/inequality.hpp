#pragma once

// IMO 2020 Problem 2: for a >= b >= c >= d > 0 with a+b+c+d = 1,
// (a+2b+3c+4d) * a^a b^b c^c d^d < 1.
//
// The algebraic half of the solution — after substituting r = a-b, s = b-c,
// t = c-d, u = d, the cube (r+2s+3t+4u)^3 term-wise dominates
// (r+3s+6t+10u) * (a^2+b^2+c^2+d^2 in r,s,t,u), strictly at u^3 — is checked
// with exact integer polynomials. The analytic half (weighted AM-GM) is
// checked numerically over seeded samples of the ordered simplex.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "imo2020/common.hpp"

namespace imo::ineq {

using BigInt = boost::multiprecision::cpp_int;
using Monomial = std::array<int, 4>;  // exponents of r, s, t, u

// Sparse exact-integer polynomial in four variables. Zero coefficients are
// never stored.
class Poly4 {
 public:
  Poly4() = default;

  static Poly4 term(BigInt coeff, Monomial m) {
    Poly4 p;
    if (coeff != 0) p.terms_[m] = std::move(coeff);
    return p;
  }
  static Poly4 variable(int idx) {
    Monomial m{0, 0, 0, 0};
    m[idx] = 1;
    return term(1, m);
  }

  const std::map<Monomial, BigInt>& terms() const { return terms_; }

  BigInt coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  Poly4& operator+=(const Poly4& o) {
    for (const auto& [m, c] : o.terms_) {
      BigInt& slot = terms_[m];
      slot += c;
      if (slot == 0) terms_.erase(m);
    }
    return *this;
  }
  friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }

  friend Poly4 operator*(const BigInt& s, const Poly4& p) {
    Poly4 out;
    if (s == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_[m] = s * c;
    return out;
  }

  friend Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
        BigInt& slot = out.terms_[m];
        slot += ca * cb;
        if (slot == 0) out.terms_.erase(m);
      }
    return out;
  }

  Poly4 pow(int e) const {
    Poly4 out = term(1, {0, 0, 0, 0});
    for (int i = 0; i < e; i++) out = out * (*this);
    return out;
  }

  friend bool operator==(const Poly4& a, const Poly4& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Monomial, BigInt> terms_;
};

// a, b, c, d expressed in the substituted variables:
// a = r+s+t+u, b = s+t+u, c = t+u, d = u.
inline std::array<Poly4, 4> substituted_abcd() {
  Poly4 r = Poly4::variable(0), s = Poly4::variable(1);
  Poly4 t = Poly4::variable(2), u = Poly4::variable(3);
  return {r + s + t + u, s + t + u, t + u, u};
}

// (a + 2b + 3c + 4d) after substitution; equals r + 3s + 6t + 10u.
inline Poly4 linear_factor() {
  auto [a, b, c, d] = substituted_abcd();
  return a + BigInt(2) * b + BigInt(3) * c + BigInt(4) * d;
}

// (a^2 + b^2 + c^2 + d^2) after substitution. Derived by squaring, not
// hard-coded, so a transcription error in the expected expansion would show.
inline Poly4 quadratic_factor() {
  auto [a, b, c, d] = substituted_abcd();
  return a * a + b * b + c * c + d * d;
}

inline Poly4 expand_lhs() { return linear_factor() * quadratic_factor(); }

// (a+b+c+d)^3 = (r+2s+3t+4u)^3.
inline Poly4 expand_rhs() {
  auto [a, b, c, d] = substituted_abcd();
  return (a + b + c + d).pow(3);
}

struct DominationReport {
  bool dominated = false;
  std::vector<Monomial> strict_terms;  // coeff(p) < coeff(q)
  std::vector<Monomial> equal_terms;
};

// dominated iff every coefficient of p is <= the matching coefficient of q.
inline DominationReport termwise_dominates(const Poly4& p, const Poly4& q) {
  DominationReport rep;
  rep.dominated = true;
  std::map<Monomial, BigInt> merged;
  for (const auto& [m, c] : p.terms()) merged.emplace(m, 0);
  for (const auto& [m, c] : q.terms()) merged.emplace(m, 0);
  for (const auto& [m, unused] : merged) {
    BigInt cp = p.coefficient(m), cq = q.coefficient(m);
    if (cp > cq)
      rep.dominated = false;
    else if (cp < cq)
      rep.strict_terms.push_back(m);
    else
      rep.equal_terms.push_back(m);
  }
  return rep;
}

struct SimplexPoint {
  double a = 0, b = 0, c = 0, d = 0;
};

inline void require_valid(const SimplexPoint& p) {
  if (!(p.a >= p.b && p.b >= p.c && p.c >= p.d && p.d > 0))
    throw validation_error("need a >= b >= c >= d > 0");
  if (std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-12)
    throw validation_error("coordinates must sum to 1");
}

// a^a b^b c^c d^d via exp(sum x ln x); all coordinates are positive here.
inline double weighted_power_product(const SimplexPoint& p) {
  return std::exp(p.a * std::log(p.a) + p.b * std::log(p.b) + p.c * std::log(p.c) +
                  p.d * std::log(p.d));
}

inline double lhs_value(const SimplexPoint& p) {
  require_valid(p);
  return (p.a + 2 * p.b + 3 * p.c + 4 * p.d) * weighted_power_product(p);
}

// (a^2+b^2+c^2+d^2) - a^a b^b c^c d^d; weighted AM-GM says this is >= 0.
inline double amgm_gap(const SimplexPoint& p) {
  require_valid(p);
  return (p.a * p.a + p.b * p.b + p.c * p.c + p.d * p.d) - weighted_power_product(p);
}

// Seeded samples of the open ordered simplex: four exponentials, normalized,
// sorted descending; points with d below 1e-12 are resampled.
inline std::vector<SimplexPoint> sample_simplex(int count, std::uint64_t seed) {
  if (count < 1) throw validation_error("count must be >= 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<SimplexPoint> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    double x[4];
    double sum = 0.0;
    for (double& v : x) {
      v = expo(rng);
      sum += v;
    }
    for (double& v : x) v /= sum;
    std::sort(x, x + 4, std::greater<double>());
    if (x[3] < 1e-12) continue;
    out.push_back({x[0], x[1], x[2], x[3]});
  }
  return out;
}

inline std::string monomial_name(Monomial m) {
  static const char* names[4] = {"r", "s", "t", "u"};
  std::string out;
  for (int i = 0; i < 4; i++) {
    if (m[i] == 0) continue;
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace imo::ineq
