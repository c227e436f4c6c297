#pragma once

// IMO 2020 Problem 1: convex quadrilateral ABCD with interior point P where
// angle PAD : angle PBA : angle DPA = 1:2:3 = angle CBP : angle BAP : angle BPC.
// The internal bisectors of angles ADP and PCB and the perpendicular bisector
// of AB meet at the circumcenter of triangle PAB.
//
// Configurations are constructed directly from the two free angles
// (alpha = angle PAD, beta = angle CBP), which makes the 1:2:3 ratios exact by
// design; the theorem then reduces to a residual check at the circumcenter.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "imo2020/common.hpp"

namespace imo::geometry {

struct Line {
  Vec2 anchor;
  Vec2 direction;  // unit
};

inline double distance_to_line(Vec2 p, const Line& l) {
  return std::abs(cross(p - l.anchor, l.direction));
}

struct P1Configuration {
  Vec2 A, B, C, D, P;
  double alpha = 0.0;  // angle PAD
  double beta = 0.0;   // angle CBP
};

// Thrown when (alpha, beta) does not yield a convex quadrilateral with P
// strictly interior.
struct infeasible_error : validation_error {
  using validation_error::validation_error;
};

namespace detail {

inline bool strictly_convex_ccw(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  Vec2 q[4] = {a, b, c, d};
  for (int i = 0; i < 4; i++) {
    Vec2 u = q[(i + 1) % 4] - q[i];
    Vec2 v = q[(i + 2) % 4] - q[(i + 1) % 4];
    if (cross(u, v) <= 1e-12) return false;
  }
  return true;
}

inline bool strictly_inside_ccw(Vec2 p, Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  Vec2 q[4] = {a, b, c, d};
  for (int i = 0; i < 4; i++)
    if (cross(q[(i + 1) % 4] - q[i], p - q[i]) <= 1e-12) return false;
  return true;
}

}  // namespace detail

// A = (0,0), B = (1,0), P above AB from the base angles angle BAP = 2*beta and
// angle PBA = 2*alpha. D sits across AP from B with angle PAD = alpha and
// angle DPA = 3*alpha (so angle ADP = pi - 4*alpha); C mirrors the role at B.
inline P1Configuration construct_configuration(double alpha, double beta) {
  constexpr double pi = std::numbers::pi;
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw infeasible_error("alpha and beta must be positive");
  if (2 * alpha + 2 * beta >= pi)
    throw infeasible_error("triangle APB degenerate: 2*alpha + 2*beta >= pi");
  if (4 * alpha >= pi) throw infeasible_error("angle ADP nonpositive: 4*alpha >= pi");
  if (4 * beta >= pi) throw infeasible_error("angle PCB nonpositive: 4*beta >= pi");

  P1Configuration cfg;
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.A = {0.0, 0.0};
  cfg.B = {1.0, 0.0};

  // P from the two base angles: at A the ray has angle 2*beta, at B angle
  // pi - 2*alpha. Law of sines in triangle APB with angle APB = pi - 2a - 2b.
  double ap = std::sin(2 * alpha) / std::sin(2 * alpha + 2 * beta);
  cfg.P = {ap * std::cos(2 * beta), ap * std::sin(2 * beta)};

  // D on ray from A at angle 2*beta + alpha (rotating AP away from B);
  // |AD| from triangle APD: AD / sin(angle APD) = AP / sin(angle ADP).
  double ad = ap * std::sin(3 * alpha) / std::sin(4 * alpha);
  cfg.D = {ad * std::cos(2 * beta + alpha), ad * std::sin(2 * beta + alpha)};

  // C mirrored at B: ray from B at angle pi - (2*alpha + beta).
  double bp = std::sin(2 * beta) / std::sin(2 * alpha + 2 * beta);
  double bc = bp * std::sin(3 * beta) / std::sin(4 * beta);
  double theta = pi - (2 * alpha + beta);
  cfg.C = cfg.B + Vec2{bc * std::cos(theta), bc * std::sin(theta)};

  if (!detail::strictly_convex_ccw(cfg.A, cfg.B, cfg.C, cfg.D))
    throw infeasible_error("ABCD not strictly convex for these angles");
  if (!detail::strictly_inside_ccw(cfg.P, cfg.A, cfg.B, cfg.C, cfg.D))
    throw infeasible_error("P not strictly interior for these angles");

  // Construction must reproduce the 1:2:3 ratios.
  double tol = 1e-9;
  if (std::abs(angle_at(cfg.A, cfg.P, cfg.D) - alpha) > tol ||
      std::abs(angle_at(cfg.B, cfg.P, cfg.A) - 2 * alpha) > tol ||
      std::abs(angle_at(cfg.P, cfg.D, cfg.A) - 3 * alpha) > tol ||
      std::abs(angle_at(cfg.B, cfg.C, cfg.P) - beta) > tol ||
      std::abs(angle_at(cfg.A, cfg.B, cfg.P) - 2 * beta) > tol ||
      std::abs(angle_at(cfg.P, cfg.B, cfg.C) - 3 * beta) > tol)
    throw contract_violation("constructed angles do not match the requested ratios");

  return cfg;
}

inline Vec2 circumcenter(Vec2 p1, Vec2 p2, Vec2 p3) {
  Vec2 u = p2 - p1, v = p3 - p1;
  double d = 2.0 * cross(u, v);
  double scale = std::max({norm(u), norm(v), norm(p3 - p2)});
  if (std::abs(d) <= 1e-12 * scale * scale)
    throw validation_error("circumcenter: points are (near-)collinear");
  double u2 = dot(u, u), v2 = dot(v, v);
  Vec2 o{(v.y * u2 - u.y * v2) / d, (u.x * v2 - v.x * u2) / d};
  return p1 + o;
}

// Internal bisector of the angle at vertex `at` between rays toward p and q.
inline Line internal_bisector(Vec2 at, Vec2 p, Vec2 q) {
  return {at, normalized(normalized(p - at) + normalized(q - at))};
}

struct ConcurrencyResult {
  Vec2 circumcenter;
  double residual = 0.0;  // max distance from O to the three lines
};

inline ConcurrencyResult concurrency_residual(const P1Configuration& cfg) {
  Vec2 o = circumcenter(cfg.P, cfg.A, cfg.B);
  Line bis_d = internal_bisector(cfg.D, cfg.A, cfg.P);  // bisector of angle ADP
  Line bis_c = internal_bisector(cfg.C, cfg.P, cfg.B);  // bisector of angle PCB
  Line perp_ab{0.5 * (cfg.A + cfg.B), {0.0, 1.0}};
  double r = std::max({distance_to_line(o, bis_d), distance_to_line(o, bis_c),
                       distance_to_line(o, perp_ab)});
  return {o, r};
}

// Concurrency plus the solution's intermediate claims: BOPC concyclic and
// angle BOP = 2 * angle BAP.
inline bool verify_theorem(double alpha, double beta, double tol) {
  P1Configuration cfg = construct_configuration(alpha, beta);
  auto [o, residual] = concurrency_residual(cfg);
  if (residual >= tol) return false;

  Vec2 center = circumcenter(cfg.B, o, cfg.P);
  double radius = dist(center, cfg.B);
  if (std::abs(dist(center, cfg.C) - radius) >= tol) return false;

  double angle_bop = angle_at(o, cfg.B, cfg.P);
  double angle_bap = angle_at(cfg.A, cfg.B, cfg.P);
  return std::abs(angle_bop - 2 * angle_bap) < tol;
}

// Residual after displacing D, used to show the residual check is not vacuous.
inline double perturbed_residual(const P1Configuration& cfg, Vec2 delta) {
  P1Configuration moved = cfg;
  moved.D = cfg.D + delta;
  return concurrency_residual(moved).residual;
}

// Seeded feasible (alpha, beta) samples, obtained by constructing and
// rejecting infeasible draws.
inline std::vector<std::pair<double, double>> sample_feasible_angles(int count,
                                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist_angle(0.02, std::numbers::pi / 4 - 0.02);
  std::vector<std::pair<double, double>> out;
  while (static_cast<int>(out.size()) < count) {
    double a = dist_angle(rng), b = dist_angle(rng);
    try {
      construct_configuration(a, b);
      out.emplace_back(a, b);
    } catch (const infeasible_error&) {
    }
  }
  return out;
}

}  // namespace imo::geometry
