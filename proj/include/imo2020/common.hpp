#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace imo {

// Thrown when an input value violates a documented precondition.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal contract that the theory guarantees is broken.
// Reaching one of these means a bug, not a bad input.
struct contract_violation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 normalized(Vec2 v) {
  double n = norm(v);
  if (n == 0.0) throw validation_error("cannot normalize zero vector");
  return {v.x / n, v.y / n};
}

inline Vec2 rotated(Vec2 v, double angle) {
  double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Angle at vertex `at` between rays toward `p` and `q`, in [0, pi].
inline double angle_at(Vec2 at, Vec2 p, Vec2 q) {
  Vec2 u = p - at, v = q - at;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace imo
