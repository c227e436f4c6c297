#pragma once

// IMO 2020 Problem 6: n points with pairwise distances >= 1 always admit a
// separating line at distance >= 0.01 * n^{-1/3} from every point.
//
// Construction: take a diameter pair A, B with r = |AB|. If r >= n^{2/3},
// project everything onto AB and bisect the largest consecutive gap. If
// r < n^{2/3}, restrict to the points whose AB-coordinate is <= 1/2 (the lens
// region cut off near A); a packing bound keeps that set small, so its largest
// projection gap is wide enough. If A is alone there, bisect A against the
// chord midpoint. Margins are recomputed from the returned line, never assumed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <tuple>
#include <string>
#include <vector>

#include "imo2020/common.hpp"

namespace imo::sepline {

struct PointSet {
  std::vector<Vec2> points;
};

struct SeparatingLine {
  Vec2 anchor;
  Vec2 unit_normal;
  double margin = 0.0;
  bool case1 = false;  // which branch of the construction fired
};

struct SeparationReport {
  double margin = 0.0;
  int count_left = 0;
  int count_right = 0;
  double required = 0.0;
  bool valid = false;
};

inline double required_margin(int n) { return 0.01 * std::pow(n, -1.0 / 3.0); }

// Generator rounding is absorbed by a 1e-9 slack on the min-distance check.
inline bool validate_point_set(const PointSet& ps, std::string* why = nullptr) {
  if (ps.points.size() < 2) {
    if (why) *why = "need at least 2 points";
    return false;
  }
  for (size_t i = 0; i < ps.points.size(); i++)
    for (size_t j = i + 1; j < ps.points.size(); j++)
      if (dist(ps.points[i], ps.points[j]) < 1.0 - 1e-9) {
        if (why)
          *why = "points " + std::to_string(i) + " and " + std::to_string(j) +
                 " are closer than 1";
        return false;
      }
  return true;
}

inline void require_valid(const PointSet& ps) {
  std::string why;
  if (!validate_point_set(ps, &why)) throw validation_error("invalid point set: " + why);
}

// O(n^2) scan; ties broken by the lowest index pair.
inline std::tuple<int, int, double> diameter_pair(const PointSet& ps) {
  int n = static_cast<int>(ps.points.size());
  if (n < 2) throw validation_error("diameter_pair needs n >= 2");
  int bi = 0, bj = 1;
  double best = dist(ps.points[0], ps.points[1]);
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) {
      double d = dist(ps.points[i], ps.points[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  return {bi, bj, best};
}

namespace detail {

// Midpoint of the widest gap between consecutive sorted coordinates,
// lowest-index tie-breaking. coords must be sorted and have >= 2 entries.
inline double largest_gap_midpoint(const std::vector<double>& coords) {
  double best_gap = -1.0;
  double mid = 0.0;
  for (size_t i = 0; i + 1 < coords.size(); i++) {
    double gap = coords[i + 1] - coords[i];
    if (gap > best_gap) {
      best_gap = gap;
      mid = 0.5 * (coords[i] + coords[i + 1]);
    }
  }
  return mid;
}

}  // namespace detail

inline SeparatingLine separating_line(const PointSet& ps) {
  require_valid(ps);
  int n = static_cast<int>(ps.points.size());
  auto [ia, ib, r] = diameter_pair(ps);
  Vec2 a = ps.points[ia];
  Vec2 dir = normalized(ps.points[ib] - a);

  std::vector<double> coords(n);
  for (int i = 0; i < n; i++) coords[i] = dot(ps.points[i] - a, dir);

  SeparatingLine line;
  line.unit_normal = dir;

  double cut;
  if (r >= std::pow(n, 2.0 / 3.0)) {
    line.case1 = true;
    std::vector<double> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    cut = detail::largest_gap_midpoint(sorted);
  } else {
    line.case1 = false;
    std::vector<double> strip;  // AB-coordinates of points within 1/2 of A
    for (double c : coords)
      if (c <= 0.5) strip.push_back(c);
    if (strip.size() < 2) {
      // A alone in the strip: bisect A against the chord midpoint at 1/2.
      cut = 0.25;
    } else {
      std::sort(strip.begin(), strip.end());
      cut = detail::largest_gap_midpoint(strip);
    }
  }
  line.anchor = a + cut * dir;

  double margin = std::numeric_limits<double>::infinity();
  for (double c : coords) margin = std::min(margin, std::abs(c - cut));
  line.margin = margin;
  return line;
}

inline SeparationReport verify_separation(const PointSet& ps, const SeparatingLine& line) {
  SeparationReport rep;
  int n = static_cast<int>(ps.points.size());
  rep.required = required_margin(n);
  double margin = std::numeric_limits<double>::infinity();
  for (const Vec2& p : ps.points) {
    double sd = dot(p - line.anchor, line.unit_normal);
    margin = std::min(margin, std::abs(sd));
    (sd < 0 ? rep.count_left : rep.count_right)++;
  }
  rep.margin = margin;
  rep.valid = rep.count_left >= 1 && rep.count_right >= 1 &&
              margin >= rep.required - 1e-12;
  return rep;
}

struct PackingReport {
  int count = 0;
  double bound = 0.0;  // 20 * a * b
  bool holds = false;
};

// Packing lemma check: a closed a x b rectangle with a, b >= 1/2 contains at
// most 20ab points of a min-distance-1 set.
inline PackingReport packing_count_check(const PointSet& ps, double xmin, double ymin,
                                         double xmax, double ymax) {
  double a = xmax - xmin, b = ymax - ymin;
  if (a < 0.5 || b < 0.5)
    throw validation_error("rectangle sides must be >= 1/2");
  PackingReport rep;
  for (const Vec2& p : ps.points)
    if (p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax) rep.count++;
  rep.bound = 20.0 * a * b;
  rep.holds = rep.count <= rep.bound;
  return rep;
}

enum class GenMode { jittered_grid, rejection };

inline PointSet generate_min_dist_points(int n, std::uint64_t seed, GenMode mode) {
  if (n < 2) throw validation_error("need n >= 2");
  std::mt19937_64 rng(seed);
  PointSet ps;
  if (mode == GenMode::jittered_grid) {
    int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::uniform_real_distribution<double> jitter(-0.45, 0.45);
    for (int i = 0; i < n; i++) {
      double x = 2.0 * (i % cols) + jitter(rng);
      double y = 2.0 * (i / cols) + jitter(rng);
      ps.points.push_back({x, y});
    }
  } else {
    double side = 3.0 * std::sqrt(static_cast<double>(n)) + 2.0;
    std::uniform_real_distribution<double> coord(0.0, side);
    long long budget = 4000LL * n + 10000;
    while (static_cast<int>(ps.points.size()) < n) {
      if (budget-- <= 0)
        throw contract_violation("rejection sampling budget exhausted; enlarge the box");
      Vec2 cand{coord(rng), coord(rng)};
      bool ok = true;
      for (const Vec2& p : ps.points)
        if (dist(p, cand) < 1.0) { ok = false; break; }
      if (ok) ps.points.push_back(cand);
    }
  }
  return ps;
}

}  // namespace imo::sepline
