// Command-line front end: JSON in, JSON out, one binary with nested
// subcommands. Exit codes: 0 = success / claim holds, 1 = claim violated or
// verification failed, 2 = invalid input or usage.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "imo2020/cablecar.hpp"
#include "imo2020/deck.hpp"
#include "imo2020/geometry.hpp"
#include "imo2020/inequality.hpp"
#include "imo2020/pebbles.hpp"
#include "imo2020/sepline.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimViolated = 1;
constexpr int kExitUsage = 2;

struct IoOptions {
  std::string inline_json;
  std::string input_path;
  std::string output_path;
};

void add_input_flags(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--inline", io.inline_json, "inline JSON input");
  cmd->add_option("--input", io.input_path, "path to a JSON input file");
}

void add_output_flag(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--output", io.output_path, "write the JSON result here (default stdout)");
}

json read_input(const IoOptions& io) {
  if (!io.inline_json.empty() && !io.input_path.empty())
    throw imo::validation_error("give either --inline or --input, not both");
  std::string text;
  if (!io.inline_json.empty()) {
    text = io.inline_json;
  } else if (!io.input_path.empty()) {
    std::ifstream in(io.input_path);
    if (!in) throw imo::validation_error("cannot open input file: " + io.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw imo::validation_error(std::string("malformed JSON: ") + e.what());
  }
}

int emit(const json& doc, const IoOptions& io, int code) {
  std::string text = doc.dump(2) + "\n";
  if (io.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(io.output_path);
    if (!out) {
      std::cerr << "cannot open output file: " << io.output_path << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return code;
}

template <typename T>
T get_field(const json& j, const char* name) {
  if (!j.contains(name))
    throw imo::validation_error(std::string("missing field: ") + name);
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw imo::validation_error(std::string("bad value for field: ") + name);
  }
}

// ---------------------------------------------------------------- pebbles --

imo::pebbles::PebbleColoring parse_coloring(const json& j) {
  imo::pebbles::PebbleColoring c;
  c.n = get_field<int>(j, "n");
  c.color_of = get_field<std::vector<int>>(j, "color_of");
  return c;
}

json partition_to_json(const imo::pebbles::Partition& p) {
  return json{{"pile_a", p.pile_a}, {"pile_b", p.pile_b}};
}

// --------------------------------------------------------------- cablecar --

imo::cablecar::CableCarConfig parse_config(const json& j) {
  imo::cablecar::CableCarConfig c;
  c.n = get_field<int>(j, "n");
  for (const auto& car : get_field<std::vector<std::vector<int>>>(j, "cars")) {
    if (car.size() != 2) throw imo::validation_error("each car must be [start, finish]");
    c.cars.push_back({car[0], car[1]});
  }
  return c;
}

json config_to_json(const imo::cablecar::CableCarConfig& c) {
  json cars = json::array();
  for (auto [s, f] : c.cars) cars.push_back(json::array({s, f}));
  return json{{"n", c.n}, {"cars", cars}};
}

// ---------------------------------------------------------------- sepline --

imo::sepline::PointSet parse_points(const json& j) {
  imo::sepline::PointSet ps;
  for (const auto& p : get_field<std::vector<std::vector<double>>>(j, "points")) {
    if (p.size() != 2) throw imo::validation_error("each point must be [x, y]");
    ps.points.push_back({p[0], p[1]});
  }
  return ps;
}

json line_to_json(const imo::sepline::SeparatingLine& l) {
  return json{{"anchor", {l.anchor.x, l.anchor.y}},
              {"normal", {l.unit_normal.x, l.unit_normal.y}},
              {"margin", l.margin}};
}

imo::sepline::SeparatingLine parse_line(const json& j) {
  auto anchor = get_field<std::vector<double>>(j, "anchor");
  auto normal = get_field<std::vector<double>>(j, "normal");
  if (anchor.size() != 2 || normal.size() != 2)
    throw imo::validation_error("anchor and normal must be [x, y]");
  imo::sepline::SeparatingLine l;
  l.anchor = {anchor[0], anchor[1]};
  l.unit_normal = {normal[0], normal[1]};
  if (std::abs(imo::norm(l.unit_normal) - 1.0) > 1e-12)
    throw imo::validation_error("normal must be a unit vector");
  return l;
}

// ------------------------------------------------------------------- deck --

imo::deck::Deck parse_deck(const json& j) {
  if (!j.contains("values")) throw imo::validation_error("missing field: values");
  std::vector<imo::deck::BigInt> vals;
  for (const auto& v : j.at("values")) {
    try {
      if (v.is_string())
        vals.emplace_back(v.get<std::string>());
      else
        vals.emplace_back(v.get<std::int64_t>());
    } catch (...) {
      throw imo::validation_error("deck values must be integers or decimal strings");
    }
  }
  return imo::deck::Deck(std::move(vals));
}

json deck_to_json(const imo::deck::Deck& d) {
  json vals = json::array();
  for (const auto& v : d.values) vals.push_back(v.str());
  return json{{"values", vals}};
}

// ----------------------------------------------------------------- schema --

const std::map<std::string, json>& schema_table() {
  static const std::map<std::string, json> table = {
      {"pebbles.solve",
       {{"input", {{"n", "int >= 1"}, {"color_of", "[int; 4n], values in [0, n)"}}},
        {"output", {{"pile_a", "[int; 2n]"}, {"pile_b", "[int; 2n]"}}}}},
      {"pebbles.verify",
       {{"input",
         {{"n", "int"}, {"color_of", "[int; 4n]"}, {"pile_a", "[int]"}, {"pile_b", "[int]"}}},
        {"output", {{"ok", "bool"}, {"violations", "[string]"}}}}},
      {"pebbles.oracle",
       {{"input", {{"n", "int in [1,4]"}, {"color_of", "[int; 4n]"}}},
        {"output", {{"pile_a", "[int; 2n]"}, {"pile_b", "[int; 2n]"}}}}},
      {"cablecar.construct",
       {{"input", "--n <int > 1>"},
        {"output", {{"a", "config"}, {"b", "config"}}},
        {"config", {{"n", "int"}, {"cars", "[[start, finish], ...]"}}}}},
      {"cablecar.linked",
       {{"input", {{"n", "int"}, {"cars", "[[start, finish], ...]"}}},
        {"output", {{"pairs", "[[lo, hi], ...]"}}}}},
      {"cablecar.common",
       {{"input", {{"a", "config"}, {"b", "config"}}},
        {"output", {{"pair", "[lo, hi] or null"}}}}},
      {"cablecar.oracle",
       {{"input", "--n 2"}, {"output", {{"min_k", "int"}}}}},
      {"sepline.solve",
       {{"input", {{"points", "[[x, y], ...], pairwise distance >= 1"}}},
        {"output", {{"anchor", "[x, y]"}, {"normal", "[x, y]"}, {"margin", "real"}}}}},
      {"sepline.verify",
       {{"input",
         {{"points", "[[x, y], ...]"},
          {"line", {{"anchor", "[x, y]"}, {"normal", "[x, y] unit"}}}}},
        {"output",
         {{"margin", "real"},
          {"count_left", "int"},
          {"count_right", "int"},
          {"required", "real, 0.01 n^{-1/3}"},
          {"valid", "bool"}}}}},
      {"sepline.lemma",
       {{"input", {{"points", "[[x, y], ...]"}, {"rect", "[xmin, ymin, xmax, ymax], sides >= 1/2"}}},
        {"output", {{"count", "int"}, {"bound", "real, 20ab"}, {"holds", "bool"}}}}},
      {"sepline.gen",
       {{"input", "--n <int>=2> --seed <u64> --mode jittered_grid|rejection"},
        {"output", {{"points", "[[x, y], ...]"}}}}},
      {"deck.check",
       {{"input", {{"values", "[positive int or decimal string; n > 1]"}}},
        {"output",
         {{"satisfies", "bool"},
          {"failing_pair", "[i, j] or null"},
          {"witnesses", "{\"i,j\": [indices]}"}}}}},
      {"deck.witness",
       {{"input", {{"values", "[positive int or decimal string]"}}},
        {"flags", "--i <index> --j <index>"},
        {"output", {{"witness", "[indices] or null"}}}}},
      {"deck.search",
       {{"input", "--n <2..4> --max-value <1..12>"},
        {"output", {{"counterexamples", "[deck]"}}}}},
      {"geometry.verify",
       {{"input", "--alpha <deg> --beta <deg> [--tol <real>]"},
        {"output",
         {{"alpha_deg", "real"}, {"beta_deg", "real"}, {"residual", "real"}, {"holds", "bool"}}}}},
      {"geometry.sweep",
       {{"input", "--samples <N> --seed <u64>"},
        {"output", "[{alpha, beta, residual}, ...] (angles in radians)"}}},
      {"ineq.expand",
       {{"input", "--side lhs|rhs"},
        {"output", {{"terms", "[{monomial: [er,es,et,eu], name, coefficient: string}]"}}}}},
      {"ineq.dominate",
       {{"output",
         {{"dominated", "bool"}, {"strict_terms", "[name]"}, {"equal_terms", "[name]"}}}}},
      {"ineq.sample",
       {{"input", "--count <N> --seed <u64>"},
        {"output",
         {{"count", "int"},
          {"max_lhs_value", "real"},
          {"min_amgm_gap", "real"},
          {"all_claims_hold", "bool"}}}}},
  };
  return table;
}

// --------------------------------------------------------------- selftest --

struct SelftestResult {
  std::string name;
  bool pass = false;
  json detail;
};

SelftestResult selftest_pebbles(std::uint64_t seed) {
  using namespace imo::pebbles;
  SelftestResult res{"pebbles"};
  int checked = 0;
  bool ok = true;

  std::vector<int> base{0, 0, 0, 0, 1, 1, 1, 1};
  do {
    PebbleColoring c{2, base};
    ok = ok && verify_partition(c, partition_pebbles(c)).ok();
    ok = ok && brute_force_partition(c).has_value();
    checked++;
  } while (std::next_permutation(base.begin(), base.end()) && ok);

  for (int n : {3, 4})
    for (int rep = 0; rep < 300 && ok; rep++) {
      PebbleColoring c = random_coloring(n, seed + rep * 2 + n);
      ok = ok && verify_partition(c, partition_pebbles(c)).ok();
      ok = ok && brute_force_partition(c).has_value();
      checked++;
    }
  res.pass = ok;
  res.detail = json{{"colorings_checked", checked}};
  return res;
}

SelftestResult selftest_cablecar(std::uint64_t seed) {
  using namespace imo::cablecar;
  SelftestResult res{"cablecar"};
  bool ok = brute_force_min_k(2) == 3;
  for (int n = 2; n <= 10 && ok; n++) {
    auto [a, b] = extremal_construction(n);
    ok = static_cast<int>(a.cars.size()) == n * n - n && validate_config(a).ok() &&
         validate_config(b).ok() && !find_common_linked(a, b).has_value();
  }
  int lemma_checked = 0;
  for (int rep = 0; rep < 100 && ok; rep++) {
    int n = 2 + static_cast<int>(rep % 4);
    int k = 1 + static_cast<int>((seed + rep) % (n * n - n + 1));
    CableCarConfig c = random_config(n, k, seed + 17 * rep);
    auto graph = station_graph(c);
    ok = ok && graph.component_count == n * n - k;
    std::set<StationPair> comp_pairs;
    for (int u = 0; u < graph.vertex_count; u++)
      for (int v = u + 1; v < graph.vertex_count; v++)
        if (graph.component_of[u] == graph.component_of[v]) comp_pairs.insert({u, v});
    ok = ok && linked_pairs(c) == comp_pairs;
    lemma_checked++;
  }
  for (int rep = 0; rep < 100 && ok; rep++) {
    int n = 2 + rep % 2;
    int k = n * n - n + 1;
    CableCarConfig a = random_config(n, k, seed + 1000 + 2 * rep);
    CableCarConfig b = random_config(n, k, seed + 1001 + 2 * rep);
    auto p = find_common_linked(a, b);
    ok = ok && p.has_value() && linked_pairs(a).count(*p) && linked_pairs(b).count(*p);
  }
  res.pass = ok;
  res.detail = json{{"lemma_configs_checked", lemma_checked}};
  return res;
}

SelftestResult selftest_sepline(std::uint64_t seed) {
  using namespace imo::sepline;
  SelftestResult res{"sepline"};
  bool ok = true;
  std::mt19937_64 rng(seed ^ 0x5e91u);
  int sets = 0, rects = 0;
  for (int rep = 0; rep < 60 && ok; rep++) {
    PointSet ps;
    if (rep % 6 == 5) {  // compact unit grid, exercises case 2
      int k = 2 + rep / 6;
      for (int x = 0; x < k; x++)
        for (int y = 0; y < k; y++) ps.points.push_back({double(x), double(y)});
    } else {
      int n = 2 + static_cast<int>(rng() % 199);
      GenMode mode = (rep % 2 == 0) ? GenMode::jittered_grid : GenMode::rejection;
      ps = generate_min_dist_points(n, seed + rep, mode);
    }
    int n = static_cast<int>(ps.points.size());
    SeparatingLine l = separating_line(ps);
    SeparationReport r = verify_separation(ps, l);
    ok = ok && r.valid;
    if (l.case1) ok = ok && l.margin >= 0.5 * std::pow(n, -1.0 / 3.0);
    sets++;
    std::uniform_real_distribution<double> side(0.5, 6.0), pos(-3.0, 3.0);
    for (int q = 0; q < 5 && ok; q++) {
      double x0 = pos(rng) + ps.points[rng() % n].x;
      double y0 = pos(rng) + ps.points[rng() % n].y;
      auto rep2 = packing_count_check(ps, x0, y0, x0 + side(rng), y0 + side(rng));
      ok = ok && rep2.holds;
      rects++;
    }
  }
  res.pass = ok;
  res.detail = json{{"point_sets", sets}, {"rectangles", rects}};
  return res;
}

SelftestResult selftest_deck(std::uint64_t seed) {
  using namespace imo::deck;
  SelftestResult res{"deck"};
  bool ok = search_nonconstant(2, 12).empty() && search_nonconstant(3, 12).empty() &&
            search_nonconstant(4, 8).empty();
  for (int n = 2; n <= 6 && ok; n++)
    ok = deck_satisfies_property(Deck(std::vector<BigInt>(n, BigInt(7)))).satisfies;
  std::mt19937_64 rng(seed ^ 0xdecc);
  int scale_checked = 0;
  for (int rep = 0; rep < 100 && ok; rep++) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<BigInt> vals;
    for (int i = 0; i < n; i++) vals.push_back(1 + static_cast<long long>(rng() % 12));
    BigInt c = 2 + static_cast<long long>(rng() % 999);
    std::vector<BigInt> scaled;
    for (const BigInt& v : vals) scaled.push_back(c * v);
    ok = deck_satisfies_property(Deck(vals)).satisfies ==
         deck_satisfies_property(Deck(scaled)).satisfies;
    scale_checked++;
  }
  res.pass = ok;
  res.detail = json{{"scale_pairs_checked", scale_checked}};
  return res;
}

SelftestResult selftest_geometry(std::uint64_t seed) {
  using namespace imo::geometry;
  SelftestResult res{"geometry"};
  bool ok = true;
  auto samples = sample_feasible_angles(200, seed);
  for (auto [a, b] : samples) ok = ok && verify_theorem(a, b, 1e-9);
  P1Configuration cfg = construct_configuration(0.35, 0.44);
  double rx = perturbed_residual(cfg, {1e-3, 0});
  double ry = perturbed_residual(cfg, {0, 1e-3});
  ok = ok && std::max(rx, ry) > 1e-5;
  res.pass = ok;
  res.detail = json{{"angle_pairs_checked", samples.size()}};
  return res;
}

SelftestResult selftest_ineq(std::uint64_t seed) {
  using namespace imo::ineq;
  SelftestResult res{"ineq"};
  Poly4 lhs = expand_lhs(), rhs = expand_rhs();
  auto rep = termwise_dominates(lhs, rhs);
  bool ok = rep.dominated && lhs.coefficient({0, 0, 0, 3}) == 40 &&
            rhs.coefficient({0, 0, 0, 3}) == 64 && lhs.coefficient({1, 1, 1, 0}) == 22 &&
            rhs.coefficient({1, 1, 1, 0}) == 36;
  double max_lhs = 0.0, min_gap = 0.0;
  for (const SimplexPoint& p : sample_simplex(100000, seed)) {
    max_lhs = std::max(max_lhs, lhs_value(p));
    min_gap = std::min(min_gap, amgm_gap(p));
  }
  ok = ok && max_lhs < 1.0 && min_gap >= -1e-14;
  res.pass = ok;
  res.detail = json{{"max_lhs_value", max_lhs}, {"min_amgm_gap", min_gap}};
  return res;
}

int run_selftest(std::uint64_t seed, const IoOptions& io) {
  json table = json::array();
  bool all = true;
  for (auto* fn : {selftest_pebbles, selftest_cablecar, selftest_sepline, selftest_deck,
                   selftest_geometry, selftest_ineq}) {
    SelftestResult r = fn(seed);
    all = all && r.pass;
    table.push_back(json{{"module", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  json doc{{"seed", seed}, {"modules", table}, {"all_pass", all}};
  return emit(doc, io, all ? kExitOk : kExitClaimViolated);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers and verifiers for the six IMO 2020 problems"};
  app.require_subcommand(1);

  IoOptions io;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int count = 1000;
  int n_arg = 2;
  int idx_i = 0, idx_j = 1;
  int max_value = 12;
  std::string side = "lhs";
  std::string mode = "jittered_grid";
  std::string schema_name;
  double alpha_deg = 0, beta_deg = 0;

  int exit_code = kExitOk;

  auto make_group = [&](const std::string& name, const std::string& desc) {
    CLI::App* grp = app.add_subcommand(name, desc);
    grp->require_subcommand(1);
    return grp;
  };
  auto bind = [&](CLI::App* cmd, std::function<int()> fn) {
    cmd->callback([&, fn]() { exit_code = fn(); });
  };

  // pebbles
  {
    CLI::App* grp = make_group("pebbles", "equal-weight, color-balanced pebble piles");
    CLI::App* solve = grp->add_subcommand("solve", "partition via Eulerian circuits");
    add_input_flags(solve, io);
    add_output_flag(solve, io);
    bind(solve, [&]() {
      auto c = parse_coloring(read_input(io));
      auto p = imo::pebbles::partition_pebbles(c);
      auto v = imo::pebbles::verify_partition(c, p);
      if (!v.ok()) return emit(json{{"error", "solver output failed verification"}}, io,
                               kExitClaimViolated);
      return emit(partition_to_json(p), io, kExitOk);
    });
    CLI::App* verify = grp->add_subcommand("verify", "check a partition");
    add_input_flags(verify, io);
    add_output_flag(verify, io);
    bind(verify, [&]() {
      json j = read_input(io);
      auto c = parse_coloring(j);
      imo::pebbles::Partition p{get_field<std::vector<int>>(j, "pile_a"),
                                get_field<std::vector<int>>(j, "pile_b")};
      auto v = imo::pebbles::verify_partition(c, p);
      return emit(json{{"ok", v.ok()}, {"violations", v.violations}}, io,
                  v.ok() ? kExitOk : kExitClaimViolated);
    });
    CLI::App* oracle = grp->add_subcommand("oracle", "exhaustive partition search (n <= 4)");
    add_input_flags(oracle, io);
    add_output_flag(oracle, io);
    bind(oracle, [&]() {
      auto c = parse_coloring(read_input(io));
      auto p = imo::pebbles::brute_force_partition(c);
      if (!p)
        return emit(json{{"error", "no partition exists; theorem violated"}}, io,
                    kExitClaimViolated);
      return emit(partition_to_json(*p), io, kExitOk);
    });
  }

  // cablecar
  {
    CLI::App* grp = make_group("cablecar", "linked stations of two cable car companies");
    CLI::App* construct = grp->add_subcommand("construct", "extremal k = n^2-n configs");
    construct->add_option("--n", n_arg, "grid parameter (n^2 stations)")->required();
    add_output_flag(construct, io);
    bind(construct, [&]() {
      auto [a, b] = imo::cablecar::extremal_construction(n_arg);
      return emit(json{{"a", config_to_json(a)}, {"b", config_to_json(b)}}, io, kExitOk);
    });
    CLI::App* linked = grp->add_subcommand("linked", "all linked station pairs");
    add_input_flags(linked, io);
    add_output_flag(linked, io);
    bind(linked, [&]() {
      auto pairs = imo::cablecar::linked_pairs(parse_config(read_input(io)));
      json arr = json::array();
      for (auto [lo, hi] : pairs) arr.push_back(json::array({lo, hi}));
      return emit(json{{"pairs", arr}}, io, kExitOk);
    });
    CLI::App* common = grp->add_subcommand("common", "a pair linked by both configs");
    add_input_flags(common, io);
    add_output_flag(common, io);
    bind(common, [&]() {
      json j = read_input(io);
      if (!j.contains("a") || !j.contains("b"))
        throw imo::validation_error("input needs fields a and b");
      auto p = imo::cablecar::find_common_linked(parse_config(j.at("a")),
                                                 parse_config(j.at("b")));
      json out;
      out["pair"] = p ? json(json::array({p->first, p->second})) : json(nullptr);
      return emit(out, io, kExitOk);
    });
    CLI::App* oracle = grp->add_subcommand("oracle", "exhaustive minimum k (n = 2)");
    oracle->add_option("--n", n_arg, "must be 2")->required();
    add_output_flag(oracle, io);
    bind(oracle, [&]() {
      return emit(json{{"min_k", imo::cablecar::brute_force_min_k(n_arg)}}, io, kExitOk);
    });
  }

  // sepline
  {
    CLI::App* grp = make_group("sepline", "separating lines with margin guarantees");
    CLI::App* solve = grp->add_subcommand("solve", "compute a separating line");
    add_input_flags(solve, io);
    add_output_flag(solve, io);
    bind(solve, [&]() {
      auto ps = parse_points(read_input(io));
      auto l = imo::sepline::separating_line(ps);
      if (!imo::sepline::verify_separation(ps, l).valid)
        return emit(json{{"error", "margin below the guaranteed bound"}}, io,
                    kExitClaimViolated);
      return emit(line_to_json(l), io, kExitOk);
    });
    CLI::App* verify = grp->add_subcommand("verify", "recompute margin and side counts");
    add_input_flags(verify, io);
    add_output_flag(verify, io);
    bind(verify, [&]() {
      json j = read_input(io);
      auto ps = parse_points(j);
      if (!j.contains("line")) throw imo::validation_error("missing field: line");
      auto l = parse_line(j.at("line"));
      auto r = imo::sepline::verify_separation(ps, l);
      json out{{"margin", r.margin},
               {"count_left", r.count_left},
               {"count_right", r.count_right},
               {"required", r.required},
               {"valid", r.valid}};
      return emit(out, io, r.valid ? kExitOk : kExitClaimViolated);
    });
    CLI::App* lemma = grp->add_subcommand("lemma", "packing bound in a rectangle");
    add_input_flags(lemma, io);
    add_output_flag(lemma, io);
    bind(lemma, [&]() {
      json j = read_input(io);
      auto ps = parse_points(j);
      auto rect = get_field<std::vector<double>>(j, "rect");
      if (rect.size() != 4)
        throw imo::validation_error("rect must be [xmin, ymin, xmax, ymax]");
      auto r = imo::sepline::packing_count_check(ps, rect[0], rect[1], rect[2], rect[3]);
      return emit(json{{"count", r.count}, {"bound", r.bound}, {"holds", r.holds}}, io,
                  r.holds ? kExitOk : kExitClaimViolated);
    });
    CLI::App* gen = grp->add_subcommand("gen", "seeded min-distance point sets");
    gen->add_option("--n", n_arg, "number of points")->required();
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--mode", mode, "jittered_grid | rejection");
    add_output_flag(gen, io);
    bind(gen, [&]() {
      imo::sepline::GenMode m;
      if (mode == "jittered_grid")
        m = imo::sepline::GenMode::jittered_grid;
      else if (mode == "rejection")
        m = imo::sepline::GenMode::rejection;
      else
        throw imo::validation_error("mode must be jittered_grid or rejection");
      auto ps = imo::sepline::generate_min_dist_points(n_arg, seed, m);
      json pts = json::array();
      for (const auto& p : ps.points) pts.push_back(json::array({p.x, p.y}));
      return emit(json{{"points", pts}}, io, kExitOk);
    });
  }

  // deck
  {
    CLI::App* grp = make_group("deck", "pairwise AM = some GM card decks");
    CLI::App* check = grp->add_subcommand("check", "decide the deck property");
    add_input_flags(check, io);
    add_output_flag(check, io);
    bind(check, [&]() {
      auto d = parse_deck(read_input(io));
      auto rep = imo::deck::deck_satisfies_property(d);
      json witnesses = json::object();
      for (const auto& [pair, w] : rep.witnesses)
        witnesses[std::to_string(pair.first) + "," + std::to_string(pair.second)] = w;
      json out{{"satisfies", rep.satisfies},
               {"failing_pair", rep.failing_pair
                                    ? json(json::array({rep.failing_pair->first,
                                                        rep.failing_pair->second}))
                                    : json(nullptr)},
               {"witnesses", witnesses}};
      return emit(out, io, rep.satisfies ? kExitOk : kExitClaimViolated);
    });
    CLI::App* witness = grp->add_subcommand("witness", "GM witness for one pair");
    witness->add_option("--i", idx_i, "first card index")->required();
    witness->add_option("--j", idx_j, "second card index")->required();
    add_input_flags(witness, io);
    add_output_flag(witness, io);
    bind(witness, [&]() {
      auto d = parse_deck(read_input(io));
      auto w = imo::deck::gm_witness(idx_i, idx_j, d);
      json out;
      out["witness"] = w ? json(*w) : json(nullptr);
      return emit(out, io, w ? kExitOk : kExitClaimViolated);
    });
    CLI::App* search = grp->add_subcommand("search", "exhaustive counterexample search");
    search->add_option("--n", n_arg, "deck size (2..4)")->required();
    search->add_option("--max-value", max_value, "largest card value (<= 12)");
    add_output_flag(search, io);
    bind(search, [&]() {
      auto hits = imo::deck::search_nonconstant(n_arg, max_value);
      json arr = json::array();
      for (const auto& d : hits) arr.push_back(deck_to_json(d));
      return emit(json{{"counterexamples", arr}}, io,
                  hits.empty() ? kExitOk : kExitClaimViolated);
    });
  }

  // geometry
  {
    CLI::App* grp = make_group("geometry", "three-line concurrency in the 1:2:3 quadrilateral");
    CLI::App* verify = grp->add_subcommand("verify", "check one (alpha, beta)");
    verify->add_option("--alpha", alpha_deg, "angle PAD in degrees")->required();
    verify->add_option("--beta", beta_deg, "angle CBP in degrees")->required();
    verify->add_option("--tol", tol, "residual tolerance (default 1e-9)");
    add_output_flag(verify, io);
    bind(verify, [&]() {
      constexpr double deg = std::numbers::pi / 180.0;
      bool holds = imo::geometry::verify_theorem(alpha_deg * deg, beta_deg * deg, tol);
      auto cfg = imo::geometry::construct_configuration(alpha_deg * deg, beta_deg * deg);
      double residual = imo::geometry::concurrency_residual(cfg).residual;
      json out{{"alpha_deg", alpha_deg}, {"beta_deg", beta_deg}, {"residual", residual},
               {"holds", holds}};
      return emit(out, io, holds ? kExitOk : kExitClaimViolated);
    });
    CLI::App* sweep = grp->add_subcommand("sweep", "seeded feasible-angle sweep");
    sweep->add_option("--samples", count, "number of samples")->required();
    sweep->add_option("--seed", seed, "RNG seed");
    add_output_flag(sweep, io);
    bind(sweep, [&]() {
      json arr = json::array();
      bool all = true;
      for (auto [a, b] : imo::geometry::sample_feasible_angles(count, seed)) {
        auto cfg = imo::geometry::construct_configuration(a, b);
        double residual = imo::geometry::concurrency_residual(cfg).residual;
        all = all && residual < tol;
        arr.push_back(json{{"alpha", a}, {"beta", b}, {"residual", residual}});
      }
      return emit(arr, io, all ? kExitOk : kExitClaimViolated);
    });
  }

  // ineq
  {
    CLI::App* grp = make_group("ineq", "exact and numeric checks of the weighted product bound");
    CLI::App* expand = grp->add_subcommand("expand", "print one cubic expansion");
    expand->add_option("--side", side, "lhs | rhs")->required();
    add_output_flag(expand, io);
    bind(expand, [&]() {
      imo::ineq::Poly4 p;
      if (side == "lhs")
        p = imo::ineq::expand_lhs();
      else if (side == "rhs")
        p = imo::ineq::expand_rhs();
      else
        throw imo::validation_error("side must be lhs or rhs");
      json terms = json::array();
      for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"monomial", m},
                             {"name", imo::ineq::monomial_name(m)},
                             {"coefficient", c.str()}});
      return emit(json{{"terms", terms}}, io, kExitOk);
    });
    CLI::App* dominate = grp->add_subcommand("dominate", "term-wise comparison lhs vs rhs");
    add_output_flag(dominate, io);
    bind(dominate, [&]() {
      auto rep = imo::ineq::termwise_dominates(imo::ineq::expand_lhs(),
                                               imo::ineq::expand_rhs());
      auto names = [](const std::vector<imo::ineq::Monomial>& ms) {
        json arr = json::array();
        for (auto m : ms) arr.push_back(imo::ineq::monomial_name(m));
        return arr;
      };
      json out{{"dominated", rep.dominated},
               {"strict_terms", names(rep.strict_terms)},
               {"equal_terms", names(rep.equal_terms)}};
      return emit(out, io, rep.dominated ? kExitOk : kExitClaimViolated);
    });
    CLI::App* sample = grp->add_subcommand("sample", "numeric sweep of the simplex");
    sample->add_option("--count", count, "number of sample points")->required();
    sample->add_option("--seed", seed, "RNG seed");
    add_output_flag(sample, io);
    bind(sample, [&]() {
      double max_lhs = 0.0, min_gap = 0.0;
      for (const auto& p : imo::ineq::sample_simplex(count, seed)) {
        max_lhs = std::max(max_lhs, imo::ineq::lhs_value(p));
        min_gap = std::min(min_gap, imo::ineq::amgm_gap(p));
      }
      bool holds = max_lhs < 1.0 && min_gap >= -1e-14;
      json out{{"count", count},
               {"max_lhs_value", max_lhs},
               {"min_amgm_gap", min_gap},
               {"all_claims_hold", holds}};
      return emit(out, io, holds ? kExitOk : kExitClaimViolated);
    });
  }

  // schema
  {
    CLI::App* schema = app.add_subcommand("schema", "input/output schema of a subcommand");
    schema->add_option("name", schema_name, "e.g. pebbles.solve")->required();
    add_output_flag(schema, io);
    bind(schema, [&]() {
      const auto& table = schema_table();
      auto it = table.find(schema_name);
      if (it == table.end())
        throw imo::validation_error("unknown subcommand: " + schema_name);
      return emit(it->second, io, kExitOk);
    });
  }

  // selftest
  {
    CLI::App* selftest = app.add_subcommand("selftest", "run all module property suites");
    selftest->add_option("--seed", seed, "RNG seed (default 0)");
    add_output_flag(selftest, io);
    bind(selftest, [&]() { return run_selftest(seed, io); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const imo::validation_error& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return kExitUsage;
  } catch (const imo::contract_violation& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return kExitClaimViolated;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    return kExitClaimViolated;
  }
  return exit_code;
}
