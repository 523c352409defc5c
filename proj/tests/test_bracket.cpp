// Bracket polynomials, randomized identity testing, Grassmann-Cayley
// expansion and generator emission.
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "golden.hpp"
#include "mvt/bracket.hpp"
#include "mvt/fixtures.hpp"
#include "mvt/geometry.hpp"

using namespace mvt;

namespace {

Matroid named(const std::string& n) { return load_config(n).matroid; }
BracketPoly br(int a, int b, int c) { return BracketPoly::bracket(a, b, c); }

// Random polynomial of degree two in the points 1..6.
BracketPoly random_poly(Sampler& rng) {
  BracketPoly p;
  for (int t = 0; t < 3; ++t) {
    auto pick = [&] { return static_cast<int>(rng.integer(1, 6)); };
    p = p + (br(pick(), pick(), pick()) * br(pick(), pick(), pick())).scaled(rng.integer(-3, 3));
  }
  return p;
}

// Realizations of a configuration: propagated for constructible fixtures,
// otherwise a known realization moved by random column scalings and a
// random invertible transform.
std::vector<VectorConfig> sample_realizations(const std::string& name, int count) {
  Matroid m = named(name);
  std::vector<VectorConfig> out;
  auto known = known_realization(name);
  for (int s = 0; static_cast<int>(out.size()) < count && s < 4 * count; ++s) {
    if (!known) {
      auto cert = propagate_realization(m, static_cast<std::uint64_t>(s));
      if (cert.outcome == RealizationCertificate::Outcome::Realization) out.push_back(cert.cfg);
      continue;
    }
    Sampler rng(static_cast<std::uint64_t>(s));
    Vec3 r0 = rng.nonzero_vec(), r1 = rng.nonzero_vec(), r2 = rng.nonzero_vec();
    if (det3(r0, r1, r2) == 0) continue;
    VectorConfig c(m.ground_size());
    for (int p = 1; p <= m.ground_size(); ++p) {
      const Vec3& v = (*known)[p];
      Q k = rng.nonzero_rational();
      c[p] = make_vec(k * dot(r0, v), k * dot(r1, v), k * dot(r2, v));
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_SUITE("bracket") {
  TEST_CASE("bracket normalization") {
    auto a = normalize_bracket(2, 1, 3);
    CHECK(a.sign == -1);
    CHECK(a.bracket == Bracket{1, 2, 3});
    CHECK(normalize_bracket(1, 1, 2).sign == 0);
    CHECK(normalize_bracket(3, 2, 1).sign == -1);
    CHECK(normalize_bracket(2, 3, 1).sign == 1);
    Sampler rng(1);
    for (int t = 0; t < 200; ++t) {
      int x = static_cast<int>(rng.integer(1, 5)), y = static_cast<int>(rng.integer(1, 5)),
          z = static_cast<int>(rng.integer(1, 5));
      auto n = normalize_bracket(x, y, z);
      if (n.sign == 0) continue;
      auto twice = normalize_bracket(n.bracket[0], n.bracket[1], n.bracket[2]);
      CHECK(twice.sign == 1);
      CHECK(twice.bracket == n.bracket);
    }
  }

  TEST_CASE("polynomial arithmetic") {
    BracketPoly p = br(1, 2, 3) * br(4, 5, 6) - br(1, 2, 4) * br(3, 5, 6);
    CHECK((p + p.scaled(-1)).is_zero());
    CHECK((br(1, 2, 3) * br(4, 5, 6)).size() == 1);
    CHECK(br(1, 1, 2).is_zero());
    CHECK(br(2, 1, 3) == -br(1, 2, 3));
    CHECK(p.sign_normalized() == (-p).sign_normalized());
  }

  TEST_CASE("text round trip") {
    Sampler rng(2);
    for (int t = 0; t < 50; ++t) {
      BracketPoly p = random_poly(rng);
      CHECK(parse_poly(to_text(p)) == p);
    }
    CHECK(to_text(BracketPoly()) == "0");
    CHECK(parse_poly("[-13q_2]") == -BracketPoly::bracket(1, 3, sym_q(2)));
    CHECK(parse_poly("[68q_1]") == BracketPoly::bracket(6, 8, sym_q(1)));
  }

  TEST_CASE("evaluation") {
    Assignment e = {{1, unit_vec(1)}, {2, unit_vec(2)}, {3, unit_vec(3)}};
    CHECK(evaluate(br(1, 2, 3), e) == 1);
    BracketPoly gc3 = parse_poly(golden::kConcurrencyForms[0]);
    // Three lines through a common point 7.
    auto cert = propagate_realization(named("three-lines"), 0);
    REQUIRE(cert.outcome == RealizationCertificate::Outcome::Realization);
    CHECK(evaluate(gc3, assignment_from(cert.cfg)) == 0);
    Sampler rng(3);
    bool nonzero = false;
    for (int t = 0; t < 10 && !nonzero; ++t) nonzero = evaluate(gc3, random_assignment(gc3.symbols(), rng)) != 0;
    CHECK(nonzero);
  }

  TEST_CASE("identity testing") {
    const auto& f = golden::kConcurrencyForms;
    // The three forms agree up to sign.
    for (const auto& a : f)
      for (const auto& b : f) CHECK(identity_test(parse_poly(a), parse_poly(b), 20, 0, true));
    CHECK(identity_test(parse_poly(f[0]), -parse_poly(f[1]), 20, 0));
    BracketPoly p = parse_poly(f[0]);
    CHECK_FALSE(identity_test(p, p + br(1, 2, 3), 20, 0));
    CHECK(identity_test(p, -p, 20, 0, true));
    CHECK_FALSE(identity_test(p, -p, 20, 0, false));
    Sampler rng(4);
    for (int t = 0; t < 30; ++t) {
      BracketPoly a = random_poly(rng), b = random_poly(rng);
      CHECK(identity_test(a, a, 5, t));
      CHECK(identity_test(a, b, 5, t) == identity_test(b, a, 5, t));
      CHECK(identity_test(a, b, 5, t, false, Exec::Serial) == identity_test(a, b, 5, t, false, Exec::Parallel));
    }
  }

  TEST_CASE("the quadratic syzygy holds") {
    Sampler rng(5);
    for (int t = 0; t < 40; ++t) {
      std::array<int, 3> a, b;
      for (auto& x : a) x = static_cast<int>(rng.integer(1, 8));
      for (auto& x : b) x = static_cast<int>(rng.integer(1, 8));
      BracketPoly lhs = br(a[0], a[1], a[2]) * br(b[0], b[1], b[2]);
      BracketPoly rhs;
      for (int j = 0; j < 3; ++j) {
        std::array<int, 3> c = b;
        c[j] = a[2];
        rhs = rhs + br(a[0], a[1], b[j]) * br(c[0], c[1], c[2]);
      }
      CHECK(identity_test(lhs, rhs, 10, t));
    }
  }

  TEST_CASE("meets of two spans") {
    VectorExpr m = meet22(1, 2, 3, 4);
    CHECK(m.size() == 2);
    CHECK(m.at(4) == br(1, 2, 3));
    CHECK(m.at(3) == -br(1, 2, 4));
    Sampler rng(6);
    VectorExpr same = meet22(1, 2, 1, 2);
    CHECK(is_zero(evaluate(same, random_assignment({1, 2}, rng))));
  }

  TEST_CASE("Grassmann-Cayley expansion matches the printed polynomials") {
    CHECK(identity_test(expand_gc("(34^12)v56"), parse_poly(golden::kConcurrencyForms[0]), 20, 0, true));
    CHECK(identity_test(expand_gc("7v9v(34^61)"), parse_poly(golden::kPascalGcPrinted[2]), 20, 0, true));
    CHECK(identity_test(expand_gc("(15^24)v(16^34)v(35^26)"), parse_poly(golden::kPascalGcPrinted[0]), 20, 0, true));
    CHECK(identity_test(expand_gc("7v(53^26)v(34^61)"), parse_poly(golden::kPascalGcPrinted[1]), 20, 0, true));
    CHECK_THROWS_AS(expand_gc("12"), std::invalid_argument);
  }

  TEST_CASE("curated recipes reproduce the printed polynomials") {
    const auto& pascal = curated_recipe("pascal-7");
    REQUIRE(pascal.size() == 7);
    int printed = 0;
    for (const auto& r : pascal) {
      if (r.printed.empty()) continue;
      ++printed;
      CHECK(std::find(golden::kPascalGcPrinted.begin(), golden::kPascalGcPrinted.end(), r.printed) !=
            golden::kPascalGcPrinted.end());
      CHECK(identity_test(expand_gc(r.expression), parse_poly(r.printed), 20, 0, true));
    }
    CHECK(printed == 3);
    const auto& pappus = curated_recipe("pappus-9");
    REQUIRE(pappus.size() == 9);
    for (std::size_t i = 0; i < pappus.size(); ++i) {
      CHECK(pappus[i].printed == golden::kPappusGcPrinted[i]);
      CHECK(identity_test(expand_gc(pappus[i].expression), parse_poly(golden::kPappusGcPrinted[i]), 20, 0, true));
    }
  }

  TEST_CASE("expansion agrees with geometric evaluation on 500 assignments") {
    std::vector<std::string> exprs = {"(34^12)v56"};
    for (const auto& r : curated_recipe("pascal-7")) exprs.push_back(r.expression);
    for (const auto& r : curated_recipe("pappus-9")) exprs.push_back(r.expression);
    Sampler rng(7);
    for (int t = 0; t < 500; ++t) {
      const auto& e = exprs[static_cast<std::size_t>(t) % exprs.size()];
      GCExpr g = parse_gc(e);
      BracketPoly p = expand_gc(g);
      Assignment asg = random_assignment(p.symbols(), rng);
      CHECK(evaluate(p, asg) == evaluate_gc_geometric(g, asg));
    }
  }

  TEST_CASE("expression text round trip") {
    for (const auto& r : curated_recipe("pascal-7")) {
      GCExpr g = parse_gc(r.expression);
      CHECK(expand_gc(parse_gc(gc_text(g))) == expand_gc(g));
    }
  }

  TEST_CASE("circuit generators") {
    auto pascal = circuit_generators(named("pascal"));
    REQUIRE(pascal.size() == 7);
    std::vector<BracketPoly> got, want;
    for (const auto& g : pascal) {
      CHECK(g.kind == CircuitGenerator::Kind::Bracket);
      got.push_back(g.poly);
    }
    for (const auto& s : golden::kPascalCircuitBrackets) want.push_back(parse_poly(s));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(circuit_generators(named("pappus")).size() == 9);
    CHECK(circuit_generators(uniform(3, 5)).empty());

    // Loops give coordinate entries, parallel pairs give 2x2 minors.
    Matroid odd = set_loops(identify_points(named("pascal"), 1, 2), {9});
    bool entry = false, minor = false;
    for (const auto& g : circuit_generators(odd)) {
      entry |= g.kind == CircuitGenerator::Kind::Entry;
      minor |= g.kind == CircuitGenerator::Kind::Minor;
    }
    CHECK(entry);
    CHECK(minor);
  }

  TEST_CASE("point substitution") {
    BracketPoly fano = parse_poly(golden::kFanoDepthOne);
    bool changed = false;
    BracketPoly sub = substitute_point(fano, 3, {4, 5}, {1, 6}, &changed);
    CHECK(changed);
    CHECK(identity_test(sub, parse_poly(golden::kFanoSubstituted), 20, 0));

    BracketPoly iii = parse_poly(golden::kPascalGcPrinted[2]);
    BracketPoly ii = substitute_point(iii, 9, {5, 3}, {2, 6});
    CHECK(identity_test(ii, parse_poly(golden::kPascalGcPrinted[1]), 20, 0, true));

    BracketPoly fixed = substitute_point(br(1, 2, 3), 9, {4, 5}, {6, 7}, &changed);
    CHECK_FALSE(changed);
    CHECK(fixed == br(1, 2, 3));
  }

  TEST_CASE("Grassmann-Cayley generators by depth") {
    Matroid pascal = named("pascal");
    CHECK(gc_generators(pascal, 1).size() == 3);
    CHECK(gc_generators(pascal, 2).size() == 15);
    CHECK(gc_generators(pascal, 3).size() == 51);
    auto pappus = gc_generators(named("pappus"), 1);
    REQUIRE(pappus.size() == 9);
    // Every generated polynomial matches one printed polynomial and conversely.
    for (const auto& g : pappus) {
      int hits = 0;
      for (const auto& s : golden::kPappusGcPrinted) hits += identity_test(g, parse_poly(s), 10, 0, true);
      CHECK(hits == 1);
    }
    for (const auto& s : golden::kPappusGcPrinted) {
      int hits = 0;
      for (const auto& g : pappus) hits += identity_test(g, parse_poly(s), 10, 0, true);
      CHECK(hits == 1);
    }
    CHECK(gc_generators(uniform(3, 6), 2).empty());
  }

  TEST_CASE("all generators vanish on 200 realizations per fixture") {
    for (const std::string name : {"pascal", "pappus", "qs", "grid3", "three-lines", "third93", "cactus-fig"}) {
      CAPTURE(name);
      Matroid m = named(name);
      auto circuits = circuit_generators(m);
      auto gcs = gc_generators(m, 2);
      std::vector<BracketPoly> curated;
      if (name == "pascal" || name == "pappus")
        for (const auto& r : curated_recipe(name)) curated.push_back(expand_gc(r.expression));
      auto cfgs = sample_realizations(name, 200);
      REQUIRE(cfgs.size() == 200);
      int nonzero = 0;
      for (const auto& cfg : cfgs) {
        CHECK(is_realization(cfg, m));
        Assignment asg = assignment_from(cfg);
        for (const auto& g : circuits) nonzero += evaluate(g, cfg) != 0;
        for (const auto& g : gcs) nonzero += evaluate(g, asg) != 0;
        for (const auto& g : curated) nonzero += evaluate(g, asg) != 0;
      }
      CHECK(nonzero == 0);
    }
  }
}
