// Liftability matrices, their kernels, the lifting dimension and the
// lifting-generator counts.
#include <doctest.h>

#include <sstream>

#include "golden.hpp"
#include "mvt/fixtures.hpp"
#include "mvt/geometry.hpp"
#include "mvt/lifting.hpp"
#include "oracles.hpp"

using namespace mvt;

namespace {

Matroid named(const std::string& n) { return load_config(n).matroid; }

std::vector<std::string> rows_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Rewrites a printed row in compact notation into the library's entry format.
std::string canonical_row(const std::string& row) {
  std::string out;
  std::istringstream in(row);
  bool first = true;
  for (std::string cell; std::getline(in, cell, '&');) {
    auto b = cell.find_first_not_of(' '), e = cell.find_last_not_of(' ');
    cell = cell.substr(b, e - b + 1);
    if (!first) out += " & ";
    first = false;
    out += cell == "0" ? "0" : entry_text(parse_poly(cell));
  }
  return out;
}

std::vector<std::string> canonical_rows(const std::vector<std::string>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(canonical_row(r));
  return out;
}

// Independent lifting check: every 3-circuit stays dependent after γ_i += z_i q.
bool lifted_circuits_vanish(const Matroid& m, const VectorConfig& cfg, const Vec3& q, const std::vector<Q>& z) {
  auto lifted = [&](int p) { return cfg[p] + z[p - 1] * q; };
  for (const auto& c : three_circuits(m))
    if (oracle::det3_cofactor(lifted(c[0]), lifted(c[1]), lifted(c[2])) != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("lifting") {
  TEST_CASE("liftability matrix of the quadrilateral set") {
    NamedConfig qs = load_config("qs");
    LiftMatrix lm = lift_matrix(qs.matroid, QMode::Single, presentation_lines(qs));
    CHECK(rows_of(matrix_text(lm)) == golden::kQsLiftMatrix);
  }

  TEST_CASE("per-column matrices of Pascal and Pappus") {
    NamedConfig pascal = load_config("pascal");
    LiftMatrix p = lift_matrix(pascal.matroid, QMode::PerColumn, presentation_lines(pascal));
    CHECK(rows_of(matrix_text(p)) == canonical_rows(golden::kPascalPerColumn));
    CHECK(rows_of(matrix_text(lifting_generator_matrices("pascal").at(0))) ==
          canonical_rows(golden::kPascalPerColumn));
    CHECK(rows_of(matrix_text(p)).back() == "0 & 0 & 0 & 0 & 0 & 0 & [8,9,q_7] & -[7,9,q_8] & [7,8,q_9]");

    auto pappus = lifting_generator_matrices("pappus");
    REQUIRE(pappus.size() == 10);
    CHECK(rows_of(matrix_text(pappus[0])) == canonical_rows(golden::kPappusPerColumn));
    CHECK(rows_of(matrix_text(pappus[9])) == canonical_rows(golden::kPappusOmit9));
    for (std::size_t i = 1; i < pappus.size(); ++i) {
      CHECK(pappus[i].rows.size() == 6);
      CHECK(pappus[i].cols.size() == 8);
    }
    CHECK_THROWS_AS(lifting_generator_matrices("fano"), std::invalid_argument);
  }

  TEST_CASE("matrix without circuits") {
    LiftMatrix lm = lift_matrix(uniform(3, 5), QMode::Single);
    CHECK(lm.entries.empty());
    CHECK(lm.cols.size() == 5);
    Sampler rng(1);
    VectorConfig cfg(5);
    for (int p = 1; p <= 5; ++p) cfg[p] = rng.nonzero_vec();
    CHECK(lift_dim(uniform(3, 5), cfg, unit_vec(3)) == 5);
  }

  TEST_CASE("evaluated matrices") {
    NamedConfig qs = load_config("qs");
    LiftMatrix lm = lift_matrix(qs.matroid, QMode::Single, presentation_lines(qs));
    QMatrix a = evaluate_lift_matrix(lm, golden::qs_realization(), {unit_vec(3)});
    REQUIRE(a.size() == 4);
    CHECK(a[0].size() == 6);
    CHECK(kernel_dim(a, 6) == lift_dim(qs.matroid, golden::qs_realization(), unit_vec(3)));
    QMatrix zero = evaluate_lift_matrix(lm, VectorConfig(6), {unit_vec(3)});
    for (const auto& r : zero)
      for (const auto& x : r) CHECK(x == 0);
  }

  TEST_CASE("lifting dimension of the two nilpotent deletions") {
    for (const auto& m : {delete_points(named("pascal"), {7}), delete_points(named("pappus"), {1, 9})}) {
      CHECK(dim_formula(m) == 4);
      CHECK(dim_recursive(m) == 4);
      CHECK(dim_ordering(m) == 4);
      auto draws = kernel_dim_draws(m, 20, 0);
      REQUIRE(draws.size() == 20);
      for (int k : draws) CHECK(k == 4);
      CHECK(kernel_dim_draws(m, 20, 0, Exec::Serial) == draws);
    }
  }

  TEST_CASE("lifting dimension of small configurations") {
    for (int k = 3; k <= 6; ++k) {
      Matroid line(k, {}, {}, {all_points(k)});
      CHECK(dim_formula(line) == 2);
      for (int v : kernel_dim_draws(line, 5, 1)) CHECK(v == 2);
    }
    CHECK(dim_formula(named("three-lines")) == 4);
    Matroid free(4, {}, {}, {});
    CHECK(dim_formula(free) == 4);
    CHECK_THROWS_AS(dim_formula(named("grid3")), std::invalid_argument);
  }

  TEST_CASE("dimension is independent of the draw on nilpotent fixtures") {
    for (const std::string name : {"three-lines", "cactus-fig", "forest-fig"}) {
      CAPTURE(name);
      Matroid m = named(name);
      CHECK(dim_recursive(m) == dim_ordering(m));
      int f = dim_formula(m);
      for (int v : kernel_dim_draws(m, 20, 3)) CHECK(v == f);
    }
  }

  TEST_CASE("kernel membership is equivalent to lifting on 100 tuples per fixture") {
    std::vector<Matroid> fixtures = {delete_points(named("pascal"), {7}), delete_points(named("pappus"), {1, 9}),
                                     named("three-lines"), named("cactus-fig"), named("qs"), named("pascal")};
    for (std::size_t f = 0; f < fixtures.size(); ++f) {
      const Matroid& m = fixtures[f];
      const int d = m.ground_size();
      int in = 0, out = 0;
      for (int t = 0; t < 100; ++t) {
        Sampler rng(sub_seed(f, t));
        VectorConfig cfg = generic_collinear_config(d, rng);
        Vec3 q = generic_q(rng);
        std::vector<Q> z(d);
        if (t % 2 == 0) {
          // A random combination of kernel basis vectors.
          LiftSpace ls = lift_space(m, cfg, q);
          for (const auto& b : ls.basis) {
            Q c = rng.rational();
            for (int i = 0; i < d; ++i) z[i] += c * b[i];
          }
        } else {
          for (auto& x : z) x = rng.rational();
        }
        bool k = in_kernel(m, cfg, q, z);
        bool l = lift_and_check(m, cfg, q, z);
        CHECK(k == l);
        CHECK(l == lifted_circuits_vanish(m, cfg, q, z));
        if (t % 2 == 0) CHECK(k);
        (k ? in : out)++;
      }
      CHECK(in >= 50);
      CHECK(out > 0);
    }
  }

  TEST_CASE("kernel membership is equivalent to lifting at realizations") {
    Matroid m = named("pascal");
    for (std::uint64_t s = 0; s < 20; ++s) {
      auto cert = propagate_realization(m, s);
      if (cert.outcome != RealizationCertificate::Outcome::Realization) continue;
      Sampler rng(s);
      Vec3 q = rng.nonzero_vec();
      std::vector<Q> z(9);
      for (auto& x : z) x = rng.rational();
      CHECK(in_kernel(m, cert.cfg, q, z) == lift_and_check(m, cert.cfg, q, z));
      std::vector<Q> zero(9);
      CHECK(lift_and_check(m, cert.cfg, q, zero));
    }
  }

  TEST_CASE("lifting-generator counts") {
    CHECK(lifting_generator_count(generator_count_spec("pascal")) == 708588);
    CHECK(lifting_generator_count(generator_count_spec("pappus")) == 2361960);
    CHECK(lifting_generator_count({}) == 0);
    for (const std::string name : {"pascal", "pappus"}) {
      long long brute = 0;
      for (const auto& item : generator_count_spec(name))
        brute += item.multiplicity * oracle::enumerate_minor_count(item.cols, item.minor, item.alphabet);
      CHECK(lifting_generator_count(generator_count_spec(name)) == Z(static_cast<long>(brute)));
    }
    // Count items agree with the shapes of the generator matrices.
    auto mats = lifting_generator_matrices("pascal");
    auto spec = generator_count_spec("pascal");
    REQUIRE(spec.size() == 1);
    CHECK(spec[0].cols == static_cast<int>(mats[0].cols.size()));
    CHECK(spec[0].minor == static_cast<int>(mats[0].rows.size()));
    CHECK(oracle::enumerate_minor_count(8, 6, 1) == 28);
    CHECK_FALSE(has_generator_count_spec("fano"));
  }

  TEST_CASE("mode parsing") {
    CHECK(parse_qmode("single") == QMode::Single);
    CHECK(parse_qmode("per-column") == QMode::PerColumn);
    CHECK_THROWS_AS(parse_qmode("both"), std::invalid_argument);
  }
}
