// Rational scalars, vectors, the seeded sampler and dense linear algebra.
#include <doctest.h>

#include <set>

#include "mvt/linalg.hpp"
#include "mvt/rational.hpp"
#include "oracles.hpp"

using namespace mvt;

TEST_SUITE("rational") {
  TEST_CASE("rationals print in lowest terms") {
    CHECK(to_string(Q(6, 4)) == "3/2");
    CHECK(to_string(Q(-4, 2)) == "-2");
    CHECK(to_string(Q(0)) == "0");
    CHECK(to_string(make_vec(1, Q(1, 3), -2)) == "(1,1/3,-2)");
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == Q(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }

  TEST_CASE("determinant of the standard basis and the cofactor oracle") {
    CHECK(det3(unit_vec(1), unit_vec(2), unit_vec(3)) == 1);
    // Integer representatives of the two constructed points against e_1.
    CHECK(det3(make_vec(3, 13, 23), make_vec(12, 65, 80), unit_vec(1)) == -455);
    Sampler rng(3);
    for (int i = 0; i < 200; ++i) {
      Vec3 a = rng.vec(), b = rng.vec(), c = rng.vec();
      CHECK(det3(a, b, c) == oracle::det3_cofactor(a, b, c));
      CHECK(dot(cross(a, b), c) == det3(a, b, c));
    }
  }

  TEST_CASE("projective equality") {
    CHECK(proj_equal(make_vec(1, 2, 3), make_vec(-2, -4, -6)));
    CHECK_FALSE(proj_equal(make_vec(1, 2, 3), make_vec(1, 2, 4)));
    CHECK_FALSE(proj_equal(zero_vec(), zero_vec()));
  }

  TEST_CASE("sampler is deterministic per seed and sub-seeds differ") {
    Sampler a(42), b(42);
    for (int i = 0; i < 50; ++i) CHECK(a.rational() == b.rational());
    std::set<std::uint64_t> seeds;
    for (int i = 0; i < 100; ++i) seeds.insert(sub_seed(7, i));
    CHECK(seeds.size() == 100);
    Sampler c(1);
    for (int i = 0; i < 100; ++i) CHECK(c.nonzero_rational() != 0);
  }

  TEST_CASE("rank and kernel of exact matrices") {
    QMatrix a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(matrix_rank(a) == 2);
    auto k = kernel_basis(a, 3);
    REQUIRE(k.size() == 1);
    for (Q x : mat_vec(a, k[0])) CHECK(x == 0);
    CHECK(kernel_dim({}, 4) == 4);
  }

  TEST_CASE("rank-nullity on random rational matrices") {
    Sampler rng(11);
    for (int t = 0; t < 60; ++t) {
      int rows = static_cast<int>(rng.integer(1, 5)), cols = static_cast<int>(rng.integer(1, 6));
      QMatrix a(rows, std::vector<Q>(cols));
      for (auto& r : a)
        for (auto& x : r) x = rng.integer(0, 2) == 0 ? Q(0) : rng.rational();
      // Duplicate a row to force dependencies now and then.
      if (rows > 1 && t % 3 == 0) a[1] = a[0];
      auto basis = kernel_basis(a, cols);
      CHECK(matrix_rank(a) + static_cast<int>(basis.size()) == cols);
      for (const auto& v : basis)
        for (Q x : mat_vec(a, v)) CHECK(x == 0);
    }
  }
}
