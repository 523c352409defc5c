// Exact rational scalars, 3-vectors and the seeded sampler shared by every
// randomized check in the library.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>

namespace mvt {

using Q = mpq_class;
using Z = mpz_class;
using Vec3 = std::array<Q, 3>;

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Q& x);
std::string to_string(const Z& x);
std::string to_string(const Vec3& v);  // "(a,b,c)"

// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Q parse_rational(const std::string& text);

Vec3 make_vec(const Q& a, const Q& b, const Q& c);
Vec3 zero_vec();
Vec3 unit_vec(int i);  // e_1, e_2, e_3 for i = 1, 2, 3
bool is_zero(const Vec3& v);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Q& s, const Vec3& v);
Vec3 cross(const Vec3& a, const Vec3& b);
Q dot(const Vec3& a, const Vec3& b);
Q det3(const Vec3& u, const Vec3& v, const Vec3& w);

// Projective equality: both nonzero and parallel (cross product vanishes).
bool proj_equal(const Vec3& a, const Vec3& b);

// Derives independent sub-seeds so that parallel work items draw the same
// numbers regardless of scheduling.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

// Seeded source of small random rationals: numerator uniform in
// [-999, 999], denominator uniform in [1, 999].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  Q rational();
  Q nonzero_rational();
  Vec3 vec();
  Vec3 nonzero_vec();
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mvt
