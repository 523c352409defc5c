#include "mvt/rational.hpp"

#include <stdexcept>

namespace mvt {

std::string to_string(const Q& x) {
  Q c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Z& x) { return x.get_str(); }

std::string to_string(const Vec3& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

Q parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw std::invalid_argument("malformed rational: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Q q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Vec3 make_vec(const Q& a, const Q& b, const Q& c) { return Vec3{a, b, c}; }
Vec3 zero_vec() { return Vec3{Q(0), Q(0), Q(0)}; }

Vec3 unit_vec(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("unit vector index must be 1..3");
  Vec3 v = zero_vec();
  v[i - 1] = 1;
  return v;
}

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return Vec3{Q(a[0] + b[0]), Q(a[1] + b[1]), Q(a[2] + b[2])};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return Vec3{Q(a[0] - b[0]), Q(a[1] - b[1]), Q(a[2] - b[2])};
}

Vec3 operator*(const Q& s, const Vec3& v) { return Vec3{Q(s * v[0]), Q(s * v[1]), Q(s * v[2])}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{Q(a[1] * b[2] - a[2] * b[1]), Q(a[2] * b[0] - a[0] * b[2]),
              Q(a[0] * b[1] - a[1] * b[0])};
}

Q dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Q det3(const Vec3& u, const Vec3& v, const Vec3& w) { return dot(u, cross(v, w)); }

bool proj_equal(const Vec3& a, const Vec3& b) {
  if (is_zero(a) || is_zero(b)) return false;
  return is_zero(cross(a, b));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

Sampler::Sampler(std::uint64_t seed) : eng_(splitmix64(seed)) {}

// Rejection sampling on raw 64-bit draws keeps the stream identical across
// standard library implementations (uniform_int_distribution is not portable).
std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = eng_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Q Sampler::rational() {
  std::int64_t num = integer(-999, 999);
  std::int64_t den = integer(1, 999);
  Q q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Q Sampler::nonzero_rational() {
  for (;;) {
    Q q = rational();
    if (q != 0) return q;
  }
}

Vec3 Sampler::vec() { return Vec3{rational(), rational(), rational()}; }

Vec3 Sampler::nonzero_vec() {
  for (;;) {
    Vec3 v = vec();
    if (!is_zero(v)) return v;
  }
}

}  // namespace mvt
