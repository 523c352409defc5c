// One-parameter families of vector configurations whose entries are
// polynomials in ε with rational coefficients, with generic membership
// checks and limits as ε → 0.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvt/json_io.hpp"
#include "mvt/matroid.hpp"
#include "mvt/rational.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Q& c);  // NOLINT: constants convert implicitly
  explicit UPoly(std::vector<Q> coeffs);
  static UPoly eps(int k = 1);  // ε^k

  const std::vector<Q>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;                                           // -1 for zero
  Q coeff(int k) const;
  Q operator()(const Q& e) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<Q> c_;
};

std::string to_string(const UPoly& p);  // e.g. "1+2e-1/3e^2"

using PolyVec3 = std::array<UPoly, 3>;
UPoly det3(const PolyVec3& a, const PolyVec3& b, const PolyVec3& c);
PolyVec3 cross(const PolyVec3& a, const PolyVec3& b);

class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProjectiveFamily {
  std::string name;
  std::vector<PolyVec3> columns;  // index 0 unused
  int size() const { return static_cast<int>(columns.size()) - 1; }
  VectorConfig at(const Q& e) const;
};

ProjectiveFamily constant_family(const VectorConfig& cfg);

// Over the field Q(ε): every dependent set of m of size at most three has
// identically vanishing minors and every independent set keeps a nonzero
// minor. Zero columns are therefore allowed exactly at loops.
bool family_member_check(const ProjectiveFamily& f, const Matroid& m);
// Column-wise ε^{-k} scaling (k the least valuation of the column) followed by
// ε = 0. Zero columns stay zero.
VectorConfig family_limit(const ProjectiveFamily& f);

// A named degeneration family together with the matroid it lies in
// and the target configuration its limit should reach.
struct NamedFamily {
  ProjectiveFamily family;
  Matroid base;     // generic members realize this matroid
  Matroid target;   // the printed ξ realizes this matroid
  VectorConfig xi;  // printed ξ for the chosen parameters
  std::vector<std::string> parameters;  // "x=2", ...
};

// Supported: "pascal-aux" (parameters x, y), "pappus-A1", "pappus-B1",
// "pappus-C1" (parameter z) and "pappus-D1" (parameter w). The two
// families that need algebraic extensions, "pappus-B-sqrt" and
// "third93-cube-root", throw UnsupportedFamily.
const std::vector<std::string>& family_names();
const std::vector<std::string>& unsupported_family_names();
NamedFamily named_family(const std::string& name, const std::vector<Q>& params = {});

json family_to_json(const ProjectiveFamily& f);
ProjectiveFamily family_from_json(const json& j);

}  // namespace mvt
