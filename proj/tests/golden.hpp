// Golden reference data shared by the unit tests and the acceptance runner:
// transcribed matrices, polynomials and vectors for the named configurations.
#pragma once

#include <string>
#include <vector>

#include "mvt/rational.hpp"
#include "mvt/vector_config.hpp"

namespace golden {

// Liftability matrix of the quadrilateral set, one row per line.
inline const std::vector<std::string> kQsLiftMatrix = {
    "[2,3,q] & -[1,3,q] & [1,2,q] & 0 & 0 & 0",
    "[5,6,q] & 0 & 0 & 0 & -[1,6,q] & [1,5,q]",
    "0 & [4,6,q] & 0 & -[2,6,q] & 0 & [2,4,q]",
    "0 & 0 & [4,5,q] & -[3,5,q] & [3,4,q] & 0",
};

// Per-column matrices in compact bracket notation (one character per point).
inline const std::vector<std::string> kPascalPerColumn = {
    "[68q_1] & 0 & 0 & 0 & 0 & -[18q_6] & 0 & [16q_8] & 0",
    "[57q_1] & 0 & 0 & 0 & -[17q_5] & 0 & [15q_7] & 0 & 0",
    "0 & [47q_2] & 0 & -[27q_4] & 0 & 0 & [24q_7] & 0 & 0",
    "0 & [69q_2] & 0 & 0 & 0 & -[29q_6] & 0 & 0 & [26q_9]",
    "0 & 0 & [48q_3] & -[38q_4] & 0 & 0 & 0 & [34q_8] & 0",
    "0 & 0 & [59q_3] & 0 & -[39q_5] & 0 & 0 & 0 & [35q_9]",
    "0 & 0 & 0 & 0 & 0 & 0 & [89q_7] & -[79q_8] & [78q_9]",
};

inline const std::vector<std::string> kPappusPerColumn = {
    "[23q_1] & [-13q_2] & [12q_3] & 0 & 0 & 0 & 0& 0 & 0",
    "[68q_1] & 0 & 0 & 0 & 0 & -[18q_6] & 0 & [16q_8] & 0",
    "[57q_1] & 0 & 0 & 0 & -[17q_5] & 0 & [15q_7] & 0 & 0",
    "0 & [47q_2] & 0 & -[27q_4] & 0 & 0 & [24q_7] & 0 & 0",
    "0 & [69q_2] & 0 & 0 & 0 & -[29q_6] & 0 & 0 & [26q_9]",
    "0 & 0 & [48q_3] & -[38q_4] & 0 & 0 & 0 & [34q_8] & 0",
    "0 & 0 & [59q_3] & 0 & -[39q_5] & 0 & 0 & 0& [35q_9]",
    "0 & 0 & 0 & 0 & 0 & 0 & [89q_7] & -[79q_8] & [78q_9]",
    "0 & 0 & 0 & [56q_4] & -[46q_5] & [45q_6] & 0 & 0 & 0",
};

// The Pappus matrix with index 9 omitted.
inline const std::vector<std::string> kPappusOmit9 = {
    "[23q_1] & [-13q_2] & [12q_3] & 0 & 0 & 0 & 0 & 0",
    "[68q_1] & 0 & 0 & 0 & 0 & -[18q_6] & 0 & [16q_8]",
    "[57q_1] & 0 & 0 & 0 & -[17q_5] & 0 & [15q_7] & 0",
    "0 & [47q_2] & 0 & -[27q_4] & 0 & 0 & [24q_7] & 0",
    "0 & 0 & [48q_3] & -[38q_4] & 0 & 0 & 0 & [34q_8]",
    "0 & 0 & 0 & [56q_4] & -[46q_5] & [45q_6] & 0 & 0",
};

inline const std::vector<std::string> kPascalCircuitBrackets = {
    "[1,6,8]", "[1,5,7]", "[2,4,7]", "[2,6,9]", "[3,4,8]", "[3,5,9]", "[7,8,9]",
};

inline const std::vector<std::string> kPappusCircuitBrackets = {
    "[1,2,3]", "[1,6,8]", "[1,5,7]", "[2,4,7]", "[2,6,9]", "[3,4,8]", "[3,5,9]", "[7,8,9]", "[4,5,6]",
};

// Grassmann-Cayley polynomials in printed form.
inline const std::vector<std::string> kPascalGcPrinted = {
    "[1,5,3][1,4,2][5,4,6][3,2,6]-[1,5,4][1,3,2][5,3,6][4,2,6]",
    "[5,2,6][3,6,1][7,3,4]-[3,2,6][3,6,1][7,5,4]+[3,2,6][4,6,1][7,5,3]",
    "[7,4,9][3,6,1]-[4,6,1][7,3,9]",
};

inline const std::vector<std::string> kPappusGcPrinted = {
    "[2,3,5][7,6,8]-[2,3,7][5,6,8]", "[1,3,4][7,6,9]-[1,3,7][4,6,9]", "[1,2,4][8,5,9]-[1,2,8][4,5,9]",
    "[2,4,1][5,8,9]-[2,4,5][1,8,9]", "[7,9,1][6,3,4]-[7,9,6][1,3,4]", "[2,6,3][5,7,8]-[2,6,5][3,7,8]",
    "[2,7,3][8,5,6]-[2,7,8][3,5,6]", "[4,6,1][7,3,9]-[4,6,7][1,3,9]", "[2,9,1][8,4,5]-[2,9,8][1,4,5]",
};

// Three equivalent forms of the concurrency condition for the lines 12, 34, 56.
inline const std::vector<std::string> kConcurrencyForms = {
    "[1,2,3][4,5,6]-[1,2,4][3,5,6]",
    "[1,2,5][6,3,4]-[1,2,6][5,3,4]",
    "[3,4,5][6,1,2]-[3,4,6][5,1,2]",
};

// Depth-one polynomial for point 5 of the Fano plane and its substitution
// by the meet 45 ∧ 16 in place of point 3.
inline const std::string kFanoDepthOne = "[1,2,3][4,6,7]-[1,2,4][3,6,7]";
inline const std::string kFanoSubstituted = "[1,2,6][4,5,1][4,6,7]+[1,2,4][1,6,7][4,5,6]";

// Realization of the quadrilateral set; the columns belong to the points
// 1, 2, 5, 4, 3, 6 in this order.
inline mvt::VectorConfig qs_realization() {
  return mvt::VectorConfig::from_rows(6, {1, 2, 5, 4, 3, 6},
                                      {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 0, 1}});
}

// A configuration in the circuit variety of the quadrilateral set that is
// not a realization ({1,3} is dependent).
inline mvt::VectorConfig qs_degenerate() {
  return mvt::VectorConfig::from_rows(6, {1, 2, 3, 4, 5, 6},
                                      {{1, 0, 3, 0, 2, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
}

// The 14-point example: columns 4..14 given, points 1, 2, 3 left at zero to
// be constructed by meets.
inline mvt::VectorConfig example_f() {
  return mvt::VectorConfig::from_rows(
      14, {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 1, 2, 3},
      {{1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0},
       {0, 1, 0, 1, 2, 4, 5, 6, 7, 9, 8, 0, 0, 0},
       {0, 0, 1, 1, 3, 8, 7, 10, 12, 21, 17, 0, 0, 0}});
}

// Limits ξ of the one-parameter families, as printed with their column labels.
inline mvt::VectorConfig xi_pascal_aux(const mvt::Q& x, const mvt::Q& y) {
  return mvt::VectorConfig::from_rows(9, {9, 4, 5, 6, 2, 3, 7, 8},
                                      {{1, 0, 0, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 0, 0, x, y}, {0, 0, 1, 1, 0, 0, 0, 0}});
}

inline mvt::VectorConfig xi_pappus_a1(const mvt::Q& z) {
  return mvt::VectorConfig::from_rows(
      9, {1, 4, 5, 8, 3, 6, 2, 7, 9},
      {{1, 0, 0, 1, 1, 0, 1, 1, 0}, {0, 1, 0, 1, 1 + z, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0, 0}});
}

inline mvt::VectorConfig xi_pappus_b1(const mvt::Q& z) {
  return mvt::VectorConfig::from_rows(
      9, {1, 5, 3, 8, 4, 2, 6, 7, 9},
      {{1, 0, 0, 1, 1, 1, 1, 1, 0}, {0, 1, 0, 1, 1, 0, 0, z, 0}, {0, 0, 1, 1, 0, 0, 0, 0, 0}});
}

inline mvt::VectorConfig xi_pappus_c1(const mvt::Q& z) {
  return mvt::VectorConfig::from_rows(
      9, {1, 5, 3, 8, 4, 2, 6, 7, 9},
      {{1, 0, 0, 1, 1, 0, 1, 1, 0}, {0, 1, 0, 1, 1, 0, 1 + z, 1, 0}, {0, 0, 1, 1, 1 + z, 1, 1 + z, 0, 0}});
}

inline mvt::VectorConfig xi_pappus_d1(const mvt::Q& w) {
  return mvt::VectorConfig::from_rows(
      9, {1, 5, 3, 6, 4, 8, 2, 7, 9},
      {{1, 0, 0, 1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 1, 1, 0, w, 0}, {0, 0, 1, 1, 0, 1, 0, 0, 0}});
}

// Printed ξ for a supported family and parameter list (defaults when empty).
inline mvt::VectorConfig printed_xi(const std::string& name, const std::vector<mvt::Q>& params) {
  auto at = [&](std::size_t i, int dflt) { return i < params.size() ? params[i] : mvt::Q(dflt); };
  if (name == "pascal-aux") return xi_pascal_aux(at(0, 2), at(1, 3));
  if (name == "pappus-A1") return xi_pappus_a1(at(0, 2));
  if (name == "pappus-B1") return xi_pappus_b1(at(0, 2));
  if (name == "pappus-C1") return xi_pappus_c1(at(0, 2));
  return xi_pappus_d1(at(0, 2));
}

// Coefficients of det(γ1, γ2, γ4) = A l² + B l + C for the parametrized
// construction with γ4..γ7 the standard frame and γi = (1, y_i, z_i) for
// i = 8..12. Arrays are indexed by point label.
struct QuadraticCoefficients {
  mvt::Q a, b, c;
};

inline QuadraticCoefficients parameter_quadratic(const mvt::Q* y, const mvt::Q* z) {
  const mvt::Q &y8 = y[8], &y9 = y[9], &y10 = y[10], &y11 = y[11], &y12 = y[12];
  const mvt::Q &z8 = z[8], &z9 = z[9], &z10 = z[10], &z11 = z[11], &z12 = z[12];
  QuadraticCoefficients k;
  k.a = -y8 * y8 * z9 * z11 + y8 * y12 * z9 * z11 + y11 * y10 * z9 * z8 - y10 * y12 * z9 * z8 +
        y9 * y8 * z11 * z8 - y8 * y10 * z11 * z8 - y9 * y12 * z11 * z8 + y10 * y12 * z11 * z8 +
        y8 * y8 * z11 * z10 - y8 * y12 * z11 * z10 - y9 * y11 * z8 * z10 + y9 * y12 * z8 * z10 -
        y11 * y8 * z9 * z12 + y8 * y8 * z9 * z12 + y9 * y11 * z8 * z12 - y9 * y8 * z8 * z12 -
        y11 * y10 * z8 * z12 + y8 * y10 * z8 * z12 + y11 * y8 * z10 * z12 - y8 * y8 * z10 * z12;
  k.b = y8 * y12 * z9 * z11 + y11 * y10 * z9 * z8 - y10 * y12 * z9 * z8 - y9 * y12 * z11 * z8 +
        y10 * y12 * z11 * z8 - y8 * y12 * z11 * z10 - y9 * y11 * z8 * z10 + y9 * y12 * z8 * z10 -
        y11 * y8 * z9 * z12 + y9 * y11 * z8 * z12 - y11 * y10 * z8 * z12 + y11 * y8 * z10 * z12 +
        y11 * y10 * z9 - y10 * y12 * z9 + y9 * y8 * z11 - y8 * y10 * z11 - y9 * y12 * z11 +
        y10 * y12 * z11 - 2 * y8 * z9 * z11 + y12 * z9 * z11 + y9 * z11 * z8 - y10 * z11 * z8 -
        y9 * y11 * z10 + y9 * y12 * z10 + 2 * y8 * z11 * z10 - y12 * z11 * z10 + y9 * y11 * z12 -
        y9 * y8 * z12 - y11 * y10 * z12 + y8 * y10 * z12 - y11 * z9 * z12 + 2 * y8 * z9 * z12 -
        y9 * z8 * z12 + y10 * z8 * z12 + y11 * z10 * z12 - 2 * y8 * z10 * z12;
  k.c = y11 * y10 * z9 - y10 * y12 * z9 - y9 * y12 * z11 + y10 * y12 * z11 + y12 * z9 * z11 -
        y9 * y11 * z10 + y9 * y12 * z10 - y12 * z11 * z10 + y9 * y11 * z12 - y11 * y10 * z12 -
        y11 * z9 * z12 + y11 * z10 * z12 + y9 * z11 - y10 * z11 - z9 * z11 + z11 * z10 - y9 * z12 +
        y10 * z12 + z9 * z12 - z10 * z12;
  return k;
}

}  // namespace golden
