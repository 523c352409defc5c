// Assignment of exact rational 3-vectors to the points 1..d of a ground set.
#pragma once

#include <stdexcept>
#include <vector>

#include "mvt/rational.hpp"

namespace mvt {

class VectorConfig {
 public:
  VectorConfig() = default;
  explicit VectorConfig(int d) : v_(d + 1, zero_vec()) {}
  // Columns listed for the points in `labels` (same length as `columns`).
  static VectorConfig from_columns(int d, const std::vector<int>& labels, const std::vector<Vec3>& columns);
  // Matrix given row by row; column j belongs to point labels[j].
  static VectorConfig from_rows(int d, const std::vector<int>& labels, const std::vector<std::vector<Q>>& rows);

  int size() const { return v_.empty() ? 0 : static_cast<int>(v_.size()) - 1; }
  Vec3& operator[](int p) { return v_.at(p); }
  const Vec3& operator[](int p) const { return v_.at(p); }
  bool operator==(const VectorConfig& o) const { return v_ == o.v_; }

 private:
  std::vector<Vec3> v_;
};

inline VectorConfig VectorConfig::from_columns(int d, const std::vector<int>& labels,
                                               const std::vector<Vec3>& columns) {
  if (labels.size() != columns.size()) throw std::invalid_argument("label/column count mismatch");
  VectorConfig c(d);
  for (std::size_t j = 0; j < labels.size(); ++j) c[labels[j]] = columns[j];
  return c;
}

inline VectorConfig VectorConfig::from_rows(int d, const std::vector<int>& labels,
                                            const std::vector<std::vector<Q>>& rows) {
  if (rows.size() != 3) throw std::invalid_argument("a vector configuration matrix has three rows");
  std::vector<Vec3> cols;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (rows[0].size() != labels.size() || rows[1].size() != labels.size() || rows[2].size() != labels.size())
      throw std::invalid_argument("row length mismatch");
    cols.push_back(Vec3{rows[0][j], rows[1][j], rows[2][j]});
  }
  return from_columns(d, labels, cols);
}

}  // namespace mvt
