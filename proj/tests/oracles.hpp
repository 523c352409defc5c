// Independent reference computations shared by the unit tests and the
// acceptance runner. Nothing here calls into the code it is used to check
// beyond basic data types.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <vector>

#include "mvt/decomposition.hpp"
#include "mvt/rational.hpp"

namespace oracle {

// --- brute-force matroid enumeration ------------------------------------------------

// Every rank-at-most-three matroid on [d] as a dependency mask: a set of loops,
// a partition of the other points into parallel classes and a linear space on
// the classes (lines of at least three classes meeting pairwise in at most one).
inline std::vector<mvt::DepMask> all_matroid_masks(int d) {
  std::set<mvt::DepMask> out;
  for (int loops = 0; loops < (1 << d); ++loops) {
    std::vector<int> rest;
    for (int p = 1; p <= d; ++p)
      if (!((loops >> (p - 1)) & 1)) rest.push_back(p);
    // Restricted growth strings give the set partitions of `rest`.
    std::vector<int> block(rest.size(), 0);
    std::function<void(std::size_t, int)> partitions = [&](std::size_t i, int used) {
      if (i < rest.size()) {
        for (int b = 0; b <= used; ++b) {
          block[i] = b;
          partitions(i + 1, std::max(used, b + 1));
        }
        return;
      }
      const int k = used;
      std::vector<int> cls(d + 1, -1);
      for (std::size_t j = 0; j < rest.size(); ++j) cls[rest[j]] = block[j];
      std::vector<unsigned> candidates;  // subsets of classes with at least 3 members
      for (unsigned s = 0; s < (1u << k); ++s)
        if (__builtin_popcount(s) >= 3) candidates.push_back(s);
      std::vector<unsigned> chosen;
      std::function<void(std::size_t)> spaces = [&](std::size_t c) {
        if (c == candidates.size()) {
          mvt::DepMask mask;
          auto on_line = [&](int a, int b, int e) {
            unsigned t = (1u << a) | (1u << b) | (1u << e);
            for (unsigned l : chosen)
              if ((l & t) == t) return true;
            return false;
          };
          for (int a = 1; a <= d; ++a) {
            if (cls[a] < 0) mask.set(mvt::subset_bit(a));
            for (int b = a + 1; b <= d; ++b) {
              bool dep2 = cls[a] < 0 || cls[b] < 0 || cls[a] == cls[b];
              if (dep2) mask.set(mvt::subset_bit(a, b));
              for (int e = b + 1; e <= d; ++e) {
                bool dep3 = dep2 || cls[e] < 0 || cls[e] == cls[a] || cls[e] == cls[b] ||
                            on_line(cls[a], cls[b], cls[e]);
                if (dep3) mask.set(mvt::subset_bit(a, b, e));
              }
            }
          }
          out.insert(mask);
          return;
        }
        spaces(c + 1);
        for (unsigned l : chosen)
          if (__builtin_popcount(l & candidates[c]) >= 2) return;
        chosen.push_back(candidates[c]);
        spaces(c + 1);
        chosen.pop_back();
      };
      spaces(0);
    };
    partitions(0, 0);
  }
  return {out.begin(), out.end()};
}

// Minimal elements strictly above `base` among `all`.
inline std::vector<mvt::DepMask> minimal_above(const mvt::DepMask& base, const std::vector<mvt::DepMask>& all) {
  std::vector<mvt::DepMask> above;
  for (const auto& m : all)
    if (m != base && base.subset_of(m)) above.push_back(m);
  std::vector<mvt::DepMask> out;
  for (const auto& m : above) {
    bool dominated = false;
    for (const auto& o : above)
      if (o != m && o.subset_of(m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rebuilds a matroid from its dependency mask: loops, then parallel classes,
// then the lines spanned by dependent triples of class representatives.
inline mvt::Matroid matroid_from_mask(const mvt::DepMask& m, int d) {
  mvt::PointSet loops;
  for (int a = 1; a <= d; ++a)
    if (m.test(mvt::subset_bit(a))) loops.push_back(a);
  std::vector<int> rep(d + 1, 0);
  std::vector<mvt::PointSet> parallels;
  for (int a = 1; a <= d; ++a) {
    if (m.test(mvt::subset_bit(a)) || rep[a]) continue;
    rep[a] = a;
    mvt::PointSet cls{a};
    for (int b = a + 1; b <= d; ++b)
      if (!m.test(mvt::subset_bit(b)) && m.test(mvt::subset_bit(a, b))) {
        rep[b] = a;
        cls.push_back(b);
      }
    if (cls.size() > 1) parallels.push_back(cls);
  }
  std::vector<int> reps;
  for (int a = 1; a <= d; ++a)
    if (rep[a] == a) reps.push_back(a);
  std::set<mvt::PointSet> lines;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      mvt::PointSet l{reps[i], reps[j]};
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (k == i || k == j) continue;
        int x[3] = {reps[i], reps[j], reps[k]};
        std::sort(x, x + 3);
        if (m.test(mvt::subset_bit(x[0], x[1], x[2]))) l.push_back(reps[k]);
      }
      std::sort(l.begin(), l.end());
      if (l.size() >= 3) lines.insert(l);
    }
  return mvt::Matroid(d, loops, parallels, {lines.begin(), lines.end()});
}

// --- lifting-generator counts by explicit enumeration --------------------------

// Counts (minor column choice, q assignment) pairs by walking every column
// subset and every word over the alphabet.
inline long long enumerate_minor_count(int cols, int minor, int alphabet) {
  long long subsets = 0;
  for (unsigned s = 0; s < (1u << cols); ++s)
    if (__builtin_popcount(s) == minor) ++subsets;
  long long words = 1;
  for (int i = 0; i < cols; ++i) words *= alphabet;
  return subsets * words;
}

// --- plain 3x3 determinant ------------------------------------------------------

inline mvt::Q det3_cofactor(const mvt::Vec3& a, const mvt::Vec3& b, const mvt::Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) + c[0] * (a[1] * b[2] - a[2] * b[1]);
}

}  // namespace oracle
