#include "mvt/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mvt {

Vec3 meet_vectors(const Vec3& v1, const Vec3& v2, const Vec3& v3, const Vec3& v4) {
  return det3(v1, v2, v3) * v4 - det3(v1, v2, v4) * v3;
}

int rank_of(const std::vector<Vec3>& vs) {
  switch (vs.size()) {
    case 0:
      return 0;
    case 1:
      return is_zero(vs[0]) ? 0 : 1;
    case 2:
      if (!is_zero(cross(vs[0], vs[1]))) return 2;
      return is_zero(vs[0]) && is_zero(vs[1]) ? 0 : 1;
    case 3:
      if (det3(vs[0], vs[1], vs[2]) != 0) return 3;
      break;
    default:
      break;
  }
  return matrix_rank(columns_matrix(vs));
}

int rank_of(const VectorConfig& cfg, const PointSet& s) {
  std::vector<Vec3> vs;
  for (int p : s) vs.push_back(cfg[p]);
  return rank_of(vs);
}

namespace {

void require_size(const VectorConfig& cfg, const Matroid& m) {
  if (cfg.size() != m.ground_size())
    throw std::invalid_argument("configuration has " + std::to_string(cfg.size()) + " points, matroid has " +
                                std::to_string(m.ground_size()));
}

// Calls f(s) for every subset of 1..d of size 1..3; stops when f returns false.
template <class F>
bool all_small_subsets(int d, F&& f) {
  for (int a = 1; a <= d; ++a) {
    if (!f(PointSet{a})) return false;
    for (int b = a + 1; b <= d; ++b) {
      if (!f(PointSet{a, b})) return false;
      for (int c = b + 1; c <= d; ++c)
        if (!f(PointSet{a, b, c})) return false;
    }
  }
  return true;
}

}  // namespace

bool includes_dependencies(const VectorConfig& cfg, const Matroid& m) {
  require_size(cfg, m);
  // Sets of four or more are always dependent in three-space.
  return all_small_subsets(m.ground_size(), [&](const PointSet& s) {
    if (!is_dependent(m, s)) return true;
    return rank_of(cfg, s) < static_cast<int>(s.size());
  });
}

bool is_realization(const VectorConfig& cfg, const Matroid& m) {
  require_size(cfg, m);
  return all_small_subsets(m.ground_size(), [&](const PointSet& s) {
    return is_dependent(m, s) == (rank_of(cfg, s) < static_cast<int>(s.size()));
  });
}

FrameNormalization normalize_frame(const VectorConfig& cfg, const std::array<int, 4>& basis) {
  const Vec3& a = cfg[basis[0]];
  const Vec3& b = cfg[basis[1]];
  const Vec3& c = cfg[basis[2]];
  const Vec3& u = cfg[basis[3]];
  if (det3(a, b, c) == 0 || det3(a, b, u) == 0 || det3(a, c, u) == 0 || det3(b, c, u) == 0)
    throw std::invalid_argument("frame points are not in general position");
  // Solve [a b c] k = u by Cramer's rule.
  Q D = det3(a, b, c);
  Vec3 k{det3(u, b, c) / D, det3(a, u, c) / D, det3(a, b, u) / D};
  // B^{-1} from the adjugate: rows are cross products of the columns.
  Vec3 r0 = cross(b, c), r1 = cross(c, a), r2 = cross(a, b);
  QMatrix t(3, std::vector<Q>(3));
  for (int j = 0; j < 3; ++j) {
    t[0][j] = r0[j] / (D * k[0]);
    t[1][j] = r1[j] / (D * k[1]);
    t[2][j] = r2[j] / (D * k[2]);
  }
  FrameNormalization out;
  out.transform = t;
  out.scalings.assign(cfg.size() + 1, Q(1));
  for (int i = 0; i < 3; ++i) out.scalings[basis[i]] = k[i];
  out.cfg = VectorConfig(cfg.size());
  for (int p = 1; p <= cfg.size(); ++p) {
    Vec3 v;
    for (int i = 0; i < 3; ++i) v[i] = out.scalings[p] * (t[i][0] * cfg[p][0] + t[i][1] * cfg[p][1] + t[i][2] * cfg[p][2]);
    out.cfg[p] = v;
  }
  return out;
}

std::string outcome_name(RealizationCertificate::Outcome o) {
  switch (o) {
    case RealizationCertificate::Outcome::Realization:
      return "realization";
    case RealizationCertificate::Outcome::Infeasible:
      return "infeasible";
    case RealizationCertificate::Outcome::Inconclusive:
      return "inconclusive";
  }
  return "";
}

std::vector<int> propagation_order(const Matroid& simple) {
  if (auto o = nilpotent_ordering(simple)) return o->order;
  auto layered = [](const std::vector<PointSet>& lv) {
    std::vector<int> order(lv.back().begin(), lv.back().end());
    for (std::size_t j = lv.size() - 1; j-- > 0;) {
      PointSet ring = set_minus(lv[j], lv[j + 1]);
      order.insert(order.end(), ring.begin(), ring.end());
    }
    return order;
  };
  if (is_solvable(simple)) return layered(chain_levels(simple, 3));
  return layered(chain_levels(simple, 2));
}

namespace {

struct Attempt {
  RealizationCertificate::Outcome outcome;
  VectorConfig cfg;
  Q witness;
  int stuck = 0;
  bool used_free = false;
  std::vector<std::string> trace;
};

std::string set_text(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

// One randomized construction on a simple matroid.
Attempt construct(const Matroid& m, const std::vector<int>& order, Sampler& rng) {
  const int d = m.ground_size();
  const auto lines = m.effective_lines();
  const std::array<Vec3, 4> frame{unit_vec(1), unit_vec(2), unit_vec(3), make_vec(1, 1, 1)};
  Attempt at;
  at.cfg = VectorConfig(d);
  std::vector<char> placed(d + 1, 0);
  int frame_used = 0;
  for (int p : order) {
    // Determined lines through p: at least two placed points besides p.
    std::vector<std::array<int, 2>> det_lines;
    std::vector<PointSet> det_sets;
    for (const auto& l : lines) {
      if (!std::binary_search(l.begin(), l.end(), p)) continue;
      std::vector<int> on;
      for (int x : l)
        if (x != p && placed[x]) on.push_back(x);
      if (on.size() >= 2) {
        det_lines.push_back({on[0], on[1]});
        det_sets.push_back(l);
      }
    }
    std::ostringstream tr;
    tr << p << ": ";
    Vec3 v;
    if (det_lines.empty()) {
      if (frame_used < 4) {
        v = frame[frame_used++];
        tr << "frame vector " << to_string(v);
      } else {
        v = rng.nonzero_vec();
        at.used_free = true;
        tr << "free point " << to_string(v);
      }
    } else if (det_lines.size() == 1) {
      const Vec3& a = at.cfg[det_lines[0][0]];
      const Vec3& b = at.cfg[det_lines[0][1]];
      v = rng.nonzero_rational() * a + rng.nonzero_rational() * b;
      at.used_free = true;
      tr << "random point on line " << set_text(det_sets[0]) << " = " << to_string(v);
    } else {
      const Vec3& a = at.cfg[det_lines[0][0]];
      const Vec3& b = at.cfg[det_lines[0][1]];
      const Vec3& c = at.cfg[det_lines[1][0]];
      const Vec3& e = at.cfg[det_lines[1][1]];
      v = meet_vectors(a, b, c, e);
      tr << "meet of " << set_text(det_sets[0]) << " and " << set_text(det_sets[1]) << " = " << to_string(v);
      if (is_zero(v)) {
        at.outcome = RealizationCertificate::Outcome::Inconclusive;
        at.stuck = p;
        tr << " (degenerate)";
        at.trace.push_back(tr.str());
        return at;
      }
      for (std::size_t k = 2; k < det_lines.size(); ++k) {
        Q w = det3(at.cfg[det_lines[k][0]], at.cfg[det_lines[k][1]], v);
        if (w != 0) {
          tr << "; line " << set_text(det_sets[k]) << " misses it, determinant " << to_string(w);
          at.trace.push_back(tr.str());
          at.cfg[p] = v;
          at.stuck = p;
          at.witness = w;
          at.outcome = at.used_free ? RealizationCertificate::Outcome::Inconclusive
                                    : RealizationCertificate::Outcome::Infeasible;
          return at;
        }
        tr << "; concurrent with " << set_text(det_sets[k]);
      }
    }
    at.cfg[p] = v;
    placed[p] = 1;
    at.trace.push_back(tr.str());
  }
  if (is_realization(at.cfg, m)) {
    at.outcome = RealizationCertificate::Outcome::Realization;
  } else {
    at.outcome = RealizationCertificate::Outcome::Inconclusive;
    at.trace.push_back("constructed vectors carry extra dependencies");
  }
  return at;
}

}  // namespace

RealizationCertificate propagate_realization(const Matroid& m, std::uint64_t seed, int attempts) {
  Reduced red = reduce(m);
  const Matroid& s = red.simple;
  RealizationCertificate cert;
  std::vector<int> order = propagation_order(s);
  for (int p : order) cert.order.push_back(red.labels[p - 1]);

  Attempt last;
  for (int k = 0; k < std::max(1, attempts); ++k) {
    Sampler rng(sub_seed(seed, static_cast<std::uint64_t>(k)));
    last = construct(s, order, rng);
    if (last.outcome == RealizationCertificate::Outcome::Realization) break;
    if (last.outcome == RealizationCertificate::Outcome::Infeasible) break;
    if (!last.used_free) break;  // a deterministic construction gives the same result every time
  }

  // Lift back to the original labels: loops are zero, parallel points copy
  // their representative.
  cert.outcome = last.outcome;
  cert.witness = last.witness;
  cert.stuck_point = last.stuck ? red.labels[last.stuck - 1] : 0;
  cert.cfg = VectorConfig(m.ground_size());
  for (int j = 1; j <= s.ground_size(); ++j) {
    int rep = red.labels[j - 1];
    for (int x : m.classes()[m.class_index(rep)]) cert.cfg[x] = last.cfg[j];
  }
  for (const auto& line : last.trace) {
    // Rewrite the leading point label into the original labelling.
    auto colon = line.find(':');
    if (colon != std::string::npos && std::all_of(line.begin(), line.begin() + colon, ::isdigit) && colon > 0) {
      int j = std::stoi(line.substr(0, colon));
      cert.trace.push_back(std::to_string(red.labels[j - 1]) + line.substr(colon));
    } else {
      cert.trace.push_back(line);
    }
  }
  if (cert.outcome == RealizationCertificate::Outcome::Realization && !is_realization(cert.cfg, m))
    throw std::logic_error("lifted realization failed verification");
  return cert;
}

namespace {

struct GeoValue {
  std::vector<Vec3> vecs;  // pending join of vectors
  bool scalar = false;
  Q value;
};

GeoValue geo_eval(const GCExpr& e, const Assignment& asg) {
  switch (e.kind) {
    case GCExpr::Kind::Leaf: {
      auto it = asg.find(e.symbol);
      if (it == asg.end()) throw std::invalid_argument("no vector assigned to symbol " + symbol_text(e.symbol));
      return GeoValue{{it->second}, false, 0};
    }
    case GCExpr::Kind::Join: {
      GeoValue acc;
      for (const auto& k : e.kids) {
        GeoValue x = geo_eval(k, asg);
        if (x.scalar || acc.scalar) throw std::invalid_argument("join with a scalar is not defined here");
        acc.vecs.insert(acc.vecs.end(), x.vecs.begin(), x.vecs.end());
        if (acc.vecs.size() > 3) throw std::invalid_argument("join of more than three vectors in rank three");
        if (acc.vecs.size() == 3) {
          acc.scalar = true;
          acc.value = det3(acc.vecs[0], acc.vecs[1], acc.vecs[2]);
          acc.vecs.clear();
        }
      }
      return acc;
    }
    case GCExpr::Kind::Meet: {
      GeoValue a = geo_eval(e.kids.at(0), asg), b = geo_eval(e.kids.at(1), asg);
      if (a.scalar || b.scalar || a.vecs.size() != 2 || b.vecs.size() != 2)
        throw std::invalid_argument("meet is applied to two 2-extensors only");
      return GeoValue{{meet_vectors(a.vecs[0], a.vecs[1], b.vecs[0], b.vecs[1])}, false, 0};
    }
  }
  throw std::invalid_argument("malformed expression");
}

}  // namespace

Q evaluate_gc_geometric(const GCExpr& e, const Assignment& asg) {
  GeoValue v = geo_eval(e, asg);
  if (!v.scalar) throw std::invalid_argument("expression does not reduce to a scalar");
  return v.value;
}

}  // namespace mvt
