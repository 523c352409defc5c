#include "mvt/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <stdexcept>

namespace mvt {

// --- dependency masks -----------------------------------------------------------

namespace {

struct BitTable {
  int one[kMaskMaxPoints + 1]{};
  int two[kMaskMaxPoints + 1][kMaskMaxPoints + 1]{};
  int three[kMaskMaxPoints + 1][kMaskMaxPoints + 1][kMaskMaxPoints + 1]{};
  BitTable() {
    int k = 0;
    for (int a = 1; a <= kMaskMaxPoints; ++a) one[a] = k++;
    for (int a = 1; a <= kMaskMaxPoints; ++a)
      for (int b = a + 1; b <= kMaskMaxPoints; ++b) two[a][b] = k++;
    for (int a = 1; a <= kMaskMaxPoints; ++a)
      for (int b = a + 1; b <= kMaskMaxPoints; ++b)
        for (int c = b + 1; c <= kMaskMaxPoints; ++c) three[a][b][c] = k++;
  }
};

const BitTable& bits() {
  static const BitTable t;
  return t;
}

}  // namespace

int subset_bit(int a) { return bits().one[a]; }
int subset_bit(int a, int b) { return bits().two[a][b]; }
int subset_bit(int a, int b, int c) { return bits().three[a][b][c]; }

DepMask dependency_mask(const Matroid& m) {
  const int d = m.ground_size();
  if (d > kMaskMaxPoints) throw GuardError("dependency masks support at most " + std::to_string(kMaskMaxPoints) + " points");
  DepMask mask;
  for (int a = 1; a <= d; ++a) {
    if (is_dependent(m, {a})) mask.set(subset_bit(a));
    for (int b = a + 1; b <= d; ++b) {
      if (is_dependent(m, {a, b})) mask.set(subset_bit(a, b));
      for (int c = b + 1; c <= d; ++c)
        if (is_dependent(m, {a, b, c})) mask.set(subset_bit(a, b, c));
    }
  }
  return mask;
}

// --- saturation states ----------------------------------------------------------

namespace {

using LineBits = std::uint16_t;  // bit p set for class representative p

// Loops have representative 0; lines are kept on representatives.
struct State {
  std::array<std::uint8_t, kMaskMaxPoints + 1> cls{};
  std::vector<LineBits> lines;
  bool operator<(const State& o) const { return cls != o.cls ? cls < o.cls : lines < o.lines; }
};

int popcount(LineBits x) { return std::popcount(static_cast<unsigned>(x)); }

// Maps lines onto current representatives, drops lines below three classes
// and lines contained in another line.
void normalize(State& s, int d) {
  std::vector<LineBits> out;
  for (LineBits l : s.lines) {
    LineBits m = 0;
    for (int p = 1; p <= d; ++p)
      if ((l >> p) & 1 && s.cls[p]) m |= LineBits(1u << s.cls[p]);
    if (popcount(m) >= 3) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<LineBits> kept;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < out.size() && !contained; ++j)
      contained = j != i && (out[i] & out[j]) == out[i];
    if (!contained) kept.push_back(out[i]);
  }
  s.lines = std::move(kept);
}

void make_parallel(State& s, int d, int x, int y) {
  int rx = s.cls[x], ry = s.cls[y];
  int lo = std::min(rx, ry), hi = std::max(rx, ry);
  for (int p = 1; p <= d; ++p)
    if (s.cls[p] == hi) s.cls[p] = static_cast<std::uint8_t>(lo);
}

void make_loop(State& s, int d, int p) {
  int r = s.cls[p];
  s.cls[p] = 0;
  if (r != p) return;
  int next = 0;
  for (int q = 1; q <= d; ++q)
    if (s.cls[q] == p) {
      next = next ? next : q;
      s.cls[q] = static_cast<std::uint8_t>(next);
    }
  for (auto& l : s.lines)
    if ((l >> p) & 1) {
      l = LineBits(l & ~(1u << p));
      if (next) l |= LineBits(1u << next);
    }
}

State initial_state(const Matroid& m) {
  State s;
  for (int p = 1; p <= m.ground_size(); ++p) s.cls[p] = static_cast<std::uint8_t>(m.rep(p));
  for (const auto& l : m.effective_lines()) {
    LineBits b = 0;
    for (int p : l) b |= LineBits(1u << p);
    s.lines.push_back(b);
  }
  normalize(s, m.ground_size());
  return s;
}

DepMask state_mask(const State& s, int d) {
  DepMask mask;
  auto collinear = [&](int a, int b, int c) {
    LineBits t = LineBits((1u << a) | (1u << b) | (1u << c));
    for (LineBits l : s.lines)
      if ((l & t) == t) return true;
    return false;
  };
  for (int a = 1; a <= d; ++a) {
    int ra = s.cls[a];
    if (!ra) mask.set(subset_bit(a));
    for (int b = a + 1; b <= d; ++b) {
      int rb = s.cls[b];
      bool dep2 = !ra || !rb || ra == rb;
      if (dep2) mask.set(subset_bit(a, b));
      for (int c = b + 1; c <= d; ++c) {
        int rc = s.cls[c];
        bool dep3 = dep2 || !rc || rc == ra || rc == rb || collinear(ra, rb, rc);
        if (dep3) mask.set(subset_bit(a, b, c));
      }
    }
  }
  return mask;
}

Matroid state_matroid(const State& s, int d) {
  PointSet loops;
  std::vector<PointSet> groups(d + 1);
  for (int p = 1; p <= d; ++p) {
    if (!s.cls[p])
      loops.push_back(p);
    else
      groups[s.cls[p]].push_back(p);
  }
  std::vector<PointSet> par;
  for (const auto& g : groups)
    if (g.size() > 1) par.push_back(g);
  std::vector<PointSet> lines;
  for (LineBits l : s.lines) {
    PointSet pts;
    for (int p = 1; p <= d; ++p)
      if ((l >> p) & 1) pts.push_back(p);
    lines.push_back(pts);
  }
  return Matroid(d, loops, par, lines);
}

struct Fixpoint {
  DepMask mask;
  State state;
};

// Depth-first branching saturation: at the first pair of lines sharing two
// classes either merge the lines or make the two shared classes parallel.
class Saturator {
 public:
  Saturator(int d, std::atomic<long>& budget) : d_(d), budget_(budget) {}

  std::vector<Fixpoint> run(State start) {
    normalize(start, d_);
    visit(start);
    return std::move(out_);
  }

 private:
  void visit(const State& s) {
    if (!seen_.insert(s).second) return;
    if (budget_.fetch_sub(1) <= 0) throw GuardError("minimal matroid search exceeded its state limit");
    for (std::size_t i = 0; i < s.lines.size(); ++i)
      for (std::size_t j = i + 1; j < s.lines.size(); ++j) {
        LineBits shared = s.lines[i] & s.lines[j];
        if (popcount(shared) < 2) continue;
        State merged = s;
        merged.lines[i] = LineBits(s.lines[i] | s.lines[j]);
        merged.lines.erase(merged.lines.begin() + static_cast<long>(j));
        normalize(merged, d_);
        visit(merged);
        int x = std::countr_zero(static_cast<unsigned>(shared));
        int y = std::countr_zero(static_cast<unsigned>(shared & (shared - 1)));
        State par = s;
        make_parallel(par, d_, x, y);
        normalize(par, d_);
        visit(par);
        return;
      }
    out_.push_back({state_mask(s, d_), s});
  }

  int d_;
  std::atomic<long>& budget_;
  std::set<State> seen_;
  std::vector<Fixpoint> out_;
};

void require_new(const Matroid& m, const DependencyDelta& delta) {
  const int d = m.ground_size();
  for (int p : delta.points)
    if (p < 1 || p > d) throw std::invalid_argument("delta point outside the ground set");
  PointSet s = delta.points;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("delta repeats a point");
  std::size_t want = delta.kind == DependencyDelta::Kind::Loop ? 1 : delta.kind == DependencyDelta::Kind::Parallel ? 2 : 3;
  if (s.size() != want) throw std::invalid_argument("delta has the wrong number of points");
  if (is_dependent(m, s)) throw std::invalid_argument("delta " + to_string(delta) + " is already dependent");
}

State delta_state(const Matroid& m, const DependencyDelta& delta) {
  const int d = m.ground_size();
  State s = initial_state(m);
  const auto& p = delta.points;
  switch (delta.kind) {
    case DependencyDelta::Kind::Loop:
      make_loop(s, d, p[0]);
      break;
    case DependencyDelta::Kind::Parallel:
      make_parallel(s, d, p[0], p[1]);
      break;
    case DependencyDelta::Kind::Circuit:
      s.lines.push_back(LineBits((1u << s.cls[p[0]]) | (1u << s.cls[p[1]]) | (1u << s.cls[p[2]])));
      break;
  }
  return s;
}

std::vector<Fixpoint> minimal_only(std::vector<Fixpoint> all) {
  std::sort(all.begin(), all.end(), [](const Fixpoint& a, const Fixpoint& b) { return a.mask < b.mask; });
  all.erase(std::unique(all.begin(), all.end(), [](const Fixpoint& a, const Fixpoint& b) { return a.mask == b.mask; }),
            all.end());
  std::vector<Fixpoint> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j)
      dominated = j != i && all[j].mask.subset_of(all[i].mask);
    if (!dominated) out.push_back(all[i]);
  }
  return out;
}

void check_limits(const Matroid& m, const SearchLimits& limits) {
  if (m.ground_size() > std::min(limits.max_ground, kMaskMaxPoints))
    throw GuardError("minimal matroid search is limited to " + std::to_string(std::min(limits.max_ground, kMaskMaxPoints)) +
                     " points");
}

std::vector<Matroid> to_matroids(const std::vector<Fixpoint>& fps, int d) {
  std::vector<Matroid> out;
  for (const auto& f : fps) out.push_back(state_matroid(f.state, d));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(const DependencyDelta& d) {
  std::string s = d.kind == DependencyDelta::Kind::Loop       ? "loop("
                  : d.kind == DependencyDelta::Kind::Parallel ? "parallel("
                                                              : "circuit(";
  for (std::size_t i = 0; i < d.points.size(); ++i) s += (i ? "," : "") + std::to_string(d.points[i]);
  return s + ")";
}

std::vector<DependencyDelta> elementary_deltas(const Matroid& m) {
  const int d = m.ground_size();
  std::vector<DependencyDelta> out;
  for (int a = 1; a <= d; ++a)
    if (!is_dependent(m, {a})) out.push_back({DependencyDelta::Kind::Loop, {a}});
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      if (!is_dependent(m, {a, b})) out.push_back({DependencyDelta::Kind::Parallel, {a, b}});
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c)
        if (!is_dependent(m, {a, b, c})) out.push_back({DependencyDelta::Kind::Circuit, {a, b, c}});
  return out;
}

std::vector<Matroid> apply_delta_saturate(const Matroid& m, const DependencyDelta& delta, const SearchLimits& limits) {
  check_limits(m, limits);
  require_new(m, delta);
  std::atomic<long> budget{limits.max_states};
  Saturator sat(m.ground_size(), budget);
  return to_matroids(minimal_only(sat.run(delta_state(m, delta))), m.ground_size());
}

std::vector<Matroid> minimal_matroids(const Matroid& m, Exec exec, const SearchLimits& limits) {
  check_limits(m, limits);
  const int d = m.ground_size();
  auto deltas = elementary_deltas(m);
  std::atomic<long> budget{limits.max_states};
  std::vector<std::vector<Fixpoint>> per_delta(deltas.size());
  parallel_for(deltas.size(), exec, [&](std::size_t i) {
    Saturator sat(d, budget);
    per_delta[i] = minimal_only(sat.run(delta_state(m, deltas[i])));
  });
  std::vector<Fixpoint> all;
  for (auto& v : per_delta) all.insert(all.end(), v.begin(), v.end());
  return to_matroids(minimal_only(std::move(all)), d);
}

}  // namespace mvt
