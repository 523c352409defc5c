#include "mvt/matroid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace mvt {

namespace {

void sort_unique(PointSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

std::size_t intersection_size(const PointSet& a, const PointSet& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string join(const PointSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace

PointSet all_points(int d) {
  PointSet s(d);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

PointSet set_minus(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// --- Matroid ----------------------------------------------------------------

Matroid::Matroid() : cls_(1, -1) {}

Matroid::Matroid(int ground_size, PointSet loops, std::vector<PointSet> parallels,
                 std::vector<PointSet> lines, int rank_cap) {
  build(ground_size, std::move(loops), std::move(parallels), std::move(lines), rank_cap, false);
}

Matroid Matroid::closure(int ground_size, PointSet loops, std::vector<PointSet> parallels,
                         std::vector<PointSet> lines, int rank_cap) {
  Matroid m;
  m.build(ground_size, std::move(loops), std::move(parallels), std::move(lines), rank_cap, true);
  return m;
}

void Matroid::build(int d, PointSet loops, std::vector<PointSet> parallels,
                    std::vector<PointSet> lines, int cap, bool lenient) {
  if (d < 0) throw std::invalid_argument("ground size must be non-negative");
  if (cap < 0 || cap > 3) throw std::invalid_argument("rank cap must be in 0..3");
  auto check = [d](int p) {
    if (p < 1 || p > d) throw std::invalid_argument("point " + std::to_string(p) + " outside 1.." + std::to_string(d));
  };
  d_ = d;
  std::vector<char> loop(d + 1, 0);
  for (int p : loops) {
    check(p);
    loop[p] = 1;
  }
  // Union-find over non-loop points.
  std::vector<int> parent(d + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<char> seen_in_parallel(d + 1, 0);
  for (const auto& group : parallels) {
    for (int p : group) {
      check(p);
      if (loop[p]) throw std::invalid_argument("point " + std::to_string(p) + " is both a loop and in a parallel class");
      if (seen_in_parallel[p] && !lenient)
        throw std::invalid_argument("point " + std::to_string(p) + " appears in two parallel classes");
      seen_in_parallel[p] = 1;
    }
    for (std::size_t i = 1; i < group.size(); ++i) {
      int a = find(group[0]), b = find(group[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  if (cap == 0) {
    for (int p = 1; p <= d; ++p) {
      if (!loop[p]) {
        if (!lenient) throw std::invalid_argument("rank cap 0 requires every point to be a loop");
        loop[p] = 1;
      }
    }
  }
  // Classes ordered by smallest member.
  std::map<int, PointSet> groups;
  for (int p = 1; p <= d; ++p)
    if (!loop[p]) groups[find(p)].push_back(p);
  std::vector<PointSet> cl;
  for (auto& [root, members] : groups) cl.push_back(members);
  std::sort(cl.begin(), cl.end(), [](const PointSet& a, const PointSet& b) { return a[0] < b[0]; });
  cls_.assign(d + 1, -1);
  for (std::size_t c = 0; c < cl.size(); ++c)
    for (int p : cl[c]) cls_[p] = static_cast<int>(c);
  loops_.clear();
  for (int p = 1; p <= d; ++p)
    if (loop[p]) loops_.push_back(p);

  // Lines on class indices.
  std::vector<PointSet> ls;
  for (const auto& line : lines) {
    PointSet cs;
    for (int p : line) {
      check(p);
      if (loop[p]) {
        if (!lenient) throw std::invalid_argument("line contains loop " + std::to_string(p));
        continue;
      }
      cs.push_back(cls_[p]);
    }
    sort_unique(cs);
    if (cs.size() < 3) {
      if (!lenient) throw std::invalid_argument("line {" + join(line) + "} spans fewer than three classes");
      continue;
    }
    ls.push_back(cs);
  }
  sort_unique_lines:
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (intersection_size(ls[i], ls[j]) >= 2) {
        if (!lenient) throw std::invalid_argument("two lines share two classes");
        ls[i] = set_union(ls[i], ls[j]);
        ls.erase(ls.begin() + static_cast<long>(j));
        goto sort_unique_lines;
      }
    }
  }

  const int k = static_cast<int>(cl.size());
  if (k == 0) {
    cap = 0;
  } else if (cap == 1 || k == 1) {
    if (k > 1) {
      PointSet all;
      for (auto& c : cl) all.insert(all.end(), c.begin(), c.end());
      std::sort(all.begin(), all.end());
      cl = {all};
      for (int p : all) cls_[p] = 0;
    }
    cap = 1;
  } else if (k == 2) {
    cap = 2;
  } else if (cap == 3) {
    for (const auto& l : ls)
      if (static_cast<int>(l.size()) == k) cap = 2;
  }
  if (cap < 3) ls.clear();
  cap_ = cap;
  classes_ = cl;
  lines_.clear();
  for (const auto& l : ls) {
    PointSet reps;
    for (int c : l) reps.push_back(classes_[c][0]);
    std::sort(reps.begin(), reps.end());
    lines_.push_back(reps);
  }
  std::sort(lines_.begin(), lines_.end());
}

std::vector<PointSet> Matroid::parallel_classes() const {
  std::vector<PointSet> out;
  for (const auto& c : classes_)
    if (c.size() > 1) out.push_back(c);
  return out;
}

bool Matroid::is_loop(int p) const { return cls_.at(p) < 0; }

int Matroid::rep(int p) const {
  int c = cls_.at(p);
  return c < 0 ? 0 : classes_[c][0];
}

int Matroid::class_index(int p) const { return cls_.at(p); }

bool Matroid::is_simple() const {
  return loops_.empty() && static_cast<int>(classes_.size()) == d_;
}

std::vector<PointSet> Matroid::effective_lines() const {
  if (cap_ == 2 && classes_.size() >= 3) {
    PointSet all;
    for (const auto& c : classes_) all.push_back(c[0]);
    return {all};
  }
  return lines_;
}

bool Matroid::operator==(const Matroid& o) const {
  return d_ == o.d_ && cap_ == o.cap_ && loops_ == o.loops_ && classes_ == o.classes_ && lines_ == o.lines_;
}

bool Matroid::operator<(const Matroid& o) const {
  return std::tie(d_, cap_, loops_, classes_, lines_) < std::tie(o.d_, o.cap_, o.loops_, o.classes_, o.lines_);
}

// --- rank and circuits --------------------------------------------------------

int rank(const Matroid& m, const PointSet& s) {
  PointSet reps;
  for (int p : s) {
    if (p < 1 || p > m.ground_size()) throw std::invalid_argument("point outside ground set");
    int r = m.rep(p);
    if (r) reps.push_back(r);
  }
  sort_unique(reps);
  const int k = static_cast<int>(reps.size());
  if (k <= 1) return k;
  if (m.rank_cap() < 3) return std::min(k, m.rank_cap());
  if (k == 2) return 2;
  for (const auto& l : m.lines())
    if (std::includes(l.begin(), l.end(), reps.begin(), reps.end())) return 2;
  return 3;
}

bool is_dependent(const Matroid& m, const PointSet& s) {
  PointSet t = s;
  sort_unique(t);
  return rank(m, t) < static_cast<int>(t.size());
}

std::vector<PointSet> three_circuits(const Matroid& m) {
  std::vector<PointSet> out;
  const int d = m.ground_size();
  for (int a = 1; a <= d; ++a) {
    if (m.is_loop(a)) continue;
    for (int b = a + 1; b <= d; ++b) {
      if (m.is_loop(b) || m.rep(b) == m.rep(a)) continue;
      for (int c = b + 1; c <= d; ++c) {
        if (m.is_loop(c) || m.rep(c) == m.rep(a) || m.rep(c) == m.rep(b)) continue;
        if (rank(m, {a, b, c}) == 2) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<PointSet> circuits_upto(const Matroid& m, int k) {
  std::vector<PointSet> out;
  const int d = m.ground_size();
  if (k >= 1)
    for (int p : m.loops()) out.push_back({p});
  if (k >= 2)
    for (const auto& c : m.classes())
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) out.push_back({c[i], c[j]});
  if (k >= 3) {
    auto t = three_circuits(m);
    out.insert(out.end(), t.begin(), t.end());
  }
  if (k >= 4 && m.rank_cap() == 3) {
    for (int a = 1; a <= d; ++a)
      for (int b = a + 1; b <= d; ++b)
        for (int c = b + 1; c <= d; ++c)
          for (int e = c + 1; e <= d; ++e) {
            PointSet s{a, b, c, e};
            bool ok = true;
            for (int p : s)
              if (m.is_loop(p)) ok = false;
            if (!ok) continue;
            PointSet reps;
            for (int p : s) reps.push_back(m.rep(p));
            sort_unique(reps);
            if (reps.size() != 4) continue;
            for (int skip = 0; skip < 4 && ok; ++skip) {
              PointSet sub;
              for (int i = 0; i < 4; ++i)
                if (i != skip) sub.push_back(s[i]);
              if (rank(m, sub) < 3) ok = false;
            }
            if (ok) out.push_back(s);
          }
  }
  return out;
}

// --- constructions --------------------------------------------------------------

Matroid restrict_to(const Matroid& m, const PointSet& s0) {
  PointSet s = s0;
  sort_unique(s);
  for (int p : s)
    if (p < 1 || p > m.ground_size()) throw std::invalid_argument("point outside ground set");
  std::vector<int> newlab(m.ground_size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) newlab[s[i]] = static_cast<int>(i) + 1;
  PointSet loops;
  for (int p : m.loops())
    if (newlab[p]) loops.push_back(newlab[p]);
  std::vector<PointSet> par;
  for (const auto& c : m.classes()) {
    PointSet g;
    for (int p : c)
      if (newlab[p]) g.push_back(newlab[p]);
    if (g.size() > 1) par.push_back(g);
  }
  std::vector<PointSet> lines;
  for (const auto& l : m.effective_lines()) {
    PointSet nl;
    for (int r : l) {
      for (int p : m.classes()[m.class_index(r)]) {
        if (newlab[p]) {
          nl.push_back(newlab[p]);
          break;
        }
      }
    }
    if (nl.size() >= 3) lines.push_back(nl);
  }
  int cap = std::min(m.rank_cap(), 3);
  return Matroid(static_cast<int>(s.size()), loops, par, lines, cap);
}

Matroid delete_points(const Matroid& m, const PointSet& s) {
  PointSet t = s;
  sort_unique(t);
  return restrict_to(m, set_minus(all_points(m.ground_size()), t));
}

Matroid set_loops(const Matroid& m, const PointSet& s) {
  PointSet loops = m.loops();
  loops.insert(loops.end(), s.begin(), s.end());
  sort_unique(loops);
  std::vector<PointSet> par;
  for (const auto& c : m.classes()) {
    PointSet g = set_minus(c, loops);
    if (g.size() > 1) par.push_back(g);
  }
  std::vector<PointSet> lines;
  for (const auto& l : m.effective_lines()) {
    PointSet nl;
    for (int r : l) {
      PointSet alive = set_minus(m.classes()[m.class_index(r)], loops);
      if (!alive.empty()) nl.push_back(alive[0]);
    }
    if (nl.size() >= 3) lines.push_back(nl);
  }
  return Matroid(m.ground_size(), loops, par, lines, m.rank_cap());
}

Matroid uniform(int r, int d) {
  if (r < 0 || r > 3) throw std::invalid_argument("uniform matroid rank must be in 0..3");
  if (r == 0) return Matroid(d, all_points(d), {}, {}, 0);
  if (r == 1) return Matroid(d, {}, {all_points(d)}, {}, 1);
  return Matroid(d, {}, {}, {}, r);
}

Matroid identify_set(const Matroid& m, const PointSet& s) {
  for (int p : s)
    if (m.is_loop(p)) throw std::invalid_argument("cannot identify a loop");
  std::vector<PointSet> par = m.parallel_classes();
  if (s.size() > 1) par.push_back(s);
  return Matroid::closure(m.ground_size(), m.loops(), par, m.effective_lines(), m.rank_cap());
}

Matroid identify_points(const Matroid& m, int p, int q) { return identify_set(m, {std::min(p, q), std::max(p, q)}); }

Matroid add_circuit(const Matroid& m, const PointSet& triple) {
  std::vector<PointSet> lines = m.effective_lines();
  lines.push_back(triple);
  return Matroid::closure(m.ground_size(), m.loops(), m.parallel_classes(), lines, m.rank_cap());
}

Matroid pi_config(const Matroid& m, int i) {
  if (i < 1 || i > m.ground_size()) throw std::invalid_argument("point outside ground set");
  if (m.is_loop(i)) throw std::invalid_argument("pi_config needs a non-loop point");
  const int ci = m.class_index(i);
  std::vector<PointSet> par = m.parallel_classes();
  for (const auto& l : lines_through(m, i)) {
    PointSet mates;
    for (int r : l) {
      if (m.class_index(r) == ci) continue;
      const auto& c = m.classes()[m.class_index(r)];
      mates.insert(mates.end(), c.begin(), c.end());
    }
    std::sort(mates.begin(), mates.end());
    par.push_back(mates);
  }
  PointSet block;
  for (const auto& c : m.classes())
    if (m.class_index(c[0]) != ci) block.push_back(c[0]);
  std::vector<PointSet> lines;
  if (block.size() >= 3) lines.push_back(block);
  return Matroid::closure(m.ground_size(), m.loops(), par, lines, 3);
}

Reduced reduce(const Matroid& m) {
  Reduced r;
  r.loops = m.loops();
  r.parallels = m.parallel_classes();
  for (const auto& c : m.classes()) r.labels.push_back(c[0]);
  r.simple = restrict_to(m, r.labels);
  return r;
}

// --- incidence queries --------------------------------------------------------

std::vector<PointSet> lines_through(const Matroid& m, int p) {
  std::vector<PointSet> out;
  int r = m.rep(p);
  if (!r) return out;
  for (const auto& l : m.effective_lines())
    if (std::binary_search(l.begin(), l.end(), r)) out.push_back(l);
  return out;
}

int degree(const Matroid& m, int p) { return static_cast<int>(lines_through(m, p).size()); }

PointSet s_points(const Matroid& m) {
  PointSet out;
  for (int p = 1; p <= m.ground_size(); ++p)
    if (degree(m, p) >= 2) out.push_back(p);
  return out;
}

PointSet q_points(const Matroid& m) {
  PointSet out;
  for (int p = 1; p <= m.ground_size(); ++p)
    if (degree(m, p) >= 3) out.push_back(p);
  return out;
}

// --- chains ---------------------------------------------------------------------

std::vector<PointSet> lines_within(const Matroid& m, const PointSet& s) {
  // Each line is expressed through the members of s in its classes; a line
  // survives when it still meets three distinct classes.
  std::vector<PointSet> out;
  for (const auto& l : m.effective_lines()) {
    PointSet members;
    int classes_hit = 0;
    for (int r : l) {
      bool hit = false;
      for (int p : m.classes()[m.class_index(r)]) {
        if (std::binary_search(s.begin(), s.end(), p)) {
          members.push_back(p);
          hit = true;
        }
      }
      if (hit) ++classes_hit;
    }
    if (classes_hit >= 3) {
      std::sort(members.begin(), members.end());
      out.push_back(members);
    }
  }
  return out;
}

std::vector<PointSet> chain_levels(const Matroid& m, int min_degree) {
  std::vector<PointSet> levels;
  PointSet cur = all_points(m.ground_size());
  levels.push_back(cur);
  while (!cur.empty()) {
    auto ls = lines_within(m, cur);
    PointSet next;
    for (int p : cur) {
      int deg = 0;
      for (const auto& l : ls)
        if (std::binary_search(l.begin(), l.end(), p)) ++deg;
      if (deg >= min_degree) next.push_back(p);
    }
    if (next == cur) break;
    levels.push_back(next);
    cur = next;
  }
  return levels;
}

std::vector<Matroid> nilpotency_chain(const Matroid& m) {
  std::vector<Matroid> out;
  for (const auto& s : chain_levels(m, 2)) out.push_back(restrict_to(m, s));
  return out;
}

bool is_nilpotent(const Matroid& m) { return chain_levels(m, 2).back().empty(); }
bool is_solvable(const Matroid& m) { return chain_levels(m, 3).back().empty(); }

std::optional<int> nilpotency_length(const Matroid& m) {
  auto lv = chain_levels(m, 2);
  if (!lv.back().empty()) return std::nullopt;
  return static_cast<int>(lv.size()) - 1;
}

int Ordering::zero_count() const { return static_cast<int>(std::count(w.begin(), w.end(), 0)); }

Ordering ordering_degrees(const Matroid& m, const std::vector<int>& order) {
  Ordering o;
  o.order = order;
  PointSet prefix;
  for (int p : order) {
    prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), p), p);
    int deg = 0;
    for (const auto& l : lines_within(m, prefix))
      if (std::binary_search(l.begin(), l.end(), p)) ++deg;
    o.w.push_back(deg);
  }
  return o;
}

std::optional<Ordering> nilpotent_ordering(const Matroid& m) {
  auto lv = chain_levels(m, 2);
  if (!lv.back().empty()) return std::nullopt;
  std::vector<int> order;
  // Deepest non-empty level first, then each outer ring.
  for (std::size_t j = lv.size() - 1; j-- > 0;) {
    PointSet ring = set_minus(lv[j], lv[j + 1]);
    order.insert(order.end(), ring.begin(), ring.end());
  }
  return ordering_degrees(m, order);
}

// --- dependency order -----------------------------------------------------------

bool dependency_leq(const Matroid& n1, const Matroid& n2) {
  if (n1.ground_size() != n2.ground_size()) throw std::invalid_argument("dependency_leq: ground sizes differ");
  for (int p : n1.loops())
    if (!n2.is_loop(p)) return false;
  for (const auto& c : n1.classes()) {
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (n2.is_loop(c[i]) || n2.is_loop(c[0])) continue;
      if (n2.rep(c[i]) != n2.rep(c[0])) return false;
    }
  }
  if (n2.rank_cap() <= 2) return true;  // every triple is dependent in n2
  for (const auto& l : n1.effective_lines()) {
    // Every triple of points drawn from three classes of l must be dependent.
    std::vector<const PointSet*> cls;
    for (int r : l) cls.push_back(&n1.classes()[n1.class_index(r)]);
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        for (std::size_t c = b + 1; c < cls.size(); ++c)
          for (int x : *cls[a])
            for (int y : *cls[b])
              for (int z : *cls[c])
                if (rank(n2, {x, y, z}) == 3) return false;
  }
  return true;
}

bool dependency_lt(const Matroid& n1, const Matroid& n2) { return n1 != n2 && dependency_leq(n1, n2); }

// --- isomorphism ------------------------------------------------------------------

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  auto img = [&](const PointSet& s) {
    PointSet t;
    for (int p : s) t.push_back(perm.at(p));
    std::sort(t.begin(), t.end());
    return t;
  };
  std::vector<PointSet> par, lines;
  for (const auto& c : m.parallel_classes()) par.push_back(img(c));
  for (const auto& l : m.lines()) lines.push_back(img(l));
  return Matroid(m.ground_size(), img(m.loops()), par, lines, m.rank_cap());
}

namespace {

// Label-invariant colour of a point.
std::vector<int> point_invariant(const Matroid& m, int p) {
  std::vector<int> inv;
  if (m.is_loop(p)) return {0};
  inv.push_back(1);
  inv.push_back(static_cast<int>(m.classes()[m.class_index(p)].size()));
  auto ls = lines_through(m, p);
  inv.push_back(static_cast<int>(ls.size()));
  std::vector<int> sizes;
  for (const auto& l : ls) {
    int pts = 0;
    for (int r : l) pts += static_cast<int>(m.classes()[m.class_index(r)].size());
    sizes.push_back(pts);
  }
  std::sort(sizes.begin(), sizes.end());
  inv.insert(inv.end(), sizes.begin(), sizes.end());
  return inv;
}

bool collinear3(const Matroid& m, int a, int b, int c) {
  int ra = m.rep(a), rb = m.rep(b), rc = m.rep(c);
  if (!ra || !rb || !rc || ra == rb || ra == rc || rb == rc) return false;
  return rank(m, {a, b, c}) == 2;
}

bool same_class(const Matroid& m, int a, int b) { return m.rep(a) != 0 && m.rep(a) == m.rep(b); }

// Enumerates isomorphisms a -> b; callback returns false to stop.
void enumerate_isomorphisms(const Matroid& a, const Matroid& b,
                            const std::function<bool(const std::vector<int>&)>& cb) {
  const int d = a.ground_size();
  if (d != b.ground_size() || a.rank_cap() != b.rank_cap() || a.loops().size() != b.loops().size() ||
      a.num_classes() != b.num_classes() || a.lines().size() != b.lines().size())
    return;
  std::vector<std::vector<int>> ia(d + 1), ib(d + 1);
  for (int p = 1; p <= d; ++p) {
    ia[p] = point_invariant(a, p);
    ib[p] = point_invariant(b, p);
  }
  {
    auto sa = std::vector<std::vector<int>>(ia.begin() + 1, ia.end());
    auto sb = std::vector<std::vector<int>>(ib.begin() + 1, ib.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }
  // Map the most constrained points first: order by invariant rarity.
  std::vector<int> order = all_points(d);
  std::map<std::vector<int>, int> freq;
  for (int p = 1; p <= d; ++p) freq[ia[p]]++;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return freq[ia[x]] < freq[ia[y]]; });
  std::vector<int> img(d + 1, 0);
  std::vector<char> used(d + 1, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == d) {
      if (!cb(img)) stop = true;
      return;
    }
    int p = order[k];
    for (int q = 1; q <= d && !stop; ++q) {
      if (used[q] || ib[q] != ia[p]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int u = order[i];
        if (same_class(a, u, p) != same_class(b, img[u], q)) ok = false;
        for (int j = i + 1; j < k && ok; ++j) {
          int v = order[j];
          if (collinear3(a, u, v, p) != collinear3(b, img[u], img[v], q)) ok = false;
        }
      }
      if (!ok) continue;
      img[p] = q;
      used[q] = 1;
      rec(k + 1);
      used[q] = 0;
      img[p] = 0;
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Matroid& m) {
  std::vector<std::vector<int>> out;
  enumerate_isomorphisms(m, m, [&](const std::vector<int>& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b) {
  std::optional<std::vector<int>> found;
  enumerate_isomorphisms(a, b, [&](const std::vector<int>& p) {
    found = p;
    return false;
  });
  return found;
}

bool are_isomorphic(const Matroid& a, const Matroid& b) { return find_isomorphism(a, b).has_value(); }

std::string canonical_form(const Matroid& m) {
  // Lexicographically least incidence certificate over relabelings of the
  // parallel classes that list classes in increasing invariant order. Row k
  // records, for the class given new label k, its size followed by
  // collinearity flags with every earlier pair of classes. Classes that are
  // twins (same size, same set of lines) are interchangeable by an
  // automorphism, so only the smallest unassigned twin is tried.
  const int k = m.num_classes();
  std::vector<int> reps;
  for (const auto& c : m.classes()) reps.push_back(c[0]);
  std::vector<std::vector<int>> inv(k);
  std::vector<std::vector<PointSet>> through(k);
  for (int i = 0; i < k; ++i) {
    inv[i] = point_invariant(m, reps[i]);
    through[i] = lines_through(m, reps[i]);
  }
  std::vector<int> cells(k);
  std::iota(cells.begin(), cells.end(), 0);
  std::stable_sort(cells.begin(), cells.end(), [&](int x, int y) { return inv[x] < inv[y]; });
  std::vector<int> twin_of(k);
  for (int i = 0; i < k; ++i) {
    twin_of[i] = i;
    for (int j = 0; j < i; ++j) {
      if (inv[j] == inv[i] && through[j] == through[i]) {
        twin_of[i] = twin_of[j];
        break;
      }
    }
  }
  auto collinear = [&](int a, int b, int c) {
    if (m.rank_cap() < 3) return m.rank_cap() == 2;
    return rank(m, {reps[a], reps[b], reps[c]}) == 2;
  };

  using Partial = std::vector<int>;
  std::vector<Partial> frontier{Partial{}};
  std::string cert = "d" + std::to_string(m.ground_size()) + "c" + std::to_string(m.rank_cap()) + "l" +
                     std::to_string(m.loops().size()) + ":";
  for (int step = 0; step < k; ++step) {
    const auto& want = inv[cells[step]];
    std::string best;
    std::vector<Partial> next;
    for (const auto& part : frontier) {
      std::vector<char> used(k, 0);
      for (int p : part) used[p] = 1;
      for (int q = 0; q < k; ++q) {
        if (used[q] || inv[q] != want) continue;
        bool smaller_twin_free = false;
        for (int t = 0; t < q; ++t)
          if (!used[t] && twin_of[t] == twin_of[q]) smaller_twin_free = true;
        if (smaller_twin_free) continue;
        std::string row = std::to_string(m.classes()[q].size()) + ":";
        for (std::size_t i = 0; i < part.size(); ++i)
          for (std::size_t j = i + 1; j < part.size(); ++j) row += collinear(part[i], part[j], q) ? '1' : '0';
        if (next.empty() || row < best) {
          best = row;
          next.clear();
        }
        if (row == best) {
          Partial np = part;
          np.push_back(q);
          next.push_back(np);
        }
      }
    }
    if (next.size() > 2000000) throw GuardError("canonical_form: search frontier too large");
    frontier = std::move(next);
    cert += best + "|";
  }
  return cert;
}

std::string describe(const Matroid& m) {
  std::ostringstream os;
  os << "d=" << m.ground_size() << " rank_cap=" << m.rank_cap();
  os << " loops={" << join(m.loops()) << "}";
  os << " parallels=[";
  bool first = true;
  for (const auto& c : m.parallel_classes()) {
    os << (first ? "" : " ") << "{" << join(c) << "}";
    first = false;
  }
  os << "] lines=[";
  first = true;
  for (const auto& l : m.lines()) {
    os << (first ? "" : " ") << "{" << join(l) << "}";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace mvt
