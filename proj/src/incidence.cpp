#include "mvt/incidence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace mvt {

namespace {

using Adj = std::vector<std::vector<int>>;
using Edge = std::pair<int, int>;

// Biconnected components (as edge lists) of an undirected simple graph.
std::vector<std::vector<Edge>> blocks(const Adj& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int v : adj[u]) {
      if (v == parent) continue;
      if (disc[v] < 0) {
        stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Edge> comp;
          for (;;) {
            Edge e = stack.back();
            stack.pop_back();
            comp.push_back(e);
            if (e == Edge{u, v}) break;
          }
          out.push_back(comp);
        }
      } else if (disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int s = 0; s < n; ++s)
    if (disc[s] < 0) dfs(s, -1);
  return out;
}

std::set<int> block_vertices(const std::vector<Edge>& b) {
  std::set<int> vs;
  for (auto [u, v] : b) {
    vs.insert(u);
    vs.insert(v);
  }
  return vs;
}

// Bipartite incidence graph: nodes 0..L-1 are lines, L.. are the points of
// degree at least two (class representatives).
struct Incidence {
  std::vector<PointSet> lines;
  std::vector<int> points;  // node L+i -> point label
  Adj adj;
  int line_count() const { return static_cast<int>(lines.size()); }
  bool is_line(int node) const { return node < line_count(); }
};

Incidence incidence_graph(const Matroid& m) {
  Incidence g;
  g.lines = m.effective_lines();
  std::map<int, int> deg;
  for (const auto& l : g.lines)
    for (int p : l) deg[p]++;
  for (auto [p, k] : deg)
    if (k >= 2) g.points.push_back(p);
  const int L = g.line_count();
  g.adj.assign(L + g.points.size(), {});
  for (int i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < g.points.size(); ++j) {
      if (std::binary_search(g.lines[i].begin(), g.lines[i].end(), g.points[j])) {
        g.adj[i].push_back(L + static_cast<int>(j));
        g.adj[L + j].push_back(i);
      }
    }
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

// Converts a closed node walk (alternating, distinct nodes) into a witness.
CycleWitness to_witness(const Incidence& g, std::vector<int> cyc) {
  // Rotate so that the walk starts at a line node.
  auto it = std::find_if(cyc.begin(), cyc.end(), [&](int v) { return g.is_line(v); });
  std::rotate(cyc.begin(), it, cyc.end());
  CycleWitness w;
  for (std::size_t i = 0; i < cyc.size(); i += 2) {
    w.lines.push_back(g.lines[cyc[i]]);
    w.points.push_back(g.points[cyc[i + 1] - g.line_count()]);
  }
  return w;
}

// Up to `want` simple cycles through `start`, distinct as edge sets.
std::vector<std::vector<int>> cycles_through(const Adj& adj, int start, std::size_t want) {
  std::vector<std::vector<int>> found;
  std::set<std::set<Edge>> seen;
  std::vector<int> path{start};
  std::vector<char> on(adj.size(), 0);
  on[start] = 1;
  long budget = 2000000;
  std::function<void(int)> dfs = [&](int u) {
    if (found.size() >= want || --budget < 0) return;
    for (int v : adj[u]) {
      if (found.size() >= want) return;
      if (v == start && path.size() >= 3) {
        std::set<Edge> es;
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = path[i], b = path[(i + 1) % path.size()];
          es.insert({std::min(a, b), std::max(a, b)});
        }
        if (seen.insert(es).second) found.push_back(path);
        continue;
      }
      if (on[v]) continue;
      on[v] = 1;
      path.push_back(v);
      dfs(v);
      path.pop_back();
      on[v] = 0;
    }
  };
  dfs(start);
  return found;
}

}  // namespace

bool validate_cycle(const Matroid& m, const CycleWitness& c) {
  const std::size_t n = c.points.size();
  if (n < 2 || c.lines.size() != n) return false;
  auto ls = m.effective_lines();
  std::set<PointSet> distinct;
  for (const auto& l : c.lines) {
    if (std::find(ls.begin(), ls.end(), l) == ls.end()) return false;
    distinct.insert(l);
  }
  if (distinct.size() != n) return false;
  std::set<int> pts(c.points.begin(), c.points.end());
  if (pts.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = c.lines[i];
    const auto& b = c.lines[(i + 1) % n];
    int p = c.points[i];
    if (!std::binary_search(a.begin(), a.end(), p) || !std::binary_search(b.begin(), b.end(), p)) return false;
  }
  return true;
}

std::optional<CycleWitness> find_cycle(const Matroid& m) {
  Incidence g = incidence_graph(m);
  const int n = static_cast<int>(g.adj.size());
  std::vector<int> parent(n, -1), state(n, 0);
  std::optional<std::vector<int>> cyc;
  std::function<void(int)> dfs = [&](int u) {
    state[u] = 1;
    for (int v : g.adj[u]) {
      if (cyc) return;
      if (v == parent[u]) continue;
      if (state[v] == 1) {
        std::vector<int> c;
        for (int x = u; x != v; x = parent[x]) c.push_back(x);
        c.push_back(v);
        std::reverse(c.begin(), c.end());
        cyc = c;
        return;
      }
      if (state[v] == 0) {
        parent[v] = u;
        dfs(v);
      }
    }
    state[u] = 2;
  };
  for (int s = 0; s < n && !cyc; ++s)
    if (state[s] == 0) dfs(s);
  if (!cyc) return std::nullopt;
  // Report a canonical cycle through the first line on the detected one: the
  // longest among a bounded enumeration, then the smallest point set.
  int line = *std::find_if(cyc->begin(), cyc->end(), [&](int v) { return g.is_line(v); });
  CycleWitness best = to_witness(g, *cyc);
  PointSet best_pts = best.points;
  std::sort(best_pts.begin(), best_pts.end());
  for (const auto& c : cycles_through(g.adj, line, 256)) {
    CycleWitness w = to_witness(g, c);
    PointSet pts = w.points;
    std::sort(pts.begin(), pts.end());
    if (pts.size() > best_pts.size() || (pts.size() == best_pts.size() && pts < best_pts)) {
      best = w;
      best_pts = pts;
    }
  }
  return best;
}

bool is_forest(const Matroid& m) { return !find_cycle(m).has_value(); }

CactusReport cactus_report(const Matroid& m) {
  Incidence g = incidence_graph(m);
  CactusReport rep;
  const int L = g.line_count();
  std::vector<int> cycle_blocks(L, 0);
  std::vector<char> in_rich_block(L, 0);
  for (const auto& b : blocks(g.adj)) {
    auto vs = block_vertices(b);
    if (b.size() < vs.size()) continue;  // bridge
    bool simple_cycle = b.size() == vs.size();
    for (int v : vs) {
      if (!g.is_line(v)) continue;
      cycle_blocks[v]++;
      if (!simple_cycle) in_rich_block[v] = 1;
    }
  }
  int first = -1;
  for (int i = 0; i < L; ++i) {
    if (cycle_blocks[i] >= 2 || in_rich_block[i]) {
      rep.cactus = false;
      rep.offending_lines.push_back(g.lines[i]);
      if (first < 0) first = i;
    }
  }
  if (first >= 0)
    for (const auto& c : cycles_through(g.adj, first, 2)) rep.witnesses.push_back(to_witness(g, c));
  return rep;
}

bool is_cactus(const Matroid& m) { return cactus_report(m).cactus; }

std::vector<CactusComponent> cactus_components(const Matroid& m) {
  CactusReport rep = cactus_report(m);
  if (!rep.cactus) {
    std::string msg = "not a cactus: line {";
    for (std::size_t i = 0; i < rep.offending_lines[0].size(); ++i)
      msg += (i ? "," : "") + std::to_string(rep.offending_lines[0][i]);
    msg += "} lies in two cycles";
    throw NotCactusError(msg, rep);
  }
  Incidence g = incidence_graph(m);
  const int L = g.line_count();
  std::vector<char> covered(L, 0);
  std::vector<CactusComponent> out;
  for (const auto& b : blocks(g.adj)) {
    auto vs = block_vertices(b);
    if (b.size() < vs.size()) continue;
    CactusComponent c{CactusComponent::Kind::Cycle, {}};
    for (int v : vs)
      if (g.is_line(v)) {
        c.lines.push_back(g.lines[v]);
        covered[v] = 1;
      }
    std::sort(c.lines.begin(), c.lines.end());
    out.push_back(c);
  }
  for (int i = 0; i < L; ++i)
    if (!covered[i]) out.push_back({CactusComponent::Kind::Line, {g.lines[i]}});
  std::sort(out.begin(), out.end(), [](const CactusComponent& a, const CactusComponent& b) { return a.lines < b.lines; });
  return out;
}

// --- associated graphs ----------------------------------------------------------

namespace {

Graph finish_graph(std::vector<int> vertices, std::set<Edge> edges) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  g.vertices = vertices;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

Adj adjacency(const Graph& g, std::map<int, int>& index) {
  index.clear();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
  Adj adj(g.vertices.size());
  for (auto [u, v] : g.edges) {
    adj[index.at(u)].push_back(index.at(v));
    adj[index.at(v)].push_back(index.at(u));
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

Graph associated_graph(const Matroid& m) {
  std::vector<int> vs;
  for (int p = 1; p <= m.ground_size(); ++p)
    if (m.rep(p) == p && degree(m, p) >= 2) vs.push_back(p);
  std::set<Edge> es;
  for (const auto& l : m.effective_lines()) {
    PointSet on;
    for (int p : l)
      if (std::binary_search(vs.begin(), vs.end(), p)) on.push_back(p);
    for (std::size_t i = 0; i < on.size(); ++i)
      for (std::size_t j = i + 1; j < on.size(); ++j) es.insert({on[i], on[j]});
  }
  return finish_graph(vs, es);
}

Graph ordering_graph(const Matroid& m, const std::vector<int>& order) {
  std::vector<int> pos(m.ground_size() + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos.at(order[i]) = static_cast<int>(i);
  std::set<Edge> es;
  std::set<int> vs;
  for (auto l : m.effective_lines()) {
    std::sort(l.begin(), l.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
      es.insert({std::min(l[i], l[i + 1]), std::max(l[i], l[i + 1])});
      vs.insert(l[i]);
      vs.insert(l[i + 1]);
    }
  }
  return finish_graph(std::vector<int>(vs.begin(), vs.end()), es);
}

bool is_cactus_graph(const Graph& g) {
  std::map<int, int> idx;
  Adj adj = adjacency(g, idx);
  for (const auto& b : blocks(adj)) {
    auto vs = block_vertices(b);
    if (b.size() > vs.size()) return false;
  }
  return true;
}

bool graph_has_cycle(const Graph& g) {
  std::map<int, int> idx;
  Adj adj = adjacency(g, idx);
  for (const auto& b : blocks(adj))
    if (b.size() >= block_vertices(b).size()) return true;
  return false;
}

// --- gluing, components, perturbations -----------------------------------------------

Matroid free_gluing(const Matroid& m, const Matroid& n, int p, int q) {
  if (!m.is_simple() || !n.is_simple()) throw std::invalid_argument("free gluing needs point-line configurations");
  if (p < 1 || p > m.ground_size() || q < 1 || q > n.ground_size())
    throw std::invalid_argument("gluing point outside ground set");
  const int d1 = m.ground_size();
  std::vector<int> lab(n.ground_size() + 1, 0);
  int next = d1 + 1;
  for (int x = 1; x <= n.ground_size(); ++x) lab[x] = x == q ? p : next++;
  // effective_lines keeps the implicit line of a rank-two input.
  std::vector<PointSet> lines = m.effective_lines();
  for (const auto& l : n.effective_lines()) {
    PointSet t;
    for (int x : l) t.push_back(lab[x]);
    std::sort(t.begin(), t.end());
    lines.push_back(t);
  }
  return Matroid(d1 + n.ground_size() - 1, {}, {}, lines);
}

std::vector<Matroid> cactus_loop_components(const Matroid& m) {
  PointSet qs = q_points(m);
  std::vector<PointSet> subsets;
  const int k = static_cast<int>(qs.size());
  if (k > 20) throw GuardError("too many points of degree three or more");
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    PointSet s;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) s.push_back(qs[i]);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end(), [](const PointSet& a, const PointSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Matroid> out;
  for (const auto& s : subsets) out.push_back(set_loops(m, s));
  return out;
}

Matroid elementary_perturbation(const Matroid& m, const PointSet& line, int p) {
  auto lines = m.effective_lines();
  auto it = std::find(lines.begin(), lines.end(), line);
  if (it == lines.end()) throw std::invalid_argument("not a line of the configuration");
  if (!std::binary_search(line.begin(), line.end(), p)) throw std::invalid_argument("point is not on the line");
  if (line.size() > 3) {
    PointSet t;
    for (int x : line)
      if (x != p) t.push_back(x);
    *it = t;
  } else {
    lines.erase(it);
  }
  return Matroid(m.ground_size(), m.loops(), m.parallel_classes(), lines, m.rank_cap() == 2 ? 3 : m.rank_cap());
}

std::optional<std::vector<PerturbationStep>> perturb_to_solvable(const Matroid& m, int max_steps) {
  std::deque<std::pair<Matroid, std::vector<PerturbationStep>>> queue;
  std::set<Matroid> seen;
  queue.push_back({m, {}});
  seen.insert(m);
  while (!queue.empty()) {
    auto [cur, path] = queue.front();
    queue.pop_front();
    if (is_solvable(cur)) return path;
    if (static_cast<int>(path.size()) >= max_steps) continue;
    for (const auto& l : cur.effective_lines()) {
      for (int p : l) {
        Matroid nxt = elementary_perturbation(cur, l, p);
        if (!seen.insert(nxt).second) continue;
        auto np = path;
        np.push_back({l, p});
        queue.push_back({nxt, np});
      }
    }
  }
  return std::nullopt;
}

}  // namespace mvt
