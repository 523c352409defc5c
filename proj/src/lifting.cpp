#include "mvt/lifting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mvt/fixtures.hpp"
#include "mvt/geometry.hpp"

namespace mvt {

QMode parse_qmode(const std::string& s) {
  if (s == "single") return QMode::Single;
  if (s == "per-column") return QMode::PerColumn;
  throw std::invalid_argument("unknown q mode: " + s);
}

std::vector<PointSet> lift_rows(const Matroid& m, const std::vector<PointSet>& line_order) {
  auto circuits = three_circuits(m);
  std::set<PointSet> pending(circuits.begin(), circuits.end());
  std::vector<PointSet> out;
  for (const auto& line : line_order) {
    PointSet l = line;
    std::sort(l.begin(), l.end());
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b)
        for (std::size_t c = b + 1; c < l.size(); ++c) {
          PointSet t{l[a], l[b], l[c]};
          if (pending.erase(t)) out.push_back(t);
        }
  }
  // Circuits not covered by the presentation keep lexicographic order.
  for (const auto& t : circuits)
    if (pending.count(t)) out.push_back(t);
  return out;
}

LiftMatrix lift_matrix_on(const std::vector<PointSet>& rows, const std::vector<int>& cols, QMode mode) {
  LiftMatrix lm;
  lm.rows = rows;
  lm.cols = cols;
  lm.mode = mode;
  for (const auto& r : rows) {
    if (r.size() != 3) throw std::invalid_argument("lift rows must be 3-circuits");
    std::vector<BracketPoly> row;
    for (int c : cols) {
      int q = mode == QMode::Single ? sym_q(0) : sym_q(c);
      if (c == r[0])
        row.push_back(BracketPoly::bracket(r[1], r[2], q));
      else if (c == r[1])
        row.push_back(-BracketPoly::bracket(r[0], r[2], q));
      else if (c == r[2])
        row.push_back(BracketPoly::bracket(r[0], r[1], q));
      else
        row.emplace_back();
    }
    lm.entries.push_back(std::move(row));
  }
  return lm;
}

LiftMatrix lift_matrix(const Matroid& m, QMode mode, const std::vector<PointSet>& line_order) {
  return lift_matrix_on(lift_rows(m, line_order), all_points(m.ground_size()), mode);
}

std::string entry_text(const BracketPoly& p) {
  std::string s = to_text(p);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return s;
}

std::string matrix_text(const LiftMatrix& lm) {
  std::string out;
  for (const auto& row : lm.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += " & ";
      out += entry_text(row[j]);
    }
    out += '\n';
  }
  return out;
}

QMatrix evaluate_lift_matrix(const LiftMatrix& lm, const VectorConfig& cfg, const std::vector<Vec3>& qvecs) {
  Assignment asg = assignment_from(cfg);
  if (lm.mode == QMode::Single) {
    if (qvecs.size() != 1) throw std::invalid_argument("single mode needs one q vector");
    asg[sym_q(0)] = qvecs[0];
  } else {
    if (qvecs.size() != lm.cols.size()) throw std::invalid_argument("per-column mode needs one q vector per column");
    for (std::size_t j = 0; j < lm.cols.size(); ++j) asg[sym_q(lm.cols[j])] = qvecs[j];
  }
  QMatrix a(lm.rows.size(), std::vector<Q>(lm.cols.size(), Q(0)));
  for (std::size_t i = 0; i < lm.rows.size(); ++i)
    for (std::size_t j = 0; j < lm.cols.size(); ++j)
      if (!lm.entries[i][j].is_zero()) a[i][j] = evaluate(lm.entries[i][j], asg);
  return a;
}

LiftSpace lift_space(const Matroid& m, const VectorConfig& cfg, const Vec3& q) {
  const int d = m.ground_size();
  if (cfg.size() != d) throw std::invalid_argument("configuration size does not match the matroid");
  for (int i = 1; i <= d; ++i) {
    if (is_zero(cfg[i])) throw std::invalid_argument("lifting needs nonzero vectors (point " + std::to_string(i) + ")");
    for (int j = 1; j < i; ++j)
      if (proj_equal(cfg[i], cfg[j]))
        throw std::invalid_argument("lifting needs pairwise distinct points (" + std::to_string(j) + ", " +
                                    std::to_string(i) + ")");
  }
  auto lm = lift_matrix(m, QMode::Single);
  auto a = evaluate_lift_matrix(lm, cfg, {q});
  LiftSpace s;
  s.basis = kernel_basis(a, d);
  s.dim = static_cast<int>(s.basis.size());
  return s;
}

int lift_dim(const Matroid& m, const VectorConfig& cfg, const Vec3& q) { return lift_space(m, cfg, q).dim; }

namespace {

void require_simple(const Matroid& m) {
  if (!m.loops().empty()) throw std::invalid_argument("the dimension formula needs a loop-free matroid");
  for (const auto& c : m.classes())
    if (c.size() > 1) throw std::invalid_argument("the dimension formula needs a matroid without parallel points");
}

int dim_rec(const Matroid& m) {
  const int d = m.ground_size();
  if (d == 0) return 0;
  PointSet s = s_points(m);
  if (static_cast<int>(s.size()) == d) throw std::invalid_argument("matroid is not nilpotent");
  int total = dim_rec(restrict_to(m, s));
  for (const auto& l : m.effective_lines()) {
    int inside = 0;
    for (int p : l) inside += std::binary_search(s.begin(), s.end(), p) ? 1 : 0;
    total += 2 - std::min(inside, 2);
  }
  for (int p = 1; p <= d; ++p)
    if (degree(m, p) == 0) ++total;
  return total;
}

}  // namespace

int dim_recursive(const Matroid& m) {
  require_simple(m);
  return dim_rec(m);
}

int dim_ordering(const Matroid& m) {
  require_simple(m);
  auto ord = nilpotent_ordering(m);
  if (!ord) throw std::invalid_argument("matroid is not nilpotent");
  return ord->zero_count();
}

int dim_formula(const Matroid& m) {
  int a = dim_recursive(m);
  int b = dim_ordering(m);
  if (a != b)
    throw std::logic_error("dimension formula disagrees with the ordering count: " + std::to_string(a) + " vs " +
                           std::to_string(b));
  return a;
}

VectorConfig generic_collinear_config(int d, Sampler& rng) {
  VectorConfig cfg(d);
  std::set<Q> used;
  for (int i = 1; i <= d; ++i) {
    Q t = rng.rational();
    while (used.count(t)) t = rng.rational();
    used.insert(t);
    cfg[i] = make_vec(1, t, 0);
  }
  return cfg;
}

Vec3 generic_q(Sampler& rng) {
  Vec3 q = rng.vec();
  q[2] = rng.nonzero_rational();
  return q;
}

std::vector<int> kernel_dim_draws(const Matroid& m, int draws, std::uint64_t seed, Exec exec) {
  std::vector<int> out(static_cast<std::size_t>(std::max(draws, 0)));
  parallel_for(out.size(), exec, [&](std::size_t k) {
    Sampler rng(sub_seed(seed, k));
    auto cfg = generic_collinear_config(m.ground_size(), rng);
    auto q = generic_q(rng);
    out[k] = lift_dim(m, cfg, q);
  });
  return out;
}

bool lift_and_check(const Matroid& m, const VectorConfig& cfg, const Vec3& q, const std::vector<Q>& z) {
  const int d = m.ground_size();
  if (static_cast<int>(z.size()) != d) throw std::invalid_argument("lifting vector has the wrong length");
  VectorConfig lifted(d);
  for (int i = 1; i <= d; ++i) lifted[i] = cfg[i] + z[i - 1] * q;
  return includes_dependencies(lifted, m);
}

bool in_kernel(const Matroid& m, const VectorConfig& cfg, const Vec3& q, const std::vector<Q>& z) {
  auto a = evaluate_lift_matrix(lift_matrix(m, QMode::Single), cfg, {q});
  for (const auto& v : mat_vec(a, z))
    if (v != 0) return false;
  return true;
}

Z lifting_generator_count(const std::vector<GeneratorCountItem>& spec) {
  Z total = 0;
  for (const auto& it : spec) {
    if (it.minor > it.cols || it.minor > it.rows || it.minor < 0)
      throw std::invalid_argument("minor size exceeds the matrix in " + it.label);
    Z binom, power;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(it.cols), static_cast<unsigned long>(it.minor));
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(it.alphabet), static_cast<unsigned long>(it.cols));
    total += Z(it.multiplicity) * binom * power;
  }
  return total;
}

bool has_generator_count_spec(const std::string& name) { return name == "pascal" || name == "pappus"; }

std::vector<GeneratorCountItem> generator_count_spec(const std::string& name) {
  // Each q_i ranges over the three basis vectors; a minor is fixed by its
  // column choice.
  if (name == "pascal") return {{"7x9 per-column matrix, 7x7 minors", 7, 9, 7, 3, 1}};
  if (name == "pappus")
    return {{"9x9 per-column matrix, 7x7 minors", 9, 9, 7, 3, 1},
            {"6x8 matrices omitting one index, 6x6 minors", 6, 8, 6, 3, 9}};
  throw std::invalid_argument("no lifting generator count for " + name);
}

std::vector<LiftMatrix> lifting_generator_matrices(const std::string& name) {
  if (!has_generator_count_spec(name)) throw std::invalid_argument("no lifting generators for " + name);
  auto nc = builtin_config(name);
  auto lines = presentation_lines(nc);
  std::vector<LiftMatrix> out;
  out.push_back(lift_matrix(nc.matroid, QMode::PerColumn, lines));
  if (name == "pappus") {
    const int d = nc.matroid.ground_size();
    for (int i = 1; i <= d; ++i) {
      std::vector<PointSet> rows;
      for (const auto& r : lift_rows(nc.matroid, lines))
        if (!std::binary_search(r.begin(), r.end(), i)) rows.push_back(r);
      out.push_back(lift_matrix_on(rows, set_minus(all_points(d), {i}), QMode::PerColumn));
    }
  }
  return out;
}

}  // namespace mvt
