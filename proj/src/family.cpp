#include "mvt/family.hpp"

#include <algorithm>

namespace mvt {

// --- UPoly ------------------------------------------------------------------------

UPoly::UPoly(const Q& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::eps(int k) {
  std::vector<Q> c(k + 1, Q(0));
  c[k] = 1;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Q UPoly::coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Q(0); }

Q UPoly::operator()(const Q& e) const {
  Q acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * e + *it;
  return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Q> c(std::max(c_.size(), o.c_.size()), Q(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Q> c(c_.size() + o.c_.size() - 1, Q(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(c));
}

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    Q c = p.coeff(k);
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Q a = abs(c);
    if (k == 0 || a != 1) out += to_string(a);
    if (k >= 1) out += "e";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

UPoly det3(const PolyVec3& a, const PolyVec3& b, const PolyVec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

PolyVec3 cross(const PolyVec3& a, const PolyVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// --- families ---------------------------------------------------------------------

VectorConfig ProjectiveFamily::at(const Q& e) const {
  VectorConfig cfg(size());
  for (int p = 1; p <= size(); ++p)
    for (int i = 0; i < 3; ++i) cfg[p][i] = columns[p][i](e);
  return cfg;
}

ProjectiveFamily constant_family(const VectorConfig& cfg) {
  ProjectiveFamily f;
  f.name = "constant";
  f.columns.resize(cfg.size() + 1);
  for (int p = 1; p <= cfg.size(); ++p)
    for (int i = 0; i < 3; ++i) f.columns[p][i] = UPoly(cfg[p][i]);
  return f;
}

namespace {

bool column_zero(const PolyVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// Rank over Q(ε) of at most three polynomial columns.
int poly_rank(const std::vector<const PolyVec3*>& vs) {
  if (vs.size() == 3 && !det3(*vs[0], *vs[1], *vs[2]).is_zero()) return 3;
  int best = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (column_zero(*vs[i])) continue;
    best = std::max(best, 1);
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!column_zero(cross(*vs[i], *vs[j]))) best = 2;
  }
  return best;
}

}  // namespace

bool family_member_check(const ProjectiveFamily& f, const Matroid& m) {
  if (f.size() != m.ground_size()) throw std::invalid_argument("family and matroid sizes differ");
  const int d = m.ground_size();
  auto agrees = [&](const PointSet& s) {
    std::vector<const PolyVec3*> vs;
    for (int p : s) vs.push_back(&f.columns[p]);
    return (poly_rank(vs) < static_cast<int>(s.size())) == is_dependent(m, s);
  };
  for (int a = 1; a <= d; ++a) {
    if (!agrees({a})) return false;
    for (int b = a + 1; b <= d; ++b) {
      if (!agrees({a, b})) return false;
      for (int c = b + 1; c <= d; ++c)
        if (!agrees({a, b, c})) return false;
    }
  }
  return true;
}

VectorConfig family_limit(const ProjectiveFamily& f) {
  VectorConfig out(f.size());
  for (int p = 1; p <= f.size(); ++p) {
    int k = -1;
    for (int i = 0; i < 3; ++i) {
      int v = f.columns[p][i].valuation();
      if (v >= 0 && (k < 0 || v < k)) k = v;
    }
    if (k < 0) continue;
    for (int i = 0; i < 3; ++i) out[p][i] = f.columns[p][i].coeff(k);
  }
  return out;
}

// --- named families ---------------------------------------------------------------------

namespace {

using PV = PolyVec3;
const UPoly E = UPoly::eps();

ProjectiveFamily make_family(const std::string& name, int d, const std::vector<int>& labels,
                             const std::vector<PV>& cols) {
  ProjectiveFamily f;
  f.name = name;
  f.columns.assign(d + 1, PV{});
  for (std::size_t j = 0; j < labels.size(); ++j) f.columns[labels[j]] = cols[j];
  return f;
}

VectorConfig make_config(int d, const std::vector<int>& labels, const std::vector<Vec3>& cols) {
  return VectorConfig::from_columns(d, labels, cols);
}

Q param(const std::vector<Q>& p, std::size_t i, const Q& dflt) { return i < p.size() ? p[i] : dflt; }

Matroid pascal_matroid() {
  return Matroid(9, {}, {}, {{1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {7, 8, 9}});
}

Matroid pappus_matroid() {
  return Matroid(9, {}, {},
                 {{1, 2, 3}, {1, 6, 8}, {1, 5, 7}, {2, 4, 7}, {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {7, 8, 9}, {4, 5, 6}});
}

NamedFamily pascal_aux(const std::vector<Q>& ps) {
  const Q x = param(ps, 0, 2), y = param(ps, 1, 3);
  if (x == 0 || y == 0 || x == y) throw std::invalid_argument("pascal-aux needs x, y nonzero and distinct");
  NamedFamily nf;
  nf.parameters = {"x=" + to_string(x), "y=" + to_string(y)};
  // Columns for 9,4,5,6,2,3,7,8 after substituting 1+v = 1/ε, w = εy/x,
  // 1+z = x/ε and clearing denominators column by column.
  const std::vector<int> labels{9, 4, 5, 6, 2, 3, 7, 8};
  nf.family = make_family("pascal-aux", 9, labels,
                          {PV{Q(1), Q(0), Q(0)}, PV{Q(0), Q(1), Q(0)}, PV{Q(0), Q(0), Q(1)}, PV{Q(1), Q(1), Q(1)},
                           PV{Q(1), E, E}, PV{x, Q(0), E * y}, PV{Q(1), x, E}, PV{x, Q(x * y), E * y}});
  nf.base = set_loops(pascal_matroid(), {1});
  // 2 = 3 = 9 and the line {2,4,7,8}.
  nf.target = Matroid::closure(9, {1}, {{2, 3, 9}}, {{2, 4, 7, 8}});
  nf.xi = make_config(9, labels,
                      {make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1), make_vec(1, 1, 1), make_vec(1, 0, 0),
                       make_vec(1, 0, 0), make_vec(1, x, 0), make_vec(1, y, 0)});
  return nf;
}

Matroid pappus_m9() { return set_loops(pappus_matroid(), {9}); }

NamedFamily pappus_a1(const std::vector<Q>& ps) {
  const Q z = param(ps, 0, 2);
  NamedFamily nf;
  nf.parameters = {"z=" + to_string(z)};
  // Columns for 1,4,5,8,3,6,2,7,9 with 1+y = 1/ε and x = z.
  const std::vector<int> labels{1, 4, 5, 8, 3, 6, 2, 7, 9};
  nf.family = make_family("pappus-A1", 9, labels,
                          {PV{Q(1), Q(0), Q(0)}, PV{Q(0), Q(1), Q(0)}, PV{Q(0), Q(0), Q(1)}, PV{Q(1), Q(1), Q(1)},
                           PV{Q(1), Q(1 + z), Q(1)}, PV{Q(0), Q(1), Q(1)}, PV{Q(1), E * Q(1 + z), E}, PV{Q(1), Q(0), E},
                           PV{}});
  nf.base = pappus_m9();
  nf.target = identify_set(nf.base, {1, 2, 7});
  nf.xi = make_config(9, labels,
                      {make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1), make_vec(1, 1, 1), make_vec(1, 1 + z, 1),
                       make_vec(0, 1, 1), make_vec(1, 0, 0), make_vec(1, 0, 0), zero_vec()});
  return nf;
}

NamedFamily pappus_b1(const std::vector<Q>& ps) {
  const Q z = param(ps, 0, 2);
  if (z == 1) throw std::invalid_argument("pappus-B1 needs z != 1");
  NamedFamily nf;
  nf.parameters = {"z=" + to_string(z)};
  // Columns for 1,5,3,8,4,2,6,7,9 with 1+x = ε and y = z(1+x)/(z-1).
  const std::vector<int> labels{1, 5, 3, 8, 4, 2, 6, 7, 9};
  nf.family = make_family("pappus-B1", 9, labels,
                          {PV{Q(1), Q(0), Q(0)}, PV{Q(0), Q(1), Q(0)}, PV{Q(0), Q(0), Q(1)}, PV{Q(1), Q(1), Q(1)},
                           PV{Q(1), Q(1), E}, PV{Q(z - 1), Q(0), E * z}, PV{Q(1), E, E}, PV{-E, E * Q(-z), Q(0)}, PV{}});
  nf.base = pappus_m9();
  nf.target = Matroid(9, {9}, {{1, 2, 6}}, {{1, 4, 5, 7}, {3, 4, 8}});
  nf.xi = make_config(9, labels,
                      {make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1), make_vec(1, 1, 1), make_vec(1, 1, 0),
                       make_vec(1, 0, 0), make_vec(1, 0, 0), make_vec(1, z, 0), zero_vec()});
  return nf;
}

NamedFamily pappus_c1(const std::vector<Q>& ps) {
  const Q z = param(ps, 0, 2);
  if (z == -1) throw std::invalid_argument("pappus-C1 needs z != -1");
  NamedFamily nf;
  nf.parameters = {"z=" + to_string(z)};
  // Columns for 1,5,3,8,4,2,6,7,9 with x = z and y = -(1+x)/ε.
  const std::vector<int> labels{1, 5, 3, 8, 4, 2, 6, 7, 9};
  nf.family = make_family("pappus-C1", 9, labels,
                          {PV{Q(1), Q(0), Q(0)}, PV{Q(0), Q(1), Q(0)}, PV{Q(0), Q(0), Q(1)}, PV{Q(1), Q(1), Q(1)},
                           PV{Q(1), Q(1), Q(1 + z)}, PV{E, Q(0), Q(-(1 + z))}, PV{Q(1), Q(1 + z), Q(1 + z)},
                           PV{E * Q(1 + z) + UPoly(Q(1 + z)), Q(1 + z), Q(0)}, PV{}});
  nf.base = pappus_m9();
  nf.target = identify_set(nf.base, {2, 3});
  nf.xi = make_config(9, labels,
                      {make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1), make_vec(1, 1, 1), make_vec(1, 1, 1 + z),
                       make_vec(0, 0, 1), make_vec(1, 1 + z, 1 + z), make_vec(1, 1, 0), zero_vec()});
  return nf;
}

NamedFamily pappus_d1(const std::vector<Q>& ps) {
  const Q w = param(ps, 0, 2);
  if (w == 0 || w == 1) throw std::invalid_argument("pappus-D1 needs w != 0, 1");
  NamedFamily nf;
  nf.parameters = {"w=" + to_string(w)};
  // Columns for 1,5,3,6,4,8,2,7,9 with 1+x = 1/ε and y = wε/(wε-1); columns
  // 2 and 7 are scaled by wε-1, which is nonzero near ε = 0.
  const std::vector<int> labels{1, 5, 3, 6, 4, 8, 2, 7, 9};
  nf.family = make_family("pappus-D1", 9, labels,
                          {PV{Q(1), Q(0), Q(0)}, PV{Q(0), Q(1), Q(0)}, PV{Q(0), Q(0), Q(1)}, PV{Q(1), Q(1), Q(1)},
                           PV{E, Q(1), E}, PV{E, Q(1), Q(1)}, PV{E * w - UPoly(1), Q(0), E * w}, PV{Q(1), w, Q(0)},
                           PV{}});
  nf.base = pappus_m9();
  // Identifying 1=2 and 4=5 and closing would collapse everything onto one
  // line; the minimal matroid keeps the three lines below.
  nf.target = Matroid(9, {9}, {{1, 2}, {4, 5}}, {{1, 4, 7}, {1, 6, 8}, {3, 4, 8}});
  nf.xi = make_config(9, labels,
                      {make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1), make_vec(1, 1, 1), make_vec(0, 1, 0),
                       make_vec(0, 1, 1), make_vec(1, 0, 0), make_vec(1, w, 0), zero_vec()});
  return nf;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"pascal-aux", "pappus-A1", "pappus-B1", "pappus-C1", "pappus-D1"};
  return names;
}

const std::vector<std::string>& unsupported_family_names() {
  static const std::vector<std::string> names{"pappus-B-sqrt", "third93-cube-root"};
  return names;
}

NamedFamily named_family(const std::string& name, const std::vector<Q>& params) {
  if (name == "pascal-aux") return pascal_aux(params);
  if (name == "pappus-A1") return pappus_a1(params);
  if (name == "pappus-B1") return pappus_b1(params);
  if (name == "pappus-C1") return pappus_c1(params);
  if (name == "pappus-D1") return pappus_d1(params);
  if (name == "pappus-B-sqrt")
    throw UnsupportedFamily("pappus-B-sqrt: the family involves sqrt(-3-4e), which is not a rational polynomial");
  if (name == "third93-cube-root")
    throw UnsupportedFamily("third93-cube-root: the family needs a root of z^2+z+1, which is not rational");
  throw std::invalid_argument("unknown family: " + name);
}

json family_to_json(const ProjectiveFamily& f) {
  json cols = json::object();
  for (int p = 1; p <= f.size(); ++p) {
    json col = json::array();
    for (int i = 0; i < 3; ++i) {
      json c = json::array();
      for (const auto& x : f.columns[p][i].coeffs()) c.push_back(to_string(x));
      col.push_back(c);
    }
    cols[std::to_string(p)] = col;
  }
  return json{{"name", f.name}, {"ground_size", f.size()}, {"columns", cols}};
}

ProjectiveFamily family_from_json(const json& j) {
  ProjectiveFamily f;
  f.name = j.value("name", std::string("family"));
  int d = j.at("ground_size").get<int>();
  if (d < 0) throw std::invalid_argument("ground_size must be non-negative");
  f.columns.assign(d + 1, PolyVec3{});
  for (auto it = j.at("columns").begin(); it != j.at("columns").end(); ++it) {
    int p = std::stoi(it.key());
    if (p < 1 || p > d) throw std::invalid_argument("family column outside the ground set");
    const json& col = it.value();
    if (!col.is_array() || col.size() != 3) throw std::invalid_argument("each family column has three entries");
    for (int i = 0; i < 3; ++i) {
      std::vector<Q> cs;
      for (const auto& c : col[i]) cs.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Q(c.get<long>()));
      f.columns[p][i] = UPoly(std::move(cs));
    }
  }
  return f;
}

}  // namespace mvt
