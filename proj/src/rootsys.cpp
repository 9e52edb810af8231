#include "dualpair/rootsys.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dualpair {

// --------------------------------------------------------------------------
// Poly

Poly Poly::q_power(int k) {
  Poly p;
  p.c.assign(static_cast<std::size_t>(k) + 1, 0);
  p.c.back() = 1;
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long Poly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c.size()) return 0;
  return c[k];
}

int Poly::degree() const { return static_cast<int>(c.size()) - 1; }

bool Poly::is_zero() const { return c.empty(); }

long long Poly::eval(long long q) const {
  long long acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    long long t;
    if (__builtin_smulll_overflow(acc, q, &t)) throw std::overflow_error("Poly::eval overflow");
    if (__builtin_saddll_overflow(t, c[k], &acc)) throw std::overflow_error("Poly::eval overflow");
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly operator/(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  Poly rem = a, quot;
  quot.c.assign(a.c.size(), 0);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    long long lead_b = b.c.back();
    long long lead_r = rem.c.back();
    if (lead_b == 0 || lead_r % lead_b != 0)
      throw std::domain_error("Poly: inexact division");
    long long f = lead_r / lead_b;
    int shift = rem.degree() - b.degree();
    quot.c[shift] += f;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[i + shift] -= f * b.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw std::domain_error("Poly: inexact division");
  quot.trim();
  return quot;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    long long v = c[k];
    if (v == 0) continue;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    long long av = v < 0 ? -v : v;
    if (av != 1 || k == 0) os << av;
    if (k > 0) {
      if (av != 1) os << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Poly q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer: negative n");
  Poly p;
  p.c.assign(static_cast<std::size_t>(n), 1);
  return p;
}

Poly gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return Poly::zero();
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
  std::vector<Poly> row(static_cast<std::size_t>(n) + 1);
  row[0] = Poly::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      Poly t = Poly::q_power(j) * row[j];
      row[j] = row[j - 1] + t;
    }
  }
  return row[k];
}

// --------------------------------------------------------------------------
// RootSystem construction

namespace {

long long idot(const Coords& a, const Coords& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Coords> symmetric_cartan(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Coords> rows(n, Coords(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 2;
  for (auto [a, b] : edges) {
    rows[a][b] = -1;
    rows[b][a] = -1;
  }
  return rows;
}

}  // namespace

RootSystem RootSystem::from_cartan(const std::string& label,
                                   const std::vector<Coords>& cartan_rows,
                                   const std::vector<long long>& scales) {
  RootSystem rs;
  rs.label_ = label;
  rs.rank_ = static_cast<int>(cartan_rows.size());
  rs.fw_basis_ = true;
  rs.simple_roots_ = cartan_rows;
  for (const auto& row : cartan_rows)
    if (static_cast<int>(row.size()) != rs.rank_)
      throw std::invalid_argument("from_cartan: matrix not square");
  for (int i = 0; i < rs.rank_; ++i) {
    Coords e(rs.rank_, 0);
    e[i] = 1;
    rs.simple_coroots_.push_back(e);
  }
  rs.scales_ = scales;
  if (static_cast<int>(scales.size()) != rs.rank_)
    throw std::invalid_argument("from_cartan: scales size mismatch");
  // Gram matrix G = R^{-1} D, where R has the simple roots as rows.
  QMat R(rs.rank_, QVec(rs.rank_));
  for (int i = 0; i < rs.rank_; ++i)
    for (int j = 0; j < rs.rank_; ++j) R[i][j] = rat(cartan_rows[i][j]);
  QMat Rinv = qmat_inverse(R);
  rs.gram_ = QMat(rs.rank_, QVec(rs.rank_, 0));
  for (int i = 0; i < rs.rank_; ++i)
    for (int j = 0; j < rs.rank_; ++j) rs.gram_[i][j] = Rinv[i][j] * rat(scales[j]);
  rs.has_gram_ = true;
  rs.generate_roots();
  return rs;
}

RootSystem RootSystem::build(const std::string& label) {
  auto path_edges = [](int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
  };

  // Simply-laced families.
  if (label.size() == 2 && label[0] == 'A' && label[1] >= '1' && label[1] <= '8') {
    int n = label[1] - '0';
    return from_cartan(label, symmetric_cartan(n, path_edges(n)),
                       std::vector<long long>(n, 1));
  }
  if (label == "A1xA1")
    return from_cartan(label, symmetric_cartan(2, {}), {1, 1});
  if (label == "D4") {
    auto rows = symmetric_cartan(4, {{0, 1}, {1, 2}, {1, 3}});
    return from_cartan(label, rows, {1, 1, 1, 1});
  }
  if (label == "D5") {
    auto rows = symmetric_cartan(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
    return from_cartan(label, rows, {1, 1, 1, 1, 1});
  }
  if (label == "E6") {
    auto rows = symmetric_cartan(6, {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}});
    return from_cartan(label, rows, std::vector<long long>(6, 1));
  }
  if (label == "E7") {
    auto rows =
        symmetric_cartan(7, {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}});
    return from_cartan(label, rows, std::vector<long long>(7, 1));
  }
  if (label == "E8") {
    auto rows = symmetric_cartan(
        8, {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    return from_cartan(label, rows, std::vector<long long>(8, 1));
  }

  // Doubly and triply laced.
  if (label == "B2") return from_cartan(label, {{2, -2}, {-1, 2}}, {2, 1});
  if (label == "C2") return from_cartan(label, {{2, -1}, {-2, 2}}, {1, 2});
  if (label == "B3")
    return from_cartan(label, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {2, 2, 1});
  if (label == "C3")
    return from_cartan(label, {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {1, 1, 2});
  if (label == "F4")
    return from_cartan(label,
                       {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
                       {2, 2, 1, 1});
  if (label == "G2") return from_cartan(label, {{2, -1}, {-3, 2}}, {1, 3});

  // gl(n): character lattice Z^n, simple roots e_i - e_{i+1}.
  if (label.rfind("gl", 0) == 0) {
    int n = std::stoi(label.substr(2));
    if (n < 1 || n > 9) throw std::invalid_argument("unsupported gl rank: " + label);
    RootSystem rs;
    rs.label_ = label;
    rs.rank_ = n;
    rs.fw_basis_ = false;
    for (int i = 0; i + 1 < n; ++i) {
      Coords a(n, 0);
      a[i] = 1;
      a[i + 1] = -1;
      rs.simple_roots_.push_back(a);
      rs.simple_coroots_.push_back(a);
      rs.scales_.push_back(1);
    }
    rs.gram_ = QMat(n, QVec(n, 0));
    for (int i = 0; i < n; ++i) rs.gram_[i][i] = 1;
    rs.has_gram_ = true;
    rs.generate_roots();
    return rs;
  }

  // gsp(2n): character lattice Z^{n+1} with coordinates (e_1..e_n, c), where
  // c is the similitude character; simple roots e_i - e_{i+1} and 2e_n - c.
  if (label.rfind("gsp", 0) == 0) {
    int two_n = std::stoi(label.substr(3));
    if (two_n < 2 || two_n > 12 || two_n % 2 != 0)
      throw std::invalid_argument("unsupported gsp rank: " + label);
    int n = two_n / 2;
    RootSystem rs;
    rs.label_ = label;
    rs.rank_ = n + 1;
    rs.fw_basis_ = false;
    for (int i = 0; i + 1 < n; ++i) {
      Coords a(n + 1, 0), av(n + 1, 0);
      a[i] = 1;
      a[i + 1] = -1;
      av = a;
      rs.simple_roots_.push_back(a);
      rs.simple_coroots_.push_back(av);
      rs.scales_.push_back(1);
    }
    Coords an(n + 1, 0), anv(n + 1, 0);
    an[n - 1] = 2;
    an[n] = -1;
    anv[n - 1] = 1;
    rs.simple_roots_.push_back(an);
    rs.simple_coroots_.push_back(anv);
    rs.scales_.push_back(n == 1 ? 1 : 2);
    rs.has_gram_ = false;
    rs.generate_roots();
    return rs;
  }

  throw std::invalid_argument("unknown root system label: " + label);
}

void RootSystem::generate_roots() {
  std::map<Coords, Root> all;
  std::queue<Coords> work;
  for (int i = 0; i < num_simple(); ++i) {
    Root r;
    r.wt = simple_roots_[i];
    r.roots.assign(num_simple(), 0);
    r.roots[i] = 1;
    r.coroot = simple_coroots_[i];
    r.scale = scales_[i];
    all[r.wt] = r;
    work.push(r.wt);
  }
  while (!work.empty()) {
    Root r = all[work.front()];
    work.pop();
    for (int i = 0; i < num_simple(); ++i) {
      long long k = idot(simple_coroots_[i], r.wt);
      Root s;
      s.wt = r.wt;
      s.roots = r.roots;
      s.coroot = r.coroot;
      s.scale = r.scale;
      for (int t = 0; t < rank_; ++t) s.wt[t] -= k * simple_roots_[i][t];
      s.roots[i] -= k;
      long long kc = idot(r.coroot, simple_roots_[i]);
      for (int t = 0; t < rank_; ++t) s.coroot[t] -= kc * simple_coroots_[i][t];
      if (!all.count(s.wt)) {
        all[s.wt] = s;
        work.push(s.wt);
      }
    }
  }
  roots_.clear();
  std::size_t pos = 0, neg = 0;
  for (auto& [wt, r] : all) {
    bool all_nonneg = true, all_nonpos = true;
    for (long long x : r.roots) {
      all_nonneg = all_nonneg && x >= 0;
      all_nonpos = all_nonpos && x <= 0;
    }
    if (all_nonneg == all_nonpos) throw std::logic_error("root closure: mixed-sign root");
    r.positive = all_nonneg;
    (r.positive ? pos : neg)++;
    roots_.push_back(r);
  }
  if (pos != neg) throw std::logic_error("root closure: asymmetric");
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    long long ha = 0, hb = 0;
    for (long long x : a.roots) ha += x;
    for (long long x : b.roots) hb += x;
    if (ha != hb) return ha < hb;
    return a.wt < b.wt;
  });
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (r.positive) out.push_back(r);
  return out;
}

std::size_t RootSystem::num_positive() const { return roots_.size() / 2; }

long long RootSystem::pairing(int i, const Coords& mu) const {
  return idot(simple_coroots_.at(i), mu);
}

bool RootSystem::is_dominant(const Coords& mu) const {
  for (int i = 0; i < num_simple(); ++i)
    if (pairing(i, mu) < 0) return false;
  return true;
}

Coords RootSystem::reflect(int i, const Coords& mu) const {
  long long k = pairing(i, mu);
  Coords out = mu;
  for (int t = 0; t < rank_; ++t) out[t] -= k * simple_roots_[i][t];
  return out;
}

Coords RootSystem::dominant_representative(const Coords& mu) const {
  Coords cur = mu;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < num_simple(); ++i) {
      if (pairing(i, cur) < 0) {
        cur = reflect(i, cur);
        changed = true;
      }
    }
  }
  return cur;
}

std::vector<Coords> RootSystem::weyl_orbit(const Coords& mu) const {
  std::set<Coords> seen{mu};
  std::queue<Coords> work;
  work.push(mu);
  while (!work.empty()) {
    Coords cur = work.front();
    work.pop();
    for (int i = 0; i < num_simple(); ++i) {
      Coords nxt = reflect(i, cur);
      if (seen.insert(nxt).second) work.push(nxt);
    }
  }
  return std::vector<Coords>(seen.begin(), seen.end());
}

Rat RootSystem::form_root(const QVec& x, const Root& alpha) const {
  Rat s = 0;
  for (int t = 0; t < rank_; ++t) s += x[t] * rat(alpha.coroot[t]);
  return s * rat(alpha.scale);
}

Rat RootSystem::form(const QVec& x, const QVec& y) const {
  if (!has_gram_) throw std::logic_error("form: no invariant form on " + label_);
  Rat s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += x[i] * gram_[i][j] * y[j];
  return s;
}

QVec RootSystem::rho() const {
  QVec r(rank_, 0);
  for (const auto& a : roots_) {
    if (!a.positive) continue;
    for (int t = 0; t < rank_; ++t) r[t] += rat(a.wt[t]) / 2;
  }
  return r;
}

QVec RootSystem::fundamental_coweight(int i) const {
  if (num_simple() != rank_)
    throw std::logic_error("fundamental_coweight: simple roots do not span " + label_);
  QMat R(rank_, QVec(rank_));
  for (int a = 0; a < rank_; ++a)
    for (int b = 0; b < rank_; ++b) R[a][b] = rat(simple_roots_[a][b]);
  QVec e(rank_, 0);
  e[i] = 1;
  // Solve u . alpha_j = delta_ij, i.e. R u = e_i.
  return qmat_solve(R, e);
}

QVec RootSystem::sum_positive_coroots() const {
  QVec s(rank_, 0);
  for (const auto& a : roots_) {
    if (!a.positive) continue;
    for (int t = 0; t < rank_; ++t) s[t] += rat(a.coroot[t]);
  }
  return s;
}

QVec RootSystem::principal_cocharacter() const {
  QVec s = sum_positive_coroots();
  for (auto& x : s) x /= 2;
  return s;
}

Rat RootSystem::pair(const QVec& functional, const Coords& mu) const {
  Rat s = 0;
  for (int t = 0; t < rank_; ++t) s += functional[t] * rat(mu[t]);
  return s;
}

std::vector<std::vector<int>> RootSystem::components() const {
  int n = num_simple();
  std::vector<int> comp_id(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (comp_id[i] != -1) continue;
    std::queue<int> work;
    work.push(i);
    comp_id[i] = next;
    while (!work.empty()) {
      int a = work.front();
      work.pop();
      for (int b = 0; b < n; ++b) {
        if (comp_id[b] != -1 || a == b) continue;
        if (idot(simple_coroots_[a], simple_roots_[b]) != 0) {
          comp_id[b] = next;
          work.push(b);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> comps(next);
  for (int i = 0; i < n; ++i) comps[comp_id[i]].push_back(i);
  return comps;
}

std::string RootSystem::component_type(const std::vector<int>& comp) const {
  int n = static_cast<int>(comp.size());
  if (n == 1) return "A1";
  auto off = [&](int a, int b) {
    return idot(simple_coroots_[comp[a]], simple_roots_[comp[b]]);
  };
  int max_bond = 0;
  std::vector<std::vector<int>> adj(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int w = static_cast<int>(off(a, b) * off(b, a));
      if (w > 0 && a < b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      max_bond = std::max(max_bond, w);
    }
  if (max_bond == 3) {
    if (n != 2) throw std::logic_error("component_type: bad triple bond");
    return "G2";
  }
  if (max_bond == 2) {
    int shorts = 0, longs = 0;
    for (int a = 0; a < n; ++a) (scales_[comp[a]] == 1 ? shorts : longs)++;
    if (n == 2) return "B2";
    if (shorts == 2 && longs == 2 && n == 4) return "F4";
    if (shorts == 1) return "B" + std::to_string(n);
    if (longs == 1) return "C" + std::to_string(n);
    throw std::logic_error("component_type: unrecognized doubly-laced diagram");
  }
  // Simply laced: path or star with three legs.
  int branch = -1;
  for (int a = 0; a < n; ++a) {
    if (adj[a].size() > 3) throw std::logic_error("component_type: vertex degree > 3");
    if (adj[a].size() == 3) {
      if (branch != -1) throw std::logic_error("component_type: two branch vertices");
      branch = a;
    }
  }
  if (branch == -1) return "A" + std::to_string(n);
  std::vector<int> legs;
  for (int s : adj[branch]) {
    int len = 0, prev = branch, cur = s;
    while (true) {
      ++len;
      int nxt = -1;
      for (int t : adj[cur])
        if (t != prev) nxt = t;
      if (nxt == -1) break;
      prev = cur;
      cur = nxt;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs[0] == 1 && legs[1] == 1) return "D" + std::to_string(n);
  if (legs == std::vector<int>{1, 2, 2}) return "E6";
  if (legs == std::vector<int>{1, 2, 3}) return "E7";
  if (legs == std::vector<int>{1, 2, 4}) return "E8";
  throw std::logic_error("component_type: unrecognized simply-laced diagram");
}

std::vector<int> RootSystem::degrees_of(const std::vector<int>& comp) const {
  std::string t = component_type(comp);
  char fam = t[0];
  int n = std::stoi(t.substr(1));
  std::vector<int> d;
  switch (fam) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      return d;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      return d;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      return d;
    case 'E':
      if (n == 6) return {2, 5, 6, 8, 9, 12};
      if (n == 7) return {2, 6, 8, 10, 12, 14, 18};
      return {2, 8, 12, 14, 18, 20, 24, 30};
    case 'F':
      return {2, 6, 8, 12};
    case 'G':
      return {2, 6};
  }
  throw std::logic_error("degrees_of: unknown family");
}

Poly RootSystem::weyl_poincare() const {
  Poly p = Poly::one();
  for (const auto& comp : components())
    for (int d : degrees_of(comp)) p = p * q_integer(d);
  return p;
}

Poly RootSystem::poincare_ratio(const std::vector<int>& levi) const {
  Poly full = weyl_poincare();
  if (levi.empty()) return full;
  return full / levi_subsystem(levi).weyl_poincare();
}

RootSystem RootSystem::levi_subsystem(const std::vector<int>& levi) const {
  std::vector<Coords> rows(levi.size(), Coords(levi.size(), 0));
  std::vector<long long> scales;
  for (std::size_t a = 0; a < levi.size(); ++a) {
    for (std::size_t b = 0; b < levi.size(); ++b)
      rows[a][b] = idot(simple_coroots_.at(levi[b]), simple_roots_.at(levi[a]));
    scales.push_back(scales_.at(levi[a]));
  }
  return from_cartan(label_ + ":levi", rows, scales);
}

Coords RootSystem::restrict_to_levi(const std::vector<int>& levi, const Coords& mu) const {
  Coords out;
  for (int j : levi) out.push_back(idot(simple_coroots_.at(j), mu));
  return out;
}

}  // namespace dualpair
