#include "cotlab/rep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cotlab {

int Rep::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

bool Rep::is_zero() const { return total_dim() == 0; }

Rep zero_rep(const Quiver& q) {
  Rep r;
  r.dims.assign(q.n, 0);
  for (size_t a = 0; a < q.arrows.size(); ++a) r.mats.emplace_back(0, 0);
  return r;
}

Rep direct_sum(const Quiver& q, const Rep& a, const Rep& b) {
  Rep r;
  r.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) r.dims[v] = a.dims[v] + b.dims[v];
  for (size_t k = 0; k < q.arrows.size(); ++k) {
    auto [s, t] = q.arrows[k];
    Mat m(r.dims[t], r.dims[s]);
    for (int i = 0; i < a.dims[t]; ++i)
      for (int j = 0; j < a.dims[s]; ++j) m.set(i, j, a.mats[k].at(i, j));
    for (int i = 0; i < b.dims[t]; ++i)
      for (int j = 0; j < b.dims[s]; ++j)
        m.set(a.dims[t] + i, a.dims[s] + j, b.mats[k].at(i, j));
    r.mats.push_back(m);
  }
  return r;
}

Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts) {
  Rep r = zero_rep(q);
  for (const Rep& p : parts) r = direct_sum(q, r, p);
  return r;
}

long long euler_form(const Quiver& q, const std::vector<int>& d,
                     const std::vector<int>& e) {
  if (int(d.size()) != q.n || int(e.size()) != q.n)
    throw std::invalid_argument("euler_form: length mismatch");
  long long val = 0;
  for (int v = 0; v < q.n; ++v) val += (long long)d[v] * e[v];
  for (auto [s, t] : q.arrows) val -= (long long)d[s] * e[t];
  return val;
}

std::vector<RepMap> hom_space(const Field& F, const Quiver& q, const Rep& m,
                              const Rep& n) {
  // Unknowns: entries of f_v (n.dims[v] x m.dims[v]) for every vertex,
  // flattened in vertex order, row major.
  std::vector<int> offset(q.n + 1, 0);
  for (int v = 0; v < q.n; ++v)
    offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  int nvar = offset[q.n];

  int neq = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    neq += n.dims[t] * m.dims[s];
  }
  Mat sys(neq, nvar);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    // f_t * m_a - n_a * f_s = 0, entry (i, j) in n.dims[t] x m.dims[s].
    for (int i = 0; i < n.dims[t]; ++i)
      for (int j = 0; j < m.dims[s]; ++j) {
        for (int k = 0; k < m.dims[t]; ++k) {
          int var = offset[t] + i * m.dims[t] + k;
          sys.set(row, var, F.add(sys.at(row, var), m.mats[a].at(k, j)));
        }
        for (int k = 0; k < n.dims[s]; ++k) {
          int var = offset[s] + k * m.dims[s] + j;
          sys.set(row, var, F.sub(sys.at(row, var), n.mats[a].at(i, k)));
        }
        ++row;
      }
  }
  Mat basis = nullspace(F, sys);
  std::vector<RepMap> out;
  for (int b = 0; b < basis.cols(); ++b) {
    RepMap f(q.n);
    for (int v = 0; v < q.n; ++v) {
      Mat fv(n.dims[v], m.dims[v]);
      for (int i = 0; i < n.dims[v]; ++i)
        for (int j = 0; j < m.dims[v]; ++j)
          fv.set(i, j, basis.at(offset[v] + i * m.dims[v] + j, b));
      f[v] = fv;
    }
    out.push_back(std::move(f));
  }
  return out;
}

RepMap rep_map_compose(const Field& F, const RepMap& g, const RepMap& f) {
  RepMap r(f.size());
  for (size_t v = 0; v < f.size(); ++v) r[v] = mat_mul(F, g[v], f[v]);
  return r;
}

bool rep_map_is_iso(const Field& F, const RepMap& f) {
  for (const Mat& fv : f) {
    if (fv.rows() != fv.cols()) return false;
    if (rank(F, fv) != fv.rows()) return false;
  }
  return true;
}

namespace {

// Path order of the vertices: walk from the endpoint with the smaller id.
void path_order(const Quiver& q, std::vector<int>& pos, std::vector<int>& vert) {
  std::vector<std::vector<int>> nbr(q.n);
  for (auto [s, t] : q.arrows) {
    nbr[s].push_back(t);
    nbr[t].push_back(s);
  }
  int start = 0;
  for (int v = 0; v < q.n; ++v)
    if (nbr[v].size() <= 1) { start = v; break; }
  vert.clear();
  pos.assign(q.n, -1);
  int prev = -1, cur = start;
  for (int i = 0; i < q.n; ++i) {
    vert.push_back(cur);
    pos[cur] = i;
    int next = -1;
    for (int w : nbr[cur])
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }
}

}  // namespace

Catalog::Catalog(const Quiver& q, const Field& F) : quiver_(q), field_(F) {
  quiver_.validate();
  path_order(quiver_, pos_, vert_);

  for (int a = 0; a < quiver_.n; ++a)
    for (int b = a; b < quiver_.n; ++b) {
      intervals_.emplace_back(a, b);
      Rep r;
      r.dims.assign(quiver_.n, 0);
      for (int p = a; p <= b; ++p) r.dims[vert_[p]] = 1;
      for (auto [s, t] : quiver_.arrows) {
        Mat m(r.dims[t], r.dims[s]);
        if (r.dims[s] == 1 && r.dims[t] == 1) m.set(0, 0, 1);
        r.mats.push_back(m);
      }
      reps_.push_back(std::move(r));
    }

  int k = size();
  hom_dim_.assign(k, std::vector<int>(k, 0));
  hom_basis_.assign(k, std::vector<std::vector<RepMap>>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      hom_basis_[i][j] = hom_space(field_, quiver_, reps_[i], reps_[j]);
      hom_dim_[i][j] = int(hom_basis_[i][j].size());
    }

  // P_v is supported on the vertices reachable from v along arrows; for a
  // type-A path this is an interval of positions.
  proj_id_.assign(quiver_.n, -1);
  proj_vertex_.assign(k, -1);
  for (int v = 0; v < quiver_.n; ++v) {
    std::vector<bool> reach(quiver_.n, false);
    std::vector<int> stack{v};
    reach[v] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [s, t] : quiver_.arrows)
        if (s == u && !reach[t]) {
          reach[t] = true;
          stack.push_back(t);
        }
    }
    int lo = quiver_.n, hi = -1;
    int count = 0;
    for (int u = 0; u < quiver_.n; ++u)
      if (reach[u]) {
        lo = std::min(lo, pos_[u]);
        hi = std::max(hi, pos_[u]);
        ++count;
      }
    if (count != hi - lo + 1)
      throw std::logic_error("projective support is not an interval");
    for (int id = 0; id < k; ++id)
      if (intervals_[id] == std::make_pair(lo, hi)) {
        proj_id_[v] = id;
        proj_vertex_[id] = v;
      }
  }
}

int Catalog::ext1_dim(int m, int n) const {
  long long e =
      hom_dim_[m][n] - euler_form(quiver_, reps_[m].dims, reps_[n].dims);
  if (e < 0) throw std::logic_error("negative Ext dimension: broken invariant");
  return int(e);
}

std::string Catalog::name(int id) const {
  auto [a, b] = intervals_[id];
  std::string s = "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
  if (a == b) s += "=S" + std::to_string(vert_[a] + 1);
  if (proj_vertex_[id] >= 0) s += "=P" + std::to_string(proj_vertex_[id] + 1);
  return s;
}

std::vector<std::vector<int>> Catalog::subrep_position_sets(int id) const {
  auto [a, b] = intervals_[id];
  int len = b - a + 1;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::vector<bool> in(len, false);
    for (int i = 0; i < len; ++i) in[i] = (mask >> i) & 1u;
    bool closed = true;
    for (auto [s, t] : quiver_.arrows) {
      int ps = pos_[s], pt = pos_[t];
      if (ps < a || ps > b || pt < a || pt > b) continue;
      if (in[ps - a] && !in[pt - a]) { closed = false; break; }
    }
    if (!closed) continue;
    std::vector<int> positions;
    for (int i = 0; i < len; ++i)
      if (in[i]) positions.push_back(a + i);
    out.push_back(std::move(positions));
  }
  return out;
}

Rep Catalog::subrep_on(int id, const std::vector<int>& positions) const {
  Rep r;
  r.dims.assign(quiver_.n, 0);
  for (int p : positions) r.dims[vert_[p]] = 1;
  for (auto [s, t] : quiver_.arrows) {
    Mat m(r.dims[t], r.dims[s]);
    if (r.dims[s] == 1 && r.dims[t] == 1) m.set(0, 0, 1);
    r.mats.push_back(m);
  }
  (void)id;
  return r;
}

Rep Catalog::quotient_by(int id, const std::vector<int>& positions) const {
  auto [a, b] = intervals_[id];
  std::vector<bool> removed(quiver_.n, false);
  for (int p : positions) removed[vert_[p]] = true;
  Rep r;
  r.dims.assign(quiver_.n, 0);
  for (int p = a; p <= b; ++p)
    if (!removed[vert_[p]]) r.dims[vert_[p]] = 1;
  for (auto [s, t] : quiver_.arrows) {
    Mat m(r.dims[t], r.dims[s]);
    if (r.dims[s] == 1 && r.dims[t] == 1) m.set(0, 0, 1);
    r.mats.push_back(m);
  }
  return r;
}

std::vector<int> Catalog::quotient_closure(const std::vector<int>& ids) const {
  std::set<int> out(ids.begin(), ids.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(out.begin(), out.end());
    for (int id : cur)
      for (const auto& positions : subrep_position_sets(id)) {
        Rep quo = quotient_by(id, positions);
        for (int part : decompose(quo))
          if (out.insert(part).second) grew = true;
      }
  }
  return std::vector<int>(out.begin(), out.end());
}

namespace {

// Exact rational Gaussian elimination for the small fingerprint systems.
struct Frac {
  long long num = 0, den = 1;
};

long long gcdll(long long a, long long b) {
  while (b) { long long t = a % b; a = b; b = t; }
  return a < 0 ? -a : a;
}

Frac reduce(long long n, long long d) {
  if (d < 0) { n = -n; d = -d; }
  long long g = gcdll(n < 0 ? -n : n, d);
  if (g == 0) return {0, 1};
  return {n / g, d / g};
}

Frac f_sub(Frac a, Frac b) {
  return reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}
Frac f_mul(Frac a, Frac b) { return reduce(a.num * b.num, a.den * b.den); }
Frac f_div(Frac a, Frac b) { return reduce(a.num * b.den, a.den * b.num); }

}  // namespace

std::vector<int> Catalog::decompose(const Rep& m) const {
  int k = size();
  std::vector<long long> fp(k);
  for (int i = 0; i < k; ++i)
    fp[i] = (long long)hom_space(field_, quiver_, reps_[i], m).size();

  // Solve G x = fp where G[i][j] = dim Hom(cat_i, cat_j); G is invertible in
  // a representation-finite category, so the fingerprint determines the
  // multiplicities.
  std::vector<std::vector<Frac>> aug(k, std::vector<Frac>(k + 1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = {hom_dim_[i][j], 1};
    aug[i][k] = {fp[i], 1};
  }
  for (int col = 0, row = 0; col < k && row < k; ++col) {
    int pr = -1;
    for (int i = row; i < k; ++i)
      if (aug[i][col].num != 0) { pr = i; break; }
    if (pr < 0) throw std::logic_error("singular fingerprint matrix");
    std::swap(aug[pr], aug[row]);
    Frac piv = aug[row][col];
    for (int j = col; j <= k; ++j) aug[row][j] = f_div(aug[row][j], piv);
    for (int i = 0; i < k; ++i) {
      if (i == row || aug[i][col].num == 0) continue;
      Frac f = aug[i][col];
      for (int j = col; j <= k; ++j)
        aug[i][j] = f_sub(aug[i][j], f_mul(f, aug[row][j]));
    }
    ++row;
  }
  std::vector<int> out;
  std::vector<long long> mult(k);
  for (int i = 0; i < k; ++i) {
    Frac x = aug[i][k];
    if (x.den != 1 || x.num < 0)
      throw std::logic_error("fingerprint mismatch: not a representation");
    mult[i] = x.num;
  }
  // Cross-check: multiplicities must reproduce both fingerprint and dims.
  for (int i = 0; i < k; ++i) {
    long long s = 0;
    for (int j = 0; j < k; ++j) s += mult[j] * hom_dim_[i][j];
    if (s != fp[i]) throw std::logic_error("fingerprint mismatch");
  }
  for (int v = 0; v < quiver_.n; ++v) {
    long long s = 0;
    for (int j = 0; j < k; ++j) s += mult[j] * reps_[j].dims[v];
    if (s != m.dims[v]) throw std::logic_error("fingerprint mismatch: dims");
  }
  for (int j = 0; j < k; ++j)
    for (long long c = 0; c < mult[j]; ++c) out.push_back(j);
  return out;
}

}  // namespace cotlab
