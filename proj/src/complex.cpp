#include "cotlab/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cotlab {

Rep Complex::term_at(const Quiver& q, int d) const {
  if (d < min_deg || d > max_deg()) return zero_rep(q);
  return terms[d - min_deg];
}

Mat Complex::diff_at(const Quiver& q, int d, int v) const {
  Rep src = term_at(q, d), tgt = term_at(q, d + 1);
  if (d >= min_deg && d < max_deg()) return diffs[d - min_deg][v];
  return Mat(tgt.dims[v], src.dims[v]);
}

Mat ChainMap::comp_at(const Quiver& q, int d, int v) const {
  Rep src = x->term_at(q, d), tgt = y->term_at(q, d);
  if (d >= min_deg && d < min_deg + int(comps.size())) return comps[d - min_deg][v];
  return Mat(tgt.dims[v], src.dims[v]);
}

void DerivedEngine::validate(const Complex& x) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();
  for (size_t k = 0; k < x.diffs.size(); ++k) {
    // Differential is a rep map.
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      Mat lhs = mat_mul(F, x.diffs[k][t], x.terms[k].mats[a]);
      Mat rhs = mat_mul(F, x.terms[k + 1].mats[a], x.diffs[k][s]);
      if (!(lhs == rhs)) throw std::logic_error("differential not a rep map");
    }
    // d * d = 0.
    if (k + 1 < x.diffs.size())
      for (int v = 0; v < q.n; ++v)
        if (!mat_mul(F, x.diffs[k + 1][v], x.diffs[k][v]).is_zero())
          throw std::logic_error("d*d != 0");
  }
}

namespace {

// Selects hom-basis combinations P_v -> m whose degree-v components extend
// the radical to cover the top of m at v.
struct CoverPiece {
  int vertex;
  RepMap map;  // P_vertex -> m
};

}  // namespace

Complex DerivedEngine::proj_resolution(const Rep& m) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();

  if (m.is_zero()) {
    Complex c;
    c.min_deg = 0;
    return c;
  }

  // Radical subspace at each vertex: sum of arrow images.
  std::vector<Mat> rad(q.n);
  for (int v = 0; v < q.n; ++v) rad[v] = Mat(m.dims[v], 0);
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    (void)s;
    rad[t] = hstack(rad[t], m.mats[a]);
  }

  // Projective cover: for each vertex, pick hom-basis maps P_v -> m whose
  // images at v extend the radical.
  std::vector<CoverPiece> pieces;
  for (int v = 0; v < q.n; ++v) {
    int top_dim = m.dims[v] - rank(F, rad[v]);
    if (top_dim == 0) continue;
    auto basis = cat_.hom_basis(cat_.projective_id(v), cat_.projective_id(v));
    auto homs = hom_space(F, q, cat_.rep(cat_.projective_id(v)), m);
    (void)basis;
    Mat chosen = column_space(F, rad[v]);
    for (const RepMap& g : homs) {
      if (top_dim == 0) break;
      // g_v: column vector (P_v has dimension 1 at v).
      Mat gv = g[v];
      Mat ext = hstack(chosen, gv);
      if (rank(F, ext) > rank(F, chosen)) {
        chosen = ext;
        pieces.push_back({v, g});
        --top_dim;
      }
    }
    if (top_dim != 0) throw std::logic_error("projective cover construction failed");
  }

  std::vector<Rep> cover_parts;
  std::vector<int> cover_ids;
  for (const auto& p : pieces) {
    cover_parts.push_back(cat_.rep(cat_.projective_id(p.vertex)));
    cover_ids.push_back(cat_.projective_id(p.vertex));
  }
  Rep p0 = cotlab::direct_sum(q, cover_parts);

  // Cover map c: P0 -> m, assembled column-block-wise.
  RepMap cover(q.n);
  for (int v = 0; v < q.n; ++v) {
    Mat cv(m.dims[v], p0.dims[v]);
    int off = 0;
    for (const auto& p : pieces) {
      const Rep& pr = cat_.rep(cat_.projective_id(p.vertex));
      for (int i = 0; i < m.dims[v]; ++i)
        for (int j = 0; j < pr.dims[v]; ++j) cv.set(i, off + j, p.map[v].at(i, j));
      off += pr.dims[v];
    }
    cover[v] = cv;
  }
  for (int v = 0; v < q.n; ++v)
    if (rank(F, cover[v]) != m.dims[v])
      throw std::logic_error("projective cover not surjective");

  // Kernel of the cover, as an honest representation.
  std::vector<Mat> kbasis(q.n);
  Rep ker;
  ker.dims.assign(q.n, 0);
  for (int v = 0; v < q.n; ++v) {
    kbasis[v] = nullspace(F, cover[v]);
    ker.dims[v] = kbasis[v].cols();
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    Mat img = mat_mul(F, p0.mats[a], kbasis[s]);
    Mat coords;
    if (!solve(F, kbasis[t], img, coords))
      throw std::logic_error("kernel not arrow-stable");
    ker.mats.push_back(coords);
  }

  if (ker.is_zero()) {
    Complex c;
    c.min_deg = 0;
    c.terms = {m};
    c.proj_ids = {cover_ids};
    return c;
  }

  std::vector<int> kparts = cat_.decompose(ker);
  for (int id : kparts)
    if (!cat_.is_projective(id))
      throw std::logic_error("kernel of cover not projective");
  std::vector<Rep> kreps;
  for (int id : kparts) kreps.push_back(cat_.rep(id));
  Rep p1 = cotlab::direct_sum(q, kreps);

  // Isomorphism p1 -> ker: search coefficient combinations of the hom basis.
  auto iso_basis = hom_space(F, q, p1, ker);
  int nb = int(iso_basis.size());
  unsigned p = F.order();
  unsigned long long total = 1;
  for (int i = 0; i < nb; ++i) total *= p;
  RepMap iso;
  bool found = false;
  for (unsigned long long code = 1; code < total && !found; ++code) {
    RepMap cand(q.n);
    for (int v = 0; v < q.n; ++v) cand[v] = Mat(ker.dims[v], p1.dims[v]);
    unsigned long long c = code;
    for (int i = 0; i < nb; ++i, c /= p) {
      std::uint8_t coef = std::uint8_t(c % p);
      if (!coef) continue;
      for (int v = 0; v < q.n; ++v)
        cand[v] = mat_add(F, cand[v], mat_scale(F, coef, iso_basis[i][v]));
    }
    if (rep_map_is_iso(F, cand)) {
      iso = cand;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no isomorphism onto cover kernel");

  // Differential p1 -> p0: kernel inclusion composed with the isomorphism.
  RepMap diff(q.n);
  for (int v = 0; v < q.n; ++v) diff[v] = mat_mul(F, kbasis[v], iso[v]);

  Complex c;
  c.min_deg = -1;
  c.terms = {p1, p0};
  c.diffs = {diff};
  c.proj_ids = {kparts, cover_ids};
  return c;
}

Complex DerivedEngine::realization(int id, int shift_by) const {
  // The presentation is computed once per module; homology in degree -s
  // corresponds to shift s.
  Complex base = proj_resolution(cat_.rep(id));
  // A non-projective module stalk term must itself be replaced by the top
  // projective in degree 0: proj_resolution already yields projective terms
  // except the one-term case, which is only hit for projective modules.
  return shift(base, shift_by);
}

Complex DerivedEngine::shift(const Complex& x, int k) const {
  const Field& F = cat_.field();
  Complex r = x;
  r.min_deg = x.min_deg - k;
  if (k % 2 != 0)
    for (auto& d : r.diffs)
      for (auto& m : d) m = mat_neg(F, m);
  return r;
}

Complex DerivedEngine::direct_sum(
    const std::vector<Complex>& parts,
    std::vector<std::vector<int>>* row_offsets) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts)
    if (!p.empty()) {
      if (!any) { lo = p.min_deg; hi = p.max_deg(); any = true; }
      lo = std::min(lo, p.min_deg);
      hi = std::max(hi, p.max_deg());
    }
  Complex r;
  if (!any) return r;
  r.min_deg = lo;
  if (row_offsets) row_offsets->assign(parts.size(), std::vector<int>(hi - lo + 1, 0));
  for (int d = lo; d <= hi; ++d) {
    Rep term = zero_rep(q);
    std::vector<int> ids;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (row_offsets) (*row_offsets)[i][d - lo] = term.total_dim();
      Rep pterm = parts[i].term_at(q, d);
      term = cotlab::direct_sum(q, term, pterm);
      if (d >= parts[i].min_deg && d <= parts[i].max_deg() &&
          !parts[i].proj_ids.empty()) {
        const auto& pid = parts[i].proj_ids[d - parts[i].min_deg];
        ids.insert(ids.end(), pid.begin(), pid.end());
      }
    }
    r.terms.push_back(term);
    r.proj_ids.push_back(ids);
  }
  for (int d = lo; d < hi; ++d) {
    RepMap dm(q.n);
    for (int v = 0; v < q.n; ++v) {
      Mat full(r.terms[d - lo + 1].dims[v], r.terms[d - lo].dims[v]);
      int roff = 0, coff = 0;
      for (const auto& part : parts) {
        Rep src = part.term_at(q, d), tgt = part.term_at(q, d + 1);
        Mat blk = part.diff_at(q, d, v);
        for (int i = 0; i < tgt.dims[v]; ++i)
          for (int j = 0; j < src.dims[v]; ++j)
            full.set(roff + i, coff + j, blk.at(i, j));
        roff += tgt.dims[v];
        coff += src.dims[v];
      }
      dm[v] = full;
    }
    r.diffs.push_back(dm);
  }
  (void)F;
  return r;
}

DerivedEngine::HomK DerivedEngine::hom_k(const Complex& x, const Complex& y) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();

  int lo = std::min(x.min_deg, y.min_deg);
  int hi = std::max(x.empty() ? lo : x.max_deg(), y.empty() ? lo : y.max_deg());

  // Coordinates for candidate components f^d_v, degree-major then vertex.
  HomK result;
  std::vector<int> offsets;
  int nvar = 0;
  for (int d = lo; d <= hi; ++d)
    for (int v = 0; v < q.n; ++v) {
      offsets.push_back(nvar);
      nvar += y.term_at(q, d).dims[v] * x.term_at(q, d).dims[v];
    }
  result.var_offsets = offsets;

  auto var = [&](int d, int v, int row, int col) {
    int idx = (d - lo) * q.n + v;
    int xc = x.term_at(q, d).dims[v];
    return offsets[idx] + row * xc + col;
  };

  std::vector<std::vector<std::uint8_t>> rows;
  auto add_row = [&](std::vector<std::pair<int, std::uint8_t>> entries) {
    std::vector<std::uint8_t> r(nvar, 0);
    bool nz = false;
    for (auto [c, coef] : entries) {
      r[c] = F.add(r[c], coef);
    }
    for (auto vv : r) nz = nz || vv;
    if (nz) rows.push_back(std::move(r));
  };

  // Rep-map constraints per degree: f_t x_a = y_a f_s.
  for (int d = lo; d <= hi; ++d) {
    Rep xt = x.term_at(q, d), yt = y.term_at(q, d);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      Mat xa = xt.mats[a], ya = yt.mats[a];
      for (int i = 0; i < yt.dims[t]; ++i)
        for (int j = 0; j < xt.dims[s]; ++j) {
          std::vector<std::pair<int, std::uint8_t>> entries;
          for (int k = 0; k < xt.dims[t]; ++k)
            if (xa.at(k, j)) entries.push_back({var(d, t, i, k), xa.at(k, j)});
          for (int k = 0; k < yt.dims[s]; ++k)
            if (ya.at(i, k)) entries.push_back({var(d, s, k, j), F.neg(ya.at(i, k))});
          add_row(std::move(entries));
        }
    }
  }
  // Differential constraints: d_y f^d = f^{d+1} d_x.
  for (int d = lo; d < hi; ++d)
    for (int v = 0; v < q.n; ++v) {
      Mat dx = x.diff_at(q, d, v), dy = y.diff_at(q, d, v);
      int rows_c = y.term_at(q, d + 1).dims[v];
      int cols_c = x.term_at(q, d).dims[v];
      for (int i = 0; i < rows_c; ++i)
        for (int j = 0; j < cols_c; ++j) {
          std::vector<std::pair<int, std::uint8_t>> entries;
          for (int k = 0; k < y.term_at(q, d).dims[v]; ++k)
            if (dy.at(i, k)) entries.push_back({var(d, v, k, j), dy.at(i, k)});
          for (int k = 0; k < x.term_at(q, d + 1).dims[v]; ++k)
            if (dx.at(k, j))
              entries.push_back({var(d + 1, v, i, k), F.neg(dx.at(k, j))});
          add_row(std::move(entries));
        }
    }

  Mat sys(int(rows.size()), nvar);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nvar; ++j) sys.set(int(i), j, rows[i][j]);
  result.chain_basis = nullspace(F, sys);

  // Homotopies h^d: x^d -> y^{d-1}, rep maps; boundaries dy h + h dx.
  std::vector<int> hoffsets;
  int hvar = 0;
  for (int d = lo; d <= hi + 1; ++d)
    for (int v = 0; v < q.n; ++v) {
      hoffsets.push_back(hvar);
      hvar += y.term_at(q, d - 1).dims[v] * x.term_at(q, d).dims[v];
    }
  auto hvarf = [&](int d, int v, int row, int col) {
    int idx = (d - lo) * q.n + v;
    int xc = x.term_at(q, d).dims[v];
    return hoffsets[idx] + row * xc + col;
  };
  std::vector<std::vector<std::uint8_t>> hrows;
  for (int d = lo; d <= hi + 1; ++d) {
    Rep xt = x.term_at(q, d), yt = y.term_at(q, d - 1);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      Mat xa = xt.mats[a], ya = yt.mats[a];
      for (int i = 0; i < yt.dims[t]; ++i)
        for (int j = 0; j < xt.dims[s]; ++j) {
          std::vector<std::uint8_t> r(hvar, 0);
          bool nz = false;
          for (int k = 0; k < xt.dims[t]; ++k)
            if (xa.at(k, j)) { int c = hvarf(d, t, i, k); r[c] = F.add(r[c], xa.at(k, j)); }
          for (int k = 0; k < yt.dims[s]; ++k)
            if (ya.at(i, k)) { int c = hvarf(d, s, k, j); r[c] = F.sub(r[c], ya.at(i, k)); }
          for (auto vv : r) nz = nz || vv;
          if (nz) hrows.push_back(std::move(r));
        }
    }
  }
  Mat hsys(int(hrows.size()), hvar);
  for (size_t i = 0; i < hrows.size(); ++i)
    for (int j = 0; j < hvar; ++j) hsys.set(int(i), j, hrows[i][j]);
  Mat hbasis = nullspace(F, hsys);

  Mat boundaries(nvar, hbasis.cols());
  for (int b = 0; b < hbasis.cols(); ++b) {
    // boundary^d = d_y^{d-1} h^d + h^{d+1} d_x^d.
    for (int d = lo; d <= hi; ++d)
      for (int v = 0; v < q.n; ++v) {
        int yr = y.term_at(q, d).dims[v], xc = x.term_at(q, d).dims[v];
        if (yr == 0 || xc == 0) continue;
        Mat hd(y.term_at(q, d - 1).dims[v], xc);
        for (int i = 0; i < hd.rows(); ++i)
          for (int j = 0; j < hd.cols(); ++j)
            hd.set(i, j, hbasis.at(hvarf(d, v, i, j), b));
        Mat hd1(yr, x.term_at(q, d + 1).dims[v]);
        for (int i = 0; i < hd1.rows(); ++i)
          for (int j = 0; j < hd1.cols(); ++j)
            hd1.set(i, j, hbasis.at(hvarf(d + 1, v, i, j), b));
        Mat val = mat_add(F, mat_mul(F, y.diff_at(q, d - 1, v), hd),
                          mat_mul(F, hd1, x.diff_at(q, d, v)));
        for (int i = 0; i < yr; ++i)
          for (int j = 0; j < xc; ++j)
            boundaries.set(var(d, v, i, j), b, val.at(i, j));
      }
  }
  result.boundary_basis = column_space(F, boundaries);
  result.dim = result.chain_basis.cols() - result.boundary_basis.cols();
  return result;
}

ChainMap DerivedEngine::chain_map_from_coords(const Complex& x, const Complex& y,
                                              const Mat& column) const {
  const Quiver& q = cat_.quiver();
  int lo = std::min(x.min_deg, y.min_deg);
  int hi = std::max(x.empty() ? lo : x.max_deg(), y.empty() ? lo : y.max_deg());
  ChainMap f;
  f.x = &x;
  f.y = &y;
  f.min_deg = lo;
  int pos = 0;
  for (int d = lo; d <= hi; ++d) {
    RepMap comp(q.n);
    for (int v = 0; v < q.n; ++v) {
      int yr = y.term_at(q, d).dims[v], xc = x.term_at(q, d).dims[v];
      Mat m(yr, xc);
      for (int i = 0; i < yr; ++i)
        for (int j = 0; j < xc; ++j) m.set(i, j, column.at(pos + i * xc + j, 0));
      pos += yr * xc;
      comp[v] = m;
    }
    f.comps.push_back(comp);
  }
  return f;
}

Mat DerivedEngine::coords_from_chain_map(const ChainMap& f) const {
  const Quiver& q = cat_.quiver();
  const Complex &x = *f.x, &y = *f.y;
  int lo = std::min(x.min_deg, y.min_deg);
  int hi = std::max(x.empty() ? lo : x.max_deg(), y.empty() ? lo : y.max_deg());
  int nvar = 0;
  for (int d = lo; d <= hi; ++d)
    for (int v = 0; v < q.n; ++v)
      nvar += y.term_at(q, d).dims[v] * x.term_at(q, d).dims[v];
  Mat col(nvar, 1);
  int pos = 0;
  for (int d = lo; d <= hi; ++d)
    for (int v = 0; v < q.n; ++v) {
      Mat m = f.comp_at(q, d, v);
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) col.set(pos + i * m.cols() + j, 0, m.at(i, j));
      pos += m.rows() * m.cols();
    }
  return col;
}

ChainMap DerivedEngine::compose(const ChainMap& g, const ChainMap& f) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();
  ChainMap r;
  r.x = f.x;
  r.y = g.y;
  int lo = std::min(f.x->min_deg, g.y->min_deg);
  int hi = std::max(f.x->empty() ? lo : f.x->max_deg(),
                    g.y->empty() ? lo : g.y->max_deg());
  r.min_deg = lo;
  for (int d = lo; d <= hi; ++d) {
    RepMap comp(q.n);
    for (int v = 0; v < q.n; ++v)
      comp[v] = mat_mul(F, g.comp_at(q, d, v), f.comp_at(q, d, v));
    r.comps.push_back(comp);
  }
  return r;
}

ChainMap DerivedEngine::zero_map(const Complex& x, const Complex& y) const {
  const Quiver& q = cat_.quiver();
  ChainMap r;
  r.x = &x;
  r.y = &y;
  int lo = std::min(x.min_deg, y.min_deg);
  int hi = std::max(x.empty() ? lo : x.max_deg(), y.empty() ? lo : y.max_deg());
  r.min_deg = lo;
  for (int d = lo; d <= hi; ++d) {
    RepMap comp(q.n);
    for (int v = 0; v < q.n; ++v)
      comp[v] = Mat(y.term_at(q, d).dims[v], x.term_at(q, d).dims[v]);
    r.comps.push_back(comp);
  }
  return r;
}

ChainMap DerivedEngine::shift_map(const ChainMap& f, const Complex& sx,
                                  const Complex& sy, int k) const {
  const Quiver& q = cat_.quiver();
  ChainMap r;
  r.x = &sx;
  r.y = &sy;
  r.min_deg = f.min_deg - k;
  r.comps = f.comps;
  (void)q;
  return r;
}

Complex DerivedEngine::cone(const ChainMap& f) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();
  const Complex &x = *f.x, &y = *f.y;
  int lo = std::min(x.min_deg - 1, y.min_deg);
  int hi = std::max(x.empty() ? lo : x.max_deg() - 1, y.empty() ? lo : y.max_deg());
  Complex c;
  c.min_deg = lo;
  for (int d = lo; d <= hi; ++d) {
    Rep term = cotlab::direct_sum(q, x.term_at(q, d + 1), y.term_at(q, d));
    std::vector<int> ids;
    if (d + 1 >= x.min_deg && !x.empty() && d + 1 <= x.max_deg() && !x.proj_ids.empty()) {
      const auto& p = x.proj_ids[d + 1 - x.min_deg];
      ids.insert(ids.end(), p.begin(), p.end());
    }
    if (d >= y.min_deg && !y.empty() && d <= y.max_deg() && !y.proj_ids.empty()) {
      const auto& p = y.proj_ids[d - y.min_deg];
      ids.insert(ids.end(), p.begin(), p.end());
    }
    c.terms.push_back(term);
    c.proj_ids.push_back(ids);
  }
  for (int d = lo; d < hi; ++d) {
    RepMap dm(q.n);
    for (int v = 0; v < q.n; ++v) {
      int xr1 = x.term_at(q, d + 2).dims[v], xr0 = x.term_at(q, d + 1).dims[v];
      int yr1 = y.term_at(q, d + 1).dims[v], yr0 = y.term_at(q, d).dims[v];
      Mat m(xr1 + yr1, xr0 + yr0);
      Mat dx = x.diff_at(q, d + 1, v);
      for (int i = 0; i < xr1; ++i)
        for (int j = 0; j < xr0; ++j) m.set(i, j, F.neg(dx.at(i, j)));
      Mat fc = f.comp_at(q, d + 1, v);
      for (int i = 0; i < yr1; ++i)
        for (int j = 0; j < xr0; ++j) m.set(xr1 + i, j, fc.at(i, j));
      Mat dy = y.diff_at(q, d, v);
      for (int i = 0; i < yr1; ++i)
        for (int j = 0; j < yr0; ++j) m.set(xr1 + i, xr0 + j, dy.at(i, j));
      dm[v] = m;
    }
    c.diffs.push_back(dm);
  }
  return c;
}

ChainMap DerivedEngine::cone_inclusion(const ChainMap& f, const Complex& cone_xy) const {
  const Quiver& q = cat_.quiver();
  const Complex &x = *f.x, &y = *f.y;
  ChainMap r;
  r.x = &y;
  r.y = &cone_xy;
  int lo = std::min(y.min_deg, cone_xy.min_deg);
  int hi = std::max(y.empty() ? lo : y.max_deg(),
                    cone_xy.empty() ? lo : cone_xy.max_deg());
  r.min_deg = lo;
  for (int d = lo; d <= hi; ++d) {
    RepMap comp(q.n);
    for (int v = 0; v < q.n; ++v) {
      int xr = x.term_at(q, d + 1).dims[v];
      int yr = y.term_at(q, d).dims[v];
      Mat m(cone_xy.term_at(q, d).dims[v], yr);
      for (int i = 0; i < yr; ++i) m.set(xr + i, i, 1);
      comp[v] = m;
    }
    r.comps.push_back(comp);
  }
  return r;
}

ChainMap DerivedEngine::cone_projection(const ChainMap& f, const Complex& cone_xy,
                                        const Complex& sigma_x) const {
  const Quiver& q = cat_.quiver();
  const Complex& x = *f.x;
  ChainMap r;
  r.x = &cone_xy;
  r.y = &sigma_x;
  int lo = std::min(cone_xy.min_deg, sigma_x.min_deg);
  int hi = std::max(cone_xy.empty() ? lo : cone_xy.max_deg(),
                    sigma_x.empty() ? lo : sigma_x.max_deg());
  r.min_deg = lo;
  for (int d = lo; d <= hi; ++d) {
    RepMap comp(q.n);
    for (int v = 0; v < q.n; ++v) {
      int xr = x.term_at(q, d + 1).dims[v];
      Mat m(sigma_x.term_at(q, d).dims[v], cone_xy.term_at(q, d).dims[v]);
      for (int i = 0; i < xr && i < m.rows(); ++i) m.set(i, i, 1);
      comp[v] = m;
    }
    r.comps.push_back(comp);
  }
  return r;
}

std::vector<std::pair<int, Rep>> DerivedEngine::homology(const Complex& x) const {
  const Quiver& q = cat_.quiver();
  const Field& F = cat_.field();
  std::vector<std::pair<int, Rep>> out;
  if (x.empty()) return out;
  for (int d = x.min_deg; d <= x.max_deg(); ++d) {
    // Kernel and image bases per vertex.
    std::vector<Mat> kb(q.n), quo(q.n);
    Rep h;
    h.dims.assign(q.n, 0);
    std::vector<Mat> img(q.n);
    for (int v = 0; v < q.n; ++v) {
      kb[v] = nullspace(F, x.diff_at(q, d, v));
      Mat prev = x.diff_at(q, d - 1, v);
      img[v] = column_space(F, prev);
      // Quotient basis: kernel columns extending the image.
      Mat chosen = img[v];
      Mat qcols(kb[v].rows(), 0);
      for (int c = 0; c < kb[v].cols(); ++c) {
        Mat col(kb[v].rows(), 1);
        for (int i = 0; i < kb[v].rows(); ++i) col.set(i, 0, kb[v].at(i, c));
        Mat ext = hstack(chosen, col);
        if (rank(F, ext) > rank(F, chosen)) {
          chosen = ext;
          qcols = hstack(qcols, col);
        }
      }
      quo[v] = qcols;
      h.dims[v] = qcols.cols();
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      Mat arrows_on_quo(h.dims[t], h.dims[s]);
      Rep term = x.term_at(q, d);
      for (int c = 0; c < h.dims[s]; ++c) {
        Mat col(quo[s].rows(), 1);
        for (int i = 0; i < quo[s].rows(); ++i) col.set(i, 0, quo[s].at(i, c));
        Mat mapped = mat_mul(F, term.mats[a], col);
        // Express modulo the image: [img | quo_t] coords, keep the quo part.
        Mat basis = hstack(img[t], quo[t]);
        Mat coords;
        if (!solve(F, basis, mapped, coords))
          throw std::logic_error("homology: induced arrow map escapes kernel");
        for (int i = 0; i < h.dims[t]; ++i)
          arrows_on_quo.set(i, c, coords.at(img[t].cols() + i, 0));
      }
      h.mats.push_back(arrows_on_quo);
    }
    if (!h.is_zero()) out.emplace_back(d, h);
  }
  return out;
}

std::vector<std::pair<int, int>> DerivedEngine::decompose_object(const Complex& x) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [deg, h] : homology(x))
    for (int id : cat_.decompose(h)) out.emplace_back(id, -deg);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cotlab
