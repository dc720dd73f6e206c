#include "cotlab/subcat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cotlab {

Subcat make_subcat(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool subcat_contains(const Subcat& s, int idx) {
  return std::binary_search(s.begin(), s.end(), idx);
}

Subcat subcat_union(const Subcat& a, const Subcat& b) {
  Subcat r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subcat intersect(const Subcat& a, const Subcat& b) {
  Subcat r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

bool subcat_subset(const Subcat& a, const Subcat& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Subcat shift_subcat(const Context& ctx, const Subcat& s, int k) {
  Subcat r;
  for (int idx : s) {
    int j = ctx.shifted(idx, k);
    if (j < 0) throw std::out_of_range("shift leaves the window");
    r.push_back(j);
  }
  return make_subcat(std::move(r));
}

Subcat perp_right(const Context& ctx, const Subcat& s) {
  Subcat r;
  for (int a = 0; a < ctx.atom_count(); ++a) {
    bool ok = true;
    for (int b : s)
      if (ctx.hom(b, a)) { ok = false; break; }
    if (ok) r.push_back(a);
  }
  return r;
}

Subcat perp_left(const Context& ctx, const Subcat& s) {
  Subcat r;
  for (int a = 0; a < ctx.atom_count(); ++a) {
    bool ok = true;
    for (int b : s)
      if (ctx.hom(a, b)) { ok = false; break; }
    if (ok) r.push_back(a);
  }
  return r;
}

namespace {

// Multisets over `pool` of total size <= cap, as sorted index lists.
void multisets(const std::vector<int>& pool, int cap, std::vector<int>& cur,
               size_t from, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (int(cur.size()) >= cap) return;
  for (size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    multisets(pool, cap, cur, i, out);
    cur.pop_back();
  }
}

}  // namespace

Subcat star(const Context& ctx, const Subcat& x, const Subcat& y, int cap) {
  const DerivedEngine& eng = ctx.engine();
  const Field& F = ctx.field();
  for (int idx : x)
    if (ctx.shifted(idx, 1) < 0)
      throw std::out_of_range("star: Sigma(first argument) leaves the window");

  std::vector<std::vector<int>> xs, ys;
  std::vector<int> cur;
  multisets(x, cap, cur, 0, xs);
  multisets(y, cap, cur, 0, ys);

  std::set<int> result;
  for (const auto& xm : xs)
    for (const auto& ym : ys) {
      if (xm.empty() && ym.empty()) continue;
      if (xm.empty()) {
        for (int i : ym) result.insert(i);
        continue;
      }
      if (ym.empty()) {
        for (int i : xm) result.insert(i);
        continue;
      }
      std::vector<Complex> xparts, yparts;
      for (int i : xm) xparts.push_back(eng.shift(ctx.realization(i), 1));
      for (int i : ym) yparts.push_back(ctx.realization(i));
      Complex sx = eng.direct_sum(xparts);
      Complex ysum = eng.direct_sum(yparts);
      auto hk = eng.hom_k(ysum, sx);
      // Every connecting class: run over all coordinates of the space of
      // chain maps modulo homotopy (homotopic classes give isomorphic cones).
      int dim = hk.chain_basis.cols() - hk.boundary_basis.cols();
      std::vector<Mat> reps;
      {
        Mat kept(hk.chain_basis.rows(), 0);
        for (int c = 0; c < hk.chain_basis.cols() && kept.cols() < dim; ++c) {
          Mat col(hk.chain_basis.rows(), 1);
          for (int r = 0; r < hk.chain_basis.rows(); ++r)
            col.set(r, 0, hk.chain_basis.at(r, c));
          if (in_column_span(F, hstack(hk.boundary_basis, kept), col)) continue;
          kept = hstack(kept, col);
          reps.push_back(col);
        }
      }
      unsigned p = F.order();
      unsigned long long total = 1;
      for (int i = 0; i < dim; ++i) total *= p;
      for (unsigned long long code = 0; code < total; ++code) {
        Mat eps(reps.empty() ? 0 : reps[0].rows(), 1);
        unsigned long long c = code;
        bool zero = true;
        for (int i = 0; i < dim; ++i, c /= p) {
          std::uint8_t coef = std::uint8_t(c % p);
          if (!coef) continue;
          zero = false;
          eps = mat_add(F, eps, mat_scale(F, coef, reps[i]));
        }
        if (zero) {
          for (int i : xm) result.insert(i);
          for (int i : ym) result.insert(i);
          continue;
        }
        ChainMap f = eng.chain_map_from_coords(ysum, sx, eps);
        Complex cone = eng.cone(f);
        for (auto [id, s] : eng.decompose_object(cone)) {
          int idx = ctx.atom_index(id, s - 1);
          if (idx < 0) throw std::out_of_range("star: middle term leaves the window");
          result.insert(idx);
        }
      }
    }
  return Subcat(result.begin(), result.end());
}

Subcat extension_closure(const Context& ctx, const Subcat& s) {
  std::set<int> cur(s.begin(), s.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> snapshot(cur.begin(), cur.end());
    for (int a : snapshot)
      for (int b : snapshot)
        for (int m : ctx.pair_middles(a, b))
          if (cur.insert(m).second) grew = true;
  }
  return Subcat(cur.begin(), cur.end());
}

}  // namespace cotlab
