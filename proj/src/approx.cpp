#include "cotlab/approx.hpp"

#include <algorithm>

namespace cotlab {

bool is_left_approximation(const Context& ctx, int source,
                           const std::vector<int>& chosen,
                           const Subcat& target) {
  // Every basis map source -> y, y in target, must factor through some
  // component; with one-dimensional Hom spaces this reduces to a nonzero
  // composition constant.
  for (int y : target) {
    if (ctx.hom(source, y) == 0) continue;
    bool factors = false;
    for (int j : chosen) {
      if (ctx.basis_map(source, j) == nullptr) continue;
      if (ctx.hom(j, y) && ctx.compose_const(source, j, y)) {
        factors = true;
        break;
      }
    }
    if (!factors) return false;
  }
  return true;
}

Approximation minimal_left_approximation(const Context& ctx, int source,
                                         const Subcat& target) {
  Approximation out;
  out.source = source;
  std::vector<int> chosen;
  for (int t : target)
    if (ctx.hom(source, t)) chosen.push_back(t);
  out.valid = is_left_approximation(ctx, source, chosen, target);
  if (!out.valid) return out;

  // Greedy deletion; the minimal target is the unique minimal subset that
  // still approximates, so the scan order does not matter.
  for (size_t i = 0; i < chosen.size();) {
    std::vector<int> without = chosen;
    without.erase(without.begin() + i);
    if (is_left_approximation(ctx, source, without, target))
      chosen = std::move(without);
    else
      ++i;
  }
  out.targets = chosen;

  const DerivedEngine& eng = ctx.engine();
  Complex target_complex;
  ChainMap f;
  std::vector<Complex> parts;
  for (int j : chosen) parts.push_back(ctx.realization(j));
  target_complex = eng.direct_sum(parts);
  if (chosen.empty()) {
    f = eng.zero_map(ctx.realization(source), target_complex);
  } else {
    // Stack the canonical basis maps blockwise.
    const Quiver& q = ctx.quiver();
    f.x = &ctx.realization(source);
    f.y = &target_complex;
    int lo = std::min(f.x->min_deg, target_complex.min_deg);
    int hi = std::max(f.x->empty() ? lo : f.x->max_deg(),
                      target_complex.empty() ? lo : target_complex.max_deg());
    f.min_deg = lo;
    for (int d = lo; d <= hi; ++d) {
      RepMap comp(q.n);
      for (int v = 0; v < q.n; ++v) {
        Mat m(target_complex.term_at(q, d).dims[v], f.x->term_at(q, d).dims[v]);
        int roff = 0;
        for (size_t k = 0; k < chosen.size(); ++k) {
          const ChainMap* g = ctx.basis_map(source, chosen[k]);
          Mat block = g->comp_at(q, d, v);
          for (int i = 0; i < block.rows(); ++i)
            for (int jj = 0; jj < block.cols(); ++jj)
              m.set(roff + i, jj, block.at(i, jj));
          roff += ctx.realization(chosen[k]).term_at(q, d).dims[v];
        }
        comp[v] = m;
      }
      f.comps.push_back(comp);
    }
  }
  Complex cone = eng.cone(f);
  auto parts_of_cone = eng.decompose_object(cone);
  std::vector<int> cone_atoms;
  for (auto [id, s] : parts_of_cone)
    cone_atoms.push_back(ctx.atom_index(id, s));  // -1 at the window boundary
  std::sort(cone_atoms.begin(), cone_atoms.end());
  out.cone_atoms = cone_atoms;

  // Wakamatsu: Sigma^{-1} of every cone summand has no maps into the target.
  out.wakamatsu = true;
  for (auto [id, s] : parts_of_cone) {
    for (int t : target) {
      const Atom& ta = ctx.atom(t);
      if (ctx.hom_rule(id, s - 1, ta.module_id, ta.shift)) {
        out.wakamatsu = false;
        break;
      }
    }
    if (!out.wakamatsu) break;
  }
  return out;
}

bool star_member_orthogonal(const Context& ctx, int t, const SigmaUPredicate& sigma_u,
                            const Subcat& v, Approximation* out) {
  Approximation a = minimal_left_approximation(ctx, t, v);
  if (out) *out = a;
  if (!a.valid) return false;
  const DerivedEngine& eng = ctx.engine();
  (void)eng;
  for (int idx : a.cone_atoms) {
    if (idx < 0) return false;
    const Atom& at = ctx.atom(idx);
    if (!sigma_u.contains(at.module_id, at.shift)) return false;
  }
  return true;
}

}  // namespace cotlab
