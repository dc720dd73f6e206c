#include "cotlab/extriang.hpp"

#include <algorithm>
#include <stdexcept>

#include "cotlab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cotlab {

int E_dim(const Context& ctx, int c, int a) {
  if (!ctx.in_extended_coheart(c) || !ctx.in_extended_coheart(a))
    throw std::invalid_argument("E: atom outside the extended coheart");
  int sa = ctx.shifted(a, 1);
  if (sa < 0) throw std::out_of_range("E: Sigma target leaves the window");
  return ctx.hom(c, sa);
}

bool is_cotorsion_pair(const Context& ctx, const Subcat& x, const Subcat& y) {
  for (int c : ctx.extended_coheart_atoms()) {
    bool left_orth = true;
    for (int yy : y)
      if (E_dim(ctx, c, yy)) { left_orth = false; break; }
    if (left_orth != subcat_contains(x, c)) return false;
    bool right_orth = true;
    for (int xx : x)
      if (E_dim(ctx, xx, c)) { right_orth = false; break; }
    if (right_orth != subcat_contains(y, c)) return false;
  }
  return true;
}

CompletenessResult is_complete(const Context& ctx, const Subcat& x, const Subcat& y) {
  CompletenessResult out;
  for (int s : ctx.shifted_coheart_atoms())
    if (!subcat_contains(y, s))
      throw VerificationError("completeness check requires Sigma S <= Y");
  out.complete = true;
  for (int s : ctx.coheart_atoms()) {
    Approximation a = minimal_left_approximation(ctx, s, y);
    ++out.wakamatsu_checked;
    if (a.valid && a.wakamatsu) ++out.wakamatsu_passed;
    if (!a.valid) {
      out.complete = false;
      out.witness = ctx.atom_name(s) + " admits no approximation";
      return out;
    }
    for (int idx : a.cone_atoms)
      if (idx < 0 || !subcat_contains(x, idx)) {
        out.complete = false;
        out.witness = ctx.atom_name(s) + " cone escapes X";
        return out;
      }
  }
  return out;
}

Subcat core(const Context& ctx, const CotorsionPair& p) {
  Subcat w = intersect(p.x, p.y);
  if (p.complete) {
    if (int(w.size()) != ctx.quiver().n)
      throw VerificationError("core of a complete pair must have one summand per vertex");
    for (int a : w)
      for (int b : w) {
        const Atom &xa = ctx.atom(a), &xb = ctx.atom(b);
        for (int i = 1; i <= 2; ++i)
          if (ctx.hom_rule(xa.module_id, xa.shift, xb.module_id, xb.shift + i))
            throw VerificationError("core not presilting");
      }
  }
  return w;
}

namespace {

CotorsionPair pair_from_y(const Context& ctx, const Subcat& y, bool& ok) {
  CotorsionPair p;
  p.y = y;
  for (int c : ctx.extended_coheart_atoms()) {
    bool orth = true;
    for (int yy : y)
      if (E_dim(ctx, c, yy)) { orth = false; break; }
    if (orth) p.x.push_back(c);
  }
  ok = is_cotorsion_pair(ctx, p.x, p.y);
  return p;
}

}  // namespace

std::vector<CotorsionPair> enumerate_complete_cotorsion_pairs_serial(const Context& ctx) {
  // Seed on Y, which must contain Sigma S; the free part is the shift-0 slice
  // of C.
  std::vector<int> free_atoms;
  for (int c : ctx.extended_coheart_atoms())
    if (!subcat_contains(Subcat(ctx.shifted_coheart_atoms()), c))
      free_atoms.push_back(c);
  std::vector<CotorsionPair> out;
  for (unsigned long long mask = 0; mask < (1ull << free_atoms.size()); ++mask) {
    Subcat y(ctx.shifted_coheart_atoms().begin(), ctx.shifted_coheart_atoms().end());
    for (size_t i = 0; i < free_atoms.size(); ++i)
      if ((mask >> i) & 1ull) y.push_back(free_atoms[i]);
    y = make_subcat(std::move(y));
    bool ok = false;
    CotorsionPair p = pair_from_y(ctx, y, ok);
    if (!ok) continue;
    CompletenessResult cr = is_complete(ctx, p.x, p.y);
    if (!cr.complete) continue;
    p.complete = true;
    p.core = intersect(p.x, p.y);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CotorsionPair> enumerate_complete_cotorsion_pairs(const Context& ctx) {
  std::vector<int> free_atoms;
  for (int c : ctx.extended_coheart_atoms())
    if (!subcat_contains(Subcat(ctx.shifted_coheart_atoms()), c))
      free_atoms.push_back(c);
  long long total = 1ll << free_atoms.size();
  std::vector<char> keep(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long long mask = 0; mask < total; ++mask) {
    Subcat y(ctx.shifted_coheart_atoms().begin(), ctx.shifted_coheart_atoms().end());
    for (size_t i = 0; i < free_atoms.size(); ++i)
      if ((mask >> i) & 1ll) y.push_back(free_atoms[i]);
    y = make_subcat(std::move(y));
    bool ok = false;
    CotorsionPair p = pair_from_y(ctx, y, ok);
    keep[mask] = (ok && is_complete(ctx, p.x, p.y).complete) ? 1 : 0;
  }
  std::vector<CotorsionPair> out;
  for (long long mask = 0; mask < total; ++mask) {
    if (!keep[mask]) continue;
    Subcat y(ctx.shifted_coheart_atoms().begin(), ctx.shifted_coheart_atoms().end());
    for (size_t i = 0; i < free_atoms.size(); ++i)
      if ((mask >> i) & 1ll) y.push_back(free_atoms[i]);
    y = make_subcat(std::move(y));
    bool ok = false;
    CotorsionPair p = pair_from_y(ctx, y, ok);
    p.complete = true;
    p.core = intersect(p.x, p.y);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ETrianglePair construct_E_triangles(const Context& ctx, const CotorsionPair& p, int c) {
  if (!ctx.in_extended_coheart(c))
    throw std::invalid_argument("construct_E_triangles: object outside C");
  ETrianglePair out;

  // c -> y -> x: split when c already lies in Y.
  if (subcat_contains(p.y, c)) {
    out.to_yx = {{c}, {c}, {}};
  } else {
    Approximation a = minimal_left_approximation(ctx, c, p.y);
    if (!a.valid) throw VerificationError("no left Y-approximation");
    for (int idx : a.cone_atoms)
      if (idx < 0 || !subcat_contains(p.x, idx))
        throw VerificationError("E-triangle cone escapes X");
    out.to_yx = {{c}, a.targets, a.cone_atoms};
  }

  // y' -> x' -> c: zero-extended when c lies in X; otherwise rotate and
  // approximate Sigma^{-1} c, whose cone is the x'-side.
  if (subcat_contains(p.x, c)) {
    out.from_yx = {{}, {c}, {c}};
  } else {
    int sc = ctx.shifted(c, -1);
    if (sc < 0) throw std::out_of_range("Sigma^{-1} c leaves the window");
    Approximation a = minimal_left_approximation(ctx, sc, p.y);
    if (!a.valid) throw VerificationError("no left Y-approximation of Sigma^{-1} c");
    for (int idx : a.cone_atoms)
      if (idx < 0 || !subcat_contains(p.x, idx))
        throw VerificationError("E-triangle side escapes X");
    out.from_yx = {a.targets, a.cone_atoms, {c}};
  }
  return out;
}

}  // namespace cotlab
