#ifndef COTLAB_YONEDA_HPP
#define COTLAB_YONEDA_HPP

#include <string>
#include <vector>

#include "cotlab/approx.hpp"
#include "cotlab/subcat.hpp"

namespace cotlab {

// The restricted Yoneda image of an atom of C: Hom(P_-@0, c) as a module.
// Modules at shift 0 map to themselves, shifted projectives to zero; other
// atoms are rejected.
Rep restricted_yoneda(const Context& ctx, int atom_idx);

// Image of a basis map of C under the functor: a module map, zero whenever
// either end is a shifted projective.
RepMap restricted_yoneda_hom(const Context& ctx, int from_atom, int to_atom);

// A torsion pair in mod S, stored as sets of module ids.
struct TorsionPair {
  std::vector<int> t, f;
  bool functorially_finite = false;

  bool operator==(const TorsionPair& o) const { return t == o.t && f == o.f; }
  bool operator<(const TorsionPair& o) const { return t < o.t; }
};

// Torsion class test: closed under quotients and under extensions (module
// extensions are the shift-0 slice of the derived middle-term table).
bool is_torsion_class(const Context& ctx, const std::vector<int>& tset,
                      std::string* witness = nullptr);

// Right Hom-orthogonal inside mod S.
std::vector<int> module_perp_right(const Context& ctx, const std::vector<int>& tset);
std::vector<int> module_perp_left(const Context& ctx, const std::vector<int>& fset);

// Every module admits a left add(T)-approximation; representation-finiteness
// makes this hold, but it is verified rather than assumed.
bool is_functorially_finite(const Context& ctx, const TorsionPair& tp);

// Existence (and maximality) of 0 -> t(m) -> m -> m/t(m) -> 0 for every
// catalog module, by explicit submodule search.
bool canonical_sequences_ok(const Context& ctx, const TorsionPair& tp,
                            std::string* witness = nullptr);

std::vector<TorsionPair> enumerate_torsion_pairs_serial(const Context& ctx);
std::vector<TorsionPair> enumerate_torsion_pairs(const Context& ctx);

}  // namespace cotlab

#endif
