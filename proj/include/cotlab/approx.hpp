#ifndef COTLAB_APPROX_HPP
#define COTLAB_APPROX_HPP

#include <string>
#include <vector>

#include "cotlab/subcat.hpp"

namespace cotlab {

// A minimal left add(target)-approximation f: source -> y0 together with the
// decomposition of its cone. In type A all Hom spaces between
// indecomposables are at most one-dimensional, so the approximation target is
// a subset of {t : Hom(source, t) != 0}, each summand with multiplicity one,
// and greedy deletion from the universal map reaches the minimal one.
struct Approximation {
  int source = -1;
  bool valid = false;            // universal map is an approximation
  std::vector<int> targets;      // atoms of y0, sorted
  std::vector<int> cone_atoms;   // atoms of cone(f), sorted
  bool wakamatsu = false;        // Sigma^{-1} cone lies in perp(target)
};

// True if the map with components gamma_{source,j}, j in chosen, is a left
// add(target)-approximation of source.
bool is_left_approximation(const Context& ctx, int source,
                           const std::vector<int>& chosen,
                           const Subcat& target);

Approximation minimal_left_approximation(const Context& ctx, int source,
                                         const Subcat& target);

// Membership test for the star product U * V when Hom(U, V) = 0: then any
// decomposition triangle u -> t -> v has an approximation as its second map,
// so t lies in U * V exactly when the cone of its minimal left
// add(V)-approximation lies in add(Sigma U).
struct SigmaUPredicate {
  // Returns true when the atom (module, shift) lies in Sigma U.
  virtual bool contains(int module_id, int shift) const = 0;
  virtual ~SigmaUPredicate() = default;
};

bool star_member_orthogonal(const Context& ctx, int t, const SigmaUPredicate& sigma_u,
                            const Subcat& v, Approximation* out = nullptr);

}  // namespace cotlab

#endif
