#ifndef COTLAB_SUBCAT_HPP
#define COTLAB_SUBCAT_HPP

#include <vector>

#include "cotlab/context.hpp"

namespace cotlab {

// A summand-closed windowed subcategory: a sorted set of window atom indices.
// Members are indecomposable, so summand closure is automatic.
using Subcat = std::vector<int>;

Subcat make_subcat(std::vector<int> ids);
bool subcat_contains(const Subcat& s, int idx);
Subcat subcat_union(const Subcat& a, const Subcat& b);
Subcat intersect(const Subcat& a, const Subcat& b);
bool subcat_subset(const Subcat& a, const Subcat& b);
// Sigma^k applied memberwise; throws on window overflow.
Subcat shift_subcat(const Context& ctx, const Subcat& s, int k);

// {a in window : Hom(b, a) = 0 for all b in s}.
Subcat perp_right(const Context& ctx, const Subcat& s);
// {a in window : Hom(a, b) = 0 for all b in s}.
Subcat perp_left(const Context& ctx, const Subcat& s);

// All indecomposable summands of middle terms of triangles x -> e -> y with
// x in add(X), y in add(Y), enumerated over endpoint multisets of total size
// at most `cap` per side and all connecting classes. Throws on window
// overflow of the endpoints.
Subcat star(const Context& ctx, const Subcat& x, const Subcat& y, int cap = 2);

// Least fixed point of s -> star(s, s), computed by closing under the
// middle terms of triangles between pairs of members; pairs generate the
// full extension closure because endpoint sums refine along split triangles.
Subcat extension_closure(const Context& ctx, const Subcat& s);

}  // namespace cotlab

#endif
