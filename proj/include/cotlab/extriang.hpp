#ifndef COTLAB_EXTRIANG_HPP
#define COTLAB_EXTRIANG_HPP

#include <string>
#include <vector>

#include "cotlab/approx.hpp"
#include "cotlab/subcat.hpp"

namespace cotlab {

// A cotorsion pair (X, Y) in the extended coheart C, for the bifunctor
// E(c, a) = Hom(c, Sigma a) restricted to C.
struct CotorsionPair {
  Subcat x, y;
  Subcat core;  // x intersect y
  bool complete = false;

  bool operator==(const CotorsionPair& o) const { return x == o.x && y == o.y; }
  bool operator<(const CotorsionPair& o) const {
    return y != o.y ? y < o.y : x < o.x;
  }
};

// dim E(c, a); throws std::invalid_argument when either atom is outside C.
int E_dim(const Context& ctx, int c, int a);

// Both biorthogonality conditions, exhaustively over the atoms of C.
bool is_cotorsion_pair(const Context& ctx, const Subcat& x, const Subcat& y);

struct CompletenessResult {
  bool complete = false;
  int wakamatsu_checked = 0;
  int wakamatsu_passed = 0;
  std::string witness;  // failing coheart object, if any
};

// Completeness criterion: for each s in the coheart there is a triangle
// s -> y -> x -> Sigma s with y in Y, x in X; decided through the minimal
// left add(Y)-approximation of s and its cone. Requires Sigma S <= Y.
CompletenessResult is_complete(const Context& ctx, const Subcat& x, const Subcat& y);

Subcat core(const Context& ctx, const CotorsionPair& p);

std::vector<CotorsionPair> enumerate_complete_cotorsion_pairs_serial(const Context& ctx);
std::vector<CotorsionPair> enumerate_complete_cotorsion_pairs(const Context& ctx);

// The two decomposition E-triangles of c: c -> y -> x and y' -> x' -> c,
// with sides in add(Y)/add(X), produced by minimal approximations of c and
// of Sigma^{-1} c. Throws VerificationError when a side escapes X or Y.
struct ETriangle {
  std::vector<int> left, middle, right;  // atom lists
};
struct ETrianglePair {
  ETriangle to_yx;    // c -> y -> x
  ETriangle from_yx;  // y' -> x' -> c
};
ETrianglePair construct_E_triangles(const Context& ctx, const CotorsionPair& p, int c);

}  // namespace cotlab

#endif
