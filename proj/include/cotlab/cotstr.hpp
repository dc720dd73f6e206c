#ifndef COTLAB_COTSTR_HPP
#define COTLAB_COTSTR_HPP

#include <string>
#include <vector>

#include "cotlab/approx.hpp"
#include "cotlab/subcat.hpp"

namespace cotlab {

// A co-t-structure intermediate with respect to the standard one, encoded by
// its delta set: the aisle is the standard tail together with delta, so
// closure under Sigma^{-1} holds structurally. delta is a sorted subset of
// the universe indec(Sigma A_std) \ indec(A_std).
struct CoTStructure {
  std::vector<int> delta;

  bool operator==(const CoTStructure& o) const { return delta == o.delta; }
  bool operator<(const CoTStructure& o) const {
    if (delta.size() != o.delta.size()) return delta.size() < o.delta.size();
    return delta < o.delta;
  }
};

enum class CotAxiom {
  none,
  shift_closure,
  aisle_extension_closed,
  coaisle_extension_closed,
  orthogonality,
  decomposition,
};

struct CotVerification {
  bool pass = false;
  CotAxiom failed = CotAxiom::none;
  std::string witness;
};

const char* axiom_name(CotAxiom a);

CoTStructure standard_cotstructure(const Context& ctx);

// Aisle membership at any shift (standard tail plus delta).
bool aisle_contains(const Context& ctx, const CoTStructure& c, int module_id,
                    int shift);
// Window part of the aisle / of the right-orthogonal co-aisle.
Subcat aisle_window(const Context& ctx, const CoTStructure& c);
Subcat coaisle_window(const Context& ctx, const CoTStructure& c);

// Axioms, checked on the window interior: Sigma^{-1}-closure, extension
// closure of both halves, orthogonality, and the decomposition axiom. The
// decomposition of t is tested through its minimal left co-aisle
// approximation: t decomposes exactly when the cone lands in Sigma(aisle).
CotVerification verify_cotstructure(const Context& ctx, const CoTStructure& c);

// Sigma A' intersect B'; throws VerificationError unless presilting with one
// indecomposable per vertex.
Subcat coheart(const Context& ctx, const CoTStructure& c);

// Sigma^2 A' intersect B'; throws VerificationError unless it agrees with
// coheart * Sigma coheart.
Subcat extended_coheart(const Context& ctx, const CoTStructure& c);

// Window-level boundedness: every window atom enters some shift of the aisle
// and of the co-aisle.
bool is_bounded(const Context& ctx, const CoTStructure& c);

std::vector<CoTStructure> enumerate_intermediate_serial(const Context& ctx);
std::vector<CoTStructure> enumerate_intermediate(const Context& ctx);

}  // namespace cotlab

#endif
