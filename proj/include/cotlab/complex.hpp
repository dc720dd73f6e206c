#ifndef COTLAB_COMPLEX_HPP
#define COTLAB_COMPLEX_HPP

#include <vector>

#include "cotlab/rep.hpp"

namespace cotlab {

// A bounded cochain complex of representations, with differentials
// d^i : X^i -> X^{i+1}. terms[k] sits in cohomological degree min_deg + k.
// Sigma shifts one step toward lower degree: (Sigma X)^d = X^{d+1}.
struct Complex {
  int min_deg = 0;
  std::vector<Rep> terms;
  std::vector<RepMap> diffs;                // diffs[k]: terms[k] -> terms[k+1]
  std::vector<std::vector<int>> proj_ids;   // per term, catalog ids (display)

  bool empty() const { return terms.empty(); }
  int max_deg() const { return min_deg + int(terms.size()) - 1; }
  // Term at degree d, or a zero representation outside the stored range.
  Rep term_at(const Quiver& q, int d) const;
  // Differential component at degree d, vertex v, with matching shape.
  Mat diff_at(const Quiver& q, int d, int v) const;
};

// A chain map f: x -> y; comps[k] is the rep map in degree min_deg + k.
struct ChainMap {
  const Complex* x = nullptr;
  const Complex* y = nullptr;
  int min_deg = 0;
  std::vector<RepMap> comps;

  Mat comp_at(const Quiver& q, int d, int v) const;
};

class DerivedEngine {
 public:
  DerivedEngine(const Catalog& cat) : cat_(cat) {}

  const Catalog& catalog() const { return cat_; }

  // Checks shapes, that d*d = 0 and that d is a map of representations.
  void validate(const Complex& x) const;

  // Minimal projective presentation P^{-1} -> P^0 of a representation, with
  // homology concentrated in degree 0. Projective stalks stay one-term.
  Complex proj_resolution(const Rep& m) const;

  // Complex for the interval module `id` placed at shift s (degree -s).
  Complex realization(int id, int shift) const;

  Complex shift(const Complex& x, int k) const;
  Complex direct_sum(const std::vector<Complex>& parts,
                     std::vector<std::vector<int>>* row_offsets = nullptr) const;

  // Basis of chain maps x -> y (commuting with arrows and differentials) and
  // of the null-homotopic ones among them, as coordinate columns.
  struct HomK {
    int dim = 0;              // dim of maps modulo homotopy
    Mat chain_basis;          // columns span all chain maps
    Mat boundary_basis;       // columns span null-homotopic chain maps
    std::vector<int> var_offsets;  // coordinate layout (degree-major)
  };
  HomK hom_k(const Complex& x, const Complex& y) const;

  ChainMap chain_map_from_coords(const Complex& x, const Complex& y,
                                 const Mat& column) const;
  Mat coords_from_chain_map(const ChainMap& f) const;

  ChainMap compose(const ChainMap& g, const ChainMap& f) const;
  ChainMap zero_map(const Complex& x, const Complex& y) const;
  ChainMap shift_map(const ChainMap& f, const Complex& sx, const Complex& sy,
                     int k) const;

  Complex cone(const ChainMap& f) const;
  // The canonical maps y -> cone(f) and cone(f) -> Sigma x; the caller owns
  // the complexes which must outlive the maps.
  ChainMap cone_inclusion(const ChainMap& f, const Complex& cone_xy) const;
  ChainMap cone_projection(const ChainMap& f, const Complex& cone_xy,
                           const Complex& sigma_x) const;

  // Homology in each degree, as honest representations.
  std::vector<std::pair<int, Rep>> homology(const Complex& x) const;

  // Stalk decomposition: pairs (catalog id, shift), shift = -degree, sorted.
  std::vector<std::pair<int, int>> decompose_object(const Complex& x) const;

 private:
  const Catalog& cat_;
};

}  // namespace cotlab

#endif
