#ifndef COTLAB_CONTEXT_HPP
#define COTLAB_CONTEXT_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cotlab/complex.hpp"
#include "cotlab/rep.hpp"

namespace cotlab {

// An object Sigma^shift(module) of the derived category.
struct Atom {
  int module_id;
  int shift;
  bool operator==(const Atom& o) const {
    return module_id == o.module_id && shift == o.shift;
  }
  bool operator<(const Atom& o) const {
    return shift != o.shift ? shift < o.shift : module_id < o.module_id;
  }
};

struct FaultSpec {
  bool enabled = false;
  // Window atom indices whose Hom entry gets flipped 0 <-> 1.
  int from_module = 0, from_shift = 0, to_module = 1, to_shift = 0;
};

// Precomputed world for one quiver, field and shift window. Everything is
// immutable after construction, so all queries are safe to run from parallel
// enumeration loops.
class Context {
 public:
  Context(const Quiver& q, const Field& F, int window = 3,
          const FaultSpec& fault = FaultSpec{});

  const Catalog& catalog() const { return cat_; }
  const DerivedEngine& engine() const { return eng_; }
  const Quiver& quiver() const { return cat_.quiver(); }
  const Field& field() const { return cat_.field(); }
  int window() const { return window_; }
  int module_count() const { return cat_.size(); }

  int atom_count() const { return int(atoms_.size()); }
  const Atom& atom(int idx) const { return atoms_[idx]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  // Index of (module, shift) in the window, or -1.
  int atom_index(int module_id, int shift) const;
  int shifted(int idx, int by) const;  // index of Sigma^by(atom), or -1
  bool in_window(int idx) const { return idx >= 0; }
  bool interior(int idx) const;  // |shift| <= window-1

  std::string atom_name(int idx) const;

  // dim Hom of window atoms, with any injected fault applied.
  int hom(int a, int b) const { return homd_[a][b]; }
  // Formula value for arbitrary shifts, fault applied when both atoms are in
  // the window.
  int hom_rule(int am, int as, int bm, int bs) const;

  const Complex& realization(int idx) const { return real_[idx]; }
  // Canonical basis chain map for a Hom-1 pair; nullptr when no honest
  // nonzero map exists (possible under fault injection).
  const ChainMap* basis_map(int a, int b) const;
  // gamma_{b,c} . gamma_{a,b} = lambda(a,b,c) . gamma_{a,c} modulo homotopy.
  std::uint8_t compose_const(int a, int b, int c) const;

  // All indecomposable summands of middle terms of triangles a -> e -> b,
  // over every connecting class; exact for atom endpoints.
  const std::vector<int>& pair_middles(int a, int b) const;

  // Standard co-t-structure membership, valid for every shift.
  bool in_std_aisle(int module_id, int shift) const;
  bool in_std_coaisle(int module_id, int shift) const { (void)module_id; return shift >= 0; }

  // indec(Sigma A_std) minus indec(A_std): non-projectives at shift -1 and
  // projectives at shift 0.
  const std::vector<int>& universe() const { return universe_; }
  const std::vector<int>& coheart_atoms() const { return s_atoms_; }          // S
  const std::vector<int>& shifted_coheart_atoms() const { return ss_atoms_; } // Sigma S
  const std::vector<int>& extended_coheart_atoms() const { return c_atoms_; } // C
  bool in_extended_coheart(int idx) const { return in_c_[idx]; }

  bool fault_enabled() const { return fault_.enabled; }

 private:
  Catalog cat_;
  DerivedEngine eng_;
  int window_;
  FaultSpec fault_;
  std::vector<Atom> atoms_;
  std::vector<std::vector<int>> atom_idx_;  // [shift+W][module]
  std::vector<std::vector<int>> homd_;
  std::vector<Complex> real_;
  std::vector<std::vector<std::unique_ptr<ChainMap>>> gamma_;
  std::map<std::tuple<int, int, int>, std::uint8_t> lambda_;
  std::vector<std::vector<std::vector<int>>> middles_;
  std::vector<int> universe_, s_atoms_, ss_atoms_, c_atoms_;
  std::vector<bool> in_c_;
};

}  // namespace cotlab

#endif
