#include "cotlab/context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace cotlab {

Context::Context(const Quiver& q, const Field& F, int window, const FaultSpec& fault)
    : cat_(q, F), eng_(cat_), window_(window), fault_(fault) {
  if (window_ < 2) throw std::invalid_argument("window must be at least 2");

  for (int s = -window_; s <= window_; ++s)
    for (int id = 0; id < cat_.size(); ++id) atoms_.push_back({id, s});
  atom_idx_.assign(2 * window_ + 1, std::vector<int>(cat_.size(), -1));
  for (int i = 0; i < atom_count(); ++i)
    atom_idx_[atoms_[i].shift + window_][atoms_[i].module_id] = i;

  // Hereditary Hom rule; in type A every entry is 0 or 1.
  homd_.assign(atom_count(), std::vector<int>(atom_count(), 0));
  for (int a = 0; a < atom_count(); ++a)
    for (int b = 0; b < atom_count(); ++b) {
      const Atom &x = atoms_[a], &y = atoms_[b];
      int d = 0;
      if (y.shift == x.shift)
        d = cat_.hom_dim(x.module_id, y.module_id);
      else if (y.shift == x.shift + 1)
        d = cat_.ext1_dim(x.module_id, y.module_id);
      if (d > 1) throw std::logic_error("type-A Hom spaces must be at most 1-dim");
      homd_[a][b] = d;
    }

  real_.reserve(atom_count());
  for (int i = 0; i < atom_count(); ++i)
    real_.push_back(eng_.realization(atoms_[i].module_id, atoms_[i].shift));

  // Canonical basis chain maps for the honest Hom-1 pairs.
  gamma_.resize(atom_count());
  for (int a = 0; a < atom_count(); ++a) {
    gamma_[a].resize(atom_count());
    for (int b = 0; b < atom_count(); ++b) {
      if (homd_[a][b] != 1) continue;
      auto hk = eng_.hom_k(real_[a], real_[b]);
      if (hk.dim != homd_[a][b])
        throw std::logic_error("chain-map dimension disagrees with Hom rule");
      // First chain-basis column independent of the boundaries.
      const Field& f = cat_.field();
      Mat picked;
      for (int c = 0; c < hk.chain_basis.cols(); ++c) {
        Mat col(hk.chain_basis.rows(), 1);
        for (int r = 0; r < hk.chain_basis.rows(); ++r)
          col.set(r, 0, hk.chain_basis.at(r, c));
        if (!in_column_span(f, hk.boundary_basis, col)) { picked = col; break; }
      }
      if (picked.rows() == 0) throw std::logic_error("no basis map found");
      gamma_[a][b] = std::make_unique<ChainMap>(
          eng_.chain_map_from_coords(real_[a], real_[b], picked));
    }
  }

  // Composition constants modulo homotopy.
  const Field& f = cat_.field();
  for (int a = 0; a < atom_count(); ++a)
    for (int b = 0; b < atom_count(); ++b) {
      if (!gamma_[a][b]) continue;
      for (int c = 0; c < atom_count(); ++c) {
        if (!gamma_[b][c] || homd_[a][c] != 1) continue;
        if (!gamma_[a][c]) continue;
        ChainMap comp = eng_.compose(*gamma_[b][c], *gamma_[a][b]);
        Mat v = eng_.coords_from_chain_map(comp);
        Mat g = eng_.coords_from_chain_map(*gamma_[a][c]);
        auto hk = eng_.hom_k(real_[a], real_[c]);
        Mat basis = hstack(g, hk.boundary_basis);
        Mat sol;
        if (!solve(f, basis, v, sol))
          throw std::logic_error("composite not in span of basis map");
        lambda_[{a, b, c}] = sol.at(0, 0);
      }
    }

  // Apply the fault hook after the honest chain-level data is in place, so a
  // perturbed table is inconsistent with the engine and must be caught by the
  // verification layer.
  if (fault_.enabled) {
    int a = atom_index(fault_.from_module, fault_.from_shift);
    int b = atom_index(fault_.to_module, fault_.to_shift);
    if (a < 0 || b < 0) throw std::invalid_argument("fault target outside window");
    homd_[a][b] = homd_[a][b] ? 0 : 1;
  }

  // Middle-term summands of all triangles between two atoms. The connecting
  // classes form a space of dimension <= 1, and scaling a class by a unit
  // does not change the cone, so the zero class and one nonzero class cover
  // every triangle.
  middles_.assign(atom_count(), std::vector<std::vector<int>>(atom_count()));
  for (int a = 0; a < atom_count(); ++a)
    for (int b = 0; b < atom_count(); ++b) {
      std::set<int> mids{a, b};
      const Atom& xa = atoms_[a];
      const Atom& xb = atoms_[b];
      Complex cn;
      bool have_cone = false;
      int sa1 = atom_index(xa.module_id, xa.shift + 1);
      if (sa1 >= 0) {
        if (const ChainMap* eps = basis_map(b, sa1)) {
          cn = eng_.cone(*eps);
          have_cone = true;
        }
      } else if (hom_rule(xb.module_id, xb.shift, xa.module_id, xa.shift + 1)) {
        // Sigma a escapes the window; realize the connecting class ad hoc.
        Complex sa = eng_.realization(xa.module_id, xa.shift + 1);
        auto hk = eng_.hom_k(real_[b], sa);
        for (int c = 0; c < hk.chain_basis.cols() && !have_cone; ++c) {
          Mat col(hk.chain_basis.rows(), 1);
          for (int r = 0; r < hk.chain_basis.rows(); ++r)
            col.set(r, 0, hk.chain_basis.at(r, c));
          if (in_column_span(f, hk.boundary_basis, col)) continue;
          ChainMap eps = eng_.chain_map_from_coords(real_[b], sa, col);
          cn = eng_.cone(eps);
          have_cone = true;
        }
      }
      if (have_cone) {
        for (auto [id, s] : eng_.decompose_object(cn)) {
          int idx = atom_index(id, s - 1);
          if (idx < 0) throw std::logic_error("extension middle escapes window");
          mids.insert(idx);
        }
      }
      middles_[a][b].assign(mids.begin(), mids.end());
    }

  for (int i = 0; i < atom_count(); ++i) {
    const Atom& at = atoms_[i];
    if (in_std_aisle(at.module_id, at.shift - 1) && !in_std_aisle(at.module_id, at.shift))
      universe_.push_back(i);
    if (cat_.is_projective(at.module_id) && at.shift == 0) s_atoms_.push_back(i);
    if (cat_.is_projective(at.module_id) && at.shift == 1) ss_atoms_.push_back(i);
  }
  in_c_.assign(atom_count(), false);
  for (int i = 0; i < atom_count(); ++i) {
    const Atom& at = atoms_[i];
    // C = Sigma^2 A_std intersect B_std.
    if (in_std_aisle(at.module_id, at.shift - 2) && in_std_coaisle(at.module_id, at.shift)) {
      c_atoms_.push_back(i);
      in_c_[i] = true;
    }
  }
}

int Context::atom_index(int module_id, int shift) const {
  if (shift < -window_ || shift > window_) return -1;
  if (module_id < 0 || module_id >= cat_.size()) return -1;
  return atom_idx_[shift + window_][module_id];
}

int Context::shifted(int idx, int by) const {
  const Atom& a = atoms_[idx];
  return atom_index(a.module_id, a.shift + by);
}

bool Context::interior(int idx) const {
  return std::abs(atoms_[idx].shift) <= window_ - 1;
}

std::string Context::atom_name(int idx) const {
  const Atom& a = atoms_[idx];
  return cat_.name(a.module_id) + "@" + std::to_string(a.shift);
}

int Context::hom_rule(int am, int as, int bm, int bs) const {
  int ai = atom_index(am, as), bi = atom_index(bm, bs);
  if (ai >= 0 && bi >= 0) return homd_[ai][bi];
  if (bs == as) return cat_.hom_dim(am, bm);
  if (bs == as + 1) return cat_.ext1_dim(am, bm);
  return 0;
}

const ChainMap* Context::basis_map(int a, int b) const {
  return gamma_[a][b].get();
}

std::uint8_t Context::compose_const(int a, int b, int c) const {
  auto it = lambda_.find({a, b, c});
  return it == lambda_.end() ? 0 : it->second;
}

const std::vector<int>& Context::pair_middles(int a, int b) const {
  return middles_[a][b];
}

bool Context::in_std_aisle(int module_id, int shift) const {
  if (shift <= -2) return true;
  return shift <= -1 && cat_.is_projective(module_id);
}

}  // namespace cotlab
