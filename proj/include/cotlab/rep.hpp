#ifndef COTLAB_REP_HPP
#define COTLAB_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "cotlab/fp.hpp"
#include "cotlab/quiver.hpp"

namespace cotlab {

// A representation of the quiver over F_p: a dimension per vertex and one
// matrix per arrow, of shape target_dim x source_dim.
struct Rep {
  std::vector<int> dims;
  std::vector<Mat> mats;

  int total_dim() const;
  bool is_zero() const;
};

// A morphism of representations: one matrix per vertex, of shape
// target_dims[v] x source_dims[v], commuting with the arrow maps.
using RepMap = std::vector<Mat>;

Rep zero_rep(const Quiver& q);
Rep direct_sum(const Quiver& q, const Rep& a, const Rep& b);
Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts);
long long euler_form(const Quiver& q, const std::vector<int>& d,
                     const std::vector<int>& e);

// Basis of Hom(m, n): solves the commuting-square system for all arrows.
std::vector<RepMap> hom_space(const Field& F, const Quiver& q, const Rep& m,
                              const Rep& n);

RepMap rep_map_compose(const Field& F, const RepMap& g, const RepMap& f);
bool rep_map_is_iso(const Field& F, const RepMap& f);

// The indecomposables of mod kQ for a type-A quiver: the interval modules,
// one per pair of path positions a <= b, ordered by (a, b). Ids are stable
// indices into this ordering.
class Catalog {
 public:
  Catalog(const Quiver& q, const Field& F);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  int size() const { return int(reps_.size()); }
  int vertex_count() const { return quiver_.n; }

  const Rep& rep(int id) const { return reps_[id]; }
  // Interval of path positions covered by the module.
  std::pair<int, int> interval(int id) const { return intervals_[id]; }
  // Position of vertex v along the underlying path, and its inverse.
  int position(int v) const { return pos_[v]; }
  int vertex_at(int position) const { return vert_[position]; }

  int hom_dim(int m, int n) const { return hom_dim_[m][n]; }
  const std::vector<RepMap>& hom_basis(int m, int n) const {
    return hom_basis_[m][n];
  }
  // dim Ext^1 via the Euler form; throws if the formula goes negative.
  int ext1_dim(int m, int n) const;

  bool is_projective(int id) const { return proj_vertex_[id] >= 0; }
  // Catalog id of the indecomposable projective at vertex v.
  int projective_id(int v) const { return proj_id_[v]; }
  // Vertex v with P_v == id, or -1.
  int projective_vertex(int id) const { return proj_vertex_[id]; }

  // Name like "[a,b]" in path positions (1-based), plus P_i/S_i aliases.
  std::string name(int id) const;

  // Smallest superset closed under indecomposable summands of quotients.
  std::vector<int> quotient_closure(const std::vector<int>& ids) const;

  // Krull-Schmidt decomposition via the Hom fingerprint; returns catalog ids
  // with multiplicity. Throws if the fingerprint is not a non-negative
  // integer combination of catalog fingerprints.
  std::vector<int> decompose(const Rep& m) const;

  // All subrepresentations of an interval module, as position subsets closed
  // under the arrows inside the interval.
  std::vector<std::vector<int>> subrep_position_sets(int id) const;
  // The subrep on the given positions, as a representation.
  Rep subrep_on(int id, const std::vector<int>& positions) const;
  // The quotient of the interval module by the subrep on those positions.
  Rep quotient_by(int id, const std::vector<int>& positions) const;

 private:
  Quiver quiver_;
  Field field_;
  std::vector<int> pos_, vert_;
  std::vector<std::pair<int, int>> intervals_;
  std::vector<Rep> reps_;
  std::vector<std::vector<int>> hom_dim_;
  std::vector<std::vector<std::vector<RepMap>>> hom_basis_;
  std::vector<int> proj_id_, proj_vertex_;
};

}  // namespace cotlab

#endif
