#pragma once

// Descriptor records for groups and Hamiltonian spaces. Operations on them
// (composition, duality) live in spaces.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdualkit/partitions.hpp"
#include "sdualkit/torus_theory.hpp"

namespace sdualkit {

enum class GroupKind { trivial, torus, gl, product };

std::string_view to_string(GroupKind kind);

/// Torus, GL_n or a finite product of those. Construction normalizes:
/// torus(0) and gl(0) are trivial, products are flattened and drop trivial
/// factors, a one-factor product is that factor.
class GroupDescriptor {
public:
  GroupDescriptor() = default;

  static GroupDescriptor trivial() { return {}; }
  static GroupDescriptor torus(int r);
  static GroupDescriptor gl(int n);
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);

  GroupKind kind() const { return kind_; }
  /// r for a torus, n for GL_n, 0 otherwise.
  int size() const { return size_; }
  const std::vector<GroupDescriptor> &factors() const { return factors_; }

  std::int64_t dim() const;
  std::int64_t rank() const;
  bool is_trivial() const { return kind_ == GroupKind::trivial; }

  /// Langlands dual at descriptor level. Tori and GL_n are self-dual here.
  GroupDescriptor dual() const { return *this; }

  /// `1`, `T(2)`, `GL(3)`, `GL(1) x T(2)`.
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor &, const GroupDescriptor &) = default;

private:
  GroupKind kind_ = GroupKind::trivial;
  int size_ = 0;
  std::vector<GroupDescriptor> factors_;
};

enum class SpaceKind {
  point,
  cotangent_of_rep,
  cotangent_of_group,
  group_times_slice,
  orbit_closure,
  type_A_singularity,
  torus_cotangent,
  affine_plane,
  coulomb_branch,
  ns5_block,
  d5_block,
  product,
  reduction,
};

std::string_view to_string(SpaceKind kind);
std::optional<SpaceKind> space_kind_from_string(std::string_view s);

/// A Hamiltonian G_left x G_right space, recorded by kind and complex
/// dimension plus whatever combinatorial data the kind needs.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::point;
  GroupDescriptor left_group;
  GroupDescriptor right_group;
  std::int64_t dim = 0;

  /// gl size for slices and orbits, l for A_l, rank for torus kinds.
  int n = 0;
  std::optional<Partition> partition;
  /// Source theory for cotangent_of_rep and for torus Coulomb branches.
  std::optional<TorusTheory> theory;
  /// Segment dimensions: (v_i, v_j) for a single fivebrane block, the whole
  /// chain for a composed run of NS5 blocks.
  std::vector<int> chain;
  std::vector<SpaceDescriptor> factors;

  bool conjectural = false;
  bool possibly_singular = false;
  /// Right action twisted by the Chevalley involution. Bookkeeping only.
  bool twisted = false;

  /// Checks dim against the kind's dimension formula.
  bool consistent() const;

  /// `GL(3) x Slice[2,1]  (dim 14)`.
  std::string to_string() const;
  /// The part of to_string before the dimension.
  std::string body() const;

  friend bool operator==(const SpaceDescriptor &, const SpaceDescriptor &) = default;
};

// Factories. Each fills dim from the kind's formula.
SpaceDescriptor point_space(const GroupDescriptor &g = GroupDescriptor::trivial());
/// T^*G; with `two_sided` it is a (G, G)-space, otherwise a G-space.
SpaceDescriptor cotangent_of_group(const GroupDescriptor &g, bool two_sided = false);
/// GL_n x S_lambda for lambda a partition of n.
SpaceDescriptor group_times_slice(const Partition &lambda);
/// Closure of the GL_n orbit of Jordan type lambda, n = |lambda|.
SpaceDescriptor orbit_closure_space(const Partition &lambda);
/// T^*N for a torus theory, with the torus acting on the left.
SpaceDescriptor cotangent_of_rep(const TorusTheory &t);
/// M_o(V_i, V_j) = T^*Hom(V_i, V_j).
SpaceDescriptor ns5_block(int vi, int vj);
/// M_x(V_i, V_j): GL(V_i) x S(v_i - v_j, 1^{v_j}) for v_i > v_j, the mirror
/// case for v_i < v_j, T^*(GL(V) x V) for v_i = v_j.
SpaceDescriptor d5_block(int vi, int vj);
SpaceDescriptor product_space(std::vector<SpaceDescriptor> factors);

/// Identifies descriptors that name the same space under different kinds:
/// the zero-orbit closure is a point, GL_n x S_{(1^n)} is T^*GL_n.
SpaceDescriptor normalized(const SpaceDescriptor &m);

} // namespace sdualkit
