#pragma once

// Descriptor algebra for Hamiltonian spaces: composition by symplectic
// reduction, the table of known S-dual pairs, the Kostant-reduction
// dimension identity and the hyperspherical dimension count.

#include <cstdint>
#include <vector>

#include "sdualkit/descriptors.hpp"

namespace sdualkit {

/// m12 o m23 = mu_2^{-1}(0) // G_2, tracked at the level of descriptors.
///
/// The dimension is always the expected one, dim m12 + dim m23 - 2 dim G_2.
/// Recognized cases get a concrete kind: reduction by the trivial group
/// against a bare point, T^*G o T^*G over G (free), and runs of NS5 blocks
/// starting at 0 with convex dimension jumps, which give an orbit closure in
/// gl(v_n). Anything else is kind `reduction`. Without `free` the result is
/// flagged possibly singular.
SpaceDescriptor compose(const SpaceDescriptor &m12, const SpaceDescriptor &m23,
                        const GroupDescriptor &g2, bool free = false);

/// Composes a sequence, each step over the shared group. `right_to_left`
/// brackets from the right instead.
SpaceDescriptor compose_all(const std::vector<SpaceDescriptor> &blocks, bool free = false,
                            bool right_to_left = false);

/// Table-driven S-dual:
///   pt                  <-> G x S (principal slice; T^*T for a torus)
///   T^*G                <-> nilpotent cone of G
///   GL_n x S_lambda     <-> closure of O(lambda^t)
///   T^*N (torus)        <-> its Coulomb branch
///   M_o(V_i, V_j)       <-> M_x(V_i, V_j)
///   products            factorwise
/// Throws no_known_dual otherwise.
SpaceDescriptor sdual_pair(const SpaceDescriptor &m);

/// Dimension of the Coulomb branch of (G, M) where known: 2 rank G for the
/// point, 0 for T^*G, the abelian engine for torus representations.
std::int64_t coulomb_dim(const SpaceDescriptor &m, const GroupDescriptor &g);

struct KostantCheck {
  std::int64_t lhs = 0; ///< dim M_C(G, M)
  std::int64_t rhs = 0; ///< dim M^v - dim G + rank G
  bool pass = false;
};

/// dim M_C(G, M) against the dimension of the Kostant reduction
/// (M^v x (G^v x S^v)) /// G^v.
KostantCheck kostant_reduction_check(const SpaceDescriptor &m, const GroupDescriptor &g);

/// Expected dim (M x N_G) /// G = dim M + (dim G - rank G) - 2 dim G. A
/// positive value rules out finite fibers; zero or below is only necessary.
std::int64_t hyperspherical_deficit(const SpaceDescriptor &m, const GroupDescriptor &g);

} // namespace sdualkit
