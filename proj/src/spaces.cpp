#include "sdualkit/spaces.hpp"

#include "sdualkit/abelian_coulomb.hpp"
#include "sdualkit/error.hpp"

namespace sdualkit {

namespace {

bool is_bare_point(const SpaceDescriptor &m) {
  return m.kind == SpaceKind::point && m.left_group.is_trivial() && m.right_group.is_trivial() &&
         !m.theory;
}

// Segment dimensions of a run of NS5 blocks, empty if m is not one.
std::vector<int> ns5_chain(const SpaceDescriptor &m) {
  if (m.kind == SpaceKind::ns5_block ||
      ((m.kind == SpaceKind::reduction || m.kind == SpaceKind::orbit_closure) && m.chain.size() >= 2)) {
    return m.chain;
  }
  return {};
}

const GroupDescriptor &acting_group(const SpaceDescriptor &m) {
  if (!m.left_group.is_trivial() && !m.right_group.is_trivial()) {
    throw Error(Errc::no_known_dual, "no tabulated dual for the two-sided space " + m.body());
  }
  return m.left_group.is_trivial() ? m.right_group : m.left_group;
}

// Puts the dual group on the side the original group acted from.
SpaceDescriptor on_side_of(SpaceDescriptor dual, const SpaceDescriptor &original) {
  if (original.left_group.is_trivial() && !original.right_group.is_trivial()) {
    std::swap(dual.left_group, dual.right_group);
  }
  return dual;
}

} // namespace

SpaceDescriptor compose(const SpaceDescriptor &m12, const SpaceDescriptor &m23,
                        const GroupDescriptor &g2, bool free) {
  if (!(m12.right_group == g2) || !(m23.left_group == g2)) {
    throw Error(Errc::group_mismatch, "cannot reduce " + m12.body() + " [right " +
                                          m12.right_group.to_string() + "] against " + m23.body() +
                                          " [left " + m23.left_group.to_string() + "] by " +
                                          g2.to_string());
  }
  if (g2.is_trivial() && is_bare_point(m23)) {
    return m12;
  }
  if (g2.is_trivial() && is_bare_point(m12)) {
    return m23;
  }

  const std::int64_t expected = m12.dim + m23.dim - 2 * g2.dim();
  SpaceDescriptor out;
  out.kind = SpaceKind::reduction;
  out.factors = {m12, m23};
  out.conjectural = m12.conjectural || m23.conjectural;
  out.twisted = m23.twisted;

  auto left_chain = ns5_chain(m12);
  auto right_chain = ns5_chain(m23);
  if (!left_chain.empty() && !right_chain.empty() && left_chain.back() == right_chain.front()) {
    std::vector<int> chain = left_chain;
    chain.insert(chain.end(), right_chain.begin() + 1, right_chain.end());
    out.chain = chain;
    out.factors.clear();
    if (chain.front() == 0 && chain_is_convex(chain)) {
      OrbitDescriptor orbit = chain_to_orbit(chain);
      if (orbit.dim() == expected) {
        out.kind = SpaceKind::orbit_closure;
        out.partition = orbit.jordan_type;
        out.n = orbit.n;
      }
    }
  } else if (free && m12.kind == SpaceKind::cotangent_of_group &&
             m23.kind == SpaceKind::cotangent_of_group && m12.left_group == g2 &&
             m23.right_group == g2) {
    out = cotangent_of_group(g2, true);
    out.twisted = m23.twisted;
  }

  out.left_group = m12.left_group;
  out.right_group = m23.right_group;
  out.dim = expected;
  out.possibly_singular = !free || m12.possibly_singular || m23.possibly_singular;
  return out;
}

SpaceDescriptor compose_all(const std::vector<SpaceDescriptor> &blocks, bool free, bool right_to_left) {
  if (blocks.empty()) {
    return point_space();
  }
  if (!right_to_left) {
    SpaceDescriptor acc = blocks.front();
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      acc = compose(acc, blocks[i], blocks[i].left_group, free);
    }
    return acc;
  }
  SpaceDescriptor acc = blocks.back();
  for (std::size_t i = blocks.size() - 1; i-- > 0;) {
    acc = compose(blocks[i], acc, blocks[i].right_group, free);
  }
  return acc;
}

SpaceDescriptor sdual_pair(const SpaceDescriptor &m) {
  switch (m.kind) {
  case SpaceKind::point: {
    if (m.theory) {
      SpaceDescriptor d = cotangent_of_rep(*m.theory);
      d.conjectural = true;
      return d;
    }
    const GroupDescriptor &g = acting_group(m);
    switch (g.kind()) {
    case GroupKind::trivial:
      return point_space();
    case GroupKind::gl:
      return on_side_of(group_times_slice(Partition{g.size()}), m);
    case GroupKind::torus:
      return on_side_of(cotangent_of_group(g.dual()), m);
    case GroupKind::product:
      break;
    }
    break;
  }
  case SpaceKind::cotangent_of_group: {
    const GroupDescriptor &g = acting_group(m);
    if (g.kind() == GroupKind::gl) {
      return on_side_of(orbit_closure_space(Partition{g.size()}), m);
    }
    if (g.kind() == GroupKind::torus) {
      // The nilpotent cone of a torus is a point.
      return on_side_of(point_space(g.dual()), m);
    }
    break;
  }
  case SpaceKind::group_times_slice:
    if (m.partition) {
      return on_side_of(orbit_closure_space(transpose(*m.partition)), m);
    }
    break;
  case SpaceKind::orbit_closure:
    if (m.partition && m.partition->n() > 0) {
      if (*m.partition == Partition{m.partition->n()}) {
        return on_side_of(cotangent_of_group(GroupDescriptor::gl(m.partition->n())), m);
      }
      return on_side_of(group_times_slice(transpose(*m.partition)), m);
    }
    break;
  case SpaceKind::cotangent_of_rep:
    if (m.theory) {
      return sdual_torus(*m.theory);
    }
    break;
  case SpaceKind::torus_cotangent:
  case SpaceKind::affine_plane:
  case SpaceKind::type_A_singularity:
  case SpaceKind::coulomb_branch: {
    TorusTheory source;
    if (m.theory) {
      source = *m.theory;
    } else if (m.kind == SpaceKind::torus_cotangent) {
      source.rank = m.n;
    } else {
      break;
    }
    SpaceDescriptor d = cotangent_of_rep(source);
    d.conjectural = true;
    return d;
  }
  case SpaceKind::ns5_block: {
    SpaceDescriptor d = d5_block(m.chain.at(0), m.chain.at(1));
    d.twisted = m.twisted;
    return d;
  }
  case SpaceKind::d5_block: {
    SpaceDescriptor d = ns5_block(m.chain.at(0), m.chain.at(1));
    d.conjectural = m.chain.at(0) != m.chain.at(1);
    d.twisted = m.twisted;
    return d;
  }
  case SpaceKind::product: {
    std::vector<SpaceDescriptor> duals;
    for (const auto &f : m.factors) {
      duals.push_back(sdual_pair(f));
    }
    return product_space(std::move(duals));
  }
  case SpaceKind::reduction:
    break;
  }
  throw Error(Errc::no_known_dual, "no tabulated S-dual for " + m.body());
}

std::int64_t coulomb_dim(const SpaceDescriptor &m, const GroupDescriptor &g) {
  switch (m.kind) {
  case SpaceKind::point:
    if (!m.theory) {
      return 2 * g.rank();
    }
    break;
  case SpaceKind::cotangent_of_group:
    if (m.left_group == g && m.right_group.is_trivial()) {
      return 0;
    }
    break;
  case SpaceKind::cotangent_of_rep:
    if (m.theory) {
      if (!(GroupDescriptor::torus(m.theory->rank) == g)) {
        throw Error(Errc::group_mismatch, "torus theory of rank " + std::to_string(m.theory->rank) +
                                              " paired with " + g.to_string());
      }
      return 2 * std::int64_t{effective_rank(*m.theory)};
    }
    break;
  default:
    break;
  }
  throw Error(Errc::unknown_coulomb_dim, "no known Coulomb branch dimension for " + m.body() +
                                             " under " + g.to_string());
}

KostantCheck kostant_reduction_check(const SpaceDescriptor &m, const GroupDescriptor &g) {
  KostantCheck check;
  check.lhs = coulomb_dim(m, g);
  const SpaceDescriptor dual = sdual_pair(m);
  const GroupDescriptor gv = g.dual();
  // (M^v x (G^v x S^v)) /// G^v has dimension dim M^v + (dim G + rank G) - 2 dim G.
  check.rhs = dual.dim + (gv.dim() + gv.rank()) - 2 * gv.dim();
  check.pass = check.lhs == check.rhs;
  return check;
}

std::int64_t hyperspherical_deficit(const SpaceDescriptor &m, const GroupDescriptor &g) {
  return m.dim + (g.dim() - g.rank()) - 2 * g.dim();
}

} // namespace sdualkit
