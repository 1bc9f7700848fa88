#include "sdualkit/descriptors.hpp"

#include <array>
#include <utility>

#include "sdualkit/error.hpp"

namespace sdualkit {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
  case GroupKind::trivial: return "trivial";
  case GroupKind::torus: return "torus";
  case GroupKind::gl: return "gl";
  case GroupKind::product: return "product";
  }
  return "trivial";
}

GroupDescriptor GroupDescriptor::torus(int r) {
  if (r < 0) {
    throw Error(Errc::invalid_argument, "negative torus rank");
  }
  GroupDescriptor g;
  if (r > 0) {
    g.kind_ = GroupKind::torus;
    g.size_ = r;
  }
  return g;
}

GroupDescriptor GroupDescriptor::gl(int n) {
  if (n < 0) {
    throw Error(Errc::invalid_argument, "negative GL size");
  }
  GroupDescriptor g;
  if (n > 0) {
    g.kind_ = GroupKind::gl;
    g.size_ = n;
  }
  return g;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  std::vector<GroupDescriptor> flat;
  for (auto &f : factors) {
    if (f.kind_ == GroupKind::product) {
      flat.insert(flat.end(), f.factors_.begin(), f.factors_.end());
    } else if (f.kind_ != GroupKind::trivial) {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) {
    return trivial();
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  GroupDescriptor g;
  g.kind_ = GroupKind::product;
  g.factors_ = std::move(flat);
  return g;
}

std::int64_t GroupDescriptor::dim() const {
  switch (kind_) {
  case GroupKind::trivial: return 0;
  case GroupKind::torus: return size_;
  case GroupKind::gl: return std::int64_t{size_} * size_;
  case GroupKind::product: {
    std::int64_t d = 0;
    for (const auto &f : factors_) d += f.dim();
    return d;
  }
  }
  return 0;
}

std::int64_t GroupDescriptor::rank() const {
  switch (kind_) {
  case GroupKind::trivial: return 0;
  case GroupKind::torus:
  case GroupKind::gl: return size_;
  case GroupKind::product: {
    std::int64_t r = 0;
    for (const auto &f : factors_) r += f.rank();
    return r;
  }
  }
  return 0;
}

std::string GroupDescriptor::to_string() const {
  switch (kind_) {
  case GroupKind::trivial: return "1";
  case GroupKind::torus: return "T(" + std::to_string(size_) + ")";
  case GroupKind::gl: return "GL(" + std::to_string(size_) + ")";
  case GroupKind::product: {
    std::string s;
    for (const auto &f : factors_) {
      if (!s.empty()) s += " x ";
      s += f.to_string();
    }
    return s;
  }
  }
  return "1";
}

namespace {

constexpr std::array<std::pair<SpaceKind, std::string_view>, 13> kSpaceKindNames{{
    {SpaceKind::point, "point"},
    {SpaceKind::cotangent_of_rep, "cotangent_of_rep"},
    {SpaceKind::cotangent_of_group, "cotangent_of_group"},
    {SpaceKind::group_times_slice, "group_times_slice"},
    {SpaceKind::orbit_closure, "orbit_closure"},
    {SpaceKind::type_A_singularity, "type_A_singularity"},
    {SpaceKind::torus_cotangent, "torus_cotangent"},
    {SpaceKind::affine_plane, "affine_plane"},
    {SpaceKind::coulomb_branch, "coulomb_branch"},
    {SpaceKind::ns5_block, "ns5_block"},
    {SpaceKind::d5_block, "d5_block"},
    {SpaceKind::product, "product"},
    {SpaceKind::reduction, "reduction"},
}};

std::int64_t d5_block_dim(int vi, int vj) {
  if (vi == vj) {
    return 2 * (std::int64_t{vi} * vi + vi);
  }
  int big = std::max(vi, vj);
  int small = std::min(vi, vj);
  return std::int64_t{big} * big + centralizer_dim(hook(big - small, small));
}

} // namespace

std::string_view to_string(SpaceKind kind) {
  for (const auto &[k, name] : kSpaceKindNames) {
    if (k == kind) return name;
  }
  return "point";
}

std::optional<SpaceKind> space_kind_from_string(std::string_view s) {
  for (const auto &[k, name] : kSpaceKindNames) {
    if (name == s) return k;
  }
  return std::nullopt;
}

SpaceDescriptor point_space(const GroupDescriptor &g) {
  SpaceDescriptor m;
  m.kind = SpaceKind::point;
  m.left_group = g;
  return m;
}

SpaceDescriptor cotangent_of_group(const GroupDescriptor &g, bool two_sided) {
  SpaceDescriptor m;
  m.kind = SpaceKind::cotangent_of_group;
  m.left_group = g;
  if (two_sided) {
    m.right_group = g;
  }
  m.n = static_cast<int>(g.rank());
  m.dim = 2 * g.dim();
  return m;
}

SpaceDescriptor group_times_slice(const Partition &lambda) {
  if (lambda.n() == 0) {
    throw Error(Errc::invalid_argument, "slice in gl(0)");
  }
  SpaceDescriptor m;
  m.kind = SpaceKind::group_times_slice;
  m.n = lambda.n();
  m.partition = lambda;
  m.left_group = GroupDescriptor::gl(lambda.n());
  m.dim = std::int64_t{lambda.n()} * lambda.n() + centralizer_dim(lambda);
  return m;
}

SpaceDescriptor orbit_closure_space(const Partition &lambda) {
  SpaceDescriptor m;
  m.kind = SpaceKind::orbit_closure;
  m.n = lambda.n();
  m.partition = lambda;
  m.left_group = GroupDescriptor::gl(lambda.n());
  m.dim = orbit_dim(lambda);
  return m;
}

SpaceDescriptor cotangent_of_rep(const TorusTheory &t) {
  t.validate();
  SpaceDescriptor m;
  m.kind = SpaceKind::cotangent_of_rep;
  m.theory = t;
  m.n = t.rank;
  m.left_group = GroupDescriptor::torus(t.rank);
  m.dim = 2 * static_cast<std::int64_t>(t.linear_weights.size() + t.multiplicative_weights.size());
  return m;
}

SpaceDescriptor ns5_block(int vi, int vj) {
  if (vi < 0 || vj < 0) {
    throw Error(Errc::invalid_argument, "negative segment dimension");
  }
  SpaceDescriptor m;
  m.kind = SpaceKind::ns5_block;
  m.chain = {vi, vj};
  m.left_group = GroupDescriptor::gl(vi);
  m.right_group = GroupDescriptor::gl(vj);
  m.dim = 2 * std::int64_t{vi} * vj;
  return m;
}

SpaceDescriptor d5_block(int vi, int vj) {
  if (vi < 0 || vj < 0) {
    throw Error(Errc::invalid_argument, "negative segment dimension");
  }
  SpaceDescriptor m;
  m.kind = SpaceKind::d5_block;
  m.chain = {vi, vj};
  m.left_group = GroupDescriptor::gl(vi);
  m.right_group = GroupDescriptor::gl(vj);
  m.n = std::max(vi, vj);
  if (vi != vj) {
    m.partition = hook(std::abs(vi - vj), std::min(vi, vj));
  }
  m.dim = d5_block_dim(vi, vj);
  return m;
}

SpaceDescriptor product_space(std::vector<SpaceDescriptor> factors) {
  SpaceDescriptor m;
  m.kind = SpaceKind::product;
  std::vector<GroupDescriptor> left;
  std::vector<GroupDescriptor> right;
  for (const auto &f : factors) {
    m.dim += f.dim;
    left.push_back(f.left_group);
    right.push_back(f.right_group);
    m.conjectural = m.conjectural || f.conjectural;
    m.possibly_singular = m.possibly_singular || f.possibly_singular;
  }
  m.left_group = GroupDescriptor::product(std::move(left));
  m.right_group = GroupDescriptor::product(std::move(right));
  m.factors = std::move(factors);
  return m;
}

bool SpaceDescriptor::consistent() const {
  switch (kind) {
  case SpaceKind::point:
    return dim == 0;
  case SpaceKind::cotangent_of_group:
    return dim == 2 * left_group.dim();
  case SpaceKind::group_times_slice:
    return partition && dim == std::int64_t{n} * n + centralizer_dim(*partition);
  case SpaceKind::orbit_closure:
    return partition && dim == orbit_dim(*partition);
  case SpaceKind::cotangent_of_rep:
    return theory && dim == 2 * static_cast<std::int64_t>(theory->linear_weights.size() +
                                                          theory->multiplicative_weights.size());
  case SpaceKind::type_A_singularity:
  case SpaceKind::affine_plane:
    return dim == 2;
  case SpaceKind::torus_cotangent:
  case SpaceKind::coulomb_branch:
    return dim == 2 * std::int64_t{n};
  case SpaceKind::ns5_block:
    return chain.size() == 2 && dim == 2 * std::int64_t{chain[0]} * chain[1];
  case SpaceKind::d5_block:
    return chain.size() == 2 && dim == d5_block_dim(chain[0], chain[1]);
  case SpaceKind::product: {
    std::int64_t d = 0;
    for (const auto &f : factors) {
      if (!f.consistent()) return false;
      d += f.dim;
    }
    return d == dim;
  }
  case SpaceKind::reduction:
    return true;
  }
  return false;
}

std::string SpaceDescriptor::body() const {
  switch (kind) {
  case SpaceKind::point:
    return "pt";
  case SpaceKind::cotangent_of_rep: {
    std::size_t a = theory ? theory->linear_weights.size() : 0;
    std::size_t b = theory ? theory->multiplicative_weights.size() : 0;
    std::string n;
    if (a > 0) n += a == 1 ? "C" : "C^" + std::to_string(a);
    if (b > 0) {
      if (!n.empty()) n += " x ";
      n += b == 1 ? "C^x" : "(C^x)^" + std::to_string(b);
    }
    return "T^*(" + (n.empty() ? std::string("0") : n) + ")";
  }
  case SpaceKind::cotangent_of_group:
    return "T^*" + left_group.to_string();
  case SpaceKind::group_times_slice:
    return left_group.to_string() + " x Slice" + (partition ? partition->to_string() : "[]");
  case SpaceKind::orbit_closure:
    return "OrbitClosure" + (partition ? partition->to_string() : "[]") + " in gl(" +
           std::to_string(n) + ")";
  case SpaceKind::type_A_singularity:
    return "A_" + std::to_string(n) + " singularity";
  case SpaceKind::torus_cotangent:
    return n == 1 ? "T^*(C^x)" : "T^*((C^x)^" + std::to_string(n) + ")";
  case SpaceKind::affine_plane:
    return "C^2";
  case SpaceKind::coulomb_branch:
    return "CoulombBranch(rank " + std::to_string(n) + ")";
  case SpaceKind::ns5_block:
    return "M_o(" + std::to_string(chain.at(0)) + "," + std::to_string(chain.at(1)) + ")";
  case SpaceKind::d5_block: {
    int vi = chain.at(0);
    int vj = chain.at(1);
    if (vi == vj) {
      return "T^*(GL(" + std::to_string(vi) + ") x C^" + std::to_string(vi) + ")";
    }
    return "GL(" + std::to_string(std::max(vi, vj)) + ") x Slice" + partition->to_string();
  }
  case SpaceKind::product:
  case SpaceKind::reduction: {
    std::string s = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) s += kind == SpaceKind::product ? " x " : " o ";
      s += factors[i].body();
    }
    s += ")";
    if (kind == SpaceKind::reduction && !chain.empty()) {
      s = "NS5Chain(";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(chain[i]);
      }
      s += ")";
    }
    return s;
  }
  }
  return "?";
}

std::string SpaceDescriptor::to_string() const {
  std::string s = body() + "  (dim " + std::to_string(dim) + ")";
  if (conjectural) s += " [conjectural]";
  if (possibly_singular) s += " [possibly singular]";
  return s;
}

SpaceDescriptor normalized(const SpaceDescriptor &m) {
  if (m.kind == SpaceKind::orbit_closure && m.partition && m.partition->n() > 0 &&
      *m.partition == Partition(std::vector<int>(static_cast<std::size_t>(m.n), 1))) {
    SpaceDescriptor p = point_space(m.left_group);
    return p;
  }
  if (m.kind == SpaceKind::group_times_slice && m.partition &&
      *m.partition == Partition(std::vector<int>(static_cast<std::size_t>(m.n), 1))) {
    return cotangent_of_group(m.left_group);
  }
  return m;
}

} // namespace sdualkit
