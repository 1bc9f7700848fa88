#include "sdualkit/abelian_coulomb.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "sdualkit/error.hpp"

namespace sdualkit {

namespace {

void check_rank(const TorusTheory &t, std::size_t length, const char *what) {
  if (length != static_cast<std::size_t>(t.rank)) {
    throw Error(Errc::rank_mismatch, std::string(what) + " of length " + std::to_string(length) +
                                         " for a rank " + std::to_string(t.rank) + " theory");
  }
}

Cocharacter add(const Cocharacter &a, const Cocharacter &b) {
  Cocharacter s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    s[i] = a[i] + b[i];
  }
  return s;
}

void check_annihilates(const TorusTheory &t, const CoulombElement &x) {
  for (const auto &[lambda, p] : x.support()) {
    for (const auto &b : t.multiplicative_weights) {
      if (b.pair(lambda) != 0) {
        throw Error(Errc::invalid_argument,
                    "class supported off the multiplicative kernel; reduce the theory first");
      }
    }
  }
}

std::string cocharacter_text(const Cocharacter &lambda) {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(lambda[i]);
  }
  return s + ")";
}

} // namespace

void TorusTheory::validate() const {
  if (rank < 0) {
    throw Error(Errc::invalid_argument, "negative torus rank");
  }
  for (const auto &a : linear_weights) {
    if (a.rank() != static_cast<std::size_t>(rank)) {
      throw Error(Errc::rank_mismatch, "linear weight has length " + std::to_string(a.rank()) +
                                           ", expected " + std::to_string(rank));
    }
  }
  for (const auto &b : multiplicative_weights) {
    if (b.rank() != static_cast<std::size_t>(rank)) {
      throw Error(Errc::rank_mismatch, "multiplicative weight has length " +
                                           std::to_string(b.rank()) + ", expected " +
                                           std::to_string(rank));
    }
  }
}

// ------------------------------------------------------------ CoulombElement

CoulombElement CoulombElement::basis(const Cocharacter &lambda) {
  return term(lambda, Polynomial::one(lambda.size()));
}

CoulombElement CoulombElement::term(const Cocharacter &lambda, Polynomial coeff) {
  if (coeff.nvars() != lambda.size()) {
    throw Error(Errc::rank_mismatch, "coefficient ring does not match cocharacter rank");
  }
  CoulombElement x(static_cast<int>(lambda.size()));
  x.add(lambda, coeff);
  return x;
}

Polynomial CoulombElement::coefficient(const Cocharacter &lambda) const {
  auto it = support_.find(lambda);
  return it == support_.end() ? Polynomial(static_cast<std::size_t>(rank_)) : it->second;
}

void CoulombElement::add(const Cocharacter &lambda, const Polynomial &p) {
  if (p.is_zero()) {
    return;
  }
  auto [it, inserted] = support_.emplace(lambda, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) {
      support_.erase(it);
    }
  }
}

CoulombElement &CoulombElement::operator+=(const CoulombElement &o) {
  if (o.rank_ != rank_) {
    throw Error(Errc::rank_mismatch, "adding Coulomb elements of different rank");
  }
  for (const auto &[lambda, p] : o.support_) {
    add(lambda, p);
  }
  return *this;
}

std::string CoulombElement::to_string() const {
  if (support_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto &[lambda, p] : support_) {
    if (!out.empty()) out += " + ";
    std::string coeff = p.to_string();
    if (p.term_count() > 1) {
      coeff = "(" + coeff + ")";
    }
    out += (coeff == "1" ? "" : coeff + "*") + "r'" + cocharacter_text(lambda);
  }
  return out;
}

// ------------------------------------------------------------------- product

std::int64_t monopole_degree2(const TorusTheory &t, const Cocharacter &lambda) {
  check_rank(t, lambda.size(), "cocharacter");
  std::int64_t d = 0;
  for (const auto &a : t.linear_weights) {
    d += std::abs(a.pair(lambda));
  }
  return d;
}

std::optional<std::int64_t> homogeneous_degree2(const TorusTheory &t, const CoulombElement &x) {
  std::optional<std::int64_t> degree;
  for (const auto &[lambda, p] : x.support()) {
    auto pd = p.homogeneous_degree();
    if (!pd) {
      return std::nullopt;
    }
    std::int64_t d = 2 * std::int64_t{*pd} + monopole_degree2(t, lambda);
    if (degree && *degree != d) {
      return std::nullopt;
    }
    degree = d;
  }
  return degree;
}

std::vector<unsigned> structure_exponents(const TorusTheory &t, const Cocharacter &lambda,
                                          const Cocharacter &mu) {
  check_rank(t, lambda.size(), "cocharacter");
  check_rank(t, mu.size(), "cocharacter");
  std::vector<unsigned> d;
  d.reserve(t.linear_weights.size());
  for (const auto &a : t.linear_weights) {
    std::int64_t p = a.pair(lambda);
    std::int64_t q = a.pair(mu);
    std::int64_t twice = std::abs(p) + std::abs(q) - std::abs(p + q);
    d.push_back(static_cast<unsigned>(twice / 2));
  }
  return d;
}

Polynomial structure_constant(const TorusTheory &t, const Cocharacter &lambda, const Cocharacter &mu) {
  auto d = structure_exponents(t, lambda, mu);
  std::vector<std::pair<LinearForm, unsigned>> factors;
  factors.reserve(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    factors.emplace_back(t.linear_weights[j], d[j]);
  }
  return eval_product(static_cast<std::size_t>(t.rank), factors);
}

CoulombElement multiply(const TorusTheory &t, const CoulombElement &x, const CoulombElement &y) {
  t.validate();
  if (x.rank() != t.rank || y.rank() != t.rank) {
    throw Error(Errc::rank_mismatch, "Coulomb element rank differs from the theory");
  }
  check_annihilates(t, x);
  check_annihilates(t, y);
  CoulombElement out(t.rank);
  for (const auto &[lambda, p] : x.support()) {
    for (const auto &[mu, q] : y.support()) {
      out += CoulombElement::term(add(lambda, mu), p * q * structure_constant(t, lambda, mu));
    }
  }
  return out;
}

std::vector<Cocharacter> cocharacter_box(int rank, int cutoff) {
  if (rank < 0 || cutoff < 0) {
    throw Error(Errc::invalid_argument, "cocharacter box needs nonnegative rank and cutoff");
  }
  std::vector<Cocharacter> out{Cocharacter{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<Cocharacter> next;
    for (const auto &prefix : out) {
      for (int v = -cutoff; v <= cutoff; ++v) {
        auto c = prefix;
        c.push_back(v);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::map<std::pair<Cocharacter, Cocharacter>, Polynomial>
structure_table(const TorusTheory &t, int cutoff) {
  t.validate();
  std::map<std::pair<Cocharacter, Cocharacter>, Polynomial> table;
  auto box = cocharacter_box(t.rank, cutoff);
  for (const auto &lambda : box) {
    for (const auto &mu : box) {
      table.emplace(std::make_pair(lambda, mu), structure_constant(t, lambda, mu));
    }
  }
  return table;
}

// ----------------------------------------------------------------- reduction

std::optional<Cocharacter> Reduction::restrict_cocharacter(const Cocharacter &lambda) const {
  if (lambda.size() != embedding.rows()) {
    throw Error(Errc::rank_mismatch, "cocharacter length differs from the ambient rank");
  }
  std::vector<LatticeVector> basis;
  for (std::size_t c = 0; c < embedding.cols(); ++c) {
    LatticeVector v;
    for (std::size_t r = 0; r < embedding.rows(); ++r) {
      v.push_back(to_int64(embedding(r, c)));
    }
    basis.push_back(std::move(v));
  }
  return lattice_coordinates(basis, lambda);
}

Cocharacter Reduction::embed(const Cocharacter &coords) const {
  Cocharacter out;
  for (const auto &x : embedding.apply(coords)) {
    out.push_back(to_int64(x));
  }
  return out;
}

CoulombElement Reduction::restrict_element(const CoulombElement &x) const {
  CoulombElement out(theory.rank);
  if (x.rank() != static_cast<int>(embedding.rows())) {
    throw Error(Errc::rank_mismatch, "element rank differs from the ambient rank");
  }
  for (const auto &[lambda, p] : x.support()) {
    auto coords = restrict_cocharacter(lambda);
    if (!coords) {
      continue;
    }
    // Restricting the equivariant parameters: w_i -> sum_k E_{ik} w'_k.
    Polynomial restricted(static_cast<std::size_t>(theory.rank));
    for (const auto &[e, c] : p.terms()) {
      Polynomial mono = Polynomial::constant(static_cast<std::size_t>(theory.rank), c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        LatticeVector row;
        for (std::size_t k = 0; k < embedding.cols(); ++k) {
          row.push_back(to_int64(embedding(i, k)));
        }
        mono *= Polynomial::from_linear_form(LinearForm(row)).pow(static_cast<unsigned>(e[i]));
      }
      restricted += mono;
    }
    out += CoulombElement::term(*coords, restricted);
  }
  return out;
}

Reduction reduce_multiplicative(const TorusTheory &t) {
  t.validate();
  std::vector<LatticeVector> rows;
  for (const auto &b : t.multiplicative_weights) {
    rows.push_back(b.coeffs);
  }
  auto kernel = integer_kernel(IntegerMatrix::from_rows(rows, static_cast<std::size_t>(t.rank)));

  Reduction red;
  red.theory.rank = static_cast<int>(kernel.size());
  red.embedding = IntegerMatrix(static_cast<std::size_t>(t.rank), kernel.size());
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    for (std::size_t i = 0; i < kernel[k].size(); ++i) {
      red.embedding(i, k) = kernel[k][i];
    }
  }
  for (const auto &a : t.linear_weights) {
    LatticeVector restricted;
    restricted.reserve(kernel.size());
    for (const auto &basis_vector : kernel) {
      restricted.push_back(a.pair(basis_vector));
    }
    red.theory.linear_weights.emplace_back(std::move(restricted));
  }
  return red;
}

int effective_rank(const TorusTheory &t) { return reduce_multiplicative(t).theory.rank; }

// -------------------------------------------------------------- presentation

std::string_view to_string(VarietyTag tag) {
  switch (tag) {
  case VarietyTag::torus_cotangent: return "torus_cotangent";
  case VarietyTag::affine_plane: return "affine_plane";
  case VarietyTag::type_A_singularity: return "type_A_singularity";
  case VarietyTag::point: return "point";
  case VarietyTag::unclassified: return "unclassified";
  }
  return "unclassified";
}

std::pair<VarietyTag, int> classify_rank1(const Polynomial &rhs) {
  auto mono = rhs.as_scaled_monomial();
  if (!mono || mono->second.size() != 1) {
    return {VarietyTag::unclassified, 0};
  }
  int power = mono->second[0];
  if (power == 0) return {VarietyTag::torus_cotangent, 0};
  if (power == 1) return {VarietyTag::affine_plane, 0};
  return {VarietyTag::type_A_singularity, power - 1};
}

std::string RingPresentation::tag_text() const {
  switch (tag) {
  case VarietyTag::torus_cotangent: return "[T^*(C^x)]";
  case VarietyTag::affine_plane: return "[C^2]";
  case VarietyTag::type_A_singularity: return "[A_" + std::to_string(singularity_index) + " singularity]";
  case VarietyTag::point: return "[point]";
  case VarietyTag::unclassified: return "[unclassified]";
  }
  return "[unclassified]";
}

std::string RingPresentation::relation_text() const {
  if (tag == VarietyTag::point) {
    return "point";
  }
  if (relations.empty()) {
    return tag_text();
  }
  std::vector<std::string> names;
  for (const auto &g : generators) {
    names.push_back(g.name);
  }
  std::string out;
  for (const auto &rel : relations) {
    if (!out.empty()) out += ", ";
    out += rel.lhs.to_string(names) + " = " + rel.rhs.to_string(names);
  }
  return out + "  " + tag_text();
}

std::string RingPresentation::to_string() const {
  if (generators.empty()) {
    return "C  " + tag_text();
  }
  std::string out = "C[";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators[i].name;
  }
  out += "]";
  if (relations.empty()) {
    return out + "  " + tag_text();
  }
  std::vector<std::string> names;
  for (const auto &g : generators) {
    names.push_back(g.name);
  }
  out += " / (";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (i > 0) out += ", ";
    out += relations[i].lhs.to_string(names) + " = " + relations[i].rhs.to_string(names);
  }
  return out + ")  " + tag_text();
}

RingPresentation present_rank1(const TorusTheory &t) {
  Reduction red = reduce_multiplicative(t);
  const TorusTheory &r = red.theory;
  RingPresentation pres;
  if (r.rank == 0) {
    pres.tag = VarietyTag::point;
    return pres;
  }
  if (r.rank >= 2) {
    throw Error(Errc::rank_too_high, "effective rank " + std::to_string(r.rank) +
                                         " has no built-in presentation; use the structure-constant table");
  }

  std::vector<std::pair<LinearForm, unsigned>> factors;
  std::int64_t degree2 = 0;
  for (const auto &a : r.linear_weights) {
    auto magnitude = static_cast<unsigned>(std::abs(a.coeffs[0]));
    factors.emplace_back(a, magnitude);
    degree2 += magnitude;
  }
  Polynomial rhs_w = eval_product(1, factors);

  // Generators w, x = r'_1, y = r'_{-1}.
  pres.generators = {{"w", 2}, {"x", degree2}, {"y", degree2}};
  Polynomial rhs(3);
  for (const auto &[e, c] : rhs_w.terms()) {
    rhs += Polynomial::monomial(c, {e[0], 0, 0});
  }
  pres.relations.push_back({Polynomial::monomial(1, {0, 1, 1}), rhs});
  auto [tag, index] = classify_rank1(rhs_w);
  pres.tag = tag;
  pres.singularity_index = index;
  return pres;
}

SpaceDescriptor sdual_torus(const TorusTheory &t) {
  Reduction red = reduce_multiplicative(t);
  const int r = red.theory.rank;
  SpaceDescriptor m;
  m.theory = t;
  m.left_group = GroupDescriptor::torus(r);
  m.n = r;
  m.dim = 2 * std::int64_t{r};
  if (r == 0) {
    m.kind = SpaceKind::point;
    return m;
  }
  if (r == 1) {
    RingPresentation pres = present_rank1(t);
    switch (pres.tag) {
    case VarietyTag::torus_cotangent:
      m.kind = SpaceKind::torus_cotangent;
      break;
    case VarietyTag::affine_plane:
      m.kind = SpaceKind::affine_plane;
      break;
    case VarietyTag::type_A_singularity:
      m.kind = SpaceKind::type_A_singularity;
      m.n = pres.singularity_index;
      break;
    default:
      m.kind = SpaceKind::coulomb_branch;
      break;
    }
    return m;
  }
  bool no_matter = std::all_of(red.theory.linear_weights.begin(), red.theory.linear_weights.end(),
                               [](const LinearForm &a) { return a.is_zero(); });
  m.kind = no_matter ? SpaceKind::torus_cotangent : SpaceKind::coulomb_branch;
  return m;
}

} // namespace sdualkit
