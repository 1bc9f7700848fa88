#pragma once

// Coulomb-branch rings of abelian gauge theories. The ring is spanned over
// C[w_1..w_r] by monopole classes r'_lambda, one per cocharacter, with
//
//   r'_lambda * r'_mu = prod_j a_j(w)^{d_j} * r'_{lambda+mu},
//   d_j = (|<a_j,lambda>| + |<a_j,mu>| - |<a_j,lambda+mu>|) / 2.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdualkit/descriptors.hpp"
#include "sdualkit/exactalg.hpp"
#include "sdualkit/torus_theory.hpp"

namespace sdualkit {

/// Finitely supported map cocharacter -> polynomial in the equivariant
/// parameters. The key is the pi_1(G) grading of the term.
class CoulombElement {
public:
  using Support = std::map<Cocharacter, Polynomial>;

  explicit CoulombElement(int rank = 0) : rank_(rank) {}

  /// r'_lambda.
  static CoulombElement basis(const Cocharacter &lambda);
  /// p * r'_lambda.
  static CoulombElement term(const Cocharacter &lambda, Polynomial coeff);
  static CoulombElement one(int rank) { return basis(Cocharacter(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return rank_; }
  const Support &support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  /// Coefficient of r'_lambda (zero polynomial when absent).
  Polynomial coefficient(const Cocharacter &lambda) const;

  CoulombElement &operator+=(const CoulombElement &o);
  friend CoulombElement operator+(CoulombElement a, const CoulombElement &b) { return a += b; }

  /// `w^3*r'(0)`, `r'(1,0) + 2*w1*r'(0,1)`.
  std::string to_string() const;

  friend bool operator==(const CoulombElement &, const CoulombElement &) = default;

private:
  void add(const Cocharacter &lambda, const Polynomial &p);

  int rank_;
  Support support_;
};

/// Twice the monopole degree of r'_lambda: sum_j |<a_j, lambda>|.
std::int64_t monopole_degree2(const TorusTheory &t, const Cocharacter &lambda);

/// Twice the degree of a homogeneous element (w-variables have degree 1),
/// or nullopt if some term is inhomogeneous or degrees differ.
std::optional<std::int64_t> homogeneous_degree2(const TorusTheory &t, const CoulombElement &x);

/// d_j for each linear weight.
std::vector<unsigned> structure_exponents(const TorusTheory &t, const Cocharacter &lambda,
                                          const Cocharacter &mu);

/// prod_j a_j(w)^{d_j}.
Polynomial structure_constant(const TorusTheory &t, const Cocharacter &lambda, const Cocharacter &mu);

/// Convolution product. Every cocharacter in either support must pair to zero
/// with all multiplicative weights (reduce first otherwise).
CoulombElement multiply(const TorusTheory &t, const CoulombElement &x, const CoulombElement &y);

/// Structure constants for all pairs in the box |lambda|_inf <= cutoff,
/// keyed by (lambda, mu).
std::map<std::pair<Cocharacter, Cocharacter>, Polynomial>
structure_table(const TorusTheory &t, int cutoff);

/// All cocharacters with |lambda|_inf <= cutoff, lexicographic.
std::vector<Cocharacter> cocharacter_box(int rank, int cutoff);

struct Reduction {
  TorusTheory theory;
  /// rank x rank' matrix whose columns span L' = {lambda : <b_k, lambda> = 0}.
  IntegerMatrix embedding;

  /// Coordinates of lambda in L', or nullopt when lambda is not in L'.
  std::optional<Cocharacter> restrict_cocharacter(const Cocharacter &lambda) const;
  Cocharacter embed(const Cocharacter &coords) const;
  /// Classes outside L' are zero; the rest are re-keyed in L' coordinates.
  CoulombElement restrict_element(const CoulombElement &x) const;
};

/// Removes multiplicative directions by passing to the sublattice they
/// annihilate and restricting the linear weights to it.
Reduction reduce_multiplicative(const TorusTheory &t);

enum class VarietyTag { torus_cotangent, affine_plane, type_A_singularity, point, unclassified };

std::string_view to_string(VarietyTag tag);

struct Generator {
  std::string name;
  /// Twice the degree.
  std::int64_t degree2 = 0;
  friend bool operator==(const Generator &, const Generator &) = default;
};

/// lhs = rhs, both polynomials in the generators.
struct Relation {
  Polynomial lhs;
  Polynomial rhs;
  friend bool operator==(const Relation &, const Relation &) = default;
};

struct RingPresentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  VarietyTag tag = VarietyTag::unclassified;
  /// l for an A_l singularity.
  int singularity_index = 0;

  /// `x*y = w^3  [A_2 singularity]`; just `point` for the point.
  std::string relation_text() const;
  /// `C[w, x, y] / (x*y = w^3)  [A_2 singularity]`; `C  [point]` for the point.
  std::string to_string() const;
  std::string tag_text() const;

  friend bool operator==(const RingPresentation &, const RingPresentation &) = default;
};

/// Classifies the rank-one relation x*y = rhs(w) up to unit scalars.
std::pair<VarietyTag, int> classify_rank1(const Polynomial &rhs);

/// Presentation C[w, x, y]/(x*y = prod_j a_j(w)^{|a_j|}) with x = r'_1,
/// y = r'_{-1}, after reducing multiplicative directions. Effective rank 0
/// gives the point; effective rank >= 2 throws rank_too_high.
RingPresentation present_rank1(const TorusTheory &t);

/// Effective rank after reduce_multiplicative.
int effective_rank(const TorusTheory &t);

/// The Coulomb branch as the S-dual space, with the dual torus acting through
/// the pi_1 grading. Dimension is 2 * effective rank.
SpaceDescriptor sdual_torus(const TorusTheory &t);

} // namespace sdualkit
