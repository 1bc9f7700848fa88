#pragma once

// Linear brane diagrams: NS5 (o) and D5 (x) fivebranes separated by
// segments carrying D3 multiplicities.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sdualkit/descriptors.hpp"

namespace sdualkit {

enum class Brane : char { ns5 = 'o', d5 = 'x' };

inline Brane exchanged(Brane b) { return b == Brane::ns5 ? Brane::d5 : Brane::ns5; }

/// branes[i] sits between segments dims[i] and dims[i+1]. A diagram is
/// closed when both outer segments are 0; operations that need the open
/// ends (expected_space on a single block or a chain with a GL(v_n) end)
/// accept open diagrams too.
struct BraneDiagram {
  std::vector<Brane> branes;
  std::vector<int> dims{0};

  BraneDiagram() = default;
  BraneDiagram(std::vector<Brane> b, std::vector<int> d);

  /// Throws invalid_argument unless dims.size() == branes.size() + 1 and all
  /// dims are nonnegative.
  void validate() const;
  bool closed() const { return dims.front() == 0 && dims.back() == 0; }
  std::size_t size() const { return branes.size(); }

  /// `0 o 1 x 1 x 1 o 0`.
  std::string to_string() const;
  /// Inverse of to_string; whitespace-insensitive between tokens.
  static BraneDiagram parse(std::string_view text);

  friend bool operator==(const BraneDiagram &, const BraneDiagram &) = default;
};

/// Gauge dimensions v_1..v_l with framings w_1..w_l of an A_l quiver.
struct QuiverData {
  std::vector<int> v;
  std::vector<int> w;

  void validate() const;
  std::size_t length() const { return v.size(); }
  friend bool operator==(const QuiverData &, const QuiverData &) = default;
};

struct LinkingData {
  /// Sorted, so equality is multiset equality.
  std::vector<int> ns5;
  std::vector<int> d5;
  friend bool operator==(const LinkingData &, const LinkingData &) = default;
};

/// o x^{w_1} o x^{w_2} ... o with segments 0, v_1 (across the x block), v_2, ..., 0.
BraneDiagram quiver_to_diagram(const QuiverData &q);

/// The same segments with the roles of the branes exchanged:
/// x o^{w_1} x o^{w_2} ... x. Built directly, without going through sdual.
BraneDiagram quiver_to_dual_diagram(const QuiverData &q);

/// Exchanges every NS5 with a D5 and vice versa; dims unchanged.
BraneDiagram sdual(const BraneDiagram &d);

/// Joins two diagrams along d1's last and d2's first segment, which must agree.
BraneDiagram concat(const BraneDiagram &d1, const BraneDiagram &d2);

/// Hanany-Witten move on branes i and i+1 (of different types): swaps them
/// and sets the middle segment to d_left + d_right + 1 - d_middle. Throws
/// invalid_index, same_type_pair, or non_admissible_move if the new segment
/// would be negative.
BraneDiagram hw_move(const BraneDiagram &d, std::size_t i);

/// NS5 at p: (right dim - left dim) + #D5 to its left.
/// D5 at p:  (left dim - right dim) + #NS5 to its right.
LinkingData linking_numbers(const BraneDiagram &d);

/// Hamiltonian space of a recognized diagram: a run of NS5 branes starting
/// from an empty segment (orbit closure via chain_to_orbit) or a single
/// block M_o / M_x. Throws unsupported_diagram otherwise.
SpaceDescriptor expected_space(const BraneDiagram &d);

/// Space of each brane as a two-sided block, left to right.
std::vector<SpaceDescriptor> diagram_blocks(const BraneDiagram &d);

} // namespace sdualkit
