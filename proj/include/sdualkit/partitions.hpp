#pragma once

// Partition and nilpotent-orbit combinatorics for gl_n.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sdualkit {

/// Integer partition, canonicalized on construction (sorted weakly
/// decreasing, zero parts dropped). Negative parts are rejected.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses `[3,1,1]`, `3,1,1` or `[]`.
  static Partition parse(std::string_view text);

  const std::vector<int> &parts() const { return parts_; }
  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition &, const Partition &) = default;
  friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in reverse lexicographic order starting from (n).
std::vector<Partition> partitions_of(int n);

/// Dominance order: a >= b iff every partial sum of a is >= that of b.
/// Both must partition the same n.
bool dominates(const Partition &a, const Partition &b);

Partition transpose(const Partition &lambda);

/// dim of the centralizer of a nilpotent of Jordan type lambda, which is
/// also the dimension of its Slodowy slice: sum_i (lambda^t_i)^2.
std::int64_t centralizer_dim(const Partition &lambda);

/// n^2 - centralizer_dim.
std::int64_t orbit_dim(const Partition &lambda);

/// rank of x^k for x nilpotent of Jordan type lambda.
std::int64_t rank_profile(const Partition &lambda, int k);

/// The hook (a, 1^b).
Partition hook(int a, int b);

/// Exact ranks of J^k, k = 0..n, for the integer Jordan matrix J of type
/// lambda. Independent of rank_profile; n <= 64.
std::map<int, std::int64_t> numeric_jordan_oracle(const Partition &lambda);

enum class OrbitKind { orbit_closure, slice, group_times_slice, nilpotent_cone };

std::string_view to_string(OrbitKind kind);

struct OrbitDescriptor {
  int n = 0;
  Partition jordan_type;
  OrbitKind kind = OrbitKind::orbit_closure;

  /// Orbit closure, promoted to nilpotent_cone when jordan_type == (n).
  static OrbitDescriptor closure(const Partition &lambda);

  bool is_nilpotent_cone() const;
  std::int64_t dim() const;

  friend bool operator==(const OrbitDescriptor &, const OrbitDescriptor &) = default;
};

/// Jordan type of the generic element of the orbit closure realized by the
/// chain of vector spaces C^{v_0} -> C^{v_1} -> ... -> C^{v_n}: the
/// dominance-maximal partition mu of v_n with rank(x^k) <= v_{n-k}.
/// Throws inconsistent_chain when v_0 != 0, an entry is negative, or no
/// feasible partition exists; invalid_argument past desk scale.
OrbitDescriptor chain_to_orbit(const std::vector<int> &dims);

/// Largest v_n accepted by the brute-force path of chain_to_orbit.
inline constexpr int kChainBruteForceLimit = 30;

/// True when the chain's dimension jumps v_k - v_{k-1} are nonnegative and
/// weakly increasing in k, which is when the closed form applies.
bool chain_is_convex(const std::vector<int> &dims);

} // namespace sdualkit
