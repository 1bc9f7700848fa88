#pragma once

// Exact integer linear algebra and multivariate polynomials over Z.
// Nothing here touches floating point.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sdualkit {

using Integer = boost::multiprecision::cpp_int;

/// An integer lattice vector (cocharacter, kernel basis vector, ...).
using LatticeVector = std::vector<std::int64_t>;

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// A weight a, i.e. a linear form on the cocharacter lattice. Pairing with a
/// cocharacter is the integer dot product.
struct LinearForm {
  LatticeVector coeffs;

  LinearForm() = default;
  explicit LinearForm(LatticeVector c) : coeffs(std::move(c)) {}
  LinearForm(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  std::size_t rank() const { return coeffs.size(); }
  std::int64_t pair(std::span<const std::int64_t> cocharacter) const;
  bool is_zero() const;

  friend bool operator==(const LinearForm &, const LinearForm &) = default;
  friend auto operator<=>(const LinearForm &, const LinearForm &) = default;
};

/// Polynomial in `nvars` commuting variables with Integer coefficients.
/// Terms are keyed by dense exponent vectors; zero coefficients are never stored.
class Polynomial {
public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Integer>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Integer &c);
  static Polynomial one(std::size_t nvars) { return constant(nvars, 1); }
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Integer &c, Exponent e);
  /// a(w) = sum_i a_i w_i.
  static Polynomial from_linear_form(const LinearForm &a);

  std::size_t nvars() const { return nvars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the given monomial (0 when absent).
  Integer coefficient(const Exponent &e) const;

  /// Total degree of the homogeneous polynomial; nullopt for zero or
  /// inhomogeneous input.
  std::optional<int> homogeneous_degree() const;

  /// If the polynomial is c * w^e, returns (c, e).
  std::optional<std::pair<Integer, Exponent>> as_scaled_monomial() const;

  Polynomial pow(unsigned exponent) const;

  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  Polynomial &operator*=(const Polynomial &o);
  Polynomial &operator*=(const Integer &c);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  friend Polynomial operator*(Polynomial a, const Integer &c) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Renders with the given variable names, highest total degree first:
  /// `4*w^2`, `w1*w2 - 3`, `1`, `0`.
  std::string to_string(std::span<const std::string> names) const;
  /// Default names: `w` for one variable, `w1..wr` otherwise.
  std::string to_string() const;

private:
  void check_same(const Polynomial &o) const;
  void add_term(const Exponent &e, const Integer &c);

  std::size_t nvars_;
  TermMap terms_;
};

/// Dense rectangular integer matrix, row-major.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws invalid_argument for ragged input. `cols` is needed for an empty row list.
  static IntegerMatrix from_rows(const std::vector<LatticeVector> &rows, std::size_t cols);
  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>> &rows, std::size_t cols);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> apply(std::span<const std::int64_t> v) const;
  IntegerMatrix transpose() const;

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`:
/// nonzero rows only, positive pivots, entries above each pivot reduced
/// into [0, pivot). Unique for a given lattice.
std::vector<std::vector<Integer>> hermite_rows(const IntegerMatrix &m);

std::size_t matrix_rank(const IntegerMatrix &m);

/// Basis of the full integer kernel lattice {v : m v = 0}, in Hermite
/// normal form (hence deterministic; each vector primitive).
std::vector<LatticeVector> integer_kernel(const IntegerMatrix &m);

/// Coordinates of `v` in a basis returned by integer_kernel, or nullopt when
/// v is not in the lattice spanned by the basis.
std::optional<LatticeVector> lattice_coordinates(std::span<const LatticeVector> hermite_basis,
                                                 std::span<const std::int64_t> v);

/// Expanded product prod_j a_j(w)^{e_j} in `rank` variables.
/// Throws rank_mismatch if some form has a different length.
Polynomial eval_product(std::size_t rank,
                        std::span<const std::pair<LinearForm, unsigned>> forms);

std::int64_t to_int64(const Integer &x);

} // namespace sdualkit
