#include "sdualkit/exactalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "sdualkit/error.hpp"

namespace sdualkit {

namespace {

using Row = std::vector<Integer>;

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    q -= 1;
  }
  return q;
}

void axpy(Row &target, const Integer &q, const Row &source) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (source[j] != 0) {
      target[j] -= q * source[j];
    }
  }
}

// Unimodular row reduction over Z restricted to the first `pivot_cols`
// columns. Returns the number of pivot rows; rows from that index onward are
// zero on the pivot columns. With `reduce_above` the result is in Hermite
// normal form on those columns.
std::size_t echelonize(std::vector<Row> &rows, std::size_t pivot_cols, bool reduce_above) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < pivot_cols && pivot_row < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) {
          best = i;
        }
      }
      if (best == rows.size()) {
        break;
      }
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][c] != 0) {
          Integer q = rows[i][c] / rows[pivot_row][c];
          axpy(rows[i], q, rows[pivot_row]);
          if (rows[i][c] != 0) {
            clean = false;
          }
        }
      }
      if (clean) {
        break;
      }
    }
    if (rows[pivot_row][c] == 0) {
      continue;
    }
    if (rows[pivot_row][c] < 0) {
      for (auto &x : rows[pivot_row]) {
        x = -x;
      }
    }
    if (reduce_above) {
      for (std::size_t i = 0; i < pivot_row; ++i) {
        Integer q = floor_div(rows[i][c], rows[pivot_row][c]);
        if (q != 0) {
          axpy(rows[i], q, rows[pivot_row]);
        }
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::vector<Row> matrix_rows(const IntegerMatrix &m) {
  std::vector<Row> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
  }
  return rows;
}

} // namespace

std::int64_t to_int64(const Integer &x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::overflow, "integer does not fit in 64 bits: " + x.str());
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::rank_mismatch, "dot product of vectors of length " + std::to_string(a.size()) +
                                         " and " + std::to_string(b.size()));
  }
  return std::inner_product(a.begin(), a.end(), b.begin(), std::int64_t{0});
}

std::int64_t LinearForm::pair(std::span<const std::int64_t> cocharacter) const {
  return dot(coeffs, cocharacter);
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x == 0; });
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Integer &c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw Error(Errc::invalid_argument, "variable index out of range");
  }
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(1, std::move(e));
}

Polynomial Polynomial::monomial(const Integer &c, Exponent e) {
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
    throw Error(Errc::invalid_argument, "negative exponent");
  }
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::from_linear_form(const LinearForm &a) {
  Polynomial p(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a.coeffs[i] != 0) {
      Exponent e(a.rank(), 0);
      e[i] = 1;
      p.add_term(e, a.coeffs[i]);
    }
  }
  return p;
}

Integer Polynomial::coefficient(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto &[e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (degree && *degree != d) {
      return std::nullopt;
    }
    degree = d;
  }
  return degree;
}

std::optional<std::pair<Integer, Polynomial::Exponent>> Polynomial::as_scaled_monomial() const {
  if (terms_.size() != 1) {
    return std::nullopt;
  }
  const auto &[e, c] = *terms_.begin();
  return std::make_pair(c, e);
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = one(nvars_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

void Polynomial::check_same(const Polynomial &o) const {
  if (o.nvars_ != nvars_) {
    throw Error(Errc::rank_mismatch, "polynomials in " + std::to_string(nvars_) + " and " +
                                         std::to_string(o.nvars_) + " variables");
  }
}

void Polynomial::add_term(const Exponent &e, const Integer &c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  check_same(o);
  for (const auto &[e, c] : o.terms_) {
    add_term(e, c);
  }
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  check_same(o);
  for (const auto &[e, c] : o.terms_) {
    add_term(e, -c);
  }
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  a.check_same(b);
  Polynomial out(a.nvars_);
  Polynomial::Exponent e(a.nvars_);
  for (const auto &[ea, ca] : a.terms_) {
    for (const auto &[eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial &Polynomial::operator*=(const Polynomial &o) {
  *this = *this * o;
  return *this;
}

Polynomial &Polynomial::operator*=(const Integer &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, coeff] : terms_) {
    coeff *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  return p *= Integer(-1);
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) {
    throw Error(Errc::rank_mismatch, "wrong number of variable names");
  }
  if (terms_.empty()) {
    return "0";
  }
  std::vector<std::pair<Exponent, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto &x, const auto &y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) {
      return dx > dy;
    }
    return x.first > y.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, c] : ordered) {
    bool negative = c < 0;
    Integer magnitude = negative ? Integer(-c) : c;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (!mono.empty()) {
        mono += "*";
      }
      mono += names[i];
      if (e[i] > 1) {
        mono += "^" + std::to_string(e[i]);
      }
    }
    if (mono.empty()) {
      out << magnitude.str();
    } else if (magnitude == 1) {
      out << mono;
    } else {
      out << magnitude.str() << "*" << mono;
    }
  }
  return out.str();
}

std::string Polynomial::to_string() const {
  std::vector<std::string> names;
  if (nvars_ == 1) {
    names.emplace_back("w");
  } else {
    for (std::size_t i = 0; i < nvars_; ++i) {
      names.push_back("w" + std::to_string(i + 1));
    }
  }
  return to_string(names);
}

// ------------------------------------------------------------- IntegerMatrix

IntegerMatrix IntegerMatrix::from_rows(const std::vector<LatticeVector> &rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(Errc::rank_mismatch, "ragged matrix row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>> &rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(Errc::rank_mismatch, "ragged matrix row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

std::vector<Integer> IntegerMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntegerMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) {
    throw Error(Errc::rank_mismatch, "matrix-vector size mismatch");
  }
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t(j, i) = (*this)(i, j);
    }
  }
  return t;
}

// ------------------------------------------------------------------ lattices

std::vector<std::vector<Integer>> hermite_rows(const IntegerMatrix &m) {
  auto rows = matrix_rows(m);
  std::size_t rank = echelonize(rows, m.cols(), true);
  rows.resize(rank);
  return rows;
}

std::size_t matrix_rank(const IntegerMatrix &m) {
  auto rows = matrix_rows(m);
  return echelonize(rows, m.cols(), false);
}

std::vector<LatticeVector> integer_kernel(const IntegerMatrix &m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  // Row j of the augmented matrix is [column j of m | e_j]. Unimodular row
  // operations that clear the left block leave a kernel basis on the right.
  std::vector<Row> aug(c, Row(r + c));
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      aug[j][i] = m(i, j);
    }
    aug[j][r + j] = 1;
  }
  std::size_t rank = echelonize(aug, r, false);

  IntegerMatrix tails(c - rank, c);
  for (std::size_t k = rank; k < c; ++k) {
    for (std::size_t j = 0; j < c; ++j) {
      tails(k - rank, j) = aug[k][r + j];
    }
  }
  std::vector<LatticeVector> basis;
  for (const auto &row : hermite_rows(tails)) {
    LatticeVector v;
    v.reserve(row.size());
    for (const auto &x : row) {
      v.push_back(to_int64(x));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LatticeVector> lattice_coordinates(std::span<const LatticeVector> hermite_basis,
                                                 std::span<const std::int64_t> v) {
  std::vector<Integer> residual(v.begin(), v.end());
  LatticeVector coords;
  coords.reserve(hermite_basis.size());
  std::size_t scanned = 0;
  for (const auto &row : hermite_basis) {
    if (row.size() != v.size()) {
      throw Error(Errc::rank_mismatch, "basis vector length differs from target");
    }
    auto pivot = static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; }) - row.begin());
    if (pivot == row.size()) {
      throw Error(Errc::invalid_argument, "zero vector in lattice basis");
    }
    for (; scanned < pivot; ++scanned) {
      if (residual[scanned] != 0) {
        return std::nullopt;
      }
    }
    if (residual[pivot] % row[pivot] != 0) {
      return std::nullopt;
    }
    Integer q = residual[pivot] / row[pivot];
    for (std::size_t j = 0; j < row.size(); ++j) {
      residual[j] -= q * row[j];
    }
    coords.push_back(to_int64(q));
  }
  for (const auto &x : residual) {
    if (x != 0) {
      return std::nullopt;
    }
  }
  return coords;
}

Polynomial eval_product(std::size_t rank, std::span<const std::pair<LinearForm, unsigned>> forms) {
  Polynomial out = Polynomial::one(rank);
  for (const auto &[form, exponent] : forms) {
    if (form.rank() != rank) {
      throw Error(Errc::rank_mismatch, "linear form of rank " + std::to_string(form.rank()) +
                                           " in a rank " + std::to_string(rank) + " product");
    }
    if (exponent == 0) {
      continue;
    }
    out *= Polynomial::from_linear_form(form).pow(exponent);
  }
  return out;
}

} // namespace sdualkit
