#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "field.hpp"

namespace kzk {

template <class F>
struct Entry {
  std::size_t col;
  typename F::value_type val;
};

// Sparse vector: entries sorted by strictly increasing column, no stored zeros.
template <class F>
using SparseRow = std::vector<Entry<F>>;

// y += a * x
template <class F>
void axpy(const F& field, SparseRow<F>& y, const typename F::value_type& a, const SparseRow<F>& x);

template <class F>
SparseRow<F> scaled(const F& field, const SparseRow<F>& x, const typename F::value_type& a);

template <class F>
bool rows_equal(const F& field, const SparseRow<F>& a, const SparseRow<F>& b);

template <class F>
SparseRow<F> from_dense(const F& field, std::span<const typename F::value_type> dense);

template <class F>
std::vector<typename F::value_type> to_dense(const F& field, const SparseRow<F>& row, std::size_t n);

// Row-major sparse matrix acting on column vectors: column j is the image of basis vector j.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(const F& field, std::size_t n);
  static Matrix from_rows(std::size_t cols, std::vector<SparseRow<F>> rows);
  static Matrix from_columns(std::size_t rows, const std::vector<SparseRow<F>>& columns);
  static Matrix from_dense(const F& field, std::size_t rows, std::size_t cols,
                           std::span<const typename F::value_type> row_major);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseRow<F>& row(std::size_t i) const { return data_[i]; }
  SparseRow<F>& mutable_row(std::size_t i) { return data_[i]; }
  const std::vector<SparseRow<F>>& row_data() const { return data_; }

  typename F::value_type at(const F& field, std::size_t i, std::size_t j) const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  Matrix transposed() const;
  SparseRow<F> apply(const F& field, const SparseRow<F>& x) const;
  bool equals(const F& field, const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow<F>> data_;
};

template <class F>
Matrix<F> multiply(const F& field, const Matrix<F>& a, const Matrix<F>& b);

template <class F>
Matrix<F> add(const F& field, const Matrix<F>& a, const Matrix<F>& b);

template <class F>
Matrix<F> kronecker(const F& field, const Matrix<F>& a, const Matrix<F>& b);

template <class F>
std::size_t rank(const F& field, const Matrix<F>& m);

template <class F>
std::optional<Matrix<F>> inverse(const F& field, const Matrix<F>& m);

template <class F>
class RrefBuilder;

// A subspace of F^ambient held as its reduced row-echelon basis. Two subspaces
// are equal iff their bases agree entrywise.
template <class F>
class Subspace {
 public:
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(const F& field, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<SparseRow<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix<F> basis_matrix() const { return Matrix<F>::from_rows(ambient_, basis_); }

  bool contains(const F& field, const SparseRow<F>& v) const;
  // Expansion of v over basis(); nullopt when v is not in the subspace.
  std::optional<SparseRow<F>> try_coordinates(const F& field, const SparseRow<F>& v) const;
  // Throws kMembership when v is not in the subspace.
  SparseRow<F> coordinates(const F& field, const SparseRow<F>& v) const;

  bool equals(const F& field, const Subspace& other) const;

 private:
  template <class G>
  friend class RrefBuilder;

  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient_;
  std::vector<SparseRow<F>> basis_;
  std::vector<std::size_t> pivots_;
};

// Incremental fully reduced row echelon form. Rows are kept reduced against each
// other at all times, so insertion is a single pass over the new vector.
template <class F>
class RrefBuilder {
 public:
  RrefBuilder(const F& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  // Returns true when v was independent of the rows already present.
  bool insert(SparseRow<F> v);
  // Seeds the builder with rows that already form a fully reduced echelon set.
  void adopt_reduced(std::vector<SparseRow<F>> rows);
  std::size_t rank() const { return rows_.size(); }
  Subspace<F> finish() &&;

 private:
  std::ptrdiff_t row_of_pivot(std::size_t col) const;

  F field_;
  std::size_t ambient_;
  std::vector<SparseRow<F>> rows_;
  std::vector<std::size_t> pivots_;
  // pivot column -> row index, kept sorted by column
  std::vector<std::pair<std::size_t, std::size_t>> pivot_index_;
};

template <class F>
Subspace<F> rref(const F& field, const Matrix<F>& m);

template <class F>
Subspace<F> span(const F& field, std::size_t ambient, const std::vector<SparseRow<F>>& rows);

template <class F>
Subspace<F> kernel(const F& field, const Matrix<F>& m);

template <class F>
Subspace<F> sum(const F& field, const Subspace<F>& a, const Subspace<F>& b);

template <class F>
Subspace<F> intersect(const F& field, const Subspace<F>& a, const Subspace<F>& b);

// Image of s under m (m.cols() == s.ambient_dim()).
template <class F>
Subspace<F> image(const F& field, const Matrix<F>& m, const Subspace<F>& s);

}  // namespace kzk
