#include "exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace kzk {

template <class F>
void axpy(const F& field, SparseRow<F>& y, const typename F::value_type& a, const SparseRow<F>& x) {
  if (field.is_zero(a) || x.empty()) return;
  SparseRow<F> out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->col < xi->col)) {
      out.push_back(std::move(*yi));
      ++yi;
    } else if (yi == y.end() || xi->col < yi->col) {
      out.push_back({xi->col, field.mul(a, xi->val)});
      ++xi;
    } else {
      auto v = field.add(yi->val, field.mul(a, xi->val));
      if (!field.is_zero(v)) out.push_back({yi->col, std::move(v)});
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

template <class F>
SparseRow<F> scaled(const F& field, const SparseRow<F>& x, const typename F::value_type& a) {
  SparseRow<F> out;
  if (field.is_zero(a)) return out;
  out.reserve(x.size());
  for (const auto& e : x) out.push_back({e.col, field.mul(a, e.val)});
  return out;
}

template <class F>
bool rows_equal(const F& field, const SparseRow<F>& a, const SparseRow<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].col != b[k].col || !field.equal(a[k].val, b[k].val)) return false;
  }
  return true;
}

template <class F>
SparseRow<F> from_dense(const F& field, std::span<const typename F::value_type> dense) {
  SparseRow<F> out;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (!field.is_zero(dense[j])) out.push_back({j, dense[j]});
  }
  return out;
}

template <class F>
std::vector<typename F::value_type> to_dense(const F& field, const SparseRow<F>& row, std::size_t n) {
  std::vector<typename F::value_type> out(n, field.zero());
  for (const auto& e : row) out.at(e.col) = e.val;
  return out;
}

// ---------------------------------------------------------------------------
// Matrix

template <class F>
Matrix<F> Matrix<F>::identity(const F& field, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, field.one()});
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_rows(std::size_t cols, std::vector<SparseRow<F>> rows) {
  Matrix m(rows.size(), cols);
  m.data_ = std::move(rows);
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_columns(std::size_t rows, const std::vector<SparseRow<F>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& e : columns[j]) m.data_.at(e.col).push_back({j, e.val});
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_dense(const F& field, std::size_t rows, std::size_t cols,
                                std::span<const typename F::value_type> row_major) {
  if (row_major.size() != rows * cols) {
    throw Error(ErrorCode::kDimension, "dense data does not match matrix shape");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    m.data_[i] = kzk::from_dense<F>(field, row_major.subspan(i * cols, cols));
  }
  return m;
}

template <class F>
typename F::value_type Matrix<F>::at(const F& field, std::size_t i, std::size_t j) const {
  const auto& r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry<F>& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->val;
  return field.zero();
}

template <class F>
std::size_t Matrix<F>::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

template <class F>
bool Matrix<F>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow<F>& r) { return r.empty(); });
}

template <class F>
Matrix<F> Matrix<F>::transposed() const {
  return from_columns(cols_, data_);
}

template <class F>
SparseRow<F> Matrix<F>::apply(const F& field, const SparseRow<F>& x) const {
  SparseRow<F> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& r = data_[i];
    auto acc = field.zero();
    auto ri = r.begin();
    auto xi = x.begin();
    while (ri != r.end() && xi != x.end()) {
      if (ri->col < xi->col) {
        ++ri;
      } else if (xi->col < ri->col) {
        ++xi;
      } else {
        acc = field.add(acc, field.mul(ri->val, xi->val));
        ++ri;
        ++xi;
      }
    }
    if (!field.is_zero(acc)) out.push_back({i, std::move(acc)});
  }
  return out;
}

template <class F>
bool Matrix<F>::equals(const F& field, const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!rows_equal(field, data_[i], other.data_[i])) return false;
  }
  return true;
}

template <class F>
Matrix<F> multiply(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimension, "matrix product shape mismatch");
  }
  Matrix<F> out(a.rows(), b.cols());
  std::vector<typename F::value_type> acc(b.cols(), field.zero());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cols.clear();
    for (const auto& ea : a.row(i)) {
      for (const auto& eb : b.row(ea.col)) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
          acc[eb.col] = field.mul(ea.val, eb.val);
        } else {
          acc[eb.col] = field.add(acc[eb.col], field.mul(ea.val, eb.val));
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& row = out.mutable_row(i);
    for (std::size_t c : cols) {
      if (!field.is_zero(acc[c])) row.push_back({c, acc[c]});
      touched[c] = 0;
    }
  }
  return out;
}

template <class F>
Matrix<F> add(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimension, "matrix sum shape mismatch");
  }
  Matrix<F> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(field, out.mutable_row(i), field.one(), b.row(i));
  return out;
}

template <class F>
Matrix<F> kronecker(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
      auto& row = out.mutable_row(i1 * b.rows() + i2);
      row.reserve(a.row(i1).size() * b.row(i2).size());
      for (const auto& ea : a.row(i1)) {
        for (const auto& eb : b.row(i2)) {
          row.push_back({ea.col * b.cols() + eb.col, field.mul(ea.val, eb.val)});
        }
      }
    }
  }
  return out;
}

template <class F>
std::size_t rank(const F& field, const Matrix<F>& m) {
  RrefBuilder<F> builder(field, m.cols());
  for (const auto& r : m.row_data()) builder.insert(r);
  return builder.rank();
}

template <class F>
std::optional<Matrix<F>> inverse(const F& field, const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  std::vector<SparseRow<F>> augmented;
  augmented.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseRow<F> r = m.row(i);
    r.push_back({n + i, field.one()});
    augmented.push_back(std::move(r));
  }
  Subspace<F> s = span(field, 2 * n, augmented);
  if (s.dim() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.pivots()[i] != i) return std::nullopt;
  }
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : s.basis()[i]) {
      if (e.col >= n) inv.mutable_row(i).push_back({e.col - n, e.val});
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

template <class F>
Subspace<F> Subspace<F>::full(const F& field, std::size_t ambient) {
  Subspace s(ambient);
  s.basis_.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back({{i, field.one()}});
    s.pivots_.push_back(i);
  }
  return s;
}

template <class F>
std::optional<SparseRow<F>> Subspace<F>::try_coordinates(const F& field, const SparseRow<F>& v) const {
  if (!v.empty() && v.back().col >= ambient_) {
    throw Error(ErrorCode::kDimension, "vector length exceeds ambient dimension");
  }
  SparseRow<F> coords;
  SparseRow<F> residual = v;
  for (const auto& e : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), e.col);
    if (it != pivots_.end() && *it == e.col) {
      std::size_t k = static_cast<std::size_t>(it - pivots_.begin());
      coords.push_back({k, e.val});
      axpy(field, residual, field.neg(e.val), basis_[k]);
    }
  }
  if (!residual.empty()) return std::nullopt;
  return coords;
}

template <class F>
bool Subspace<F>::contains(const F& field, const SparseRow<F>& v) const {
  return try_coordinates(field, v).has_value();
}

template <class F>
SparseRow<F> Subspace<F>::coordinates(const F& field, const SparseRow<F>& v) const {
  auto c = try_coordinates(field, v);
  if (!c) throw Error(ErrorCode::kMembership, "vector is not a member of the subspace");
  return *std::move(c);
}

template <class F>
bool Subspace<F>::equals(const F& field, const Subspace& other) const {
  if (ambient_ != other.ambient_ || basis_.size() != other.basis_.size()) return false;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!rows_equal(field, basis_[k], other.basis_[k])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// RrefBuilder

template <class F>
std::ptrdiff_t RrefBuilder<F>::row_of_pivot(std::size_t col) const {
  auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), col,
                             [](const auto& p, std::size_t c) { return p.first < c; });
  if (it != pivot_index_.end() && it->first == col) return static_cast<std::ptrdiff_t>(it->second);
  return -1;
}

template <class F>
bool RrefBuilder<F>::insert(SparseRow<F> v) {
  if (!v.empty() && v.back().col >= ambient_) {
    throw Error(ErrorCode::kDimension, "row length exceeds ambient dimension");
  }
  // Rows are mutually reduced, so subtracting one never disturbs another pivot
  // column and the original coefficients of v can be used directly.
  SparseRow<F> r = v;
  for (const auto& e : v) {
    auto k = row_of_pivot(e.col);
    if (k >= 0) axpy(field_, r, field_.neg(e.val), rows_[static_cast<std::size_t>(k)]);
  }
  if (r.empty()) return false;
  if (!field_.equal(r.front().val, field_.one())) r = scaled(field_, r, field_.inv(r.front().val));
  const std::size_t p = r.front().col;
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), p,
                               [](const Entry<F>& e, std::size_t c) { return e.col < c; });
    if (it != row.end() && it->col == p) {
      auto c = field_.neg(it->val);
      axpy(field_, row, c, r);
    }
  }
  auto pos = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), p,
                              [](const auto& q, std::size_t c) { return q.first < c; });
  pivot_index_.insert(pos, {p, rows_.size()});
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

template <class F>
void RrefBuilder<F>::adopt_reduced(std::vector<SparseRow<F>> rows) {
  for (auto& r : rows) {
    const std::size_t p = r.front().col;
    auto pos = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), p,
                                [](const auto& q, std::size_t c) { return q.first < c; });
    pivot_index_.insert(pos, {p, rows_.size()});
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
  }
}

template <class F>
Subspace<F> RrefBuilder<F>::finish() && {
  Subspace<F> s(ambient_);
  s.basis_.reserve(rows_.size());
  s.pivots_.reserve(rows_.size());
  for (const auto& [p, k] : pivot_index_) {
    s.basis_.push_back(std::move(rows_[k]));
    s.pivots_.push_back(p);
  }
  return s;
}

template <class F>
Subspace<F> rref(const F& field, const Matrix<F>& m) {
  return span(field, m.cols(), m.row_data());
}

template <class F>
Subspace<F> span(const F& field, std::size_t ambient, const std::vector<SparseRow<F>>& rows) {
  RrefBuilder<F> builder(field, ambient);
  for (const auto& r : rows) builder.insert(r);
  return std::move(builder).finish();
}

template <class F>
Subspace<F> kernel(const F& field, const Matrix<F>& m) {
  const std::size_t n = m.cols();
  Subspace<F> row_space = rref(field, m);
  const auto& pivots = row_space.pivots();
  std::vector<std::ptrdiff_t> free_slot(n, -1);
  std::size_t free_count = 0;
  {
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (k < pivots.size() && pivots[k] == c) {
        ++k;
      } else {
        free_slot[c] = static_cast<std::ptrdiff_t>(free_count++);
      }
    }
  }
  // Kernel vector for free column f: e_f - sum_k row_k[f] e_{pivot_k}.
  std::vector<SparseRow<F>> vecs(free_count);
  for (std::size_t k = 0; k < row_space.dim(); ++k) {
    for (const auto& e : row_space.basis()[k]) {
      if (e.col == pivots[k]) continue;
      vecs[static_cast<std::size_t>(free_slot[e.col])].push_back({pivots[k], field.neg(e.val)});
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (free_slot[c] >= 0) vecs[static_cast<std::size_t>(free_slot[c])].push_back({c, field.one()});
  }
  for (auto& v : vecs) {
    std::sort(v.begin(), v.end(), [](const Entry<F>& a, const Entry<F>& b) { return a.col < b.col; });
  }
  return span(field, n, vecs);
}

template <class F>
Subspace<F> sum(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::kDimension, "subspace sum: ambient dimension mismatch");
  }
  RrefBuilder<F> builder(field, a.ambient_dim());
  builder.adopt_reduced(a.basis());
  for (const auto& r : b.basis()) builder.insert(r);
  return std::move(builder).finish();
}

template <class F>
Subspace<F> intersect(const F& field, const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::kDimension, "subspace intersection: ambient dimension mismatch");
  }
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<F>::zero(n);
  if (a.dim() == n) return b;
  if (b.dim() == n) return a;
  // Zassenhaus-style: reduce the smaller basis modulo the larger one and tag
  // each row; tagged rows whose residual cancels are combinations lying in both.
  // Cost follows dim a and dim b, never the ambient dimension.
  const Subspace<F>& small = a.dim() <= b.dim() ? a : b;
  const Subspace<F>& large = a.dim() <= b.dim() ? b : a;
  const auto& pivots = large.pivots();
  RrefBuilder<F> builder(field, n + small.dim());
  for (std::size_t k = 0; k < small.dim(); ++k) {
    const SparseRow<F>& v = small.basis()[k];
    SparseRow<F> r = v;
    for (const auto& e : v) {
      auto it = std::lower_bound(pivots.begin(), pivots.end(), e.col);
      if (it != pivots.end() && *it == e.col) {
        axpy(field, r, field.neg(e.val), large.basis()[static_cast<std::size_t>(it - pivots.begin())]);
      }
    }
    r.push_back({n + k, field.one()});
    builder.insert(std::move(r));
  }
  const Subspace<F> tagged = std::move(builder).finish();
  std::vector<SparseRow<F>> common;
  for (const auto& row : tagged.basis()) {
    if (row.front().col < n) continue;
    SparseRow<F> v;
    for (const auto& e : row) axpy(field, v, e.val, small.basis()[e.col - n]);
    common.push_back(std::move(v));
  }
  return span(field, n, common);
}

template <class F>
Subspace<F> image(const F& field, const Matrix<F>& m, const Subspace<F>& s) {
  if (m.cols() != s.ambient_dim()) {
    throw Error(ErrorCode::kDimension, "image: matrix and subspace do not match");
  }
  RrefBuilder<F> builder(field, m.rows());
  for (const auto& r : s.basis()) builder.insert(m.apply(field, r));
  return std::move(builder).finish();
}

#define KZK_INSTANTIATE_EXACTLIN(F)                                                              \
  template void axpy<F>(const F&, SparseRow<F>&, const F::value_type&, const SparseRow<F>&);     \
  template SparseRow<F> scaled<F>(const F&, const SparseRow<F>&, const F::value_type&);          \
  template bool rows_equal<F>(const F&, const SparseRow<F>&, const SparseRow<F>&);               \
  template SparseRow<F> from_dense<F>(const F&, std::span<const F::value_type>);                 \
  template std::vector<F::value_type> to_dense<F>(const F&, const SparseRow<F>&, std::size_t);   \
  template class Matrix<F>;                                                                      \
  template Matrix<F> multiply<F>(const F&, const Matrix<F>&, const Matrix<F>&);                  \
  template Matrix<F> add<F>(const F&, const Matrix<F>&, const Matrix<F>&);                       \
  template Matrix<F> kronecker<F>(const F&, const Matrix<F>&, const Matrix<F>&);                 \
  template std::size_t rank<F>(const F&, const Matrix<F>&);                                      \
  template std::optional<Matrix<F>> inverse<F>(const F&, const Matrix<F>&);                      \
  template class Subspace<F>;                                                                    \
  template class RrefBuilder<F>;                                                                 \
  template Subspace<F> rref<F>(const F&, const Matrix<F>&);                                      \
  template Subspace<F> span<F>(const F&, std::size_t, const std::vector<SparseRow<F>>&);         \
  template Subspace<F> kernel<F>(const F&, const Matrix<F>&);                                    \
  template Subspace<F> sum<F>(const F&, const Subspace<F>&, const Subspace<F>&);                 \
  template Subspace<F> intersect<F>(const F&, const Subspace<F>&, const Subspace<F>&);           \
  template Subspace<F> image<F>(const F&, const Matrix<F>&, const Subspace<F>&);

KZK_INSTANTIATE_EXACTLIN(Rational)
KZK_INSTANTIATE_EXACTLIN(PrimeField)

}  // namespace kzk
