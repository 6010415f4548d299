#include "presentation.hpp"

#include <algorithm>
#include <set>

namespace kzk {

// ---------------------------------------------------------------------------
// GradedComponent

template <class F>
SparseRow<F> GradedComponent<F>::normal_form(const F& field, std::size_t word) const {
  const std::int64_t s = slot.at(word);
  if (s >= 0) return {{static_cast<std::size_t>(s), field.one()}};
  const auto& row = ideal.space.basis()[static_cast<std::size_t>(-s - 1)];
  // word ≡ word - row, and row is reduced, so everything but the pivot sits on normal words.
  SparseRow<F> out;
  out.reserve(row.size() - 1);
  for (std::size_t k = 1; k < row.size(); ++k) {
    out.push_back({static_cast<std::size_t>(slot[row[k].col]), field.neg(row[k].val)});
  }
  return out;
}

template <class F>
SparseRow<F> GradedComponent<F>::reduce(const F& field, const SparseRow<F>& raw) const {
  SparseRow<F> out;
  for (const auto& e : raw) axpy(field, out, e.val, normal_form(field, e.col));
  return out;
}

template <class F>
SparseRow<F> GradedComponent<F>::lift(const SparseRow<F>& coords) const {
  SparseRow<F> out;
  out.reserve(coords.size());
  for (const auto& e : coords) out.push_back({normal_words.at(e.col), e.val});
  return out;
}

// ---------------------------------------------------------------------------
// GradedAutomorphism

template <class F>
Matrix<F> GradedAutomorphism<F>::power(const F& field, long long k) const {
  const Matrix<F>& base = k >= 0 ? matrix_ : inverse_;
  Matrix<F> result = Matrix<F>::identity(field, matrix_.rows());
  for (long long t = 0; t < (k >= 0 ? k : -k); ++t) result = multiply(field, result, base);
  return result;
}

template <class F>
Matrix<F> GradedAutomorphism<F>::tensor_power(const F& field, long long k, std::size_t n) const {
  Matrix<F> beta = power(field, k);
  Matrix<F> result = Matrix<F>::identity(field, 1);
  for (std::size_t t = 0; t < n; ++t) result = kronecker(field, result, beta);
  return result;
}

template <class F>
SparseRow<F> apply_tensor_factors(const F& field, std::span<const Matrix<F>> factors, const SparseRow<F>& raw) {
  const std::size_t n = factors.size();
  if (n == 0) return raw;
  const std::size_t d = factors.front().rows();
  std::vector<Matrix<F>> columns;
  columns.reserve(n);
  for (const auto& f : factors) columns.push_back(f.transposed());
  SparseRow<F> out;
  std::vector<std::size_t> letters(n);
  for (const auto& e : raw) {
    std::size_t idx = e.col;
    for (std::size_t t = n; t-- > 0;) {
      letters[t] = idx % d;
      idx /= d;
    }
    SparseRow<F> image{{0, e.val}};
    for (std::size_t t = 0; t < n; ++t) {
      SparseRow<F> next;
      const auto& col = columns[t].row(letters[t]);
      next.reserve(image.size() * col.size());
      for (const auto& a : image) {
        for (const auto& b : col) next.push_back({a.col * d + b.col, field.mul(a.val, b.val)});
      }
      image = std::move(next);
    }
    axpy(field, out, field.one(), image);
  }
  return out;
}

template <class F>
SparseRow<F> apply_tensor_power(const F& field, const Matrix<F>& beta, const SparseRow<F>& raw, std::size_t n) {
  std::vector<Matrix<F>> factors(n, beta);
  return apply_tensor_factors<F>(field, factors, raw);
}

template <class F>
GradedAutomorphism<F> validate_automorphism(const Presentation<F>& p, const Matrix<F>& m) {
  const F& field = p.field();
  if (m.rows() != p.dim_e() || m.cols() != p.dim_e()) {
    throw Error(ErrorCode::kDimension, "automorphism must be a " + std::to_string(p.dim_e()) + "x" +
                                           std::to_string(p.dim_e()) + " matrix");
  }
  auto inv = inverse(field, m);
  if (!inv) throw Error(ErrorCode::kNotInvertible, "automorphism matrix is singular");
  GradedAutomorphism<F> alpha(m, *inv);
  const auto& r = p.relations().space;
  RrefBuilder<F> builder(field, r.ambient_dim());
  for (const auto& row : r.basis()) builder.insert(apply_tensor_power(field, m, row, p.degree()));
  if (!std::move(builder).finish().equals(field, r)) {
    throw Error(ErrorCode::kRelationsNotPreserved, "automorphism does not preserve the relation space");
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// RegularityReport

bool RegularityReport::regular() const { return !first_failure().has_value(); }

std::optional<std::size_t> RegularityReport::first_failure() const {
  for (std::size_t n = 0; n < kernel_dims.size(); ++n) {
    if (kernel_dims[n] != 0) return n;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Presentation

template <class F>
Presentation<F>::Presentation(F field, std::vector<std::string> gens, std::size_t degree, Subspace<F> relations,
                              std::uint64_t cap)
    : field_(std::move(field)),
      gens_(std::move(gens)),
      degree_(degree),
      cap_(cap),
      cache_(std::make_shared<Cache>()) {
  if (gens_.empty()) throw Error(ErrorCode::kInvalidPresentation, "presentation needs at least one generator");
  if (std::set<std::string>(gens_.begin(), gens_.end()).size() != gens_.size()) {
    throw Error(ErrorCode::kInvalidPresentation, "generator names must be distinct");
  }
  if (degree_ < 2) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "relations have degree " + std::to_string(degree_) + "; homogeneous degree must be at least 2");
  }
  if (relations.ambient_dim() != ambient_size(gens_.size(), degree_, cap_)) {
    throw Error(ErrorCode::kDimension, "relation space does not live in E^{⊗N}");
  }
  relations_ = {degree_, std::move(relations)};
}

template <class F>
Presentation<F> Presentation<F>::with_cap(std::uint64_t cap) const {
  return Presentation(field_, gens_, degree_, relations_.space, cap);
}

template <class F>
const GradedComponent<F>& Presentation<F>::component_locked(std::size_t n) const {
  if (auto it = cache_->components.find(n); it != cache_->components.end()) return it->second;
  const std::size_t ambient = ambient_size(dim_e(), n, cap_);
  GradedComponent<F> gc;
  gc.degree = n;
  if (n <= degree_) {
    gc.ideal = ideal_component(field_, dim_e(), relations_, n, cap_);
  } else {
    gc.ideal = ideal_component_step(field_, dim_e(), relations_, component_locked(n - 1).ideal, cap_);
  }
  gc.slot.assign(ambient, 0);
  const auto& pivots = gc.ideal.space.pivots();
  for (std::size_t k = 0; k < pivots.size(); ++k) gc.slot[pivots[k]] = -static_cast<std::int64_t>(k) - 1;
  for (std::size_t w = 0; w < ambient; ++w) {
    if (gc.slot[w] == 0) {
      gc.slot[w] = static_cast<std::int64_t>(gc.normal_words.size());
      gc.normal_words.push_back(w);
    }
  }
  return cache_->components.emplace(n, std::move(gc)).first->second;
}

template <class F>
const GradedComponent<F>& Presentation<F>::component(std::size_t n) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return component_locked(n);
}

template <class F>
const TensorSubspace<F>& Presentation<F>::dual(std::size_t i) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (auto it = cache_->duals.find(i); it != cache_->duals.end()) return it->second;
  TensorSubspace<F> x;
  if (i <= degree_) {
    x = dual_component(field_, dim_e(), relations_, i, cap_);
  } else {
    // fill lower degrees first so each step reuses its predecessor
    std::size_t start = degree_;
    while (start + 1 < i && cache_->duals.count(start + 1)) ++start;
    TensorSubspace<F> prev = start == degree_ ? relations_ : cache_->duals.at(start);
    for (std::size_t t = start + 1; t < i; ++t) {
      prev = dual_component_step(field_, dim_e(), prev, cap_);
      cache_->duals.emplace(t, prev);
    }
    x = dual_component_step(field_, dim_e(), prev, cap_);
  }
  return cache_->duals.emplace(i, std::move(x)).first->second;
}

template <class F>
void Presentation<F>::check_element(const Element<F>& a) const {
  if (!a.coords.empty() && a.coords.back().col >= component(a.degree).dim()) {
    throw Error(ErrorCode::kDimension, "element coordinates exceed dim A_" + std::to_string(a.degree));
  }
}

template <class F>
Element<F> Presentation<F>::unit() const {
  return {0, {{0, field_.one()}}};
}

template <class F>
Element<F> Presentation<F>::generator(std::size_t s) const {
  if (s >= dim_e()) throw Error(ErrorCode::kInvalidArgument, "generator index out of range");
  return project(1, {{s, field_.one()}});
}

template <class F>
Element<F> Presentation<F>::word_element(std::span<const std::size_t> word) const {
  WordBasis basis(dim_e(), word.size(), cap_);
  return project(word.size(), {{basis.index(word), field_.one()}});
}

template <class F>
Element<F> Presentation<F>::project(std::size_t n, const SparseRow<F>& raw) const {
  return {n, component(n).reduce(field_, raw)};
}

template <class F>
Element<F> Presentation<F>::multiply(const Element<F>& a, const Element<F>& b) const {
  check_element(a);
  check_element(b);
  const auto& ca = component(a.degree);
  const auto& cb = component(b.degree);
  const auto& cab = component(a.degree + b.degree);
  const std::size_t shift = ambient_size(dim_e(), b.degree, cap_);
  SparseRow<F> out;
  for (const auto& ea : a.coords) {
    for (const auto& eb : b.coords) {
      std::size_t w = ca.normal_words[ea.col] * shift + cb.normal_words[eb.col];
      axpy(field_, out, field_.mul(ea.val, eb.val), cab.normal_form(field_, w));
    }
  }
  return {a.degree + b.degree, std::move(out)};
}

template <class F>
Element<F> Presentation<F>::apply_automorphism(const GradedAutomorphism<F>& alpha, long long k,
                                               const Element<F>& a) const {
  check_element(a);
  const auto& c = component(a.degree);
  SparseRow<F> raw = apply_tensor_power(field_, alpha.power(field_, k), c.lift(a.coords), a.degree);
  return {a.degree, c.reduce(field_, raw)};
}

template <class F>
Element<F> Presentation<F>::twisted_multiply(const GradedAutomorphism<F>& alpha, const Element<F>& a,
                                             const Element<F>& b) const {
  return multiply(a, apply_automorphism(alpha, static_cast<long long>(a.degree), b));
}

template <class F>
bool Presentation<F>::elements_equal(const Element<F>& a, const Element<F>& b) const {
  return a.degree == b.degree && rows_equal(field_, a.coords, b.coords);
}

template <class F>
Matrix<F> Presentation<F>::right_multiplication(std::size_t n, const Element<F>& e) const {
  const auto& cn = component(n);
  std::vector<SparseRow<F>> columns;
  columns.reserve(cn.dim());
  for (std::size_t w = 0; w < cn.dim(); ++w) {
    columns.push_back(multiply({n, {{w, field_.one()}}}, e).coords);
  }
  return Matrix<F>::from_columns(component(n + e.degree).dim(), columns);
}

template <class F>
Matrix<F> Presentation<F>::left_multiplication(std::size_t n, const Element<F>& e) const {
  const auto& cn = component(n);
  std::vector<SparseRow<F>> columns;
  columns.reserve(cn.dim());
  for (std::size_t w = 0; w < cn.dim(); ++w) {
    columns.push_back(multiply(e, {n, {{w, field_.one()}}}).coords);
  }
  return Matrix<F>::from_columns(component(n + e.degree).dim(), columns);
}

template <class F>
Matrix<F> Presentation<F>::automorphism_action(const GradedAutomorphism<F>& alpha, long long k,
                                               std::size_t n) const {
  const auto& cn = component(n);
  const Matrix<F> beta = alpha.power(field_, k);
  std::vector<SparseRow<F>> columns;
  columns.reserve(cn.dim());
  for (std::size_t w = 0; w < cn.dim(); ++w) {
    columns.push_back(cn.reduce(field_, apply_tensor_power(field_, beta, {{cn.normal_words[w], field_.one()}}, n)));
  }
  return Matrix<F>::from_columns(cn.dim(), columns);
}

template <class F>
std::vector<std::size_t> Presentation<F>::hilbert_series(std::size_t cutoff) const {
  std::vector<std::size_t> dims;
  dims.reserve(cutoff + 1);
  for (std::size_t n = 0; n <= cutoff; ++n) dims.push_back(component(n).dim());
  return dims;
}

template <class F>
RegularityReport Presentation<F>::regularity(const Element<F>& e, std::size_t cutoff, Side side) const {
  check_element(e);
  RegularityReport report;
  report.side = side;
  report.cutoff = cutoff;
  for (std::size_t n = 0; n <= cutoff; ++n) {
    Matrix<F> m = side == Side::kRight ? right_multiplication(n, e) : left_multiplication(n, e);
    report.kernel_dims.push_back(m.cols() - rank(field_, m));
  }
  return report;
}

#define KZK_INSTANTIATE_PRESENTATION(F)                                                                \
  template struct GradedComponent<F>;                                                                  \
  template class GradedAutomorphism<F>;                                                                \
  template class Presentation<F>;                                                                      \
  template SparseRow<F> apply_tensor_factors<F>(const F&, std::span<const Matrix<F>>, const SparseRow<F>&); \
  template SparseRow<F> apply_tensor_power<F>(const F&, const Matrix<F>&, const SparseRow<F>&, std::size_t); \
  template GradedAutomorphism<F> validate_automorphism<F>(const Presentation<F>&, const Matrix<F>&);

KZK_INSTANTIATE_PRESENTATION(Rational)
KZK_INSTANTIATE_PRESENTATION(PrimeField)

}  // namespace kzk
