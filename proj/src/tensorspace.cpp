#include "tensorspace.hpp"

namespace kzk {

std::size_t ambient_size(std::size_t dim_e, std::size_t n, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (std::size_t t = 0; t < n; ++t) {
    size *= dim_e;
    if (size > cap) {
      throw Error(ErrorCode::kResource, "ambient dimension " + std::to_string(dim_e) + "^" + std::to_string(n) +
                                            " exceeds the cap of " + std::to_string(cap));
    }
  }
  return static_cast<std::size_t>(size);
}

WordBasis::WordBasis(std::size_t dim_e, std::size_t degree, std::uint64_t cap)
    : dim_e_(dim_e), degree_(degree), size_(ambient_size(dim_e, degree, cap)) {}

std::size_t WordBasis::index(std::span<const std::size_t> word) const {
  if (word.size() != degree_) throw Error(ErrorCode::kDimension, "word length does not match degree");
  std::size_t idx = 0;
  for (std::size_t letter : word) {
    if (letter >= dim_e_) throw Error(ErrorCode::kDimension, "letter out of range");
    idx = idx * dim_e_ + letter;
  }
  return idx;
}

std::vector<std::size_t> WordBasis::word(std::size_t index) const {
  if (index >= size_) throw Error(ErrorCode::kDimension, "word index out of range");
  std::vector<std::size_t> w(degree_);
  for (std::size_t t = degree_; t-- > 0;) {
    w[t] = index % dim_e_;
    index /= dim_e_;
  }
  return w;
}

template <class F>
TensorSubspace<F> full_tensor(const F& field, std::size_t dim_e, std::size_t n, std::uint64_t cap) {
  return {n, Subspace<F>::full(field, ambient_size(dim_e, n, cap))};
}

template <class F>
TensorSubspace<F> zero_tensor(std::size_t dim_e, std::size_t n, std::uint64_t cap) {
  return {n, Subspace<F>::zero(ambient_size(dim_e, n, cap))};
}

template <class F>
TensorSubspace<F> tensor_product(const F& field, const TensorSubspace<F>& a, const TensorSubspace<F>& b,
                                 std::uint64_t cap) {
  const std::size_t nb = b.space.ambient_dim();
  const std::uint64_t ambient = std::uint64_t{a.space.ambient_dim()} * nb;
  if (ambient > cap) {
    throw Error(ErrorCode::kResource, "ambient dimension " + std::to_string(ambient) + " exceeds the cap of " +
                                          std::to_string(cap));
  }
  std::vector<SparseRow<F>> rows;
  rows.reserve(a.dim() * b.dim());
  for (const auto& ra : a.space.basis()) {
    for (const auto& rb : b.space.basis()) {
      SparseRow<F> r;
      r.reserve(ra.size() * rb.size());
      for (const auto& ea : ra) {
        for (const auto& eb : rb) r.push_back({ea.col * nb + eb.col, field.mul(ea.val, eb.val)});
      }
      rows.push_back(std::move(r));
    }
  }
  RrefBuilder<F> builder(field, static_cast<std::size_t>(ambient));
  builder.adopt_reduced(std::move(rows));
  return {a.degree + b.degree, std::move(builder).finish()};
}

template <class F>
TensorSubspace<F> block_embed(const F& field, std::size_t dim_e, const TensorSubspace<F>& r, std::size_t j,
                              std::size_t k, std::uint64_t cap) {
  ambient_size(dim_e, j + r.degree + k, cap);
  auto left = tensor_product(field, full_tensor(field, dim_e, j, cap), r, cap);
  return tensor_product(field, left, full_tensor(field, dim_e, k, cap), cap);
}

template <class F>
TensorSubspace<F> ideal_component_step(const F& field, std::size_t dim_e, const TensorSubspace<F>& r,
                                       const TensorSubspace<F>& previous, std::uint64_t cap) {
  const std::size_t n = previous.degree + 1;
  if (n <= r.degree) throw Error(ErrorCode::kInvalidArgument, "ideal_component_step needs degree above N");
  auto shifted = tensor_product(field, previous, full_tensor(field, dim_e, 1, cap), cap);
  RrefBuilder<F> builder(field, shifted.space.ambient_dim());
  builder.adopt_reduced(shifted.space.basis());
  auto head = block_embed(field, dim_e, r, n - r.degree, 0, cap);
  for (const auto& row : head.space.basis()) builder.insert(row);
  return {n, std::move(builder).finish()};
}

template <class F>
TensorSubspace<F> ideal_component(const F& field, std::size_t dim_e, const TensorSubspace<F>& r, std::size_t n,
                                  std::uint64_t cap) {
  if (n < r.degree) return zero_tensor<F>(dim_e, n, cap);
  ambient_size(dim_e, n, cap);
  TensorSubspace<F> current = r;
  for (std::size_t m = r.degree + 1; m <= n; ++m) {
    current = ideal_component_step(field, dim_e, r, current, cap);
  }
  return current;
}

template <class F>
TensorSubspace<F> dual_component_step(const F& field, std::size_t dim_e, const TensorSubspace<F>& previous,
                                      std::uint64_t cap) {
  const std::size_t i = previous.degree + 1;
  if (previous.is_zero()) return zero_tensor<F>(dim_e, i, cap);
  auto e = full_tensor(field, dim_e, 1, cap);
  auto left = tensor_product(field, e, previous, cap);
  auto right = tensor_product(field, previous, e, cap);
  return {i, intersect(field, left.space, right.space)};
}

template <class F>
TensorSubspace<F> dual_component(const F& field, std::size_t dim_e, const TensorSubspace<F>& r, std::size_t i,
                                 std::uint64_t cap) {
  if (i < r.degree) return full_tensor(field, dim_e, i, cap);
  ambient_size(dim_e, i, cap);
  TensorSubspace<F> current = r;
  for (std::size_t t = r.degree + 1; t <= i; ++t) {
    current = dual_component_step(field, dim_e, current, cap);
  }
  return current;
}

#define KZK_INSTANTIATE_TENSORSPACE(F)                                                                       \
  template TensorSubspace<F> full_tensor<F>(const F&, std::size_t, std::size_t, std::uint64_t);              \
  template TensorSubspace<F> zero_tensor<F>(std::size_t, std::size_t, std::uint64_t);                        \
  template TensorSubspace<F> tensor_product<F>(const F&, const TensorSubspace<F>&, const TensorSubspace<F>&, \
                                               std::uint64_t);                                               \
  template TensorSubspace<F> block_embed<F>(const F&, std::size_t, const TensorSubspace<F>&, std::size_t,    \
                                            std::size_t, std::uint64_t);                                     \
  template TensorSubspace<F> ideal_component<F>(const F&, std::size_t, const TensorSubspace<F>&, std::size_t, \
                                                std::uint64_t);                                              \
  template TensorSubspace<F> ideal_component_step<F>(const F&, std::size_t, const TensorSubspace<F>&,        \
                                                     const TensorSubspace<F>&, std::uint64_t);               \
  template TensorSubspace<F> dual_component<F>(const F&, std::size_t, const TensorSubspace<F>&, std::size_t, \
                                               std::uint64_t);                                               \
  template TensorSubspace<F> dual_component_step<F>(const F&, std::size_t, const TensorSubspace<F>&,         \
                                                    std::uint64_t);

KZK_INSTANTIATE_TENSORSPACE(Rational)
KZK_INSTANTIATE_TENSORSPACE(PrimeField)

}  // namespace kzk
