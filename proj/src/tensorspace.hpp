#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "exactlin.hpp"

namespace kzk {

inline constexpr std::uint64_t kDefaultAmbientCap = std::uint64_t{1} << 20;

// dim_e^n, throwing kResource when it exceeds cap.
std::size_t ambient_size(std::size_t dim_e, std::size_t n, std::uint64_t cap);

// Words of length `degree` over generator indices 0..dim_e-1, enumerated
// lexicographically; the index of a word is its base-dim_e numeral with the
// first letter most significant.
class WordBasis {
 public:
  WordBasis(std::size_t dim_e, std::size_t degree, std::uint64_t cap = kDefaultAmbientCap);

  std::size_t dim_e() const { return dim_e_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return size_; }

  std::size_t index(std::span<const std::size_t> word) const;
  std::vector<std::size_t> word(std::size_t index) const;

 private:
  std::size_t dim_e_;
  std::size_t degree_;
  std::size_t size_;
};

template <class F>
struct TensorSubspace {
  std::size_t degree = 0;
  Subspace<F> space = Subspace<F>::zero(1);

  std::size_t dim() const { return space.dim(); }
  bool is_zero() const { return space.is_zero(); }
};

template <class F>
TensorSubspace<F> full_tensor(const F& field, std::size_t dim_e, std::size_t n, std::uint64_t cap);

template <class F>
TensorSubspace<F> zero_tensor(std::size_t dim_e, std::size_t n, std::uint64_t cap);

// a ⊗ b inside E^{⊗(deg a + deg b)}; the product of two reduced echelon bases is
// again reduced, so no elimination is needed.
template <class F>
TensorSubspace<F> tensor_product(const F& field, const TensorSubspace<F>& a, const TensorSubspace<F>& b,
                                 std::uint64_t cap);

// E^{⊗j} ⊗ r ⊗ E^{⊗k}
template <class F>
TensorSubspace<F> block_embed(const F& field, std::size_t dim_e, const TensorSubspace<F>& r, std::size_t j,
                              std::size_t k, std::uint64_t cap);

// I(R)_n = sum over j+N+k=n of E^{⊗j} ⊗ R ⊗ E^{⊗k}
template <class F>
TensorSubspace<F> ideal_component(const F& field, std::size_t dim_e, const TensorSubspace<F>& r, std::size_t n,
                                  std::uint64_t cap);

// I(R)_n from I(R)_{n-1} for n > N, using I_n = I_{n-1} ⊗ E + E^{⊗(n-N)} ⊗ R.
template <class F>
TensorSubspace<F> ideal_component_step(const F& field, std::size_t dim_e, const TensorSubspace<F>& r,
                                       const TensorSubspace<F>& previous, std::uint64_t cap);

// A^{!*}_i: all of E^{⊗i} below N, R at N, and the intersection of every
// E^{⊗j} ⊗ R ⊗ E^{⊗k} above N.
template <class F>
TensorSubspace<F> dual_component(const F& field, std::size_t dim_e, const TensorSubspace<F>& r, std::size_t i,
                                 std::uint64_t cap);

// A^{!*}_i = (E ⊗ A^{!*}_{i-1}) ∩ (A^{!*}_{i-1} ⊗ E) for i > N.
template <class F>
TensorSubspace<F> dual_component_step(const F& field, std::size_t dim_e, const TensorSubspace<F>& previous,
                                      std::uint64_t cap);

}  // namespace kzk
