#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exactlin.hpp"
#include "tensorspace.hpp"

namespace kzk {

// A_n = E^{⊗n} / I(R)_n. The normal words (non-pivot columns of the reduced
// ideal) index its basis.
template <class F>
struct GradedComponent {
  std::size_t degree = 0;
  TensorSubspace<F> ideal;
  std::vector<std::size_t> normal_words;
  // word index -> position among normal_words (>= 0), or -(k+1) when the word is
  // the pivot of ideal row k.
  std::vector<std::int64_t> slot;

  std::size_t dim() const { return normal_words.size(); }
  // Class of a single word, in normal-word coordinates.
  SparseRow<F> normal_form(const F& field, std::size_t word) const;
  SparseRow<F> reduce(const F& field, const SparseRow<F>& raw) const;
  // Normal-word coordinates back to a vector of E^{⊗n}.
  SparseRow<F> lift(const SparseRow<F>& coords) const;
};

template <class F>
struct Element {
  std::size_t degree = 0;
  SparseRow<F> coords;  // over the normal words of A_degree
};

template <class F>
class Presentation;

// A degree-0 algebra automorphism, given by its action on E and checked to
// preserve the relation space.
template <class F>
class GradedAutomorphism {
 public:
  const Matrix<F>& matrix() const { return matrix_; }
  const Matrix<F>& inverse_matrix() const { return inverse_; }
  std::size_t dim_e() const { return matrix_.rows(); }

  // α^k on E; k may be negative.
  Matrix<F> power(const F& field, long long k) const;
  // (α^k)^{⊗n} on E^{⊗n}.
  Matrix<F> tensor_power(const F& field, long long k, std::size_t n) const;
  GradedAutomorphism inverse() const { return GradedAutomorphism(inverse_, matrix_); }

 private:
  GradedAutomorphism(Matrix<F> m, Matrix<F> inv) : matrix_(std::move(m)), inverse_(std::move(inv)) {}

  template <class G>
  friend GradedAutomorphism<G> validate_automorphism(const Presentation<G>& p, const Matrix<G>& m);

  Matrix<F> matrix_;
  Matrix<F> inverse_;
};

// Applies factors[0] ⊗ factors[1] ⊗ … to a vector of E^{⊗n} word by word,
// without materializing the Kronecker product.
template <class F>
SparseRow<F> apply_tensor_factors(const F& field, std::span<const Matrix<F>> factors, const SparseRow<F>& raw);

// β^{⊗n} applied word by word.
template <class F>
SparseRow<F> apply_tensor_power(const F& field, const Matrix<F>& beta, const SparseRow<F>& raw, std::size_t n);

enum class Side { kRight, kLeft };

struct RegularityReport {
  Side side = Side::kRight;
  std::size_t cutoff = 0;
  // kernel_dims[n] = dim ker(· e : A_n -> A_{n+1}) (or e · for kLeft)
  std::vector<std::size_t> kernel_dims;

  bool regular() const;
  std::optional<std::size_t> first_failure() const;
};

template <class F>
class Presentation {
 public:
  Presentation(F field, std::vector<std::string> gens, std::size_t degree, Subspace<F> relations,
               std::uint64_t cap = kDefaultAmbientCap);

  const F& field() const { return field_; }
  const std::vector<std::string>& gens() const { return gens_; }
  std::size_t dim_e() const { return gens_.size(); }
  std::size_t degree() const { return degree_; }
  const TensorSubspace<F>& relations() const { return relations_; }
  std::uint64_t cap() const { return cap_; }
  Presentation with_cap(std::uint64_t cap) const;

  const GradedComponent<F>& component(std::size_t n) const;
  // A^{!*}_i as a subspace of E^{⊗i}.
  const TensorSubspace<F>& dual(std::size_t i) const;

  Element<F> unit() const;
  Element<F> generator(std::size_t s) const;
  Element<F> word_element(std::span<const std::size_t> word) const;
  Element<F> project(std::size_t n, const SparseRow<F>& raw) const;
  Element<F> multiply(const Element<F>& a, const Element<F>& b) const;
  // α^k applied to a.
  Element<F> apply_automorphism(const GradedAutomorphism<F>& alpha, long long k, const Element<F>& a) const;
  // a ⋄ b = a · α^{|a|}(b), the product of A^α on the underlying space of A.
  Element<F> twisted_multiply(const GradedAutomorphism<F>& alpha, const Element<F>& a, const Element<F>& b) const;
  bool elements_equal(const Element<F>& a, const Element<F>& b) const;

  // · e : A_n -> A_{n+|e|}
  Matrix<F> right_multiplication(std::size_t n, const Element<F>& e) const;
  // e · : A_n -> A_{n+|e|}
  Matrix<F> left_multiplication(std::size_t n, const Element<F>& e) const;
  // α^k on A_n.
  Matrix<F> automorphism_action(const GradedAutomorphism<F>& alpha, long long k, std::size_t n) const;

  std::vector<std::size_t> hilbert_series(std::size_t cutoff) const;
  RegularityReport regularity(const Element<F>& e, std::size_t cutoff, Side side) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, GradedComponent<F>> components;
    std::map<std::size_t, TensorSubspace<F>> duals;
  };

  const GradedComponent<F>& component_locked(std::size_t n) const;
  void check_element(const Element<F>& a) const;

  F field_;
  std::vector<std::string> gens_;
  std::size_t degree_;
  TensorSubspace<F> relations_;
  std::uint64_t cap_;
  std::shared_ptr<Cache> cache_;
};

template <class F>
GradedAutomorphism<F> validate_automorphism(const Presentation<F>& p, const Matrix<F>& m);

}  // namespace kzk
