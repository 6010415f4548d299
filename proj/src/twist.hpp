#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "presentation.hpp"

namespace kzk {

// θ_n = id ⊗ α ⊗ α² ⊗ … ⊗ α^{n-1} on E^{⊗n}.
template <class F>
Matrix<F> theta(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n);

// θ_n^{-1} = id ⊗ α^{-1} ⊗ … ⊗ α^{-(n-1)}.
template <class F>
Matrix<F> theta_inverse(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n);

// α^{shift} ∘ θ_n applied word by word: position t is acted on by α^{shift+t}.
template <class F>
SparseRow<F> apply_theta(const F& field, const GradedAutomorphism<F>& alpha, const SparseRow<F>& raw, std::size_t n,
                         long long shift = 0);

// Image of a subspace of E^{⊗n} under α^{shift} ∘ θ_n.
template <class F>
Subspace<F> theta_image(const F& field, const GradedAutomorphism<F>& alpha, const Subspace<F>& s, std::size_t n,
                        long long shift = 0);

// Checks θ_n = (θ_h ⊗ id) ∘ (id ⊗ ((α^h)^{⊗(n-h)} ∘ θ_{n-h})) as an exact
// matrix identity, for a head of length 1 <= h <= n.
template <class F>
bool theta_factorization_holds(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n, std::size_t h);

// A^α = A(E, θ_N^{-1}(R)).
template <class F>
Presentation<F> semi_cross(const Presentation<F>& p, const GradedAutomorphism<F>& alpha);

// Degreewise identification A^α_n -> A_n of the two quotient presentations:
// the class of a word w in A^α goes to the class of θ_n(w) in A.
template <class F>
Matrix<F> identification(const Presentation<F>& p, const Presentation<F>& twisted, const GradedAutomorphism<F>& alpha,
                         std::size_t n);

struct DiagramReport {
  std::size_t cutoff = 0;
  std::size_t words_checked = 0;
  bool passed = true;
  // first failing word, as generator indices
  std::optional<std::vector<std::size_t>> counterexample;
};

// Compares the twisted product of the letters of every word (computed with
// twisted_multiply) against the class of θ_n(w) in A, for n <= cutoff.
template <class F>
DiagramReport verify_m_alpha_diagram(const Presentation<F>& p, const GradedAutomorphism<F>& alpha,
                                     std::size_t cutoff);

}  // namespace kzk
