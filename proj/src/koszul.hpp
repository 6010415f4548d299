#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "presentation.hpp"
#include "twist.hpp"

namespace kzk {

// Homological index -> tensor degree of the contracted complex:
// c(2p) = pN, c(2p+1) = pN + 1.
constexpr std::size_t contraction_index(std::size_t q, std::size_t n_degree) {
  return (q / 2) * n_degree + (q % 2);
}

// Writing each basis vector v of A^{!*}_i as Σ_s e_s ⊗ w_s, entry s of the
// result is the (dim A^{!*}_{i-1} × dim A^{!*}_i) matrix whose column v holds
// the coordinates of w_s. Throws kInternal if some w_s leaves A^{!*}_{i-1}.
template <class F>
std::vector<Matrix<F>> koszul_coefficients(const F& field, std::size_t dim_e, const TensorSubspace<F>& upper,
                                           const TensorSubspace<F>& lower);

// The Koszul N-complex K(A) truncated to bidegrees (m, i) with m + i <= cutoff.
// Terms are A_m ⊗ A^{!*}_i with basis index a * dim A^{!*}_i + v.
template <class F>
class KoszulNComplex {
 public:
  static KoszulNComplex build(const Presentation<F>& p, std::size_t cutoff);
  // K(A^α) on the underlying space of A, using a ⋄ e = a α^{|a|}(e); the dual
  // components are those of the semi-cross presentation `twisted`.
  static KoszulNComplex build_twisted(const Presentation<F>& p, const Presentation<F>& twisted,
                                      const GradedAutomorphism<F>& alpha, std::size_t cutoff);

  const F& field() const { return field_; }
  std::size_t degree() const { return degree_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t component_dim(std::size_t m) const { return component_dims_.at(m); }
  std::size_t dual_dim(std::size_t i) const { return dual_dims_.at(i); }
  std::size_t term_dim(std::size_t m, std::size_t i) const { return component_dim(m) * dual_dim(i); }

  // d : A_m ⊗ A^{!*}_i -> A_{m+1} ⊗ A^{!*}_{i-1}
  const Matrix<F>& differential(std::size_t m, std::size_t i) const;
  // d^steps starting at (m, i)
  Matrix<F> composite(std::size_t m, std::size_t i, std::size_t steps) const;

  // d^N = 0 at every bidegree that fits in the truncation.
  bool nilpotent() const;

 private:
  KoszulNComplex(F field, std::size_t degree, std::size_t cutoff) : field_(std::move(field)), degree_(degree), cutoff_(cutoff) {}

  static KoszulNComplex assemble(const Presentation<F>& mult_source, const Presentation<F>& dual_source,
                                 const GradedAutomorphism<F>* alpha, std::size_t cutoff);

  F field_;
  std::size_t degree_;
  std::size_t cutoff_;
  std::vector<std::size_t> component_dims_;
  std::vector<std::size_t> dual_dims_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix<F>> differentials_;
};

// One internal degree of the contraction C_{N-1,0}:
// … -> C_q -> C_{q-1} -> … -> C_0, C_q = A_{n-c(q)} ⊗ A^{!*}_{c(q)}.
template <class F>
struct Chain {
  std::size_t internal_degree = 0;
  std::vector<std::size_t> term_dims;  // q = 0..top
  std::vector<Matrix<F>> boundaries;   // boundaries[q] : C_q -> C_{q-1}; boundaries[0] is unused
};

template <class F>
struct ContractionComplex {
  std::size_t degree = 0;
  std::size_t cutoff = 0;
  std::vector<Chain<F>> chains;  // indexed by internal degree n = 0..cutoff
};

// δ = d^{N-1} is formed from the stored single steps.
template <class F>
ContractionComplex<F> contraction(const KoszulNComplex<F>& k);

template <class F>
bool composites_vanish(const F& field, const ContractionComplex<F>& c);

// table[n][q-1] = dim H_q at internal degree n, for 1 <= q <= top(n).
template <class F>
std::vector<std::vector<std::size_t>> homology_table(const F& field, const ContractionComplex<F>& c);

struct KoszulWitness {
  std::size_t internal_degree = 0;
  std::size_t homological_degree = 0;
  std::size_t dim = 0;
};

struct KoszulityReport {
  std::size_t cutoff = 0;
  std::vector<std::vector<std::size_t>> homology;
  std::optional<KoszulWitness> witness;

  bool koszul_up_to_cutoff() const { return !witness.has_value(); }
};

template <class F>
KoszulityReport check_koszul(const Presentation<F>& p, std::size_t cutoff);

struct GlobalDimension {
  bool finite = false;
  // known to be infinite without reaching the cap (one generator, R = E^{⊗N})
  bool infinite = false;
  std::size_t dimension = 0;
  // first i with A^{!*}_i = 0 when finite; otherwise the last degree computed
  std::size_t vanishing_index = 0;
};

template <class F>
GlobalDimension global_dimension(const Presentation<F>& p);

struct PoincareReport {
  std::size_t cutoff = 0;
  std::vector<long long> hilbert;
  std::vector<long long> dual_poly;  // Σ dim A^!_{Nn} t^{Nn} - dim A^!_{Nn+1} t^{Nn+1}, truncated
  std::vector<long long> residual;   // coefficients of P·Q - 1 through t^cutoff
  bool passed = false;
};

template <class F>
PoincareReport poincare_identity_check(const Presentation<F>& p, std::size_t cutoff);

struct TwistIsoReport {
  std::size_t cutoff = 0;
  bool duals_match = true;
  bool invertible = true;
  bool chain_map = true;
  bool homology_match = true;
  std::size_t bidegrees_checked = 0;
  // first failing bidegree (m, i) and what failed there
  std::optional<std::pair<std::size_t, std::size_t>> failure;
  std::string failure_kind;
  std::vector<std::vector<std::size_t>> homology;
  std::vector<std::vector<std::size_t>> twisted_homology;

  bool passed() const { return duals_match && invertible && chain_map && homology_match; }
};

// K(θ)_i : a ⊗ e ↦ a ⊗ α^{|a|} θ_i(e) as a map K(A^α) -> K(A).
template <class F>
Matrix<F> twist_chain_map(const Presentation<F>& p, const Presentation<F>& twisted, const GradedAutomorphism<F>& alpha,
                          std::size_t m, std::size_t i);

template <class F>
TwistIsoReport verify_twist_iso(const Presentation<F>& p, const GradedAutomorphism<F>& alpha, std::size_t cutoff);

// The twisted-product construction of K(A^α) agrees with the Koszul complex of
// the semi-cross presentation once A^α_m is identified with A_m.
template <class F>
bool twisted_paths_agree(const Presentation<F>& p, const GradedAutomorphism<F>& alpha, std::size_t cutoff);

}  // namespace kzk
