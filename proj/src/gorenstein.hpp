#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul.hpp"

namespace kzk {

// L(A) = Hom_A(K(A), A), truncated to value degrees <= cutoff and dual degrees
// <= top_index. A cochain Hom(A^{!*}_i, A_m) is stored with index
// a * dim A^{!*}_i + u, entry = coefficient of normal word a in F(u).
template <class F>
class DualComplex {
 public:
  static DualComplex build(const Presentation<F>& p, std::size_t cutoff, std::size_t top_index);

  const F& field() const { return field_; }
  std::size_t degree() const { return degree_; }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t top_index() const { return top_index_; }
  std::size_t component_dim(std::size_t m) const { return component_dims_.at(m); }
  std::size_t dual_dim(std::size_t i) const { return dual_dims_.at(i); }
  std::size_t term_dim(std::size_t m, std::size_t i) const { return component_dim(m) * dual_dim(i); }

  // d* : Hom(A^{!*}_{i-1}, A_m) -> Hom(A^{!*}_i, A_{m+1}), (d*F)(v) = Σ_s e_s F(w_s)
  const Matrix<F>& step(std::size_t m, std::size_t i) const;
  // `steps` consecutive dual steps starting from Hom(A^{!*}_{i-1}, A_m).
  Matrix<F> composite(std::size_t m, std::size_t i, std::size_t steps) const;

 private:
  DualComplex(F field, std::size_t degree, std::size_t cutoff, std::size_t top)
      : field_(std::move(field)), degree_(degree), cutoff_(cutoff), top_index_(top) {}

  F field_;
  std::size_t degree_;
  std::size_t cutoff_;
  std::size_t top_index_;
  std::vector<std::size_t> component_dims_;
  std::vector<std::size_t> dual_dims_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix<F>> steps_;
};

// The contraction C_{1,0} of L(A) at one weight w: term q is
// Hom(A^{!*}_{c(q)}, A_{w+c(q)}). An even q -> q+1 map is one dual step, an
// odd one is the composite of N-1 steps.
template <class F>
struct DualChain {
  long long weight = 0;
  std::vector<std::size_t> term_dims;       // 0 when the value degree is negative
  std::vector<bool> in_range;               // value degree <= cutoff
  std::vector<std::optional<Matrix<F>>> maps;  // maps[q] : term q -> term q+1, absent when out of range
};

template <class F>
DualChain<F> dual_chain(const DualComplex<F>& c, long long weight, std::size_t top_q);

struct CohomologyRow {
  long long weight = 0;
  std::vector<std::size_t> term_dims;
  std::vector<std::optional<std::size_t>> dims;  // per q; empty optional = inconclusive
};

enum class GorensteinVerdict { kNotGorenstein, kConsistent };

struct GorensteinWitness {
  std::size_t q = 0;
  long long weight = 0;
  std::size_t value_degree = 0;
  std::size_t dim = 0;
  bool below_top = true;  // false: H^D fails to be one-dimensional in a single weight
};

struct GorensteinReport {
  std::size_t cutoff = 0;
  GlobalDimension gldim;
  std::size_t top_q = 0;  // D when finite, else the largest q that fits
  bool koszul_verified = false;
  std::optional<std::string> warning;
  std::vector<CohomologyRow> table;  // rows in increasing weight
  std::size_t top_total = 0;         // Σ of conclusive dim H^D
  bool top_is_line = false;          // H^D one-dimensional, in a single weight
  GorensteinVerdict verdict = GorensteinVerdict::kConsistent;
  std::optional<GorensteinWitness> witness;

  std::optional<std::size_t> dim(std::size_t q, long long weight) const;
};

template <class F>
GorensteinReport check_gorenstein(const Presentation<F>& p, std::size_t cutoff);

struct TransferReport {
  bool passed = true;
  std::size_t entries_compared = 0;
  std::optional<std::pair<std::size_t, long long>> mismatch;  // (q, weight)
  GorensteinReport original;
  GorensteinReport twisted;
};

template <class F>
TransferReport gorenstein_transfer_check(const Presentation<F>& p, const GradedAutomorphism<F>& alpha,
                                         std::size_t cutoff);

// Σ (-1)^q dim C^q_w = Σ (-1)^q dim H^q_w on every row whose terms and
// cohomology are all within the truncation. Returns the number of rows checked,
// or nullopt at the first failing row.
std::optional<std::size_t> euler_identity_rows(const GorensteinReport& report);

const char* verdict_name(GorensteinVerdict v);

}  // namespace kzk
