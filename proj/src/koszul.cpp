#include "koszul.hpp"

namespace kzk {

template <class F>
std::vector<Matrix<F>> koszul_coefficients(const F& field, std::size_t dim_e, const TensorSubspace<F>& upper,
                                           const TensorSubspace<F>& lower) {
  if (upper.degree != lower.degree + 1) {
    throw Error(ErrorCode::kInvalidArgument, "koszul_coefficients needs consecutive degrees");
  }
  const std::size_t tail = lower.space.ambient_dim();
  std::vector<std::vector<SparseRow<F>>> columns(dim_e, std::vector<SparseRow<F>>(upper.dim()));
  for (std::size_t v = 0; v < upper.dim(); ++v) {
    std::vector<SparseRow<F>> parts(dim_e);
    for (const auto& e : upper.space.basis()[v]) parts[e.col / tail].push_back({e.col % tail, e.val});
    for (std::size_t s = 0; s < dim_e; ++s) {
      auto coords = lower.space.try_coordinates(field, parts[s]);
      if (!coords) {
        throw Error(ErrorCode::kInternal, "Koszul expansion left A^{!*}_" + std::to_string(lower.degree));
      }
      columns[s][v] = std::move(*coords);
    }
  }
  std::vector<Matrix<F>> out;
  out.reserve(dim_e);
  for (std::size_t s = 0; s < dim_e; ++s) out.push_back(Matrix<F>::from_columns(lower.dim(), columns[s]));
  return out;
}

// ---------------------------------------------------------------------------
// KoszulNComplex

template <class F>
KoszulNComplex<F> KoszulNComplex<F>::assemble(const Presentation<F>& mult_source, const Presentation<F>& dual_source,
                                              const GradedAutomorphism<F>* alpha, std::size_t cutoff) {
  const F& field = mult_source.field();
  const std::size_t d = mult_source.dim_e();
  KoszulNComplex k(field, mult_source.degree(), cutoff);
  for (std::size_t m = 0; m <= cutoff; ++m) k.component_dims_.push_back(mult_source.component(m).dim());
  for (std::size_t i = 0; i <= cutoff; ++i) k.dual_dims_.push_back(dual_source.dual(i).dim());

  std::vector<std::vector<Matrix<F>>> coefficients(cutoff + 1);
  for (std::size_t i = 1; i <= cutoff; ++i) {
    coefficients[i] = koszul_coefficients(field, d, dual_source.dual(i), dual_source.dual(i - 1));
  }
  for (std::size_t m = 0; m < cutoff; ++m) {
    // right multiplication by e_s on A_m, twisted to a·α^m(e_s) when α is given
    std::vector<Matrix<F>> right;
    for (std::size_t s = 0; s < d; ++s) {
      Element<F> e = mult_source.generator(s);
      if (alpha) e = mult_source.apply_automorphism(*alpha, static_cast<long long>(m), e);
      right.push_back(mult_source.right_multiplication(m, e));
    }
    for (std::size_t i = 1; m + i <= cutoff; ++i) {
      Matrix<F> acc(k.component_dims_[m + 1] * k.dual_dims_[i - 1], k.component_dims_[m] * k.dual_dims_[i]);
      for (std::size_t s = 0; s < d; ++s) acc = add(field, acc, kronecker(field, right[s], coefficients[i][s]));
      k.differentials_.emplace(std::make_pair(m, i), std::move(acc));
    }
  }
  return k;
}

template <class F>
KoszulNComplex<F> KoszulNComplex<F>::build(const Presentation<F>& p, std::size_t cutoff) {
  return assemble(p, p, nullptr, cutoff);
}

template <class F>
KoszulNComplex<F> KoszulNComplex<F>::build_twisted(const Presentation<F>& p, const Presentation<F>& twisted,
                                                   const GradedAutomorphism<F>& alpha, std::size_t cutoff) {
  return assemble(p, twisted, &alpha, cutoff);
}

template <class F>
const Matrix<F>& KoszulNComplex<F>::differential(std::size_t m, std::size_t i) const {
  auto it = differentials_.find({m, i});
  if (it == differentials_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "differential at bidegree (" + std::to_string(m) + ", " +
                                                 std::to_string(i) + ") is outside the truncation");
  }
  return it->second;
}

template <class F>
Matrix<F> KoszulNComplex<F>::composite(std::size_t m, std::size_t i, std::size_t steps) const {
  if (steps > i) throw Error(ErrorCode::kInvalidArgument, "composite runs past A^{!*}_0");
  Matrix<F> acc = Matrix<F>::identity(field_, term_dim(m, i));
  for (std::size_t t = 0; t < steps; ++t) acc = multiply(field_, differential(m + t, i - t), acc);
  return acc;
}

template <class F>
bool KoszulNComplex<F>::nilpotent() const {
  for (std::size_t i = degree_; i <= cutoff_; ++i) {
    for (std::size_t m = 0; m + i <= cutoff_; ++m) {
      if (!composite(m, i, degree_).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Contraction and homology

template <class F>
ContractionComplex<F> contraction(const KoszulNComplex<F>& k) {
  const std::size_t big_n = k.degree();
  ContractionComplex<F> c;
  c.degree = big_n;
  c.cutoff = k.cutoff();
  for (std::size_t n = 0; n <= k.cutoff(); ++n) {
    Chain<F> chain;
    chain.internal_degree = n;
    chain.boundaries.emplace_back();
    for (std::size_t q = 0; contraction_index(q, big_n) <= n; ++q) {
      const std::size_t i = contraction_index(q, big_n);
      const std::size_t m = n - i;
      chain.term_dims.push_back(k.term_dim(m, i));
      if (q == 0) continue;
      chain.boundaries.push_back(q % 2 == 1 ? k.differential(m, i) : k.composite(m, i, big_n - 1));
    }
    c.chains.push_back(std::move(chain));
  }
  return c;
}

template <class F>
bool composites_vanish(const F& field, const ContractionComplex<F>& c) {
  for (const auto& chain : c.chains) {
    for (std::size_t q = 2; q < chain.boundaries.size(); ++q) {
      if (!multiply(field, chain.boundaries[q - 1], chain.boundaries[q]).is_zero()) return false;
    }
  }
  return true;
}

template <class F>
std::vector<std::vector<std::size_t>> homology_table(const F& field, const ContractionComplex<F>& c) {
  std::vector<std::vector<std::size_t>> table;
  for (const auto& chain : c.chains) {
    const std::size_t top = chain.term_dims.size() - 1;
    std::vector<std::size_t> ranks(top + 2, 0);
    for (std::size_t q = 1; q <= top; ++q) ranks[q] = rank(field, chain.boundaries[q]);
    std::vector<std::size_t> row;
    for (std::size_t q = 1; q <= top; ++q) row.push_back(chain.term_dims[q] - ranks[q] - ranks[q + 1]);
    table.push_back(std::move(row));
  }
  return table;
}

template <class F>
KoszulityReport check_koszul(const Presentation<F>& p, std::size_t cutoff) {
  if (cutoff < p.degree()) {
    throw Error(ErrorCode::kInvalidArgument, "Koszulity check needs a cutoff of at least N = " +
                                                 std::to_string(p.degree()));
  }
  auto k = KoszulNComplex<F>::build(p, cutoff);
  KoszulityReport report;
  report.cutoff = cutoff;
  report.homology = homology_table(p.field(), contraction(k));
  for (std::size_t n = 0; n < report.homology.size(); ++n) {
    const auto& row = report.homology[n];
    // exactness at C_1 is the presentation itself; anything else is a bug
    if (!row.empty() && row[0] != 0) {
      throw Error(ErrorCode::kInternal, "contracted Koszul complex not exact at C_1 in internal degree " +
                                            std::to_string(n));
    }
    for (std::size_t q = 1; q <= row.size() && !report.witness; ++q) {
      if (row[q - 1] != 0) report.witness = KoszulWitness{n, q, row[q - 1]};
    }
  }
  return report;
}

template <class F>
GlobalDimension global_dimension(const Presentation<F>& p) {
  GlobalDimension gd;
  // one generator and R = E^{⊗N}: A^{!*}_i = E^{⊗i} never vanishes, and no cap would stop the search
  if (p.dim_e() == 1 && !p.relations().space.is_zero()) {
    gd.infinite = true;
    return gd;
  }
  for (std::size_t i = p.degree();; ++i) {
    try {
      if (!p.dual(i).is_zero()) {
        gd.vanishing_index = i;
        continue;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kResource) throw;
      return gd;
    }
    gd.finite = true;
    gd.vanishing_index = i;
    std::size_t q = 0;
    while (contraction_index(q + 1, p.degree()) < i) ++q;
    gd.dimension = q;
    return gd;
  }
}

template <class F>
PoincareReport poincare_identity_check(const Presentation<F>& p, std::size_t cutoff) {
  PoincareReport report;
  report.cutoff = cutoff;
  const std::size_t big_n = p.degree();
  for (std::size_t d : p.hilbert_series(cutoff)) report.hilbert.push_back(static_cast<long long>(d));
  bool vanished = false;
  for (std::size_t j = 0; j <= cutoff; ++j) {
    long long coeff = 0;
    if (j % big_n == 0 || j % big_n == 1) {
      const long long dim = vanished ? 0 : static_cast<long long>(p.dual(j).dim());
      if (dim == 0 && j >= big_n) vanished = true;
      coeff = j % big_n == 0 ? dim : -dim;
    }
    report.dual_poly.push_back(coeff);
  }
  report.passed = true;
  for (std::size_t j = 0; j <= cutoff; ++j) {
    long long c = 0;
    for (std::size_t a = 0; a <= j; ++a) c += report.hilbert[a] * report.dual_poly[j - a];
    if (j == 0) c -= 1;
    report.residual.push_back(c);
    if (c != 0) report.passed = false;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Twist isomorphism

template <class F>
Matrix<F> twist_chain_map(const Presentation<F>& p, const Presentation<F>& twisted, const GradedAutomorphism<F>& alpha,
                          std::size_t m, std::size_t i) {
  const F& field = p.field();
  const auto& src = twisted.dual(i);
  const auto& dst = p.dual(i);
  std::vector<SparseRow<F>> columns;
  columns.reserve(src.dim());
  for (const auto& v : src.space.basis()) {
    // α^m ∘ θ_i acts on position t by α^{m+t}
    auto image_vec = apply_theta(field, alpha, v, i, static_cast<long long>(m));
    auto coords = dst.space.try_coordinates(field, image_vec);
    if (!coords) {
      throw Error(ErrorCode::kMembership, "α^m θ_i does not map (A^α)^{!*}_" + std::to_string(i) + " into A^{!*}_" +
                                              std::to_string(i));
    }
    columns.push_back(std::move(*coords));
  }
  Matrix<F> phi = Matrix<F>::from_columns(dst.dim(), columns);
  return kronecker(field, Matrix<F>::identity(field, p.component(m).dim()), phi);
}

template <class F>
TwistIsoReport verify_twist_iso(const Presentation<F>& p, const GradedAutomorphism<F>& alpha, std::size_t cutoff) {
  const F& field = p.field();
  TwistIsoReport report;
  report.cutoff = cutoff;
  Presentation<F> twisted = semi_cross(p, alpha);
  auto fail = [&report](std::size_t m, std::size_t i, const char* kind) {
    if (!report.failure) {
      report.failure = std::make_pair(m, i);
      report.failure_kind = kind;
    }
  };

  for (std::size_t i = 0; i <= cutoff; ++i) {
    if (!theta_image(field, alpha, twisted.dual(i).space, i).equals(field, p.dual(i).space)) {
      report.duals_match = false;
      fail(0, i, "theta-dual-mismatch");
    }
  }
  if (!report.duals_match) return report;

  auto k = KoszulNComplex<F>::build(p, cutoff);
  auto ka = KoszulNComplex<F>::build_twisted(p, twisted, alpha, cutoff);
  std::map<std::pair<std::size_t, std::size_t>, Matrix<F>> maps;
  auto chain_map = [&](std::size_t m, std::size_t i) -> const Matrix<F>& {
    auto it = maps.find({m, i});
    if (it == maps.end()) it = maps.emplace(std::make_pair(m, i), twist_chain_map(p, twisted, alpha, m, i)).first;
    return it->second;
  };
  for (std::size_t i = 0; i <= cutoff; ++i) {
    for (std::size_t m = 0; m + i <= cutoff; ++m) {
      ++report.bidegrees_checked;
      const Matrix<F>& phi = chain_map(m, i);
      if (phi.rows() != phi.cols() || rank(field, phi) != phi.rows()) {
        report.invertible = false;
        fail(m, i, "not-invertible");
      }
      if (i == 0) continue;
      Matrix<F> lhs = multiply(field, chain_map(m + 1, i - 1), ka.differential(m, i));
      Matrix<F> rhs = multiply(field, k.differential(m, i), phi);
      if (!lhs.equals(field, rhs)) {
        report.chain_map = false;
        fail(m, i, "chain-map-identity");
      }
    }
  }
  report.homology = homology_table(field, contraction(k));
  report.twisted_homology = homology_table(field, contraction(ka));
  report.homology_match = report.homology == report.twisted_homology;
  if (!report.homology_match) fail(0, 0, "homology-mismatch");
  return report;
}

template <class F>
bool twisted_paths_agree(const Presentation<F>& p, const GradedAutomorphism<F>& alpha, std::size_t cutoff) {
  const F& field = p.field();
  Presentation<F> twisted = semi_cross(p, alpha);
  auto ka = KoszulNComplex<F>::build_twisted(p, twisted, alpha, cutoff);
  auto ks = KoszulNComplex<F>::build(twisted, cutoff);
  std::vector<Matrix<F>> transport;
  for (std::size_t m = 0; m <= cutoff; ++m) transport.push_back(identification(p, twisted, alpha, m));
  for (std::size_t i = 1; i <= cutoff; ++i) {
    for (std::size_t m = 0; m + i <= cutoff; ++m) {
      Matrix<F> lhs = multiply(
          field, kronecker(field, transport[m + 1], Matrix<F>::identity(field, ks.dual_dim(i - 1))),
          ks.differential(m, i));
      Matrix<F> rhs = multiply(field, ka.differential(m, i),
                               kronecker(field, transport[m], Matrix<F>::identity(field, ks.dual_dim(i))));
      if (!lhs.equals(field, rhs)) return false;
    }
  }
  return true;
}

#define KZK_INSTANTIATE_KOSZUL(F)                                                                              \
  template std::vector<Matrix<F>> koszul_coefficients<F>(const F&, std::size_t, const TensorSubspace<F>&,      \
                                                         const TensorSubspace<F>&);                            \
  template class KoszulNComplex<F>;                                                                            \
  template ContractionComplex<F> contraction<F>(const KoszulNComplex<F>&);                                     \
  template bool composites_vanish<F>(const F&, const ContractionComplex<F>&);                                  \
  template std::vector<std::vector<std::size_t>> homology_table<F>(const F&, const ContractionComplex<F>&);    \
  template KoszulityReport check_koszul<F>(const Presentation<F>&, std::size_t);                               \
  template GlobalDimension global_dimension<F>(const Presentation<F>&);                                        \
  template PoincareReport poincare_identity_check<F>(const Presentation<F>&, std::size_t);                     \
  template Matrix<F> twist_chain_map<F>(const Presentation<F>&, const Presentation<F>&,                        \
                                        const GradedAutomorphism<F>&, std::size_t, std::size_t);               \
  template TwistIsoReport verify_twist_iso<F>(const Presentation<F>&, const GradedAutomorphism<F>&, std::size_t); \
  template bool twisted_paths_agree<F>(const Presentation<F>&, const GradedAutomorphism<F>&, std::size_t);

KZK_INSTANTIATE_KOSZUL(Rational)
KZK_INSTANTIATE_KOSZUL(PrimeField)

}  // namespace kzk
