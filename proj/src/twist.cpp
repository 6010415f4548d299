#include "twist.hpp"

namespace kzk {

namespace {

template <class F>
Matrix<F> kron_of_powers(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n, long long sign) {
  Matrix<F> result = Matrix<F>::identity(field, 1);
  for (std::size_t t = 0; t < n; ++t) {
    result = kronecker(field, result, alpha.power(field, sign * static_cast<long long>(t)));
  }
  return result;
}

}  // namespace

template <class F>
Matrix<F> theta(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n) {
  return kron_of_powers(field, alpha, n, 1);
}

template <class F>
Matrix<F> theta_inverse(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n) {
  return kron_of_powers(field, alpha, n, -1);
}

template <class F>
SparseRow<F> apply_theta(const F& field, const GradedAutomorphism<F>& alpha, const SparseRow<F>& raw, std::size_t n,
                         long long shift) {
  std::vector<Matrix<F>> factors;
  factors.reserve(n);
  for (std::size_t t = 0; t < n; ++t) factors.push_back(alpha.power(field, shift + static_cast<long long>(t)));
  return apply_tensor_factors<F>(field, factors, raw);
}

template <class F>
Subspace<F> theta_image(const F& field, const GradedAutomorphism<F>& alpha, const Subspace<F>& s, std::size_t n,
                        long long shift) {
  RrefBuilder<F> builder(field, s.ambient_dim());
  for (const auto& row : s.basis()) builder.insert(apply_theta(field, alpha, row, n, shift));
  return std::move(builder).finish();
}

template <class F>
bool theta_factorization_holds(const F& field, const GradedAutomorphism<F>& alpha, std::size_t n, std::size_t h) {
  if (h < 1 || h > n) throw Error(ErrorCode::kInvalidArgument, "factorization head must satisfy 1 <= h <= n");
  const std::size_t d = alpha.dim_e();
  std::size_t tail_size = 1, head_size = 1;
  for (std::size_t t = 0; t < n - h; ++t) tail_size *= d;
  for (std::size_t t = 0; t < h; ++t) head_size *= d;
  Matrix<F> left = kronecker(field, theta(field, alpha, h), Matrix<F>::identity(field, tail_size));
  Matrix<F> tail = multiply(field, alpha.tensor_power(field, static_cast<long long>(h), n - h),
                            theta(field, alpha, n - h));
  Matrix<F> right = kronecker(field, Matrix<F>::identity(field, head_size), tail);
  return multiply(field, left, right).equals(field, theta(field, alpha, n));
}

template <class F>
Presentation<F> semi_cross(const Presentation<F>& p, const GradedAutomorphism<F>& alpha) {
  const F& field = p.field();
  Subspace<F> twisted = theta_image(field, alpha.inverse(), p.relations().space, p.degree());
  Presentation<F> out(field, p.gens(), p.degree(), std::move(twisted), p.cap());
  // α still preserves θ_N^{-1}(R); a failure here is a bug, not bad input.
  try {
    validate_automorphism(out, alpha.matrix());
  } catch (const Error& e) {
    throw Error(ErrorCode::kInternal, std::string("semi-cross relations not preserved by α: ") + e.what());
  }
  return out;
}

template <class F>
Matrix<F> identification(const Presentation<F>& p, const Presentation<F>& twisted, const GradedAutomorphism<F>& alpha,
                         std::size_t n) {
  const F& field = p.field();
  const auto& src = twisted.component(n);
  const auto& dst = p.component(n);
  std::vector<SparseRow<F>> columns;
  columns.reserve(src.dim());
  for (std::size_t w : src.normal_words) {
    columns.push_back(dst.reduce(field, apply_theta(field, alpha, {{w, field.one()}}, n)));
  }
  return Matrix<F>::from_columns(dst.dim(), columns);
}

template <class F>
DiagramReport verify_m_alpha_diagram(const Presentation<F>& p, const GradedAutomorphism<F>& alpha,
                                     std::size_t cutoff) {
  const F& field = p.field();
  DiagramReport report;
  report.cutoff = cutoff;
  std::vector<Element<F>> gens;
  for (std::size_t s = 0; s < p.dim_e(); ++s) gens.push_back(p.generator(s));
  for (std::size_t n = 0; n <= cutoff; ++n) {
    WordBasis basis(p.dim_e(), n, p.cap());
    for (std::size_t w = 0; w < basis.size(); ++w) {
      auto letters = basis.word(w);
      Element<F> lhs = p.unit();
      for (std::size_t letter : letters) lhs = p.twisted_multiply(alpha, lhs, gens[letter]);
      Element<F> rhs = p.project(n, apply_theta(field, alpha, {{w, field.one()}}, n));
      ++report.words_checked;
      if (!p.elements_equal(lhs, rhs)) {
        report.passed = false;
        report.counterexample = std::move(letters);
        return report;
      }
    }
  }
  return report;
}

#define KZK_INSTANTIATE_TWIST(F)                                                                               \
  template SparseRow<F> apply_theta<F>(const F&, const GradedAutomorphism<F>&, const SparseRow<F>&, std::size_t, \
                                       long long);                                                             \
  template Subspace<F> theta_image<F>(const F&, const GradedAutomorphism<F>&, const Subspace<F>&, std::size_t, \
                                      long long);                                                              \
  template Matrix<F> theta<F>(const F&, const GradedAutomorphism<F>&, std::size_t);                            \
  template Matrix<F> theta_inverse<F>(const F&, const GradedAutomorphism<F>&, std::size_t);                    \
  template bool theta_factorization_holds<F>(const F&, const GradedAutomorphism<F>&, std::size_t, std::size_t); \
  template Presentation<F> semi_cross<F>(const Presentation<F>&, const GradedAutomorphism<F>&);                \
  template Matrix<F> identification<F>(const Presentation<F>&, const Presentation<F>&,                         \
                                       const GradedAutomorphism<F>&, std::size_t);                             \
  template DiagramReport verify_m_alpha_diagram<F>(const Presentation<F>&, const GradedAutomorphism<F>&,       \
                                                   std::size_t);

KZK_INSTANTIATE_TWIST(Rational)
KZK_INSTANTIATE_TWIST(PrimeField)

}  // namespace kzk
