#include "gorenstein.hpp"

namespace kzk {

template <class F>
DualComplex<F> DualComplex<F>::build(const Presentation<F>& p, std::size_t cutoff, std::size_t top_index) {
  const F& field = p.field();
  const std::size_t d = p.dim_e();
  DualComplex c(field, p.degree(), cutoff, top_index);
  for (std::size_t m = 0; m <= cutoff; ++m) c.component_dims_.push_back(p.component(m).dim());
  for (std::size_t i = 0; i <= top_index; ++i) c.dual_dims_.push_back(p.dual(i).dim());

  std::vector<std::vector<Matrix<F>>> transposed(top_index + 1);
  for (std::size_t i = 1; i <= top_index; ++i) {
    for (auto& coeff : koszul_coefficients(field, d, p.dual(i), p.dual(i - 1))) {
      transposed[i].push_back(coeff.transposed());
    }
  }
  for (std::size_t m = 0; m < cutoff; ++m) {
    std::vector<Matrix<F>> left;
    for (std::size_t s = 0; s < d; ++s) left.push_back(p.left_multiplication(m, p.generator(s)));
    for (std::size_t i = 1; i <= top_index; ++i) {
      Matrix<F> acc(c.component_dims_[m + 1] * c.dual_dims_[i], c.component_dims_[m] * c.dual_dims_[i - 1]);
      for (std::size_t s = 0; s < d; ++s) acc = add(field, acc, kronecker(field, left[s], transposed[i][s]));
      c.steps_.emplace(std::make_pair(m, i), std::move(acc));
    }
  }
  return c;
}

template <class F>
const Matrix<F>& DualComplex<F>::step(std::size_t m, std::size_t i) const {
  auto it = steps_.find({m, i});
  if (it == steps_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "dual step (" + std::to_string(m) + ", " + std::to_string(i) + ") is outside the truncation");
  }
  return it->second;
}

template <class F>
Matrix<F> DualComplex<F>::composite(std::size_t m, std::size_t i, std::size_t steps) const {
  if (i == 0) throw Error(ErrorCode::kInvalidArgument, "dual composite starts at i >= 1");
  Matrix<F> acc = Matrix<F>::identity(field_, term_dim(m, i - 1));
  for (std::size_t t = 0; t < steps; ++t) acc = multiply(field_, step(m + t, i + t), acc);
  return acc;
}

template <class F>
DualChain<F> dual_chain(const DualComplex<F>& c, long long weight, std::size_t top_q) {
  const std::size_t big_n = c.degree();
  const long long cutoff = static_cast<long long>(c.cutoff());
  DualChain<F> chain;
  chain.weight = weight;
  std::vector<long long> value_degree;
  for (std::size_t q = 0; q <= top_q; ++q) {
    const std::size_t i = contraction_index(q, big_n);
    const long long m = weight + static_cast<long long>(i);
    value_degree.push_back(m);
    chain.in_range.push_back(m <= cutoff);
    chain.term_dims.push_back(m < 0 || m > cutoff ? 0 : c.term_dim(static_cast<std::size_t>(m), i));
  }
  for (std::size_t q = 0; q < top_q; ++q) {
    if (!chain.in_range[q] || !chain.in_range[q + 1]) {
      chain.maps.emplace_back();
      continue;
    }
    if (value_degree[q] < 0) {
      chain.maps.emplace_back(Matrix<F>(chain.term_dims[q + 1], 0));
      continue;
    }
    const std::size_t i = contraction_index(q, big_n);
    const std::size_t steps = contraction_index(q + 1, big_n) - i;
    chain.maps.emplace_back(c.composite(static_cast<std::size_t>(value_degree[q]), i + 1, steps));
  }
  return chain;
}

std::optional<std::size_t> GorensteinReport::dim(std::size_t q, long long weight) const {
  for (const auto& row : table) {
    if (row.weight == weight && q < row.dims.size()) return row.dims[q];
  }
  return std::nullopt;
}

const char* verdict_name(GorensteinVerdict v) {
  return v == GorensteinVerdict::kNotGorenstein ? "not-gorenstein" : "gorenstein-consistent-up-to-cutoff";
}

template <class F>
GorensteinReport check_gorenstein(const Presentation<F>& p, std::size_t cutoff) {
  const F& field = p.field();
  const std::size_t big_n = p.degree();
  GorensteinReport report;
  report.cutoff = cutoff;
  report.gldim = global_dimension(p);
  if (report.gldim.finite) {
    report.top_q = report.gldim.dimension;
  } else {
    while (contraction_index(report.top_q + 1, big_n) <= cutoff) ++report.top_q;
    report.warning = report.gldim.infinite ? "infinite global dimension; verdicts are truncation-only"
                                           : "global dimension not found below the resource cap; verdicts are truncation-only";
  }
  if (cutoff >= big_n) {
    report.koszul_verified = check_koszul(p, cutoff).koszul_up_to_cutoff();
  }
  if (!report.koszul_verified) {
    std::string note = "Koszulity not verified up to the cutoff; the Gorenstein criterion assumes it";
    report.warning = report.warning ? *report.warning + "; " + note : note;
  }

  const std::size_t top_q = report.top_q;
  const bool open_top = !report.gldim.finite;
  const long long lowest = -static_cast<long long>(contraction_index(top_q, big_n));
  auto complex = DualComplex<F>::build(p, cutoff, contraction_index(top_q, big_n));

  // incoming rank into H^top per weight, for the witness rule
  std::vector<std::size_t> incoming_top;
  for (long long w = lowest; w <= static_cast<long long>(cutoff); ++w) {
    auto chain = dual_chain(complex, w, top_q);
    std::vector<std::optional<std::size_t>> ranks;
    for (const auto& m : chain.maps) ranks.push_back(m ? std::optional<std::size_t>(rank(field, *m)) : std::nullopt);
    CohomologyRow row;
    row.weight = w;
    row.term_dims = chain.term_dims;
    for (std::size_t q = 0; q <= top_q; ++q) {
      bool conclusive = chain.in_range[q];
      if (q > 0) conclusive = conclusive && ranks[q - 1].has_value();
      if (q < top_q) conclusive = conclusive && ranks[q].has_value();
      if (q == top_q && open_top) conclusive = false;
      if (!conclusive) {
        row.dims.emplace_back();
        continue;
      }
      const std::size_t out = q < top_q ? *ranks[q] : 0;
      const std::size_t in = q > 0 ? *ranks[q - 1] : 0;
      row.dims.emplace_back(chain.term_dims[q] - out - in);
    }
    incoming_top.push_back(top_q > 0 && ranks[top_q - 1] ? *ranks[top_q - 1] : 0);
    report.table.push_back(std::move(row));
  }

  for (std::size_t q = 0; q <= top_q && !report.witness; ++q) {
    if (q == top_q && !open_top) break;
    for (const auto& row : report.table) {
      if (row.dims[q] && *row.dims[q] != 0) {
        report.witness = GorensteinWitness{
            q, row.weight, static_cast<std::size_t>(row.weight + static_cast<long long>(contraction_index(q, big_n))),
            *row.dims[q], true};
        break;
      }
    }
  }
  if (report.witness) {
    report.verdict = GorensteinVerdict::kNotGorenstein;
    return report;
  }
  if (open_top) return report;

  std::size_t nonzero_weights = 0;
  for (const auto& row : report.table) {
    if (row.dims[top_q] && *row.dims[top_q] != 0) {
      ++nonzero_weights;
      report.top_total += *row.dims[top_q];
    }
  }
  report.top_is_line = nonzero_weights == 1 && report.top_total == 1;
  if (report.top_is_line || report.top_total == 0) return report;

  const std::size_t c_top = contraction_index(top_q, big_n);
  const GorensteinWitness* fallback = nullptr;
  GorensteinWitness first_nonzero;
  for (std::size_t r = 0; r < report.table.size(); ++r) {
    const auto& row = report.table[r];
    if (!row.dims[top_q] || *row.dims[top_q] == 0) continue;
    GorensteinWitness w{top_q, row.weight, static_cast<std::size_t>(row.weight + static_cast<long long>(c_top)),
                        *row.dims[top_q], false};
    if (!fallback) {
      first_nonzero = w;
      fallback = &first_nonzero;
    }
    if (incoming_top[r] != 0) {
      report.witness = w;
      break;
    }
  }
  if (!report.witness) report.witness = *fallback;
  report.verdict = GorensteinVerdict::kNotGorenstein;
  return report;
}

template <class F>
TransferReport gorenstein_transfer_check(const Presentation<F>& p, const GradedAutomorphism<F>& alpha,
                                         std::size_t cutoff) {
  TransferReport report;
  report.original = check_gorenstein(p, cutoff);
  report.twisted = check_gorenstein(semi_cross(p, alpha), cutoff);
  if (report.original.top_q != report.twisted.top_q || report.original.table.size() != report.twisted.table.size()) {
    report.passed = false;
    return report;
  }
  for (std::size_t r = 0; r < report.original.table.size(); ++r) {
    const auto& a = report.original.table[r];
    const auto& b = report.twisted.table[r];
    for (std::size_t q = 0; q < a.dims.size(); ++q) {
      if (!a.dims[q] || !b.dims[q]) continue;
      ++report.entries_compared;
      if (*a.dims[q] != *b.dims[q]) {
        report.passed = false;
        report.mismatch = std::make_pair(q, a.weight);
        return report;
      }
    }
  }
  return report;
}

std::optional<std::size_t> euler_identity_rows(const GorensteinReport& report) {
  std::size_t checked = 0;
  for (const auto& row : report.table) {
    long long terms = 0, cohomology = 0;
    bool complete = true;
    for (std::size_t q = 0; q < row.dims.size(); ++q) {
      if (!row.dims[q]) {
        complete = false;
        break;
      }
      const long long sign = q % 2 == 0 ? 1 : -1;
      terms += sign * static_cast<long long>(row.term_dims[q]);
      cohomology += sign * static_cast<long long>(*row.dims[q]);
    }
    if (!complete) continue;
    if (terms != cohomology) return std::nullopt;
    ++checked;
  }
  return checked;
}

#define KZK_INSTANTIATE_GORENSTEIN(F)                                                                          \
  template class DualComplex<F>;                                                                               \
  template DualChain<F> dual_chain<F>(const DualComplex<F>&, long long, std::size_t);                          \
  template GorensteinReport check_gorenstein<F>(const Presentation<F>&, std::size_t);                          \
  template TransferReport gorenstein_transfer_check<F>(const Presentation<F>&, const GradedAutomorphism<F>&,   \
                                                       std::size_t);

KZK_INSTANTIATE_GORENSTEIN(Rational)
KZK_INSTANTIATE_GORENSTEIN(PrimeField)

}  // namespace kzk
