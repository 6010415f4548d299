#pragma once

// Independent dense reference computations over Q. Nothing here calls the
// library's elimination code: the point is to have a second opinion.

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "presentation.hpp"

namespace oracle {

using Vec = std::vector<mpq_class>;
using Rows = std::vector<Vec>;

inline std::size_t power(std::size_t d, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < n; ++k) r *= d;
  return r;
}

// Gauss-Jordan on a copy; returns the nonzero rows of the reduced form with
// pivots in increasing order and leading entries 1.
inline Rows reduce(Rows m, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    mpq_class lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0) continue;
      mpq_class f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

inline std::size_t rank(const Rows& m, std::size_t cols) { return reduce(m, cols).size(); }

// Basis of {v : m v = 0}.
inline Rows kernel(const Rows& m, std::size_t cols) {
  Rows red = reduce(m, cols);
  std::vector<long> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < red.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (red[r][c] != 0) {
        pivot_of_col[c] = static_cast<long>(r);
        break;
      }
    }
  }
  Rows out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -red[pivot_of_col[c]][free];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Rows spanning E^{⊗j} ⊗ span(r) ⊗ E^{⊗k}, built from the definition.
inline Rows blocks(std::size_t d, const Rows& r, std::size_t big_n, std::size_t j, std::size_t k) {
  Rows out;
  const std::size_t n = j + big_n + k;
  const std::size_t tail = power(d, k), mid = power(d, big_n);
  for (std::size_t w = 0; w < power(d, j); ++w) {
    for (const auto& rel : r) {
      for (std::size_t w2 = 0; w2 < tail; ++w2) {
        Vec v(power(d, n), 0);
        for (std::size_t c = 0; c < mid; ++c) v[(w * mid + c) * tail + w2] = rel[c];
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

// dim I(R)_n by enumerating every w ⊗ r ⊗ w'.
inline std::size_t ideal_dim(std::size_t d, const Rows& r, std::size_t big_n, std::size_t n) {
  if (n < big_n || r.empty()) return 0;
  Rows all;
  for (std::size_t j = 0; j + big_n <= n; ++j) {
    Rows b = blocks(d, r, big_n, j, n - big_n - j);
    all.insert(all.end(), b.begin(), b.end());
  }
  return rank(all, power(d, n));
}

inline std::size_t component_dim(std::size_t d, const Rows& r, std::size_t big_n, std::size_t n) {
  return power(d, n) - ideal_dim(d, r, big_n, n);
}

// A^{!*}_i as the intersection of all E^{⊗j} ⊗ R ⊗ E^{⊗k} (j + N + k = i),
// computed through orthogonal complements: ⋂ U_j = (Σ U_j^⊥)^⊥.
inline Rows dual_jfold(std::size_t d, const Rows& r, std::size_t big_n, std::size_t i) {
  const std::size_t amb = power(d, i);
  if (i < big_n) {
    Rows id;
    for (std::size_t c = 0; c < amb; ++c) {
      Vec v(amb, 0);
      v[c] = 1;
      id.push_back(std::move(v));
    }
    return id;
  }
  if (r.empty()) return {};
  Rows complements;
  for (std::size_t j = 0; j + big_n <= i; ++j) {
    Rows perp = kernel(blocks(d, r, big_n, j, i - big_n - j), amb);
    complements.insert(complements.end(), perp.begin(), perp.end());
  }
  if (complements.empty()) return reduce(blocks(d, r, big_n, 0, i - big_n), amb);
  return reduce(kernel(complements, amb), amb);
}

// θ_n applied to a word straight from the definition
// x_0 ⊗ … ⊗ x_{n-1} ↦ x_0 ⊗ α(x_1) ⊗ … ⊗ α^{n-1}(x_{n-1}); alpha[i][j] = coefficient of e_i in α(e_j).
inline Vec theta_word(std::size_t d, const Rows& alpha, std::size_t n, std::size_t word) {
  std::vector<std::size_t> letters(n);
  for (std::size_t t = n; t-- > 0;) {
    letters[t] = word % d;
    word /= d;
  }
  std::vector<Rows> powers{Rows(d, Vec(d, 0))};
  for (std::size_t a = 0; a < d; ++a) powers[0][a][a] = 1;
  for (std::size_t t = 1; t < n; ++t) {
    Rows next(d, Vec(d, 0));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) next[a][b] += alpha[a][c] * powers.back()[c][b];
    powers.push_back(std::move(next));
  }
  Vec out{1};
  for (std::size_t t = 0; t < n; ++t) {
    Vec next(out.size() * d, 0);
    for (std::size_t idx = 0; idx < out.size(); ++idx)
      for (std::size_t a = 0; a < d; ++a) next[idx * d + a] = out[idx] * powers[t][a][letters[t]];
    out = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------
// conversions

inline Rows to_rows(const kzk::Subspace<kzk::Rational>& s) {
  Rows out;
  for (const auto& row : s.basis()) {
    Vec v(s.ambient_dim(), 0);
    for (const auto& e : row) v[e.col] = e.val;
    out.push_back(std::move(v));
  }
  return out;
}

inline kzk::SparseRow<kzk::Rational> to_sparse(const Vec& v) {
  kzk::SparseRow<kzk::Rational> out;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] != 0) out.push_back({c, v[c]});
  }
  return out;
}

inline kzk::Matrix<kzk::Rational> to_matrix(const Rows& m, std::size_t cols) {
  std::vector<kzk::SparseRow<kzk::Rational>> rows;
  for (const auto& r : m) rows.push_back(to_sparse(r));
  return kzk::Matrix<kzk::Rational>::from_rows(cols, std::move(rows));
}

inline kzk::Subspace<kzk::Rational> to_subspace(const Rows& rows, std::size_t ambient) {
  std::vector<kzk::SparseRow<kzk::Rational>> sparse;
  for (const auto& r : rows) sparse.push_back(to_sparse(r));
  return kzk::span(kzk::Rational(), ambient, sparse);
}

// ---------------------------------------------------------------------------
// random instances (fixed seeds at call sites)

inline mpq_class small_rational(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Vec sparse_vector(std::mt19937& rng, std::size_t size, std::size_t terms) {
  Vec v(size, 0);
  std::uniform_int_distribution<std::size_t> pos(0, size - 1);
  for (std::size_t t = 0; t < terms; ++t) v[pos(rng)] += small_rational(rng);
  return v;
}

struct Instance {
  std::size_t dim_e = 2;
  std::size_t degree = 2;
  Rows relations;
  Rows alpha;  // empty when the instance carries no automorphism
};

inline kzk::Presentation<kzk::Rational> presentation_of(const Instance& in) {
  std::vector<std::string> gens;
  for (std::size_t s = 0; s < in.dim_e; ++s) gens.push_back("g" + std::to_string(s));
  return kzk::Presentation<kzk::Rational>(kzk::Rational(), gens, in.degree,
                                          to_subspace(in.relations, power(in.dim_e, in.degree)));
}

inline kzk::Matrix<kzk::Rational> alpha_matrix(const Instance& in) { return to_matrix(in.alpha, in.dim_e); }

// dim E <= 3, N in {2, 3}, dim R <= 2, no automorphism.
inline Instance random_presentation(std::mt19937& rng) {
  Instance in;
  in.dim_e = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  in.degree = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
  const std::size_t amb = power(in.dim_e, in.degree);
  const std::size_t dim_r = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(2, amb))(rng);
  for (std::size_t k = 0; k < dim_r; ++k) {
    in.relations.push_back(sparse_vector(rng, amb, std::uniform_int_distribution<std::size_t>(1, 3)(rng)));
  }
  in.relations = reduce(in.relations, amb);
  return in;
}

inline Rows multiply(const Rows& a, const Rows& b) {
  Rows out(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Random invertible integer matrix: unit lower triangular times unit upper
// triangular, then a row permutation.
inline Rows random_invertible(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Rows lower(d, Vec(d, 0)), upper(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    lower[i][i] = upper[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) lower[i][j] = coef(rng);
    for (std::size_t j = i + 1; j < d; ++j) upper[i][j] = coef(rng);
  }
  Rows g = multiply(lower, upper);
  std::shuffle(g.begin(), g.end(), rng);
  return g;
}

inline Rows inverse(Rows m) {
  const std::size_t d = m.size();
  for (std::size_t i = 0; i < d; ++i) {
    m[i].resize(2 * d, 0);
    m[i][d + i] = 1;
  }
  Rows red = reduce(m, 2 * d);
  Rows out(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out[i][j] = red[i][d + j];
  return out;
}

// α = λ g P g^{-1} with P a signed permutation involution, so α² = λ² and any
// span{r, α^{⊗N} r} is α-stable. Used for the semi-cross instances.
inline Instance random_twisted_instance(std::mt19937& rng, std::size_t dim_e, std::size_t degree) {
  Instance in;
  in.dim_e = dim_e;
  in.degree = degree;
  Rows p(dim_e, Vec(dim_e, 0));
  std::vector<std::size_t> perm(dim_e);
  for (std::size_t i = 0; i < dim_e; ++i) perm[i] = i;
  if (dim_e >= 2 && rng() % 2) std::swap(perm[0], perm[1]);
  for (std::size_t i = 0; i < dim_e; ++i) {
    if (perm[i] < i) continue;
    const int sign = rng() % 2 ? 1 : -1;
    p[perm[i]][i] = sign;
    p[i][perm[i]] = sign;
  }
  Rows g = random_invertible(rng, dim_e);
  mpq_class lambda(static_cast<long>(std::uniform_int_distribution<int>(1, 3)(rng)),
                   static_cast<long>(std::uniform_int_distribution<int>(1, 2)(rng)));
  lambda.canonicalize();
  if (rng() % 2) lambda = -lambda;
  in.alpha = multiply(multiply(g, p), inverse(g));
  for (auto& row : in.alpha)
    for (auto& x : row) x *= lambda;

  const std::size_t amb = power(dim_e, degree);
  Vec r0 = sparse_vector(rng, amb, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
  // α^{⊗N} r0 through the word-by-word definition: every position gets α
  Vec image(amb, 0);
  for (std::size_t w = 0; w < amb; ++w) {
    if (r0[w] == 0) continue;
    std::size_t idx = w;
    std::vector<std::size_t> letters(degree);
    for (std::size_t t = degree; t-- > 0;) {
      letters[t] = idx % dim_e;
      idx /= dim_e;
    }
    Vec part{r0[w]};
    for (std::size_t t = 0; t < degree; ++t) {
      Vec next(part.size() * dim_e, 0);
      for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = 0; b < dim_e; ++b) next[a * dim_e + b] = part[a] * in.alpha[b][letters[t]];
      part = std::move(next);
    }
    for (std::size_t c = 0; c < amb; ++c) image[c] += part[c];
  }
  in.relations = reduce({r0, image}, amb);
  return in;
}

}  // namespace oracle
