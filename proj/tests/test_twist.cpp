#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "twist.hpp"

using kzk::Matrix;
using kzk::Rational;

namespace {

const Rational Q;

kzk::GradedAutomorphism<Rational> random_free_aut(std::mt19937& rng, const fixture::P& free, std::size_t d) {
  return kzk::validate_automorphism(free, oracle::to_matrix(oracle::random_invertible(rng, d), d));
}

fixture::P free_algebra(std::size_t d) {
  std::vector<std::string> gens;
  for (std::size_t s = 0; s < d; ++s) gens.push_back("g" + std::to_string(s));
  return fixture::P(Q, gens, 2, kzk::Subspace<Rational>::zero(d * d));
}

oracle::Rows dense_of(const Matrix<Rational>& m) {
  oracle::Rows out(m.rows(), oracle::Vec(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(Q, i, j);
  return out;
}

}  // namespace

TEST_CASE("theta matches the definition word by word") {
  std::mt19937 rng(51);
  for (std::size_t d = 1; d <= 3; ++d) {
    auto free = free_algebra(d);
    for (int trial = 0; trial < 4; ++trial) {
      auto alpha = random_free_aut(rng, free, d);
      const auto a = dense_of(alpha.matrix());
      for (std::size_t n = 0; n <= (d == 3 ? 4u : 5u); ++n) {
        auto th = kzk::theta(Q, alpha, n);
        const std::size_t size = oracle::power(d, n);
        REQUIRE(th.rows() == size);
        for (std::size_t w = 0; w < size; ++w) {
          auto column = oracle::to_sparse(oracle::theta_word(d, a, n, w));
          kzk::SparseRow<Rational> unit{{w, 1}};
          CHECK(kzk::rows_equal(Q, th.apply(Q, unit), column));
          CHECK(kzk::rows_equal(Q, kzk::apply_theta(Q, alpha, unit, n), column));
        }
        CHECK(kzk::multiply(Q, kzk::theta_inverse(Q, alpha, n), th).equals(Q, Matrix<Rational>::identity(Q, size)));
      }
    }
  }
}

TEST_CASE("shifted theta is a tensor power of α composed with theta") {
  std::mt19937 rng(52);
  auto free = free_algebra(2);
  auto alpha = random_free_aut(rng, free, 2);
  for (long long shift = 0; shift <= 3; ++shift) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto raw = oracle::to_sparse(oracle::sparse_vector(rng, oracle::power(2, n), 3));
      auto expect = kzk::apply_tensor_power(Q, alpha.power(Q, shift), kzk::apply_theta(Q, alpha, raw, n), n);
      CHECK(kzk::rows_equal(Q, kzk::apply_theta(Q, alpha, raw, n, shift), expect));
    }
  }
}

TEST_CASE("theta factorization identity for every split") {
  std::mt19937 rng(53);
  for (std::size_t d = 2; d <= 3; ++d) {
    auto free = free_algebra(d);
    for (int trial = 0; trial < 3; ++trial) {
      auto alpha = random_free_aut(rng, free, d);
      for (std::size_t n = 1; n <= (d == 2 ? 6u : 4u); ++n)
        for (std::size_t h = 1; h <= n; ++h) CHECK(kzk::theta_factorization_holds(Q, alpha, n, h));
    }
  }
  auto free = free_algebra(2);
  auto alpha = random_free_aut(rng, free, 2);
  CHECK_THROWS_AS(kzk::theta_factorization_holds(Q, alpha, 3, 0), kzk::Error);
  CHECK_THROWS_AS(kzk::theta_factorization_holds(Q, alpha, 3, 4), kzk::Error);
}

TEST_CASE("semi-cross of the braid algebra by the swap") {
  auto braid = fixture::load(fixture::kBraid);
  auto cubic = fixture::load(fixture::kCubic);
  auto twisted = kzk::semi_cross(braid.p, *braid.alpha);
  CHECK(twisted.relations().space.equals(Q, cubic.p.relations().space));
  // and back
  auto back = kzk::semi_cross(twisted, *braid.alpha);
  CHECK(back.relations().space.equals(Q, braid.p.relations().space));
}

TEST_CASE("semi-cross round trip and preserved Hilbert series on random instances") {
  std::mt19937 rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    auto in = oracle::random_twisted_instance(rng, 1 + trial % 3, 2 + trial % 2);
    auto p = oracle::presentation_of(in);
    auto alpha = kzk::validate_automorphism(p, oracle::alpha_matrix(in));
    auto twisted = kzk::semi_cross(p, alpha);
    auto inverse = kzk::validate_automorphism(twisted, alpha.inverse_matrix());
    auto back = kzk::semi_cross(twisted, inverse);
    CHECK(back.relations().space.equals(Q, p.relations().space));
    CHECK(twisted.hilbert_series(5) == p.hilbert_series(5));
    // θ_N maps the twisted relations onto R
    CHECK(kzk::theta_image(Q, alpha, twisted.relations().space, p.degree()).equals(Q, p.relations().space));
  }
}

TEST_CASE("the identification intertwines the two products") {
  auto braid = fixture::load(fixture::kBraid);
  auto report = kzk::verify_m_alpha_diagram(braid.p, *braid.alpha, 6);
  CHECK(report.passed);
  CHECK(report.words_checked > 0);
  CHECK_FALSE(report.counterexample);

  std::mt19937 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    auto in = oracle::random_twisted_instance(rng, 2, 2 + trial % 2);
    auto p = oracle::presentation_of(in);
    auto alpha = kzk::validate_automorphism(p, oracle::alpha_matrix(in));
    CHECK(kzk::verify_m_alpha_diagram(p, alpha, 5).passed);
    auto twisted = kzk::semi_cross(p, alpha);
    for (std::size_t n = 0; n <= 4; ++n) {
      auto ident = kzk::identification(p, twisted, alpha, n);
      CHECK(ident.rows() == ident.cols());
      CHECK(kzk::inverse(Q, ident).has_value());
    }
  }
}

TEST_CASE("semi-cross over a prime field") {
  kzk::PrimeField f7(7);
  auto braid = kzk::parse_source(fixture::kBraid);
  auto p = kzk::build_presentation(f7, braid);
  auto alpha = kzk::build_automorphism(p, braid);
  REQUIRE(alpha);
  auto twisted = kzk::semi_cross(p, *alpha);
  auto cubic = kzk::build_presentation(f7, kzk::parse_source(fixture::kCubic));
  CHECK(twisted.relations().space.equals(f7, cubic.relations().space));
}
