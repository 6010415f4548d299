#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using kzk::Element;
using kzk::Rational;
using kzk::Side;

namespace {

const Rational Q;

Element<Rational> random_element(std::mt19937& rng, const fixture::P& p, std::size_t n) {
  const std::size_t dim = p.component(n).dim();
  if (dim == 0) return {n, {}};
  return {n, oracle::to_sparse(oracle::sparse_vector(rng, dim, 1 + rng() % 3))};
}

}  // namespace

TEST_CASE("braid Hilbert series") {
  auto b = fixture::load(fixture::kBraid);
  const std::vector<std::size_t> expect{1, 2, 4, 7, 12, 20, 33, 54, 88};
  CHECK(b.p.hilbert_series(8) == expect);
}

TEST_CASE("polynomial ring and free algebra Hilbert series") {
  auto poly = fixture::load(fixture::kPolynomial);
  auto free = fixture::load(fixture::kFree);
  auto hp = poly.p.hilbert_series(6);
  auto hf = free.p.hilbert_series(6);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(hp[n] == n + 1);
    CHECK(hf[n] == oracle::power(2, n));
  }
}

TEST_CASE("component dimensions agree with the oracle on random presentations") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto in = oracle::random_presentation(rng);
    auto p = oracle::presentation_of(in);
    auto h = p.hilbert_series(5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(h[n] == oracle::component_dim(in.dim_e, in.relations, in.degree, n));
  }
}

TEST_CASE("normal words are the non-pivot columns") {
  auto b = fixture::load(fixture::kBraid);
  const auto& c3 = b.p.component(3);
  CHECK(c3.dim() == 7);
  // xyx - yxy: the pivot is xyx (index 2), so xyx reduces to yxy
  std::vector<std::size_t> xyx{0, 1, 0}, yxy{1, 0, 1};
  CHECK(b.p.elements_equal(b.p.word_element(xyx), b.p.word_element(yxy)));
  CHECK(c3.slot[2] < 0);
  CHECK(c3.slot[5] >= 0);
}

TEST_CASE("multiplication concatenates words and is associative") {
  std::mt19937 rng(32);
  auto b = fixture::load(fixture::kBraid);
  const auto& p = b.p;
  kzk::WordBasis w2(2, 2), w3(2, 3), w5(2, 5);
  for (std::size_t u = 0; u < w2.size(); ++u) {
    for (std::size_t v = 0; v < w3.size(); ++v) {
      auto uv = w2.word(u);
      auto tail = w3.word(v);
      auto prod = p.multiply(p.word_element(uv), p.word_element(tail));
      uv.insert(uv.end(), tail.begin(), tail.end());
      CHECK(p.elements_equal(prod, p.word_element(uv)));
    }
  }
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_element(rng, p, rng() % 3);
    auto y = random_element(rng, p, rng() % 3);
    auto z = random_element(rng, p, rng() % 3);
    CHECK(p.elements_equal(p.multiply(p.multiply(x, y), z), p.multiply(x, p.multiply(y, z))));
    CHECK(p.elements_equal(p.multiply(p.unit(), x), x));
    CHECK(p.elements_equal(p.multiply(x, p.unit()), x));
  }
}

TEST_CASE("twisted multiplication is associative") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    auto in = oracle::random_twisted_instance(rng, 2, 2 + trial % 2);
    auto p = oracle::presentation_of(in);
    auto alpha = kzk::validate_automorphism(p, oracle::alpha_matrix(in));
    for (int k = 0; k < 10; ++k) {
      auto x = random_element(rng, p, rng() % 3);
      auto y = random_element(rng, p, rng() % 3);
      auto z = random_element(rng, p, rng() % 3);
      CHECK(p.elements_equal(p.twisted_multiply(alpha, p.twisted_multiply(alpha, x, y), z),
                             p.twisted_multiply(alpha, x, p.twisted_multiply(alpha, y, z))));
    }
  }
}

TEST_CASE("automorphism action respects products and powers") {
  std::mt19937 rng(34);
  auto b = fixture::load(fixture::kBraid);
  REQUIRE(b.alpha);
  const auto& p = b.p;
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_element(rng, p, rng() % 4);
    auto y = random_element(rng, p, rng() % 4);
    CHECK(p.elements_equal(p.apply_automorphism(*b.alpha, 1, p.multiply(x, y)),
                           p.multiply(p.apply_automorphism(*b.alpha, 1, x), p.apply_automorphism(*b.alpha, 1, y))));
    // the swap is an involution
    CHECK(p.elements_equal(p.apply_automorphism(*b.alpha, 2, x), x));
    CHECK(p.elements_equal(p.apply_automorphism(*b.alpha, -1, x), p.apply_automorphism(*b.alpha, 1, x)));
  }
}

TEST_CASE("automorphism validation errors") {
  auto cubic = fixture::load(fixture::kCubic);
  auto expect_code = [&](const kzk::Matrix<Rational>& m, kzk::ErrorCode code) {
    try {
      kzk::validate_automorphism(cubic.p, m);
      FAIL("expected an error");
    } catch (const kzk::Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect_code(kzk::Matrix<Rational>::identity(Q, 3), kzk::ErrorCode::kDimension);
  std::vector<mpq_class> singular{1, 1, 1, 1};
  expect_code(kzk::Matrix<Rational>::from_dense(Q, 2, 2, singular), kzk::ErrorCode::kNotInvertible);
  // x -> x + y, y -> y does not fix span(xxx - yyy)
  std::vector<mpq_class> shear{1, 0, 1, 1};
  expect_code(kzk::Matrix<Rational>::from_dense(Q, 2, 2, shear), kzk::ErrorCode::kRelationsNotPreserved);
  // x -> -y, y -> -x sends xxx - yyy to -(yyy - xxx), fine
  std::vector<mpq_class> neg_swap{0, -1, -1, 0};
  CHECK_NOTHROW(kzk::validate_automorphism(cubic.p, kzk::Matrix<Rational>::from_dense(Q, 2, 2, neg_swap)));
}

TEST_CASE("regularity of degree one elements") {
  auto cubic = fixture::load(fixture::kCubic);
  auto x = cubic.p.generator(0);
  for (Side side : {Side::kRight, Side::kLeft}) {
    auto r = cubic.p.regularity(x, 6, side);
    CHECK(r.kernel_dims.size() == 7);
    CHECK(r.regular());
  }

  auto sq = fixture::load(fixture::kSquareZero);
  auto rs = sq.p.regularity(sq.p.generator(0), 4, Side::kRight);
  CHECK_FALSE(rs.regular());
  REQUIRE(rs.first_failure());
  CHECK(*rs.first_failure() == 1);

  // k[x,y] is a domain, so x - y is regular
  auto poly = fixture::load(fixture::kPolynomial);
  kzk::SparseRow<Rational> diff{{0, 1}, {1, -1}};
  CHECK(poly.p.regularity(kzk::Element<Rational>{1, diff}, 6, Side::kRight).regular());
}

TEST_CASE("presentations over a prime field") {
  kzk::PrimeField f5(5);
  auto p = fixture::load_as(f5, fixture::kBraid);
  const std::vector<std::size_t> expect{1, 2, 4, 7, 12, 20, 33};
  CHECK(p.hilbert_series(6) == expect);
  CHECK(p.dual(4).is_zero());
}
