#include <doctest.h>

#include <random>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

using kzk::ErrorCode;
using kzk::Rational;

namespace {

const Rational Q;

ErrorCode code_of(std::string_view text) {
  try {
    auto src = kzk::parse_source(text);
    auto p = kzk::build_presentation(Q, src);
    kzk::build_automorphism(p, src);
  } catch (const kzk::Error& e) {
    return e.code();
  }
  FAIL("expected a parse error for: " << text);
  return ErrorCode::kInternal;
}

std::string message_of(std::string_view text) {
  try {
    auto src = kzk::parse_source(text);
    auto p = kzk::build_presentation(Q, src);
    kzk::build_automorphism(p, src);
  } catch (const kzk::Error& e) {
    return e.what();
  }
  return {};
}

bool same_presentation(const fixture::P& a, const fixture::P& b) {
  return a.gens() == b.gens() && a.degree() == b.degree() && a.relations().space.equals(Q, b.relations().space);
}

}  // namespace

TEST_CASE("field choices") {
  CHECK(kzk::parse_field_choice("Q") == kzk::FieldChoice{});
  CHECK(kzk::parse_field_choice("QQ") == kzk::FieldChoice{});
  const kzk::FieldChoice f7{true, 7};
  CHECK(kzk::parse_field_choice("F7") == f7);
  CHECK(kzk::parse_field_choice("F 7") == f7);
  CHECK(kzk::parse_field_choice("F:7") == f7);
  CHECK(f7.name() == "F 7");
  CHECK_THROWS_AS(kzk::parse_field_choice("R"), kzk::Error);
  CHECK_THROWS_AS(kzk::parse_field_choice("F9"), kzk::Error);
}

TEST_CASE("parsing the braid file") {
  auto src = kzk::parse_source(fixture::kBraid);
  CHECK(src.gens == std::vector<std::string>{"x", "y"});
  REQUIRE(src.relations.size() == 1);
  CHECK(src.relations[0].terms.size() == 2);
  CHECK(src.relations[0].terms[1].negative);
  REQUIRE(src.automorphism);
  auto b = fixture::load(fixture::kBraid);
  CHECK(b.p.degree() == 3);
  CHECK(b.p.relations().dim() == 1);
  REQUIRE(b.alpha);
  // column s is the image of generator s
  CHECK(b.alpha->matrix().at(Q, 1, 0) == 1);
  CHECK(b.alpha->matrix().at(Q, 0, 0) == 0);
}

TEST_CASE("comments, commas, coefficients and repeated terms") {
  auto p = fixture::load(
               "# a comment\n"
               "gens a, b, c   # trailing comment\n"
               "rel 2*a*b - 1/3*c*c + b*a\n"
               "rel a*a + a*a\n")
               .p;
  CHECK(p.dim_e() == 3);
  CHECK(p.degree() == 2);
  CHECK(p.relations().dim() == 2);
  // 6ab + 3ba - cc lies in R
  kzk::WordBasis w(3, 2);
  std::vector<std::size_t> ab{0, 1}, ba{1, 0}, cc{2, 2};
  kzk::SparseRow<Rational> v{{w.index(ab), 6}, {w.index(ba), 3}, {w.index(cc), -1}};
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  CHECK(p.relations().space.contains(Q, v));
  CHECK(p.hilbert_series(3) == std::vector<std::size_t>{1, 3, 7, 16});
}

TEST_CASE("parse errors carry codes and positions") {
  CHECK(code_of("gens x y\nfoo x\n") == ErrorCode::kSyntax);
  CHECK(code_of("gens x y\ngens z\n") == ErrorCode::kSyntax);
  CHECK(code_of("rel x*x\ngens x\n") == ErrorCode::kSyntax);
  CHECK(code_of("gens x\nrel 1/0*x*x\n") == ErrorCode::kSyntax);
  CHECK(code_of("gens x y\nrel x*y -\n") == ErrorCode::kSyntax);
  CHECK(code_of("gens x x\nrel x*x\n") == ErrorCode::kInvalidPresentation);
  CHECK(code_of("rel\n") == ErrorCode::kSyntax);
  CHECK(code_of("# nothing\n") == ErrorCode::kInvalidPresentation);
  CHECK(code_of("gens x y\n") == ErrorCode::kInvalidPresentation);
  CHECK(code_of("gens x y\nrel x*y\naut x -> y\n") == ErrorCode::kInvalidPresentation);
  CHECK(code_of("gens x y\nrel x*z\n") == ErrorCode::kUnknownGenerator);
  CHECK(code_of("gens x y\nrel x*y - x\n") == ErrorCode::kInhomogeneous);
  CHECK(code_of("gens x y\nrel x*y\nrel x*y*x\n") == ErrorCode::kInhomogeneous);
  CHECK(code_of("gens x y\nrel x*y\naut x -> x*x, y -> y\n") == ErrorCode::kInhomogeneous);
  CHECK(code_of("gens x y\ndegree 3\nrel x*y\n") == ErrorCode::kInhomogeneous);
  CHECK(code_of("gens x y\nrel x\n") == ErrorCode::kUnsupportedDegree);
  CHECK(code_of("gens x y\ndegree 1\n") == ErrorCode::kUnsupportedDegree);
  CHECK(code_of("gens x y\nrel x*y*x - y*x*y\naut x -> x + y, y -> y\n") == ErrorCode::kRelationsNotPreserved);
  CHECK(code_of("gens x y\nrel x*y*x - y*x*y\naut x -> x, y -> x\n") == ErrorCode::kNotInvertible);

  const std::string msg = message_of("gens x y\nrel x*y - y*q\n");
  CHECK(msg.find("line 2") != std::string::npos);
  CHECK(msg.find("column 13") != std::string::npos);
}

TEST_CASE("render then parse gives the same presentation") {
  for (auto text : {fixture::kBraid, fixture::kCubic, fixture::kPolynomial, fixture::kFree, fixture::kSquareZero}) {
    auto a = fixture::load(text);
    const auto rendered = kzk::render_presentation(a.p, a.alpha ? &*a.alpha : nullptr);
    auto b = fixture::load(rendered);
    CHECK(same_presentation(a.p, b.p));
    CHECK(a.alpha.has_value() == b.alpha.has_value());
    if (a.alpha) CHECK(a.alpha->matrix().equals(Q, b.alpha->matrix()));
    CHECK(kzk::render_presentation(b.p, b.alpha ? &*b.alpha : nullptr) == rendered);
  }
  auto braid = fixture::load(fixture::kBraid);
  CHECK(kzk::render_presentation(braid.p, &*braid.alpha) ==
        "field Q\ngens x y\nrel x*y*x - y*x*y\naut x -> y, y -> x\n");
  CHECK(kzk::render_presentation(fixture::load(fixture::kFree).p).find("degree 2") != std::string::npos);
}

TEST_CASE("render round trip on random instances") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto in = oracle::random_twisted_instance(rng, 1 + trial % 3, 2 + trial % 2);
    auto p = oracle::presentation_of(in);
    auto alpha = kzk::validate_automorphism(p, oracle::alpha_matrix(in));
    auto back = fixture::load(kzk::render_presentation(p, &alpha));
    CHECK(same_presentation(p, back.p));
    REQUIRE(back.alpha);
    CHECK(back.alpha->matrix().equals(Q, alpha.matrix()));
  }
}

TEST_CASE("prime field rendering uses positive residues") {
  kzk::PrimeField f5(5);
  auto p = fixture::load_as(f5, fixture::kBraid);
  const auto text = kzk::render_presentation(p);
  CHECK(text == "field F 5\ngens x y\nrel x*y*x + 4*y*x*y\n");
  auto back = kzk::build_presentation(f5, kzk::parse_source(text));
  CHECK(back.relations().space.equals(f5, p.relations().space));
  // 1/2 is 3 mod 5
  auto half = fixture::load_as(f5, "field F 5\ngens x y\nrel x*y - 1/2*y*x\n");
  CHECK(kzk::render_presentation(half) == "field F 5\ngens x y\nrel x*y + 2*y*x\n");
}

TEST_CASE("parsing elements") {
  auto b = fixture::load(fixture::kBraid);
  auto e = kzk::parse_element(b.p, "x*y*x - y*x*y");
  CHECK(e.degree == 3);
  CHECK(e.coords.empty());
  auto x = kzk::parse_element(b.p, "x");
  CHECK(b.p.elements_equal(x, b.p.generator(0)));
  auto lin = kzk::parse_element(b.p, "2*x - 1/2*y");
  CHECK(lin.degree == 1);
  CHECK(lin.coords.size() == 2);
  CHECK_THROWS_AS(kzk::parse_element(b.p, ""), kzk::Error);
  CHECK_THROWS_AS(kzk::parse_element(b.p, "x + x*y"), kzk::Error);
  CHECK_THROWS_AS(kzk::parse_element(b.p, "z"), kzk::Error);
}
