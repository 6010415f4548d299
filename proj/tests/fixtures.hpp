#pragma once

#include <optional>
#include <string_view>

#include "presentation_file.hpp"

namespace fixture {

using Q = kzk::Rational;
using P = kzk::Presentation<Q>;
using Aut = kzk::GradedAutomorphism<Q>;

inline constexpr std::string_view kBraid =
    "gens x y\n"
    "rel x*y*x - y*x*y\n"
    "aut x -> y, y -> x\n";

inline constexpr std::string_view kCubic =
    "gens x y\n"
    "rel x*x*x - y*y*y\n"
    "aut x -> y, y -> x\n";

inline constexpr std::string_view kPolynomial =
    "gens x y\n"
    "rel x*y - y*x\n";

inline constexpr std::string_view kFree =
    "gens x y\n"
    "degree 2\n"
    "aut x -> y, y -> x\n";

inline constexpr std::string_view kSquareZero =
    "gens x\n"
    "rel x*x\n";

struct Loaded {
  P p;
  std::optional<Aut> alpha;
};

inline Loaded load(std::string_view text) {
  auto src = kzk::parse_source(text);
  P p = kzk::build_presentation(Q(), src);
  auto alpha = kzk::build_automorphism(p, src);
  return {std::move(p), std::move(alpha)};
}

template <class F>
kzk::Presentation<F> load_as(const F& field, std::string_view text) {
  return kzk::build_presentation(field, kzk::parse_source(text));
}

inline Aut identity_aut(const P& p) {
  return kzk::validate_automorphism(p, kzk::Matrix<Q>::identity(Q(), p.dim_e()));
}

}  // namespace fixture
