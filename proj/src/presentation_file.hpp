#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "presentation.hpp"

namespace kzk {

// Presentation files are line oriented:
//
//   # comment
//   field Q            (or: field F 7; default Q)
//   gens x y
//   rel x*y*x - y*x*y
//   rel 2*x*x + 1/3 y*y*y
//   aut x -> y, y -> x
//   degree 3           (needed only when there is no nonzero relation)
//
// Coefficients are integers or fractions p/q, optionally followed by '*'.

struct FieldChoice {
  bool prime = false;
  std::uint32_t modulus = 0;

  bool operator==(const FieldChoice&) const = default;
  std::string name() const;
};

// Parses "Q", "F 7", "F7" or "7"-less forms used on the command line.
FieldChoice parse_field_choice(std::string_view text);

struct SourcePosition {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SourceTerm {
  bool negative = false;
  std::string num = "1";
  std::string den = "1";
  std::vector<std::size_t> word;
  SourcePosition at;
};

struct SourcePolynomial {
  std::vector<SourceTerm> terms;
  SourcePosition at;
};

// Field-independent parse result; coefficients stay textual until a field is
// chosen.
struct PresentationSource {
  FieldChoice field;
  std::vector<std::string> gens;
  std::optional<std::size_t> degree;
  std::vector<SourcePolynomial> relations;
  std::optional<std::vector<SourcePolynomial>> automorphism;  // image of each generator, in gens order
  SourcePosition automorphism_at;
};

PresentationSource parse_source(std::string_view text);

template <class F>
Presentation<F> build_presentation(const F& field, const PresentationSource& src,
                                   std::uint64_t cap = kDefaultAmbientCap);

template <class F>
std::optional<GradedAutomorphism<F>> build_automorphism(const Presentation<F>& p, const PresentationSource& src);

// A homogeneous element such as "x", "x - 2*y" or "x*y", written in the
// generators of p.
template <class F>
Element<F> parse_element(const Presentation<F>& p, std::string_view text);

// Canonical text: each relation is an RREF basis row (leading coefficient 1,
// terms in lex order); prime-field coefficients are printed as residues.
template <class F>
std::string render_presentation(const Presentation<F>& p, const GradedAutomorphism<F>* alpha = nullptr);

}  // namespace kzk
