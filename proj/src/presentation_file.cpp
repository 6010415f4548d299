#include "presentation_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <type_traits>

namespace kzk {

namespace {

[[noreturn]] void fail(ErrorCode code, SourcePosition at, const std::string& msg) {
  throw Error(code, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + msg);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool all_zero_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0'; });
}

// Scans one line; columns are 1-based positions in the original line.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  SourcePosition here() {
    skip_space();
    return {line_, pos_ + 1};
  }
  std::string ident() {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail(ErrorCode::kSyntax, here(), "expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail(ErrorCode::kSyntax, {line_, pos_ + 1}, "expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string_view rest() {
    skip_space();
    std::string_view r = text_.substr(pos_);
    pos_ = text_.size();
    return r;
  }
  [[noreturn]] void unexpected() {
    SourcePosition at = here();
    fail(ErrorCode::kSyntax, at, std::string("unexpected '") + text_[pos_] + "'");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::size_t lookup(const std::vector<std::string>& gens, const std::string& name, SourcePosition at) {
  auto it = std::find(gens.begin(), gens.end(), name);
  if (it == gens.end()) fail(ErrorCode::kUnknownGenerator, at, "unknown generator '" + name + "'");
  return static_cast<std::size_t>(it - gens.begin());
}

SourceTerm parse_term(Cursor& cur, const std::vector<std::string>& gens, bool negative) {
  SourceTerm term;
  term.negative = negative;
  term.at = cur.here();
  bool monomial = true;
  if (is_digit(cur.peek())) {
    term.num = cur.digits();
    if (cur.accept("/")) {
      SourcePosition den_at = cur.here();
      term.den = cur.digits();
      if (all_zero_digits(term.den)) fail(ErrorCode::kSyntax, den_at, "zero denominator");
    }
    if (!cur.accept("*")) monomial = is_ident_start(cur.peek());
  }
  if (!monomial) return term;
  for (;;) {
    SourcePosition at = cur.here();
    term.word.push_back(lookup(gens, cur.ident(), at));
    if (!cur.accept("*")) break;
  }
  return term;
}

// Reads terms until the end of the line or a ',' (left unconsumed).
SourcePolynomial parse_polynomial(Cursor& cur, const std::vector<std::string>& gens) {
  SourcePolynomial poly;
  poly.at = cur.here();
  bool negative = false;
  if (cur.accept("-")) {
    negative = true;
  } else {
    cur.accept("+");
  }
  poly.terms.push_back(parse_term(cur, gens, negative));
  while (!cur.at_end() && cur.peek() != ',') {
    if (cur.accept("+")) {
      negative = false;
    } else if (cur.accept("-")) {
      negative = true;
    } else {
      cur.unexpected();
    }
    poly.terms.push_back(parse_term(cur, gens, negative));
  }
  return poly;
}

// Word length shared by the syntactically nonzero terms, if any.
std::optional<std::size_t> polynomial_degree(const SourcePolynomial& poly) {
  std::optional<std::size_t> degree;
  for (const auto& t : poly.terms) {
    if (all_zero_digits(t.num)) continue;
    if (degree && *degree != t.word.size()) {
      fail(ErrorCode::kInhomogeneous, t.at,
           "term of degree " + std::to_string(t.word.size()) + " in a polynomial of degree " +
               std::to_string(*degree));
    }
    degree = t.word.size();
  }
  return degree;
}

template <class F>
SparseRow<F> to_vector(const F& field, const SourcePolynomial& poly, std::size_t dim_e, std::size_t degree,
                       std::uint64_t cap) {
  WordBasis basis(dim_e, degree, cap);
  SparseRow<F> out;
  for (const auto& t : poly.terms) {
    if (all_zero_digits(t.num)) continue;
    typename F::value_type c;
    try {
      c = field.from_decimal(t.num, t.den);
    } catch (const Error& e) {
      fail(e.code(), t.at, e.what());
    }
    if (t.negative) c = field.neg(c);
    axpy(field, out, c, SparseRow<F>{{basis.index(t.word), field.one()}});
  }
  return out;
}

template <class F>
std::string coefficient_text(const F& field, const typename F::value_type& c, bool first, bool& omit_one) {
  std::string sign;
  std::string magnitude;
  if constexpr (std::is_same_v<F, Rational>) {
    const bool neg = sgn(c) < 0;
    mpq_class a = abs(c);
    sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
    omit_one = a == 1;
    magnitude = a.get_str();
  } else {
    sign = first ? "" : " + ";
    omit_one = field.equal(c, field.one());
    magnitude = field.to_string(c);
  }
  return sign + (omit_one ? "" : magnitude);
}

template <class F>
std::string render_vector(const F& field, const SparseRow<F>& v, const WordBasis& basis,
                          const std::vector<std::string>& gens) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& e : v) {
    bool omit_one = false;
    out += coefficient_text(field, e.val, first, omit_one);
    auto word = basis.word(e.col);
    std::string mono;
    for (std::size_t k = 0; k < word.size(); ++k) mono += (k ? "*" : "") + gens[word[k]];
    if (word.empty()) {
      if (omit_one) out += "1";
    } else {
      out += omit_one ? mono : "*" + mono;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string FieldChoice::name() const { return prime ? "F " + std::to_string(modulus) : "Q"; }

FieldChoice parse_field_choice(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != ':') s += c;
  }
  if (s == "Q" || s == "QQ") return {};
  if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
    std::string digits = s.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), is_digit) && digits.size() <= 10) {
      const unsigned long long p = std::stoull(digits);
      if (!is_prime(p) || p > (1ull << 31)) {
        throw Error(ErrorCode::kInvalidArgument, "field characteristic " + digits + " is not a supported prime");
      }
      return {true, static_cast<std::uint32_t>(p)};
    }
  }
  throw Error(ErrorCode::kSyntax, "field must be 'Q' or 'F <prime>', got '" + std::string(text) + "'");
}

PresentationSource parse_source(std::string_view text) {
  PresentationSource src;
  bool saw_field = false, saw_gens = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Cursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    SourcePosition key_at = cur.here();
    const std::string key = cur.ident();
    if (key == "field") {
      if (saw_field) fail(ErrorCode::kSyntax, key_at, "duplicate field line");
      saw_field = true;
      SourcePosition at = cur.here();
      std::string_view rest = cur.rest();
      try {
        src.field = parse_field_choice(rest);
      } catch (const Error& e) {
        fail(e.code(), at, e.what());
      }
    } else if (key == "gens") {
      if (saw_gens) fail(ErrorCode::kSyntax, key_at, "duplicate gens line");
      saw_gens = true;
      while (!cur.at_end()) {
        SourcePosition at = cur.here();
        std::string name = cur.ident();
        if (std::find(src.gens.begin(), src.gens.end(), name) != src.gens.end()) {
          fail(ErrorCode::kInvalidPresentation, at, "duplicate generator '" + name + "'");
        }
        src.gens.push_back(std::move(name));
        cur.accept(",");
      }
      if (src.gens.empty()) fail(ErrorCode::kInvalidPresentation, key_at, "gens line lists no generators");
    } else if (key == "degree") {
      if (src.degree) fail(ErrorCode::kSyntax, key_at, "duplicate degree line");
      src.degree = std::stoull(cur.digits());
      if (!cur.at_end()) cur.unexpected();
    } else if (key == "rel") {
      if (!saw_gens) fail(ErrorCode::kSyntax, key_at, "rel before gens");
      src.relations.push_back(parse_polynomial(cur, src.gens));
      if (!cur.at_end()) cur.unexpected();
    } else if (key == "aut") {
      if (!saw_gens) fail(ErrorCode::kSyntax, key_at, "aut before gens");
      if (src.automorphism) fail(ErrorCode::kSyntax, key_at, "duplicate aut line");
      src.automorphism_at = key_at;
      std::vector<std::optional<SourcePolynomial>> images(src.gens.size());
      do {
        SourcePosition at = cur.here();
        const std::size_t s = lookup(src.gens, cur.ident(), at);
        if (images[s]) fail(ErrorCode::kInvalidPresentation, at, "generator '" + src.gens[s] + "' mapped twice");
        if (!cur.accept("->")) fail(ErrorCode::kSyntax, cur.here(), "expected '->'");
        images[s] = parse_polynomial(cur, src.gens);
      } while (cur.accept(","));
      if (!cur.at_end()) cur.unexpected();
      std::vector<SourcePolynomial> out;
      for (std::size_t s = 0; s < images.size(); ++s) {
        if (!images[s]) fail(ErrorCode::kInvalidPresentation, key_at, "aut gives no image for '" + src.gens[s] + "'");
        out.push_back(std::move(*images[s]));
      }
      src.automorphism = std::move(out);
    } else {
      fail(ErrorCode::kSyntax, key_at, "unknown directive '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (!saw_gens) fail(ErrorCode::kInvalidPresentation, {line_no, 1}, "missing gens line");

  std::optional<std::size_t> degree;
  for (const auto& rel : src.relations) {
    auto d = polynomial_degree(rel);
    if (!d) continue;
    if (*d < 2) fail(ErrorCode::kUnsupportedDegree, rel.at, "relations must have degree at least 2");
    if (degree && *degree != *d) {
      fail(ErrorCode::kInhomogeneous, rel.at,
           "relation of degree " + std::to_string(*d) + " after relations of degree " + std::to_string(*degree));
    }
    degree = d;
  }
  if (src.degree && degree && *src.degree != *degree) {
    fail(ErrorCode::kInhomogeneous, src.relations.front().at, "relations disagree with the degree line");
  }
  if (!src.degree) src.degree = degree;
  if (!src.degree) fail(ErrorCode::kInvalidPresentation, {line_no, 1}, "no nonzero relation and no degree line");
  if (*src.degree < 2) fail(ErrorCode::kUnsupportedDegree, {line_no, 1}, "degree must be at least 2");
  if (src.automorphism) {
    for (const auto& image : *src.automorphism) {
      auto d = polynomial_degree(image);
      if (d && *d != 1) fail(ErrorCode::kInhomogeneous, image.at, "automorphism images must be linear");
    }
  }
  return src;
}

template <class F>
Presentation<F> build_presentation(const F& field, const PresentationSource& src, std::uint64_t cap) {
  const std::size_t n = *src.degree;
  const std::size_t d = src.gens.size();
  RrefBuilder<F> builder(field, ambient_size(d, n, cap));
  for (const auto& rel : src.relations) builder.insert(to_vector(field, rel, d, n, cap));
  return Presentation<F>(field, src.gens, n, std::move(builder).finish(), cap);
}

template <class F>
std::optional<GradedAutomorphism<F>> build_automorphism(const Presentation<F>& p, const PresentationSource& src) {
  if (!src.automorphism) return std::nullopt;
  std::vector<SparseRow<F>> columns;
  for (const auto& image : *src.automorphism) columns.push_back(to_vector(p.field(), image, p.dim_e(), 1, p.cap()));
  try {
    return validate_automorphism(p, Matrix<F>::from_columns(p.dim_e(), columns));
  } catch (const Error& e) {
    fail(e.code(), src.automorphism_at, e.what());
  }
}

template <class F>
Element<F> parse_element(const Presentation<F>& p, std::string_view text) {
  Cursor cur(text, 1);
  if (cur.at_end()) fail(ErrorCode::kSyntax, cur.here(), "empty element");
  SourcePolynomial poly = parse_polynomial(cur, p.gens());
  if (!cur.at_end()) cur.unexpected();
  const std::size_t degree = polynomial_degree(poly).value_or(0);
  return p.project(degree, to_vector(p.field(), poly, p.dim_e(), degree, p.cap()));
}

template <class F>
std::string render_presentation(const Presentation<F>& p, const GradedAutomorphism<F>* alpha) {
  const F& field = p.field();
  std::ostringstream out;
  out << "field " << field.name() << "\n";
  out << "gens";
  for (const auto& g : p.gens()) out << " " << g;
  out << "\n";
  if (p.relations().is_zero()) out << "degree " << p.degree() << "\n";
  WordBasis basis(p.dim_e(), p.degree(), p.cap());
  for (const auto& row : p.relations().space.basis()) {
    out << "rel " << render_vector(field, row, basis, p.gens()) << "\n";
  }
  if (alpha) {
    WordBasis letters(p.dim_e(), 1, p.cap());
    const Matrix<F> cols = alpha->matrix().transposed();
    out << "aut ";
    for (std::size_t s = 0; s < p.dim_e(); ++s) {
      out << (s ? ", " : "") << p.gens()[s] << " -> " << render_vector(field, cols.row(s), letters, p.gens());
    }
    out << "\n";
  }
  return out.str();
}

#define KZK_INSTANTIATE_PRESENTATION_FILE(F)                                                                   \
  template Presentation<F> build_presentation<F>(const F&, const PresentationSource&, std::uint64_t);          \
  template std::optional<GradedAutomorphism<F>> build_automorphism<F>(const Presentation<F>&,                  \
                                                                      const PresentationSource&);              \
  template Element<F> parse_element<F>(const Presentation<F>&, std::string_view);                              \
  template std::string render_presentation<F>(const Presentation<F>&, const GradedAutomorphism<F>*);

KZK_INSTANTIATE_PRESENTATION_FILE(Rational)
KZK_INSTANTIATE_PRESENTATION_FILE(PrimeField)

}  // namespace kzk
