#include "field.hpp"

namespace kzk {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kInhomogeneous: return "inhomogeneous";
    case ErrorCode::kUnsupportedDegree: return "unsupported-degree";
    case ErrorCode::kInvalidPresentation: return "invalid-presentation";
    case ErrorCode::kUnknownGenerator: return "unknown-generator";
    case ErrorCode::kNotInvertible: return "not-invertible";
    case ErrorCode::kRelationsNotPreserved: return "relations-not-preserved";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kMembership: return "membership";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

namespace {

mpz_class parse_integer(std::string_view s) {
  mpz_class z;
  std::string str(s);
  if (!str.empty() && str.front() == '+') str.erase(0, 1);
  if (str.empty() || z.set_str(str, 10) != 0) {
    throw Error(ErrorCode::kSyntax, "malformed integer '" + std::string(s) + "'");
  }
  return z;
}

}  // namespace

Rational::value_type Rational::from_decimal(std::string_view num, std::string_view den) const {
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::kSyntax, "zero denominator");
  value_type q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > (1u << 31)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field characteristic " + std::to_string(p) + " is not a supported prime");
  }
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::kInternal, "division by zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_decimal(std::string_view num, std::string_view den) const {
  mpz_class n = parse_integer(num), d = parse_integer(den);
  mpz_class pz(p_);
  mpz_class dr = d % pz;
  if (dr < 0) dr += pz;
  if (dr == 0) {
    throw Error(ErrorCode::kSyntax, "denominator " + d.get_str() + " vanishes modulo " + pz.get_str());
  }
  mpz_class nr = n % pz;
  if (nr < 0) nr += pz;
  return mul(static_cast<value_type>(nr.get_ui()), inv(static_cast<value_type>(dr.get_ui())));
}

}  // namespace kzk
