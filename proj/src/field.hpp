#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "error.hpp"

namespace kzk {

// Fields are small value objects passed to every arithmetic routine. Element
// values carry no reference to their field, so mixing two prime fields is a
// caller bug that is not detected.

class Rational {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorCode::kInternal, "division by zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }
  // `num` and `den` are decimal integer strings, optionally signed.
  value_type from_decimal(std::string_view num, std::string_view den = "1") const;
  std::string to_string(const value_type& a) const { return a.get_str(); }

  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  value_type zero() const { return 0; }
  value_type one() const { return 1; }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type from_int(long long v) const;
  value_type from_decimal(std::string_view num, std::string_view den = "1") const;
  std::string to_string(value_type a) const { return std::to_string(a); }

  std::string name() const { return "F " + std::to_string(p_); }
  std::uint64_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace kzk
