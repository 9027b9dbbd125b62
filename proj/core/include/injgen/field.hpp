#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace injgen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised for malformed input: bad field names, shape mismatches, invalid data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when well-formed input fails a mathematical precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::int64_t n);

// A field element. Residues are used over prime fields, rationals over Q;
// the owning Field decides which alternative is meaningful.
class Scalar {
 public:
  Scalar() : value_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : value_(residue) {}
  explicit Scalar(Rational q) : value_(std::move(q)) {}

  bool holds_residue() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  Rational to_rational() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<std::int64_t, Rational> value_;
};

class Field {
 public:
  enum class Kind { Prime, Rational };

  Field() = default;  // Q
  static Field prime(std::int64_t p);
  static Field rationals() { return Field(); }
  // "fp:<p>" or "q"
  static Field parse(std::string_view name);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  std::int64_t characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }
  std::optional<std::uint64_t> size() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, std::uint64_t e) const;
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  Scalar parse_element(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Kind kind_ = Kind::Rational;
  std::int64_t p_ = 0;
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

}  // namespace injgen
