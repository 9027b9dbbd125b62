#include "injgen/field.hpp"

#include <charconv>

namespace injgen {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  return t < 0 ? t + p : t;
}

Rational Scalar::to_rational() const {
  if (holds_residue()) return Rational(residue());
  return std::get<Rational>(value_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.holds_residue() && b.holds_residue()) return a.residue() == b.residue();
  return a.to_rational() == b.to_rational();
}

Field Field::prime(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31)) throw InputError("prime field characteristic must be below 2^31");
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view name) {
  if (name == "q" || name == "Q") return rationals();
  if (name.substr(0, 3) == "fp:") {
    std::int64_t p = 0;
    auto digits = name.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("bad field specification: " + std::string(name));
    }
    return prime(p);
  }
  throw InputError("bad field specification: " + std::string(name));
}

std::optional<std::uint64_t> Field::size() const {
  if (kind_ == Kind::Prime) return static_cast<std::uint64_t>(p_);
  return std::nullopt;
}

std::string Field::name() const {
  return kind_ == Kind::Prime ? "fp:" + std::to_string(p_) : "q";
}

Scalar Field::zero() const {
  return kind_ == Kind::Prime ? Scalar(std::int64_t{0}) : Scalar(Rational(0));
}

Scalar Field::one() const {
  return kind_ == Kind::Prime ? Scalar(std::int64_t{1}) : Scalar(Rational(1));
}

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::Prime) return Scalar(((v % p_) + p_) % p_);
  return Scalar(Rational(v));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw InputError("zero denominator");
  if (kind_ == Kind::Prime) return div(from_int(num), from_int(den));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(Rational(num, den));
}

Scalar Field::normalize(const Scalar& a) const {
  if (kind_ == Kind::Prime) {
    if (a.holds_residue()) return from_int(a.residue());
    Rational q = a.to_rational();
    BigInt n = boost::multiprecision::numerator(q) % p_;
    BigInt d = boost::multiprecision::denominator(q) % p_;
    return div(from_int(n.convert_to<std::int64_t>()), from_int(d.convert_to<std::int64_t>()));
  }
  return Scalar(a.to_rational());
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) {
    std::int64_t s = a.residue() + b.residue();
    return Scalar(s >= p_ ? s - p_ : s);
  }
  return Scalar(a.to_rational() + b.to_rational());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) {
    std::int64_t s = a.residue() - b.residue();
    return Scalar(s < 0 ? s + p_ : s);
  }
  return Scalar(a.to_rational() - b.to_rational());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return Scalar((a.residue() * b.residue()) % p_);
  return Scalar(a.to_rational() * b.to_rational());
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Prime) return Scalar(a.residue() == 0 ? 0 : p_ - a.residue());
  return Scalar(Rational(-a.to_rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (kind_ == Kind::Prime) return Scalar(inverse_mod(a.residue(), p_));
  return Scalar(Rational(1) / a.to_rational());
}

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Field::is_zero(const Scalar& a) const {
  if (a.holds_residue()) return a.residue() == 0;
  return a.to_rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (a.holds_residue()) return a.residue() == 1;
  return a.to_rational() == 1;
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::Prime) return std::to_string(a.residue());
  Rational q = a.to_rational();
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Scalar Field::parse_element(std::string_view text) const {
  auto slash = text.find('/');
  auto parse_big = [&](std::string_view s) {
    if (s.empty()) throw InputError("empty number in field element");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("bad field element: " + std::string(text));
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InputError("bad field element: " + std::string(text));
    }
    std::string body(s[0] == '+' ? s.substr(1) : s);
    return BigInt(body);
  };
  BigInt num = parse_big(slash == std::string_view::npos ? text : text.substr(0, slash));
  BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_big(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in field element");
  if (kind_ == Kind::Prime) {
    BigInt pn = ((num % p_) + p_) % p_;
    BigInt pd = ((den % p_) + p_) % p_;
    if (pd == 0) throw InputError("denominator vanishes modulo p");
    return div(Scalar(pn.convert_to<std::int64_t>()), Scalar(pd.convert_to<std::int64_t>()));
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(Rational(num, den));
}

}  // namespace injgen
