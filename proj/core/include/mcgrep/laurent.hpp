#pragma once

// Exact bivariate Laurent polynomials in q and t with rational exponents and
// arbitrary-precision integer coefficients.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcgrep {

using Integer = boost::multiprecision::cpp_int;

/// A rational exponent kept in lowest terms with a positive denominator.
class Exponent {
 public:
  constexpr Exponent() = default;
  Exponent(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Exponent operator+(const Exponent& other) const;
  Exponent operator-(const Exponent& other) const;
  Exponent operator-() const { return Exponent(-num_, den_); }
  Exponent operator*(std::int64_t k) const;

  bool operator==(const Exponent& other) const = default;
  std::strong_ordering operator<=>(const Exponent& other) const;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct Monomial {
  Integer coeff{1};
  Exponent q;
  Exponent t;

  bool is_unit() const { return coeff == 1 || coeff == -1; }
  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
};

class LaurentPoly {
 public:
  /// The zero polynomial.
  LaurentPoly() = default;
  LaurentPoly(Integer constant);
  LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}
  explicit LaurentPoly(Monomial m);

  /// Sorts, merges like terms and drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Monomial> terms);
  static LaurentPoly monomial(Integer coeff, Exponent q, Exponent t);
  static LaurentPoly q() { return monomial(1, 1, 0); }
  static LaurentPoly t() { return monomial(1, 0, 1); }

  std::span<const Monomial> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Single term with coefficient +1 or -1.
  bool is_unit() const;
  std::optional<Monomial> as_monomial() const;

  /// Lexicographically smallest / largest (q, t) term. Requires non-zero.
  const Monomial& lowest() const { return terms_.front(); }
  const Monomial& leading() const { return terms_.back(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiply every term by a single monomial; cheaper than a full product.
  LaurentPoly times(const Monomial& m) const;

  bool operator==(const LaurentPoly& other) const = default;

  /// Canonical text form, e.g. "-1*q^(1/2)*t + 3".
  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
bool poly_eq(const LaurentPoly& a, const LaurentPoly& b);

/// Exact k-th power of a monomial. Negative powers require a unit coefficient
/// and throw std::domain_error otherwise.
LaurentPoly mono_pow(const Monomial& m, std::int64_t k);

/// Quotient a / b when b divides a exactly in the Laurent ring, otherwise
/// std::nullopt. Throws std::domain_error on division by zero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace mcgrep
