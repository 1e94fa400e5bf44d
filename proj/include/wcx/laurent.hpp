#pragma once

#include <map>
#include <string>
#include <string_view>

#include "wcx/rational.hpp"

namespace wcx {

/// Product of named variables with nonzero integer exponents.
using Monomial = std::map<std::string, int>;

/// "t1^-1*t2", "1" for the empty monomial.
std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text);

/// Laurent polynomial with exact rational coefficients. Terms are kept in
/// the canonical order of Monomial (lexicographic on variable, exponent);
/// zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c);  // NOLINT: constants embed implicitly
  Laurent(long long c) : Laurent(Rational(c)) {}  // NOLINT

  static Laurent variable(const std::string& name, int exponent = 1);
  static Laurent monomial(const Monomial& m, const Rational& c = Rational(1));

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws InputError unless constant.
  Rational constant_value() const;
  /// A single term c * x^a with c != 0, i.e. a unit of the Laurent ring.
  bool is_unit() const;
  /// Inverse of a unit; throws InputError otherwise.
  Laurent inverse() const;
  /// Integer power; negative exponents require a unit.
  Laurent pow(int e) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator-(Laurent a);

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Human-readable sum, e.g. "1 - t1^-1*t2 - t2^-1*t3".
  std::string to_string() const;
  /// Parses the output of to_string (and plain rationals / monomials).
  static Laurent parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
};

}  // namespace wcx
