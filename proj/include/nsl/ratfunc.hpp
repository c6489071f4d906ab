#pragma once

// The ordered field Q(X): rational functions in one indeterminate, ordered by
// the positive cone "sign of the ratio of leading coefficients". Under this
// order X exceeds every rational and 1/X is a positive infinitesimal.

#include <climits>
#include <compare>
#include <optional>
#include <string>

#include "nsl/polynomial.hpp"
#include "nsl/rational.hpp"

namespace nsl::ordfield {

/// Valuation of zero. Every nonzero element has a finite integer valuation.
inline constexpr int kInfiniteValuation = INT_MAX;

/// num/den in lowest terms with a monic denominator, so equal values are
/// structurally equal.
class RationalFunction {
public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& q);  // NOLINT(google-explicit-constructor)
  RationalFunction(long v) : RationalFunction(Rational(v)) {}  // NOLINT
  /// Reduces and normalizes; throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction x();
  /// c / X^n for n >= 0
  static RationalFunction inv_x_pow(int n, const Rational& c = Rational(1));

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  /// -1, 0 or +1 from the leading coefficient of the numerator.
  [[nodiscard]] int sign() const;
  /// deg(den) - deg(num). Elements of valuation >= k form a convex subgroup
  /// M_k; M_1 is the infinitesimals, M_0 the finite elements.
  [[nodiscard]] int valuation() const;
  [[nodiscard]] RationalFunction abs() const;
  [[nodiscard]] RationalFunction inverse() const;

  /// Canonical representative of the coset r + M_k: the Laurent expansion at
  /// infinity with every term of order >= k dropped.
  [[nodiscard]] RationalFunction truncated(int k) const;

  /// True when den is X^n (includes plain polynomials).
  [[nodiscard]] bool is_laurent() const;
  [[nodiscard]] std::optional<Rational> as_rational() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b);

  /// `1/2 - 2/X` for Laurent polynomials, `(X - 1)/(X^2 + 1)` otherwise.
  [[nodiscard]] std::string to_string() const;

private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction embed_rational(const Rational& q);

RationalFunction add(const RationalFunction& r, const RationalFunction& s);
RationalFunction sub(const RationalFunction& r, const RationalFunction& s);
RationalFunction mul(const RationalFunction& r, const RationalFunction& s);
RationalFunction neg(const RationalFunction& r);
/// std::nullopt when s is zero.
std::optional<RationalFunction> div(const RationalFunction& r, const RationalFunction& s);

int sign(const RationalFunction& r);

/// Sign and valuation of r - s, read off the unreduced cross product.
struct Gap {
  int sign;
  int valuation;
};
Gap gap(const RationalFunction& r, const RationalFunction& s);
std::strong_ordering compare(const RationalFunction& r, const RationalFunction& s);

bool is_infinitesimal(const RationalFunction& r);
bool is_finite(const RationalFunction& r);
bool infinitely_close(const RationalFunction& r, const RationalFunction& s);
bool roughly_le(const RationalFunction& r, const RationalFunction& s);

/// The rational infinitely close to a finite element; throws std::domain_error
/// for infinite input.
Rational standard_part(const RationalFunction& r);
std::optional<Rational> try_standard_part(const RationalFunction& r);

}  // namespace nsl::ordfield
