#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nsl/rational.hpp"

namespace nsl::ordfield {

/// Dense univariate polynomial in X over Q. Coefficient i multiplies X^i.
/// Invariant: empty (the zero polynomial) or the last coefficient is nonzero.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * X^n
  static Polynomial monomial(const Rational& c, int n);
  static Polynomial x() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] bool is_monomial() const;  // exactly one nonzero term

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  [[nodiscard]] Polynomial scaled(const Rational& c) const;
  [[nodiscard]] Polynomial shifted(int n) const;  // multiply by X^n, n >= 0
  /// Divide by X^n; requires n <= low_degree().
  [[nodiscard]] Polynomial unshifted(int n) const;
  /// Index of the lowest nonzero coefficient; -1 for zero.
  [[nodiscard]] int low_degree() const;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  [[nodiscard]] Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Descending-degree text, e.g. `2*X^2 - X + 1/2`.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t term_count() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace nsl::ordfield
