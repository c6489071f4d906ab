#include "nsl/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsl::ordfield {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial Polynomial::monomial(const Rational& c, int n) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

int Polynomial::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

Polynomial Polynomial::unshifted(int n) const {
  if (n <= 0 || is_zero()) return *this;
  return Polynomial(std::vector<Rational>(coeffs_.begin() + n, coeffs_.end()));
}

bool Polynomial::is_monomial() const { return term_count() == 1; }

std::size_t Polynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    const Polynomial r = a.shifted(b.degree());
    return b.leading() == Rational(1) ? r : r.scaled(b.leading());
  }
  if (a.is_monomial()) return b * a;
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  if (c == Rational(1)) return *this;
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::shifted(int n) const {
  if (is_zero() || n == 0) return *this;
  if (n < 0) throw std::invalid_argument("negative polynomial shift");
  std::vector<Rational> v(static_cast<std::size_t>(n));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  if (rem.degree() < d.degree()) return {Polynomial{}, rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1);
  const Rational lead_inv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    const Rational factor = rem.leading() * lead_inv;
    q[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= d.degree(); ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= factor * d.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace nsl::ordfield
