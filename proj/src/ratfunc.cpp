#include "nsl/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsl::ordfield {

RationalFunction::RationalFunction(const Rational& q) : num_(q), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (den.is_monomial()) {
    // gcd(num, c X^n) is X^m with m the lowest power present in num.
    const int m = std::min(num.low_degree(), den.degree());
    const Rational lead_inv = den.leading().inverse();
    num_ = num.unshifted(m).scaled(lead_inv);
    den_ = Polynomial::monomial(Rational(1), den.degree() - m);
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  const Rational lead_inv = den.leading().inverse();
  num_ = num.scaled(lead_inv);
  den_ = den.scaled(lead_inv);
}

RationalFunction RationalFunction::x() { return {Polynomial::x(), Polynomial(Rational(1))}; }

RationalFunction RationalFunction::inv_x_pow(int n, const Rational& c) {
  if (n < 0) return {Polynomial::monomial(c, -n), Polynomial(Rational(1))};
  return {Polynomial(c), Polynomial::monomial(Rational(1), n)};
}

int RationalFunction::sign() const { return num_.is_zero() ? 0 : num_.leading().sign(); }

int RationalFunction::valuation() const {
  if (num_.is_zero()) return kInfiniteValuation;
  return den_.degree() - num_.degree();
}

RationalFunction RationalFunction::abs() const { return sign() < 0 ? -*this : *this; }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return {den_, num_};
}

RationalFunction RationalFunction::truncated(int k) const {
  if (is_zero() || valuation() >= k) return {};
  const int s = k - 1;
  if (s >= 0) {
    Polynomial q = num_.shifted(s).divmod(den_).first;
    return {std::move(q), Polynomial::monomial(Rational(1), s)};
  }
  Polynomial q = num_.divmod(den_.shifted(-s)).first;
  return {q.shifted(-s), Polynomial(Rational(1))};
}

bool RationalFunction::is_laurent() const { return den_.is_monomial(); }

std::optional<Rational> RationalFunction::as_rational() const {
  if (num_.degree() <= 0 && den_.degree() == 0) return num_.coeff(0);
  return std::nullopt;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  *this = RationalFunction(num_ * o.den_, den_ * o.num_);
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

Gap gap(const RationalFunction& r, const RationalFunction& s) {
  // Both denominators are monic, so the common denominator has a positive
  // leading coefficient and cancelling a monic gcd changes neither the sign
  // nor deg(den) - deg(num).
  if (r.den() == s.den()) {
    const Polynomial n = r.num() - s.num();
    if (n.is_zero()) return {0, kInfiniteValuation};
    return {n.leading().sign(), r.den().degree() - n.degree()};
  }
  const Polynomial n = r.num() * s.den() - s.num() * r.den();
  if (n.is_zero()) return {0, kInfiniteValuation};
  return {n.leading().sign(), r.den().degree() + s.den().degree() - n.degree()};
}

std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
  const int s = gap(a, b).sign;
  if (s == 0) return std::strong_ordering::equal;
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

std::string laurent_string(const Polynomial& num, int shift) {
  std::string out;
  bool first = true;
  for (int i = num.degree(); i >= 0; --i) {
    const Rational c = num.coeff(i);
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const int e = i - shift;
    if (e == 0) {
      out += mag.to_string();
    } else if (e > 0) {
      if (mag != Rational(1)) out += mag.to_string() + "*";
      out += "X";
      if (e > 1) out += "^" + std::to_string(e);
    } else {
      const std::string xp = e == -1 ? "X" : "X^" + std::to_string(-e);
      if (mag.is_integer()) {
        out += mag.to_string() + "/" + xp;
      } else {
        out += mag.numerator().get_str() + "/(" + mag.denominator().get_str() + "*" + xp + ")";
      }
    }
  }
  return out;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  if (is_laurent()) return laurent_string(num_, den_.degree());
  std::string n = num_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

RationalFunction embed_rational(const Rational& q) { return RationalFunction(q); }

RationalFunction add(const RationalFunction& r, const RationalFunction& s) { return r + s; }
RationalFunction sub(const RationalFunction& r, const RationalFunction& s) { return r - s; }
RationalFunction mul(const RationalFunction& r, const RationalFunction& s) { return r * s; }
RationalFunction neg(const RationalFunction& r) { return -r; }

std::optional<RationalFunction> div(const RationalFunction& r, const RationalFunction& s) {
  if (s.is_zero()) return std::nullopt;
  return r / s;
}

int sign(const RationalFunction& r) { return r.sign(); }

std::strong_ordering compare(const RationalFunction& r, const RationalFunction& s) { return r <=> s; }

bool is_infinitesimal(const RationalFunction& r) { return r.valuation() >= 1; }

bool is_finite(const RationalFunction& r) { return r.valuation() >= 0; }

bool infinitely_close(const RationalFunction& r, const RationalFunction& s) {
  return gap(r, s).valuation >= 1;
}

bool roughly_le(const RationalFunction& r, const RationalFunction& s) {
  return r < s || infinitely_close(r, s);
}

std::optional<Rational> try_standard_part(const RationalFunction& r) {
  if (!is_finite(r)) return std::nullopt;
  if (r.num().degree() == r.den().degree()) return r.num().leading() / r.den().leading();
  return Rational(0);
}

Rational standard_part(const RationalFunction& r) {
  auto st = try_standard_part(r);
  if (!st) throw std::domain_error("standard part of an infinite element " + r.to_string());
  return *st;
}

}  // namespace nsl::ordfield
