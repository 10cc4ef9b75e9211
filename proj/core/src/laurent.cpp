#include "mcgrep/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcgrep {

namespace {

__extension__ using wide = __int128;

std::int64_t checked(wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("exponent arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

bool exponent_less(const Monomial& a, const Monomial& b) {
  if (a.q != b.q) return a.q < b.q;
  return a.t < b.t;
}

bool same_exponents(const Monomial& a, const Monomial& b) {
  return a.q == b.q && a.t == b.t;
}

// Merges a sorted run of terms in place, dropping cancelled coefficients.
void merge_sorted(std::vector<Monomial>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer sum = std::move(terms[i].coeff);
    while (j < terms.size() && same_exponents(terms[j], terms[i])) {
      sum += terms[j].coeff;
      ++j;
    }
    if (sum != 0) {
      terms[out].coeff = std::move(sum);
      terms[out].q = terms[i].q;
      terms[out].t = terms[i].t;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::string exponent_factor(char symbol, const Exponent& e) {
  if (e.is_zero()) return {};
  std::string s(1, symbol);
  if (e == Exponent(1)) return s;
  if (e.is_integer()) return s + "^" + std::to_string(e.numerator());
  return s + "^(" + e.to_string() + ")";
}

}  // namespace

Exponent::Exponent(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("exponent with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (den_ == other.den_) return Exponent(checked(wide(num_) + other.num_), den_);
  const std::int64_t g = std::gcd(den_, other.den_);
  const wide lhs = wide(num_) * (other.den_ / g);
  const wide rhs = wide(other.num_) * (den_ / g);
  return Exponent(checked(lhs + rhs), checked(wide(den_ / g) * other.den_));
}

Exponent Exponent::operator-(const Exponent& other) const { return *this + (-other); }

Exponent Exponent::operator*(std::int64_t k) const {
  return Exponent(checked(wide(num_) * k), den_);
}

std::strong_ordering Exponent::operator<=>(const Exponent& other) const {
  if (den_ == other.den_) return num_ <=> other.num_;
  return wide(num_) * other.den_ <=> wide(other.num_) * den_;
}

std::string Exponent::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Monomial Monomial::operator*(const Monomial& other) const {
  return Monomial{coeff * other.coeff, q + other.q, t + other.t};
}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.push_back(Monomial{std::move(constant), {}, {}});
}

LaurentPoly::LaurentPoly(Monomial m) {
  if (m.coeff != 0) terms_.push_back(std::move(m));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), exponent_less);
  merge_sorted(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::monomial(Integer coeff, Exponent q, Exponent t) {
  return LaurentPoly(Monomial{std::move(coeff), q, t});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].q.is_zero() &&
         terms_[0].t.is_zero();
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1 && terms_[0].is_unit(); }

std::optional<Monomial> LaurentPoly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_[0];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& m : r.terms_) m.coeff = -m.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::merge(std::make_move_iterator(terms_.begin()), std::make_move_iterator(terms_.end()),
             other.terms_.begin(), other.terms_.end(), std::back_inserter(merged),
             exponent_less);
  merge_sorted(merged);
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_[0]);
  if (b.size() == 1) return a.times(b.terms_[0]);
  std::vector<Monomial> products;
  products.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) products.push_back(x * y);
  }
  return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  if (m.coeff == 0) return {};
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  // Shifting by a fixed exponent preserves the lexicographic order.
  for (const auto& x : terms_) r.terms_.push_back(x * m);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string vars = exponent_factor('q', m.q);
    const std::string tf = exponent_factor('t', m.t);
    if (!tf.empty()) vars = vars.empty() ? tf : vars + "*" + tf;
    if (vars.empty()) {
      os << m.coeff;
    } else if (m.coeff == 1) {
      os << vars;
    } else if (m.coeff == -1) {
      os << "-" << vars;
    } else {
      os << m.coeff << "*" << vars;
    }
  }
  return os.str();
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
bool poly_eq(const LaurentPoly& a, const LaurentPoly& b) { return a == b; }

LaurentPoly mono_pow(const Monomial& m, std::int64_t k) {
  if (k < 0 && !m.is_unit()) {
    throw std::domain_error("negative power of a non-unit monomial");
  }
  if (k == 0) return LaurentPoly(1);
  Integer c = 1;
  if (m.coeff == -1) {
    c = (k % 2 == 0) ? 1 : -1;
  } else if (m.coeff != 1) {
    c = boost::multiprecision::pow(m.coeff, static_cast<unsigned>(k));
  }
  return LaurentPoly::monomial(std::move(c), m.q * k, m.t * k);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (auto m = b.as_monomial()) {
    std::vector<Monomial> terms;
    terms.reserve(a.size());
    for (const auto& x : a.terms()) {
      if (x.coeff % m->coeff != 0) return std::nullopt;
      terms.push_back(Monomial{x.coeff / m->coeff, x.q - m->q, x.t - m->t});
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

  // For an exact quotient p = a / b the extreme exponents in each variable add:
  // every quotient term lies in the box [min(a) - min(b), max(a) - max(b)].
  auto extent = [](const LaurentPoly& p, auto proj) {
    auto [lo, hi] = std::minmax_element(
        p.terms().begin(), p.terms().end(),
        [&](const Monomial& x, const Monomial& y) { return proj(x) < proj(y); });
    return std::pair{proj(*lo), proj(*hi)};
  };
  auto qproj = [](const Monomial& m) { return m.q; };
  auto tproj = [](const Monomial& m) { return m.t; };
  const auto [aq_lo, aq_hi] = extent(a, qproj);
  const auto [bq_lo, bq_hi] = extent(b, qproj);
  const auto [at_lo, at_hi] = extent(a, tproj);
  const auto [bt_lo, bt_hi] = extent(b, tproj);
  const Exponent q_lo = aq_lo - bq_lo, q_hi = aq_hi - bq_hi;
  const Exponent t_lo = at_lo - bt_lo, t_hi = at_hi - bt_hi;
  if (q_hi < q_lo || t_hi < t_lo) return std::nullopt;

  std::vector<Monomial> quotient;
  LaurentPoly rem = a;
  const Monomial& lead = b.leading();
  while (!rem.is_zero()) {
    const Monomial& r = rem.leading();
    if (r.coeff % lead.coeff != 0) return std::nullopt;
    Monomial m{r.coeff / lead.coeff, r.q - lead.q, r.t - lead.t};
    if (m.q < q_lo || m.q > q_hi || m.t < t_lo || m.t > t_hi) return std::nullopt;
    rem -= b.times(m);
    quotient.push_back(std::move(m));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace mcgrep
