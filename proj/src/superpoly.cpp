#include "vsa/superpoly.hpp"

#include <algorithm>
#include <set>

#include "vsa/lexer.hpp"

namespace vsa {

const char* to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

Ring::Ring(std::vector<Indeterminate> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw Error("empty indeterminate name");
    if (!seen.insert(v.name).second) throw Error("duplicate indeterminate '" + v.name + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error("unknown indeterminate '" + std::string(name) + "'");
  return *i;
}

bool Ring::operator==(const Ring& other) const {
  if (vars_.size() != other.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != other.vars_[i].name || vars_[i].parity != other.vars_[i].parity) return false;
  return true;
}

RingPtr make_ring(std::vector<Indeterminate> vars) { return std::make_shared<const Ring>(std::move(vars)); }

RingPtr make_ring(const std::vector<std::string>& even, const std::vector<std::string>& odd) {
  std::vector<Indeterminate> vars;
  for (const auto& n : even) vars.push_back({n, Parity::Even});
  for (const auto& n : odd) vars.push_back({n, Parity::Odd});
  return make_ring(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Monomial::Monomial(std::vector<std::uint16_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, std::uint16_t e) {
  degree_ += static_cast<int>(e) - static_cast<int>(exps_[i]);
  exps_[i] = e;
}

Parity Monomial::parity(const Ring& ring) const {
  int odd = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (is_odd(ring.parity(i))) odd += exps_[i];
  return (odd & 1) ? Parity::Odd : Parity::Even;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a.exponents() > b.exponents();
}

std::pair<int, Monomial> multiply(const Ring& ring, const Monomial& a, const Monomial& b) {
  const std::size_t n = ring.size();
  std::vector<std::uint16_t> e(n);
  int sign = 1;
  // number of odd factors of a with index greater than the current one
  int odd_after = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (is_odd(ring.parity(i)) && a[i]) ++odd_after;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_odd(ring.parity(i))) {
      if (a[i]) --odd_after;
      if (a[i] && b[i]) return {0, Monomial()};
      if (b[i] && (odd_after & 1)) sign = -sign;
      e[i] = a[i] | b[i];
    } else {
      e[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    }
  }
  return {sign, Monomial(std::move(e))};
}

SuperPoly SuperPoly::constant(RingPtr ring, const Rational& c) {
  SuperPoly p(ring);
  p.add_term(Monomial(ring->size()), c);
  return p;
}

SuperPoly SuperPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error("indeterminate index out of range");
  Monomial m(ring->size());
  m.set(index, 1);
  SuperPoly p(ring);
  p.add_term(m, 1);
  return p;
}

SuperPoly SuperPoly::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->require(name);
  return variable(std::move(ring), i);
}

SuperPoly SuperPoly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->size()) throw Error("monomial size does not match ring");
  SuperPoly p(ring);
  p.add_term(m, c);
  return p;
}

void SuperPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> SuperPoly::parity() const {
  if (terms_.empty()) return Parity::Even;
  Parity p = terms_.begin()->first.parity(*ring_);
  for (const auto& [m, c] : terms_)
    if (m.parity(*ring_) != p) return std::nullopt;
  return p;
}

std::pair<SuperPoly, SuperPoly> SuperPoly::split_parity() const {
  SuperPoly ev(ring_), od(ring_);
  for (const auto& [m, c] : terms_) (is_odd(m.parity(*ring_)) ? od : ev).terms_.emplace(m, c);
  return {ev, od};
}

int SuperPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

void SuperPoly::check_ring(const SuperPoly& o) const {
  if (!ring_ || !o.ring_) return;
  if (!same_ring(ring_, o.ring_)) throw Error("polynomials over different rings");
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  check_ring(o);
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  check_ring(o);
  if (!ring_) ring_ = o.ring_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPoly& SuperPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  a.check_ring(b);
  return a.terms_ == b.terms_;
}

SuperPoly mul(const SuperPoly& p, const SuperPoly& q) {
  if (p.ring() && q.ring() && !same_ring(p.ring(), q.ring())) throw Error("polynomials over different rings");
  RingPtr ring = p.ring() ? p.ring() : q.ring();
  SuperPoly out(ring);
  if (p.is_zero() || q.is_zero()) return out;
  for (const auto& [ma, ca] : p.terms())
    for (const auto& [mb, cb] : q.terms()) {
      auto [s, m] = multiply(*ring, ma, mb);
      if (s == 0) continue;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(m, c);
    }
  return out;
}

SuperPoly operator*(const SuperPoly& p, const SuperPoly& q) { return mul(p, q); }

SuperPoly partial(const SuperPoly& p, std::size_t index) {
  SuperPoly out(p.ring());
  if (p.is_zero()) return out;
  const Ring& ring = *p.ring();
  if (index >= ring.size()) throw Error("indeterminate index out of range");
  const bool odd = is_odd(ring.parity(index));
  for (const auto& [m, c] : p.terms()) {
    if (m[index] == 0) continue;
    Monomial d = m;
    if (odd) {
      int passed = 0;
      for (std::size_t j = 0; j < index; ++j)
        if (is_odd(ring.parity(j)) && m[j]) ++passed;
      d.set(index, 0);
      out.add_term(d, (passed & 1) ? Rational(-c) : c);
    } else {
      d.set(index, static_cast<std::uint16_t>(m[index] - 1));
      out.add_term(d, c * m[index]);
    }
  }
  return out;
}

SuperPoly partial(const SuperPoly& p, std::string_view name) {
  if (!p.ring()) return p;
  return partial(p, p.ring()->require(name));
}

SuperPoly linear_combine(const std::vector<Rational>& coeffs, const std::vector<SuperPoly>& polys) {
  if (coeffs.size() != polys.size()) throw Error("coefficient and polynomial counts differ");
  SuperPoly out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!out.ring()) out = SuperPoly(polys[i].ring());
    out += polys[i] * coeffs[i];
  }
  return out;
}

std::optional<Parity> parity_of(const SuperPoly& p) { return p.parity(); }

SuperPoly power(const SuperPoly& p, unsigned k) {
  SuperPoly r = SuperPoly::constant(p.ring(), 1);
  for (unsigned i = 0; i < k; ++i) r = r * p;
  return r;
}

std::string format_monomial(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i).name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string format_coefficient_term(const Rational& c, const std::string& body, bool first) {
  std::string s;
  Rational a = abs(c);
  if (first) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  if (body.empty()) return s + a.get_str();
  if (a != 1) s += a.get_str() + "*";
  return s + body;
}

std::string SuperPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    s += format_coefficient_term(it->second, format_monomial(*ring_, it->first), first);
    first = false;
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), lex_(text) {}

  SuperPoly parse() {
    SuperPoly p = expr();
    if (!lex_.at_end()) lex_.fail("unexpected trailing input");
    return p;
  }

 private:
  SuperPoly expr() {
    SuperPoly acc(ring_);
    bool neg = lex_.accept('-');
    if (!neg) lex_.accept('+');
    SuperPoly t = term();
    acc += neg ? -t : t;
    while (true) {
      if (lex_.accept('+')) acc += term();
      else if (lex_.accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  SuperPoly term() {
    SuperPoly acc = factor();
    while (lex_.accept('*')) acc = acc * factor();
    return acc;
  }

  SuperPoly factor() {
    SuperPoly base = primary();
    if (lex_.accept('^')) {
      long k = lex_.integer();
      if (k < 0) lex_.fail("negative exponent");
      base = power(base, static_cast<unsigned>(k));
    }
    return base;
  }

  SuperPoly primary() {
    if (lex_.accept('(')) {
      SuperPoly p = expr();
      lex_.expect(')');
      return p;
    }
    if (lex_.peek_digit()) return SuperPoly::constant(ring_, lex_.rational());
    std::string name = lex_.identifier();
    auto idx = ring_->index_of(name);
    if (!idx) lex_.fail("unknown indeterminate '" + name + "'");
    return SuperPoly::variable(ring_, *idx);
  }

  RingPtr ring_;
  Lexer lex_;
};

}  // namespace

SuperPoly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace vsa
