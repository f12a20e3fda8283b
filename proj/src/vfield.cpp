#include "vsa/vfield.hpp"

#include <variant>

#include "vsa/lexer.hpp"

namespace vsa {

VectorField::VectorField(RingPtr ring) : ring_(std::move(ring)) {
  comps_.assign(ring_->size(), SuperPoly(ring_));
}

VectorField::VectorField(RingPtr ring, std::vector<SuperPoly> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  if (comps_.size() != ring_->size()) throw Error("component count does not match ring");
  for (auto& c : comps_) {
    if (!c.ring()) c = SuperPoly(ring_);
    else if (!same_ring(c.ring(), ring_)) throw Error("component over a different ring");
  }
}

VectorField VectorField::basis(RingPtr ring, std::size_t index, SuperPoly f) {
  VectorField D(ring);
  D.set_component(index, std::move(f));
  return D;
}

VectorField VectorField::basis(RingPtr ring, std::size_t index) {
  auto one = SuperPoly::constant(ring, 1);
  return basis(std::move(ring), index, one);
}

void VectorField::set_component(std::size_t i, SuperPoly f) {
  if (f.ring() && !same_ring(f.ring(), ring_)) throw Error("component over a different ring");
  if (!f.ring()) f = SuperPoly(ring_);
  comps_.at(i) = std::move(f);
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<Parity> VectorField::parity() const {
  std::optional<Parity> p;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    auto q = comps_[i].parity();
    if (!q) return std::nullopt;
    Parity r = *q + ring_->parity(i);
    if (p && *p != r) return std::nullopt;
    p = r;
  }
  return p ? *p : Parity::Even;
}

std::pair<VectorField, VectorField> VectorField::split_parity() const {
  VectorField ev(ring_), od(ring_);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    auto [e, o] = comps_[i].split_parity();
    if (is_odd(ring_->parity(i))) std::swap(e, o);
    ev.comps_[i] = std::move(e);
    od.comps_[i] = std::move(o);
  }
  return {ev, od};
}

int VectorField::degree() const {
  int d = -1;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

void VectorField::check_ring(const VectorField& o) const {
  if (!same_ring(ring_, o.ring_)) throw Error("vector fields over different rings");
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (!ring_) return *this = o;
  if (!o.ring_) return *this;
  check_ring(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (!o.ring_) return *this;
  if (!ring_) return *this = -o;
  check_ring(o);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& f : comps_) f *= c;
  return *this;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (!a.ring_ || !b.ring_) return a.is_zero() && b.is_zero();
  a.check_ring(b);
  return a.comps_ == b.comps_;
}

std::string VectorField::to_string() const {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    const std::string d = "d/d" + ring_->var(i).name;
    for (auto it = comps_[i].terms().rbegin(); it != comps_[i].terms().rend(); ++it) {
      std::string body = format_monomial(*ring_, it->first);
      body = body.empty() ? d : body + "*" + d;
      s += format_coefficient_term(it->second, body, first);
      first = false;
    }
  }
  return first ? "0" : s;
}

VectorField multiply(const SuperPoly& f, const VectorField& D) {
  std::vector<SuperPoly> comps;
  comps.reserve(D.size());
  for (const auto& c : D.components()) comps.push_back(f * c);
  return VectorField(D.ring(), std::move(comps));
}

SuperPoly apply(const VectorField& D, const SuperPoly& f) {
  SuperPoly out(D.ring());
  if (f.ring() && !same_ring(f.ring(), D.ring())) throw Error("field and polynomial over different rings");
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (D.component(i).is_zero()) continue;
    SuperPoly d = partial(f, i);
    if (d.is_zero()) continue;
    out += D.component(i) * d;
  }
  return out;
}

namespace {

VectorField bracket_homogeneous(const VectorField& a, Parity pa, const VectorField& b, Parity pb) {
  VectorField out(a.ring());
  const int s = sign_of(pa, pb);
  for (std::size_t i = 0; i < a.size(); ++i) {
    SuperPoly c = apply(a, b.component(i));
    SuperPoly d = apply(b, a.component(i));
    if (s > 0) c -= d;
    else c += d;
    out.set_component(i, std::move(c));
  }
  return out;
}

}  // namespace

VectorField bracket(const VectorField& a, const VectorField& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error("vector fields over different rings");
  auto pa = a.parity();
  auto pb = b.parity();
  if (pa && pb) return bracket_homogeneous(a, *pa, b, *pb);
  auto [ae, ao] = a.split_parity();
  auto [be, bo] = b.split_parity();
  VectorField out(a.ring());
  out += bracket_homogeneous(ae, Parity::Even, be, Parity::Even);
  out += bracket_homogeneous(ae, Parity::Even, bo, Parity::Odd);
  out += bracket_homogeneous(ao, Parity::Odd, be, Parity::Even);
  out += bracket_homogeneous(ao, Parity::Odd, bo, Parity::Odd);
  return out;
}

SuperPoly divergence(const VectorField& D) {
  SuperPoly out(D.ring());
  const Ring& ring = *D.ring();
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (D.component(i).is_zero()) continue;
    if (!is_odd(ring.parity(i))) {
      out += partial(D.component(i), i);
    } else {
      auto [e, o] = D.component(i).split_parity();
      out += partial(e, i);
      out -= partial(o, i);
    }
  }
  return out;
}

VectorField euler(const RingPtr& ring, const std::vector<std::size_t>& excluded) {
  VectorField E(ring);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    bool skip = false;
    for (auto x : excluded) skip |= (x == i);
    if (!skip) E.set_component(i, SuperPoly::variable(ring, i));
  }
  return E;
}

bool is_member(const VectorField& D, const SubalgebraDescriptor& S) {
  switch (S.kind) {
    case SubalgebraDescriptor::Kind::Vect:
      return true;
    case SubalgebraDescriptor::Kind::Svect:
    case SubalgebraDescriptor::Kind::SleHarmonic:
      return divergence(D).is_zero();
    case SubalgebraDescriptor::Kind::SvectDeformed: {
      const Ring& ring = *D.ring();
      Monomial theta(ring.size());
      std::size_t m = 0;
      for (std::size_t i = 0; i < ring.size(); ++i)
        if (is_odd(ring.parity(i))) {
          theta.set(i, 1);
          ++m;
        }
      if (m % 2) throw Error("deformed divergence-free descriptor needs an even number of odd coordinates");
      SuperPoly w = SuperPoly::constant(D.ring(), 1);
      w.add_term(theta, S.lambda);
      return divergence(multiply(w, D)).is_zero();
    }
    case SubalgebraDescriptor::Kind::Bab:
      throw Error("b_{a,b} membership is defined on generating functions");
  }
  return false;
}

namespace {

using PolyOrField = std::variant<SuperPoly, VectorField>;

class FieldParser {
 public:
  FieldParser(const RingPtr& ring, std::string_view text) : ring_(ring), lex_(text) {}

  VectorField parse() {
    PolyOrField v = sum();
    if (!lex_.at_end()) lex_.fail("unexpected trailing input");
    if (auto* f = std::get_if<VectorField>(&v)) return *f;
    if (std::get<SuperPoly>(v).is_zero()) return VectorField(ring_);
    lex_.fail("expression is a function, not a vector field");
  }

 private:
  PolyOrField sum() {
    bool neg = lex_.accept('-');
    if (!neg) lex_.accept('+');
    PolyOrField acc = product();
    if (neg) acc = scale(acc, -1);
    while (true) {
      int s = 0;
      if (lex_.accept('+')) s = 1;
      else if (lex_.accept('-')) s = -1;
      else break;
      acc = add(acc, scale(product(), s));
    }
    return acc;
  }

  PolyOrField product() {
    PolyOrField acc = factor();
    while (lex_.accept('*')) {
      PolyOrField rhs = factor();
      auto* p = std::get_if<SuperPoly>(&acc);
      if (!p) lex_.fail("a vector field must be the last factor of a product");
      if (auto* q = std::get_if<SuperPoly>(&rhs)) acc = *p * *q;
      else acc = multiply(*p, std::get<VectorField>(rhs));
    }
    return acc;
  }

  PolyOrField factor() {
    if (lex_.accept('(')) {
      PolyOrField v = sum();
      lex_.expect(')');
      if (lex_.accept('^')) {
        auto* p = std::get_if<SuperPoly>(&v);
        if (!p) lex_.fail("power of a vector field");
        return power(*p, static_cast<unsigned>(lex_.integer()));
      }
      return v;
    }
    if (lex_.peek_digit()) return SuperPoly::constant(ring_, lex_.rational());
    std::size_t save = lex_.position();
    std::string name = lex_.identifier();
    if (name == "d" && lex_.accept('/')) {
      std::string dn = lex_.identifier();
      if (dn.size() < 2 || dn[0] != 'd') lex_.fail("expected d/dNAME");
      auto idx = ring_->index_of(dn.substr(1));
      if (!idx) lex_.fail("unknown coordinate '" + dn.substr(1) + "'");
      return VectorField::basis(ring_, *idx);
    }
    auto idx = ring_->index_of(name);
    if (!idx) {
      lex_.reset(save);
      lex_.fail("unknown indeterminate '" + name + "'");
    }
    SuperPoly v = SuperPoly::variable(ring_, *idx);
    if (lex_.accept('^')) v = power(v, static_cast<unsigned>(lex_.integer()));
    return v;
  }

  PolyOrField scale(PolyOrField v, int s) {
    if (s == 1) return v;
    if (auto* p = std::get_if<SuperPoly>(&v)) return -*p;
    return -std::get<VectorField>(v);
  }

  PolyOrField add(const PolyOrField& a, const PolyOrField& b) {
    if (a.index() != b.index()) {
      // a zero constant may be combined with anything
      if (auto* p = std::get_if<SuperPoly>(&a); p && p->is_zero()) return b;
      if (auto* p = std::get_if<SuperPoly>(&b); p && p->is_zero()) return a;
      lex_.fail("cannot add a function to a vector field");
    }
    if (auto* p = std::get_if<SuperPoly>(&a)) return *p + std::get<SuperPoly>(b);
    return std::get<VectorField>(a) + std::get<VectorField>(b);
  }

  RingPtr ring_;
  Lexer lex_;
};

}  // namespace

VectorField parse_field(const RingPtr& ring, std::string_view text) { return FieldParser(ring, text).parse(); }

}  // namespace vsa
