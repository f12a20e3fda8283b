#include "vsa/forms.hpp"

#include <map>

#include "vsa/lexer.hpp"

namespace vsa {

FormSpace::FormSpace(RingPtr base) : base_(std::move(base)) {
  std::vector<Indeterminate> vars = base_->vars();
  for (const auto& v : base_->vars()) vars.push_back({"d" + v.name, v.parity + Parity::Odd});
  doubled_ = make_ring(std::move(vars));
}

FormSpacePtr make_form_space(RingPtr base) { return std::make_shared<const FormSpace>(std::move(base)); }

DiffForm::DiffForm(FormSpacePtr space, SuperPoly poly) : space_(std::move(space)), poly_(std::move(poly)) {
  if (!poly_.ring()) poly_ = SuperPoly(space_->doubled());
  else if (!same_ring(poly_.ring(), space_->doubled())) throw Error("form polynomial over a different ring");
}

DiffForm DiffForm::zero(FormSpacePtr space) {
  auto r = space->doubled();
  return DiffForm(std::move(space), SuperPoly(r));
}

DiffForm DiffForm::function(FormSpacePtr space, const SuperPoly& f) {
  if (!same_ring(f.ring(), space->base())) throw Error("function over a different ring");
  SuperPoly p(space->doubled());
  const std::size_t n = space->n();
  for (const auto& [m, c] : f.terms()) {
    std::vector<std::uint16_t> e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = m[i];
    p.add_term(Monomial(std::move(e)), c);
  }
  return DiffForm(std::move(space), std::move(p));
}

DiffForm DiffForm::differential(FormSpacePtr space, std::size_t i) {
  auto r = space->doubled();
  std::size_t k = space->dx(i);
  return DiffForm(std::move(space), SuperPoly::variable(r, k));
}

std::optional<int> DiffForm::form_degree() const {
  std::optional<int> deg;
  const std::size_t n = space_ ? space_->n() : 0;
  for (const auto& [m, c] : poly_.terms()) {
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) k += m[n + i];
    if (deg && *deg != k) return std::nullopt;
    deg = k;
  }
  return deg ? *deg : 0;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (!space_) return *this = o;
  if (!o.space_) return *this;
  poly_ += o.poly_;
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  if (!o.space_) return *this;
  if (!space_) return *this = -o;
  poly_ -= o.poly_;
  return *this;
}

DiffForm& DiffForm::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

bool operator==(const DiffForm& a, const DiffForm& b) { return a.poly_ == b.poly_; }

std::string DiffForm::to_string() const { return poly_.to_string(); }

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (!a.space()) return b * Rational(0);
  return DiffForm(a.space(), a.poly() * b.poly());
}

DiffForm ext_d(const DiffForm& w) {
  const FormSpace& s = *w.space();
  SuperPoly out(s.doubled());
  for (std::size_t i = 0; i < s.n(); ++i) {
    SuperPoly d = partial(w.poly(), i);
    if (d.is_zero()) continue;
    out += SuperPoly::variable(s.doubled(), s.dx(i)) * d;
  }
  return DiffForm(w.space(), std::move(out));
}

VectorField lie_operator(const FormSpace& space, const VectorField& D) {
  if (!same_ring(D.ring(), space.base())) throw Error("field and forms over different rings");
  auto p = D.parity();
  if (!p) throw Error("Lie derivative needs a homogeneous field");
  auto fs = std::make_shared<const FormSpace>(space);
  VectorField L(space.doubled());
  for (std::size_t i = 0; i < space.n(); ++i) {
    if (D.component(i).is_zero()) continue;
    DiffForm f = DiffForm::function(fs, D.component(i));
    L.set_component(i, f.poly());
    SuperPoly df = ext_d(f).poly();
    if (is_odd(*p)) df *= Rational(-1);
    L.set_component(space.dx(i), std::move(df));
  }
  return L;
}

DiffForm lie_derivative(const VectorField& D, const DiffForm& w) {
  return DiffForm(w.space(), apply(lie_operator(*w.space(), D), w.poly()));
}

DiffForm interior(const VectorField& D, const DiffForm& w) {
  const FormSpace& s = *w.space();
  if (!same_ring(D.ring(), s.base())) throw Error("field and forms over different rings");
  VectorField I(s.doubled());
  for (std::size_t i = 0; i < s.n(); ++i)
    if (!D.component(i).is_zero()) I.set_component(s.dx(i), DiffForm::function(w.space(), D.component(i)).poly());
  return DiffForm(w.space(), apply(I, w.poly()));
}

VectorField vol_identify(const DiffForm& w) {
  const FormSpace& s = *w.space();
  if (s.n() != 5) throw Error("vol identification needs five coordinates");
  for (std::size_t i = 0; i < 5; ++i)
    if (is_odd(s.base()->parity(i))) throw Error("vol identification needs even coordinates");
  VectorField out(s.base());
  std::vector<SuperPoly> comps(5, SuperPoly(s.base()));
  for (const auto& [m, c] : w.poly().terms()) {
    int count = 0;
    std::size_t missing = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      if (m[s.dx(i)]) ++count;
      else missing = i;
    }
    if (count != 4) throw Error("vol identification needs a 4-form");
    std::vector<std::uint16_t> e(5);
    for (std::size_t i = 0; i < 5; ++i) e[i] = m[i];
    // dx factors are stored increasing, so sign(ijklm) = (-1)^{#indices above m}
    Rational v = ((4 - missing) % 2) ? Rational(-c) : c;
    comps[missing].add_term(Monomial(std::move(e)), v);
  }
  return VectorField(s.base(), std::move(comps));
}

std::optional<DiffForm> exact_preimage(const DiffForm& w) {
  const FormSpace& s = *w.space();
  for (std::size_t i = 0; i < s.n(); ++i)
    if (is_odd(s.base()->parity(i))) throw Error("homotopy operator needs even coordinates");
  if (!ext_d(w).is_zero()) return std::nullopt;
  VectorField E(s.base());
  for (std::size_t i = 0; i < s.n(); ++i) E.set_component(i, SuperPoly::variable(s.base(), i));
  std::map<int, SuperPoly> by_degree;
  for (const auto& [m, c] : w.poly().terms()) {
    auto it = by_degree.try_emplace(m.total_degree(), s.doubled()).first;
    it->second.add_term(m, c);
  }
  DiffForm out = DiffForm::zero(w.space());
  for (const auto& [deg, part] : by_degree) {
    if (deg == 0) return std::nullopt;
    out += interior(E, DiffForm(w.space(), part)) * Rational(1, deg);
  }
  if (ext_d(out) != w) return std::nullopt;
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(const FormSpacePtr& space, std::string_view text) : space_(space), lex_(text) {}

  DiffForm parse() {
    SuperPoly p = expr();
    if (!lex_.at_end()) lex_.fail("unexpected trailing input");
    return DiffForm(space_, p);
  }

 private:
  SuperPoly expr() {
    SuperPoly acc(space_->doubled());
    bool neg = lex_.accept('-');
    if (!neg) lex_.accept('+');
    acc += neg ? -term() : term();
    while (true) {
      if (lex_.accept('+')) acc += term();
      else if (lex_.accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  SuperPoly term() {
    SuperPoly acc = factor();
    while (lex_.accept('*') || lex_.accept('^')) acc = acc * factor();
    return acc;
  }

  SuperPoly factor() {
    SuperPoly base = primary();
    std::size_t save = lex_.position();
    if (lex_.accept('^')) {
      if (lex_.peek_digit()) return power(base, static_cast<unsigned>(lex_.integer()));
      lex_.reset(save);
    }
    return base;
  }

  SuperPoly primary() {
    const auto& ring = space_->doubled();
    if (lex_.accept('(')) {
      SuperPoly p = expr();
      lex_.expect(')');
      return p;
    }
    if (lex_.peek_digit()) return SuperPoly::constant(ring, lex_.rational());
    std::string name = lex_.identifier();
    auto idx = ring->index_of(name);
    if (!idx) lex_.fail("unknown symbol '" + name + "'");
    return SuperPoly::variable(ring, *idx);
  }

  FormSpacePtr space_;
  Lexer lex_;
};

}  // namespace

DiffForm parse_form(const FormSpacePtr& space, std::string_view text) { return FormParser(space, text).parse(); }

DiffForm contact_form(const FormSpacePtr& space, const ContactRealization& r, bool printed_signs) {
  if (!same_ring(space->base(), r.ring)) throw Error("form space does not match the realization");
  const auto& R = space->doubled();
  auto x = [&](std::size_t i) { return SuperPoly::variable(R, i); };
  auto dx = [&](std::size_t i) { return SuperPoly::variable(R, space->dx(i)); };
  if (!r.t) throw Error("contact form needs t or tau");
  SuperPoly a(R);
  if (r.kind == ContactRealization::Kind::K) {
    for (auto [p, q] : r.pairs) a += x(p) * dx(q) - x(q) * dx(p);
    for (auto [xi, eta] : r.xieta) a += x(xi) * dx(eta) + x(eta) * dx(xi);
    for (auto th : r.theta) a += x(th) * dx(th);
  } else if (r.kind == ContactRealization::Kind::M) {
    for (auto [q, xi] : r.pairs) a += x(xi) * dx(q) + x(q) * dx(xi);
  } else {
    throw Error("contact form is defined for k and m realizations");
  }
  if (!printed_signs) a *= Rational(-1);
  return DiffForm(space, dx(*r.t) + a);
}

std::optional<Parity> E510Element::parity() const {
  bool e = !even.is_zero(), o = !odd.is_zero();
  if (e && o) return std::nullopt;
  return o ? Parity::Odd : Parity::Even;
}

E510Element& E510Element::operator+=(const E510Element& o) {
  even += o.even;
  odd += o.odd;
  return *this;
}

E510Element& E510Element::operator*=(const Rational& c) {
  even *= c;
  odd *= c;
  return *this;
}

std::string E510Element::to_string() const {
  if (odd.is_zero()) return even.to_string();
  if (even.is_zero()) return odd.to_string();
  return even.to_string() + " + (" + odd.to_string() + ")";
}

FormSpacePtr e510_space() {
  static const FormSpacePtr space = make_form_space(make_ring({"x1", "x2", "x3", "x4", "x5"}, {}));
  return space;
}

E510Element e510_zero() { return {VectorField(e510_space()->base()), DiffForm::zero(e510_space())}; }

E510Element e510_bracket(const E510Element& a, const E510Element& b) {
  E510Element out = e510_zero();
  if (!a.even.is_zero() && !b.even.is_zero()) out.even += bracket(a.even, b.even);
  if (!a.even.is_zero() && !b.odd.is_zero()) out.odd += lie_derivative(a.even, b.odd);
  if (!a.odd.is_zero() && !b.even.is_zero()) out.odd -= lie_derivative(b.even, a.odd);
  if (!a.odd.is_zero() && !b.odd.is_zero()) out.even += vol_identify(wedge(a.odd, b.odd));
  return out;
}

E510Element parse_e510(std::string_view text) {
  auto space = e510_space();
  E510Element out = e510_zero();
  if (text.find("d/d") != std::string_view::npos) out.even = parse_field(space->base(), text);
  else out.odd = parse_form(space, text);
  return out;
}

bool e510_valid(const E510Element& a) {
  if (!divergence(a.even).is_zero()) return false;
  if (a.odd.is_zero()) return true;
  auto deg = a.odd.form_degree();
  return deg && *deg == 2 && ext_d(a.odd).is_zero();
}

}  // namespace vsa
