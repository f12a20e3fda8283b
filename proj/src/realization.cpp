#include "vsa/realization.hpp"

#include <functional>

namespace vsa {

namespace {

constexpr int kFormComp = 5;

std::vector<Rational> unit(std::size_t n, std::size_t i, const Rational& c = 1) {
  std::vector<Rational> v(n, Rational(0));
  v[i] = c;
  return v;
}

template <class T>
const T& get_as(const Element& e, const char* what) {
  if (auto p = std::get_if<T>(&e)) return *p;
  throw Error(std::string("element is not a ") + what);
}

}  // namespace

std::size_t Realization::VecHash::operator()(const std::vector<std::uint16_t>& v) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

std::shared_ptr<Realization> Realization::vect(RingPtr ring) {
  std::shared_ptr<Realization> r(new Realization);
  r->kind_ = Kind::Vect;
  r->coords_ = std::move(ring);
  return r;
}

std::shared_ptr<Realization> Realization::functions(ContactRealization c) {
  std::shared_ptr<Realization> r(new Realization);
  r->kind_ = Kind::Functions;
  r->coords_ = c.ring;
  r->contact_ = std::move(c);
  return r;
}

std::shared_ptr<Realization> Realization::e510() {
  std::shared_ptr<Realization> r(new Realization);
  r->kind_ = Kind::E510;
  r->forms_ = e510_space();
  r->coords_ = r->forms_->base();
  return r;
}

std::string Realization::describe() const {
  switch (kind_) {
    case Kind::Vect: return "vect";
    case Kind::Functions: return vsa::to_string(contact_->kind);
    case Kind::E510: return "e510";
  }
  return "";
}

const ContactRealization& Realization::contact() const {
  if (!contact_) throw Error("realization has no generating functions");
  return *contact_;
}

Element Realization::zero() const {
  switch (kind_) {
    case Kind::Vect: return VectorField(coords_);
    case Kind::Functions: return SuperPoly(coords_);
    case Kind::E510: return e510_zero();
  }
  return {};
}

Element Realization::parse(std::string_view text) const {
  switch (kind_) {
    case Kind::Vect: return parse_field(coords_, text);
    case Kind::Functions: return parse_poly(coords_, text);
    case Kind::E510: {
      // fields and forms may be mixed in one sum only via separate parses
      return parse_e510(text);
    }
  }
  return {};
}

Element Realization::bracket(const Element& a, const Element& b) const {
  switch (kind_) {
    case Kind::Vect: return vsa::bracket(get_as<VectorField>(a, "field"), get_as<VectorField>(b, "field"));
    case Kind::Functions:
      return function_bracket(get_as<SuperPoly>(a, "function"), get_as<SuperPoly>(b, "function"), *contact_);
    case Kind::E510: return e510_bracket(get_as<E510Element>(a, "e510 element"), get_as<E510Element>(b, "e510 element"));
  }
  return {};
}

Element Realization::add(const Element& a, const Element& b) const {
  switch (kind_) {
    case Kind::Vect: return get_as<VectorField>(a, "field") + get_as<VectorField>(b, "field");
    case Kind::Functions: return get_as<SuperPoly>(a, "function") + get_as<SuperPoly>(b, "function");
    case Kind::E510: return get_as<E510Element>(a, "e510 element") + get_as<E510Element>(b, "e510 element");
  }
  return {};
}

Element Realization::scale(const Element& a, const Rational& c) const {
  return std::visit([&](const auto& x) -> Element { return x * c; }, a);
}

Element Realization::combine(const std::vector<Rational>& coeffs, const std::vector<Element>& els) const {
  if (coeffs.size() != els.size()) throw Error("combine: size mismatch");
  Element out = zero();
  for (std::size_t i = 0; i < els.size(); ++i)
    if (coeffs[i] != 0) out = add(out, scale(els[i], coeffs[i]));
  return out;
}

bool Realization::is_zero(const Element& a) const {
  return std::visit([](const auto& x) { return x.is_zero(); }, a);
}

std::optional<Parity> Realization::parity(const Element& a) const {
  switch (kind_) {
    case Kind::Vect: return get_as<VectorField>(a, "field").parity();
    case Kind::Functions: {
      auto p = get_as<SuperPoly>(a, "function").parity();
      if (!p) return p;
      auto k = contact_->kind;
      if (k == ContactRealization::Kind::M || k == ContactRealization::Kind::Le) return *p + Parity::Odd;
      return p;
    }
    case Kind::E510: return get_as<E510Element>(a, "e510 element").parity();
  }
  return std::nullopt;
}

std::string Realization::to_string(const Element& a) const {
  return std::visit([](const auto& x) { return x.to_string(); }, a);
}

VectorField Realization::as_field(const Element& a) const {
  switch (kind_) {
    case Kind::Vect: return get_as<VectorField>(a, "field");
    case Kind::Functions: return field_of(get_as<SuperPoly>(a, "function"), *contact_);
    case Kind::E510: throw Error("e510 elements are not vector fields");
  }
  return {};
}

int Realization::component_count() const {
  switch (kind_) {
    case Kind::Vect: return static_cast<int>(coords_->size());
    case Kind::Functions: return 1;
    case Kind::E510: return kFormComp + 1;
  }
  return 0;
}

const Ring& Realization::component_ring(int comp) const {
  if (kind_ == Kind::E510 && comp == kFormComp) return *forms_->doubled();
  return *coords_;
}

Parity Realization::component_parity(int comp) const {
  switch (kind_) {
    case Kind::Vect: return coords_->parity(static_cast<std::size_t>(comp));
    case Kind::Functions: {
      auto k = contact_->kind;
      return (k == ContactRealization::Kind::M || k == ContactRealization::Kind::Le) ? Parity::Odd : Parity::Even;
    }
    case Kind::E510: return comp == kFormComp ? Parity::Odd : Parity::Even;
  }
  return Parity::Even;
}

std::vector<Rational> Realization::shift() const {
  const std::size_t n = coords_->size();
  const auto& c = *contact_;
  using K = ContactRealization::Kind;
  if (c.kind == K::K || c.kind == K::M) return unit(n, *c.t);
  std::vector<Rational> s(n, Rational(0));
  if (!c.pairs.empty()) {
    s[c.pairs[0].first] += 1;
    s[c.pairs[0].second] += 1;
  } else if (!c.xieta.empty()) {
    s[c.xieta[0].first] += 1;
    s[c.xieta[0].second] += 1;
  } else if (!c.theta.empty()) {
    s[c.theta[0]] += 2;
  }
  return s;
}

std::vector<Rational> Realization::form_of(int comp, const Monomial& m) const {
  const std::size_t n = coords_->size();
  std::vector<Rational> f(n, Rational(0));
  if (kind_ == Kind::E510 && comp == kFormComp) {
    for (std::size_t i = 0; i < n; ++i) f[i] = Rational(m[i] + m[n + i]) - Rational(1, 2);
    return f;
  }
  for (std::size_t i = 0; i < n; ++i) f[i] = m[i];
  if (kind_ == Kind::Functions) {
    auto s = shift();
    for (std::size_t i = 0; i < n; ++i) f[i] -= s[i];
  } else {
    f[static_cast<std::size_t>(comp)] -= 1;
  }
  return f;
}

Key Realization::intern(int comp, const Monomial& m) const {
  std::vector<std::uint16_t> id;
  id.reserve(m.size() + 1);
  id.push_back(static_cast<std::uint16_t>(comp));
  id.insert(id.end(), m.exponents().begin(), m.exponents().end());
  auto it = index_.find(id);
  if (it != index_.end()) return it->second;
  Key k = static_cast<Key>(keys_.size());
  keys_.push_back({comp, m, m.parity(component_ring(comp)) + component_parity(comp), form_of(comp, m)});
  index_.emplace(std::move(id), k);
  return k;
}

SparseVec Realization::flatten(const Element& a) const {
  std::vector<std::pair<Key, Rational>> out;
  auto add_poly = [&](int comp, const SuperPoly& p) {
    for (const auto& [m, c] : p.terms()) out.emplace_back(intern(comp, m), c);
  };
  switch (kind_) {
    case Kind::Vect: {
      const auto& f = get_as<VectorField>(a, "field");
      for (std::size_t i = 0; i < f.size(); ++i) add_poly(static_cast<int>(i), f.component(i));
      break;
    }
    case Kind::Functions: add_poly(0, get_as<SuperPoly>(a, "function")); break;
    case Kind::E510: {
      const auto& e = get_as<E510Element>(a, "e510 element");
      for (std::size_t i = 0; i < e.even.size(); ++i) add_poly(static_cast<int>(i), e.even.component(i));
      add_poly(kFormComp, e.odd.poly());
      break;
    }
  }
  return normalize_entries(std::move(out));
}

Element Realization::key_element(Key k) const { return unflatten({{k, Rational(1)}}); }

Element Realization::unflatten(const SparseVec& v) const {
  switch (kind_) {
    case Kind::Vect: {
      std::vector<SuperPoly> comps(coords_->size(), SuperPoly(coords_));
      for (const auto& [k, c] : v) comps[static_cast<std::size_t>(keys_[k].comp)].add_term(keys_[k].mono, c);
      return VectorField(coords_, std::move(comps));
    }
    case Kind::Functions: {
      SuperPoly p(coords_);
      for (const auto& [k, c] : v) p.add_term(keys_[k].mono, c);
      return p;
    }
    case Kind::E510: {
      std::vector<SuperPoly> comps(coords_->size(), SuperPoly(coords_));
      SuperPoly form(forms_->doubled());
      for (const auto& [k, c] : v) {
        if (keys_[k].comp == kFormComp) form.add_term(keys_[k].mono, c);
        else comps[static_cast<std::size_t>(keys_[k].comp)].add_term(keys_[k].mono, c);
      }
      return E510Element{VectorField(coords_, std::move(comps)), DiffForm(forms_, std::move(form))};
    }
  }
  return {};
}

Parity Realization::key_parity(Key k) const { return keys_.at(k).parity; }

const std::vector<Rational>& Realization::key_form(Key k) const { return keys_.at(k).form; }

std::vector<std::vector<Rational>> Realization::weight_constraints() const {
  std::vector<std::vector<Rational>> rows;
  if (kind_ != Kind::Functions) return rows;
  const std::size_t n = coords_->size();
  const auto s = shift();
  auto pair_row = [&](std::size_t a, std::size_t b) {
    std::vector<Rational> r(n, Rational(0));
    r[a] += 1;
    r[b] += 1;
    for (std::size_t i = 0; i < n; ++i) r[i] -= s[i];
    if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; })) rows.push_back(std::move(r));
  };
  const auto& c = *contact_;
  for (auto [a, b] : c.pairs) pair_row(a, b);
  for (auto [a, b] : c.xieta) pair_row(a, b);
  for (auto th : c.theta) pair_row(th, th);
  return rows;
}

std::vector<Key> Realization::keys_of_degree(const std::vector<Rational>& w, const Rational& degree,
                                             const std::vector<int>& caps) const {
  std::vector<Key> out;
  for (int comp = 0; comp < component_count(); ++comp) {
    const Ring& ring = component_ring(comp);
    const std::size_t nv = ring.size();
    // weight of each variable of the component ring; dx_i carries w_i
    std::vector<Rational> vw(nv);
    std::vector<int> cap(nv, -1);
    for (std::size_t i = 0; i < nv; ++i) {
      std::size_t base = i % coords_->size();
      vw[i] = w.at(base);
      if (base < caps.size() && caps[base] >= 0) cap[i] = caps[base];
      if (is_odd(ring.parity(i))) cap[i] = 1;
    }
    // target: degree plus the constant part of the key form
    Monomial zero_mono(nv);
    const auto f0 = form_of(comp, zero_mono);
    Rational target = degree;
    for (std::size_t i = 0; i < coords_->size(); ++i) target -= f0[i] * w[i];
    std::vector<Rational> minrest(nv + 1, Rational(0));
    for (std::size_t i = nv; i-- > 0;) {
      Rational lo = 0;
      if (vw[i] < 0) {
        if (cap[i] < 0) throw Error("monomials of fixed degree are infinite: variable " + ring.var(i).name + " has degree <= 0");
        lo = vw[i] * cap[i];
      } else if (vw[i] == 0 && cap[i] < 0) {
        throw Error("monomials of fixed degree are infinite: variable " + ring.var(i).name + " has degree 0");
      }
      minrest[i] = minrest[i + 1] + lo;
    }
    std::vector<std::uint16_t> exps(nv, 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational rest) {
      if (i == nv) {
        if (rest == 0) {
          Monomial m(exps);
          if (kind_ == Kind::E510 && comp == kFormComp) {
            int ndx = 0;
            for (std::size_t j = coords_->size(); j < nv; ++j) ndx += m[j];
            if (ndx != 2) return;
          }
          out.push_back(intern(comp, m));
        }
        return;
      }
      for (int e = 0;; ++e) {
        if (cap[i] >= 0 && e > cap[i]) break;
        Rational r = rest - vw[i] * e;
        if (vw[i] > 0 && r < minrest[i + 1]) break;
        exps[i] = static_cast<std::uint16_t>(e);
        rec(i + 1, r);
      }
      exps[i] = 0;
    };
    rec(0, target);
  }
  return out;
}

Element jacobi_residual(const Realization& r, const Element& a, const Element& b, const Element& c) {
  auto pa = r.parity(a), pb = r.parity(b);
  if (!pa || !pb) throw Error("jacobi_residual needs homogeneous inputs");
  Element lhs = r.bracket(a, r.bracket(b, c));
  Element rhs = r.add(r.bracket(r.bracket(a, b), c), r.scale(r.bracket(b, r.bracket(a, c)), sign_of(*pa, *pb)));
  return r.add(lhs, r.scale(rhs, -1));
}

}  // namespace vsa
