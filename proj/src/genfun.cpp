#include "vsa/genfun.hpp"

namespace vsa {

namespace {

std::string idx(const std::string& base, std::size_t i, int first) {
  return base + std::to_string(static_cast<int>(i) + first);
}

void add_odd_part(std::vector<Indeterminate>& vars, std::size_t m, ContactRealization::Variant v, int first) {
  using V = ContactRealization::Variant;
  if (v == V::Theta) {
    for (std::size_t j = 0; j < m; ++j) vars.push_back({idx("th", j, first), Parity::Odd});
    return;
  }
  if (v == V::XiEta && m % 2) throw Error("xi/eta pairing needs an even number of odd coordinates");
  if (v == V::XiEtaTheta && m % 2 == 0) throw Error("xi/eta/theta pairing needs an odd number of odd coordinates");
  std::size_t r = m / 2;
  for (std::size_t j = 0; j < r; ++j) vars.push_back({idx("xi", j, first), Parity::Odd});
  for (std::size_t j = 0; j < r; ++j) vars.push_back({idx("eta", j, first), Parity::Odd});
  if (v == V::XiEtaTheta) vars.push_back({"theta", Parity::Odd});
}

void bind_odd_part(ContactRealization& c, std::size_t start, std::size_t m) {
  using V = ContactRealization::Variant;
  if (c.variant == V::Theta) {
    for (std::size_t j = 0; j < m; ++j) c.theta.push_back(start + j);
    return;
  }
  std::size_t r = m / 2;
  for (std::size_t j = 0; j < r; ++j) c.xieta.emplace_back(start + j, start + r + j);
  if (c.variant == V::XiEtaTheta) c.theta.push_back(start + 2 * r);
}

ContactRealization symplectic(bool with_t, std::size_t n, std::size_t m, ContactRealization::Variant v, int first) {
  ContactRealization c;
  c.kind = with_t ? ContactRealization::Kind::K : ContactRealization::Kind::H;
  c.variant = v;
  std::vector<Indeterminate> vars;
  if (with_t) vars.push_back({"t", Parity::Even});
  for (std::size_t i = 0; i < n; ++i) vars.push_back({idx("p", i, first), Parity::Even});
  for (std::size_t i = 0; i < n; ++i) vars.push_back({idx("q", i, first), Parity::Even});
  add_odd_part(vars, m, v, first);
  c.ring = make_ring(std::move(vars));
  std::size_t off = with_t ? 1 : 0;
  if (with_t) c.t = 0;
  for (std::size_t i = 0; i < n; ++i) c.pairs.emplace_back(off + i, off + n + i);
  bind_odd_part(c, off + 2 * n, m);
  return c;
}

ContactRealization periplectic(bool with_tau, std::size_t n, int first) {
  ContactRealization c;
  c.kind = with_tau ? ContactRealization::Kind::M : ContactRealization::Kind::Le;
  std::vector<Indeterminate> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back({idx("q", i, first), Parity::Even});
  for (std::size_t i = 0; i < n; ++i) vars.push_back({idx("xi", i, first), Parity::Odd});
  if (with_tau) vars.push_back({"tau", Parity::Odd});
  c.ring = make_ring(std::move(vars));
  for (std::size_t i = 0; i < n; ++i) c.pairs.emplace_back(i, n + i);
  if (with_tau) c.t = 2 * n;
  return c;
}

void require_kind(const ContactRealization& r, std::initializer_list<ContactRealization::Kind> kinds, const char* what) {
  for (auto k : kinds)
    if (r.kind == k) return;
  throw Error(std::string(what) + " is not defined for realization kind " + to_string(r.kind));
}

void require_ring(const SuperPoly& f, const ContactRealization& r) {
  if (f.ring() && !same_ring(f.ring(), r.ring)) throw Error("generating function over a different ring");
}

/// Applies a map defined on homogeneous input to each parity part.
template <class Fn>
auto by_parity(const SuperPoly& f, Fn fn) {
  if (auto p = f.parity()) return fn(f, *p);
  auto [e, o] = f.split_parity();
  auto a = fn(e, Parity::Even);
  a += fn(o, Parity::Odd);
  return a;
}

SuperPoly times(const SuperPoly& a, const SuperPoly& b) { return a * b; }

}  // namespace

const char* to_string(ContactRealization::Kind k) {
  switch (k) {
    case ContactRealization::Kind::K: return "k";
    case ContactRealization::Kind::M: return "m";
    case ContactRealization::Kind::H: return "h";
    case ContactRealization::Kind::Le: return "le";
  }
  return "?";
}

std::vector<std::size_t> ContactRealization::euler_excluded() const {
  if (t) return {*t};
  return {};
}

VectorField ContactRealization::euler() const { return vsa::euler(ring, euler_excluded()); }

ContactRealization ContactRealization::k(std::size_t n, std::size_t m, Variant v, int first) {
  return symplectic(true, n, m, v, first);
}
ContactRealization ContactRealization::h(std::size_t n, std::size_t m, Variant v, int first) {
  return symplectic(false, n, m, v, first);
}
ContactRealization ContactRealization::m_series(std::size_t n, int first) { return periplectic(true, n, first); }
ContactRealization ContactRealization::le(std::size_t n, int first) { return periplectic(false, n, first); }

SuperPoly two_minus_euler(const SuperPoly& f, const ContactRealization& r) {
  return f * Rational(2) - apply(r.euler(), f);
}

namespace {

VectorField hamilton_unchecked(const SuperPoly& f, const ContactRealization& r) {
  return by_parity(f, [&](const SuperPoly& g, Parity p) {
    VectorField H(r.ring);
    for (auto [pi, qi] : r.pairs) {
      H.set_component(qi, H.component(qi) + partial(g, pi));
      H.set_component(pi, H.component(pi) - partial(g, qi));
    }
    const Rational s = is_odd(p) ? 1 : -1;  // -(-1)^{p(f)}
    for (auto [xi, eta] : r.xieta) {
      H.set_component(eta, H.component(eta) + s * partial(g, xi));
      H.set_component(xi, H.component(xi) + s * partial(g, eta));
    }
    for (auto th : r.theta) H.set_component(th, H.component(th) + s * partial(g, th));
    return H;
  });
}

VectorField le_unchecked(const SuperPoly& f, const ContactRealization& r) {
  return by_parity(f, [&](const SuperPoly& g, Parity p) {
    VectorField L(r.ring);
    const Rational s = is_odd(p) ? -1 : 1;
    for (auto [q, xi] : r.pairs) {
      L.set_component(xi, L.component(xi) + partial(g, q));
      L.set_component(q, L.component(q) + s * partial(g, xi));
    }
    return L;
  });
}

}  // namespace

VectorField hamilton_field(const SuperPoly& f, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::K, ContactRealization::Kind::H}, "H_f");
  require_ring(f, r);
  if (r.t && !partial(f, *r.t).is_zero()) throw Error("H_f needs a generating function without t");
  return hamilton_unchecked(f, r);
}

VectorField contact_field(const SuperPoly& f, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::K}, "K_f");
  require_ring(f, r);
  VectorField K = VectorField::basis(r.ring, *r.t, two_minus_euler(f, r));
  K -= hamilton_unchecked(f, r);
  K += multiply(partial(f, *r.t), r.euler());
  return K;
}

VectorField le_field(const SuperPoly& f, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::M, ContactRealization::Kind::Le}, "Le_f");
  require_ring(f, r);
  if (r.t && !partial(f, *r.t).is_zero()) throw Error("Le_f needs a generating function without tau");
  return le_unchecked(f, r);
}

VectorField pericontact_field(const SuperPoly& f, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::M}, "M_f");
  require_ring(f, r);
  return by_parity(f, [&](const SuperPoly& g, Parity p) {
    VectorField M = VectorField::basis(r.ring, *r.t, two_minus_euler(g, r));
    M -= le_unchecked(g, r);
    VectorField e = multiply(partial(g, *r.t), r.euler());
    if (is_odd(p)) M += e;
    else M -= e;
    return M;
  });
}

VectorField field_of(const SuperPoly& f, const ContactRealization& r) {
  switch (r.kind) {
    case ContactRealization::Kind::K: return contact_field(f, r);
    case ContactRealization::Kind::M: return pericontact_field(f, r);
    case ContactRealization::Kind::H: return hamilton_field(f, r);
    case ContactRealization::Kind::Le: return le_field(f, r);
  }
  throw Error("unknown realization kind");
}

SuperPoly poisson(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::K, ContactRealization::Kind::H}, "Poisson bracket");
  require_ring(f, r);
  require_ring(g, r);
  return by_parity(f, [&](const SuperPoly& a, Parity p) {
    SuperPoly out(r.ring);
    for (auto [pi, qi] : r.pairs) {
      out += partial(a, pi) * partial(g, qi);
      out -= partial(a, qi) * partial(g, pi);
    }
    SuperPoly odd(r.ring);
    for (auto [xi, eta] : r.xieta) {
      odd += partial(a, xi) * partial(g, eta);
      odd += partial(a, eta) * partial(g, xi);
    }
    for (auto th : r.theta) odd += partial(a, th) * partial(g, th);
    if (is_odd(p)) out += odd;
    else out -= odd;
    return out;
  });
}

SuperPoly buttin(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::M, ContactRealization::Kind::Le}, "Buttin bracket");
  require_ring(f, r);
  require_ring(g, r);
  return by_parity(f, [&](const SuperPoly& a, Parity p) {
    SuperPoly out(r.ring);
    for (auto [q, xi] : r.pairs) {
      out += partial(a, q) * partial(g, xi);
      SuperPoly s = partial(a, xi) * partial(g, q);
      if (is_odd(p)) out -= s;
      else out += s;
    }
    return out;
  });
}

SuperPoly kb(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::K}, "contact bracket");
  SuperPoly out = times(two_minus_euler(f, r), partial(g, *r.t));
  out -= times(partial(f, *r.t), two_minus_euler(g, r));
  out -= poisson(f, g, r);
  return out;
}

SuperPoly mb(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::M}, "pericontact bracket");
  return by_parity(f, [&](const SuperPoly& a, Parity p) {
    SuperPoly out = times(two_minus_euler(a, r), partial(g, *r.t));
    SuperPoly s = times(partial(a, *r.t), two_minus_euler(g, r));
    if (is_odd(p)) out -= s;
    else out += s;
    out -= buttin(a, g, r);
    return out;
  });
}

SuperPoly function_bracket(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r) {
  switch (r.kind) {
    case ContactRealization::Kind::K: return kb(f, g, r);
    case ContactRealization::Kind::M: return mb(f, g, r);
    case ContactRealization::Kind::H: return poisson(f, g, r);
    case ContactRealization::Kind::Le: return buttin(f, g, r);
  }
  throw Error("unknown realization kind");
}

SuperPoly odd_laplacian(const SuperPoly& f, const ContactRealization& r) {
  require_kind(r, {ContactRealization::Kind::M, ContactRealization::Kind::Le}, "odd Laplacian");
  SuperPoly out(r.ring);
  for (auto [q, xi] : r.pairs) out += partial(partial(f, xi), q);
  return out;
}

bool is_member(const SuperPoly& f, const ContactRealization& r, const SubalgebraDescriptor& S) {
  if (S.kind != SubalgebraDescriptor::Kind::Bab) return is_member(field_of(f, r), S);
  require_kind(r, {ContactRealization::Kind::M}, "b_{a,b}");
  auto p = f.parity();
  if (!p) throw Error("b_{a,b} membership needs a homogeneous generating function");
  SuperPoly lhs = divergence(pericontact_field(f, r)) * S.a;
  Rational c = Rational(2) * (S.a - S.b * Rational(static_cast<long>(r.n())));
  if (is_odd(*p)) c = -c;
  return lhs == partial(f, *r.t) * c;
}

}  // namespace vsa
