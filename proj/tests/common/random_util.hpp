#pragma once

#include <random>

#include "vsa/forms.hpp"
#include "vsa/superpoly.hpp"
#include "vsa/supermat.hpp"
#include "vsa/vfield.hpp"

namespace vsa::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Monomial random_monomial(const Ring& ring, int max_even_exp) {
  Monomial m(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    m.set(i, static_cast<std::uint16_t>(is_odd(ring.parity(i)) ? uniform(0, 1) : uniform(0, max_even_exp)));
  return m;
}

/// Random polynomial; when `parity` is given only monomials of that parity are kept.
inline SuperPoly random_poly(const RingPtr& ring, int terms, int max_even_exp, std::optional<Parity> parity = {}) {
  SuperPoly p(ring);
  for (int k = 0; k < terms; ++k) {
    Monomial m = random_monomial(*ring, max_even_exp);
    if (parity && m.parity(*ring) != *parity) continue;
    Rational c(uniform(-5, 5), uniform(1, 3));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

inline Parity random_parity() { return uniform(0, 1) ? Parity::Odd : Parity::Even; }

inline VectorField random_field(const RingPtr& ring, int terms, int max_even_exp, Parity parity) {
  VectorField D(ring);
  for (std::size_t i = 0; i < ring->size(); ++i)
    D.set_component(i, random_poly(ring, terms, max_even_exp, parity + ring->parity(i)));
  return D;
}

inline Rational small_rational() {
  Rational c(uniform(-4, 4), uniform(1, 2));
  c.canonicalize();
  return c;
}

/// Random matrix of the given format; homogeneous when `p` is given.
inline SuperMatrix random_matrix(const Format& f, std::optional<Parity> p) {
  SuperMatrix m(f);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!p || f[i] + f[j] == *p) m(i, j) = small_rational();
  return m;
}

inline Mat4 random_skew() {
  Mat4 c(16, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      c[i * 4 + j] = small_rational();
      c[j * 4 + i] = -c[i * 4 + j];
    }
  return c;
}

inline Mat4 random_sym() {
  Mat4 b(16, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) b[i * 4 + j] = b[j * 4 + i] = small_rational();
  return b;
}

inline AsElement random_as(Parity p) {
  Mat4 zero(16, Rational(0));
  if (is_odd(p)) return AsElement::from_blocks(zero, random_sym(), random_skew(), 0);
  Mat4 a(16);
  for (auto& v : a) v = small_rational();
  a[15] = -(a[0] + a[5] + a[10]);
  return AsElement::from_blocks(a, zero, zero, small_rational());
}

/// Random closed 2-form on the five even coordinates of e(5|10), as d of a 1-form.
inline DiffForm random_closed_2form(int terms) {
  auto s = e510_space();
  DiffForm w = DiffForm::zero(s);
  for (int k = 0; k < terms; ++k) {
    auto f = random_poly(s->base(), 2, 2);
    w += wedge(DiffForm::function(s, f), DiffForm::differential(s, uniform(0, 4)));
  }
  return ext_d(w);
}

/// Random divergence-free field on five even coordinates.
inline VectorField random_div_free(int terms) {
  auto R = e510_space()->base();
  VectorField D(R);
  for (int k = 0; k < terms; ++k) {
    int i = uniform(0, 4), j = uniform(0, 4);
    if (i == j) continue;
    auto f = random_poly(R, 2, 2);
    // f_j d/dx_i - f_i d/dx_j is divergence-free
    D += VectorField::basis(R, i, partial(f, j)) - VectorField::basis(R, j, partial(f, i));
  }
  return D;
}

inline E510Element random_e510(Parity p) {
  E510Element e = e510_zero();
  if (is_odd(p)) e.odd = random_closed_2form(2);
  else e.even = random_div_free(2);
  return e;
}

}  // namespace vsa::testing
