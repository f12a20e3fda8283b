#include "doctest.h"
#include "random_util.hpp"
#include "vsa/genfun.hpp"

using namespace vsa;
using vsa::testing::random_parity;
using vsa::testing::random_poly;
using V = ContactRealization::Variant;

TEST_CASE("Hamiltonian fields") {
  auto h = ContactRealization::h(1, 0, V::Theta);
  CHECK(hamilton_field(parse_poly(h.ring, "q1"), h) == parse_field(h.ring, "-d/dp1"));
  CHECK(hamilton_field(SuperPoly::constant(h.ring, 1), h).is_zero());
  auto x = ContactRealization::h(0, 2, V::XiEta);
  // -(-1)^{p(f)} with p(f) odd gives +1
  CHECK(hamilton_field(parse_poly(x.ring, "xi1"), x) == parse_field(x.ring, "d/deta1"));
  auto k = ContactRealization::k(1, 0, V::Theta);
  CHECK_THROWS_AS(hamilton_field(parse_poly(k.ring, "t"), k), Error);
}

TEST_CASE("contact fields") {
  auto k = ContactRealization::k(0, 6, V::XiEta);
  CHECK(contact_field(SuperPoly::constant(k.ring, 1), k) == parse_field(k.ring, "2*d/dt"));
  auto K = contact_field(parse_poly(k.ring, "t"), k);
  CHECK(K == parse_field(k.ring, "2*t*d/dt") + k.euler());
  auto Kq = contact_field(parse_poly(k.ring, "xi1*eta1"), k);
  CHECK(Kq.component(0).is_zero());
  CHECK(!Kq.is_zero());
}

TEST_CASE("pericontact and periplectic fields") {
  auto m = ContactRealization::m_series(2);
  CHECK(pericontact_field(SuperPoly::constant(m.ring, 1), m) == parse_field(m.ring, "2*d/dtau"));
  CHECK(le_field(parse_poly(m.ring, "q1"), m) == parse_field(m.ring, "d/dxi1"));
  CHECK(le_field(parse_poly(m.ring, "xi1"), m) == parse_field(m.ring, "-d/dq1"));
  CHECK(le_field(SuperPoly::constant(m.ring, 1), m).is_zero());
  // M_xi1 = (2 - 1) xi1 d/dtau - Le_xi1
  CHECK(pericontact_field(parse_poly(m.ring, "xi1"), m) == parse_field(m.ring, "xi1*d/dtau + d/dq1"));
  auto Mt = pericontact_field(parse_poly(m.ring, "tau"), m);
  CHECK(Mt == parse_field(m.ring, "2*tau*d/dtau") + m.euler());
}

TEST_CASE("function brackets on small inputs") {
  auto h = ContactRealization::h(1, 0, V::Theta);
  CHECK(poisson(parse_poly(h.ring, "p1"), parse_poly(h.ring, "q1"), h) == SuperPoly::constant(h.ring, 1));
  auto le = ContactRealization::le(1);
  CHECK(buttin(parse_poly(le.ring, "q1"), parse_poly(le.ring, "xi1"), le) == SuperPoly::constant(le.ring, 1));
  auto k = ContactRealization::k(1, 0, V::Theta);
  auto t = parse_poly(k.ring, "t"), p = parse_poly(k.ring, "p1");
  CHECK(contact_field(kb(t, p, k), k) == bracket(contact_field(t, k), contact_field(p, k)));
}

TEST_CASE("odd Laplacian") {
  auto le = ContactRealization::le(2);
  CHECK(odd_laplacian(parse_poly(le.ring, "q1*xi1"), le) == SuperPoly::constant(le.ring, 1));
  CHECK(odd_laplacian(parse_poly(le.ring, "q1*q2"), le).is_zero());
  CHECK(odd_laplacian(parse_poly(le.ring, "q1*xi1*q2*xi2"), le) == parse_poly(le.ring, "q2*xi2 - q1*xi1"));
}

TEST_CASE("b_{a,b} membership") {
  auto m = ContactRealization::m_series(2);
  auto f = parse_poly(m.ring, "q1*xi2");
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) CHECK(is_member(f, m, SubalgebraDescriptor::b_ab(a, b)));
  auto g = parse_poly(m.ring, "q1*tau");
  CHECK_FALSE(is_member(g, m, SubalgebraDescriptor::b_ab(1, 0)));
  CHECK(is_member(g, m, SubalgebraDescriptor::b_ab(2, 1)));
}

namespace {

void check_functoriality(const ContactRealization& r, int cases, int max_exp) {
  for (int k = 0; k < cases; ++k) {
    auto f = random_poly(r.ring, 3, max_exp, random_parity());
    auto g = random_poly(r.ring, 3, max_exp, random_parity());
    CHECK(bracket(field_of(f, r), field_of(g, r)) == field_of(function_bracket(f, g, r), r));
  }
}

}  // namespace

TEST_CASE("functoriality of generating functions") {
  check_functoriality(ContactRealization::k(1, 2, V::Theta), 60, 2);
  check_functoriality(ContactRealization::k(1, 2, V::XiEta), 60, 2);
  check_functoriality(ContactRealization::k(0, 6, V::XiEta), 60, 1);
  check_functoriality(ContactRealization::k(1, 3, V::XiEtaTheta), 40, 2);
  check_functoriality(ContactRealization::m_series(2), 60, 2);
  check_functoriality(ContactRealization::h(1, 2, V::Theta), 40, 2);
  check_functoriality(ContactRealization::le(2), 40, 2);
}

TEST_CASE("divergence formulas") {
  for (auto r : {ContactRealization::k(1, 2, V::Theta), ContactRealization::k(0, 6, V::XiEta),
                 ContactRealization::k(2, 1, V::Theta)}) {
    auto one = SuperPoly::constant(r.ring, 1);
    Rational c = Rational(static_cast<long>(2 * r.n() + 2)) - Rational(static_cast<long>(r.m()));
    for (int k = 0; k < 40; ++k) {
      auto f = random_poly(r.ring, 3, 2, random_parity());
      CHECK(divergence(contact_field(f, r)) == partial(f, *r.t) * c);
    }
  }
  auto m = ContactRealization::m_series(3);
  for (int k = 0; k < 60; ++k) {
    Parity p = random_parity();
    auto f = random_poly(m.ring, 3, 2, p);
    Rational s = is_odd(p) ? -2 : 2;
    auto ft = partial(f, *m.t);
    auto expected = (ft - apply(m.euler(), ft) - odd_laplacian(f, m)) * s;
    CHECK(divergence(pericontact_field(f, m)) == expected);
    auto g = random_poly(m.ring, 3, 2, p);
    g = g - SuperPoly::variable(m.ring, *m.t) * partial(g, *m.t);
    CHECK(divergence(le_field(g, m)) == odd_laplacian(g, m) * s);
    CHECK(odd_laplacian(g, m).is_zero() == divergence(le_field(g, m)).is_zero());
  }
}
