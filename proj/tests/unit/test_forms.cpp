#include "doctest.h"
#include "random_util.hpp"
#include "vsa/forms.hpp"

using namespace vsa;
using vsa::testing::random_field;
using vsa::testing::random_parity;
using vsa::testing::random_poly;
using vsa::testing::random_closed_2form;
using vsa::testing::random_div_free;
using vsa::testing::uniform;

namespace {

FormSpacePtr five() { return e510_space(); }

DiffForm random_form(const FormSpacePtr& s, int terms, int max_exp) {
  return DiffForm(s, random_poly(s->doubled(), terms, max_exp));
}

}  // namespace

TEST_CASE("wedge of differentials") {
  auto s = five();
  auto dx1 = DiffForm::differential(s, 0), dx2 = DiffForm::differential(s, 1);
  CHECK(wedge(dx1, dx2) == parse_form(s, "dx1^dx2"));
  CHECK(wedge(dx2, dx1) == -parse_form(s, "dx1^dx2"));
  CHECK(wedge(dx1, dx1).is_zero());
  auto Z = parse_form(s, "x5*dx4^dx5");
  CHECK(wedge(Z, Z).is_zero());
}

TEST_CASE("exterior derivative") {
  auto s = five();
  CHECK(ext_d(parse_form(s, "x4*x5*dx5")) == parse_form(s, "x5*dx4^dx5"));
  CHECK(ext_d(parse_form(s, "dx1")).is_zero());
  CHECK(ext_d(parse_form(s, "x1")) == parse_form(s, "dx1"));
  CHECK(parse_form(s, "x1^2*dx2") == parse_form(s, "x1*x1*dx2"));
}

TEST_CASE("Lie derivative") {
  auto s = five();
  auto R = s->base();
  CHECK(lie_derivative(parse_field(R, "d/dx1"), parse_form(s, "x1*dx2")) == parse_form(s, "dx2"));
  CHECK(lie_derivative(parse_field(R, "x1*d/dx1"), parse_form(s, "dx1")) == parse_form(s, "dx1"));
  for (int k = 0; k < 50; ++k) {
    auto D = random_field(R, 2, 2, Parity::Even);
    auto w = random_form(s, 4, 2);
    CHECK(lie_derivative(D, ext_d(w)) == ext_d(lie_derivative(D, w)));
    // Cartan: L_D = i_D d + d i_D for even D
    CHECK(lie_derivative(D, w) == interior(D, ext_d(w)) + ext_d(interior(D, w)));
  }
}

TEST_CASE("d squares to zero and L is a representation") {
  auto s = make_form_space(make_ring({"u", "v"}, {"xi", "eta"}));
  for (int k = 0; k < 100; ++k) {
    auto w = random_form(s, 5, 2);
    CHECK(ext_d(ext_d(w)).is_zero());
    Parity pa = random_parity(), pb = random_parity();
    auto A = random_field(s->base(), 2, 2, pa);
    auto B = random_field(s->base(), 2, 2, pb);
    Rational sg = sign_of(pa, pb);
    auto lhs = lie_derivative(bracket(A, B), w);
    auto rhs = lie_derivative(A, lie_derivative(B, w)) - sg * lie_derivative(B, lie_derivative(A, w));
    CHECK(lhs == rhs);
    Rational sd = is_odd(pa) ? -1 : 1;
    CHECK(lie_derivative(A, ext_d(w)) == sd * ext_d(lie_derivative(A, w)));
  }
}

TEST_CASE("volume identification") {
  auto s = five();
  auto R = s->base();
  CHECK(vol_identify(parse_form(s, "dx1^dx2^dx3^dx4")) == parse_field(R, "d/dx5"));
  CHECK(vol_identify(parse_form(s, "dx2^dx1^dx3^dx4")) == parse_field(R, "-d/dx5"));
  CHECK(vol_identify(parse_form(s, "x1*dx1^dx2^dx3^dx5")) == parse_field(R, "-x1*d/dx4"));
  CHECK_THROWS_AS(vol_identify(parse_form(s, "dx1^dx2")), Error);
}

TEST_CASE("exactness certificates") {
  auto s = five();
  auto w = parse_form(s, "x5*dx4^dx5");
  auto pre = exact_preimage(w);
  REQUIRE(pre.has_value());
  CHECK(ext_d(*pre) == w);
  CHECK_FALSE(exact_preimage(parse_form(s, "x1*dx2^dx3")).has_value());
  for (int k = 0; k < 30; ++k) {
    auto c = random_closed_2form(3);
    auto p = exact_preimage(c);
    REQUIRE(p.has_value());
    CHECK(ext_d(*p) == c);
  }
}

TEST_CASE("e(5|10) brackets") {
  auto Z = parse_e510("x5*dx4^dx5");
  CHECK(e510_bracket(Z, Z).is_zero());
  CHECK(e510_bracket(parse_e510("x1*d/dx2"), parse_e510("dx2^dx3")) == parse_e510("dx1^dx3"));
  CHECK(e510_bracket(parse_e510("dx1^dx2"), parse_e510("dx3^dx4")) == parse_e510("d/dx5"));
  CHECK(e510_valid(Z));
  CHECK_FALSE(e510_valid(parse_e510("x1*d/dx1")));
}

TEST_CASE("e(5|10) super Jacobi and odd symmetry") {
  auto s = five();
  auto rnd = [&](Parity p) {
    E510Element e = e510_zero();
    if (is_odd(p)) e.odd = random_closed_2form(2);
    else e.even = random_div_free(2);
    return e;
  };
  for (int k = 0; k < 200; ++k) {
    Parity pa = random_parity(), pb = random_parity(), pc = random_parity();
    auto A = rnd(pa), B = rnd(pb), C = rnd(pc);
    auto lhs = e510_bracket(A, e510_bracket(B, C));
    auto rhs = e510_bracket(e510_bracket(A, B), C) + e510_bracket(B, e510_bracket(A, C)) * Rational(sign_of(pa, pb));
    CHECK(lhs == rhs);
    if (is_odd(pa) && is_odd(pb)) CHECK(e510_bracket(A, B) == e510_bracket(B, A));
    CHECK(e510_valid(e510_bracket(A, B)));
  }
}

TEST_CASE("contact forms are preserved up to a factor") {
  using V = ContactRealization::Variant;
  for (auto r : {ContactRealization::k(1, 2, V::Theta), ContactRealization::k(1, 2, V::XiEta),
                 ContactRealization::k(0, 6, V::XiEta), ContactRealization::k(1, 3, V::XiEtaTheta)}) {
    auto s = make_form_space(r.ring);
    auto alpha = contact_form(s, r);
    for (int k = 0; k < 25; ++k) {
      auto f = random_poly(r.ring, 3, 2, random_parity());
      auto factor = DiffForm::function(s, partial(f, *r.t) * Rational(2));
      CHECK(lie_derivative(contact_field(f, r), alpha) == wedge(factor, alpha));
    }
  }
}

TEST_CASE("pericontact form is preserved up to a factor") {
  auto r = ContactRealization::m_series(3);
  auto s = make_form_space(r.ring);
  auto alpha = contact_form(s, r);
  for (int k = 0; k < 40; ++k) {
    Parity p = random_parity();
    auto f = random_poly(r.ring, 3, 2, p);
    auto factor = DiffForm::function(s, partial(f, *r.t) * Rational(is_odd(p) ? 2 : -2));
    CHECK(lie_derivative(pericontact_field(f, r), alpha) == wedge(factor, alpha));
  }
}

TEST_CASE("printed contact form signs") {
  auto r = ContactRealization::k(1, 0, ContactRealization::Variant::Theta);
  auto s = make_form_space(r.ring);
  CHECK(contact_form(s, r, true) == parse_form(s, "dt + p1*dq1 - q1*dp1"));
  CHECK(contact_form(s, r) == parse_form(s, "dt - p1*dq1 + q1*dp1"));
  // the printed form is not preserved by the printed K_p1
  auto K = contact_field(parse_poly(r.ring, "p1"), r);
  CHECK(lie_derivative(K, contact_form(s, r, true)) == parse_form(s, "2*dp1"));
}
