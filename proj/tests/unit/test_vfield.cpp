#include "doctest.h"
#include "random_util.hpp"
#include "vsa/vfield.hpp"

using namespace vsa;
using vsa::testing::random_field;
using vsa::testing::random_parity;
using vsa::testing::random_poly;

namespace {
RingPtr ring2() { return make_ring({"u", "v"}, {"xi", "eta"}); }
}  // namespace

TEST_CASE("apply follows the Leibniz rule") {
  auto R = ring2();
  CHECK(apply(parse_field(R, "u*d/du"), parse_poly(R, "u^2")) == parse_poly(R, "2*u^2"));
  CHECK(apply(parse_field(R, "xi*d/du"), parse_poly(R, "u*xi")).is_zero());
  auto R3 = make_ring({}, {"xi1", "xi2"});
  CHECK(apply(parse_field(R3, "d/dxi1"), parse_poly(R3, "xi1*xi2")) == parse_poly(R3, "xi2"));
}

TEST_CASE("small brackets") {
  auto R = ring2();
  CHECK(bracket(parse_field(R, "d/du"), parse_field(R, "u*d/du")) == parse_field(R, "d/du"));
  CHECK(bracket(parse_field(R, "d/dxi"), parse_field(R, "xi*d/du")) == parse_field(R, "d/du"));
  auto D = parse_field(R, "u*v*d/du + xi*eta*d/dv");
  CHECK(bracket(D, D).is_zero());
  // odd fields need not square to zero
  auto Q = parse_field(R, "d/dxi + xi*d/du");
  CHECK(bracket(Q, Q) == parse_field(R, "2*d/du"));
}

TEST_CASE("divergence") {
  auto R = ring2();
  CHECK(divergence(parse_field(R, "u*d/du")) == SuperPoly::constant(R, 1));
  CHECK(divergence(parse_field(R, "xi*d/dxi")) == SuperPoly::constant(R, -1));
  CHECK(divergence(parse_field(R, "xi*eta*d/du")).is_zero());
}

TEST_CASE("euler operator") {
  auto R = make_ring({"u"}, {"xi"});
  CHECK(euler(R) == parse_field(R, "u*d/du + xi*d/dxi"));
  CHECK(apply(euler(R), parse_poly(R, "u^2")) == parse_poly(R, "2*u^2"));
  CHECK(apply(euler(R), SuperPoly::constant(R, 1)).is_zero());
  CHECK(euler(R, {0}) == parse_field(R, "xi*d/dxi"));
}

TEST_CASE("membership") {
  auto R = make_ring({"u", "v"}, {});
  CHECK(is_member(parse_field(R, "u*d/du - v*d/dv"), SubalgebraDescriptor::svect()));
  CHECK_FALSE(is_member(parse_field(R, "u*d/du"), SubalgebraDescriptor::svect()));
  auto S = make_ring({"u"}, {"th1", "th2"});
  auto D = parse_field(S, "d/du");
  CHECK(is_member(D, SubalgebraDescriptor::svect_deformed(3)));
  CHECK_FALSE(is_member(parse_field(S, "u*d/du"), SubalgebraDescriptor::svect_deformed(3)));
}

TEST_CASE("field parser") {
  auto R = make_ring({"x1", "x2"}, {"xi1", "xi2"});
  auto D = parse_field(R, "x1*d/dx2 - xi1*d/dxi2");
  CHECK(D.component(1) == parse_poly(R, "x1"));
  CHECK(D.component(3) == parse_poly(R, "-xi1"));
  CHECK(parse_field(R, D.to_string()) == D);
  CHECK(parse_field(R, "x1*(d/dx1 + d/dx2)") == parse_field(R, "x1*d/dx1 + x1*d/dx2"));
  CHECK_THROWS_AS(parse_field(R, "x1 + d/dx1"), Error);
  CHECK_THROWS_AS(parse_field(R, "d/dq"), Error);
}

TEST_CASE("super Jacobi on random homogeneous triples") {
  auto R = ring2();
  for (int k = 0; k < 200; ++k) {
    Parity pa = random_parity(), pb = random_parity(), pc = random_parity();
    auto A = random_field(R, 2, 2, pa);
    auto B = random_field(R, 2, 2, pb);
    auto C = random_field(R, 2, 2, pc);
    auto lhs = bracket(A, bracket(B, C));
    auto rhs = bracket(bracket(A, B), C) + Rational(sign_of(pa, pb)) * bracket(B, bracket(A, C));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bracket agrees with operator commutator and divergence closure") {
  auto R = ring2();
  for (int k = 0; k < 100; ++k) {
    Parity pa = random_parity(), pb = random_parity();
    auto A = random_field(R, 2, 2, pa);
    auto B = random_field(R, 2, 2, pb);
    auto f = random_poly(R, 4, 2);
    Rational s = sign_of(pa, pb);
    CHECK(apply(bracket(A, B), f) == apply(A, apply(B, f)) - s * apply(B, apply(A, f)));
    CHECK(divergence(bracket(A, B)) == apply(A, divergence(B)) - s * apply(B, divergence(A)));
  }
}
