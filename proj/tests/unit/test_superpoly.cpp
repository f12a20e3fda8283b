#include "doctest.h"
#include "random_util.hpp"
#include "vsa/superpoly.hpp"

using namespace vsa;
using vsa::testing::random_poly;
using vsa::testing::random_parity;

namespace {
RingPtr ring_u_xi() { return make_ring({"u", "v"}, {"xi1", "xi2", "xi3"}); }
}  // namespace

TEST_CASE("odd factors anticommute") {
  auto R = ring_u_xi();
  auto x1 = SuperPoly::variable(R, "xi1");
  auto x2 = SuperPoly::variable(R, "xi2");
  CHECK((x1 * x2).to_string() == "xi1*xi2");
  CHECK(x2 * x1 == -(x1 * x2));
  CHECK((x1 * x1).is_zero());
}

TEST_CASE("product expansion with sign bookkeeping") {
  auto R = ring_u_xi();
  auto u = SuperPoly::variable(R, "u");
  auto q = SuperPoly::variable(R, "xi1") * SuperPoly::variable(R, "xi2");
  CHECK((u + q) * (u - q) == u * u);
}

TEST_CASE("left derivatives") {
  auto R = ring_u_xi();
  auto p = parse_poly(R, "xi1*xi2");
  CHECK(partial(p, "xi1") == parse_poly(R, "xi2"));
  CHECK(partial(p, "xi2") == parse_poly(R, "-xi1"));
  CHECK(partial(parse_poly(R, "u^2*xi1"), "u") == parse_poly(R, "2*u*xi1"));
}

TEST_CASE("linear combinations prune zeros") {
  auto R = ring_u_xi();
  auto p = parse_poly(R, "u*xi1 + 3");
  CHECK(linear_combine({1, -1}, {p, p}).is_zero());
  auto x = parse_poly(R, "xi1");
  CHECK(linear_combine({2, 3}, {x, x}) == parse_poly(R, "5*xi1"));
  CHECK(linear_combine({Rational(1, 2), 0}, {parse_poly(R, "2*u"), x}) == parse_poly(R, "u"));
}

TEST_CASE("parity detection") {
  auto R = ring_u_xi();
  CHECK(parity_of(parse_poly(R, "u*xi1*xi2")) == Parity::Even);
  CHECK(parity_of(parse_poly(R, "xi1")) == Parity::Odd);
  CHECK(!parity_of(parse_poly(R, "u + xi1")).has_value());
}

TEST_CASE("parser and printer round trip") {
  auto R = make_ring({"u1", "tau"}, {"xi1", "xi2"});
  auto p = parse_poly(R, "3/2*u1^2*xi1*xi2 - tau");
  CHECK(parse_poly(R, p.to_string()) == p);
  CHECK(parse_poly(R, "xi2*xi1") == parse_poly(R, "-xi1*xi2"));
  CHECK(parse_poly(R, "(u1 + tau)^2") == parse_poly(R, "u1^2 + 2*u1*tau + tau^2"));
  CHECK_THROWS_AS(parse_poly(R, "u1 + w"), Error);
  CHECK_THROWS_AS(parse_poly(R, "u1 +"), Error);
}

TEST_CASE("rings reject duplicate names and mixing") {
  CHECK_THROWS_AS(make_ring({"u", "u"}, {}), Error);
  auto A = make_ring({"u"}, {});
  auto B = make_ring({"v"}, {});
  CHECK_THROWS_AS(SuperPoly::variable(A, 0) * SuperPoly::variable(B, 0), Error);
}

TEST_CASE("supercommutativity on random homogeneous pairs") {
  auto R = ring_u_xi();
  for (int k = 0; k < 200; ++k) {
    Parity a = random_parity(), b = random_parity();
    auto p = random_poly(R, 4, 2, a);
    auto q = random_poly(R, 4, 2, b);
    CHECK(p * q == (q * p) * Rational(sign_of(a, b)));
  }
}

TEST_CASE("associativity and super Leibniz on random input") {
  auto R = ring_u_xi();
  for (int k = 0; k < 200; ++k) {
    Parity a = random_parity();
    auto p = random_poly(R, 4, 2, a);
    auto q = random_poly(R, 4, 2);
    auto r = random_poly(R, 3, 2);
    CHECK((p * q) * r == p * (q * r));
    for (std::size_t i = 0; i < R->size(); ++i) {
      Rational s = sign_of(R->parity(i), a);
      CHECK(partial(p * q, i) == partial(p, i) * q + s * (p * partial(q, i)));
    }
  }
}

TEST_CASE("odd second derivatives anticommute") {
  auto R = ring_u_xi();
  for (int k = 0; k < 50; ++k) {
    auto p = random_poly(R, 6, 2);
    CHECK(partial(partial(p, "xi1"), "xi2") == -partial(partial(p, "xi2"), "xi1"));
    CHECK(partial(partial(p, "u"), "xi3") == partial(partial(p, "xi3"), "u"));
  }
}

TEST_CASE("canonical form is independent of construction order") {
  auto R = ring_u_xi();
  auto a = parse_poly(R, "xi3*u*xi1 + v");
  auto b = parse_poly(R, "v - u*xi1*xi3");
  CHECK(a.terms() == b.terms());
}
