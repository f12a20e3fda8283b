#include <doctest.h>

#include <algorithm>

#include "random_util.hpp"
#include "vsa/homology.hpp"

using namespace vsa;
using V = ContactRealization::Variant;

namespace {

RealizationPtr k3() { return Realization::functions(ContactRealization::k(1, 0, V::Theta)); }

std::vector<Rational> ws(std::initializer_list<int> l) {
  std::vector<Rational> v;
  for (int x : l) v.emplace_back(x);
  return v;
}

const HomologyDegree& at(const std::vector<HomologyDegree>& h, int d) {
  for (const auto& x : h)
    if (x.degree == d) return x;
  throw Error("degree not reported");
}

}  // namespace

TEST_CASE("linear algebra: echelon coordinates and nullspace") {
  Echelon e;
  CHECK(e.insert({{0, 1}, {1, 2}}));
  CHECK(e.insert({{1, 1}, {2, 1}}));
  CHECK_FALSE(e.insert({{0, 1}, {1, 3}, {2, 1}}));
  auto c = e.coordinates({{0, 2}, {1, 7}, {2, 3}});
  REQUIRE(c);
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 7);
  CHECK_FALSE(e.coordinates({{2, 1}}));
  // columns (1,0), (0,1), (1,1): kernel spanned by (1,1,-1)
  auto ns = nullspace({{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}});
  REQUIRE(ns.size() == 1);
  CHECK(entry(ns[0], 0) == -entry(ns[0], 2));
  CHECK(entry(ns[0], 1) == -entry(ns[0], 2));
}

TEST_CASE("modular rank agrees with exact rank") {
  for (int t = 0; t < 30; ++t) {
    std::vector<SparseVec> rows;
    int n = vsa::testing::uniform(1, 8);
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<Key, Rational>> r;
      for (Key k = 0; k < 6; ++k)
        if (vsa::testing::uniform(0, 2) == 0) r.emplace_back(k, Rational(vsa::testing::uniform(-3, 3), vsa::testing::uniform(1, 3)));
      for (auto& [k, v] : r) v.canonicalize();
      rows.push_back(normalize_entries(r));
    }
    if (n > 2) {
      SparseVec dep = rows[0];
      add_scaled(dep, Rational(5, 7), rows[1]);
      rows.push_back(dep);
    }
    CHECK(rank_certified(rows) == rank_exact(rows));
  }
}

TEST_CASE("key weights and degrees") {
  auto r = k3();
  auto w = ws({2, 1, 1});
  CHECK(*degree_of(*r, r->parse("t"), w) == 0);
  CHECK(*degree_of(*r, r->parse("1"), w) == -2);
  CHECK(*degree_of(*r, r->parse("p1^2*q1 + t*p1"), w) == 1);
  CHECK_FALSE(degree_of(*r, r->parse("p1 + t"), w));
  auto v = Realization::vect(make_ring({"x1", "x2"}, {"x3"}));
  CHECK(*degree_of(*v, v->parse("x1*d/dx2"), ws({1, 1, 1})) == 0);
  CHECK(*degree_of(*v, v->parse("d/dx3"), ws({1, 1, 1})) == -1);
  auto e = Realization::e510();
  CHECK(*degree_of(*e, e->parse("x5*dx4^dx5"), ws({2, 2, 2, 2, 2})) == 1);
  CHECK(*degree_of(*e, e->parse("dx1^dx2"), ws({2, 2, 2, 2, 2})) == -1);
  CHECK(*degree_of(*e, e->parse("d/dx1"), ws({2, 2, 2, 2, 2})) == -2);
}

TEST_CASE("degree is additive under brackets") {
  auto r = k3();
  auto w = ws({2, 1, 1});
  for (int k = 0; k < 40; ++k) {
    auto keys = r->keys_of_degree(w, vsa::testing::uniform(-2, 2));
    auto keys2 = r->keys_of_degree(w, vsa::testing::uniform(-2, 2));
    auto a = r->key_element(keys[vsa::testing::uniform(0, static_cast<int>(keys.size()) - 1)]);
    auto b = r->key_element(keys2[vsa::testing::uniform(0, static_cast<int>(keys2.size()) - 1)]);
    auto c = r->bracket(a, b);
    if (r->is_zero(c)) continue;
    CHECK(*degree_of(*r, c, w) == *degree_of(*r, a, w) + *degree_of(*r, b, w));
  }
}

TEST_CASE("weighted monomial enumeration") {
  auto r = k3();
  // degree 1 functions: weighted degree 3
  CHECK(r->keys_of_degree(ws({2, 1, 1}), 1).size() == 6);
  auto v = Realization::vect(make_ring({"u"}, {}));
  CHECK(v->keys_of_degree(ws({1}), 1).size() == 1);
  auto v2 = Realization::vect(make_ring({"u1", "u2"}, {}));
  CHECK(v2->keys_of_degree(ws({1, 1}), 1).size() == 6);
  CHECK_THROWS_AS(v2->keys_of_degree(ws({1, 0}), 1), Error);
  CHECK(v2->keys_of_degree(ws({1, 0}), 1, {-1, 2}).size() == 2 * 3);
}

TEST_CASE("compatible torus of a k(3) generating set") {
  auto r = k3();
  auto t = compatible_torus(*r, {r->parse("p1"), r->parse("q1")});
  CHECK(t.size() == 2);
}

TEST_CASE("generated algebra: the Heisenberg algebra") {
  auto r = k3();
  auto g = GradedAlgebra::generate(r, {r->parse("p1"), r->parse("q1")}, ws({2, 1, 1}), -6, -1);
  auto d = g.dims();
  CHECK(d[-1] == Superdim{2, 0});
  CHECK(d[-2] == Superdim{1, 0});
  CHECK(d[-3] == Superdim{0, 0});
}

TEST_CASE("homology of the Heisenberg algebra") {
  auto r = k3();
  auto g = GradedAlgebra::generate(r, {r->parse("p1"), r->parse("q1")}, ws({2, 1, 1}), -6, -1);
  auto h = homology(g, {-6, -1, true});
  CHECK(at(h, -1).h1 == 2);
  CHECK(at(h, -2).h1 == 0);
  CHECK(at(h, -3).h2 == 2);
  std::size_t total = 0;
  for (const auto& x : h) total += x.h2;
  CHECK(total == 2);
  CHECK(at(h, -3).representatives.size() == 2);
}

TEST_CASE("d1 and d2 on small chains") {
  auto r = k3();
  auto g = GradedAlgebra::generate(r, {r->parse("p1"), r->parse("q1")}, ws({2, 1, 1}), -6, -1);
  auto p = *g.coordinates(r->parse("p1"));
  auto q = *g.coordinates(r->parse("q1"));
  REQUIRE(p.size() == 1);
  REQUIRE(q.size() == 1);
  std::size_t ip = p[0].first, iq = q[0].first;
  std::size_t iz = g.indices_of_degree(-2).at(0);
  Chain2 c;
  add_wedge(c, g, ip, iq, 1);
  auto b = d1(g, c);
  REQUIRE(b.size() == 1);
  CHECK(b.begin()->first == iz);
  Chain3 t;
  std::array<std::size_t, 3> idx{ip, iq, iz};
  std::sort(idx.begin(), idx.end());
  t[idx] = 1;
  CHECK(d2(g, t).empty());
}

TEST_CASE("abelian algebra: one relation") {
  auto r = Realization::vect(make_ring({"x1", "x2"}, {}));
  auto g = GradedAlgebra::generate(r, {r->parse("d/dx1"), r->parse("d/dx2")}, ws({1, 1}), -4, -1);
  auto h = homology(g, {-4, -1});
  CHECK(at(h, -1).h1 == 2);
  CHECK(at(h, -2).h2 == 1);
}

TEST_CASE("odd symmetric squares") {
  // d/dth is odd with [d/dth, d/dth] = 0, so th^th is a cycle
  auto r = Realization::vect(make_ring({"x"}, {"th"}));
  auto g = GradedAlgebra::generate(r, {r->parse("d/dth")}, ws({1, 1}), -4, -1);
  auto h = homology(g, {-4, -1});
  CHECK(at(h, -1).h1 == 1);
  CHECK(at(h, -2).h2 == 1);
  CHECK(at(h, -3).h2 == 0);
  // d/dth + th d/dx squares to 2 d/dx
  auto g2 = GradedAlgebra::generate(r, {r->parse("d/dth + th*d/dx")}, ws({2, 1}), -4, -1);
  CHECK(g2.dims()[-2] == Superdim{1, 0});
  auto h2 = homology(g2, {-4, -1});
  CHECK(at(h2, -2).h2 == 0);
  // [D,[D,D]] = 0 holds in the free algebra already
  CHECK(at(h2, -3).h2 == 0);
}

TEST_CASE("d1 d2 vanishes on random chains") {
  auto ring = make_ring({"x1", "x2"}, {"x3", "x4"});
  auto r = Realization::vect(ring);
  std::vector<Element> gens = {r->parse("d/dx3 + x4*d/dx1"), r->parse("d/dx4 + x3*d/dx2"), r->parse("d/dx1"),
                               r->parse("x3*d/dx1")};
  auto g = GradedAlgebra::generate(r, gens, ws({2, 2, 1, 1}), -6, 0);
  REQUIRE(g.dim() > 3);
  for (int k = 0; k < 100; ++k) {
    Chain3 c;
    for (int m = 0; m < 3; ++m) {
      std::array<std::size_t, 3> t;
      for (auto& x : t) x = static_cast<std::size_t>(vsa::testing::uniform(0, static_cast<int>(g.dim()) - 1));
      std::sort(t.begin(), t.end());
      bool ok = true;
      for (int s = 0; s < 2; ++s)
        if (t[s] == t[s + 1] && !is_odd(g.basis(t[s]).parity)) ok = false;
      int deg = g.basis(t[0]).degree + g.basis(t[1]).degree + g.basis(t[2]).degree;
      if (!ok || deg < -6) continue;
      c[t] += Rational(vsa::testing::uniform(-3, 3));
    }
    CHECK(d1(g, d2(g, c)).empty());
  }
}
