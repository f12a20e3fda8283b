#include "vsa/algebras.hpp"

namespace vsa {

SideWindow side_window(const AlgebraEntry& e, const std::string& side, int max_degree) {
  const auto& info = e.sides.at(side);
  if (side == "-") {
    if (info.depth > 0) return {-2 * info.depth, 0};
    return {-max_degree, 0};
  }
  return {0, max_degree};
}

GradedAlgebra side_algebra(const AlgebraEntry& e, RealizationPtr r, const std::string& side, int max_degree) {
  auto table = generator_table(e, r, side);
  auto w = grading_vector(e, *r, e.sides.at(side).grading);
  auto win = side_window(e, side, max_degree);
  return GradedAlgebra::generate(r, table.elements(), w, win.lo, win.hi);
}

std::optional<Chain2> relation_cycle(const GradedAlgebra& g, Evaluator& ev, const RelationRecord& rec) {
  const auto& R = ev.realization();
  auto terms = expand(BracketExpr::sum({parse_expr(rec.lhs), BracketExpr::scale(-1, parse_expr(rec.rhs))}));
  Element value = R.zero();
  for (const auto& t : terms) value = R.add(value, R.scale(ev.eval_word(t.word), t.coeff));
  if (!R.is_zero(value)) return std::nullopt;
  Chain2 out;
  for (const auto& t : terms) {
    if (t.word.kind != BracketExpr::Kind::Bracket)
      throw Error("relation at line " + std::to_string(rec.line) + " has a monomial that is not a bracket");
    auto u = g.coordinates(ev.eval_word(t.word.items[0]));
    auto v = g.coordinates(ev.eval_word(t.word.items[1]));
    if (!u || !v) return std::nullopt;
    for (const auto& [i, a] : *u)
      for (const auto& [j, b] : *v) add_wedge(out, g, i, j, t.coeff * a * b);
  }
  return out;
}

SideHomology side_homology(const AlgebraEntry& e, RealizationPtr r, const std::string& side, int max_degree,
                           bool representatives, const std::vector<RelationRecord>* relations) {
  SideHomology out;
  out.algebra = e.id;
  out.side = side;
  out.window = side_window(e, side, max_degree);
  auto g = side_algebra(e, r, side, max_degree);
  out.dims = g.dims();
  HomologyOptions opt;
  opt.lo = out.window.lo;
  opt.hi = out.window.hi;
  opt.representatives = representatives;
  if (relations) {
    Evaluator ev(generator_table(e, r, side));
    for (const auto& rec : *relations) {
      if (rec.side != side) continue;
      auto d = relation_counts(e, *r, {rec}, side).begin()->first;
      if (d < opt.lo || d > opt.hi) continue;
      if (auto c = relation_cycle(g, ev, rec)) {
        opt.cycles.push_back(std::move(*c));
        ++out.relation_cycles;
      } else {
        out.failing_lines.push_back(rec.line);
      }
    }
  }
  out.degrees = homology(g, opt);
  return out;
}

std::map<int, std::size_t> generator_counts(const AlgebraEntry& e, const Realization& r, const std::string& side) {
  std::map<int, std::size_t> out;
  for (const auto& [name, d] : generator_degrees(e, r, side)) ++out[d];
  return out;
}

std::map<int, std::size_t> relation_counts(const AlgebraEntry& e, const Realization& r,
                                           const std::vector<RelationRecord>& records, const std::string& side) {
  auto degrees = generator_degrees(e, r, side);
  std::map<int, std::size_t> out;
  for (const auto& rec : records) {
    if (rec.side != side) continue;
    auto terms = expand(parse_expr(rec.lhs));
    if (terms.empty()) terms = expand(parse_expr(rec.rhs));
    if (terms.empty()) throw Error("relation with both sides zero at line " + std::to_string(rec.line));
    int d = 0;
    for (const auto& [g, m] : occurrences(terms.front().word)) d += degrees.at(g) * m;
    ++out[d];
  }
  return out;
}

std::map<int, Superdim> negative_dims(const AlgebraEntry& e, RealizationPtr r) {
  std::vector<Element> gens;
  for (const auto& [side, info] : e.sides) {
    auto t = generator_table(e, r, side);
    for (auto& x : t.elements()) gens.push_back(std::move(x));
  }
  auto w = grading_vector(e, *r, e.dims_grading);
  int depth = 0;
  for (const auto& [side, info] : e.sides) depth = std::max(depth, info.depth);
  const int lo = -depth - 1;
  auto g = GradedAlgebra::generate(r, gens, w, lo, 1, GradedAlgebra::Closure::AllPairs);
  std::map<int, Superdim> out;
  for (const auto& [d, s] : g.dims())
    if (d < 0) out[d] = s;
  return out;
}

}  // namespace vsa
