#include "vsa/prolong.hpp"

#include <deque>

namespace vsa {

namespace {

Echelon echelon_of(const Realization& r, const std::vector<Element>& els) {
  Echelon e;
  for (const auto& x : els) e.insert(r.flatten(x));
  return e;
}

std::vector<Element> rows_as_elements(const Realization& r, const Echelon& e) {
  std::vector<Element> out;
  for (const auto& row : e.rows()) out.push_back(r.unflatten(row));
  return out;
}

const std::vector<Element>& component_of(const ProlongSpec& spec, const GradedBasis& previous, int d) {
  static const std::vector<Element> empty;
  if (auto it = previous.find(d); it != previous.end()) return it->second;
  if (d == 0) return spec.zero;
  if (auto it = spec.negative.find(d); it != spec.negative.end()) return it->second;
  return empty;
}

int depth_of(const ProlongSpec& spec) {
  int depth = 0;
  for (const auto& [d, els] : spec.negative)
    if (!els.empty()) depth = std::max(depth, -d);
  return depth;
}

}  // namespace

std::vector<Element> ambient_component(const ProlongSpec& spec, int k) {
  std::vector<Element> out;
  for (Key key : spec.ambient->keys_of_degree(spec.grading, k, spec.exponent_caps))
    out.push_back(spec.ambient->key_element(key));
  return out;
}

std::vector<Element> prolong_step(const ProlongSpec& spec, int k, const GradedBasis& previous) {
  const Realization& R = *spec.ambient;
  auto candidates = ambient_component(spec, k);
  if (candidates.empty()) return {};

  // the map D -> ([D, x] mod g_{k+d}) for x in g_d, d = -1, -2
  std::vector<std::pair<const Element*, Echelon>> tests;
  for (int d = -1; d >= -2; --d) {
    const auto& neg = component_of(spec, {}, d);
    if (neg.empty()) continue;
    Echelon target = echelon_of(R, component_of(spec, previous, k + d));
    for (const auto& x : neg) tests.emplace_back(&x, target);
  }

  std::map<std::pair<std::size_t, Key>, Key> rows;
  std::vector<SparseVec> columns(candidates.size());
  for (std::size_t m = 0; m < candidates.size(); ++m) {
    std::vector<std::pair<Key, Rational>> col;
    for (std::size_t t = 0; t < tests.size(); ++t) {
      auto v = tests[t].second.reduce(R.flatten(R.bracket(candidates[m], *tests[t].first)));
      for (auto& [key, c] : v) {
        auto it = rows.emplace(std::make_pair(t, key), static_cast<Key>(rows.size())).first;
        col.emplace_back(it->second, c);
      }
    }
    columns[m] = normalize_entries(std::move(col));
  }

  Echelon kernel;
  for (const auto& z : nullspace(columns)) {
    Element d = R.zero();
    for (const auto& [m, c] : z) d = R.add(d, R.scale(candidates[m], c));
    kernel.insert(R.flatten(d));
  }
  return rows_as_elements(R, kernel);
}

std::vector<Element> partial_prolong_step(const ProlongSpec& spec, int k, const GradedBasis& previous) {
  if (!spec.partial_seed) throw Error("partial prolongation needs a seed");
  if (k == 1) return rows_as_elements(*spec.ambient, echelon_of(*spec.ambient, *spec.partial_seed));
  return prolong_step(spec, k, previous);
}

GradedBasis prolong(const ProlongSpec& spec, int max_degree) {
  GradedBasis out;
  for (int d = -depth_of(spec); d < 0; ++d) out[d] = component_of(spec, {}, d);
  if (max_degree < 0) return out;
  out[0] = rows_as_elements(*spec.ambient, echelon_of(*spec.ambient, spec.zero));
  for (int k = 1; k <= max_degree; ++k)
    out[k] = spec.partial_seed ? partial_prolong_step(spec, k, out) : prolong_step(spec, k, out);
  return out;
}

std::vector<Element> submodule(const Realization& r, const std::vector<Element>& zero,
                               const std::vector<Element>& generators) {
  Echelon span;
  std::deque<Element> queue;
  auto offer = [&](const Element& x) {
    auto v = span.reduce(r.flatten(x));
    if (v.empty()) return;
    span.insert(v);
    queue.push_back(r.unflatten(v));
  };
  for (const auto& g : generators) offer(g);
  while (!queue.empty()) {
    Element v = queue.front();
    queue.pop_front();
    for (const auto& y : zero) offer(r.bracket(y, v));
  }
  return rows_as_elements(r, span);
}

namespace {

GradedAlgebra local_closure(const AlgebraEntry& e, RealizationPtr R, const std::vector<Rational>& w) {
  std::vector<Element> gens;
  for (const auto& [side, info] : e.sides) {
    auto t = generator_table(e, R, side);
    for (auto& x : t.elements()) gens.push_back(std::move(x));
  }
  return GradedAlgebra::generate(R, gens, w, -4, 1, GradedAlgebra::Closure::AllPairs);
}

/// Caps for even coordinates of degree 0; empty when none are needed.
std::vector<int> zero_degree_caps(const Realization& R, const std::vector<Rational>& w, int cap) {
  const auto& ring = *R.coordinates();
  std::vector<int> caps(ring.size(), -1);
  bool any = false;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!is_odd(ring.parity(i)) && w[i] <= 0) {
      caps[i] = cap;
      any = true;
    }
  return any ? caps : std::vector<int>{};
}

}  // namespace

ProlongResult prolong_algebra(const AlgebraEntry& e, const std::string& r, int max_degree) {
  auto R = make_realization(e);
  auto w = grading_vector(e, *R, r);
  auto closure = local_closure(e, R, w);
  ProlongSpec spec;
  spec.ambient = R;
  spec.grading = w;
  for (int d = -4; d < 0; ++d)
    if (auto c = closure.component(d); !c.empty()) spec.negative[d] = std::move(c);
  spec.zero = closure.component(0);
  const bool partial = e.prolong && e.prolong->partial;
  if (partial) spec.partial_seed = closure.component(1);

  ProlongResult res;
  res.method = partial ? "closure + partial prolongation" : "closure + Cartan prolongation";

  // degree-0 even coordinates make the ambient components infinite; raise
  // the exponent caps until the computed dimensions stop changing
  int cap = std::max(max_degree, 1) + 2;
  spec.exponent_caps = zero_degree_caps(*R, w, cap);
  GradedBasis comps = prolong(spec, max_degree);
  if (!spec.exponent_caps.empty()) {
    res.method += ", capped exponents";
    while (true) {
      cap += 2;
      spec.exponent_caps = zero_degree_caps(*R, w, cap);
      GradedBasis next = prolong(spec, max_degree);
      bool same = true;
      for (const auto& [d, c] : comps)
        if (next.at(d).size() != c.size()) same = false;
      comps = std::move(next);
      if (same) break;
    }
  }
  for (const auto& [d, c] : comps) res.dims[d] = superdim(*R, c);
  res.components = std::move(comps);

  if (e.prolong && !e.prolong->splitting.empty() && max_degree >= 1) {
    ProlongSpec full = spec;
    full.partial_seed.reset();
    auto g1 = prolong_step(full, 1, {});
    Echelon whole = echelon_of(*R, g1);
    Echelon algebra = echelon_of(*R, res.components.at(1));
    Echelon sum;
    std::size_t total = 0;
    for (const auto& [name, expr] : e.prolong->splitting) {
      auto part = submodule(*R, spec.zero, {R->parse(expr)});
      ModulePart mp;
      mp.degree = 1;
      mp.name = name;
      mp.dim = superdim(*R, part);
      mp.in_algebra = true;
      for (const auto& x : part) {
        if (!algebra.contains(R->flatten(x))) mp.in_algebra = false;
        if (!whole.contains(R->flatten(x))) throw Error("module generator " + name + " is not in degree 1");
        sum.insert(R->flatten(x));
      }
      total += part.size();
      res.splitting.push_back(std::move(mp));
    }
    res.splitting_is_direct = sum.rank() == total && total == whole.rank();
  }
  return res;
}

}  // namespace vsa
