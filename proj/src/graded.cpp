#include "vsa/graded.hpp"

#include <deque>

namespace vsa {

std::string to_string(const Superdim& d) { return std::to_string(d.even) + "|" + std::to_string(d.odd); }

Superdim superdim(const Realization& r, const std::vector<Element>& basis) {
  Superdim d;
  for (const auto& e : basis) {
    auto p = r.parity(e);
    if (!p) throw Error("superdim: inhomogeneous element " + r.to_string(e));
    (is_odd(*p) ? d.odd : d.even)++;
  }
  return d;
}

namespace {

Weight key_weight(const Realization& r, Key k, const std::vector<std::vector<Rational>>& torus) {
  const auto& f = r.key_form(k);
  Weight w;
  w.reserve(torus.size());
  for (const auto& t : torus) {
    Rational s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * t[i];
    w.push_back(s);
  }
  return w;
}

int integral_degree(const Rational& d) {
  if (d.get_den() != 1) throw Error("non-integral degree " + to_string(d));
  return static_cast<int>(d.get_num().get_si());
}

std::vector<std::vector<Rational>> torus_with(const Realization& r, const std::vector<Element>& els,
                                              const std::vector<Rational>& w) {
  for (const auto& row : r.weight_constraints()) {
    Rational s = 0;
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * w.at(i);
    if (s != 0) throw Error("grading is not compatible with the bracket of the realization");
  }
  std::vector<std::vector<Rational>> torus{w};
  for (auto& t : compatible_torus(r, els)) torus.push_back(std::move(t));
  return torus;
}

}  // namespace

Weight GradedAlgebra::weight_or_throw(const Element& el) const {
  auto w = weight_of(*real_, el, torus_);
  if (!w) throw Error("element is not homogeneous: " + real_->to_string(el));
  return *w;
}

GradedAlgebra GradedAlgebra::generate(RealizationPtr r, const std::vector<Element>& generators,
                                      const std::vector<Rational>& w, int lo, int hi, Closure mode) {
  GradedAlgebra g;
  g.real_ = std::move(r);
  g.grading_ = w;
  g.lo_ = lo;
  g.hi_ = hi;
  g.torus_ = torus_with(*g.real_, generators, w);
  const Realization& R = *g.real_;

  std::map<Weight, Echelon> blocks;
  std::vector<std::pair<Element, Weight>> gens;
  std::vector<std::pair<Element, Weight>> found;
  std::deque<std::size_t> queue;

  auto offer = [&](const Element& el, const Weight& wt) {
    int d = integral_degree(wt[0]);
    if (d < lo || d > hi) return;
    auto v = R.flatten(el);
    if (v.empty()) return;
    auto& block = blocks[wt];
    auto red = block.reduce(v);
    if (red.empty()) return;
    block.insert(red);
    found.emplace_back(R.unflatten(red), wt);
    queue.push_back(found.size() - 1);
  };

  for (const auto& x : generators) {
    if (R.is_zero(x)) continue;
    if (!R.parity(x)) throw Error("generator is not parity-homogeneous: " + R.to_string(x));
    Weight wt = g.weight_or_throw(x);
    gens.emplace_back(x, wt);
    offer(x, wt);
  }
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    auto [v, wv] = found[i];
    auto with = [&](const Element& x, const Weight& wx) {
      Weight sum = wx;
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += wv[k];
      int d = integral_degree(sum[0]);
      if (d < lo || d > hi) return;
      offer(R.bracket(x, v), sum);
    };
    if (mode == Closure::Generators) {
      for (const auto& [x, wx] : gens) with(x, wx);
    } else {
      for (std::size_t j = 0; j <= i; ++j) {
        auto [x, wx] = found[j];
        with(x, wx);
      }
      // later elements meet v when they are processed themselves
    }
  }
  g.build(blocks);
  return g;
}

GradedAlgebra GradedAlgebra::span(RealizationPtr r, const std::vector<Element>& elements, const std::vector<Rational>& w,
                                  int lo, int hi) {
  GradedAlgebra g;
  g.real_ = std::move(r);
  g.grading_ = w;
  g.lo_ = lo;
  g.hi_ = hi;
  g.torus_ = torus_with(*g.real_, elements, w);
  std::map<Weight, Echelon> blocks;
  for (const auto& x : elements) {
    if (g.real_->is_zero(x)) continue;
    if (!g.real_->parity(x)) throw Error("element is not parity-homogeneous: " + g.real_->to_string(x));
    Weight wt = g.weight_or_throw(x);
    int d = integral_degree(wt[0]);
    if (d < lo || d > hi) continue;
    blocks[wt].insert(g.real_->flatten(x));
  }
  g.build(blocks);
  return g;
}

void GradedAlgebra::build(const std::map<Weight, Echelon>& blocks) {
  echelons_ = blocks;
  // blocks are ordered by weight, so the degree (first coordinate) is the
  // primary sort key
  for (const auto& [wt, ech] : echelons_) {
    auto& idx = block_index_[wt];
    for (const auto& row : ech.rows()) {
      Element el = real_->unflatten(row);
      auto p = real_->parity(el);
      if (!p) throw Error("basis element mixes parities: " + real_->to_string(el));
      idx.push_back(basis_.size());
      basis_.push_back({std::move(el), *p, integral_degree(wt[0]), wt});
    }
  }
}

std::vector<std::size_t> GradedAlgebra::indices_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == d) out.push_back(i);
  return out;
}

std::vector<Element> GradedAlgebra::component(int d) const {
  std::vector<Element> out;
  for (auto i : indices_of_degree(d)) out.push_back(basis_[i].element);
  return out;
}

std::map<int, Superdim> GradedAlgebra::dims() const {
  std::map<int, Superdim> out;
  for (int d = lo_; d <= hi_; ++d) out[d];
  for (const auto& b : basis_) (is_odd(b.parity) ? out[b.degree].odd : out[b.degree].even)++;
  return out;
}

std::optional<SparseVec> GradedAlgebra::coordinates(const Element& el) const {
  std::map<const std::pair<const Weight, Echelon>*, std::vector<std::pair<Key, Rational>>> parts;
  for (auto& [k, c] : real_->flatten(el)) {
    auto it = key_block_.find(k);
    if (it == key_block_.end()) {
      auto b = echelons_.find(key_weight(*real_, k, torus_));
      it = key_block_.emplace(k, b == echelons_.end() ? nullptr : &*b).first;
    }
    if (!it->second) return std::nullopt;
    parts[it->second].emplace_back(k, c);
  }
  std::vector<std::pair<Key, Rational>> out;
  for (auto& [block, entries] : parts) {
    auto c = block->second.coordinates(SparseVec(entries.begin(), entries.end()));
    if (!c) return std::nullopt;
    const auto& idx = block_index_.at(block->first);
    for (std::size_t r = 0; r < c->size(); ++r)
      if ((*c)[r] != 0) out.emplace_back(static_cast<Key>(idx[r]), (*c)[r]);
  }
  return normalize_entries(std::move(out));
}

const std::optional<SparseVec>& GradedAlgebra::bracket(std::size_t i, std::size_t j) const {
  const std::uint64_t id = (static_cast<std::uint64_t>(i) << 32) | j;
  if (auto it = memo_.find(id); it != memo_.end()) return it->second;
  const auto& a = basis_.at(i);
  const auto& b = basis_.at(j);
  std::optional<SparseVec> result;
  int d = a.degree + b.degree;
  if (d >= lo_ && d <= hi_) {
    Element x = real_->bracket(a.element, b.element);
    result = coordinates(x);
    if (!result) throw Error("bracket leaves the span: [" + real_->to_string(a.element) + ", " +
                             real_->to_string(b.element) + "]");
  }
  return memo_.emplace(id, std::move(result)).first->second;
}

}  // namespace vsa
