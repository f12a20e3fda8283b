#include "vsa/homology.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>


namespace vsa {

namespace {

bool odd(const GradedAlgebra& g, std::size_t i) { return is_odd(g.basis(i).parity); }

/// Coordinates of [b_i, b_j] for any order of i and j.
SparseVec bracket_any(const GradedAlgebra& g, std::size_t i, std::size_t j) {
  std::optional<SparseVec> r;
  Rational s = 1;
  if (i <= j) {
    r = g.bracket(i, j);
  } else {
    r = g.bracket(j, i);
    s = (odd(g, i) && odd(g, j)) ? 1 : -1;
  }
  if (!r) throw Error("homology window is too small for the algebra window");
  return s == 1 ? *r : scaled(*r, s);
}

std::string format_chain(const GradedAlgebra& g, const SparseVec& v, const std::vector<Wedge2>& c2) {
  std::string s;
  bool first = true;
  for (const auto& [k, c] : v) {
    auto [i, j] = c2[k];
    const auto& R = g.realization();
    std::string body = "(" + R.to_string(g.basis(i).element) + ")^(" + R.to_string(g.basis(j).element) + ")";
    s += format_coefficient_term(c, body, first);
    first = false;
  }
  return first ? "0" : s;
}

}  // namespace

void add_wedge(Chain2& out, const GradedAlgebra& g, std::size_t x, std::size_t y, const Rational& c) {
  if (c == 0) return;
  Rational s = c;
  if (x > y) {
    std::swap(x, y);
    if (!(odd(g, x) && odd(g, y))) s = -s;
  } else if (x == y && !odd(g, x)) {
    return;
  }
  auto& slot = out[{x, y}];
  slot += s;
  if (slot == 0) out.erase({x, y});
}

Chain1 d1(const GradedAlgebra& g, const Chain2& c) {
  Chain1 out;
  for (const auto& [w, a] : c)
    for (const auto& [k, v] : bracket_any(g, w.first, w.second)) out[k] += a * v;
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

namespace {

void d2_monomial(Chain2& out, const GradedAlgebra& g, std::size_t x, std::size_t y, std::size_t z, const Rational& a) {
  const Parity px = g.basis(x).parity, py = g.basis(y).parity, pz = g.basis(z).parity;
  for (const auto& [k, v] : bracket_any(g, x, y)) add_wedge(out, g, k, z, a * v);
  Rational s2 = -a * sign_of(py, pz);
  for (const auto& [k, v] : bracket_any(g, x, z)) add_wedge(out, g, k, y, s2 * v);
  Rational s3 = a * sign_of(px, py + pz);
  for (const auto& [k, v] : bracket_any(g, y, z)) add_wedge(out, g, k, x, s3 * v);
}

}  // namespace

Chain2 d2(const GradedAlgebra& g, const Chain3& c) {
  Chain2 out;
  for (const auto& [w, a] : c) d2_monomial(out, g, w[0], w[1], w[2], a);
  return out;
}

namespace {

using IWeight = std::vector<long>;

struct PairHash {
  std::size_t operator()(const Wedge2& w) const { return std::hash<std::uint64_t>()((std::uint64_t(w.first) << 32) ^ w.second); }
};

/// Structure constants mod p, for either order of the arguments.
class ModBrackets {
 public:
  explicit ModBrackets(const GradedAlgebra& g) : g_(g) {}
  const ModVec& operator()(std::size_t i, std::size_t j) {
    const std::uint64_t id = (std::uint64_t(i) << 32) | j;
    if (auto it = memo_.find(id); it != memo_.end()) return it->second;
    return memo_.emplace(id, to_mod(bracket_any(g_, i, j), kModPrime)).first->second;
  }

 private:
  const GradedAlgebra& g_;
  std::unordered_map<std::uint64_t, ModVec> memo_;
};

/// Row echelon form mod p over a fixed number of columns; rows are reduced
/// in a dense accumulator and stored sparse from their pivot on.
class DenseModEchelon {
 public:
  explicit DenseModEchelon(std::size_t columns) : acc_(columns, 0), pivot_(columns, -1) {}

  bool insert(const ModVec& v) {
    const std::uint64_t p = kModPrime;
    if (v.empty()) return false;
    for (const auto& [k, x] : v) acc_[k] = x;
    std::size_t c = v.front().first;
    bool found = false;
    for (; c < acc_.size(); ++c) {
      const std::uint64_t f = acc_[c];
      if (!f) continue;
      const int r = pivot_[c];
      if (r < 0) {
        found = true;
        break;
      }
      for (const auto& [k, x] : rows_[r]) acc_[k] = mod_sub(acc_[k], mod_mul(f, x, p), p);
    }
    if (found) {
      // clear the later pivot columns too; stored rows stay short
      for (std::size_t d = c + 1; d < acc_.size(); ++d) {
        const std::uint64_t f = acc_[d];
        if (!f || pivot_[d] < 0) continue;
        for (const auto& [k, x] : rows_[pivot_[d]]) acc_[k] = mod_sub(acc_[k], mod_mul(f, x, p), p);
      }
      const std::uint64_t inv = mod_inv(acc_[c], p);
      ModVec row;
      for (std::size_t k = c; k < acc_.size(); ++k)
        if (acc_[k]) {
          row.emplace_back(static_cast<Key>(k), mod_mul(acc_[k], inv, p));
          acc_[k] = 0;
        }
      pivot_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(row));
    }
    return found;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::uint64_t> acc_;
  std::vector<int> pivot_;
  std::vector<ModVec> rows_;
};

/// d2 of a 3-chain monomial mod p, as a row over the 2-chains of its weight.
ModVec d2_row_mod(const GradedAlgebra& g, ModBrackets& br, const Wedge3& t,
                  const std::unordered_map<Wedge2, Key, PairHash>& index) {
  const std::uint64_t p = kModPrime;
  std::vector<std::pair<Key, std::uint64_t>> row;
  auto put = [&](std::size_t x, std::size_t y, std::uint64_t c) {
    if (x > y) {
      std::swap(x, y);
      if (!(odd(g, x) && odd(g, y))) c = c ? p - c : 0;
    } else if (x == y && !odd(g, x)) {
      return;
    }
    auto it = index.find({x, y});
    if (it == index.end()) throw Error("boundary leaves its weight block");
    row.emplace_back(it->second, c);
  };
  const auto [x, y, z] = t;
  const Parity px = g.basis(x).parity, py = g.basis(y).parity, pz = g.basis(z).parity;
  const std::uint64_t s2 = sign_of(py, pz) == 1 ? p - 1 : 1;
  const std::uint64_t s3 = sign_of(px, py + pz) == 1 ? 1 : p - 1;
  for (const auto& [k, v] : br(x, y)) put(k, z, v);
  for (const auto& [k, v] : br(x, z)) put(k, y, mod_mul(s2, v, p));
  for (const auto& [k, v] : br(y, z)) put(k, x, mod_mul(s3, v, p));
  std::sort(row.begin(), row.end());
  ModVec out;
  for (const auto& [k, v] : row) {
    if (!out.empty() && out.back().first == k) out.back().second = mod_add(out.back().second, v, p);
    else out.emplace_back(k, v);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

IWeight iadd(const IWeight& a, const IWeight& b) {
  IWeight c = a;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return c;
}

struct Target {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;                // blocks a <= b
  std::vector<std::array<std::size_t, 3>> triples;                       // blocks a <= b <= c
  std::vector<std::pair<std::size_t, std::vector<std::pair<Wedge2, Rational>>>> cycles;
};

}  // namespace

std::vector<HomologyDegree> homology(const GradedAlgebra& g, const HomologyOptions& opt) {
  // blocks with integer weights, scaled by the common denominator
  std::vector<const std::vector<std::size_t>*> members;
  std::vector<Weight> weights;
  for (const auto& [w, idx] : g.blocks()) {
    weights.push_back(w);
    members.push_back(&idx);
  }
  mpz_class den = 1;
  for (const auto& w : weights)
    for (const auto& x : w) den = lcm(den, mpz_class(x.get_den()));
  if (!den.fits_slong_p()) throw Error("torus weights have huge denominators");
  const long L = den.get_si();
  std::vector<IWeight> iw;
  std::vector<long> degree;
  for (const auto& w : weights) {
    IWeight v;
    for (const auto& x : w) {
      mpz_class n = x.get_num() * (den / x.get_den());
      if (!n.fits_slong_p()) throw Error("torus weight out of range");
      v.push_back(n.get_si());
    }
    degree.push_back(v[0] / L);
    iw.push_back(std::move(v));
  }
  std::vector<std::size_t> block_of(g.dim());
  for (std::size_t b = 0; b < members.size(); ++b)
    for (auto i : *members[b]) block_of[i] = b;

  // blocks are sorted by degree, so sums over later blocks only grow
  const std::size_t nb = weights.size();
  std::map<IWeight, Target> targets;
  for (std::size_t a = 0; a < nb; ++a) {
    if (degree[a] >= opt.lo && degree[a] <= opt.hi) targets[iw[a]];
    for (std::size_t b = a; b < nb; ++b) {
      const long dab = degree[a] + degree[b];
      IWeight sab = iadd(iw[a], iw[b]);
      if (dab >= opt.lo && dab <= opt.hi) targets[sab].pairs.emplace_back(a, b);
    }
  }
  // 3-chains matter only in weights that carry 2-chains
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = a; b < nb; ++b) {
      const long dab = degree[a] + degree[b];
      IWeight sab = iadd(iw[a], iw[b]);
      for (std::size_t c = b; c < nb; ++c) {
        const long d = dab + degree[c];
        if (d > opt.hi) break;
        if (d < opt.lo) continue;
        auto it = targets.find(iadd(sab, iw[c]));
        if (it != targets.end() && !it->second.pairs.empty()) it->second.triples.push_back({a, b, c});
      }
    }
  for (std::size_t n = 0; n < opt.cycles.size(); ++n) {
    std::map<IWeight, std::vector<std::pair<Wedge2, Rational>>> parts;
    for (const auto& [w, c] : opt.cycles[n]) parts[iadd(iw[block_of[w.first]], iw[block_of[w.second]])].emplace_back(w, c);
    for (auto& [mu, entries] : parts) {
      auto it = targets.find(mu);
      if (it == targets.end()) continue;
      it->second.cycles.emplace_back(n, std::move(entries));
    }
  }

  std::map<int, HomologyDegree> out;
  for (int d = opt.lo; d <= opt.hi; ++d) out[d].degree = d;
  std::mt19937_64 rng(20240917);
  ModBrackets mod_brackets(g);

  for (const auto& [mu, target] : targets) {
    const int deg = static_cast<int>(mu[0] / L);
    // 1-chains
    std::map<std::size_t, Key> c1;
    for (std::size_t b = 0; b < nb; ++b)
      if (iw[b] == mu)
        for (auto i : *members[b]) c1.emplace(i, static_cast<Key>(c1.size()));
    // 2-chains
    std::vector<Wedge2> c2;
    std::unordered_map<Wedge2, Key, PairHash> c2_index;
    for (const auto& [a, b] : target.pairs)
      for (auto i : *members[a])
        for (auto j : *members[b]) {
          if (j < i || (i == j && !odd(g, i))) continue;
          c2_index.emplace(Wedge2{i, j}, static_cast<Key>(c2.size()));
          c2.push_back({i, j});
        }
    // 3-chains
    std::vector<Wedge3> c3;
    for (const auto& [a, b, c] : target.triples)
      for (auto i : *members[a])
        for (auto j : *members[b]) {
          if (j < i || (i == j && !odd(g, i))) continue;
          for (auto k : *members[c]) {
            if (k < j || (j == k && !odd(g, j))) continue;
            c3.push_back({i, j, k});
          }
        }

    auto to_row = [&](const Chain2& chain) {
      std::vector<std::pair<Key, Rational>> row;
      for (const auto& [w, v] : chain) {
        auto it = c2_index.find(w);
        if (it == c2_index.end()) throw Error("boundary leaves its weight block");
        row.emplace_back(it->second, v);
      }
      return normalize_entries(std::move(row));
    };

    // First mod p: once the boundaries reach rank c2 - rank(d1) the block
    // has no H2, and both ranks are exact since ranks mod p never exceed
    // ranks over Q. Boundaries are tried in a fixed pseudo-random order.
    std::shuffle(c3.begin(), c3.end(), rng);
    bool early = false;
    std::size_t r1 = 0;
    try {
      ModEchelon image(kModPrime);
      for (const auto& [i, j] : c2) {
        std::vector<std::pair<Key, std::uint64_t>> row;
        for (const auto& [k, v] : mod_brackets(i, j)) {
          auto it = c1.find(k);
          if (it == c1.end()) throw Error("bracket leaves its weight block");
          row.emplace_back(it->second, v);
        }
        std::sort(row.begin(), row.end());
        image.insert(std::move(row));
      }
      r1 = image.rank();
      const std::size_t z2 = c2.size() - r1;
      early = z2 == 0;
      DenseModEchelon spanned(c2.size());
      for (const auto& t : c3) {
        if (early) break;
        // pivots on the last 2-chains keep the fill-in lower
        auto row = d2_row_mod(g, mod_brackets, t, c2_index);
        for (auto& e : row) e.first = static_cast<Key>(c2.size() - 1 - e.first);
        std::reverse(row.begin(), row.end());
        if (spanned.insert(row) && spanned.rank() == z2) early = true;
      }
    } catch (const Error&) {
      early = false;
    }

    std::vector<SparseVec> d1_rows, d2_rows;
    if (!early) {
      d1_rows.reserve(c2.size());
      for (const auto& [i, j] : c2) {
        std::vector<std::pair<Key, Rational>> row;
        for (const auto& [k, v] : bracket_any(g, i, j)) {
          auto it = c1.find(k);
          if (it == c1.end()) throw Error("bracket leaves its weight block");
          row.emplace_back(it->second, v);
        }
        d1_rows.push_back(normalize_entries(std::move(row)));
      }
      r1 = rank_certified(d1_rows);
      d2_rows.reserve(c3.size());
      for (const auto& t : c3) {
        Chain2 img;
        d2_monomial(img, g, t[0], t[1], t[2], 1);
        d2_rows.push_back(to_row(img));
      }
    }
    const std::size_t r2 = early ? c2.size() - r1 : rank_certified(d2_rows);
    auto& h = out[deg];
    h.c1 += c1.size();
    h.c2 += c2.size();
    h.c3 += c3.size();
    h.h1 += c1.size() - std::min(c1.size(), r1);
    h.h2 += c2.size() - r1 - r2;

    if (!target.cycles.empty()) {
      std::vector<SparseVec> rows = d2_rows;
      for (const auto& [n, entries] : target.cycles) {
        Chain2 part(entries.begin(), entries.end());
        auto row = to_row(part);
        // a cycle has no boundary in any weight
        if (!d1(g, part).empty()) throw Error("supplied chain " + std::to_string(n) + " is not a cycle");
        rows.push_back(std::move(row));
      }
      if (!early) h.relation_rank += rank_certified(rows) - r2;
    }

    if (opt.representatives && c2.size() - r1 - r2 > 0 && c2.size() <= opt.representative_limit) {
      std::vector<SparseVec> columns(c2.size());
      for (std::size_t k = 0; k < c2.size(); ++k) columns[k] = d1_rows[k];
      Echelon boundaries;
      for (const auto& r : d2_rows) boundaries.insert(r);
      for (const auto& z : nullspace(columns))
        if (boundaries.insert(z)) h.representatives.push_back(format_chain(g, z, c2));
    }
  }
  std::vector<HomologyDegree> res;
  for (auto& [d, h] : out) res.push_back(std::move(h));
  return res;
}

}  // namespace vsa
