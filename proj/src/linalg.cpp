#include "vsa/linalg.hpp"

#include <algorithm>
#include <map>

namespace vsa {

void add_scaled(SparseVec& a, const Rational& c, const SparseVec& b) {
  if (c == 0 || b.empty()) return;
  SparseVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, c * j->second);
      ++j;
    } else {
      Rational v = i->second + c * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

SparseVec scaled(const SparseVec& a, const Rational& c) {
  if (c == 0) return {};
  SparseVec out = a;
  for (auto& [k, v] : out) v *= c;
  return out;
}

SparseVec normalize_entries(std::vector<std::pair<Key, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [k, v] : entries) {
    if (!out.empty() && out.back().first == k) out.back().second += v;
    else out.emplace_back(k, std::move(v));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
  return out;
}

Rational entry(const SparseVec& v, Key k) {
  auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& e, Key key) { return e.first < key; });
  if (it != v.end() && it->first == k) return it->second;
  return 0;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec r = v;
  for (const auto& [k, c] : v) {
    auto it = pivot_row_.find(k);
    if (it == pivot_row_.end()) continue;
    // rows vanish at every other pivot, so v's own entry at k is still current
    add_scaled(r, -c, rows_[it->second]);
  }
  return r;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Rational inv = 1 / r.front().second;
  for (auto& [k, c] : r) c *= inv;
  const Key p = r.front().first;
  for (auto& row : rows_) {
    Rational c = entry(row, p);
    if (c != 0) add_scaled(row, -c, r);
  }
  pivot_row_[p] = rows_.size();
  rows_.push_back(std::move(r));
  return true;
}

std::optional<std::size_t> Echelon::row_of_pivot(Key k) const {
  auto it = pivot_row_.find(k);
  if (it == pivot_row_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<Rational>> Echelon::coordinates(const SparseVec& v) const {
  std::vector<Rational> c(rows_.size(), Rational(0));
  SparseVec r = v;
  for (const auto& [k, x] : v) {
    auto it = pivot_row_.find(k);
    if (it == pivot_row_.end()) continue;
    c[it->second] = x;
    add_scaled(r, -x, rows_[it->second]);
  }
  if (!r.empty()) return std::nullopt;
  return c;
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& columns) {
  // transpose: one equation per target key, variables indexed by column
  std::map<Key, std::vector<std::pair<Key, Rational>>> eqs;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [k, v] : columns[j]) eqs[k].emplace_back(static_cast<Key>(j), v);
  Echelon e;
  for (auto& [k, row] : eqs) e.insert(normalize_entries(std::move(row)));
  std::vector<SparseVec> basis;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Key f = static_cast<Key>(j);
    if (e.row_of_pivot(f)) continue;
    std::vector<std::pair<Key, Rational>> vec{{f, Rational(1)}};
    for (std::size_t r = 0; r < e.rank(); ++r) {
      Rational c = entry(e.rows()[r], f);
      if (c != 0) vec.emplace_back(e.pivot(r), -c);
    }
    basis.push_back(normalize_entries(std::move(vec)));
  }
  return basis;
}

ModVec to_mod(const SparseVec& v, std::uint64_t p) {
  ModVec out;
  out.reserve(v.size());
  for (const auto& [k, c] : v) {
    std::uint64_t m = mod_reduce(c, p);
    if (m) out.emplace_back(k, m);
  }
  return out;
}

namespace {

void mod_axpy(ModVec& a, std::uint64_t c, const ModVec& b, std::uint64_t p) {
  ModVec out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, mod_mul(c, j->second, p));
      ++j;
    } else {
      std::uint64_t v = mod_add(i->second, mod_mul(c, j->second, p), p);
      if (v) out.emplace_back(i->first, v);
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

bool ModEchelon::insert(ModVec r) {
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) {
      std::uint64_t inv = mod_inv(r.front().second, p_);
      for (auto& [k, v] : r) v = mod_mul(v, inv, p_);
      Key k = r.front().first;
      pivots_.emplace(k, std::move(r));
      return true;
    }
    mod_axpy(r, p_ - r.front().second, it->second, p_);
  }
  return false;
}

std::size_t rank_mod(std::vector<ModVec> rows, std::uint64_t p) {
  // short rows first keeps fill-in low
  std::stable_sort(rows.begin(), rows.end(), [](const ModVec& a, const ModVec& b) { return a.size() < b.size(); });
  ModEchelon e(p);
  for (auto& r : rows) e.insert(std::move(r));
  return e.rank();
}

std::size_t rank_certified(const std::vector<SparseVec>& rows) {
  std::size_t best = 0;
  for (std::uint64_t p : {kModPrime, kModPrime2}) {
    std::vector<ModVec> m;
    m.reserve(rows.size());
    try {
      for (const auto& r : rows) m.push_back(to_mod(r, p));
    } catch (const Error&) {
      continue;
    }
    best = std::max(best, rank_mod(std::move(m), p));
  }
  return best;
}

std::size_t rank_exact(const std::vector<SparseVec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace vsa
