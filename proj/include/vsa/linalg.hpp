#pragma once

// Sparse exact linear algebra: vectors keyed by interned basis indices,
// incremental reduced row echelon forms over Q, nullspaces and ranks mod p.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsa/rational.hpp"

namespace vsa {

using Key = std::uint32_t;
/// Sorted by key, no zero entries.
using SparseVec = std::vector<std::pair<Key, Rational>>;

/// a += c * b
void add_scaled(SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec scaled(const SparseVec& a, const Rational& c);
/// Sorts and merges an unsorted list of entries.
SparseVec normalize_entries(std::vector<std::pair<Key, Rational>> entries);
Rational entry(const SparseVec& v, Key k);

/// Row-reduced basis of a growing subspace. Pivots are the smallest key of
/// each row; rows are kept fully reduced with pivot coefficient 1.
class Echelon {
 public:
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v when independent of the current rows.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  Key pivot(std::size_t row) const { return rows_[row].front().first; }
  std::optional<std::size_t> row_of_pivot(Key k) const;
  /// Coordinates in the row basis; nullopt when v is outside the span.
  std::optional<std::vector<Rational>> coordinates(const SparseVec& v) const;

 private:
  std::vector<SparseVec> rows_;
  std::unordered_map<Key, std::size_t> pivot_row_;
};

/// Basis of {c : sum_j c_j * column_j = 0} for the given columns.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& columns);

/// Second modular prime (2^62 - 57).
inline constexpr std::uint64_t kModPrime2 = 4611686018427387847ULL;

using ModVec = std::vector<std::pair<Key, std::uint64_t>>;
ModVec to_mod(const SparseVec& v, std::uint64_t p);

/// Incremental row echelon form over Z/p; rows are reduced on their leading
/// entry only.
class ModEchelon {
 public:
  explicit ModEchelon(std::uint64_t p) : p_(p) {}
  /// Adds v when independent of the current rows.
  bool insert(ModVec v);
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::uint64_t p_;
  std::unordered_map<Key, ModVec> pivots_;
};

/// Rank over Z/p by sparse elimination.
std::size_t rank_mod(std::vector<ModVec> rows, std::uint64_t p);

/// Rank of rational rows: the larger of the ranks modulo two 61/62-bit
/// primes, which agrees with the rank over Q unless both primes divide the
/// same maximal minor.
std::size_t rank_certified(const std::vector<SparseVec>& rows);
/// Exact rank over Q.
std::size_t rank_exact(const std::vector<SparseVec>& rows);

}  // namespace vsa
