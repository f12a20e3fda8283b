#pragma once

// Finite graded pieces of Lie superalgebras inside a realization: a basis
// split into blocks of equal torus weight, with memoized structure constants.

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsa/grading.hpp"
#include "vsa/realization.hpp"

namespace vsa {

using Weight = std::vector<Rational>;

struct Superdim {
  std::size_t even = 0;
  std::size_t odd = 0;
  friend bool operator==(const Superdim&, const Superdim&) = default;
};
std::string to_string(const Superdim& d);

/// Even and odd counts of a list of homogeneous elements.
Superdim superdim(const Realization& r, const std::vector<Element>& basis);

struct BasisElement {
  Element element;
  Parity parity;
  int degree;
  Weight weight;  // torus coordinates; the first one is the degree
};

class GradedAlgebra {
 public:
  enum class Closure {
    Generators,  // brackets of generators with basis elements
    AllPairs     // brackets of all pairs; needed when the window cuts both ways
  };

  /// Subalgebra generated by `generators`, truncated to degrees [lo, hi]
  /// under the coordinate grading w.
  static GradedAlgebra generate(RealizationPtr r, const std::vector<Element>& generators, const std::vector<Rational>& w,
                                int lo, int hi, Closure mode = Closure::Generators);
  /// Span of homogeneous elements, no closure.
  static GradedAlgebra span(RealizationPtr r, const std::vector<Element>& elements, const std::vector<Rational>& w,
                            int lo, int hi);

  const Realization& realization() const { return *real_; }
  RealizationPtr realization_ptr() const { return real_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::vector<std::vector<Rational>>& torus() const { return torus_; }

  std::size_t dim() const { return basis_.size(); }
  const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
  std::vector<std::size_t> indices_of_degree(int d) const;
  std::vector<Element> component(int d) const;
  std::map<int, Superdim> dims() const;
  const std::map<Weight, std::vector<std::size_t>>& blocks() const { return block_index_; }

  /// Coordinates of an element of the span; nullopt when outside.
  std::optional<SparseVec> coordinates(const Element& el) const;
  /// Coordinates of [b_i, b_j]; nullopt when its degree leaves the window.
  /// Throws when the bracket lands inside the window but outside the span.
  /// The reference stays valid for the lifetime of the algebra.
  const std::optional<SparseVec>& bracket(std::size_t i, std::size_t j) const;

 private:
  GradedAlgebra() = default;
  void build(const std::map<Weight, Echelon>& blocks);
  Weight weight_or_throw(const Element& el) const;

  RealizationPtr real_;
  std::vector<Rational> grading_;
  std::vector<std::vector<Rational>> torus_;
  int lo_ = 0, hi_ = 0;
  std::vector<BasisElement> basis_;
  std::map<Weight, std::vector<std::size_t>> block_index_;
  std::map<Weight, Echelon> echelons_;
  mutable std::unordered_map<std::uint64_t, std::optional<SparseVec>> memo_;
  /// Block of each flattened key; nullptr when its weight has no block.
  /// Copies start empty since the entries point into echelons_.
  struct KeyBlocks : std::unordered_map<Key, const std::pair<const Weight, Echelon>*> {
    KeyBlocks() = default;
    KeyBlocks(const KeyBlocks&) : unordered_map() {}
    KeyBlocks(KeyBlocks&&) = default;
    KeyBlocks& operator=(const KeyBlocks&) {
      clear();
      return *this;
    }
    KeyBlocks& operator=(KeyBlocks&&) = default;
  };
  mutable KeyBlocks key_block_;
};

}  // namespace vsa
