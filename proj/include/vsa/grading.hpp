#pragma once

// Degree assignments to coordinates and the degrees and torus weights of
// algebra elements.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsa/realization.hpp"

namespace vsa {

struct Grading {
  std::string label;
  std::map<std::string, int> degrees;

  /// Degree vector over the realization coordinates; throws when a
  /// coordinate is missing.
  std::vector<Rational> vector_for(const Ring& coords) const;
};

/// Grading of series algebras named like "vect(2|1)", "k(3|0)", "k(1|6)",
/// "m(4)": "0" is the standard one (t and tau get degree 2). Other ids are
/// looked up in the registry; see registry.hpp.
std::optional<Grading> series_preset(const std::string& algebra_id, const std::string& r);

/// Weight of a homogeneous element as a vector of linear forms evaluated at
/// w; nullopt when the element mixes weights.
std::optional<Rational> degree_of(const Realization& r, const Element& el, const std::vector<Rational>& w);
std::optional<Rational> degree_of(const Realization& r, const Element& el, const Grading& g);

/// Weight vector of an element under several coordinate weightings.
std::optional<std::vector<Rational>> weight_of(const Realization& r, const Element& el,
                                               const std::vector<std::vector<Rational>>& torus);

/// Basis of coordinate weightings compatible with the bracket for which all
/// the given elements are homogeneous. Rows are scaled to integers.
std::vector<std::vector<Rational>> compatible_torus(const Realization& r, const std::vector<Element>& elements);

}  // namespace vsa
