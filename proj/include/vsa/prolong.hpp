#pragma once

// Cartan prolongation (depth 1 and 2) and partial prolongation inside an
// ambient realization, degree by degree, as exact kernels.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsa/graded.hpp"
#include "vsa/registry.hpp"

namespace vsa {

using GradedBasis = std::map<int, std::vector<Element>>;

struct ProlongSpec {
  RealizationPtr ambient;
  std::vector<Rational> grading;
  /// Components of negative degree: g_-1 and, at depth 2, g_-2.
  GradedBasis negative;
  std::vector<Element> zero;
  std::optional<std::vector<Element>> partial_seed;
  /// Exponent caps per coordinate for even coordinates of degree 0; -1 is uncapped.
  std::vector<int> exponent_caps;
};

/// Monomial basis of the degree-k elements of the ambient.
std::vector<Element> ambient_component(const ProlongSpec& spec, int k);

/// Elements D of degree k with [D, g_-1] in g_{k-1} and [D, g_-2] in g_{k-2};
/// `previous` holds the components of degree k-1 and k-2 (negative and zero
/// components are taken from the spec when absent).
std::vector<Element> prolong_step(const ProlongSpec& spec, int k, const GradedBasis& previous);

/// The seed in degree 1, then the same condition relative to the partial
/// components computed so far.
std::vector<Element> partial_prolong_step(const ProlongSpec& spec, int k, const GradedBasis& previous);

/// Components of degrees -depth..max_degree; partial when the spec has a seed.
GradedBasis prolong(const ProlongSpec& spec, int max_degree);

/// g_0-submodule of a component generated by the given vectors.
std::vector<Element> submodule(const Realization& r, const std::vector<Element>& zero,
                               const std::vector<Element>& generators);

struct ModulePart {
  int degree = 0;
  std::string name;
  Superdim dim;
  bool in_algebra = false;
};

struct ProlongResult {
  std::string method;
  std::map<int, Superdim> dims;
  GradedBasis components;
  /// Submodules of the degree-1 component of the full Cartan prolong, when
  /// the registry names them; their sum is checked to be direct and complete.
  std::vector<ModulePart> splitting;
  bool splitting_is_direct = false;
};

/// Nonpositive part from the closure of the tabulated generators under the
/// grading r, then Cartan or partial prolongation up to max_degree.
ProlongResult prolong_algebra(const AlgebraEntry& e, const std::string& r, int max_degree);

}  // namespace vsa
