#pragma once

// The tabulated algebras as computational objects: the locally nilpotent
// halves G+ and G- generated by the tabulated generators, their homology,
// and the per-degree counts of printed generators and relations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsa/homology.hpp"
#include "vsa/registry.hpp"

namespace vsa {

struct SideWindow {
  int lo = 0, hi = 0;
};

/// G- lives in [-2 depth, 0]; G+ is truncated to [0, max_degree]. The
/// window of an algebra graded by a torus character (as) is symmetric.
SideWindow side_window(const AlgebraEntry& e, const std::string& side, int max_degree);

GradedAlgebra side_algebra(const AlgebraEntry& e, RealizationPtr r, const std::string& side, int max_degree);

struct SideHomology {
  std::string algebra, side;
  SideWindow window;
  std::map<int, Superdim> dims;
  std::vector<HomologyDegree> degrees;
  /// Relations entered as 2-cycles, and those left out because they do not
  /// hold in the realization (file lines).
  std::size_t relation_cycles = 0;
  std::vector<std::size_t> failing_lines;
};

/// The chain sum c u^v of a relation sum c [u, v] = 0 (top-level brackets of
/// its expanded monomials); a 2-cycle whose class is the relation's image in
/// H2. nullopt when the relation does not hold or a factor leaves the window.
std::optional<Chain2> relation_cycle(const GradedAlgebra& g, Evaluator& ev, const RelationRecord& rec);

/// With `relations`, each holding relation of the side is entered as a
/// 2-cycle and HomologyDegree::relation_rank counts their classes.
SideHomology side_homology(const AlgebraEntry& e, RealizationPtr r, const std::string& side, int max_degree,
                           bool representatives = false, const std::vector<RelationRecord>* relations = nullptr);

/// Number of tabulated generators of each internal degree.
std::map<int, std::size_t> generator_counts(const AlgebraEntry& e, const Realization& r, const std::string& side);
/// Number of printed relations of each internal degree (relation rows of the side).
std::map<int, std::size_t> relation_counts(const AlgebraEntry& e, const Realization& r,
                                           const std::vector<RelationRecord>& records, const std::string& side);

/// Superdimension of the part of negative degree of the algebra generated by
/// both generator sets under the grading used for the dimension table.
std::map<int, Superdim> negative_dims(const AlgebraEntry& e, RealizationPtr r);

}  // namespace vsa
