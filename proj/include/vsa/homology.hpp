#pragma once

// Chevalley-Eilenberg homology with trivial coefficients in degrees 1 and 2,
// computed block by block over torus weights.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vsa/graded.hpp"

namespace vsa {

/// Super-wedge monomials of basis indices, nondecreasing; an index repeats
/// only when the element is odd.
using Wedge2 = std::pair<std::size_t, std::size_t>;
using Wedge3 = std::array<std::size_t, 3>;

/// Chains as sparse combinations of canonical wedge monomials.
using Chain1 = std::map<std::size_t, Rational>;
using Chain2 = std::map<Wedge2, Rational>;
using Chain3 = std::map<Wedge3, Rational>;

/// Adds c * (x ^ y) in canonical order.
void add_wedge(Chain2& out, const GradedAlgebra& g, std::size_t x, std::size_t y, const Rational& c);

Chain1 d1(const GradedAlgebra& g, const Chain2& c);
Chain2 d2(const GradedAlgebra& g, const Chain3& c);

struct HomologyDegree {
  int degree = 0;
  std::size_t c1 = 0, c2 = 0, c3 = 0;
  std::size_t h1 = 0, h2 = 0;
  /// Rank of the supplied cycles in H2 of this degree.
  std::size_t relation_rank = 0;
  std::vector<std::string> representatives;
};

struct HomologyOptions {
  int lo = 0, hi = 0;
  bool representatives = false;
  /// Representatives are computed only for blocks with at most this many 2-chains.
  std::size_t representative_limit = 400;
  /// 2-cycles whose classes are counted in relation_rank, e.g. the images of
  /// defining relations.
  std::vector<Chain2> cycles;
};

/// H1 and H2 per internal degree in [lo, hi]. The algebra must be closed
/// under brackets landing in that window.
std::vector<HomologyDegree> homology(const GradedAlgebra& g, const HomologyOptions& opt);

}  // namespace vsa
