#pragma once

// Nested-bracket expressions over named generators, their evaluation in a
// realization, and verification of relation tables.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsa/graded.hpp"
#include "vsa/realization.hpp"

namespace vsa {

struct BracketExpr {
  enum class Kind { Zero, Gen, Bracket, Scale, Sum };
  Kind kind = Kind::Zero;
  std::string name;                 // Gen
  Rational scalar = 1;              // Scale
  std::vector<BracketExpr> items;   // Bracket: 2, Scale: 1, Sum: any

  static BracketExpr gen(std::string n);
  static BracketExpr bracket(BracketExpr a, BracketExpr b);
  static BracketExpr scale(Rational c, BracketExpr e);
  static BracketExpr sum(std::vector<BracketExpr> terms);

  std::string to_string() const;
  friend bool operator==(const BracketExpr&, const BracketExpr&);
};

/// Grammar: sums and differences of terms; a term is an optional rational
/// factor ("3*", "1/2*", "(1/2)*") followed by "[a,b]", "ad(a,k,b)", a
/// generator name, a parenthesized expression, or "0".
BracketExpr parse_expr(std::string_view text);

/// A bracket monomial with its coefficient; generators only at the leaves.
struct BracketTerm {
  Rational coeff;
  BracketExpr word;
};
/// Expands sums through brackets.
std::vector<BracketTerm> expand(const BracketExpr& e);
/// Number of occurrences of each generator in a bracket monomial.
std::map<std::string, int> occurrences(const BracketExpr& word);

struct GeneratorTable {
  RealizationPtr realization;
  std::vector<std::pair<std::string, Element>> generators;

  const Element* find(std::string_view name) const;
  std::vector<Element> elements() const;
};

/// Evaluates expressions, caching bracket monomials.
class Evaluator {
 public:
  explicit Evaluator(GeneratorTable table) : table_(std::move(table)) {}
  const GeneratorTable& table() const { return table_; }
  const Realization& realization() const { return *table_.realization; }

  Element eval(const BracketExpr& e);
  Element eval_word(const BracketExpr& word);

 private:
  GeneratorTable table_;
  std::map<std::string, Element> cache_;
};

struct RelationRecord {
  std::string algebra;
  std::string side;
  std::string cls;
  std::string lhs;
  std::string rhs;
  /// For class "weight": the printed weight of lhs.
  std::vector<Rational> weight;
  std::size_t line = 0;
};

struct RelationResult {
  enum class Status { Exact, Scalar, SignFlip, Failed };
  RelationRecord record;
  Status status = Status::Failed;
  Rational scalar = 1;
  std::vector<std::string> flipped;
  std::string residual;
  std::string note;
  /// For failed rows whose bracket monomials satisfy exactly one linear
  /// relation: its coefficients, in the order lhs terms then rhs terms.
  std::vector<Rational> dependency;
  /// Internal degree: sum of generator degrees of the first monomial.
  std::optional<int> degree;
};

const char* to_string(RelationResult::Status s);

struct CheckOptions {
  bool scalar_search = true;
  bool sign_search = true;
  std::size_t max_sign_generators = 9;
};

/// Cartan weight: the scalars [h_i, v] = lambda_i v; throws when v is not an
/// eigenvector of some h_i.
std::vector<Rational> cartan_weight(const Realization& r, const std::vector<Element>& h, const Element& v);

RelationResult check_relation(Evaluator& ev, const RelationRecord& rec, const CheckOptions& opt = {},
                              const std::vector<Element>& cartan = {},
                              const std::map<std::string, int>& degrees = {});

struct VerificationReport {
  std::vector<RelationResult> results;
  std::size_t exact = 0, scalar = 0, sign_flip = 0, failed = 0;
};

VerificationReport check_relations(Evaluator& ev, const std::vector<RelationRecord>& records,
                                   const CheckOptions& opt = {}, const std::vector<Element>& cartan = {},
                                   const std::map<std::string, int>& degrees = {});

/// Superdimensions of the subalgebra generated by homogeneous generators,
/// per degree in [lo, hi].
std::map<int, Superdim> generated_dims(RealizationPtr r, const std::vector<Element>& generators,
                                       const std::vector<Rational>& w, int lo, int hi);

}  // namespace vsa
