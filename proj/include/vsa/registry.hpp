#pragma once

// The algebra registry: a declarative JSON file naming every tabulated
// algebra, its realization, gradings, generator tables and relation files.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vsa/grading.hpp"
#include "vsa/presentations.hpp"

namespace vsa {

struct SideInfo {
  std::string grading;  // label of the grading giving the internal degree
  std::vector<std::pair<std::string, std::string>> generators;
  /// Degree window for homology; the closed end is on the side of 0.
  int depth = 0;
};

struct ProlongInfo {
  std::string grading;
  bool partial = false;
  int seed_degree = 1;
  /// Named generators of g_0-submodules of the degree-1 component.
  std::vector<std::pair<std::string, std::string>> splitting;
};

struct AlgebraEntry {
  std::string id;
  std::string name;
  std::vector<std::string> aliases;
  std::string realization_kind;  // vect | k | m | e510
  std::vector<std::string> even, odd;
  std::size_t n = 0, m = 0;
  std::string variant;
  int first = 1;
  std::map<std::string, Grading> gradings;
  std::map<std::string, SideInfo> sides;
  std::vector<std::pair<std::string, std::string>> cartan;
  std::string relations_file;
  /// Printed superdimension of g_- under the standard grading, when tabulated.
  std::optional<std::pair<std::size_t, std::size_t>> printed_negative_dim;
  std::string dims_grading;
  std::optional<ProlongInfo> prolong;
};

class Registry {
 public:
  /// $SUPERLIE_DATA when set, else the data directory of the source tree.
  static std::filesystem::path default_dir();
  static Registry load(const std::filesystem::path& dir = default_dir());

  const std::filesystem::path& dir() const { return dir_; }
  const std::vector<AlgebraEntry>& entries() const { return entries_; }
  /// Lookup by id or alias; nullptr when unknown.
  const AlgebraEntry* find(const std::string& id) const;
  const AlgebraEntry& require(const std::string& id) const;

 private:
  std::filesystem::path dir_;
  std::vector<AlgebraEntry> entries_;
};

RealizationPtr make_realization(const AlgebraEntry& e);
GeneratorTable generator_table(const AlgebraEntry& e, RealizationPtr r, const std::string& side);
/// Generators of one side followed by the Cartan elements, for cross and
/// weight records.
GeneratorTable full_table(const AlgebraEntry& e, RealizationPtr r);
std::vector<Element> cartan_elements(const AlgebraEntry& e, const Realization& r);

/// Relation records in file order; side "" keeps every record.
std::vector<RelationRecord> load_relations(const Registry& reg, const AlgebraEntry& e, const std::string& side = "");
std::vector<RelationRecord> parse_relations(const std::string& jsonl);

/// Degree vector of a named grading over the realization coordinates.
std::vector<Rational> grading_vector(const AlgebraEntry& e, const Realization& r, const std::string& label);
/// Internal degree of every generator of a side under its grading.
std::map<std::string, int> generator_degrees(const AlgebraEntry& e, const Realization& r, const std::string& side);

/// Grading preset: registry entries first, then the series presets.
Grading preset(const Registry& reg, const std::string& algebra_id, const std::string& r);

}  // namespace vsa
