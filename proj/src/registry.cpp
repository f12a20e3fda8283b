#include "vsa/registry.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace vsa {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<std::string, std::string>> named_list(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : j) out.emplace_back(item.at(0).get<std::string>(), item.at(1).get<std::string>());
  return out;
}

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

AlgebraEntry parse_entry(const std::string& id, const json& j, const std::filesystem::path& dir) {
  AlgebraEntry e;
  e.id = id;
  e.name = j.value("name", id);
  if (j.contains("aliases")) e.aliases = j["aliases"].get<std::vector<std::string>>();
  const auto& r = j.at("realization");
  e.realization_kind = r.at("kind").get<std::string>();
  if (r.contains("even")) e.even = r["even"].get<std::vector<std::string>>();
  if (r.contains("odd")) e.odd = r["odd"].get<std::vector<std::string>>();
  e.n = r.value("n", std::size_t{0});
  e.m = r.value("m", std::size_t{0});
  e.variant = r.value("variant", std::string("Theta"));
  e.first = r.value("first", 1);
  for (const auto& [label, degs] : j.at("gradings").items()) {
    Grading g;
    g.label = label;
    for (const auto& [c, d] : degs.items()) g.degrees[c] = d.get<int>();
    e.gradings[label] = std::move(g);
  }
  json gens;
  if (j.contains("generators")) gens = json::parse(read_file(dir / j["generators"].get<std::string>()));
  for (const auto& [side, info] : j.at("sides").items()) {
    SideInfo s;
    s.grading = info.at("grading").get<std::string>();
    s.depth = info.value("depth", 0);
    if (gens.contains(side)) s.generators = named_list(gens[side]);
    e.sides[side] = std::move(s);
  }
  if (gens.contains("cartan")) e.cartan = named_list(gens["cartan"]);
  e.relations_file = j.value("relations", std::string());
  if (j.contains("negative_dim")) {
    const auto& d = j["negative_dim"];
    e.printed_negative_dim = std::make_pair(d.at(0).get<std::size_t>(), d.at(1).get<std::size_t>());
    e.dims_grading = j.value("dims_grading", std::string("0"));
  }
  if (j.contains("prolong")) {
    ProlongInfo p;
    p.grading = j["prolong"].value("grading", std::string("0"));
    p.partial = j["prolong"].value("partial", false);
    p.seed_degree = j["prolong"].value("seed_degree", 1);
    if (j["prolong"].contains("splitting")) p.splitting = named_list(j["prolong"]["splitting"]);
    e.prolong = p;
  }
  return e;
}

ContactRealization::Variant parse_variant(const std::string& v) {
  using V = ContactRealization::Variant;
  if (v == "Theta") return V::Theta;
  if (v == "XiEta") return V::XiEta;
  if (v == "XiEtaTheta") return V::XiEtaTheta;
  throw Error("unknown variant " + v);
}

}  // namespace

std::filesystem::path Registry::default_dir() {
  if (const char* env = std::getenv("SUPERLIE_DATA"); env && *env) return env;
  return VSA_DEFAULT_DATA_DIR;
}

Registry Registry::load(const std::filesystem::path& dir) {
  Registry reg;
  reg.dir_ = dir;
  json j;
  try {
    j = json::parse(read_file(dir / "registry.json"));
    for (const auto& [id, entry] : j.at("algebras").items()) reg.entries_.push_back(parse_entry(id, entry, dir));
  } catch (const json::exception& ex) {
    throw Error(std::string("malformed registry: ") + ex.what());
  }
  return reg;
}

const AlgebraEntry* Registry::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id || e.name == id) return &e;
    for (const auto& a : e.aliases)
      if (a == id) return &e;
  }
  return nullptr;
}

const AlgebraEntry& Registry::require(const std::string& id) const {
  if (auto* e = find(id)) return *e;
  throw Error("unknown algebra '" + id + "'");
}

RealizationPtr make_realization(const AlgebraEntry& e) {
  if (e.realization_kind == "vect") return Realization::vect(make_ring(e.even, e.odd));
  if (e.realization_kind == "k")
    return Realization::functions(ContactRealization::k(e.n, e.m, parse_variant(e.variant), e.first));
  if (e.realization_kind == "m") return Realization::functions(ContactRealization::m_series(e.n, e.first));
  if (e.realization_kind == "e510") return Realization::e510();
  throw Error("unknown realization kind " + e.realization_kind);
}

GeneratorTable generator_table(const AlgebraEntry& e, RealizationPtr r, const std::string& side) {
  auto it = e.sides.find(side);
  if (it == e.sides.end()) throw Error("algebra " + e.id + " has no side '" + side + "'");
  GeneratorTable t;
  t.realization = r;
  for (const auto& [name, expr] : it->second.generators) t.generators.emplace_back(name, r->parse(expr));
  return t;
}

GeneratorTable full_table(const AlgebraEntry& e, RealizationPtr r) {
  GeneratorTable t;
  t.realization = r;
  for (const auto& [side, info] : e.sides)
    for (const auto& [name, expr] : info.generators)
      if (!t.find(name)) t.generators.emplace_back(name, r->parse(expr));
  for (const auto& [name, expr] : e.cartan) t.generators.emplace_back(name, r->parse(expr));
  return t;
}

std::vector<Element> cartan_elements(const AlgebraEntry& e, const Realization& r) {
  std::vector<Element> out;
  for (const auto& [name, expr] : e.cartan) out.push_back(r.parse(expr));
  return out;
}

std::vector<RelationRecord> parse_relations(const std::string& text) {
  std::vector<RelationRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& ex) {
      throw Error("relation file line " + std::to_string(no) + ": " + ex.what());
    }
    RelationRecord r;
    r.algebra = j.value("algebra", std::string());
    r.side = j.value("side", std::string());
    r.cls = j.value("class", std::string());
    r.lhs = j.value("lhs", std::string());
    r.rhs = j.value("rhs", std::string("0"));
    if (j.contains("weight"))
      for (const auto& x : j["weight"]) r.weight.push_back(json_rational(x));
    r.line = no;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RelationRecord> load_relations(const Registry& reg, const AlgebraEntry& e, const std::string& side) {
  if (e.relations_file.empty()) return {};
  auto all = parse_relations(read_file(reg.dir() / e.relations_file));
  if (side.empty()) return all;
  std::vector<RelationRecord> out;
  for (auto& r : all)
    if (r.side == side) out.push_back(std::move(r));
  return out;
}

std::vector<Rational> grading_vector(const AlgebraEntry& e, const Realization& r, const std::string& label) {
  auto it = e.gradings.find(label);
  if (it == e.gradings.end()) throw Error("algebra " + e.id + " has no grading '" + label + "'");
  return it->second.vector_for(*r.coordinates());
}

std::map<std::string, int> generator_degrees(const AlgebraEntry& e, const Realization& r, const std::string& side) {
  const auto& info = e.sides.at(side);
  auto w = grading_vector(e, r, info.grading);
  std::map<std::string, int> out;
  for (const auto& [name, expr] : info.generators) {
    auto d = degree_of(r, r.parse(expr), w);
    if (!d) throw Error("generator " + name + " of " + e.id + " is not homogeneous");
    if (d->get_den() != 1) throw Error("generator " + name + " has fractional degree");
    out[name] = static_cast<int>(d->get_num().get_si());
  }
  return out;
}

Grading preset(const Registry& reg, const std::string& algebra_id, const std::string& r) {
  if (const auto* e = reg.find(algebra_id)) {
    auto it = e->gradings.find(r);
    if (it != e->gradings.end()) return it->second;
  }
  if (auto g = series_preset(algebra_id, r)) return *g;
  throw Error("no grading '" + r + "' for " + algebra_id);
}

}  // namespace vsa
