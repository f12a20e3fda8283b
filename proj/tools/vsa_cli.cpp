// vsa: relation verification, prolongation dimensions and homology of the
// tabulated vectorial Lie superalgebras.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <set>

#include "vsa/algebras.hpp"
#include "vsa/prolong.hpp"

using namespace vsa;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string algebra;
  std::string side;
  std::string r = "0";
  int max_degree = 8;
  bool allow_scalar = false;
  bool representatives = false;
  std::string format = "json";
};

class UsageError : public Error {
 public:
  using Error::Error;
};

const AlgebraEntry& lookup(const Registry& reg, const std::string& id) {
  const auto* e = reg.find(id);
  if (!e) throw UsageError("unknown algebra '" + id + "'");
  return *e;
}

void emit(const ojson& j, const Options& opt) {
  if (opt.format == "json") std::cout << j.dump() << "\n";
}

int cmd_verify(const Options& opt) {
  auto reg = Registry::load();
  const auto& e = lookup(reg, opt.algebra);
  static const std::set<std::string> sides = {"+", "-", "weight", "cross", "all"};
  if (!sides.count(opt.side)) throw UsageError("side must be one of +, -, weight, cross, all");
  auto r = make_realization(e);
  auto records = load_relations(reg, e, opt.side == "all" ? "" : opt.side);
  Evaluator ev(full_table(e, r));
  auto cartan = cartan_elements(e, *r);

  ojson out;
  out["algebra"] = e.id;
  out["side"] = opt.side;
  ojson rows = ojson::array();
  std::size_t exact = 0, scalar = 0, flip = 0, failed = 0;
  for (const auto& rec : records) {
    std::map<std::string, int> degrees;
    if (e.sides.count(rec.side)) degrees = generator_degrees(e, *r, rec.side);
    auto res = check_relation(ev, rec, {}, cartan, degrees);
    ojson row;
    row["line"] = rec.line;
    row["side"] = rec.side;
    row["class"] = rec.cls;
    row["lhs"] = rec.lhs;
    row["rhs"] = rec.rhs;
    row["status"] = to_string(res.status);
    if (res.degree) row["degree"] = *res.degree;
    switch (res.status) {
      case RelationResult::Status::Exact:
        ++exact;
        break;
      case RelationResult::Status::Scalar:
        ++scalar;
        row["scalar"] = to_string(res.scalar);
        break;
      case RelationResult::Status::SignFlip:
        ++flip;
        row["flipped"] = res.flipped;
        break;
      case RelationResult::Status::Failed:
        ++failed;
        if (!res.residual.empty()) row["residual"] = res.residual;
        break;
    }
    if (!res.note.empty()) row["note"] = res.note;
    rows.push_back(std::move(row));
  }
  out["results"] = rows;
  out["summary"] = {{"rows", records.size()}, {"exact", exact}, {"scalar", scalar}, {"sign_flip", flip}, {"failed", failed}};
  const bool ok = failed == 0 && (opt.allow_scalar || scalar + flip == 0);
  out["pass"] = ok;
  if (opt.format == "pretty") {
    for (const auto& row : out["results"]) {
      std::printf("%4d %-6s %-6s %-9s %s = %s", row["line"].get<int>(), row["side"].get<std::string>().c_str(),
                  row["class"].get<std::string>().c_str(), row["status"].get<std::string>().c_str(),
                  row["lhs"].get<std::string>().c_str(), row["rhs"].get<std::string>().c_str());
      if (row.contains("scalar")) std::printf("  [c = %s]", row["scalar"].get<std::string>().c_str());
      if (row.contains("flipped")) std::printf("  [flip %s]", row["flipped"].dump().c_str());
      if (row.contains("note")) std::printf("  [%s]", row["note"].get<std::string>().c_str());
      if (row.contains("residual")) std::printf("\n       residual: %s", row["residual"].get<std::string>().c_str());
      std::printf("\n");
    }
    std::printf("%s %s: %zu rows, %zu exact, %zu scalar, %zu sign-flip, %zu failed\n", e.id.c_str(), opt.side.c_str(),
                records.size(), exact, scalar, flip, failed);
  }
  emit(out, opt);
  return ok ? kExitOk : kExitFailed;
}

ojson dims_json(const std::map<int, Superdim>& dims) {
  ojson a = ojson::array();
  for (const auto& [d, s] : dims) a.push_back({{"degree", d}, {"even", s.even}, {"odd", s.odd}});
  return a;
}

int cmd_h2(const Options& opt) {
  auto reg = Registry::load();
  const auto& e = lookup(reg, opt.algebra);
  std::string side = opt.side;
  if (side.empty()) side = e.sides.count("-") ? "-" : "+";
  if (!e.sides.count(side)) throw UsageError("algebra " + e.id + " has no side '" + side + "'");
  auto r = make_realization(e);
  auto records = load_relations(reg, e, side);
  auto h = side_homology(e, r, side, opt.max_degree, opt.representatives, &records);
  auto gens = generator_counts(e, *r, side);
  std::map<int, std::size_t> rels;
  if (!records.empty()) rels = relation_counts(e, *r, records, side);

  ojson out;
  out["algebra"] = e.id;
  out["side"] = side;
  out["window"] = {h.window.lo, h.window.hi};
  out["dims"] = dims_json(h.dims);
  ojson degs = ojson::array();
  std::size_t h1 = 0, h2 = 0;
  for (const auto& d : h.degrees) {
    ojson row{{"degree", d.degree}, {"h1", d.h1}, {"h2", d.h2}};
    row["printed_generators"] = gens.count(d.degree) ? gens.at(d.degree) : 0;
    row["printed_relations"] = rels.count(d.degree) ? rels.at(d.degree) : 0;
    row["relation_rank"] = d.relation_rank;
    if (opt.representatives) row["representatives"] = d.representatives;
    degs.push_back(std::move(row));
    h1 += d.h1;
    h2 += d.h2;
  }
  out["degrees"] = degs;
  out["h1"] = h1;
  out["h2"] = h2;
  out["relation_cycles"] = h.relation_cycles;
  out["failing_relation_lines"] = h.failing_lines;
  if (opt.format == "pretty") {
    std::printf("%s %s, degrees %d..%d\n", e.id.c_str(), side.c_str(), h.window.lo, h.window.hi);
    std::printf("%7s %8s %5s %5s %9s %9s %9s\n", "degree", "dim", "H1", "H2", "gens", "relations", "rel.rank");
    for (const auto& row : degs) {
      int d = row["degree"];
      auto s = h.dims.count(d) ? to_string(h.dims.at(d)) : std::string("0|0");
      std::printf("%7d %8s %5zu %5zu %9zu %9zu %9zu\n", d, s.c_str(), row["h1"].get<std::size_t>(),
                  row["h2"].get<std::size_t>(), row["printed_generators"].get<std::size_t>(),
                  row["printed_relations"].get<std::size_t>(), row["relation_rank"].get<std::size_t>());
    }
    if (!h.failing_lines.empty()) std::printf("relations that do not hold: lines %s\n", ojson(h.failing_lines).dump().c_str());
  }
  emit(out, opt);
  return kExitOk;
}

int cmd_prolong(const Options& opt) {
  auto reg = Registry::load();
  const auto& e = lookup(reg, opt.algebra);
  if (!e.gradings.count(opt.r)) throw UsageError("algebra " + e.id + " has no grading '" + opt.r + "'");
  auto res = prolong_algebra(e, opt.r, opt.max_degree);
  ojson out;
  out["algebra"] = e.id;
  out["r"] = opt.r;
  out["method"] = res.method;
  out["dims"] = dims_json(res.dims);
  ojson sum{{"even", 0}, {"odd", 0}};
  Superdim neg;
  for (const auto& [d, s] : res.dims)
    if (d < 0) {
      neg.even += s.even;
      neg.odd += s.odd;
    }
  out["negative"] = {{"even", neg.even}, {"odd", neg.odd}};
  if (!res.splitting.empty()) {
    ojson split = ojson::array();
    for (const auto& part : res.splitting)
      split.push_back({{"degree", part.degree},
                       {"module", part.name},
                       {"even", part.dim.even},
                       {"odd", part.dim.odd},
                       {"in_algebra", part.in_algebra}});
    out["splitting"] = split;
    out["splitting_direct"] = res.splitting_is_direct;
  }
  if (opt.format == "pretty") {
    std::printf("%s, grading %s (%s)\n", e.id.c_str(), opt.r.c_str(), res.method.c_str());
    for (const auto& [d, s] : res.dims) std::printf("%4d  %s\n", d, to_string(s).c_str());
    std::printf("g_- = %s\n", to_string(neg).c_str());
    for (const auto& part : res.splitting)
      std::printf("g_%d contains %s of dimension %s\n", part.degree, part.name.c_str(), to_string(part.dim).c_str());
    if (!res.splitting.empty())
      std::printf("the modules %s a direct sum exhausting the full prolongation g_1\n",
                  res.splitting_is_direct ? "form" : "do not form");
  }
  emit(out, opt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations of vectorial Lie superalgebras"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    sub->add_flag("--pretty", [&](std::int64_t) { opt.format = "pretty"; }, "same as --format pretty");
  };

  auto* verify = app.add_subcommand("verify", "check the tabulated relations of an algebra");
  verify->add_option("algebra", opt.algebra)->required();
  verify->add_option("side", opt.side, "+, -, weight, cross or all")->required();
  verify->add_flag("--allow-scalar", opt.allow_scalar, "accept scalar and sign-flip statuses");
  add_common(verify);

  auto* h2 = app.add_subcommand("h2", "H1 and H2 of G+ or G- per internal degree");
  h2->add_option("algebra", opt.algebra)->required();
  h2->add_option("side", opt.side, "+ or -");
  h2->add_option("--max", opt.max_degree, "degree bound");
  h2->add_flag("--representatives", opt.representatives, "print representative cycles");
  add_common(h2);

  auto* prolong = app.add_subcommand("prolong", "dimensions of the graded components");
  prolong->alias("prolong-dims");
  prolong->add_option("algebra", opt.algebra)->required();
  prolong->add_option("--r", opt.r, "grading label");
  prolong->add_option("--max", opt.max_degree, "degree bound");
  add_common(prolong);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt);
    if (h2->parsed()) return cmd_h2(opt);
    if (prolong->parsed()) return cmd_prolong(opt);
  } catch (const UsageError& e) {
    std::cerr << "vsa: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "vsa: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
