#include "vsa/grading.hpp"

#include <regex>

namespace vsa {

std::vector<Rational> Grading::vector_for(const Ring& coords) const {
  std::vector<Rational> w;
  w.reserve(coords.size());
  for (const auto& v : coords.vars()) {
    auto it = degrees.find(v.name);
    if (it == degrees.end()) throw Error("grading '" + label + "' does not cover coordinate " + v.name);
    w.emplace_back(it->second);
  }
  return w;
}

std::optional<Grading> series_preset(const std::string& id, const std::string& r) {
  if (r != "0") return std::nullopt;
  std::smatch m;
  Grading g;
  g.label = "0";
  static const std::regex vect_re(R"(vect\((\d+)\|(\d+)\))");
  static const std::regex k_re(R"(k\((\d+)\|(\d+)\))");
  static const std::regex m_re(R"(m\((\d+)\))");
  if (std::regex_match(id, m, vect_re)) {
    int n = std::stoi(m[1]), k = std::stoi(m[2]);
    for (int i = 1; i <= n; ++i) g.degrees["x" + std::to_string(i)] = 1;
    for (int i = 1; i <= k; ++i) g.degrees["th" + std::to_string(i)] = 1;
    return g;
  }
  if (std::regex_match(id, m, k_re)) {
    int n = std::stoi(m[1]), k = std::stoi(m[2]);
    if (n % 2 == 0) return std::nullopt;
    g.degrees["t"] = 2;
    for (int i = 1; i <= n / 2; ++i) g.degrees["p" + std::to_string(i)] = g.degrees["q" + std::to_string(i)] = 1;
    for (int i = 1; i <= k / 2; ++i) g.degrees["xi" + std::to_string(i)] = g.degrees["eta" + std::to_string(i)] = 1;
    if (k % 2) g.degrees["theta"] = 1;
    return g;
  }
  if (std::regex_match(id, m, m_re)) {
    int n = std::stoi(m[1]);
    g.degrees["tau"] = 2;
    for (int i = 1; i <= n; ++i) g.degrees["q" + std::to_string(i)] = g.degrees["xi" + std::to_string(i)] = 1;
    return g;
  }
  return std::nullopt;
}

std::optional<Rational> degree_of(const Realization& r, const Element& el, const std::vector<Rational>& w) {
  auto res = weight_of(r, el, {w});
  if (!res) return std::nullopt;
  return (*res)[0];
}

std::optional<Rational> degree_of(const Realization& r, const Element& el, const Grading& g) {
  return degree_of(r, el, g.vector_for(*r.coordinates()));
}

std::optional<std::vector<Rational>> weight_of(const Realization& r, const Element& el,
                                               const std::vector<std::vector<Rational>>& torus) {
  auto v = r.flatten(el);
  if (v.empty()) return std::vector<Rational>(torus.size(), Rational(0));
  std::optional<std::vector<Rational>> out;
  for (const auto& [k, c] : v) {
    const auto& f = r.key_form(k);
    std::vector<Rational> wt;
    wt.reserve(torus.size());
    for (const auto& w : torus) {
      Rational s = 0;
      for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * w.at(i);
      wt.push_back(s);
    }
    if (!out) out = std::move(wt);
    else if (*out != wt) return std::nullopt;
  }
  return out;
}

std::vector<std::vector<Rational>> compatible_torus(const Realization& r, const std::vector<Element>& elements) {
  const std::size_t n = r.coordinates()->size();
  // unknowns are the coordinate weights; each equation is a row over them
  std::vector<std::vector<Rational>> eqs = r.weight_constraints();
  for (const auto& el : elements) {
    auto v = r.flatten(el);
    for (std::size_t j = 1; j < v.size(); ++j) {
      std::vector<Rational> row(n);
      const auto& a = r.key_form(v[0].first);
      const auto& b = r.key_form(v[j].first);
      for (std::size_t i = 0; i < n; ++i) row[i] = a[i] - b[i];
      eqs.push_back(std::move(row));
    }
  }
  std::vector<SparseVec> columns(n);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t i = 0; i < n; ++i)
      if (eqs[e][i] != 0) columns[i].emplace_back(static_cast<Key>(e), eqs[e][i]);
  std::vector<std::vector<Rational>> out;
  for (const auto& b : nullspace(columns)) {
    std::vector<Rational> w(n, Rational(0));
    Integer den = 1;
    for (const auto& [k, c] : b) den = lcm(den, Integer(c.get_den()));
    for (const auto& [k, c] : b) w[k] = c * den;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace vsa
