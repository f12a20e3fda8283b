#include "vsa/presentations.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "vsa/lexer.hpp"

namespace vsa {

BracketExpr BracketExpr::gen(std::string n) {
  BracketExpr e;
  e.kind = Kind::Gen;
  e.name = std::move(n);
  return e;
}

BracketExpr BracketExpr::bracket(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.kind = Kind::Bracket;
  e.items = {std::move(a), std::move(b)};
  return e;
}

BracketExpr BracketExpr::scale(Rational c, BracketExpr x) {
  c.canonicalize();
  if (c == 0 || x.kind == Kind::Zero) return {};
  if (c == 1) return x;
  if (x.kind == Kind::Scale) {
    x.scalar *= c;
    x.scalar.canonicalize();
    return x.scalar == 1 ? std::move(x.items[0]) : x;
  }
  BracketExpr e;
  e.kind = Kind::Scale;
  e.scalar = c;
  e.items = {std::move(x)};
  return e;
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> terms) {
  std::erase_if(terms, [](const BracketExpr& t) { return t.kind == Kind::Zero; });
  if (terms.empty()) return {};
  if (terms.size() == 1) return std::move(terms[0]);
  BracketExpr e;
  e.kind = Kind::Sum;
  e.items = std::move(terms);
  return e;
}

std::string BracketExpr::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Gen:
      return name;
    case Kind::Bracket:
      return "[" + items[0].to_string() + "," + items[1].to_string() + "]";
    case Kind::Scale:
      return vsa::to_string(scalar) + "*" +
             (items[0].kind == Kind::Sum ? "(" + items[0].to_string() + ")" : items[0].to_string());
    case Kind::Sum: {
      std::string s;
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& t = items[i];
        if (i && t.kind == Kind::Scale && t.scalar < 0) s += " - " + scale(-t.scalar, t.items[0]).to_string();
        else s += (i ? " + " : "") + t.to_string();
      }
      return s;
    }
  }
  return "";
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
  return a.kind == b.kind && a.name == b.name && a.scalar == b.scalar && a.items == b.items;
}

namespace {

struct ExprParser {
  Lexer lex;

  BracketExpr expr() {
    std::vector<BracketExpr> terms;
    bool neg = false;
    if (lex.accept('-')) neg = true;
    else lex.accept('+');
    terms.push_back(signed_term(neg));
    while (true) {
      if (lex.accept('+')) terms.push_back(signed_term(false));
      else if (lex.accept('-')) terms.push_back(signed_term(true));
      else break;
    }
    return BracketExpr::sum(std::move(terms));
  }

  BracketExpr signed_term(bool neg) {
    auto t = factor();
    return neg ? BracketExpr::scale(-1, std::move(t)) : t;
  }

  BracketExpr factor() {
    if (lex.peek_digit()) {
      Rational c = lex.rational();
      if (lex.accept('*')) return BracketExpr::scale(c, factor());
      if (c == 0) return {};
      lex.fail("a scalar must multiply a bracket expression");
    }
    if (lex.peek() == '(') {
      std::size_t save = lex.position();
      lex.expect('(');
      if (lex.peek_digit()) {
        Rational c = lex.rational();
        if (lex.accept(')') && lex.accept('*')) return BracketExpr::scale(c, factor());
      }
      lex.reset(save);
      lex.expect('(');
      auto e = expr();
      lex.expect(')');
      return e;
    }
    if (lex.accept('[')) {
      auto a = expr();
      lex.expect(',');
      auto b = expr();
      lex.expect(']');
      return BracketExpr::bracket(std::move(a), std::move(b));
    }
    if (!lex.peek_alpha()) lex.fail("expected a bracket expression");
    std::string id = lex.identifier();
    if (id == "ad" && lex.peek() == '(') {
      lex.expect('(');
      auto a = expr();
      lex.expect(',');
      long k = lex.integer();
      if (k < 1) lex.fail("ad power must be positive");
      lex.expect(',');
      auto b = expr();
      lex.expect(')');
      for (long i = 0; i < k; ++i) b = BracketExpr::bracket(a, std::move(b));
      return b;
    }
    return BracketExpr::gen(std::move(id));
  }
};

void expand_into(const BracketExpr& e, const Rational& c, std::vector<BracketTerm>& out) {
  using K = BracketExpr::Kind;
  switch (e.kind) {
    case K::Zero:
      return;
    case K::Gen:
      out.push_back({c, e});
      return;
    case K::Scale:
      expand_into(e.items[0], c * e.scalar, out);
      return;
    case K::Sum:
      for (const auto& t : e.items) expand_into(t, c, out);
      return;
    case K::Bracket: {
      auto a = expand(e.items[0]);
      auto b = expand(e.items[1]);
      for (const auto& x : a)
        for (const auto& y : b) out.push_back({c * x.coeff * y.coeff, BracketExpr::bracket(x.word, y.word)});
      return;
    }
  }
}

void count_into(const BracketExpr& w, std::map<std::string, int>& out) {
  if (w.kind == BracketExpr::Kind::Gen) ++out[w.name];
  for (const auto& i : w.items) count_into(i, out);
}


/// c with a = c b, when b is nonzero and a is a multiple of it.
std::optional<Rational> proportion(const Realization& r, const Element& a, const Element& b) {
  auto fb = r.flatten(b);
  if (fb.empty()) return std::nullopt;
  auto fa = r.flatten(a);
  if (fa.size() != fb.size()) return std::nullopt;
  Rational c = entry(fa, fb.front().first) / fb.front().second;
  c.canonicalize();
  for (const auto& [k, v] : fb)
    if (entry(fa, k) != c * v) return std::nullopt;
  return c;
}

std::string format_weight(const std::vector<Rational>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

}  // namespace

BracketExpr parse_expr(std::string_view text) {
  ExprParser p{Lexer(text)};
  auto e = p.expr();
  if (!p.lex.at_end()) p.lex.fail("trailing input");
  return e;
}

std::vector<BracketTerm> expand(const BracketExpr& e) {
  std::vector<BracketTerm> raw;
  expand_into(e, 1, raw);
  std::vector<BracketTerm> out;
  std::map<std::string, std::size_t> seen;
  for (auto& t : raw) {
    auto key = t.word.to_string();
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(t));
    } else {
      out[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(out, [](const BracketTerm& t) { return t.coeff == 0; });
  return out;
}

std::map<std::string, int> occurrences(const BracketExpr& word) {
  std::map<std::string, int> out;
  count_into(word, out);
  return out;
}

const Element* GeneratorTable::find(std::string_view name) const {
  for (const auto& [n, e] : generators)
    if (n == name) return &e;
  return nullptr;
}

std::vector<Element> GeneratorTable::elements() const {
  std::vector<Element> out;
  for (const auto& g : generators) out.push_back(g.second);
  return out;
}

Element Evaluator::eval_word(const BracketExpr& word) {
  if (word.kind == BracketExpr::Kind::Gen) {
    const Element* g = table_.find(word.name);
    if (!g) throw Error("unknown generator '" + word.name + "'");
    return *g;
  }
  if (word.kind != BracketExpr::Kind::Bracket) return eval(word);
  auto key = word.to_string();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Element v = realization().bracket(eval_word(word.items[0]), eval_word(word.items[1]));
  cache_.emplace(std::move(key), v);
  return v;
}

Element Evaluator::eval(const BracketExpr& e) {
  const auto& r = realization();
  Element acc = r.zero();
  for (const auto& t : expand(e)) acc = r.add(acc, r.scale(eval_word(t.word), t.coeff));
  return acc;
}

const char* to_string(RelationResult::Status s) {
  switch (s) {
    case RelationResult::Status::Exact:
      return "exact";
    case RelationResult::Status::Scalar:
      return "scalar";
    case RelationResult::Status::SignFlip:
      return "sign-flip";
    case RelationResult::Status::Failed:
      return "failed";
  }
  return "?";
}

std::vector<Rational> cartan_weight(const Realization& r, const std::vector<Element>& h, const Element& v) {
  if (r.is_zero(v)) throw Error("the zero element has no weight");
  std::vector<Rational> out;
  for (const auto& hi : h) {
    auto c = proportion(r, r.bracket(hi, v), v);
    if (!c) {
      if (r.is_zero(r.bracket(hi, v))) c = Rational(0);
      else throw Error("element is not a weight vector: " + r.to_string(v));
    }
    out.push_back(*c);
  }
  return out;
}

RelationResult check_relation(Evaluator& ev, const RelationRecord& rec, const CheckOptions& opt,
                              const std::vector<Element>& cartan, const std::map<std::string, int>& degrees) {
  const auto& r = ev.realization();
  RelationResult res;
  res.record = rec;

  auto lhs = parse_expr(rec.lhs);
  auto rhs = parse_expr(rec.rhs.empty() ? "0" : rec.rhs);
  auto lt = expand(lhs);
  auto rt = expand(rhs);

  if (!degrees.empty()) {
    const auto& first = !lt.empty() ? lt.front().word : (!rt.empty() ? rt.front().word : BracketExpr{});
    int d = 0;
    bool ok = !lt.empty() || !rt.empty();
    for (const auto& [g, m] : occurrences(first)) {
      auto it = degrees.find(g);
      if (it == degrees.end()) ok = false;
      else d += it->second * m;
    }
    if (ok) res.degree = d;
  }

  if (rec.cls == "weight") {
    Element v = ev.eval(lhs);
    auto w = cartan_weight(r, cartan, v);
    if (w == rec.weight) {
      res.status = RelationResult::Status::Exact;
    } else {
      res.status = RelationResult::Status::Failed;
      res.note = "computed weight " + format_weight(w) + ", printed " + format_weight(rec.weight);
    }
    return res;
  }

  std::vector<std::pair<Rational, Element>> terms;
  std::set<std::string> gens;
  std::vector<std::map<std::string, int>> occ;
  for (auto* side : {&lt, &rt}) {
    Rational s = side == &lt ? 1 : -1;
    for (const auto& t : *side) {
      terms.emplace_back(s * t.coeff, ev.eval_word(t.word));
      occ.push_back(occurrences(t.word));
      for (const auto& [g, m] : occ.back()) gens.insert(g);
    }
  }
  auto combine = [&](const std::vector<Rational>& c, std::size_t from, std::size_t to) {
    Element acc = r.zero();
    for (std::size_t i = from; i < to; ++i) acc = r.add(acc, r.scale(terms[i].second, c[i]));
    return acc;
  };
  std::vector<Rational> base;
  for (const auto& t : terms) base.push_back(t.first);

  Element diff = combine(base, 0, terms.size());
  if (r.is_zero(diff)) {
    res.status = RelationResult::Status::Exact;
    return res;
  }

  if (opt.scalar_search && !rt.empty() && !lt.empty()) {
    Element a = combine(base, 0, lt.size());
    Element b = r.scale(combine(base, lt.size(), terms.size()), -1);
    if (auto c = proportion(r, a, b); c && *c != 0) {
      res.status = RelationResult::Status::Scalar;
      res.scalar = *c;
      res.note = "lhs = " + to_string(*c) + " * rhs";
      return res;
    }
  }

  if (opt.sign_search && gens.size() <= opt.max_sign_generators) {
    std::vector<std::string> names(gens.begin(), gens.end());
    const std::uint32_t n = static_cast<std::uint32_t>(names.size());
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (auto m : masks) {
      std::vector<Rational> c = base;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        int total = 0;
        for (std::uint32_t k = 0; k < n; ++k)
          if (m & (1u << k)) {
            auto it = occ[i].find(names[k]);
            if (it != occ[i].end()) total += it->second;
          }
        if (total % 2) c[i] = -c[i];
      }
      if (r.is_zero(combine(c, 0, terms.size()))) {
        res.status = RelationResult::Status::SignFlip;
        for (std::uint32_t k = 0; k < n; ++k)
          if (m & (1u << k)) res.flipped.push_back(names[k]);
        return res;
      }
    }
  }

  res.status = RelationResult::Status::Failed;
  res.residual = r.to_string(diff);
  if (terms.size() > 1) {
    std::vector<SparseVec> cols;
    for (const auto& t : terms) cols.push_back(r.flatten(t.second));
    auto ns = nullspace(cols);
    if (ns.size() == 1) {
      // normalize to the printed coefficient of the first term, and report
      // rhs coefficients with the sign they have on the right
      Rational f = entry(ns[0], 0) == 0 ? Rational(1) : Rational(base[0] / entry(ns[0], 0));
      std::string s;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        Rational c = entry(ns[0], static_cast<Key>(i)) * f;
        if (i >= lt.size()) c = -c;
        c.canonicalize();
        res.dependency.push_back(c);
        s += (i ? ", " : "") + to_string(c);
      }
      res.note = "the bracket monomials satisfy one relation, with coefficients (" + s + ")";
    }
  }
  return res;
}

VerificationReport check_relations(Evaluator& ev, const std::vector<RelationRecord>& records, const CheckOptions& opt,
                                   const std::vector<Element>& cartan, const std::map<std::string, int>& degrees) {
  VerificationReport rep;
  for (const auto& rec : records) {
    auto res = check_relation(ev, rec, opt, cartan, degrees);
    switch (res.status) {
      case RelationResult::Status::Exact:
        ++rep.exact;
        break;
      case RelationResult::Status::Scalar:
        ++rep.scalar;
        break;
      case RelationResult::Status::SignFlip:
        ++rep.sign_flip;
        break;
      case RelationResult::Status::Failed:
        ++rep.failed;
        break;
    }
    rep.results.push_back(std::move(res));
  }
  return rep;
}

std::map<int, Superdim> generated_dims(RealizationPtr r, const std::vector<Element>& generators,
                                       const std::vector<Rational>& w, int lo, int hi) {
  auto g = GradedAlgebra::generate(std::move(r), generators, w, lo, hi, GradedAlgebra::Closure::AllPairs);
  auto d = g.dims();
  std::map<int, Superdim> out;
  for (int k = lo; k <= hi; ++k) out[k] = d.count(k) ? d.at(k) : Superdim{};
  return out;
}

}  // namespace vsa
