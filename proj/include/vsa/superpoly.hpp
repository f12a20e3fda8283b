#pragma once

// Supercommutative polynomials over Q in declared even/odd indeterminates.
//
// Odd factors of a monomial are kept in ring declaration order; every product
// and derivative normalizes the Sign Rule sign at the point of insertion, so
// two polynomials are equal iff their term maps are equal.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsa/rational.hpp"

namespace vsa {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }
/// (-1)^{ab}
inline int sign_of(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }
const char* to_string(Parity p);

struct Indeterminate {
  std::string name;
  Parity parity = Parity::Even;
};

class Ring {
 public:
  explicit Ring(std::vector<Indeterminate> vars);

  std::size_t size() const { return vars_.size(); }
  const Indeterminate& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<Indeterminate>& vars() const { return vars_; }
  Parity parity(std::size_t i) const { return vars_[i].parity; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws if the name is not declared.
  std::size_t require(std::string_view name) const;

  bool operator==(const Ring& other) const;

 private:
  std::vector<Indeterminate> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<Indeterminate> vars);
/// Convenience: names listed as even then odd.
RingPtr make_ring(const std::vector<std::string>& even, const std::vector<std::string>& odd);

bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exps_; }
  int total_degree() const { return degree_; }
  void set(std::size_t i, std::uint16_t e);

  /// Parity of the monomial under the given ring.
  Parity parity(const Ring& ring) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

/// Graded lexicographic order: total degree, then exponents.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Product of two monomials as (sign, monomial); sign is 0 when an odd
/// indeterminate repeats.
std::pair<int, Monomial> multiply(const Ring& ring, const Monomial& a, const Monomial& b);

class SuperPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  SuperPoly() = default;
  explicit SuperPoly(RingPtr ring) : ring_(std::move(ring)) {}
  static SuperPoly constant(RingPtr ring, const Rational& c);
  static SuperPoly variable(RingPtr ring, std::size_t index);
  static SuperPoly variable(RingPtr ring, std::string_view name);
  static SuperPoly monomial(RingPtr ring, Monomial m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c*m, pruning zero coefficients.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  /// Parity if homogeneous; nullopt when monomials disagree. Zero is even.
  std::optional<Parity> parity() const;
  /// Splits into (even part, odd part).
  std::pair<SuperPoly, SuperPoly> split_parity() const;
  /// Largest total degree; -1 for zero.
  int degree() const;

  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  SuperPoly& operator*=(const Rational& c);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(SuperPoly a, const Rational& c) { return a *= c; }
  friend SuperPoly operator*(const Rational& c, SuperPoly a) { return a *= c; }
  SuperPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const SuperPoly& a, const SuperPoly& b);
  friend bool operator!=(const SuperPoly& a, const SuperPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_ring(const SuperPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Supercommutative product; throws Error on mismatched rings.
SuperPoly mul(const SuperPoly& p, const SuperPoly& q);
SuperPoly operator*(const SuperPoly& p, const SuperPoly& q);

/// Left partial derivative with respect to indeterminate `index`.
SuperPoly partial(const SuperPoly& p, std::size_t index);
SuperPoly partial(const SuperPoly& p, std::string_view name);

SuperPoly linear_combine(const std::vector<Rational>& coeffs, const std::vector<SuperPoly>& polys);

/// Parity, or nullopt for an inhomogeneous polynomial.
std::optional<Parity> parity_of(const SuperPoly& p);

SuperPoly power(const SuperPoly& p, unsigned k);

/// Parses "3/2*u1^2*xi1*xi2 - tau" over the given ring.
SuperPoly parse_poly(const RingPtr& ring, std::string_view text);

std::string format_monomial(const Ring& ring, const Monomial& m);
std::string format_coefficient_term(const Rational& c, const std::string& body, bool first);

}  // namespace vsa
