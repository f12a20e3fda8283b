#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsa/superpoly.hpp"

namespace vsa {

/// Superderivation sum_i f_i d/dx_i of a polynomial superalgebra.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(RingPtr ring);
  VectorField(RingPtr ring, std::vector<SuperPoly> components);
  /// The field f*d/dx_index.
  static VectorField basis(RingPtr ring, std::size_t index, SuperPoly f);
  static VectorField basis(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return comps_.size(); }
  const SuperPoly& component(std::size_t i) const { return comps_.at(i); }
  const std::vector<SuperPoly>& components() const { return comps_; }
  void set_component(std::size_t i, SuperPoly f);

  bool is_zero() const;
  /// Parity if every nonzero summand agrees; zero fields are even.
  std::optional<Parity> parity() const;
  std::pair<VectorField, VectorField> split_parity() const;
  int degree() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }
  VectorField operator-() const { return *this * Rational(-1); }
  friend bool operator==(const VectorField& a, const VectorField& b);
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_ring(const VectorField& o) const;

  RingPtr ring_;
  std::vector<SuperPoly> comps_;
};

/// Left multiplication of every component by f.
VectorField multiply(const SuperPoly& f, const VectorField& D);

SuperPoly apply(const VectorField& D, const SuperPoly& f);
VectorField bracket(const VectorField& a, const VectorField& b);
SuperPoly divergence(const VectorField& D);
VectorField euler(const RingPtr& ring, const std::vector<std::size_t>& excluded = {});

struct SubalgebraDescriptor {
  enum class Kind { Vect, Svect, SvectDeformed, SleHarmonic, Bab };
  Kind kind = Kind::Vect;
  Rational lambda = 0;
  Rational a = 0, b = 0;

  static SubalgebraDescriptor vect() { return {Kind::Vect, 0}; }
  static SubalgebraDescriptor svect() { return {Kind::Svect, 0}; }
  static SubalgebraDescriptor svect_deformed(const Rational& l) { return {Kind::SvectDeformed, l}; }
  static SubalgebraDescriptor sle_harmonic() { return {Kind::SleHarmonic, 0}; }
  static SubalgebraDescriptor b_ab(const Rational& a, const Rational& b) { return {Kind::Bab, 0, a, b}; }
};

/// Membership for descriptors expressible on the field alone; b_{a,b}
/// membership needs the generating function and lives with genfun.
bool is_member(const VectorField& D, const SubalgebraDescriptor& S);

/// Parses "x1*d/dx2 - xi1*d/dxi2"; every summand must end in d/dNAME.
VectorField parse_field(const RingPtr& ring, std::string_view text);

}  // namespace vsa
