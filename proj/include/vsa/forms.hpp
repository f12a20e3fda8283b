#pragma once

// Polynomial differential forms. A form is a polynomial on the doubled ring
// (x_i, dx_i) with p(dx_i) = p(x_i) + 1, so wedge is the supercommutative
// product and d is the odd derivation sum_i dx_i d/dx_i.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "vsa/genfun.hpp"
#include "vsa/superpoly.hpp"
#include "vsa/vfield.hpp"

namespace vsa {

class FormSpace {
 public:
  explicit FormSpace(RingPtr base);

  const RingPtr& base() const { return base_; }
  const RingPtr& doubled() const { return doubled_; }
  std::size_t n() const { return base_->size(); }
  std::size_t dx(std::size_t i) const { return n() + i; }

 private:
  RingPtr base_;
  RingPtr doubled_;
};

using FormSpacePtr = std::shared_ptr<const FormSpace>;
FormSpacePtr make_form_space(RingPtr base);

class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(FormSpacePtr space, SuperPoly poly);
  static DiffForm zero(FormSpacePtr space);
  /// Lifts a function to a 0-form.
  static DiffForm function(FormSpacePtr space, const SuperPoly& f);
  static DiffForm differential(FormSpacePtr space, std::size_t i);

  const FormSpacePtr& space() const { return space_; }
  const SuperPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  std::optional<Parity> parity() const { return poly_.parity(); }
  /// Number of dx factors if every term agrees.
  std::optional<int> form_degree() const;

  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  DiffForm& operator*=(const Rational& c);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(DiffForm a, const Rational& c) { return a *= c; }
  friend DiffForm operator*(const Rational& c, DiffForm a) { return a *= c; }
  DiffForm operator-() const { return *this * Rational(-1); }
  friend bool operator==(const DiffForm& a, const DiffForm& b);
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FormSpacePtr space_;
  SuperPoly poly_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm ext_d(const DiffForm& w);
/// L_D as a derivation of the doubled ring.
VectorField lie_operator(const FormSpace& space, const VectorField& D);
DiffForm lie_derivative(const VectorField& D, const DiffForm& w);
/// Interior product of a field with a form.
DiffForm interior(const VectorField& D, const DiffForm& w);

/// f dx_i dx_j dx_k dx_l -> sign(ijklm) f d/dx_m over five even coordinates.
VectorField vol_identify(const DiffForm& w);

/// Preimage under d of a closed form with vanishing constant part, built
/// with the homotopy operator; nullopt when the input is not closed.
std::optional<DiffForm> exact_preimage(const DiffForm& w);

/// Parses "x5*dx4^dx5"; '^' between factors is the wedge, '^' before an
/// integer is a power.
DiffForm parse_form(const FormSpacePtr& space, std::string_view text);

/// Contact forms: alpha_1 for a K realization, alpha_0 for an M realization.
/// The printed K_f and M_f preserve dt - (rest); `printed_signs` gives
/// dt + (rest) as written next to the definition of the forms.
DiffForm contact_form(const FormSpacePtr& space, const ContactRealization& r, bool printed_signs = false);

/// e(5|10): divergence-free fields on five even coordinates plus closed
/// 2-forms, the odd-odd bracket being the wedge product read through vol^{-1}.
struct E510Element {
  VectorField even;
  DiffForm odd;

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
  std::optional<Parity> parity() const;
  E510Element& operator+=(const E510Element& o);
  E510Element& operator*=(const Rational& c);
  friend E510Element operator+(E510Element a, const E510Element& b) { return a += b; }
  friend E510Element operator*(E510Element a, const Rational& c) { return a *= c; }
  friend bool operator==(const E510Element& a, const E510Element& b) {
    return a.even == b.even && a.odd == b.odd;
  }
  std::string to_string() const;
};

FormSpacePtr e510_space();
E510Element e510_zero();
E510Element e510_bracket(const E510Element& a, const E510Element& b);
/// Accepts either a field ("x1*d/dx2") or a 2-form ("x5*dx4^dx5").
E510Element parse_e510(std::string_view text);
/// Divergence-free even part and closed odd 2-form part.
bool e510_valid(const E510Element& a);

}  // namespace vsa
