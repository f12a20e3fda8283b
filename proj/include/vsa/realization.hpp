#pragma once

// A realization fixes how algebra elements are represented (vector fields,
// generating functions, or e(5|10) pairs) and exposes them to linear algebra:
// every element flattens to a sparse vector over interned basis keys, and each
// key carries a weight that is a linear form in the coordinate degrees.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "vsa/forms.hpp"
#include "vsa/genfun.hpp"
#include "vsa/linalg.hpp"
#include "vsa/vfield.hpp"

namespace vsa {

using Element = std::variant<VectorField, SuperPoly, E510Element>;

class Realization {
 public:
  enum class Kind { Vect, Functions, E510 };

  static std::shared_ptr<Realization> vect(RingPtr ring);
  static std::shared_ptr<Realization> functions(ContactRealization c);
  static std::shared_ptr<Realization> e510();

  Kind kind() const { return kind_; }
  std::string describe() const;
  /// Coordinates whose degrees define gradings.
  const RingPtr& coordinates() const { return coords_; }
  const ContactRealization& contact() const;

  Element zero() const;
  Element parse(std::string_view text) const;
  Element bracket(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& c) const;
  Element combine(const std::vector<Rational>& coeffs, const std::vector<Element>& els) const;
  bool is_zero(const Element& a) const;
  /// Parity of the algebra element (for M and Le functions, one more than
  /// the parity of the generating function); nullopt when inhomogeneous.
  std::optional<Parity> parity(const Element& a) const;
  std::string to_string(const Element& a) const;
  /// Field form of a function element; identity on fields.
  VectorField as_field(const Element& a) const;

  SparseVec flatten(const Element& a) const;
  Element unflatten(const SparseVec& v) const;
  Element key_element(Key k) const;
  Parity key_parity(Key k) const;
  /// Weight of a key as a linear form over the coordinates.
  const std::vector<Rational>& key_form(Key k) const;
  /// Rows c with c . w = 0 whenever w is a coordinate weight compatible with
  /// the bracket.
  std::vector<std::vector<Rational>> weight_constraints() const;
  /// Keys of the basis monomials whose weight under w is `degree`.
  /// Every coordinate of positive parity-even type needs positive degree
  /// unless a cap on its exponent is given.
  std::vector<Key> keys_of_degree(const std::vector<Rational>& w, const Rational& degree,
                                  const std::vector<int>& exponent_caps = {}) const;

  std::size_t key_count() const { return keys_.size(); }

 private:
  struct KeyInfo {
    int comp;
    Monomial mono;
    Parity parity;
    std::vector<Rational> form;
  };

  Realization() = default;
  Key intern(int comp, const Monomial& m) const;
  std::vector<Rational> shift() const;
  int component_count() const;
  const Ring& component_ring(int comp) const;
  Parity component_parity(int comp) const;
  std::vector<Rational> form_of(int comp, const Monomial& m) const;

  Kind kind_ = Kind::Vect;
  RingPtr coords_;
  std::optional<ContactRealization> contact_;
  FormSpacePtr forms_;

  struct VecHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const;
  };
  mutable std::vector<KeyInfo> keys_;
  mutable std::unordered_map<std::vector<std::uint16_t>, Key, VecHash> index_;
};

using RealizationPtr = std::shared_ptr<Realization>;

/// Super Jacobi identity residual for homogeneous inputs.
Element jacobi_residual(const Realization& r, const Element& a, const Element& b, const Element& c);

}  // namespace vsa
