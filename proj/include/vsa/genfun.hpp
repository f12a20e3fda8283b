#pragma once

// Generating functions of contact (K_f), pericontact (M_f), Hamiltonian
// (H_f) and periplectic (Le_f) vector fields and their brackets.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsa/superpoly.hpp"
#include "vsa/vfield.hpp"

namespace vsa {

struct ContactRealization {
  enum class Kind { K, M, H, Le };
  enum class Variant { Theta, XiEta, XiEtaTheta };

  Kind kind = Kind::K;
  Variant variant = Variant::Theta;
  RingPtr ring;
  std::optional<std::size_t> t;  // t for K, tau for M
  // K, H: (p_i, q_i); M, Le: (q_i, xi_i)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> xieta;
  std::vector<std::size_t> theta;

  std::size_t n() const { return pairs.size(); }
  /// Number of odd coordinates paired by the symplectic part.
  std::size_t m() const { return 2 * xieta.size() + theta.size(); }
  std::vector<std::size_t> euler_excluded() const;
  VectorField euler() const;

  /// k(2n+1|m): t, p1..pn, q1..qn, then xi/eta or th.
  static ContactRealization k(std::size_t n, std::size_t m, Variant v, int first = 1);
  /// h(2n|m): the same coordinates without t.
  static ContactRealization h(std::size_t n, std::size_t m, Variant v, int first = 1);
  /// m(n): q1..qn even, xi1..xin and tau odd.
  static ContactRealization m_series(std::size_t n, int first = 1);
  /// le(n): q1..qn, xi1..xin.
  static ContactRealization le(std::size_t n, int first = 1);
};

const char* to_string(ContactRealization::Kind k);

VectorField hamilton_field(const SuperPoly& f, const ContactRealization& r);
VectorField contact_field(const SuperPoly& f, const ContactRealization& r);
VectorField le_field(const SuperPoly& f, const ContactRealization& r);
VectorField pericontact_field(const SuperPoly& f, const ContactRealization& r);
/// K_f, M_f, H_f or Le_f according to the realization kind.
VectorField field_of(const SuperPoly& f, const ContactRealization& r);

SuperPoly poisson(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r);
SuperPoly buttin(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r);
SuperPoly kb(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r);
SuperPoly mb(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r);
/// The bracket matching field_of: [F_f, F_g] = F_{function_bracket(f, g)}.
SuperPoly function_bracket(const SuperPoly& f, const SuperPoly& g, const ContactRealization& r);

SuperPoly odd_laplacian(const SuperPoly& f, const ContactRealization& r);

/// (2 - E)(f)
SuperPoly two_minus_euler(const SuperPoly& f, const ContactRealization& r);

/// Membership of M_f (or K_f for divergence descriptors) in the given subalgebra.
bool is_member(const SuperPoly& f, const ContactRealization& r, const SubalgebraDescriptor& S);

}  // namespace vsa
