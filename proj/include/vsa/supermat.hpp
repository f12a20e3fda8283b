#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vsa/superpoly.hpp"

namespace vsa {

struct Format {
  std::vector<Parity> parities;

  std::size_t size() const { return parities.size(); }
  Parity operator[](std::size_t i) const { return parities[i]; }
  /// n_even even rows followed by n_odd odd rows.
  static Format standard(std::size_t n_even, std::size_t n_odd);
  bool operator==(const Format& o) const { return parities == o.parities; }
};

class SuperMatrix {
 public:
  SuperMatrix() = default;
  explicit SuperMatrix(Format format);
  /// Row-major entries; throws when the entries are not of the given parity.
  SuperMatrix(Format format, std::vector<Rational> entries, Parity parity);
  /// Row-major entries of any parity.
  static SuperMatrix from_entries(Format format, std::vector<Rational> entries);
  static SuperMatrix identity(Format format);
  static SuperMatrix unit(Format format, std::size_t i, std::size_t j);

  const Format& format() const { return fmt_; }
  std::size_t size() const { return fmt_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * size() + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * size() + j]; }
  const std::vector<Rational>& entries() const { return a_; }

  bool is_zero() const;
  /// Parity of E_ij is p_i + p_j; nullopt when both parts are present.
  std::optional<Parity> parity() const;
  std::pair<SuperMatrix, SuperMatrix> split_parity() const;

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  SuperMatrix& operator*=(const Rational& c);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(SuperMatrix a, const Rational& c) { return a *= c; }
  friend SuperMatrix operator*(const Rational& c, SuperMatrix a) { return a *= c; }
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.fmt_ == b.fmt_ && a.a_ == b.a_; }
  friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Format fmt_;
  std::vector<Rational> a_;
};

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b);
/// [X, Y] = XY - (-1)^{p(X)p(Y)} YX, extended bilinearly.
SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y);
Rational supertrace(const SuperMatrix& a);
/// For (A B; B A) in q(n): tr B. Throws outside q(n).
Rational queertrace(const SuperMatrix& a);
SuperMatrix supertranspose(const SuperMatrix& a);
/// X^{st} B + (-1)^{p(X)p(B)} B X = 0
bool preserves_form(const SuperMatrix& x, const SuperMatrix& b);

SuperMatrix form_b_ev(std::size_t m, std::size_t n);
SuperMatrix form_b_ev_prime(std::size_t m, std::size_t n);
/// J_{2n} in format (n|n)
SuperMatrix form_b_odd(std::size_t n);
/// Pi_{2n} in format (n|n)
SuperMatrix form_pi(std::size_t n);

/// 4x4 ordinary matrices as row-major vectors.
using Mat4 = std::vector<Rational>;
/// tilde c_ij = c_kl for (1234) -> (ijkl) even, extended linearly on skew matrices.
Mat4 tilde(const Mat4& c);

/// x + d z with x in spe(4) written as (a b; c -a^t), b symmetric, c skew.
struct AsElement {
  SuperMatrix x = SuperMatrix(Format::standard(4, 4));
  Rational d = 0;

  static AsElement from_blocks(const Mat4& a, const Mat4& b, const Mat4& c, const Rational& d);
  static AsElement central(const Rational& d);
  Mat4 block_a() const;
  Mat4 block_b() const;
  Mat4 block_c() const;

  bool is_zero() const { return x.is_zero() && d == 0; }
  std::optional<Parity> parity() const;
  AsElement& operator+=(const AsElement& o);
  AsElement& operator*=(const Rational& c);
  friend AsElement operator+(AsElement a, const AsElement& b) { return a += b; }
  friend AsElement operator*(AsElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const AsElement& a, const AsElement& b) { return a.x == b.x && a.d == b.d; }
  std::string to_string() const;
};

bool as_valid(const AsElement& a);
AsElement as_bracket(const AsElement& a, const AsElement& b);
/// T_lambda: (a b; c -a^t) + d z -> (a, b + 2 lambda tilde c; c, -a^t) + lambda d 1_{4|4},
/// the normalization matching the cocycle tr c tilde c'. `printed_signs` uses
/// b - lambda tilde c as written next to the cocycle; it is a homomorphism only for lambda = 0.
SuperMatrix spinor_rep(const Rational& lambda, const AsElement& a, bool printed_signs = false);

/// spe(n)_{a,b} element x + alpha z + beta d with z = 1_{2n}, d = diag(1_n, -1_n).
SuperMatrix spe_ab_element(const SuperMatrix& x, const Rational& alpha, const Rational& beta);

}  // namespace vsa
