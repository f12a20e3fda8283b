#include "vsa/supermat.hpp"

#include <sstream>

namespace vsa {

Format Format::standard(std::size_t n_even, std::size_t n_odd) {
  Format f;
  f.parities.assign(n_even, Parity::Even);
  f.parities.insert(f.parities.end(), n_odd, Parity::Odd);
  if (f.parities.empty()) throw Error("empty format");
  return f;
}

SuperMatrix::SuperMatrix(Format format) : fmt_(std::move(format)) { a_.assign(size() * size(), Rational(0)); }

SuperMatrix::SuperMatrix(Format format, std::vector<Rational> entries, Parity parity) : fmt_(std::move(format)) {
  if (entries.size() != size() * size()) throw Error("entry count does not match format");
  a_ = std::move(entries);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if ((*this)(i, j) != 0 && fmt_[i] + fmt_[j] != parity) throw Error("entry of the wrong parity");
}

SuperMatrix SuperMatrix::from_entries(Format format, std::vector<Rational> entries) {
  SuperMatrix m(std::move(format));
  if (entries.size() != m.a_.size()) throw Error("entry count does not match format");
  m.a_ = std::move(entries);
  return m;
}

SuperMatrix SuperMatrix::identity(Format format) {
  SuperMatrix m(std::move(format));
  for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 1;
  return m;
}

SuperMatrix SuperMatrix::unit(Format format, std::size_t i, std::size_t j) {
  SuperMatrix m(std::move(format));
  m(i, j) = 1;
  return m;
}

bool SuperMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

std::optional<Parity> SuperMatrix::parity() const {
  bool ev = false, od = false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if ((*this)(i, j) != 0) (is_odd(fmt_[i] + fmt_[j]) ? od : ev) = true;
  if (ev && od) return std::nullopt;
  return od ? Parity::Odd : Parity::Even;
}

std::pair<SuperMatrix, SuperMatrix> SuperMatrix::split_parity() const {
  SuperMatrix e(fmt_), o(fmt_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) (is_odd(fmt_[i] + fmt_[j]) ? o : e)(i, j) = (*this)(i, j);
  return {e, o};
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  if (!(fmt_ == o.fmt_)) throw Error("matrices of different formats");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  if (!(fmt_ == o.fmt_)) throw Error("matrices of different formats");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rational& c) {
  for (auto& v : a_) v *= c;
  return *this;
}

std::string SuperMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < size(); ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.format() == b.format())) throw Error("matrices of different formats");
  SuperMatrix c(a.format());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y) {
  auto [xe, xo] = x.split_parity();
  auto [ye, yo] = y.split_parity();
  SuperMatrix out = matmul(x, y) - matmul(y, x);
  // odd-odd part is a supercommutator: add back 2 yo xo
  out += matmul(yo, xo) * Rational(2);
  return out;
}

Rational supertrace(const SuperMatrix& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += is_odd(a.format()[i]) ? Rational(-a(i, i)) : a(i, i);
  return s;
}

Rational queertrace(const SuperMatrix& a) {
  const std::size_t n = a.size() / 2;
  if (!(a.format() == Format::standard(n, n)) || a.size() != 2 * n) throw Error("queertrace needs format n|n");
  Rational t = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != a(n + i, n + j) || a(i, n + j) != a(n + i, j)) throw Error("matrix is not in q(n)");
      if (i == j) t += a(i, n + j);
    }
  return t;
}

SuperMatrix supertranspose(const SuperMatrix& a) {
  auto [ae, ao] = a.split_parity();
  SuperMatrix out(a.format());
  const auto& f = a.format();
  for (const auto& [part, pa] : {std::pair{&ae, Parity::Even}, std::pair{&ao, Parity::Odd}})
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        const Rational& v = (*part)(j, i);
        if (v == 0) continue;
        bool neg = is_odd(f[i] + f[j]) && is_odd(f[i] + pa);
        out(i, j) += neg ? Rational(-v) : v;
      }
  return out;
}

bool preserves_form(const SuperMatrix& x, const SuperMatrix& b) {
  auto pb = b.parity();
  if (!pb) throw Error("form matrix must be homogeneous");
  auto [xe, xo] = x.split_parity();
  for (const auto& [part, px] : {std::pair{&xe, Parity::Even}, std::pair{&xo, Parity::Odd}}) {
    SuperMatrix r = matmul(supertranspose(*part), b);
    SuperMatrix s = matmul(b, *part);
    if (sign_of(px, *pb) < 0) r -= s;
    else r += s;
    if (!r.is_zero()) return false;
  }
  return true;
}

namespace {

void put_j(SuperMatrix& m, std::size_t off, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    m(off + i, off + n + i) = 1;
    m(off + n + i, off + i) = -1;
  }
}

}  // namespace

SuperMatrix form_b_ev(std::size_t m, std::size_t n) {
  SuperMatrix b(Format::standard(m, 2 * n));
  for (std::size_t i = 0; i < m; ++i) b(i, m - 1 - i) = 1;
  put_j(b, m, n);
  return b;
}

SuperMatrix form_b_ev_prime(std::size_t m, std::size_t n) {
  SuperMatrix b(Format::standard(m, 2 * n));
  for (std::size_t i = 0; i < m; ++i) b(i, i) = 1;
  put_j(b, m, n);
  return b;
}

SuperMatrix form_b_odd(std::size_t n) {
  SuperMatrix b(Format::standard(n, n));
  put_j(b, 0, n);
  return b;
}

SuperMatrix form_pi(std::size_t n) {
  SuperMatrix b(Format::standard(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    b(i, n + i) = 1;
    b(n + i, i) = 1;
  }
  return b;
}

Mat4 tilde(const Mat4& c) {
  if (c.size() != 16) throw Error("tilde needs a 4x4 matrix");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (c[i * 4 + j] != -c[j * 4 + i]) throw Error("tilde needs a skew-symmetric matrix");
  Mat4 out(16, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Rational& v = c[i * 4 + j];
      if (v == 0) continue;
      int rest[2], r = 0;
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) rest[r++] = k;
      int perm[4] = {i, j, rest[0], rest[1]};
      int inv = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) inv += perm[a] > perm[b];
      int k = rest[0], l = rest[1];
      if (inv % 2) std::swap(k, l);
      out[k * 4 + l] += v;
      out[l * 4 + k] -= v;
    }
  return out;
}

namespace {

Mat4 block(const SuperMatrix& x, std::size_t r0, std::size_t c0) {
  Mat4 m(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m[i * 4 + j] = x(r0 + i, c0 + j);
  return m;
}

void set_block(SuperMatrix& x, std::size_t r0, std::size_t c0, const Mat4& m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) x(r0 + i, c0 + j) = m[i * 4 + j];
}

}  // namespace

AsElement AsElement::from_blocks(const Mat4& a, const Mat4& b, const Mat4& c, const Rational& d) {
  AsElement e;
  Mat4 mat(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mat[i * 4 + j] = -a[j * 4 + i];
  set_block(e.x, 0, 0, a);
  set_block(e.x, 0, 4, b);
  set_block(e.x, 4, 0, c);
  set_block(e.x, 4, 4, mat);
  e.d = d;
  if (!as_valid(e)) throw Error("blocks do not define an element of spe(4)");
  return e;
}

AsElement AsElement::central(const Rational& d) {
  AsElement e;
  e.d = d;
  return e;
}

Mat4 AsElement::block_a() const { return block(x, 0, 0); }
Mat4 AsElement::block_b() const { return block(x, 0, 4); }
Mat4 AsElement::block_c() const { return block(x, 4, 0); }

std::optional<Parity> AsElement::parity() const {
  auto p = x.parity();
  if (d != 0 && x.is_zero()) return Parity::Even;
  if (d != 0 && p && is_odd(*p)) return std::nullopt;
  return p;
}

AsElement& AsElement::operator+=(const AsElement& o) {
  x += o.x;
  d += o.d;
  return *this;
}

AsElement& AsElement::operator*=(const Rational& c) {
  x *= c;
  d *= c;
  return *this;
}

std::string AsElement::to_string() const { return x.to_string() + " + " + d.get_str() + "*z"; }

bool as_valid(const AsElement& e) {
  if (!(e.x.format() == Format::standard(4, 4))) return false;
  Mat4 a = e.block_a(), b = e.block_b(), c = e.block_c(), dd = block(e.x, 4, 4);
  Rational tr = 0;
  for (int i = 0; i < 4; ++i) {
    tr += a[i * 5];
    for (int j = 0; j < 4; ++j) {
      if (dd[i * 4 + j] != -a[j * 4 + i]) return false;
      if (b[i * 4 + j] != b[j * 4 + i]) return false;
      if (c[i * 4 + j] != -c[j * 4 + i]) return false;
    }
  }
  return tr == 0;
}

AsElement as_bracket(const AsElement& p, const AsElement& q) {
  AsElement out;
  out.x = bracket(p.x, q.x);
  Mat4 c = p.block_c(), ct = tilde(q.block_c());
  Rational tr = 0;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) tr += c[i * 4 + k] * ct[k * 4 + i];
  out.d = tr;
  return out;
}

SuperMatrix spinor_rep(const Rational& lambda, const AsElement& e, bool printed_signs) {
  SuperMatrix m = e.x;
  Mat4 ct = tilde(e.block_c());
  Rational mu = printed_signs ? Rational(-lambda) : Rational(2 * lambda);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, 4 + j) += mu * ct[i * 4 + j];
  m += SuperMatrix::identity(m.format()) * (lambda * e.d);
  return m;
}

SuperMatrix spe_ab_element(const SuperMatrix& x, const Rational& alpha, const Rational& beta) {
  const std::size_t n = x.size() / 2;
  SuperMatrix m = x;
  for (std::size_t i = 0; i < 2 * n; ++i) m(i, i) += alpha + (i < n ? beta : Rational(-beta));
  return m;
}

}  // namespace vsa
