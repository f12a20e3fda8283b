#include "vsa/rational.hpp"

#include <cctype>

namespace vsa {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

namespace {
std::uint64_t mod_of_integer(const Integer& z, std::uint64_t p) {
  Integer r;
  Integer pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}
}  // namespace

std::uint64_t mod_reduce(const Rational& q, std::uint64_t p) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    const long n = q.get_num().get_si();
    const std::uint64_t a = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    const std::uint64_t r = a % p;
    return n < 0 && r ? p - r : r;
  }
  std::uint64_t num = mod_of_integer(q.get_num(), p);
  std::uint64_t den = mod_of_integer(q.get_den(), p);
  if (den == 0) throw Error("denominator divisible by the modular prime");
  return mod_mul(num, mod_inv(den, p), p);
}

}  // namespace vsa
