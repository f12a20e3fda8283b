#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vsa {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "3", "-7", "3/4" into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Prime used by the modular rank certificates (2^61 - 1).
inline constexpr std::uint64_t kModPrime = 2305843009213693951ULL;

std::uint64_t mod_reduce(const Rational& q, std::uint64_t p = kModPrime);

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p = kModPrime) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p = kModPrime) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p = kModPrime) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p = kModPrime);
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p = kModPrime) { return mod_pow(a, p - 2, p); }

}  // namespace vsa
