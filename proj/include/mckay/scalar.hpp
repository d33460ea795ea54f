#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <type_traits>

namespace mckay {

using Rational = mpq_class;

/// Parses "p/q" or "p"; throws Error(kParse) on malformed input or zero denominator.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

/// Element of the prime field F_P.
template <std::uint32_t P>
class ModP {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  static constexpr std::uint32_t kModulus = P;

  constexpr ModP() = default;
  constexpr ModP(long long value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<std::uint32_t>(((value % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return value_; }

  friend constexpr ModP operator+(ModP a, ModP b) { return ModP(raw((a.value_ + b.value_) % P)); }
  friend constexpr ModP operator-(ModP a, ModP b) { return ModP(raw((a.value_ + P - b.value_) % P)); }
  friend constexpr ModP operator*(ModP a, ModP b) {
    return ModP(raw(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value_) * b.value_) % P)));
  }
  friend constexpr ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  constexpr ModP operator-() const { return ModP(raw((P - value_) % P)); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  friend constexpr bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(ModP a, ModP b) { return a.value_ != b.value_; }

  constexpr ModP inverse() const {
    // Fermat; only valid for prime P, which callers guarantee.
    ModP result(1);
    ModP base = *this;
    std::uint32_t e = P - 2;
    while (e > 0) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.value_; }

 private:
  struct Raw {
    std::uint32_t v;
  };
  static constexpr Raw raw(std::uint32_t v) { return Raw{v}; }
  constexpr explicit ModP(Raw r) : value_(r.v) {}

  std::uint32_t value_ = 0;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
template <std::uint32_t P>
bool is_zero(ModP<P> x) {
  return x.value() == 0;
}

inline std::string to_string(const Rational& x) { return format_rational(x); }
template <std::uint32_t P>
std::string to_string(ModP<P> x) {
  return std::to_string(x.value());
}

using F2 = ModP<2>;
using F3 = ModP<3>;
using F5 = ModP<5>;
using F7 = ModP<7>;

/// a/b -> a * b^{-1} in F_P; throws kBadPrime when P divides the denominator.
template <std::uint32_t P>
ModP<P> reduce_mod(const Rational& x);

/// Uniform element of F_P, or an integer in [-spread, spread] for rationals.
template <class S>
S random_scalar(std::mt19937_64& rng, int spread = 3) {
  if constexpr (std::is_same_v<S, Rational>) {
    std::uniform_int_distribution<int> d(-spread, spread);
    return Rational(d(rng));
  } else {
    std::uniform_int_distribution<std::uint32_t> d(0, S::kModulus - 1);
    return S(static_cast<long long>(d(rng)));
  }
}

}  // namespace mckay

#include "mckay/error.hpp"

namespace mckay {

template <std::uint32_t P>
ModP<P> reduce_mod(const Rational& x) {
  const mpz_class p(static_cast<unsigned long>(P));
  const mpz_class den = x.get_den();
  if (den % p == 0) {
    throw Error(ErrorCode::kBadPrime, std::to_string(P) + " divides the denominator of " + format_rational(x));
  }
  const mpz_class num = x.get_num();
  const mpz_class n = ((num % p) + p) % p;
  const mpz_class d = den % p;
  return ModP<P>(static_cast<long long>(n.get_si())) / ModP<P>(static_cast<long long>(d.get_si()));
}

template <class S>
S from_rational(const Rational& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return x;
  } else {
    return reduce_mod<S::kModulus>(x);
  }
}

}  // namespace mckay
