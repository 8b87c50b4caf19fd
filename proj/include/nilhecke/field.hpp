#pragma once
// Coefficient fields. Everything downstream is templated on a field F with
// F(long long), the four arithmetic operations, ==, and field_str(). All
// arithmetic is exact; there is no tolerance anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include "nilhecke/common.hpp"

namespace nilhecke {

using Rational = boost::multiprecision::cpp_rational;

inline std::string field_str(const Rational& r) { return r.str(); }
inline std::string field_name(const Rational&) { return "rat"; }

// Prime field with a phase-global modulus. Verification phases run under one
// modulus at a time (set_modulus on entry), so threading the modulus through
// every element type would buy nothing. Modulus must be prime and < 2^32 so
// products fit in uint64.
struct Fp {
  static inline std::uint64_t p = 2;
  std::uint64_t v = 0;

  Fp() = default;
  Fp(long long a) {
    long long m = static_cast<long long>(p);
    long long r = a % m;
    if (r < 0) r += m;
    v = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t q) {
    nh_check(q >= 2 && q < (1ull << 32), "Fp modulus out of range");
    p = q;
  }
  static Fp raw(std::uint64_t u) {
    Fp f;
    f.v = u;
    return f;
  }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return raw(s);
  }
  friend Fp operator-(Fp a, Fp b) {
    return raw(a.v >= b.v ? a.v - b.v : a.v + p - b.v);
  }
  friend Fp operator*(Fp a, Fp b) { return raw((a.v * b.v) % p); }
  Fp operator-() const { return raw(v ? p - v : 0); }

  Fp pow(std::uint64_t e) const {
    Fp r(1), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    nh_check(v != 0, "Fp: division by zero");
    return pow(p - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

inline std::string field_str(const Fp& a) { return std::to_string(a.v); }
inline std::string field_name(const Fp&) { return "fp:" + std::to_string(Fp::p); }

// Reduce a rational mod Fp::p. Fails (returns false) when p divides the
// denominator; callers treating mod-p ranks as one-sided bounds must clear
// denominators first or skip the prime.
inline bool fp_from_rational(const Rational& r, Fp& out) {
  namespace mp = boost::multiprecision;
  mp::cpp_int m(Fp::p);
  mp::cpp_int dn = mp::denominator(r) % m;
  if (dn == 0) return false;
  mp::cpp_int nn = mp::numerator(r) % m;
  if (nn < 0) nn += m;
  out = Fp::raw(nn.convert_to<std::uint64_t>()) /
        Fp::raw(dn.convert_to<std::uint64_t>());
  return true;
}

inline bool fp_from_rational(const Fp& r, Fp& out) {
  out = r;
  return true;
}

}  // namespace nilhecke
