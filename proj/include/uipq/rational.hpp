#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "uipq/errors.hpp"

namespace uipq {

// Exact rational on 64-bit components, normalized with den > 0.
// Intermediates run through __int128; overflow of the reduced result throws.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, Errc::DomainError, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static Rat from128(__int128 n, __int128 d) {
    require(d != 0, Errc::DomainError, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    const __int128 lo = INT64_MIN, hi = INT64_MAX;
    require(n >= lo && n <= hi && d <= hi, Errc::DomainError, "rational overflow");
    Rat r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.num != 0, Errc::DomainError, "rational division by zero");
    return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

}  // namespace uipq
