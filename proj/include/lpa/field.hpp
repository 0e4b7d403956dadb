#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "lpa/error.hpp"

namespace lpa {

// A field supplies the scalar value type plus the operations that need
// more than the value itself (construction, parsing, printing). Values
// support + - * and comparison with ==.

// The rationals, backed by GMP.
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long n) const { return value_type(mpz_class(std::to_string(n))); }

  // Parses "n" or "n/d" with decimal integers of any size.
  value_type from_string(std::string_view num, std::string_view den = "1") const {
    mpz_class n, d;
    if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0)
      throw ParseError("malformed scalar '" + std::string(num) + "/" + std::string(den) + "'");
    if (d == 0) throw ParseError("zero denominator");
    value_type q(n, d);
    q.canonicalize();
    return q;
  }

  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static bool is_negative(const value_type& a) { return sgn(a) < 0; }
  static value_type inverse(const value_type& a) {
    if (is_zero(a)) throw AlgebraError("division by zero");
    return value_type(1) / a;
  }

  // "n" for integers, "n/d" otherwise.
  static std::string to_string(const value_type& a) { return a.get_str(); }
  static std::string to_fraction(const value_type& a) {
    return a.get_num().get_str() + "/" + a.get_den().get_str();
  }

  std::string name() const { return "rational"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// Residues modulo a prime p < 2^31. The modulus travels with each value so
// mixed-modulus arithmetic is caught.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  friend ModP operator+(ModP a, ModP b) {
    check(a, b);
    return ModP(std::uint64_t{a.value_} + b.value_, a.modulus_);
  }
  friend ModP operator-(ModP a, ModP b) {
    check(a, b);
    return ModP(std::uint64_t{a.value_} + a.modulus_ - b.value_, a.modulus_);
  }
  friend ModP operator*(ModP a, ModP b) {
    check(a, b);
    return ModP(std::uint64_t{a.value_} * b.value_, a.modulus_);
  }
  ModP operator-() const { return ModP(modulus_ - value_, modulus_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  static void check(ModP a, ModP b) {
    if (a.modulus_ != b.modulus_) throw AlgebraError("mixed moduli in F_p arithmetic");
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

class PrimeField {
 public:
  using value_type = ModP;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw ParseError("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return ModP(0, p_); }
  value_type one() const { return ModP(1, p_); }
  value_type from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return ModP(static_cast<std::uint64_t>(r), p_);
  }
  value_type from_string(std::string_view num, std::string_view den = "1") const {
    mpz_class n, d;
    if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0)
      throw ParseError("malformed scalar '" + std::string(num) + "/" + std::string(den) + "'");
    mpz_class pz(p_);
    mpz_class nr, dr;
    mpz_fdiv_r(nr.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    mpz_fdiv_r(dr.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    if (dr == 0) throw ParseError("denominator vanishes modulo " + std::to_string(p_));
    return ModP(nr.get_ui(), p_) * inverse(ModP(dr.get_ui(), p_));
  }

  static bool is_zero(const value_type& a) { return a.value() == 0; }
  static bool is_negative(const value_type&) { return false; }
  static value_type inverse(const value_type& a) {
    if (a.value() == 0) throw AlgebraError("division by zero");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a.value(), e = a.modulus() - 2;
    while (e) {
      if (e & 1) result = result * base % a.modulus();
      base = base * base % a.modulus();
      e >>= 1;
    }
    return ModP(result, a.modulus());
  }

  static std::string to_string(const value_type& a) { return std::to_string(a.value()); }
  static std::string to_fraction(const value_type& a) { return std::to_string(a.value()) + "/1"; }

  std::string name() const { return "fp:" + std::to_string(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

}  // namespace lpa
