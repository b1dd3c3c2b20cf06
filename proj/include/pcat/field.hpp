#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <ostream>
#include <string>

#include "pcat/error.hpp"

namespace pcat {

/// Exact rational number backed by GMP. Always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int n) : v_(n) {}   // NOLINT
  Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "n" or "n/d".
  static Rational parse(const std::string& text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// "n/d", or "n" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational inverse(const Rational& r) { return Rational(1) / r; }

/// Element of the prime field F_P.
template <int P>
class Zp {
  static_assert(P >= 2 && P < 46341, "P must fit products in 32 bits");

 public:
  static constexpr int modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long v) : v_(static_cast<std::uint32_t>(((v % P) + P) % P)) {}  // NOLINT

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Zp& operator+=(Zp o) { v_ = (v_ + o.v_) % P; return *this; }
  constexpr Zp& operator-=(Zp o) { v_ = (v_ + P - o.v_) % P; return *this; }
  constexpr Zp& operator*=(Zp o) { v_ = (v_ * o.v_) % P; return *this; }
  constexpr Zp& operator/=(Zp o) { return *this *= inverse(o); }

  friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
  friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
  friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
  friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
  friend constexpr Zp operator-(Zp a) { return Zp() - a; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

  friend constexpr Zp inverse(Zp a) {
    // a^(P-2) by square-and-multiply
    Zp result(1), base = a;
    for (int e = P - 2; e > 0; e >>= 1) {
      if (e & 1) result *= base;
      base *= base;
    }
    return result;
  }

  friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
template <int P>
constexpr bool is_zero(Zp<P> a) { return a.is_zero(); }

/// Runs f.template operator()<P>() for the supported small primes.
template <class F>
decltype(auto) dispatch_prime(int p, F&& f);

}  // namespace pcat

namespace Eigen {

template <>
struct NumTraits<pcat::Rational> : GenericNumTraits<pcat::Rational> {
  using Real = pcat::Rational;
  using NonInteger = pcat::Rational;
  using Nested = pcat::Rational;
  using Literal = pcat::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <int P>
struct NumTraits<pcat::Zp<P>> : GenericNumTraits<pcat::Zp<P>> {
  using Real = pcat::Zp<P>;
  using NonInteger = pcat::Zp<P>;
  using Nested = pcat::Zp<P>;
  using Literal = pcat::Zp<P>;
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pcat {

template <class F>
decltype(auto) dispatch_prime(int p, F&& f) {
  switch (p) {
    case 2: return f.template operator()<2>();
    case 3: return f.template operator()<3>();
    case 5: return f.template operator()<5>();
    case 7: return f.template operator()<7>();
    case 11: return f.template operator()<11>();
    case 13: return f.template operator()<13>();
    default: throw Error(ErrorCode::PreconditionViolated, "unsupported prime for dense F_p arithmetic: " + std::to_string(p));
  }
}

}  // namespace pcat
