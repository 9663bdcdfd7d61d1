#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hopf {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Exact rational. Values that fit in 64-bit numerator/denominator are kept
// inline; anything larger spills to a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;
  static Rational parse(std::string_view s);
  std::size_t hash() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational from_i128(__int128 n, __int128 d);
  static Rational from_mpq(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

// Element a + b*xi + c*theta + d*xi*theta of Q(xi)[theta], where
// xi^2 = xi - 1 and theta^2 = 1 - xi^2 = 2 - xi.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) { c_[0] = Rational(n); }  // NOLINT
  Scalar(const Rational& r) { c_[0] = r; }      // NOLINT
  Scalar(Rational a, Rational b, Rational c, Rational d) : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Scalar xi() { return Scalar(0, 1, 0, 0); }
  static Scalar theta() { return Scalar(0, 0, 1, 0); }
  // xi^k for any integer k.
  static Scalar xi_pow(long long k);
  // (-1)^k
  static Scalar sign_pow(long long k) { return ((k % 2) + 2) % 2 == 0 ? Scalar(1) : Scalar(-1); }

  const Rational& operator[](int i) const { return c_[i]; }
  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  bool is_one() const { return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  bool in_qxi() const { return c_[2].is_zero() && c_[3].is_zero(); }
  bool is_rational() const { return in_qxi() && c_[1].is_zero(); }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] && a.c_[3] == b.c_[3];
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Arbitrary but total order, used for canonical sorting only.
  friend bool operator<(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  Scalar pow(long long e) const;
  // Galois conjugate theta -> -theta.
  Scalar theta_conj() const { return Scalar(c_[0], c_[1], -c_[2], -c_[3]); }

  std::string to_string() const;
  static Scalar parse(std::string_view s);
  std::size_t hash() const;

 private:
  std::array<Rational, 4> c_;
};

// Least n in [1, bound] with x^n = 1, or nullopt.
std::optional<int> order_of_root_of_unity(const Scalar& x, int bound = 12);

struct ScalarHash {
  std::size_t operator()(const Scalar& s) const { return s.hash(); }
};

}  // namespace hopf
