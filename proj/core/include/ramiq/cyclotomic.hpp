#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramiq/rational.hpp"

namespace ramiq {

// Exact element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
// Values whose non-constant coordinates all vanish collapse to conductor 1.
// Immutable after construction.
class Cyclotomic {
 public:
  static constexpr std::int64_t kConductorCap = 10000;

  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
  explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}
  explicit Cyclotomic(std::int64_t n) : conductor_(1), coeffs_{Rational(n)} {}

  // zeta_N^k, reduced.
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return conductor_ == 1; }

  // Throws NotRational if some non-constant coordinate is nonzero.
  Rational to_rational() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Multiplicative inverse; InvalidInput on zero.
  Cyclotomic inverse() const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  // zeta_N -> zeta_N^(-1).
  Cyclotomic conjugate() const;

  Cyclotomic pow(std::int64_t e) const;

  // Re-expresses the value in Q(zeta_M); M must be a multiple of the
  // current conductor (no minimization is attempted).
  Cyclotomic lifted_to(std::int64_t m) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Multiplicative order when the value is a root of unity; 0 otherwise.
  std::int64_t root_order() const;

  // "ζN^k"-style symbolic rendering.
  std::string str() const;

  static std::int64_t euler_phi(std::int64_t n);
  // Coefficients of the N-th cyclotomic polynomial, constant term first.
  static const std::vector<Integer>& cyclotomic_polynomial(std::int64_t n);

 private:
  Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs);
  std::vector<Rational> lifted_coeffs(std::int64_t m) const;
  void normalize();

  std::int64_t conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& c) {
  return Cyclotomic(r) * c;
}

}  // namespace ramiq
