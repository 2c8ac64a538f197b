#pragma once

// Exact field arithmetic for multivariate rational functions over Q.
//
// The base variable is v with q = v^2, so every half-integer q-power that
// shows up in weight pairings stays polynomial.  A Scalar is a reduced
// fraction of sparse multivariate polynomials with rational coefficients:
// gcd(num, den) = 1 and den monic under graded lex, which makes equality
// structural.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "reflekt/errors.hpp"

namespace reflekt {

using Rat = boost::multiprecision::mpq_rational;

// Fixed variable registry.  Index order is the canonical monomial-order
// variable order.  root_den is a declared root denominator per variable
// (fractional-power hook; every shipped computation uses 1).
struct VarTable {
  std::vector<std::string> names;
  std::vector<int> root_den;
  int index_of(const std::string& name) const;
};

const VarTable& vars();

constexpr int kNumVars = 8;
// Registry order: v z y xi gamma sigma a w
constexpr int kVarV = 0;
constexpr int kVarZ = 1;
constexpr int kVarY = 2;
constexpr int kVarXi = 3;
constexpr int kVarGamma = 4;
constexpr int kVarSigma = 5;
constexpr int kVarA = 6;
constexpr int kVarW = 7;

using Expo = std::array<int16_t, kNumVars>;

struct Term {
  Expo e;
  Rat c;
};

// Graded lex: higher total degree first, ties broken lexicographically.
int cmp_expo(const Expo& a, const Expo& b);

class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const Rat& c);
  static MultiPoly variable(int var, int power = 1);
  static MultiPoly monomial(const Expo& e, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading() const;  // greatest monomial under graded lex
  int degree_in(int var) const;
  int min_exponent(int var) const;  // 0 for absent variables

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Rat& c) const;
  MultiPoly shifted(const Expo& e) const;  // multiply by the monomial x^e

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Rational content: c such that *this / c has coprime integer
  // coefficients and positive leading coefficient.  Zero poly -> 0.
  Rat rational_content() const;
  MultiPoly primitive() const;

  // Sorts, merges duplicate monomials, drops zeros.
  void normalize();

 private:
  std::vector<Term> terms_;  // descending graded lex, no zero coefficients
};

// Exact division; throws Internal if b does not divide a.
MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);
// Multivariate gcd by primitive-part recursion on the main variable.
// Inputs must have nonnegative exponents.  Result is integer-primitive
// with positive leading coefficient (or 1 for coprime inputs).
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

class Scalar {
 public:
  Scalar() : num_(), den_(MultiPoly::constant(1)) {}
  Scalar(int n);  // NOLINT: implicit on purpose, mirrors field embedding
  explicit Scalar(const Rat& r);
  explicit Scalar(const MultiPoly& p);
  Scalar(const MultiPoly& num, const MultiPoly& den);

  static Scalar variable(int var, int power = 1);
  // v^k as a Scalar (k may be negative); q^k is vpow(2k).
  static Scalar vpow(int k) { return variable(kVarV, k); }
  static Scalar qpow(int k) { return variable(kVarV, 2 * k); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(int k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Simultaneous substitution of registered variables.  Throws
  // SpecializationPole if the denominator vanishes identically.
  Scalar substitute(const std::map<int, Scalar>& bindings) const;
  Scalar derivative(int var) const;

  std::size_t term_count() const {
    return num_.term_count() + den_.term_count();
  }

  std::string to_string() const;
  static Scalar parse(const std::string& text);

 private:
  void reduce();
  MultiPoly num_, den_;
};

}  // namespace reflekt
