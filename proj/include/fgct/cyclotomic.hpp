#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fgct {

using Rational = mpq_class;

/**
 * An exact element of a cyclotomic field Q(zeta_n).
 *
 * Values are kept in canonical form: the conductor n is the smallest m such
 * that the element lies in Q(zeta_m) (never 2 mod 4), and the coefficients are
 * the coordinates on the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1).
 * Structural equality is therefore mathematical equality.
 */
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(long value) : n_(1), c_{Rational(value)} {}  // NOLINT: implicit on purpose
  Cyclotomic(const Rational& value) : n_(1), c_{value} { c_[0].canonicalize(); }  // NOLINT

  /// zeta_n^k, for any integer k.
  static Cyclotomic root_of_unity(int n, long k = 1);

  /// Builds sum_k coeffs[k] * zeta_n^k for an arbitrary-length coefficient list.
  static Cyclotomic from_exponents(int n, std::span<const Rational> coeffs);

  int conductor() const noexcept { return n_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return n_ == 1 && c_[0] == 0; }
  bool is_rational() const noexcept { return n_ == 1; }
  bool is_integer() const;
  /// Precondition: is_rational().
  const Rational& rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  /// Total order: by conductor, then lexicographically by coefficients.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// Throws DivisionByZero for zero.
  Cyclotomic inverse() const;
  /// Complex conjugation, the Galois element -1.
  Cyclotomic conj() const;
  /// The automorphism zeta_n -> zeta_n^k; k must be coprime to the conductor.
  Cyclotomic galois(long k) const;

  /// If this is a root of unity, returns its order and writes the exponent k
  /// with value = zeta_order^k. Returns 0 otherwise.
  int root_of_unity_order(long* exponent = nullptr) const;

  /// GAP-style text, e.g. "-1/2+E(3)^2".
  std::string to_string() const;

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void canonicalize();
  std::vector<Rational> lift(int m) const;

  int n_;
  std::vector<Rational> c_;

  friend Cyclotomic make_cyclotomic(int n, std::vector<Rational> c);
};

/// Canonicalizing constructor from power-basis coordinates in Q(zeta_n)
/// (c.size() == phi(n)).
Cyclotomic make_cyclotomic(int n, std::vector<Rational> c);

Cyclotomic galois_apply(const Cyclotomic& x, long k);
bool is_rational(const Cyclotomic& x);

/**
 * A subfield of a cyclotomic field, described by its minimal conductor n and
 * the subgroup of (Z/n)^* fixing it pointwise.
 */
struct NumberFieldDescriptor {
  int conductor = 1;
  std::vector<int> stabilizer{0};  // sorted residues mod conductor; {0} for Q

  /// [F : Q].
  int degree() const;
  bool operator==(const NumberFieldDescriptor&) const = default;
};

NumberFieldDescriptor rationals_field();
NumberFieldDescriptor cyclotomic_field(int n);
NumberFieldDescriptor field_of_values(std::span<const Cyclotomic> values);
/// Whether every element of `inner` lies in `outer`.
bool field_contains(const NumberFieldDescriptor& outer, const NumberFieldDescriptor& inner);
bool field_contains(const NumberFieldDescriptor& field, const Cyclotomic& x);
NumberFieldDescriptor compositum(const NumberFieldDescriptor& a, const NumberFieldDescriptor& b);
bool contains_root_of_unity(const NumberFieldDescriptor& field, int e);
/// Whether the Galois element k (mod lcm of conductors) fixes the field pointwise.
bool galois_fixes(const NumberFieldDescriptor& field, long k);

namespace nt {
long gcd(long a, long b);
long lcm(long a, long b);
int euler_phi(int n);
std::vector<int> prime_divisors(long n);
bool is_prime(long n);
long mod(long a, long m);
/// Units of Z/n, ascending (just {0} for n == 1).
std::vector<int> units(int n);
}  // namespace nt

}  // namespace fgct
