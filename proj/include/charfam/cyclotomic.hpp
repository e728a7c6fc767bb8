#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace charfam {

// Element of the cyclotomic field Q(zeta_m), held as the canonical remainder
// modulo the m-th cyclotomic polynomial: a rational-coefficient polynomial in
// zeta of degree < phi(m). Equality of canonical forms decides equality in
// the field, so all arithmetic here is exact. Operations on operands with
// different conductors lift both to the least common multiple first.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), coeffs_(1, 0) {}

  static Cyclotomic zero(int m = 1);
  static Cyclotomic integer(long v);
  static Cyclotomic rational(const mpq_class& v);
  static Cyclotomic root_of_unity(int m, long k);  // zeta_m^k
  // coefficient vector over zeta^0..zeta^{deg} (reduced on construction)
  static Cyclotomic from_coeffs(int m, std::vector<mpq_class> coeffs);

  int conductor() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // only valid when is_rational()
  mpq_class rational_value() const;
  bool is_integer() const;
  bool is_nonnegative_integer() const;

  Cyclotomic conjugate() const;  // zeta -> zeta^{-1}
  Cyclotomic lifted(int conductor_multiple) const;
  // rewrite in Q(zeta_d) for d | conductor; throws LiftFailureError when the
  // value does not lie in the subfield
  Cyclotomic to_conductor(int d) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic operator*(const mpq_class& s) const;
  Cyclotomic operator/(const mpq_class& s) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // deterministic total order for canonical sorting of table rows
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  int m_;
  std::vector<mpq_class> coeffs_;  // size phi(m_)
};

int euler_phi(int m);
// coefficients of the m-th cyclotomic polynomial, constant term first
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

}  // namespace charfam
