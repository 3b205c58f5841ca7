// Cyclotomic fractional principal ideals of Z[q,q^-1] and the divisibility
// lattices for colored Jones values.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsl2/scalars.hpp"

namespace qsl2 {

// unit * prod Phi_m^{e_m} * Z[q,q^-1]. Negative exponents make the ideal
// fractional; the cyclotomic polynomials are pairwise coprime, so the
// generator is in lowest terms.
struct FactoredIdeal {
  int sign = 1;
  std::int64_t uexp = 0;
  std::map<int, int> exponents;  // zero entries are never stored

  static FactoredIdeal unit_ideal() { return {}; }
  static FactoredIdeal cyclotomic_power(int m, int e);

  Laurent numerator() const;    // product over positive exponents
  Laurent denominator() const;  // product over negative exponents
  Rational generator() const;
  bool is_integral() const;
  int exponent(int m) const;

  // Ideal product and the intersection (lcm of generators).
  friend FactoredIdeal operator*(const FactoredIdeal& a, const FactoredIdeal& b);
  friend FactoredIdeal intersect(const FactoredIdeal& a, const FactoredIdeal& b);
  // a ⊆ b, i.e. the generator of b divides that of a.
  friend bool subset(const FactoredIdeal& a, const FactoredIdeal& b);
  // Equality as ideals; the unit is ignored.
  friend bool same_ideal(const FactoredIdeal& a, const FactoredIdeal& b) {
    return a.exponents == b.exponents;
  }

  // e.g. "Phi1^4 Phi3 Phi4 Phi5"; "1" for the unit ideal.
  std::string str() const;
};

// Exponents of {n}_q! = {n}{n-1}...{1} and of {i}_{q,n} = {i}{i-1}...{i-n+1}.
FactoredIdeal factored_qfactorial(int n);
FactoredIdeal factored_qfalling(int i, int n);

struct IdealI {
  std::vector<Laurent> generators;  // {l-k}_q! {k}_q!, k = 0..l
  FactoredIdeal principal;          // g_l
};

// Throws std::logic_error if the gcd of the generators differs from g_l.
IdealI ideal_I(int l);
FactoredIdeal ideal_g(int l);

FactoredIdeal ideal_Za(const std::vector<int>& ls);
FactoredIdeal ideal_Zrb(const std::vector<int>& ls);
// n >= 3; std::invalid_argument otherwise.
FactoredIdeal ideal_ZBr(const std::vector<int>& ls);
FactoredIdeal ideal_ZBr_tilde(const std::vector<int>& ls);

// `imax` and `imin` (0-based, distinct) select which entries attain the max and
// min; -1 picks the smallest index.
FactoredIdeal ideal_Zrb(const std::vector<int>& ls, int imax);
FactoredIdeal ideal_ZBr(const std::vector<int>& ls, int imax, int imin);

struct Certificate {
  bool member = false;
  Rational quotient;   // x / generator when member
  Rational remainder;  // for refusals: x * denominator mod numerator, as a witness
};

Certificate certify_membership(const Rational& x, const FactoredIdeal& I);

}  // namespace qsl2
