// Exact scalars over Z[u, u^-1] with u = q^(1/4), and their fraction field.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

// Laurent polynomial in u with integer coefficients. Terms are kept sorted by
// exponent with no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<std::int64_t, mpz_class>;

  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  Laurent(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static Laurent monomial(const mpz_class& c, std::int64_t uexp);
  static Laurent u_power(std::int64_t k) { return monomial(1, k); }
  static Laurent q_power(std::int64_t k) { return monomial(1, 4 * k); }
  // Build from unsorted terms; duplicates are summed.
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // +-u^k
  bool is_unit() const;
  std::int64_t low_exp() const;
  std::int64_t high_exp() const;
  mpz_class coeff(std::int64_t uexp) const;
  mpz_class content() const;
  Laurent primitive() const;

  // Multiply by u^k.
  Laurent shifted(std::int64_t k) const;
  Laurent scaled(const mpz_class& c) const;
  // Exact quotient in Z[u^+-1], if it exists.
  std::optional<Laurent> exact_div(const Laurent& d) const;
  // True when every exponent is a multiple of 4, i.e. the value is in Z[q^+-1].
  bool in_q_ring() const;
  // Substitute u -> u^k (k may be negative).
  Laurent substitute(std::int64_t k) const;

  // Normalised so the lowest exponent is 0 and the leading coefficient positive.
  Laurent normalized() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Laurent& a, const Laurent& b);

  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

Laurent pow(const Laurent& x, unsigned n);

// gcd in Z[u^+-1] up to units, normalised (lowest exponent 0, leading coefficient
// positive). The integer content is included.
Laurent gcd(const Laurent& a, const Laurent& b);

// Element of the fraction field, kept in lowest terms with a normalised
// denominator.
class Rational {
 public:
  Rational() : num_(), den_(1) {}
  Rational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Laurent& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Laurent& n, const Laurent& d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  // Lies in Z[q^+-1].
  bool in_q_ring() const { return is_laurent() && num_.in_q_ring(); }
  std::optional<Laurent> as_laurent() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;
  Rational inverse() const;
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  void reduce();
  Laurent num_;
  Laurent den_;
};

// q-integer toolkit, exponents in powers of q.
Laurent qbrace(std::int64_t i);                      // q^i - 1
Laurent qbrace_falling(std::int64_t i, int n);       // {i}{i-1}...{i-n+1}
Laurent qbrace_factorial(int n);                     // {n}_{q,n}
Laurent qint(std::int64_t i);                        // (q^i - 1)/(q - 1)
Laurent qint_factorial(int n);                       // [n][n-1]...[1]
Laurent qbinom(std::int64_t i, int n);               // {i}_{q,n} / {n}!
// Balanced variants in v = q^(1/2).
Laurent vint(std::int64_t i);                        // (v^i - v^-i)/(v - v^-1)
Laurent vint_factorial(int n);
Laurent cyclotomic(int m);                           // Phi_m(q)

// Parse the text form produced by Laurent::str (variables q and u).
Laurent parse_laurent(const std::string& text);

}  // namespace qsl2
