// The quantized enveloping algebra of sl2: PBW elements, words, antipode,
// D-ledger commutation and integral-form membership.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsl2/scalars.hpp"

namespace qsl2 {

// Basis element Fdiv(a) K^b e^c. The divided power Ediv(c) is e^c / {c}_q!.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
  int degree() const { return c - a; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class AlgebraElement {
 public:
  using Map = std::map<Monomial, Rational>;

  AlgebraElement() = default;
  AlgebraElement(const Rational& s);  // NOLINT(google-explicit-constructor)
  AlgebraElement(long s) : AlgebraElement(Rational(s)) {}  // NOLINT(google-explicit-constructor)

  static AlgebraElement monomial(int a, int b, int c, const Rational& coef = Rational(1));
  static AlgebraElement Fdiv(int n);
  static AlgebraElement Ediv(int n);
  static AlgebraElement K(int b);
  static AlgebraElement e(int n = 1);
  static AlgebraElement f(int n = 1);
  static AlgebraElement E();
  static AlgebraElement F();
  // [H;s] = (K^2-1)(q^-1 K^2-1)...(q^{-s+1}K^2-1)/{s}_q!
  static AlgebraElement Hbinom(int s);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  // Degree of a homogeneous element; throws if not homogeneous or zero.
  int degree() const;
  bool is_homogeneous() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  // Exchange with the Ediv basis: coefficient of Fdiv(a) K^b Ediv(c).
  std::map<Monomial, Rational> ediv_terms() const;
  static AlgebraElement from_ediv_terms(const std::map<Monomial, Rational>& t);

  // Terms sorted by (a, b, c), printed as `coef * Fdiv(a) K^b Ediv(c)`.
  std::string str() const;

  void add_term(const Monomial& m, const Rational& c);

 private:
  Map terms_;
};

// Product of two basis monomials.
AlgebraElement multiply(const Monomial& x, const Monomial& y);

AlgebraElement antipode(const AlgebraElement& x, int power = 1);

// Words in generators ---------------------------------------------------------

enum class Atom { E, F, K, e, f, Ediv, Fdiv };

struct Letter {
  Atom atom;
  int n = 1;  // K exponent, or divided-power / repetition index
  int degree() const;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GeneratorWord {
  Rational prefactor = Rational(1);
  std::vector<Letter> letters;
  int degree() const;
};

AlgebraElement letter_value(const Letter& l);
AlgebraElement normal_order(const GeneratorWord& w);
// Parse words such as "E F K^-1 Ediv(2) e^3".
GeneratorWord parse_word(const std::string& text);

// The D-ledger ----------------------------------------------------------------

struct DLedger {
  int n = 0;
  std::vector<std::vector<int>> exponents;  // symmetric
  std::vector<int> kshift;

  explicit DLedger(int n_ = 0);
  // Record D^eps with legs in tensorands i and j.
  void add(int i, int j, int eps);
  bool is_trivial() const;
  friend bool operator==(const DLedger&, const DLedger&) = default;
};

// A factor of a tensorand word: either a homogeneous element or a D-leg.
struct WordItem {
  bool is_leg = false;
  AlgebraElement value;  // when !is_leg
  int leg_id = -1;       // which D factor
  int eps = 0;           // exponent of this D factor as seen by the leg (+-1)
};

struct PushedWords {
  DLedger ledger;
  Rational scalar = Rational(1);
  std::vector<AlgebraElement> tensorands;
};

// Moves every D^{+-1} (each appearing as two legs, possibly in one tensorand)
// to the far left, using (x ⊗ 1) D^e = D^e (x ⊗ K^{-e|x|}).
PushedWords push_D_left(const std::vector<std::vector<WordItem>>& words);

struct RTerm {
  int sign = 1;       // exponent of D in the ledger contribution
  Rational scalar;    // prefactor
  Monomial first;     // acts on the first tensor leg
  Monomial second;
};

// alpha_n ⊗ beta_n for sign +1, or the inverse R-matrix term for sign -1.
RTerm rmatrix_term(int n, int sign);

// Integral forms ----------------------------------------------------------------

enum class Form { Ubar_q, Ubar_q_ev, Ucal_q, Ucal_q_ev };

bool membership(const AlgebraElement& x, Form form);

struct CertTerm {
  Laurent coef;
  int i = 0;  // Fdiv index
  int j = 0;  // K^{2j}
  int s = 0;  // [H;s]
  int k = 0;  // Ediv index
};

AlgebraElement expand_certificate(const std::vector<CertTerm>& witness);
bool uZq_certificate(const AlgebraElement& x, const std::vector<CertTerm>& witness);
// Attempts to build a witness; returns nullopt when none is found.
std::optional<std::vector<CertTerm>> find_uZq_certificate(const AlgebraElement& x);

// Smallest e-exponent over the terms; nullopt for zero (infinite degree).
std::optional<int> filtration_degree(const AlgebraElement& x);

}  // namespace qsl2
