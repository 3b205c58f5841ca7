#include <random>

#include "doctest.h"
#include "qsl2/reptheory.hpp"
#include "qsl2/uqalg.hpp"

using namespace qsl2;

namespace {

using AE = AlgebraElement;
Rational qr(std::int64_t k) { return Rational(Laurent::q_power(k)); }
Rational ur(std::int64_t k) { return Rational(Laurent::u_power(k)); }

// Independent generator matrices on V_m built from the textbook action.
struct Gens {
  int m;
  RMatrix E, F, K, Kinv;
  explicit Gens(int m_) : m(m_), E(m_, m_), F(m_, m_), K(m_, m_), Kinv(m_, m_) {
    for (int k = 0; k < m; ++k) {
      K(k, k) = ur(2 * (m - 1 - 2 * k));
      Kinv(k, k) = ur(-2 * (m - 1 - 2 * k));
      if (k >= 1) E(k - 1, k) = Rational(vint(m - k));
      if (k + 1 < m) F(k + 1, k) = Rational(vint(k + 1));
    }
  }
  RMatrix pow(const RMatrix& x, int n) const {
    RMatrix r = RMatrix::identity(m);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
  }
  RMatrix letter(const Letter& l) const {
    Rational vv = ur(2) - ur(-2);
    switch (l.atom) {
      case Atom::E: return pow(E, l.n);
      case Atom::F: return pow(F, l.n);
      case Atom::K: return l.n >= 0 ? pow(K, l.n) : pow(Kinv, -l.n);
      case Atom::e: return pow(E.scaled(vv), l.n);
      case Atom::f: return pow((F * K).scaled(qr(1) - Rational(1)), l.n);
      case Atom::Fdiv:
        return (pow(F, l.n) * pow(K, l.n)).scaled(Rational(Laurent(1), qint_factorial(l.n)));
      case Atom::Ediv:
        return pow(E.scaled(ur(-2)), l.n).scaled(Rational(Laurent(1), qint_factorial(l.n)));
    }
    return {};
  }
  RMatrix word(const GeneratorWord& w) const {
    RMatrix r = RMatrix::identity(m).scaled(w.prefactor);
    for (const auto& l : w.letters) r = r * letter(l);
    return r;
  }
};

GeneratorWord random_word(std::mt19937& g, int len) {
  GeneratorWord w;
  std::uniform_int_distribution<int> atom(0, 6), small(1, 3), kexp(-2, 2);
  for (int i = 0; i < len; ++i) {
    Atom a = static_cast<Atom>(atom(g));
    w.letters.push_back({a, a == Atom::K ? kexp(g) : small(g)});
  }
  return w;
}

}  // namespace

TEST_CASE("relations on V_m") {
  for (int m = 1; m <= 5; ++m) {
    Gens G(m);
    CHECK(G.K * G.E == (G.E * G.K).scaled(qr(1)));
    CHECK(G.K * G.F == (G.F * G.K).scaled(qr(-1)));
    RMatrix comm = G.E * G.F + (G.F * G.E).scaled(Rational(-1));
    RMatrix rhs = (G.K + G.Kinv.scaled(Rational(-1))).scaled(Rational(Laurent(1), Laurent::u_power(2) - Laurent::u_power(-2)));
    CHECK(comm == rhs);
  }
}

TEST_CASE("normal_order examples") {
  CHECK(normal_order(GeneratorWord{}) == AE(1));
  CHECK(normal_order(parse_word("K E K^-1")) == AE::E() * qr(1));
  AE ef = normal_order(parse_word("E F"));
  AE rhs = AE::F() * AE::E() +
           (AE::K(1) - AE::K(-1)) * Rational(Laurent(1), Laurent::u_power(2) - Laurent::u_power(-2));
  CHECK(ef == rhs);
  CHECK(normal_order(parse_word("Fdiv(2) Fdiv(1)")) == AE::Fdiv(3) * (qr(-2) * Rational(qint(3))));
}

TEST_CASE("representation faithfulness on random words") {
  std::mt19937 g(7);
  for (int trial = 0; trial < 60; ++trial) {
    GeneratorWord w = random_word(g, 1 + trial % 6);
    AE x = normal_order(w);
    for (int m = 1; m <= 6; ++m) {
      Gens G(m);
      CHECK(rep(m, x) == G.word(w));
    }
  }
}

TEST_CASE("antipode") {
  CHECK(antipode(AE::K(1), 1) == AE::K(-1));
  std::mt19937 g(11);
  for (int trial = 0; trial < 30; ++trial) {
    AE x = normal_order(random_word(g, 1 + trial % 4));
    AE y = normal_order(random_word(g, 1 + trial % 3));
    CHECK(antipode(x * y) == antipode(y) * antipode(x));
    CHECK(antipode(x, 2) == AE::K(-1) * x * AE::K(1));
    CHECK(antipode(antipode(x, -1)) == x);
    CHECK(antipode(x, 3) == antipode(antipode(x, 2)));
  }
  // S(E) = -K^-1 E and S(F) = -F K pin the Hopf structure with
  // Delta(E) = E⊗1 + K⊗E, Delta(F) = F⊗K^-1 + 1⊗F.
  CHECK(antipode(AE::E()) == -(AE::K(-1) * AE::E()));
  CHECK(antipode(AE::F()) == -(AE::F() * AE::K(1)));
  for (int m = 1; m <= 5; ++m) {
    Gens G(m);
    CHECK(rep(m, antipode(AE::E(), 2)) == G.Kinv * G.E * G.K);
  }
}

TEST_CASE("push_D_left") {
  auto leg = [](int id, int eps) { WordItem w; w.is_leg = true; w.leg_id = id; w.eps = eps; return w; };
  auto val = [](const AE& x) { WordItem w; w.value = x; return w; };
  // (e⊗1)·D
  auto p = push_D_left({{val(AE::e()), leg(0, 1)}, {leg(0, 1)}});
  CHECK(p.ledger.exponents[0][1] == 1);
  CHECK(p.tensorands[0] == AE::e());
  CHECK(p.tensorands[1] == AE::K(-1));
  // (K⊗1)·D
  p = push_D_left({{val(AE::K(1)), leg(0, 1)}, {leg(0, 1)}});
  CHECK(p.tensorands[1] == AE(1));
  // (F⊗1)·D^-1
  p = push_D_left({{val(AE::F()), leg(0, -1)}, {leg(0, -1)}});
  CHECK(p.ledger.exponents[1][0] == -1);
  CHECK(p.tensorands[1] == AE::K(-1));
}

TEST_CASE("rmatrix_term") {
  RTerm t = rmatrix_term(0, 1);
  CHECK(t.sign == 1);
  CHECK(t.first == Monomial{0, 0, 0});
  t = rmatrix_term(2, 1);
  CHECK(t.scalar == qr(1));
  CHECK(t.first == Monomial{2, -2, 0});
  CHECK(t.second == Monomial{0, 0, 2});
  t = rmatrix_term(1, -1);
  CHECK(t.sign == -1);
  CHECK(t.scalar == Rational(-1));
  CHECK(t.second == Monomial{0, -1, 1});
}

TEST_CASE("membership") {
  CHECK(membership(AE::f() * AE::K(2) * AE::e(), Form::Ubar_q_ev));
  CHECK_FALSE(membership(AE::F(), Form::Ubar_q));
  CHECK(membership(AE::Fdiv(2), Form::Ucal_q));
  CHECK_FALSE(membership(AE::Fdiv(2), Form::Ubar_q));
  CHECK(membership(AE::f(2), Form::Ubar_q));
  CHECK_FALSE(membership(AE::K(1), Form::Ucal_q_ev));
  CHECK(membership(AE::K(1), Form::Ucal_q));
  CHECK_FALSE(membership(AE::E(), Form::Ucal_q));
}

TEST_CASE("U_Zq certificates") {
  CHECK(uZq_certificate(AE::Hbinom(1), {{Laurent(1), 0, 0, 1, 0}}));
  AE x = (AE::K(2) - AE(1)) * Rational(Laurent(1), qbrace(1));
  CHECK(uZq_certificate(x, {{Laurent(1), 0, 0, 1, 0}}));
  CHECK_FALSE(uZq_certificate(AE::F(), {{Laurent(1), 1, 0, 0, 0}}));
  CHECK_FALSE(find_uZq_certificate(AE::F()).has_value());
  AE y = AE::Fdiv(2) * AE::K(-4) * AE::Hbinom(2) * AE::Ediv(1) * qr(3) + AE::Hbinom(3) * AE::K(2);
  auto w = find_uZq_certificate(y);
  REQUIRE(w.has_value());
  CHECK(uZq_certificate(y, *w));
  CHECK_FALSE(find_uZq_certificate(AE::Ediv(1) * Rational(Laurent(1), qbrace(1))).has_value());
}

TEST_CASE("filtration degree") {
  CHECK(filtration_degree(AE::e(3)) == 3);
  CHECK(filtration_degree(AE(1)) == 0);
  CHECK(filtration_degree(AE::f() * AE::e(2) + AE::K(2) * AE::e(2)) == 2);
  CHECK_FALSE(filtration_degree(AE()).has_value());
}

TEST_CASE("text serialization") {
  CHECK(AE::Ediv(2).str() == "(1) * Ediv(2)");
  CHECK((AE::Fdiv(1) * AE::K(-1) * Rational(Laurent(2))).str() == "(2) * Fdiv(1) K^-1");
}
