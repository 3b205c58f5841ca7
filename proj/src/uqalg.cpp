#include "qsl2/uqalg.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qsl2 {

namespace {

Laurent qp(std::int64_t k) { return Laurent::q_power(k); }

// v - v^-1 with v = q^(1/2)
Laurent v_minus_vinv() { return Laurent::u_power(2) - Laurent::u_power(-2); }

struct TermL {
  Monomial m;
  Laurent c;
};

// e^c Fdiv(a) in normal order.
const std::vector<TermL>& commute_table(int c, int a) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<TermL>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find({c, a});
  if (it != cache.end()) return it->second;
  std::vector<TermL> cur{{Monomial{a, 0, 0}, Laurent(1)}};
  int start = 0;
  for (int k = c - 1; k >= 1; --k) {
    auto jt = cache.find({k, a});
    if (jt != cache.end()) {
      cur = jt->second;
      start = k;
      break;
    }
  }
  for (int k = start + 1; k <= c; ++k) {
    std::map<Monomial, Laurent> next;
    for (const auto& t : cur) {
      const auto [ap, kp, cp] = t.m;
      next[Monomial{ap, kp, cp + 1}] += t.c * qp(-ap - kp);
      if (ap >= 1) {
        next[Monomial{ap - 1, kp + 2, cp}] += t.c * qp(1 - ap);
        next[Monomial{ap - 1, kp, cp}] -= t.c;
      }
    }
    cur.clear();
    for (auto& [m, v] : next)
      if (!v.is_zero()) cur.push_back({m, std::move(v)});
    cache.emplace(std::make_pair(k, a), cur);
  }
  return cache.emplace(std::make_pair(c, a), cur).first->second;
}

}  // namespace

AlgebraElement::AlgebraElement(const Rational& s) {
  if (!s.is_zero()) terms_.emplace(Monomial{}, s);
}

AlgebraElement AlgebraElement::monomial(int a, int b, int c, const Rational& coef) {
  if (a < 0 || c < 0) throw std::invalid_argument("negative divided-power index");
  AlgebraElement r;
  if (!coef.is_zero()) r.terms_.emplace(Monomial{a, b, c}, coef);
  return r;
}

AlgebraElement AlgebraElement::Fdiv(int n) { return monomial(n, 0, 0); }

AlgebraElement AlgebraElement::Ediv(int n) {
  return monomial(0, 0, n, Rational(Laurent(1), qbrace_factorial(n)));
}

AlgebraElement AlgebraElement::K(int b) { return monomial(0, b, 0); }

AlgebraElement AlgebraElement::e(int n) { return monomial(0, 0, n); }

AlgebraElement AlgebraElement::f(int n) {
  return monomial(n, 0, 0, Rational(qbrace_factorial(n) * qp(-n * (n - 1) / 2)));
}

AlgebraElement AlgebraElement::E() {
  return monomial(0, 0, 1, Rational(Laurent(1), v_minus_vinv()));
}

AlgebraElement AlgebraElement::F() { return monomial(1, -1, 0); }

AlgebraElement AlgebraElement::Hbinom(int s) {
  AlgebraElement r(1);
  for (int t = 0; t < s; ++t)
    r = r * (monomial(0, 2, 0, Rational(qp(-t))) - AlgebraElement(1));
  return r * Rational(Laurent(1), qbrace_factorial(s));
}

Rational AlgebraElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  if (terms_.empty()) return false;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

int AlgebraElement::degree() const {
  if (!is_homogeneous()) throw std::logic_error("element is not homogeneous");
  return terms_.begin()->first.degree();
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement multiply(const Monomial& x, const Monomial& y) {
  AlgebraElement r;
  const auto& table = commute_table(x.c, y.a);
  for (const auto& t : table) {
    const int ap = t.m.a, k = t.m.b, cp = t.m.c;
    Laurent coef = t.c * qp(-static_cast<std::int64_t>(x.b) * ap - static_cast<std::int64_t>(x.a) * ap -
                            static_cast<std::int64_t>(cp) * y.b);
    if (x.a > 0 && ap > 0) coef *= qbinom(x.a + ap, x.a);
    r.add_term(Monomial{x.a + ap, x.b + k + y.b, cp + y.c}, Rational(coef));
  }
  return r;
}

namespace {

const AlgebraElement& multiply_cached(const Monomial& x, const Monomial& y) {
  thread_local std::map<std::pair<Monomial, Monomial>, AlgebraElement> cache;
  auto key = std::make_pair(x, y);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 200000) cache.clear();
    it = cache.emplace(key, multiply(x, y)).first;
  }
  return it->second;
}

}  // namespace

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Rational s = ca * cb;
      for (const auto& [m, c] : multiply_cached(ma, mb).terms_) r.add_term(m, c * s);
    }
  return r;
}

std::map<Monomial, Rational> AlgebraElement::ediv_terms() const {
  std::map<Monomial, Rational> out;
  for (const auto& [m, c] : terms_) out.emplace(m, c * Rational(qbrace_factorial(m.c)));
  return out;
}

AlgebraElement AlgebraElement::from_ediv_terms(const std::map<Monomial, Rational>& t) {
  AlgebraElement r;
  for (const auto& [m, c] : t) r.add_term(m, c * Rational(Laurent(1), qbrace_factorial(m.c)));
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : ediv_terms()) {
    std::string mono;
    auto app = [&](const std::string& s) { mono += mono.empty() ? s : " " + s; };
    if (m.a) app("Fdiv(" + std::to_string(m.a) + ")");
    if (m.b) app("K^" + std::to_string(m.b));
    if (m.c) app("Ediv(" + std::to_string(m.c) + ")");
    std::string cs = c.str();
    std::string term;
    if (mono.empty())
      term = "(" + cs + ")";
    else
      term = "(" + cs + ") * " + mono;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

// Antipode ------------------------------------------------------------------------

namespace {

const AlgebraElement& antipode_monomial(const Monomial& m) {
  thread_local std::map<Monomial, AlgebraElement> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const std::int64_t a = m.a, cc = m.c;
  Laurent se = qp(cc * (cc - 1) / 2);
  if (cc % 2) se = -se;
  Laurent sf = qp(a * (a + 1) / 2);
  if (a % 2) sf = -sf;
  AlgebraElement t = AlgebraElement::monomial(0, -m.c, m.c, Rational(se)) * AlgebraElement::K(-m.b) *
                     AlgebraElement::monomial(m.a, -m.a, 0, Rational(sf));
  return cache.emplace(m, std::move(t)).first->second;
}

AlgebraElement antipode1(const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms()) r += antipode_monomial(m) * c;
  return r;
}

// K^-j x K^j
AlgebraElement conjugate_K(const AlgebraElement& x, int j) {
  AlgebraElement r;
  for (const auto& [m, c] : x.terms())
    r.add_term(m, c * Rational(qp(static_cast<std::int64_t>(j) * (m.a - m.c))));
  return r;
}

}  // namespace

AlgebraElement antipode(const AlgebraElement& x, int power) {
  int odd = ((power % 2) + 2) % 2;
  int j = (power - odd) / 2;
  AlgebraElement y = j ? conjugate_K(x, j) : x;
  return odd ? antipode1(y) : y;
}

// Words ---------------------------------------------------------------------------

int Letter::degree() const {
  switch (atom) {
    case Atom::E:
    case Atom::e:
    case Atom::Ediv:
      return n;
    case Atom::F:
    case Atom::f:
    case Atom::Fdiv:
      return -n;
    case Atom::K:
      return 0;
  }
  return 0;
}

int GeneratorWord::degree() const {
  int d = 0;
  for (const auto& l : letters) d += l.degree();
  return d;
}

AlgebraElement letter_value(const Letter& l) {
  auto power = [](const AlgebraElement& x, int n) {
    if (n < 0) throw std::invalid_argument("negative power of a non-invertible generator");
    AlgebraElement r(1);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
  };
  switch (l.atom) {
    case Atom::E:
      return power(AlgebraElement::E(), l.n);
    case Atom::F:
      return power(AlgebraElement::F(), l.n);
    case Atom::K:
      return AlgebraElement::K(l.n);
    case Atom::e:
      if (l.n < 0) throw std::invalid_argument("negative power of e");
      return AlgebraElement::e(l.n);
    case Atom::f:
      if (l.n < 0) throw std::invalid_argument("negative power of f");
      return AlgebraElement::f(l.n);
    case Atom::Ediv:
      if (l.n < 0) throw std::invalid_argument("negative divided power");
      return AlgebraElement::Ediv(l.n);
    case Atom::Fdiv:
      if (l.n < 0) throw std::invalid_argument("negative divided power");
      return AlgebraElement::Fdiv(l.n);
  }
  return {};
}

AlgebraElement normal_order(const GeneratorWord& w) {
  AlgebraElement r(w.prefactor);
  for (const auto& l : w.letters) r = r * letter_value(l);
  return r;
}

GeneratorWord parse_word(const std::string& text) {
  GeneratorWord w;
  std::string s;
  for (char c : text) s += (c == '*' || c == '.') ? ' ' : c;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto fail = [&]() { return std::invalid_argument("bad word token '" + tok + "'"); };
    Letter l{Atom::K, 1};
    std::string head = tok, arg;
    auto paren = tok.find('(');
    auto caret = tok.find('^');
    if (paren != std::string::npos) {
      if (tok.back() != ')') throw fail();
      head = tok.substr(0, paren);
      arg = tok.substr(paren + 1, tok.size() - paren - 2);
      if (head == "Ediv")
        l.atom = Atom::Ediv;
      else if (head == "Fdiv")
        l.atom = Atom::Fdiv;
      else
        throw fail();
      try {
        l.n = std::stoi(arg);
      } catch (...) {
        throw fail();
      }
    } else {
      if (caret != std::string::npos) {
        head = tok.substr(0, caret);
        try {
          l.n = std::stoi(tok.substr(caret + 1));
        } catch (...) {
          throw fail();
        }
      }
      if (head == "E")
        l.atom = Atom::E;
      else if (head == "F")
        l.atom = Atom::F;
      else if (head == "K")
        l.atom = Atom::K;
      else if (head == "e")
        l.atom = Atom::e;
      else if (head == "f")
        l.atom = Atom::f;
      else
        throw fail();
    }
    w.letters.push_back(l);
  }
  return w;
}

// D-ledger ------------------------------------------------------------------------

DLedger::DLedger(int n_) : n(n_), exponents(n_, std::vector<int>(n_, 0)), kshift(n_, 0) {}

void DLedger::add(int i, int j, int eps) {
  exponents[i][j] += eps;
  if (i != j) exponents[j][i] += eps;
}

bool DLedger::is_trivial() const {
  for (const auto& row : exponents)
    for (int x : row)
      if (x) return false;
  return true;
}

PushedWords push_D_left(const std::vector<std::vector<WordItem>>& words) {
  const int n = static_cast<int>(words.size());
  struct Leg {
    int tensorand;
    int degree_before;
    int eps;
  };
  std::map<int, std::vector<Leg>> legs;
  PushedWords out;
  out.ledger = DLedger(n);
  std::vector<AlgebraElement> products(n, AlgebraElement(1));
  for (int i = 0; i < n; ++i) {
    int d = 0;
    for (const auto& it : words[i]) {
      if (it.is_leg) {
        legs[it.leg_id].push_back({i, d, it.eps});
      } else {
        if (it.value.is_zero()) {
          products[i] = AlgebraElement();
          continue;
        }
        if (!it.value.is_homogeneous()) throw std::logic_error("non-homogeneous atom in D-push");
        d += it.value.degree();
        products[i] = products[i] * it.value;
      }
    }
  }
  std::vector<int> kcorr(n, 0);
  std::int64_t qexp = 0;
  for (const auto& [id, v] : legs) {
    if (v.size() != 2 || v[0].eps != v[1].eps)
      throw std::logic_error("malformed D factor " + std::to_string(id));
    const int eps = v[0].eps;
    const Leg& x = v[0];
    const Leg& y = v[1];
    out.ledger.add(x.tensorand, y.tensorand, eps);
    kcorr[x.tensorand] -= eps * y.degree_before;
    kcorr[y.tensorand] -= eps * x.degree_before;
    qexp += static_cast<std::int64_t>(eps) * x.degree_before * y.degree_before;
  }
  out.scalar = Rational(qp(qexp));
  for (int i = 0; i < n; ++i) {
    out.ledger.kshift[i] = kcorr[i];
    out.tensorands.push_back(kcorr[i] ? AlgebraElement::K(kcorr[i]) * products[i] : products[i]);
  }
  return out;
}

RTerm rmatrix_term(int n, int sign) {
  if (n < 0) throw std::invalid_argument("negative state index");
  RTerm t;
  t.sign = sign >= 0 ? 1 : -1;
  if (t.sign > 0) {
    t.scalar = Rational(qp(static_cast<std::int64_t>(n) * (n - 1) / 2));
    t.first = Monomial{n, -n, 0};
    t.second = Monomial{0, 0, n};
  } else {
    t.scalar = Rational(n % 2 ? -1 : 1);
    t.first = Monomial{n, 0, 0};
    t.second = Monomial{0, -n, n};
  }
  return t;
}

// Integral forms --------------------------------------------------------------------

bool membership(const AlgebraElement& x, Form form) {
  const bool even = form == Form::Ubar_q_ev || form == Form::Ucal_q_ev;
  const bool bar = form == Form::Ubar_q || form == Form::Ubar_q_ev;
  for (const auto& [m, c] : x.terms()) {
    if (even && m.b % 2) return false;
    Rational v = c;
    if (bar && m.a > 0)
      v *= Rational(qp(static_cast<std::int64_t>(m.a) * (m.a - 1) / 2), qbrace_factorial(m.a));
    if (!v.in_q_ring()) return false;
  }
  return true;
}

AlgebraElement expand_certificate(const std::vector<CertTerm>& witness) {
  AlgebraElement r;
  for (const auto& t : witness) {
    AlgebraElement m = AlgebraElement::Fdiv(t.i) * AlgebraElement::K(2 * t.j) *
                       AlgebraElement::Hbinom(t.s) * AlgebraElement::Ediv(t.k);
    r += m * Rational(t.coef);
  }
  return r;
}

bool uZq_certificate(const AlgebraElement& x, const std::vector<CertTerm>& witness) {
  for (const auto& t : witness)
    if (!t.coef.in_q_ring() || t.s < 0 || t.i < 0 || t.k < 0) return false;
  return expand_certificate(witness) == x;
}

namespace {

// Coefficients in X = K^2 of [H;s]: prod_{t<s}(q^-t X - 1) / {s}!.
std::vector<Rational> hbinom_poly(int s) {
  std::vector<Laurent> p{Laurent(1)};
  for (int t = 0; t < s; ++t) {
    std::vector<Laurent> n(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      n[i + 1] += p[i] * qp(-t);
      n[i] -= p[i];
    }
    p = std::move(n);
  }
  Laurent fs = qbrace_factorial(s);
  std::vector<Rational> r;
  for (auto& c : p) r.emplace_back(c, fs);
  return r;
}

// Writes X^{j0} Q(X) with Q polynomial as a Z[q^+-1] combination of X^{j0}[H;s].
std::optional<std::vector<std::pair<int, Laurent>>> split_kpart(const std::map<int, Rational>& coeffs,
                                                                int j0) {
  int top = coeffs.rbegin()->first;
  std::vector<Rational> Q(static_cast<std::size_t>(top - j0 + 1));
  for (const auto& [t, c] : coeffs) Q[static_cast<std::size_t>(t - j0)] = c;
  std::vector<std::pair<int, Laurent>> out;
  for (int s = static_cast<int>(Q.size()) - 1; s >= 0; --s) {
    if (Q[s].is_zero()) continue;
    auto h = hbinom_poly(s);
    Rational a = Q[s] / h[s];
    if (!a.in_q_ring()) return std::nullopt;
    for (int i = 0; i <= s; ++i) Q[i] -= a * h[i];
    out.emplace_back(s, a.num());
  }
  return out;
}

}  // namespace

std::optional<std::vector<CertTerm>> find_uZq_certificate(const AlgebraElement& x) {
  // Group by (Fdiv, Ediv) index with the K-part expressed in X = K^2.
  std::map<std::pair<int, int>, std::map<int, Rational>> groups;
  for (const auto& [m, c] : x.ediv_terms()) {
    if (m.b % 2) return std::nullopt;
    groups[{m.a, m.c}][m.b / 2] = c;
  }
  std::vector<CertTerm> w;
  for (const auto& [ac, coeffs] : groups) {
    std::optional<std::vector<std::pair<int, Laurent>>> parts;
    const int lo = coeffs.begin()->first;
    int j0 = lo;
    for (; j0 >= lo - 3; --j0)
      if ((parts = split_kpart(coeffs, j0))) break;
    if (!parts) return std::nullopt;
    for (const auto& [s, a] : *parts) w.push_back(CertTerm{a, ac.first, j0, s, ac.second});
  }
  if (!uZq_certificate(x, w)) return std::nullopt;
  return w;
}

std::optional<int> filtration_degree(const AlgebraElement& x) {
  if (x.is_zero()) return std::nullopt;
  int d = x.terms().begin()->first.c;
  for (const auto& [m, c] : x.terms()) d = std::min(d, m.c);
  return d;
}

}  // namespace qsl2
