#include "qsl2/statesum.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace qsl2 {

namespace {

// Extremum labels, indexed by traversal direction along the orientation.
AlgebraElement extremum_label(const Extremum& e) {
  if (!e.left_to_right) return AlgebraElement(1);
  return AlgebraElement::K(e.cap ? 1 : -1);
}

long state_count(const std::vector<int>& bounds) {
  long total = 1;
  for (int b : bounds) {
    total *= b;
    if (total > (1L << 40)) throw std::invalid_argument("state space too large");
  }
  return total;
}

// Lexicographic in crossing id; crossing 0 varies slowest.
State decode_state(long index, const std::vector<int>& bounds) {
  State s(bounds.size(), 0);
  for (int c = static_cast<int>(bounds.size()) - 1; c >= 0; --c) {
    s[c] = static_cast<int>(index % bounds[c]);
    index /= bounds[c];
  }
  return s;
}

template <class Acc>
std::vector<Acc> for_each_state(const std::vector<int>& bounds, int workers,
                                const std::function<void(const State&, Acc&)>& f) {
  long total = 0;
  if (std::all_of(bounds.begin(), bounds.end(), [](int b) { return b > 0; })) total = state_count(bounds);
  int w = static_cast<int>(std::min<long>(worker_count(workers), std::max(1L, total)));
  std::vector<Acc> acc(w);
  auto run = [&](int k) {
    for (long i = k; i < total; i += w) f(decode_state(i, bounds), acc[k]);
  };
  if (w == 1) {
    run(0);
    return acc;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  for (int k = 0; k < w; ++k)
    pool.emplace_back([&, k] {
      try {
        run(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return acc;
}

template <class Acc>
std::vector<Acc> for_each_state(int p, int crossings, int workers,
                                const std::function<void(const State&, Acc&)>& f) {
  return for_each_state<Acc>(std::vector<int>(crossings, std::max(p, 0)), workers, f);
}

}  // namespace

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QSL2_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

void TensorInvariant::add(const FactoredTerm& t) {
  if (ledger.n == 0 && terms.empty()) {
    ledger = t.ledger;
    ledger.kshift.assign(ledger.n, 0);
  }
  if (ledger.exponents != t.ledger.exponents) throw std::logic_error("state terms with different D-ledgers");
  if (t.scalar.is_zero()) return;
  for (const auto& x : t.tensorands)
    if (x.is_zero()) return;
  const int n = static_cast<int>(t.tensorands.size());
  Key key(n);
  std::function<void(int, const Rational&)> rec = [&](int i, const Rational& c) {
    if (i == n) {
      auto [it, fresh] = terms.emplace(key, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
      }
      return;
    }
    for (const auto& [m, v] : t.tensorands[i].terms()) {
      key[i] = m;
      rec(i + 1, c * v);
    }
  };
  rec(0, t.scalar);
}

TensorInvariant& TensorInvariant::operator+=(const TensorInvariant& o) {
  if (o.terms.empty() && o.ledger.n == 0) return *this;
  if (ledger.n == 0 && terms.empty()) ledger = DLedger(o.ledger.n), ledger.exponents = o.ledger.exponents;
  if (ledger.exponents != o.ledger.exponents) throw std::logic_error("adding invariants with different D-ledgers");
  for (const auto& [k, v] : o.terms) {
    auto [it, fresh] = terms.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  return *this;
}

FactoredTerm state_factors(const TangleDiagram& d, const State& s) {
  if (s.size() != d.crossings.size()) throw std::invalid_argument("state does not match the crossings");
  std::vector<std::vector<WordItem>> words(d.n);
  Rational scalar(1);
  std::vector<RTerm> rt;
  for (const auto& x : d.crossings) {
    rt.push_back(rmatrix_term(s[x.id], x.type == Cell::XPlus ? 1 : -1));
    scalar *= rt.back().scalar;
  }
  for (int k = 0; k < d.n; ++k) {
    for (const auto& ev : d.reading[k]) {
      if (ev.kind == ReadEvent::Extremum) {
        AlgebraElement lab = extremum_label(d.extrema[ev.index]);
        if (!(lab == AlgebraElement(1))) words[k].push_back(WordItem{false, lab, -1, 0});
        continue;
      }
      const Crossing& x = d.crossings[ev.index];
      const RTerm& t = rt[x.id];
      const bool is_alpha = ev.kind == ReadEvent::CrossingAlpha;
      const CrossingStrand& strand = is_alpha ? x.alpha() : x.beta();
      const Monomial& mono = is_alpha ? t.first : t.second;
      AlgebraElement v = AlgebraElement::monomial(mono.a, mono.b, mono.c);
      WordItem leg{true, AlgebraElement(), x.id, x.sign};
      if (strand.up) {
        words[k].push_back(WordItem{false, antipode(v), -1, 0});
        words[k].push_back(leg);
      } else {
        words[k].push_back(leg);
        words[k].push_back(WordItem{false, v, -1, 0});
      }
    }
  }
  PushedWords pw = push_D_left(words);
  FactoredTerm out;
  out.ledger = pw.ledger;
  out.scalar = scalar * pw.scalar;
  out.tensorands = std::move(pw.tensorands);
  return out;
}

TensorInvariant state_term(const TangleDiagram& d, const State& s) {
  TensorInvariant t;
  t.diagram = d.name;
  FactoredTerm f = state_factors(d, s);
  t.ledger = DLedger(d.n);
  t.ledger.exponents = f.ledger.exponents;
  t.add(f);
  return t;
}

TensorInvariant universal_invariant(const TangleDiagram& d, int p, int workers) {
  if (p < 0) throw std::invalid_argument("truncation bound must be non-negative");
  const int N = static_cast<int>(d.crossings.size());
  auto parts = for_each_state<TensorInvariant>(
      p, N, workers, [&](const State& s, TensorInvariant& acc) { acc.add(state_factors(d, s)); });
  TensorInvariant J;
  J.diagram = d.name;
  J.ledger = DLedger(d.n);
  J.ledger.exponents = state_factors(d, State(N, 0)).ledger.exponents;
  for (const auto& part : parts) J += part;
  J.truncation = N == 0 ? -1 : p;
  return J;
}

namespace {

// Diagonal of K^-1 x on V_m, x a PBW element.
std::vector<Rational> twisted_diagonal(int m, const AlgebraElement& x) {
  std::vector<Rational> out(m);
  for (const auto& [mono, c] : x.terms()) {
    if (mono.a != mono.c || mono.a >= m) continue;
    LMatrix r = rep_monomial(m, mono);
    for (int k = 0; k < m; ++k)
      if (!r(k, k).is_zero()) out[k] += c * Rational(r(k, k).shifted(-2 * weight(m, k)));
  }
  return out;
}

// Twisted diagonals of every tensorand on every module in use.
struct Diagonals {
  std::vector<std::map<int, std::vector<Rational>>> d;
};

Diagonals diagonals(const FactoredTerm& t, const std::vector<std::vector<int>>& dims) {
  Diagonals out;
  out.d.resize(t.tensorands.size());
  for (std::size_t i = 0; i < t.tensorands.size(); ++i)
    for (int m : dims[i]) out.d[i][m] = twisted_diagonal(m, t.tensorands[i]);
  return out;
}

Rational evaluate(const FactoredTerm& t, const Diagonals& dg, const std::vector<Color>& colors) {
  const int n = static_cast<int>(t.tensorands.size());
  if (t.scalar.is_zero()) return {};
  if (t.ledger.is_trivial()) {
    Rational r = t.scalar;
    for (int i = 0; i < n && !r.is_zero(); ++i) {
      Rational tr;
      for (const auto& [m, cm] : colors[i].coeffs()) {
        Rational s;
        for (const auto& v : dg.d[i].at(m)) s += v;
        tr += cm * s;
      }
      r *= tr;
    }
    return r;
  }
  // Weighted basis vectors per tensorand: (weight, color coefficient * diagonal entry).
  std::vector<std::vector<std::pair<int, Rational>>> diag(n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [m, cm] : colors[i].coeffs()) {
      const auto& dv = dg.d[i].at(m);
      for (int k = 0; k < m; ++k)
        if (!dv[k].is_zero()) diag[i].push_back({weight(m, k), cm * dv[k]});
    }
    if (diag[i].empty()) return {};
  }
  const auto& e = t.ledger.exponents;
  Rational total;
  std::vector<int> lam(n);
  std::function<void(int, const Rational&)> rec = [&](int i, const Rational& c) {
    if (i == n) {
      std::int64_t ue = 0;
      for (int a = 0; a < n; ++a) {
        ue += static_cast<std::int64_t>(e[a][a]) * lam[a] * lam[a];
        for (int b = a + 1; b < n; ++b) ue += static_cast<std::int64_t>(e[a][b]) * lam[a] * lam[b];
      }
      total += c * Rational(Laurent::u_power(ue));
      return;
    }
    for (const auto& [w, v] : diag[i]) {
      lam[i] = w;
      rec(i + 1, c * v);
    }
  };
  rec(0, t.scalar);
  return total;
}

std::vector<std::vector<int>> dims_in_use(int n, const std::vector<std::vector<Color>>& tuples) {
  std::vector<std::set<int>> used(n);
  for (const auto& cs : tuples) {
    if (static_cast<int>(cs.size()) != n) throw std::invalid_argument("one color per component expected");
    for (int i = 0; i < n; ++i)
      for (const auto& [m, c] : cs[i].coeffs()) used[i].insert(m);
  }
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < n; ++i) out[i].assign(used[i].begin(), used[i].end());
  return out;
}

}  // namespace

Rational trace_term(const FactoredTerm& t, const std::vector<Color>& colors) {
  const int n = static_cast<int>(t.tensorands.size());
  return evaluate(t, diagonals(t, dims_in_use(n, {colors})), colors);
}

namespace {

// F^(n) or e^n on a strand kills every V_m with m <= n.
std::vector<int> state_bounds(const TangleDiagram& d, const std::vector<std::vector<int>>& dims) {
  std::vector<int> bounds;
  for (const auto& x : d.crossings) {
    int a = dims[x.bl.comp].empty() ? 0 : dims[x.bl.comp].back();
    int b = dims[x.br.comp].empty() ? 0 : dims[x.br.comp].back();
    bounds.push_back(std::min(a, b));
  }
  return bounds;
}

std::vector<Rational> jones_pass(const TangleDiagram& d, const std::vector<std::vector<Color>>& tuples,
                                 const std::vector<int>& bounds, int workers) {
  auto dims = dims_in_use(d.n, tuples);
  for (const auto& v : dims)
    if (v.empty()) return std::vector<Rational>(tuples.size());
  using Acc = std::vector<Rational>;
  auto parts = for_each_state<Acc>(bounds, workers, [&](const State& s, Acc& acc) {
    if (acc.empty()) acc.resize(tuples.size());
    FactoredTerm t = state_factors(d, s);
    for (const auto& x : t.tensorands)
      if (x.is_zero()) return;
    Diagonals dg = diagonals(t, dims);
    for (std::size_t k = 0; k < tuples.size(); ++k) acc[k] += evaluate(t, dg, tuples[k]);
  });
  std::vector<Rational> r(tuples.size());
  for (const auto& part : parts)
    for (std::size_t k = 0; k < part.size(); ++k) r[k] += part[k];
  return r;
}

}  // namespace

std::vector<Rational> colored_jones_universal(const TangleDiagram& d,
                                              const std::vector<std::vector<Color>>& tuples, int workers) {
  // Tuples with the same state bounds share one pass over the states.
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < tuples.size(); ++k)
    groups[state_bounds(d, dims_in_use(d.n, {tuples[k]}))].push_back(k);
  std::vector<Rational> r(tuples.size());
  for (const auto& [bounds, idx] : groups) {
    std::vector<std::vector<Color>> sub;
    for (std::size_t k : idx) sub.push_back(tuples[k]);
    std::vector<Rational> v = jones_pass(d, sub, bounds, workers);
    for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = v[k];
  }
  return r;
}

Rational colored_jones_universal(const TangleDiagram& d, const std::vector<Color>& colors, int workers) {
  if (static_cast<int>(colors.size()) != d.n) throw std::invalid_argument("one color per component expected");
  return colored_jones_universal(d, std::vector<std::vector<Color>>{colors}, workers)[0];
}

AlgebraElement partial_trace(const TensorInvariant& J, int keep, const std::vector<Color>& colors) {
  if (!J.ledger.is_trivial()) throw std::invalid_argument("partial trace needs a trivial D-ledger");
  AlgebraElement out;
  std::map<std::pair<int, Monomial>, Rational> cache;
  auto tr = [&](int i, const Monomial& m) -> const Rational& {
    auto key = std::make_pair(i, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, qtrace(colors[i], AlgebraElement::monomial(m.a, m.b, m.c))).first;
    return it->second;
  };
  for (const auto& [key, c] : J.terms) {
    Rational v = c;
    for (int i = 0; i < static_cast<int>(key.size()) && !v.is_zero(); ++i)
      if (i != keep) v *= tr(i, key[i]);
    if (!v.is_zero()) out.add_term(key[keep], v);
  }
  return out;
}

// Matrix route ----------------------------------------------------------------------

namespace {

struct Site {
  int m;
  bool up;
};

int site_weight(const Site& s, int k) { return s.up ? weight(s.m, k) : -weight(s.m, k); }

const LMatrix& action(const Site& s, const Monomial& x) {
  static std::mutex mu;
  static std::map<std::tuple<int, bool, int, int, int>, LMatrix> cache;
  auto key = std::make_tuple(s.m, s.up, x.a, x.b, x.c);
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LMatrix r;
  if (s.up) {
    r = rep_monomial(s.m, x);
  } else {
    RMatrix d = rep(s.m, antipode(AlgebraElement::monomial(x.a, x.b, x.c))).transpose();
    r = LMatrix(s.m, s.m);
    for (std::size_t i = 0; i < d.a.size(); ++i) {
      auto v = d.a[i].as_laurent();
      if (!v) throw std::logic_error("dual action left the Laurent ring");
      r.a[i] = *v;
    }
  }
  return cache.emplace(key, std::move(r)).first->second;
}

// Sparse local operator: column (input index) -> list of (output index, coefficient).
using LocalOp = std::vector<std::vector<std::pair<int, Laurent>>>;

struct Tensor {
  std::vector<int> dims;
  std::vector<Laurent> v;
};

Tensor apply_local(const Tensor& t, int pos, int nin, const std::vector<int>& outdims, const LocalOp& op) {
  long pre = 1, in = 1, post = 1, out = 1;
  for (int i = 0; i < pos; ++i) pre *= t.dims[i];
  for (int i = pos; i < pos + nin; ++i) in *= t.dims[i];
  for (int i = pos + nin; i < static_cast<int>(t.dims.size()); ++i) post *= t.dims[i];
  for (int d : outdims) out *= d;
  Tensor r;
  r.dims.assign(t.dims.begin(), t.dims.begin() + pos);
  r.dims.insert(r.dims.end(), outdims.begin(), outdims.end());
  r.dims.insert(r.dims.end(), t.dims.begin() + pos + nin, t.dims.end());
  r.v.assign(pre * out * post, Laurent());
  for (long a = 0; a < pre; ++a)
    for (long b = 0; b < in; ++b)
      for (long c = 0; c < post; ++c) {
        const Laurent& x = t.v[(a * in + b) * post + c];
        if (x.is_zero()) continue;
        for (const auto& [o, coef] : op[b]) r.v[(a * out + o) * post + c] += x * coef;
      }
  return r;
}

LocalOp cup_op(const Site& left) {
  LocalOp op(1);
  for (int k = 0; k < left.m; ++k)
    op[0].push_back({k * left.m + k, left.up ? Laurent(1) : Laurent::u_power(2 * weight(left.m, k))});
  return op;
}

LocalOp cap_op(const Site& left) {
  LocalOp op(left.m * left.m);
  for (int k = 0; k < left.m; ++k)
    op[k * left.m + k].push_back({0, left.up ? Laurent::u_power(-2 * weight(left.m, k)) : Laurent(1)});
  return op;
}

// x in w1 (bottom left), y in w2 (bottom right); output is w2 ⊗ w1.
// X+ is the braiding x⊗y -> τR(x⊗y), X- its inverse y⊗x -> R^-1(x⊗y).
LocalOp crossing_op(Cell type, const Site& w1, const Site& w2) {
  const int d1 = w1.m, d2 = w2.m;
  std::vector<std::vector<Laurent>> dense(d1 * d2, std::vector<Laurent>(d1 * d2));
  const bool plus = type == Cell::XPlus;
  for (int n = 0; n < std::min(d1, d2); ++n) {
    RTerm t = rmatrix_term(n, plus ? 1 : -1);
    const Laurent c = *t.scalar.as_laurent();
    const LMatrix& A = plus ? action(w1, t.first) : action(w2, t.first);
    const LMatrix& B = plus ? action(w2, t.second) : action(w1, t.second);
    for (int i1 = 0; i1 < d1; ++i1)
      for (int i2 = 0; i2 < d2; ++i2)
        for (int j1 = 0; j1 < d1; ++j1)
          for (int j2 = 0; j2 < d2; ++j2) {
            const Laurent& a = plus ? A(j1, i1) : A(j2, i2);
            if (a.is_zero()) continue;
            const Laurent& b = plus ? B(j2, i2) : B(j1, i1);
            if (b.is_zero()) continue;
            dense[i1 * d2 + i2][j2 * d1 + j1] += c * a * b;
          }
  }
  LocalOp op(d1 * d2);
  for (int i1 = 0; i1 < d1; ++i1)
    for (int i2 = 0; i2 < d2; ++i2)
      for (int j1 = 0; j1 < d1; ++j1)
        for (int j2 = 0; j2 < d2; ++j2) {
          Laurent& x = dense[i1 * d2 + i2][j2 * d1 + j1];
          if (x.is_zero()) continue;
          const std::int64_t dexp =
              static_cast<std::int64_t>(site_weight(w1, j1)) * site_weight(w2, j2) * (plus ? 1 : -1);
          op[i1 * d2 + i2].push_back({j2 * d1 + j1, x.shifted(dexp)});
        }
  return op;
}

Laurent matrix_value(const TangleDiagram& d, const std::vector<int>& dims) {
  auto site = [&](int level, int pos) {
    return Site{dims[d.point_comp[level][pos]], static_cast<bool>(d.point_up[level][pos])};
  };
  Tensor t{{}, {Laurent(1)}};
  for (int k = 0; k < d.n; ++k) {
    Site left = site(0, 2 * k);
    t = apply_local(t, 2 * k, 0, {left.m, left.m}, cup_op(left));
  }
  for (int r = 0; r < static_cast<int>(d.rows.size()); ++r) {
    int i = 0, pos = 0, o = 0;
    for (Cell c : d.rows[r]) {
      switch (c) {
        case Cell::Strand:
          ++i, ++pos, ++o;
          break;
        case Cell::Cap:
          t = apply_local(t, pos, 2, {}, cap_op(site(r, i)));
          i += 2;
          break;
        case Cell::Cup: {
          Site left = site(r + 1, o);
          t = apply_local(t, pos, 0, {left.m, left.m}, cup_op(left));
          pos += 2, o += 2;
          break;
        }
        default: {
          Site w1 = site(r, i), w2 = site(r, i + 1);
          t = apply_local(t, pos, 2, {w2.m, w1.m}, crossing_op(c, w1, w2));
          i += 2, pos += 2, o += 2;
          break;
        }
      }
    }
  }
  if (!t.dims.empty() || t.v.size() != 1) throw std::logic_error("matrix evaluation did not close up");
  return t.v[0];
}

}  // namespace

Rational colored_jones_matrix(const TangleDiagram& d, const std::vector<Color>& colors) {
  if (static_cast<int>(colors.size()) != d.n) throw std::invalid_argument("one color per component expected");
  Rational total;
  std::vector<int> dims(d.n);
  std::function<void(int, const Rational&)> rec = [&](int i, const Rational& c) {
    if (i == d.n) {
      total += c * Rational(matrix_value(d, dims));
      return;
    }
    for (const auto& [m, cm] : colors[i].coeffs()) {
      dims[i] = m;
      rec(i + 1, c * cm);
    }
  };
  rec(0, Rational(1));
  return total;
}

// Brunnian membership -----------------------------------------------------------------

namespace {

// gcd of fractions: gcd of numerators over lcm of denominators, up to units.
Rational content_gcd(const Rational& x, const Rational& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  Laurent num = gcd(x.num(), y.num());
  Laurent g = gcd(x.den(), y.den());
  Laurent den = *(x.den() * y.den()).exact_div(g);
  return Rational(num, den);
}

// Content of x with respect to the Z[q,q^-1]-basis f^a K^b e^c.
Rational ubar_content(const AlgebraElement& x) {
  Rational g;
  for (const auto& [m, c] : x.terms()) {
    Rational v = c;
    if (m.a > 0) v *= Rational(Laurent::q_power(static_cast<std::int64_t>(m.a) * (m.a - 1) / 2), qbrace_factorial(m.a));
    g = content_gcd(g, v);
  }
  return g;
}

}  // namespace

BrunnianReport verify_brunnian_membership(const TangleDiagram& d, int i, int p, int workers) {
  if (i < 1 || i > d.n) throw std::invalid_argument("component index out of range");
  if (p < 0) throw std::invalid_argument("truncation bound must be non-negative");
  for (const auto& row : linking_matrix(d))
    for (int v : row)
      if (v) throw std::invalid_argument("linking matrix must vanish");
  BrunnianReport rep;
  rep.component = i;
  rep.truncation = p;
  rep.diagram_form = brunnian_form(d, i);
  const int N = static_cast<int>(d.crossings.size());
  struct Acc {
    long states = 0, certified = 0;
    std::vector<MembershipFailure> failures;
  };
  auto parts = for_each_state<Acc>(p, N, workers, [&](const State& s, Acc& acc) {
    ++acc.states;
    FactoredTerm t = state_factors(d, s);
    if (!t.ledger.is_trivial()) throw std::logic_error("ledger does not cancel");
    Rational c = t.scalar;
    for (const auto& x : t.tensorands)
      if (x.is_zero()) c = Rational();
    if (c.is_zero()) {
      ++acc.certified;
      return;
    }
    bool ok = true;
    for (int j = 0; j < d.n; ++j) {
      if (j == i - 1) continue;
      const AlgebraElement& x = t.tensorands[j];
      for (const auto& [m, v] : x.terms())
        if (m.b % 2) {
          acc.failures.push_back({s, j, "odd K exponent"});
          ok = false;
          break;
        }
      if (!ok) break;
      c *= ubar_content(x);
    }
    if (!ok) return;
    AlgebraElement xi = t.tensorands[i - 1] * c;
    if (!find_uZq_certificate(xi)) {
      acc.failures.push_back({s, i - 1, "no U_Zq^ev certificate"});
      return;
    }
    ++acc.certified;
  });
  for (auto& a : parts) {
    rep.states += a.states;
    rep.certified += a.certified;
    rep.failures.insert(rep.failures.end(), a.failures.begin(), a.failures.end());
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const MembershipFailure& x, const MembershipFailure& y) { return x.state < y.state; });
  return rep;
}

}  // namespace qsl2
