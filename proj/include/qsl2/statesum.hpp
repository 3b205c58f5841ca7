// State sums for the universal sl2 invariant of bottom tangles, colored Jones
// polynomials along two independent routes, and the Brunnian membership check.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsl2/reptheory.hpp"
#include "qsl2/tangle.hpp"
#include "qsl2/uqalg.hpp"

namespace qsl2 {

// Crossing id -> non-negative index.
using State = std::vector<int>;

inline int state_size(const State& s) {
  int m = 0;
  for (int v : s) m = std::max(m, v);
  return m;
}

// One state's contribution before expanding the tensor product.
struct FactoredTerm {
  DLedger ledger;
  Rational scalar = Rational(1);
  std::vector<AlgebraElement> tensorands;
};

struct TensorInvariant {
  using Key = std::vector<Monomial>;

  DLedger ledger;  // only the exponents are meaningful; K shifts live in the terms
  std::map<Key, Rational> terms;
  int truncation = -1;  // states with |s| < truncation were summed; -1 when exact
  std::string diagram;

  void add(const FactoredTerm& t);
  TensorInvariant& operator+=(const TensorInvariant& o);
  friend bool operator==(const TensorInvariant& a, const TensorInvariant& b) {
    return a.ledger.exponents == b.ledger.exponents && a.terms == b.terms;
  }
};

FactoredTerm state_factors(const TangleDiagram& d, const State& s);
TensorInvariant state_term(const TangleDiagram& d, const State& s);

// Calls f(state) for every state with all indices < p, over `workers` threads
// (0: QSL2_WORKERS or the hardware concurrency).
int worker_count(int requested = 0);

TensorInvariant universal_invariant(const TangleDiagram& d, int p, int workers = 0);

// (tr_q^{X_1} ⊗ ... ⊗ tr_q^{X_n}) applied to a factored term, with the D-ledger
// evaluated on weight vectors.
Rational trace_term(const FactoredTerm& t, const std::vector<Color>& colors);

Rational colored_jones_universal(const TangleDiagram& d, const std::vector<Color>& colors,
                                 int workers = 0);
// Many color tuples from one pass over the states.
std::vector<Rational> colored_jones_universal(const TangleDiagram& d,
                                              const std::vector<std::vector<Color>>& tuples,
                                              int workers = 0);
Rational colored_jones_matrix(const TangleDiagram& d, const std::vector<Color>& colors);

// Traces every tensorand except `keep` (0-based). Requires a trivial ledger.
AlgebraElement partial_trace(const TensorInvariant& J, int keep, const std::vector<Color>& colors);

struct MembershipFailure {
  State state;
  int tensorand = 0;  // 0-based
  std::string reason;
};

struct BrunnianReport {
  int component = 0;  // 1-based
  int truncation = 0;
  long states = 0;
  long certified = 0;
  bool diagram_form = false;  // every crossing touches the component
  std::vector<MembershipFailure> failures;
  // Only a diagram in Brunnian form with all states certified counts as a pass.
  bool passed() const { return diagram_form && failures.empty(); }
};

BrunnianReport verify_brunnian_membership(const TangleDiagram& d, int i, int p = 3, int workers = 0);

}  // namespace qsl2
