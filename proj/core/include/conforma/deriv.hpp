#pragma once

#include <optional>
#include <variant>

#include "conforma/algebra.hpp"
#include "conforma/linalg.hpp"

namespace conforma {

// Window restriction of a conformal linear map: per-generator images for
// grades <= level, canonical slot l. Images of d-multiples are derived from
// conformal linearity D_l(d x) = (d + l) D_l(x), never stored.
struct ConformalMapWindow {
  int level = 0;
  std::map<GeneratorId, Element> images;

  bool defined_on(const GeneratorId& g) const { return images.count(g) > 0; }
  Element image(const GeneratorId& g) const;

  // Applies the map at slot expression s to an element whose coefficients may
  // contain other slots: D_s(f(d) g) = f(d + s) * (image(g) with l -> s).
  Element apply(const Element& e, const Poly& slot_expr) const;

  ConformalMapWindow operator+(const ConformalMapWindow& o) const;
  ConformalMapWindow operator*(const Rat& c) const;
};

// Window restriction of ad x.
ConformalMapWindow inner_map(const Algebra& A, const Element& x, int level);

// gc(A) bracket on a probe: [phi_l psi]_m a = phi_l(psi_{m-l} a) - psi_{m-l}(phi_l a).
// Requires a finite-rank presentation.
Element gc_bracket(const Algebra& A, const ConformalMapWindow& phi,
                   const ConformalMapWindow& psi, const GeneratorId& probe);

// Residual of the conformal derivation law on a generator pair:
//   D_l([x_m y]) - [D_l(x)_(l+m) y] - [x_m D_l(y)].
// nullopt = SKIPPED: the bracket support leaves the window, so D_l([x_m y])
// is not representable at this level.
std::optional<Element> derivation_residual(const Algebra& A, const ConformalMapWindow& D,
                                           const GeneratorId& x, const GeneratorId& y);

struct DerivationSolveProblem {
  int shift = 0;        // grade shift i of the component D^i
  int window = 6;       // domain grades [-1, window]
  unsigned degree = 4;  // total degree bound of the ansatz polynomials
};

struct DerivationSolution {
  std::vector<ConformalMapWindow> basis;  // nullspace basis of the constraints
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;
  bool window_inconclusive = false;  // every constraining pair was skipped
  double skipped_fraction() const {
    std::size_t total = pairs_used + pairs_skipped;
    return total == 0 ? 0.0 : static_cast<double>(pairs_skipped) / static_cast<double>(total);
  }
};

// Exact nullspace of the derivation constraints for the grade-shift-i ansatz
// over HV(alpha,beta) (specialized parameters). Constraining pairs run over
// the generating set {L, H_-1, H_0, H_1} against every window generator.
DerivationSolution solve_derivations(const Algebra& hv_ab, const DerivationSolveProblem& P);

// Windowed span of {ad f(d) H_i : deg f <= fdeg} as coefficient vectors, and
// comparison helpers for the solver output.
struct SpanComparison {
  std::size_t solver_dim = 0;
  std::size_t inner_dim = 0;
  bool solver_inside_inner = false;
  bool inner_inside_solver = false;
  bool equal() const {
    return solver_inside_inner && inner_inside_solver && solver_dim == inner_dim;
  }
};

SpanComparison compare_with_inner_span(const Algebra& hv_ab, const DerivationSolveProblem& P,
                                       const DerivationSolution& sol, unsigned fdeg);

struct NotInner {
  std::string certificate;
};
struct InnerWitness {
  Element x;
};
using InnerResult = std::variant<InnerWitness, NotInner>;

// Solves ad x = D on the window domain for finitely supported x with
// coefficient degree <= degree_bound; returns a witness or an exact
// no-solution certificate at that bound.
InnerResult is_inner_on_window(const Algebra& A, const ConformalMapWindow& D,
                               unsigned degree_bound);

// The non-inner derivation d^L on a current algebra: a |-> (d + l) a.
ConformalMapWindow d_L_map(const Algebra& cur, int level);

}  // namespace conforma
