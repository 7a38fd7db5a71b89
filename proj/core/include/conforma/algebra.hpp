#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conforma/element.hpp"

namespace conforma {

// Presentation of a (possibly infinite rank) Lie conformal algebra: a total
// lambda-bracket rule on valid generator pairs, evaluated on demand. Infinite
// gradation is handled by finitely supported elements, never by truncation.
class Algebra {
 public:
  using Rule = std::function<Element(const GeneratorId&, const GeneratorId&, VarId)>;

  std::string name;
  std::vector<VarId> parameters;
  Rule rule;
  std::function<bool(const GeneratorId&)> valid;
  std::function<int(const GeneratorId&)> grade;
  // Generators with grade in [-1, level]; for finite algebras the level is
  // ignored and the whole basis is returned.
  std::function<std::vector<GeneratorId>(int)> window_gens;
  std::vector<GeneratorId> finite_basis;  // empty means infinite rank

  bool finite() const { return !finite_basis.empty(); }

  // Table entry [x_slot y] for pure generators; checks validity.
  Element table(const GeneratorId& x, const GeneratorId& y, VarId slot) const;

  // Sesquilinear extension: [f(d)g _slot p(d)h] = f(-slot) p(d+slot) [g_slot h].
  // The slot variable must not occur in x's coefficients; it may occur in y's
  // (same-slot iterated application), in which case d-shifts pass through.
  Element bracket(const Element& x, const Element& y, VarId slot) const;

  // [x_l y] + ([y_m x] with m -> -l-d applied to output coefficients).
  Element check_skew(const Element& x, const Element& y) const;

  // [x_l [y_m z]] - [[x_l y]_(l+m) z] - [y_m [x_l z]].
  Element check_jacobi(const Element& x, const Element& y, const Element& z) const;

  Element ad_power(const Element& x, const Element& y, unsigned n, VarId slot) const;
};

// Builds an element from a single generator scaled by a polynomial in d.
inline Element scaled(const GeneratorId& g, const Poly& f) { return Element(g, f); }

struct IdealCheck {
  bool is_ideal = true;
  // Populated on failure: the offending pair and the escaping bracket value.
  std::string counterexample;
};

// True iff brackets of family members with every window generator (both
// orders) have support inside the family, for grades up to `level`.
IdealCheck is_ideal_window(const Algebra& A,
                           const std::function<bool(const GeneratorId&)>& family, int level);

enum class NilpotencyVerdict { Nilpotent, NotNilpotent, Inconclusive };

struct NilpotencyReport {
  NilpotencyVerdict verdict = NilpotencyVerdict::Inconclusive;
  std::optional<GeneratorId> witness;  // generator that provably never dies
  std::string detail;
};

// Checks local nilpotency of x on the test set {L} + {H_i : i <= level}.
// NILPOTENT requires (ad x)^k to kill every test generator for some k <= bound.
// NOT-NILPOTENT is certified when a component of x provably never dies: a
// nonzero L part, or a top H_n part with n >= 0 whose top-grade chain picks up
// a nonzero factor at every step.
NilpotencyReport locally_nilpotent_window(const Algebra& A, const Element& x, int level,
                                          unsigned bound);

struct SpanCheck {
  bool is_ideal = false;
  bool is_abelian = false;
  std::string detail;
  bool ok() const { return is_ideal && is_abelian; }
};

// For finite presentations: certifies that the span of `candidate` generators
// is an ideal with all internal products zero (a nonzero abelian, hence
// solvable, ideal). Rejects infinite-rank presentations.
SpanCheck derived_products_span_check(const Algebra& A,
                                      const std::vector<GeneratorId>& candidate);

struct SweepReport {
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::vector<std::string> failures;  // residual samples
  bool ok() const { return failures.empty(); }
};

// Full skew + Jacobi sweep over the given generators. `reduce` is applied to
// residual coefficients before the zero test (used for localized coefficient
// rings); pass nullptr for the plain check. Tuples run in parallel.
SweepReport axiom_sweep(const Algebra& A, const std::vector<GeneratorId>& gens,
                        const std::function<Poly(const Poly&)>& reduce = nullptr);

}  // namespace conforma
