#pragma once

#include <functional>

#include "conforma/algebra.hpp"
#include "conforma/unknowns.hpp"

namespace conforma {

// Free rank-one conformal module C[d]v: the action table gives g_l v as a
// polynomial in d, l (and parameters). The d-action and the sesquilinearity
// rules (d a)_l v = -l a_l v, a_l (d v) = (d + l) a_l v are built in.
struct RankOneModule {
  std::string name;
  const Algebra* algebra = nullptr;
  std::function<Poly(const GeneratorId&)> action;
};

// V_{a,b} over Vir / HV(alpha,beta): L_l v = (d + a l + b) v, H_i v = 0.
RankOneModule make_vab(const Algebra& A, const Poly& a, const Poly& b);

// V_{a,b,g} over HV: L_l v = (d + a l + b) v, H_l v = g v.
RankOneModule make_vabg(const Algebra& hv, const Poly& a, const Poly& b, const Poly& g);

// Residual of a_l (b_m v) - b_m (a_l v) - [a_l b]_(l+m) v on a generator pair;
// zero iff the module axiom holds on the pair.
Poly check_module(const RankOneModule& M, const GeneratorId& x, const GeneratorId& y);

struct SolutionFamily {
  std::map<GeneratorId, Poly> action;  // in the free display scalars
  std::vector<VarId> free_scalars;
};

struct RankOneSolveResult {
  std::vector<SolutionFamily> families;  // nontrivial families
  bool trivial_branch_found = false;
  bool undecided = false;
  std::vector<std::string> trace;
  std::vector<std::string> assumptions;
};

// Re-derives the rank-one module classification for Vir, HV and HV(alpha,beta)
// at bounded degree: every action table of per-generator total degree <= D
// satisfying the module axioms on generator pairs whose bracket support stays
// in the grade window. Algebra parameters must be specialized (for
// HV(alpha,beta) the run needs beta != 0, as in the classification theorems).
RankOneSolveResult rank_one_solver(const Algebra& A, unsigned degree_bound, int window);

struct ContradictionTrace {
  std::vector<std::string> steps;
  bool contradiction_found = false;  // the 2c = 0 clash in the c != 0 branch
  bool c_zero_branch_trivial = false;  // c = 0 forces every H action to zero
};

// Replays the scalar obstruction from the rank-one classification over
// HV(alpha,beta): assuming H_0 acts by a nonzero scalar c forces every H_i
// action to vanish by d-degree comparison, and then the (H_-1, H_1) axiom
// yields 2c = 0.
ContradictionTrace replay_c_contradiction(const Algebra& hv_ab, unsigned degree_bound,
                                          int window);

// True iff C[d] p(d) v is invariant under all window generator actions, i.e.
// p(d) divides p(d+l) g_l v for every generator g.
bool submodule_test(const RankOneModule& M, const Poly& p, int window);

// Coefficient i+2 with which triviality of the H_{i+1} action forces the
// H_i action to vanish (via the (H_-1, H_{i+1}) module axiom).
Rat top_h_action_obstruction(const Algebra& hv_ab, int i);

}  // namespace conforma
