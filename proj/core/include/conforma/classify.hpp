#pragma once

#include <optional>

#include "conforma/builtins.hpp"
#include "conforma/unknowns.hpp"

namespace conforma {

// Closed forms of the graded classification over the free nonzero scalars
// alpha1, beta1, gamma1 and s_i (the constants [X_-1 X_i] = s_i X_{i-1}):
//   beta_i = i beta1, gamma_i = i gamma1, alpha_i = i alpha1 - i + 1,
//   f_{-1,i} = s_i, g_{-1,1} = 0,
//   f_{i,j} = (s_1...s_j)/(s_{i+1}...s_{i+j}) * (i+j+1)!/((i+1)!(j+1)!) * (j-i) gamma1.
// Symbolic scalars carry formal inverses (s_i * s_i^-1 = 1 is applied as a
// reduction), so table coefficients live in the localization at the scalars.
struct ClosedForm {
  Poly alpha1, beta1, gamma1;
  std::map<int, Poly> s;                      // i >= 1
  std::map<int, Poly> s_inv;                  // formal inverses (empty when rational)
  std::vector<std::pair<VarId, VarId>> inverse_pairs;

  static ClosedForm symbolic(int window);
  static ClosedForm rational(const Rat& alpha1, const Rat& beta1, const Rat& gamma1,
                             const std::map<int, Rat>& s);

  Poly reduce(const Poly& p) const;  // applies the s * s^-1 = 1 relations
  Poly f(int i, int j) const;        // table coefficient of [X_i X_j], i,j != 0
  Poly alpha(int i) const;
  Poly beta(int i) const;
  Poly gamma(int i) const;
};

// Total presentation of the candidate algebra from the closed forms
// (generators L and X_i, i >= -1, with X_0 the Heisenberg generator).
Algebra closed_form_algebra(const ClosedForm& cf);

// Full symbolic skew + Jacobi sweep of the closed-form table on the window.
SweepReport forward_verify(const ClosedForm& cf, int window);

// Same sweep with the (X_1, X_2) entry perturbed by +X_3 (negative control).
SweepReport forward_verify_perturbed(const ClosedForm& cf, int window);

// Specialization of the free scalars for the inverse solve; empty optionals
// keep the scalar symbolic (the solve then reports what it can derive).
struct InverseSpec {
  std::optional<Rat> alpha1, beta1, gamma1;
  std::map<int, Rat> s;      // pins f_{-1,i}(0,0) = s_i
  bool drop_c3_for_f_m1_2 = false;  // negative control: forget [X_-1 X_2] != 0
};

struct InverseBranch {
  std::string label;
  bool alive = false;      // survived without contradiction
  bool solved = false;     // constraint pool empty
  std::map<int, Poly> alpha, beta, gamma;
  std::map<std::pair<int, int>, Poly> f;  // stored pairs i <= j
  Poly g_m11;
  std::vector<std::string> assumptions;
  std::vector<std::string> derived;  // trace slice
};

struct InverseResult {
  std::vector<InverseBranch> branches;  // alive branches, dead ones summarized
  std::vector<std::string> dead_branches;
  bool undecided = false;
};

// Replays the classification as a constraint solve on the window: ansatz with
// unknown scalars and degree-bounded unknown polynomials, skew imposed
// structurally, all skew/Jacobi residual layers fed to the saturation engine,
// with the nonzero conditions consumed divide-and-record style and the two
// scheduled case splits (the gamma_1 = 0 and gamma_1 + gamma_-1 != 0 branches
// die; the negative control adds the f_{-1,2} = 0 branch).
InverseResult inverse_solve(int window, unsigned degree, const InverseSpec& spec);

struct LemmaReplay {
  std::string lemma;
  bool confirmed = false;
  std::vector<std::string> derived;
  std::vector<std::string> assumptions;
};

// Confirms the per-lemma closed forms against an inverse solve at the given
// (or default) specialization and reports the derived constraints consumed.
LemmaReplay replay_lemma(const std::string& id, unsigned degree, int window,
                         const InverseSpec& spec);

// Same confirmation against an already-solved branch (avoids re-solving).
LemmaReplay replay_lemma_from(const InverseBranch& branch, const std::string& id, int window);

struct NormalizeResult {
  bool ok = false;
  std::string detail;
  Rat alpha, beta;  // the HV(alpha, beta) the solution is isomorphic to
};

// Applies the basis rescaling X'_i = (i+1)!/(s_1...s_i gamma_1) X_i to a fully
// specialized solved branch and checks the result against make_hv_ab exactly.
NormalizeResult normalize_basis(const InverseBranch& branch, int window);

}  // namespace conforma
