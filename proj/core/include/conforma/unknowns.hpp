#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "conforma/poly.hpp"

namespace conforma {

// Polynomial constraint system in designated unknown parameters, solved by
// saturation with exact moves that preserve the solution set:
//   - expansion of a constraint into coefficient equations per monomial in
//     the non-unknown variables;
//   - elimination of an unknown occurring linearly with a nonzero rational
//     coefficient (the eliminated value may be nonlinear in other unknowns);
//   - the power rule c * u^k = 0  =>  u = 0;
//   - divide-and-record: a constraint that factors exactly through a
//     polynomial recorded as nonzero loses that factor, and the consumed
//     nonzero assumption is logged.
// Saturation stops at a contradiction (nonzero constant equation), at a fully
// solved system, or with nonlinear leftovers (UNDECIDED).
class UnknownSystem {
 public:
  enum class Status { Open, Solved, Contradiction, Undecided };

  // Fresh unknown parameter (interned as "u<counter>#<hint>").
  VarId fresh_unknown(const std::string& hint);

  // Ansatz polynomial in `vars` of total degree <= deg with fresh unknown
  // coefficients; records the unknown of each monomial.
  Poly ansatz(const std::string& tag, const std::vector<VarId>& vars, unsigned deg);

  bool is_unknown(VarId v) const { return unknowns_.count(v) > 0; }
  const std::set<VarId>& unknowns() const { return unknowns_; }

  void add_equation(Poly eq, const std::string& origin);
  void assume_nonzero(Poly p, const std::string& label);

  // Runs the moves to a fixed point and returns the resulting status.
  Status saturate();

  Status status() const { return status_; }
  bool contradiction() const { return status_ == Status::Contradiction; }

  // Substitutes every solved unknown into p.
  Poly value(const Poly& p) const;
  const std::map<VarId, Poly>& solved() const { return solved_; }
  std::vector<VarId> free_unknowns() const;
  std::size_t pending_equations() const { return equations_.size(); }

  const std::vector<std::string>& trace() const { return trace_; }
  const std::vector<std::string>& assumptions_used() const { return assumptions_used_; }
  void note(const std::string& line) { trace_.push_back(line); }
  void record_assumption(const std::string& a) { assumptions_used_.push_back(a); }

  // Renames a free unknown to a display symbol in all solved values (used to
  // present solution families in the free scalars a, b, gamma, ...).
  void rename_free(VarId unknown, VarId display);

 private:
  struct Equation {
    Poly poly;
    std::string origin;
  };

  int u_degree(const Poly& p) const;
  void substitute_everywhere(VarId u, const Poly& value, const std::string& why);
  bool try_solve_linear_occurrence(const Poly& eq, const std::string& origin);
  bool try_power_rule(const Poly& eq, const std::string& origin);
  bool division_round();

  std::set<VarId> unknowns_;
  unsigned long counter_ = 0;  // instance-local: unknown ids are reused across systems
  std::map<VarId, Poly> solved_;
  std::vector<Equation> equations_;
  std::vector<std::pair<Poly, std::string>> nonzero_;
  std::set<std::string> seen_;
  std::vector<std::string> trace_;
  std::vector<std::string> assumptions_used_;
  Status status_ = Status::Open;
};

// Splits a polynomial into coefficient equations over the monomials of the
// non-unknown variables: each returned entry is a pure-unknown polynomial.
std::vector<Poly> coefficient_equations(const Poly& p, const std::set<VarId>& unknowns);

}  // namespace conforma
