#include "conforma/unknowns.hpp"

#include <stdexcept>

namespace conforma {

std::vector<Poly> coefficient_equations(const Poly& p, const std::set<VarId>& unknowns) {
  std::map<Mono, Poly> groups;
  for (const auto& [m, c] : p.terms()) {
    Mono xm, um;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      VarId v = static_cast<VarId>(i);
      if (unknowns.count(v))
        um.set_exp(v, m.exps[i]);
      else
        xm.set_exp(v, m.exps[i]);
    }
    groups[xm] += Poly::monomial(c, um);
  }
  std::vector<Poly> out;
  for (auto& [m, q] : groups)
    if (!q.is_zero()) out.push_back(std::move(q));
  return out;
}

VarId UnknownSystem::fresh_unknown(const std::string& hint) {
  // Instance-local numbering: systems are independent, so reusing the same
  // interned symbols across systems keeps the global variable order short.
  (void)hint;
  VarId v = intern_symbol("u" + std::to_string(counter_++));
  unknowns_.insert(v);
  return v;
}

Poly UnknownSystem::ansatz(const std::string& tag, const std::vector<VarId>& vars,
                           unsigned deg) {
  Poly out;
  // Enumerate exponent tuples with total degree <= deg, graded order.
  std::vector<std::uint32_t> exps(vars.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
    if (idx == vars.size()) {
      Mono m;
      std::string hint = tag;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        m.set_exp(vars[i], exps[i]);
        hint += "_" + std::to_string(exps[i]);
      }
      VarId u = fresh_unknown(hint);
      out += Poly::var(u) * Poly::monomial(Rat(1), m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[idx] = e;
      rec(idx + 1, left - e);
    }
    exps[idx] = 0;
  };
  rec(0, deg);
  return out;
}

namespace {

// Strips the common monomial content over non-unknown variables: the
// constraint is a polynomial identity, so x^k * Q = 0 iff Q = 0.
Poly strip_known_content(const Poly& p, const std::set<VarId>& unknowns) {
  if (p.is_zero()) return p;
  Mono common;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      common = m;
      for (std::size_t i = 0; i < common.exps.size(); ++i)
        if (unknowns.count(static_cast<VarId>(i))) common.exps[i] = 0;
      common.trim();
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < common.exps.size(); ++i) {
      VarId v = static_cast<VarId>(i);
      common.exps[i] = std::min(common.exps[i], m.exp(v));
    }
    common.trim();
    if (common.exps.empty()) break;
  }
  if (common.exps.empty()) return p;
  Poly out;
  for (const auto& [m, c] : p.terms()) out += Poly::monomial(c, m.divide_by(common));
  return out;
}

}  // namespace

void UnknownSystem::add_equation(Poly eq, const std::string& origin) {
  eq = strip_known_content(value(eq), unknowns_);
  if (eq.is_zero()) return;
  // Dedupe small constraints only; keeping a duplicate is always sound.
  if (eq.term_count() <= 40) {
    std::string key = eq.str();
    if (!seen_.insert(key).second) return;
  }
  equations_.push_back({std::move(eq), origin});
  if (status_ == Status::Solved || status_ == Status::Undecided) status_ = Status::Open;
}

void UnknownSystem::assume_nonzero(Poly p, const std::string& label) {
  nonzero_.emplace_back(std::move(p), label);
}

int UnknownSystem::u_degree(const Poly& p) const {
  int deg = 0;
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] > 0 && unknowns_.count(static_cast<VarId>(i)))
        d += static_cast<int>(m.exps[i]);
    deg = std::max(deg, d);
  }
  return deg;
}

Poly UnknownSystem::value(const Poly& p) const {
  Poly out = p;
  for (const auto& [u, val] : solved_)
    if (out.contains(u)) out = out.substitute(u, val);
  return out;
}

std::vector<VarId> UnknownSystem::free_unknowns() const {
  std::vector<VarId> out;
  for (VarId u : unknowns_)
    if (!solved_.count(u)) out.push_back(u);
  return out;
}

void UnknownSystem::substitute_everywhere(VarId u, const Poly& val, const std::string& why) {
  for (auto& [v, rhs] : solved_)
    if (rhs.contains(u)) rhs = rhs.substitute(u, val);
  solved_[u] = val;
  for (auto& eq : equations_)
    if (eq.poly.contains(u)) eq.poly = eq.poly.substitute(u, val);
  trace_.push_back(symbol_name(u) + " := " + val.str() + "  [" + why + "]");
}

bool UnknownSystem::try_solve_linear_occurrence(const Poly& eq, const std::string& origin) {
  // Prefer the smallest unknown with a nonzero rational coefficient whose
  // occurrence is exactly linear.
  for (VarId u : unknowns_) {
    if (solved_.count(u)) continue;
    if (eq.degree_in(u) != 1) continue;
    Poly c1 = eq.coeff_of(u, 1);
    if (!c1.is_constant() || c1.is_zero()) continue;
    Poly rest = eq.coeff_of(u, 0);
    Poly val = rest * (Rat(-1) / c1.constant_value());
    substitute_everywhere(u, val, origin);
    return true;
  }
  return false;
}

bool UnknownSystem::try_power_rule(const Poly& eq, const std::string& origin) {
  if (eq.term_count() != 1) return false;
  const auto& [m, c] = *eq.terms().begin();
  VarId only = 0;
  bool found = false;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    VarId v = static_cast<VarId>(i);
    if (!unknowns_.count(v)) return false;  // parameter factor: cannot conclude
    if (found && v != only) return false;   // product of distinct unknowns
    only = v;
    found = true;
  }
  if (!found) return false;
  substitute_everywhere(only, Poly(), origin + " (power rule)");
  return true;
}

// Attempts divide-and-record on whole constraints and on their slot-variable
// layers (the coefficient of l^k, m^k, ... is itself a valid constraint).
// Full pass: every divisible layer found in this round is added.
bool UnknownSystem::division_round() {
  bool progress = false;
  std::vector<std::pair<Poly, const std::string*>> divisors;
  for (const auto& [f, label] : nonzero_) {
    Poly fv = value(f);
    if (!fv.is_constant() && !fv.is_zero()) divisors.emplace_back(std::move(fv), &label);
  }
  if (divisors.empty()) return false;
  std::size_t n = equations_.size();
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (equations_[idx].poly.is_zero() || u_degree(equations_[idx].poly) < 2) continue;
    std::vector<Poly> candidates{equations_[idx].poly};
    for (VarId v : {kVarD, kVarL, kVarM, kVarN}) {
      std::uint32_t dv = equations_[idx].poly.degree_in(v);
      if (dv == 0) continue;
      for (std::uint32_t k = 0; k <= dv; ++k) {
        Poly layer = equations_[idx].poly.coeff_of(v, k);
        if (!layer.is_zero()) candidates.push_back(std::move(layer));
      }
    }
    for (const Poly& cand : candidates) {
      if (u_degree(cand) < 1) continue;
      for (const auto& [fv, label] : divisors) {
        auto q = cand.try_divide(fv);
        if (!q || q->is_zero() || u_degree(*q) >= u_degree(cand)) continue;
        std::size_t before = equations_.size();
        std::string origin = equations_[idx].origin + " / (" + *label + ")";
        add_equation(*q, origin);
        if (equations_.size() > before) {
          trace_.push_back("factored a layer of " + equations_[idx].origin +
                           " through nonzero " + *label);
          assumptions_used_.push_back(*label);
          progress = true;
        }
      }
    }
  }
  return progress;
}

UnknownSystem::Status UnknownSystem::saturate() {
  bool progress = true;
  unsigned long guard = 0;
  while (progress && status_ != Status::Contradiction) {
    if (++guard > 100000) throw std::logic_error("saturation failed to terminate");
    progress = false;

    // Drop satisfied equations; detect constant contradictions.
    for (auto it = equations_.begin(); it != equations_.end();) {
      if (it->poly.is_zero()) {
        it = equations_.erase(it);
        continue;
      }
      if (u_degree(it->poly) == 0) {
        status_ = Status::Contradiction;
        trace_.push_back("contradiction: " + it->poly.str() + " = 0  [" + it->origin + "]");
        return status_;
      }
      ++it;
    }

    // Linear and power moves on coefficient equations: full pass, taking as
    // many moves as possible before the next round. substitute_everywhere
    // keeps the pool consistent mid-pass, so stale pieces are recomputed per
    // equation at visit time.
    for (std::size_t idx = 0; idx < equations_.size(); ++idx) {
      bool moved = true;
      while (moved && !equations_[idx].poly.is_zero()) {
        moved = false;
        for (const Poly& piece : coefficient_equations(equations_[idx].poly, unknowns_)) {
          if (piece.is_zero()) continue;
          if (try_power_rule(piece, equations_[idx].origin) ||
              try_solve_linear_occurrence(piece, equations_[idx].origin)) {
            progress = true;
            moved = true;
            break;  // pieces are stale after a substitution
          }
        }
      }
    }
    if (progress) continue;

    // Structural division through recorded nonzero polynomials.
    progress = division_round();
  }

  if (status_ == Status::Contradiction) return status_;
  status_ = equations_.empty() ? Status::Solved : Status::Undecided;
  return status_;
}

void UnknownSystem::rename_free(VarId unknown, VarId display) {
  if (solved_.count(unknown)) throw std::logic_error("rename_free: unknown already solved");
  substitute_everywhere(unknown, Poly::var(display), "display name");
}

}  // namespace conforma
