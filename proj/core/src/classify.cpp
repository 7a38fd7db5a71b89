#include "conforma/classify.hpp"

#include <cassert>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace conforma {

ClosedForm ClosedForm::symbolic(int window) {
  ClosedForm cf;
  cf.alpha1 = Poly::var(intern_symbol("alpha1"));
  cf.beta1 = Poly::var(intern_symbol("beta1"));
  cf.gamma1 = Poly::var(kVarGamma1);
  // Jacobi triples on the window reach grade sums up to 3 * window.
  for (int i = 1; i <= 3 * window + 3; ++i) {
    VarId s = intern_symbol("s" + std::to_string(i));
    VarId si = intern_symbol("s" + std::to_string(i) + "_inv");
    cf.s[i] = Poly::var(s);
    cf.s_inv[i] = Poly::var(si);
    cf.inverse_pairs.emplace_back(s, si);
  }
  return cf;
}

ClosedForm ClosedForm::rational(const Rat& alpha1, const Rat& beta1, const Rat& gamma1,
                                const std::map<int, Rat>& s) {
  if (gamma1 == 0) throw std::invalid_argument("gamma1 must be nonzero");
  ClosedForm cf;
  cf.alpha1 = Poly(alpha1);
  cf.beta1 = Poly(beta1);
  cf.gamma1 = Poly(gamma1);
  for (const auto& [i, v] : s) {
    if (v == 0) throw std::invalid_argument("s_" + std::to_string(i) + " must be nonzero");
    cf.s.emplace(i, Poly(v));
    cf.s_inv.emplace(i, Poly(Rat(1) / v));
  }
  return cf;
}

Poly ClosedForm::reduce(const Poly& p) const {
  if (inverse_pairs.empty()) return p;
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    for (const auto& [v, vi] : inverse_pairs) {
      std::uint32_t e = mm.exp(v), ei = mm.exp(vi);
      std::uint32_t k = std::min(e, ei);
      if (k > 0) {
        mm.set_exp(v, e - k);
        mm.set_exp(vi, ei - k);
      }
    }
    out += Poly::monomial(c, mm);
  }
  return out;
}

Poly ClosedForm::alpha(int i) const { return alpha1 * Rat(i) - Rat(i) + Rat(1); }
Poly ClosedForm::beta(int i) const { return beta1 * Rat(i); }
Poly ClosedForm::gamma(int i) const { return gamma1 * Rat(i); }

Poly ClosedForm::f(int i, int j) const {
  if (i == 0 || j == 0) throw std::invalid_argument("f is defined for i, j != 0");
  if (i == -1 && j == -1) return Poly();
  auto s_at = [&](int t) {
    auto it = s.find(t);
    if (it == s.end()) throw std::out_of_range("s_" + std::to_string(t) + " not available");
    return it->second;
  };
  auto s_inv_at = [&](int t) {
    auto it = s_inv.find(t);
    if (it == s_inv.end())
      throw std::out_of_range("s_" + std::to_string(t) + "^-1 not available");
    return it->second;
  };
  if (i == -1) return s_at(j);
  if (j == -1) return -s_at(i);
  Poly ratio(Rat(1));
  for (int t = 1; t <= j; ++t) ratio *= s_at(t);
  for (int t = i + 1; t <= i + j; ++t) ratio *= s_inv_at(t);
  Rat comb = rat_factorial(static_cast<unsigned>(i + j + 1)) /
             (rat_factorial(static_cast<unsigned>(i + 1)) *
              rat_factorial(static_cast<unsigned>(j + 1)));
  return reduce(ratio * gamma1 * (comb * Rat(j - i)));
}

Algebra closed_form_algebra(const ClosedForm& cf) {
  Algebra A;
  A.name = "closed_form";
  auto cfp = std::make_shared<ClosedForm>(cf);
  A.valid = [](const GeneratorId& g) {
    return g.fam == Family::L || (g.fam == Family::X && g.a >= -1);
  };
  A.grade = [](const GeneratorId& g) { return g.fam == Family::L ? 0 : g.a; };
  A.window_gens = [](int level) {
    std::vector<GeneratorId> out{gen_L()};
    for (int i = -1; i <= level; ++i) out.push_back(gen_X(i));
    return out;
  };
  A.rule = [cfp](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    Poly lam = Poly::var(slot);
    if (x.fam == Family::L && y.fam == Family::L)
      return Element(gen_L(), poly_d() + lam * Rat(2));
    if (x.fam == Family::L) {
      int i = y.a;
      return Element(y, poly_d() + cfp->alpha(i) * lam + cfp->beta(i));
    }
    if (y.fam == Family::L) {
      int i = x.a;
      return Element(x, (cfp->alpha(i) - Rat(1)) * poly_d() + cfp->alpha(i) * lam -
                            cfp->beta(i));
    }
    int i = x.a, j = y.a;
    if (i == 0 && j == 0) return Element();
    if (i == 0) return Element(y, cfp->gamma(j));
    if (j == 0) return Element(x, -cfp->gamma(i));
    if (i == -1 && j == -1) return Element();
    return Element(gen_X(i + j), cfp->f(i, j));
  };
  return A;
}

SweepReport forward_verify(const ClosedForm& cf, int window) {
  Algebra A = closed_form_algebra(cf);
  auto reduce = [cf](const Poly& p) { return cf.reduce(p); };
  return axiom_sweep(A, A.window_gens(window), reduce);
}

SweepReport forward_verify_perturbed(const ClosedForm& cf, int window) {
  Algebra A = closed_form_algebra(cf);
  Algebra B = A;
  auto base_rule = A.rule;
  B.rule = [base_rule](const GeneratorId& x, const GeneratorId& y, VarId slot) {
    Element v = base_rule(x, y, slot);
    if (x.fam == Family::X && y.fam == Family::X && x.a == 1 && y.a == 2)
      v += Element(gen_X(3), Poly(Rat(1)));
    return v;
  };
  auto reduce = [cf](const Poly& p) { return cf.reduce(p); };
  return axiom_sweep(B, B.window_gens(window), reduce);
}

// ---------------------------------------------------------------------------
// Inverse solve
// ---------------------------------------------------------------------------

namespace {

struct InverseAnsatz {
  int window = 4;
  unsigned degree = 2;
  UnknownSystem sys;
  std::map<int, Poly> alpha, beta, gamma;               // scalar unknowns, i != 0
  std::map<std::pair<int, int>, Poly> f;                // stored i <= j
  Poly g_m11;
  std::shared_ptr<std::map<std::pair<int, int>, Element>> table;  // filled lazily

  Poly a(int i) const { return i == 0 ? Poly(Rat(1)) : alpha.at(i); }
  Poly b(int i) const { return i == 0 ? Poly() : beta.at(i); }
  Poly g(int i) const { return i == 0 ? Poly() : gamma.at(i); }
};

// Bracket value of the ansatz presentation for stored or derived X-pairs.
Element x_pair_value(const InverseAnsatz& an, int i, int j, VarId slot) {
  Poly lam = Poly::var(slot);
  if (i == -1 && j == -1) return Element();
  auto stored = an.f.find({std::min(i, j), std::max(i, j)});
  if (stored == an.f.end())
    throw std::out_of_range("bracket (X_" + std::to_string(i) + ", X_" + std::to_string(j) +
                            ") outside the solve window");
  bool direct = i <= j;
  Poly repl = direct ? lam : -lam - poly_d();
  Rat sign = direct ? Rat(1) : Rat(-1);
  if (std::min(i, j) == -1 && std::max(i, j) == 1) {
    Poly gval = an.g_m11.substitute(kVarL, repl) * sign;
    Poly fval = stored->second.substitute(kVarL, repl) * sign;
    return Element(gen_L(), gval) + Element(gen_X(0), fval);
  }
  return Element(gen_X(i + j), stored->second.substitute(kVarL, repl) * sign);
}

Algebra ansatz_algebra(const std::shared_ptr<InverseAnsatz>& an) {
  Algebra A;
  A.name = "inverse_ansatz";
  int window = an->window;
  A.valid = [window](const GeneratorId& g) {
    return g.fam == Family::L || (g.fam == Family::X && g.a >= -1 && g.a <= window);
  };
  A.grade = [](const GeneratorId& g) { return g.fam == Family::L ? 0 : g.a; };
  A.window_gens = [](int level) {
    std::vector<GeneratorId> out{gen_L()};
    for (int i = -1; i <= level; ++i) out.push_back(gen_X(i));
    return out;
  };
  A.rule = [an](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    Poly lam = Poly::var(slot);
    if (x.fam == Family::L && y.fam == Family::L)
      return Element(gen_L(), poly_d() + lam * Rat(2));
    if (x.fam == Family::L)
      return Element(y, poly_d() + an->a(y.a) * lam + an->b(y.a));
    if (y.fam == Family::L)
      return Element(x, (an->a(x.a) - Rat(1)) * poly_d() + an->a(x.a) * lam - an->b(x.a));
    int i = x.a, j = y.a;
    if (i == 0 && j == 0) return Element();
    if (i == 0) return Element(y, an->g(j));
    if (j == 0) return Element(x, -an->g(i));
    return x_pair_value(*an, i, j, slot);
  };
  return A;
}

// A pair of polynomials asserted not simultaneously zero (condition (C3) on
// the grade-0 bracket [X_-1 X_1] = g L + f H).
struct PairNonzero {
  Poly f, g;
  bool f_promoted = false;
  bool g_promoted = false;
};

struct BranchState {
  std::string label;
  std::shared_ptr<InverseAnsatz> an;
  PairNonzero pair;
  bool dead = false;
  std::string death_note;

  BranchState clone(const std::string& new_label) const {
    BranchState b;
    b.label = new_label;
    b.an = std::make_shared<InverseAnsatz>(*an);  // UnknownSystem copies by value
    b.pair = pair;
    return b;
  }
};

// Saturates and applies the not-both-zero promotion until stable; marks the
// branch dead on contradiction or when both pair members vanish.
void settle(BranchState& br) {
  auto& sys = br.an->sys;
  while (true) {
    UnknownSystem::Status st = sys.saturate();
    if (st == UnknownSystem::Status::Contradiction) {
      br.dead = true;
      br.death_note = "contradiction during saturation";
      return;
    }
    Poly fv = sys.value(br.pair.f);
    Poly gv = sys.value(br.pair.g);
    if (fv.is_zero() && gv.is_zero()) {
      br.dead = true;
      br.death_note = "[X_-1 X_1] forced to zero, violating (C3)";
      return;
    }
    if (gv.is_zero() && !br.pair.f_promoted && !fv.is_constant()) {
      sys.assume_nonzero(br.pair.f, "C3: f_{-1,1} != 0 (g_{-1,1} = 0)");
      br.pair.f_promoted = true;
      continue;
    }
    if (fv.is_zero() && !br.pair.g_promoted && !gv.is_constant()) {
      sys.assume_nonzero(br.pair.g, "C3: g_{-1,1} != 0 (f_{-1,1} = 0)");
      br.pair.g_promoted = true;
      continue;
    }
    return;
  }
}

}  // namespace

InverseResult inverse_solve(int window, unsigned degree, const InverseSpec& spec) {
  InverseResult out;
  auto an = std::make_shared<InverseAnsatz>();
  an->window = window;
  an->degree = degree;
  auto& sys = an->sys;

  for (int i = -1; i <= window; ++i) {
    if (i == 0) continue;
    an->alpha[i] = Poly::var(sys.fresh_unknown("alpha_" + std::to_string(i)));
    an->beta[i] = Poly::var(sys.fresh_unknown("beta_" + std::to_string(i)));
    an->gamma[i] = Poly::var(sys.fresh_unknown("gamma_" + std::to_string(i)));
  }
  std::vector<VarId> dl{kVarD, kVarL};
  for (int i = -1; i <= window; ++i)
    for (int j = i; j <= window; ++j) {
      if (i == 0 || j == 0) continue;
      if (i == -1 && j == -1) continue;
      if (i + j > window || i + j < -1) continue;
      an->f[{i, j}] = sys.ansatz("f_" + std::to_string(i) + "_" + std::to_string(j), dl, degree);
    }
  an->g_m11 = sys.ansatz("g_m1_1", dl, degree);

  Algebra A = ansatz_algebra(an);

  // Specialization pins.
  if (spec.alpha1) sys.add_equation(an->alpha[1] - Poly(*spec.alpha1), "pin alpha_1");
  if (spec.beta1) sys.add_equation(an->beta[1] - Poly(*spec.beta1), "pin beta_1");
  if (spec.gamma1) sys.add_equation(an->gamma[1] - Poly(*spec.gamma1), "pin gamma_1");
  for (const auto& [i, v] : spec.s) {
    auto it = an->f.find({-1, i});
    if (it == an->f.end()) continue;
    Poly at0 = it->second.substitute(kVarD, Poly()).substitute(kVarL, Poly());
    sys.add_equation(at0 - Poly(v), "pin s_" + std::to_string(i) + " = f_{-1," +
                                        std::to_string(i) + "}(0,0)");
    sys.record_assumption("C3 specialization: s_" + std::to_string(i) + " = " + rat_str(v) +
                          " is nonzero");
  }

  // (C3) nonzero records.
  sys.assume_nonzero(an->gamma[-1], "C3: [X_-1 X_0] != 0, i.e. gamma_-1 != 0");
  for (int i = 2; i <= window; ++i) {
    if (i == 2 && spec.drop_c3_for_f_m1_2) continue;
    sys.assume_nonzero(an->f.at({-1, i}), "C3: f_{-1," + std::to_string(i) + "} != 0");
  }

  // Constraint pool: skew residuals on window pairs, Jacobi residuals on
  // window triples whose intermediate grades stay in the window.
  std::vector<GeneratorId> gens = A.window_gens(window);
  auto xgrade = [](const GeneratorId& g) { return g.fam == Family::L ? 0 : g.a; };
  auto pair_ok = [&](const GeneratorId& x, const GeneratorId& y) {
    if (x.fam == Family::L || y.fam == Family::L) return true;
    int s = xgrade(x) + xgrade(y);
    return s <= an->window;  // s < -1 only for (-1,-1), whose bracket is 0
  };
  for (const auto& x : gens)
    for (const auto& y : gens) {
      if (!pair_ok(x, y)) continue;
      Element r = A.check_skew(Element(x), Element(y));
      for (const auto& [g, p] : r.comps())
        sys.add_equation(p, "skew(" + gen_str(x) + "," + gen_str(y) + ") on " + gen_str(g));
    }
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        if (!pair_ok(y, z) || !pair_ok(x, y) || !pair_ok(x, z)) continue;
        int total = xgrade(x) + xgrade(y) + xgrade(z);
        if (total > an->window) continue;
        Element r = A.check_jacobi(Element(x), Element(y), Element(z));
        for (const auto& [g, p] : r.comps())
          sys.add_equation(p, "jacobi(" + gen_str(x) + "," + gen_str(y) + "," + gen_str(z) +
                                  ") on " + gen_str(g));
      }

  BranchState main;
  main.label = "main";
  main.an = an;
  main.pair = {an->f.at({-1, 1}), an->g_m11, false, false};
  settle(main);

  std::vector<BranchState> finals;

  // gamma_1 = 0 dies against (C3); record the dead branch, then assume.
  if (!main.dead) {
    BranchState gz = main.clone("gamma_1 = 0");
    gz.an->sys.add_equation(gz.an->gamma.at(1), "case split: gamma_1 = 0");
    settle(gz);
    if (gz.dead)
      out.dead_branches.push_back("gamma_1 = 0: " + gz.death_note);
    else
      finals.push_back(std::move(gz));
    main.an->sys.assume_nonzero(main.an->gamma.at(1), "derived: gamma_1 != 0");
    settle(main);
  }

  // gamma_1 + gamma_-1 != 0 dies; the surviving branch pins the sum to zero.
  if (!main.dead) {
    Poly sum = main.an->gamma.at(1) + main.an->gamma.at(-1);
    if (!main.an->sys.value(sum).is_zero()) {
      BranchState nz = main.clone("gamma_1 + gamma_-1 != 0");
      nz.an->sys.assume_nonzero(sum, "case split: gamma_1 + gamma_-1 != 0");
      settle(nz);
      if (nz.dead)
        out.dead_branches.push_back("gamma_1 + gamma_-1 != 0: " + nz.death_note);
      else
        finals.push_back(std::move(nz));
      main.an->sys.add_equation(sum, "case split survivor: gamma_1 + gamma_-1 = 0");
      settle(main);
    }
  }
  if (spec.drop_c3_for_f_m1_2 && !main.dead) {
    // Without (C3) for f_{-1,2} both alternatives stay on the table.
    BranchState zero = main.clone("f_{-1,2} = 0");
    for (const Poly& piece :
         coefficient_equations(zero.an->f.at({-1, 2}), zero.an->sys.unknowns()))
      zero.an->sys.add_equation(piece, "case split: f_{-1,2} = 0");
    settle(zero);
    BranchState nonzero = main.clone("f_{-1,2} != 0");
    nonzero.an->sys.assume_nonzero(nonzero.an->f.at({-1, 2}),
                                   "case split: f_{-1,2} != 0");
    settle(nonzero);
    finals.insert(finals.begin(), std::move(zero));
    finals.insert(finals.begin(), std::move(nonzero));
  } else {
    finals.insert(finals.begin(), std::move(main));
  }

  for (auto& br : finals) {
    if (br.dead) {
      out.dead_branches.push_back(br.label + ": " + br.death_note);
      continue;
    }
    auto& s = br.an->sys;
    InverseBranch ib;
    ib.label = br.label;
    ib.alive = true;
    ib.solved = s.status() == UnknownSystem::Status::Solved;
    if (!ib.solved) out.undecided = true;
    ib.alpha[0] = Poly(Rat(1));
    ib.beta[0] = Poly();
    ib.gamma[0] = Poly();
    for (int i = -1; i <= window; ++i) {
      if (i == 0) continue;
      ib.alpha[i] = s.value(br.an->alpha.at(i));
      ib.beta[i] = s.value(br.an->beta.at(i));
      ib.gamma[i] = s.value(br.an->gamma.at(i));
    }
    for (const auto& [key, poly] : br.an->f) ib.f[key] = s.value(poly);
    ib.g_m11 = s.value(br.an->g_m11);
    ib.assumptions = s.assumptions_used();
    ib.derived = s.trace();
    out.branches.push_back(std::move(ib));
  }
  return out;
}

LemmaReplay replay_lemma(const std::string& id, unsigned degree, int window,
                         const InverseSpec& spec) {
  InverseResult res = inverse_solve(window, degree, spec);
  if (res.branches.size() != 1 || !res.branches[0].solved) {
    LemmaReplay rep;
    rep.lemma = id;
    rep.confirmed = false;
    rep.derived.push_back("inverse solve did not reach a unique solved branch");
    return rep;
  }
  return replay_lemma_from(res.branches[0], id, window);
}

LemmaReplay replay_lemma_from(const InverseBranch& br, const std::string& id, int window) {
  LemmaReplay rep;
  rep.lemma = id;
  rep.assumptions = br.assumptions;

  auto note = [&](const std::string& what, bool ok) {
    rep.derived.push_back(what + (ok ? "  [confirmed]" : "  [FAILED]"));
    return ok;
  };

  bool ok = true;
  if (id == "3.1") {
    for (int i = -1; i <= window; ++i) {
      ok &= note("beta_" + std::to_string(i) + " = " + std::to_string(i) + " * beta_1",
                 br.beta.at(i) == br.beta.at(1) * Rat(i));
      ok &= note("gamma_" + std::to_string(i) + " = " + std::to_string(i) + " * gamma_1",
                 br.gamma.at(i) == br.gamma.at(1) * Rat(i));
    }
  } else if (id == "3.2") {
    ok &= note("g_{-1,1} = 0", br.g_m11.is_zero());
    ok &= note("f_{-1,1} is a nonzero constant",
               br.f.at({-1, 1}).is_constant() && !br.f.at({-1, 1}).is_zero());
  } else if (id == "3.3") {
    for (int i = -1; i <= window; ++i)
      ok &= note("alpha_" + std::to_string(i) + " = " + std::to_string(i) +
                     " * alpha_1 - " + std::to_string(i - 1),
                 br.alpha.at(i) == br.alpha.at(1) * Rat(i) - Rat(i) + Rat(1));
    for (int i = 1; i + 1 <= window; ++i) {
      Poly lhs = br.f.at({1, i});
      Poly expect = br.f.at({-1, 1}) * br.gamma.at(1) *
                    (Rat(i) * Rat(i + 1) / 2 - 1);
      Poly rhs_den = br.f.at({-1, i + 1});
      ok &= note("f_{1," + std::to_string(i) + "} * f_{-1," + std::to_string(i + 1) +
                     "} = f_{-1,1} (i(i+1)/2 - 1) gamma_1",
                 lhs * rhs_den == expect);
    }
  } else if (id == "3.4") {
    for (const auto& [key, poly] : br.f) {
      int i = key.first, j = key.second;
      if (i < 1 || j < 1) continue;
      // f_{i,j} * prod s_{i+1..i+j} = prod s_{1..j} * comb * (j-i) gamma_1
      Poly lhs = poly;
      Poly rhs(Rat(1));
      for (int t = 1; t <= j; ++t) rhs *= br.f.at({-1, t});
      for (int t = i + 1; t <= i + j; ++t) lhs = lhs * br.f.at({-1, t});
      Rat comb = rat_factorial(static_cast<unsigned>(i + j + 1)) /
                 (rat_factorial(static_cast<unsigned>(i + 1)) *
                  rat_factorial(static_cast<unsigned>(j + 1)));
      rhs = rhs * br.gamma.at(1) * (comb * Rat(j - i));
      ok &= note("f_{" + std::to_string(i) + "," + std::to_string(j) + "} matches the"
                 " factorial closed form", lhs == rhs);
    }
  } else {
    throw std::invalid_argument("unknown lemma id: " + id);
  }
  rep.confirmed = ok;
  return rep;
}

NormalizeResult normalize_basis(const InverseBranch& br, int window) {
  NormalizeResult out;
  auto as_rat = [](const Poly& p, const std::string& what) {
    if (!p.is_constant())
      throw std::invalid_argument("normalize_basis needs a specialized solution; " + what +
                                  " is not rational");
    return p.constant_value();
  };

  Rat gamma1 = as_rat(br.gamma.at(1), "gamma_1");
  if (gamma1 == 0) {
    out.detail = "gamma_1 = 0 is outside the classification (C3 requires gamma_1 != 0)";
    return out;
  }
  std::map<int, Rat> s;
  for (int i = 1; i <= window; ++i) {
    auto it = br.f.find({-1, i});
    if (it == br.f.end()) break;
    s[i] = as_rat(it->second, "s_" + std::to_string(i));
    if (s[i] == 0) {
      out.detail = "s_" + std::to_string(i) + " = 0 violates the nonvanishing conditions";
      return out;
    }
  }
  out.alpha = as_rat(br.alpha.at(1), "alpha_1");
  out.beta = as_rat(br.beta.at(1), "beta_1");

  // Scale factors t_i with X'_i = t_i X_i.
  std::map<int, Rat> t;
  t[-1] = 1;
  t[0] = Rat(1) / gamma1;
  Rat acc = 1;
  for (int i = 1; i <= window && s.count(i); ++i) {
    acc *= s.at(i);
    t[i] = rat_factorial(static_cast<unsigned>(i + 1)) / (acc * gamma1);
  }

  Algebra target = make_hv_ab(out.alpha, out.beta);
  std::ostringstream mismatch;

  // [L X'_i] entries must agree with the HV(alpha, beta) table as polynomials.
  for (int i = -1; i <= window; ++i) {
    Poly got = poly_d() + br.alpha.at(i) * poly_l() + br.beta.at(i);
    Poly want = target.table(gen_L(), gen_H(i), kVarL).coeff(gen_H(i));
    if (got != want) {
      mismatch << "[L X'_" << i << "] = " << got.str() << " expected " << want.str();
      out.detail = mismatch.str();
      return out;
    }
  }
  // Rescaled X-pair entries must equal (j - i) X'_{i+j} exactly.
  for (const auto& [key, poly] : br.f) {
    int i = key.first, j = key.second;
    if (!t.count(i) || !t.count(j) || !t.count(i + j)) continue;
    Poly got = poly * (t.at(i) * t.at(j) / t.at(i + j));
    Poly want = target.table(gen_H(i), gen_H(j), kVarL).coeff(gen_H(i + j));
    if (got != want) {
      mismatch << "[X'_" << i << " X'_" << j << "] = " << got.str() << " expected "
               << want.str();
      out.detail = mismatch.str();
      return out;
    }
  }
  // gamma entries: [X'_0 X'_j] = t_0 gamma_j X'_j must equal j X'_j.
  for (int j = -1; j <= window; ++j) {
    if (j == 0) continue;
    Poly got = br.gamma.at(j) * t.at(0);
    Poly want = target.table(gen_H(0), gen_H(j), kVarL).coeff(gen_H(j));
    if (got != want) {
      mismatch << "[X'_0 X'_" << j << "] = " << got.str() << " expected " << want.str();
      out.detail = mismatch.str();
      return out;
    }
  }
  if (!br.g_m11.is_zero()) {
    out.detail = "g_{-1,1} nonzero";
    return out;
  }
  out.ok = true;
  out.detail = "solution maps onto HV(" + rat_str(out.alpha) + ", " + rat_str(out.beta) +
               ") under the factorial rescaling";
  return out;
}

}  // namespace conforma
