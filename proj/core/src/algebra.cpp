#include "conforma/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "conforma/parallel.hpp"

namespace conforma {

Element Algebra::table(const GeneratorId& x, const GeneratorId& y, VarId slot) const {
  if (valid && (!valid(x) || !valid(y)))
    throw std::out_of_range("generator pair outside the declared ranges of " + name + ": " +
                            gen_str(x) + ", " + gen_str(y));
  return rule(x, y, slot);
}

Element Algebra::bracket(const Element& x, const Element& y, VarId slot) const {
  for (const auto& [g, c] : x.comps())
    if (c.contains(slot))
      throw std::invalid_argument("bracket: slot variable occurs in left coefficients");
  Element out;
  Poly minus_slot = -Poly::var(slot);
  Poly shifted_d = poly_d() + Poly::var(slot);
  for (const auto& [gx, fx] : x.comps()) {
    Poly left = fx.substitute(kVarD, minus_slot);
    for (const auto& [gy, fy] : y.comps()) {
      Poly right = fy.substitute(kVarD, shifted_d);
      Poly scale = left * right;
      if (scale.is_zero()) continue;
      out += table(gx, gy, slot) * scale;
    }
  }
  return out;
}

Element Algebra::check_skew(const Element& x, const Element& y) const {
  Element lhs = bracket(x, y, kVarL);
  Element rhs = bracket(y, x, kVarM);
  Poly repl = -poly_l() - poly_d();
  return lhs + rhs.map_coeffs([&](const Poly& p) { return p.substitute(kVarM, repl); });
}

Element Algebra::check_jacobi(const Element& x, const Element& y, const Element& z) const {
  Element lhs = bracket(x, bracket(y, z, kVarM), kVarL);
  Element inner = bracket(x, y, kVarL);
  Poly lm = poly_l() + poly_m();
  Element rhs1 = bracket(inner, z, kVarN).map_coeffs([&](const Poly& p) {
    return p.substitute(kVarN, lm);
  });
  Element rhs2 = bracket(y, bracket(x, z, kVarL), kVarM);
  return lhs - rhs1 - rhs2;
}

Element Algebra::ad_power(const Element& x, const Element& y, unsigned n, VarId slot) const {
  Element acc = y;
  for (unsigned k = 0; k < n; ++k) {
    if (acc.is_zero()) return acc;
    acc = bracket(x, acc, slot);
  }
  return acc;
}

IdealCheck is_ideal_window(const Algebra& A,
                           const std::function<bool(const GeneratorId&)>& family, int level) {
  std::vector<GeneratorId> gens = A.window_gens(level);
  auto inside = [&](const Element& e) -> std::optional<GeneratorId> {
    for (const auto& [g, c] : e.comps())
      if (!family(g)) return g;
    return std::nullopt;
  };
  for (const auto& f : gens) {
    if (!family(f)) continue;
    for (const auto& g : gens) {
      for (const Element& v : {A.bracket(Element(f), Element(g), kVarL),
                               A.bracket(Element(g), Element(f), kVarL)}) {
        if (auto out = inside(v)) {
          std::ostringstream os;
          os << "bracket of " << gen_str(f) << " with " << gen_str(g) << " has component "
             << gen_str(*out) << " outside the family";
          return {false, os.str()};
        }
      }
    }
  }
  return {true, ""};
}

namespace {

// Top H-grade of x, or nullopt when x has no H component.
std::optional<int> top_h_grade(const Element& x) {
  std::optional<int> top;
  for (const auto& [g, c] : x.comps())
    if (g.fam == Family::H) top = top ? std::max(*top, g.a) : g.a;
  return top;
}

}  // namespace

NilpotencyReport locally_nilpotent_window(const Algebra& A, const Element& x, int level,
                                          unsigned bound) {
  NilpotencyReport rep;
  if (x.is_zero()) {
    rep.verdict = NilpotencyVerdict::Nilpotent;
    rep.detail = "zero element";
    return rep;
  }

  bool has_L = !x.coeff(gen_L()).is_zero();
  std::optional<int> top = top_h_grade(x);

  // Certified growth / persistence witnesses. The L component of (ad x)^k(L)
  // is multiplied by a nonzero polynomial at every step since no H bracket
  // feeds back into L; a top H_n with n >= 1 strictly raises the top grade on
  // H_{n+1}; a top H_0 (with no L part) rescales the grade-1 component of H_1
  // by a nonzero factor forever.
  if (has_L) {
    rep.verdict = NilpotencyVerdict::NotNilpotent;
    rep.witness = gen_L();
    rep.detail = "nonzero L component: the L part of (ad x)^k(L) never vanishes";
    return rep;
  }
  if (top && *top >= 1) {
    rep.verdict = NilpotencyVerdict::NotNilpotent;
    rep.witness = gen_H(*top + 1);
    rep.detail = "top component H_" + std::to_string(*top) +
                 " strictly raises the top grade of H_" + std::to_string(*top + 1) +
                 " at every step";
    return rep;
  }
  if (top && *top == 0) {
    rep.verdict = NilpotencyVerdict::NotNilpotent;
    rep.witness = gen_H(1);
    rep.detail = "top component H_0 rescales the grade-1 component of H_1 by a nonzero "
                 "factor at every step";
    return rep;
  }

  // Remaining support is contained in C[d]H_{-1}: iterate until everything in
  // the test window dies.
  std::vector<GeneratorId> tests = A.window_gens(level);
  for (const auto& y : tests) {
    Element acc(y);
    bool dead = false;
    for (unsigned k = 1; k <= bound; ++k) {
      acc = A.bracket(x, acc, kVarL);
      if (acc.is_zero()) {
        dead = true;
        break;
      }
    }
    if (!dead) {
      rep.verdict = NilpotencyVerdict::Inconclusive;
      rep.detail = "test generator " + gen_str(y) + " survived " + std::to_string(bound) +
                   " iterations without a growth certificate";
      return rep;
    }
  }
  rep.verdict = NilpotencyVerdict::Nilpotent;
  rep.detail = "all test generators killed within the bound";
  return rep;
}

SpanCheck derived_products_span_check(const Algebra& A,
                                      const std::vector<GeneratorId>& candidate) {
  if (!A.finite())
    throw std::invalid_argument("derived_products_span_check requires a finite presentation");
  SpanCheck out;
  out.is_ideal = true;
  out.is_abelian = true;
  auto in_candidate = [&](const GeneratorId& g) {
    for (const auto& c : candidate)
      if (c == g) return true;
    return false;
  };
  for (const auto& c : candidate) {
    for (const auto& g : A.finite_basis) {
      for (const Element& v : {A.bracket(Element(c), Element(g), kVarL),
                               A.bracket(Element(g), Element(c), kVarL)}) {
        for (const auto& [h, coeff] : v.comps()) {
          if (!in_candidate(h)) {
            out.is_ideal = false;
            out.detail = "bracket of " + gen_str(c) + " with " + gen_str(g) +
                         " leaves the candidate span";
            return out;
          }
        }
      }
    }
  }
  for (const auto& c1 : candidate)
    for (const auto& c2 : candidate)
      if (!A.bracket(Element(c1), Element(c2), kVarL).is_zero()) {
        out.is_abelian = false;
        out.detail = "internal product [" + gen_str(c1) + ", " + gen_str(c2) + "] is nonzero";
        return out;
      }
  out.detail = "candidate span is a nonzero abelian ideal";
  return out;
}

SweepReport axiom_sweep(const Algebra& A, const std::vector<GeneratorId>& gens,
                        const std::function<Poly(const Poly&)>& reduce) {
  SweepReport rep;
  std::size_t n = gens.size();

  auto is_zero = [&](const Element& e) {
    if (!reduce) return e.is_zero();
    return e.map_coeffs(reduce).is_zero();
  };

  std::vector<std::string> pair_fail(n * n), triple_fail(n * n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const GeneratorId& x = gens[idx / n];
    const GeneratorId& y = gens[idx % n];
    Element r = A.check_skew(Element(x), Element(y));
    if (!is_zero(r))
      pair_fail[idx] = "skew(" + gen_str(x) + ", " + gen_str(y) + ") = " + r.str();
  });
  parallel_for(n * n * n, [&](std::size_t idx) {
    const GeneratorId& x = gens[idx / (n * n)];
    const GeneratorId& y = gens[(idx / n) % n];
    const GeneratorId& z = gens[idx % n];
    Element r = A.check_jacobi(Element(x), Element(y), Element(z));
    if (!is_zero(r))
      triple_fail[idx] = "jacobi(" + gen_str(x) + ", " + gen_str(y) + ", " + gen_str(z) +
                         ") = " + r.str();
  });

  rep.pairs = n * n;
  rep.triples = n * n * n;
  for (auto& s : pair_fail)
    if (!s.empty()) rep.failures.push_back(std::move(s));
  for (auto& s : triple_fail)
    if (!s.empty()) rep.failures.push_back(std::move(s));
  return rep;
}

}  // namespace conforma
