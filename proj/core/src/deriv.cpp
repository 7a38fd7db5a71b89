#include "conforma/deriv.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "conforma/unknowns.hpp"

namespace conforma {

Element ConformalMapWindow::image(const GeneratorId& g) const {
  auto it = images.find(g);
  if (it == images.end())
    throw std::out_of_range("map not defined on " + gen_str(g));
  return it->second;
}

Element ConformalMapWindow::apply(const Element& e, const Poly& slot_expr) const {
  Element out;
  Poly shifted = poly_d() + slot_expr;
  for (const auto& [g, f] : e.comps()) {
    Element img = image(g).map_coeffs([&](const Poly& p) { return p.substitute(kVarL, slot_expr); });
    out += img * f.substitute(kVarD, shifted);
  }
  return out;
}

ConformalMapWindow ConformalMapWindow::operator+(const ConformalMapWindow& o) const {
  ConformalMapWindow r;
  r.level = std::min(level, o.level);
  for (const auto& [g, img] : images) {
    if (!o.images.count(g)) continue;
    r.images[g] = img + o.images.at(g);
  }
  return r;
}

ConformalMapWindow ConformalMapWindow::operator*(const Rat& c) const {
  ConformalMapWindow r;
  r.level = level;
  for (const auto& [g, img] : images) r.images[g] = img * c;
  return r;
}

ConformalMapWindow inner_map(const Algebra& A, const Element& x, int level) {
  ConformalMapWindow D;
  D.level = level;
  for (const auto& g : A.window_gens(level))
    D.images[g] = A.bracket(x, Element(g), kVarL);
  return D;
}

Element gc_bracket(const Algebra& A, const ConformalMapWindow& phi,
                   const ConformalMapWindow& psi, const GeneratorId& probe) {
  if (!A.finite())
    throw std::invalid_argument("gc_bracket requires a finite-rank presentation");
  Poly ml = poly_m() - poly_l();
  Element inner_first = psi.apply(Element(probe), ml);
  Element t1 = phi.apply(inner_first, poly_l());
  Element outer_first = phi.apply(Element(probe), poly_l());
  Element t2 = psi.apply(outer_first, ml);
  return t1 - t2;
}

std::optional<Element> derivation_residual(const Algebra& A, const ConformalMapWindow& D,
                                           const GeneratorId& x, const GeneratorId& y) {
  if (!D.defined_on(x) || !D.defined_on(y)) return std::nullopt;
  Element w = A.table(x, y, kVarM);
  for (const auto& [g, q] : w.comps())
    if (!D.defined_on(g)) return std::nullopt;  // bracket support leaves the window

  Element term1 = D.apply(w, poly_l());
  Element term2 = A.bracket(D.image(x), Element(y), kVarN)
                      .map_coeffs([&](const Poly& p) {
                        return p.substitute(kVarN, poly_l() + poly_m());
                      });
  Element term3 = A.bracket(Element(x), D.image(y), kVarM);
  return term1 - term2 - term3;
}

namespace {

// Ansatz images of the shift-i component: D(H_j) lands in grade i+j, D(L) in
// grade i; a grade-0 target contributes both an L and an H_0 part.
struct ShiftAnsatz {
  UnknownSystem sys;
  std::vector<VarId> columns;
  std::map<VarId, std::size_t> col_index;
  ConformalMapWindow map;  // images with unknown-parameter polynomials

  Poly fresh_poly(const std::string& tag, unsigned deg) {
    Poly p = sys.ansatz(tag, {kVarD, kVarL}, deg);
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        VarId v = static_cast<VarId>(i);
        if (m.exps[i] > 0 && sys.is_unknown(v) && !col_index.count(v)) {
          col_index[v] = columns.size();
          columns.push_back(v);
        }
      }
    return p;
  }
};

Element grade_component_ansatz(ShiftAnsatz& a, int target_grade, const std::string& tag,
                               unsigned deg) {
  if (target_grade < -1) return Element();
  Element img;
  if (target_grade == 0) {
    img += Element(gen_L(), a.fresh_poly(tag + "_L", deg));
    img += Element(gen_H(0), a.fresh_poly(tag + "_H0", deg));
  } else {
    img += Element(gen_H(target_grade), a.fresh_poly(tag + "_H" + std::to_string(target_grade), deg));
  }
  return img;
}

std::vector<GeneratorId> generating_set(int window) {
  std::vector<GeneratorId> out{gen_L()};
  for (int j = -1; j <= std::min(window, 1); ++j) out.push_back(gen_H(j));
  return out;
}

// Converts the u-linear homogeneous pieces of an element residual into rows.
void residual_rows(const Element& resid, const ShiftAnsatz& a, RowReducer& red) {
  for (const auto& [g, poly] : resid.comps()) {
    for (const Poly& piece : coefficient_equations(poly, a.sys.unknowns())) {
      RatVec row(a.columns.size(), Rat(0));
      for (const auto& [m, c] : piece.terms()) {
        VarId u = 0;
        int found = 0;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
          if (m.exps[i] > 0) {
            u = static_cast<VarId>(i);
            found += static_cast<int>(m.exps[i]);
          }
        if (found != 1) throw std::logic_error("derivation residual is not linear");
        row[a.col_index.at(u)] = c;
      }
      red.add_row(std::move(row));
    }
  }
}

ConformalMapWindow instantiate(const ShiftAnsatz& a, const RatVec& values) {
  std::map<VarId, Rat> assign;
  for (std::size_t i = 0; i < a.columns.size(); ++i) assign[a.columns[i]] = values[i];
  ConformalMapWindow out;
  out.level = a.map.level;
  for (const auto& [g, img] : a.map.images)
    out.images[g] = img.map_coeffs([&](const Poly& p) { return p.eval_params(assign); });
  return out;
}

}  // namespace

DerivationSolution solve_derivations(const Algebra& hv_ab, const DerivationSolveProblem& P) {
  ShiftAnsatz a;
  a.map.level = P.window;
  int i = P.shift;
  for (const auto& g : hv_ab.window_gens(P.window)) {
    int target = (g.fam == Family::L ? 0 : g.a) + i;
    a.map.images[g] =
        grade_component_ansatz(a, target, "D" + std::to_string(i) + "_" + gen_str(g), P.degree);
  }

  DerivationSolution sol;
  RowReducer red(a.columns.size());
  std::vector<GeneratorId> domain = hv_ab.window_gens(P.window);
  for (const auto& x : generating_set(P.window))
    for (const auto& y : domain) {
      auto resid = derivation_residual(hv_ab, a.map, x, y);
      if (!resid) {
        ++sol.pairs_skipped;
        continue;
      }
      ++sol.pairs_used;
      residual_rows(*resid, a, red);
    }
  if (sol.pairs_used == 0) {
    sol.window_inconclusive = true;
    return sol;
  }
  for (const RatVec& v : nullspace(red.rows(), a.columns.size()))
    sol.basis.push_back(instantiate(a, v));
  return sol;
}

namespace {

// Flattens maps over a shared (domain gen, target gen, monomial) index.
struct MapVectorizer {
  std::map<std::tuple<GeneratorId, GeneratorId, Mono>, std::size_t> index;

  void collect(const ConformalMapWindow& D) {
    for (const auto& [g, img] : D.images)
      for (const auto& [h, p] : img.comps())
        for (const auto& [m, c] : p.terms()) {
          auto key = std::make_tuple(g, h, m);
          if (!index.count(key)) {
            std::size_t next = index.size();
            index[key] = next;
          }
        }
  }

  RatVec vectorize(const ConformalMapWindow& D) const {
    RatVec v(index.size(), Rat(0));
    for (const auto& [g, img] : D.images)
      for (const auto& [h, p] : img.comps())
        for (const auto& [m, c] : p.terms()) v[index.at(std::make_tuple(g, h, m))] = c;
    return v;
  }
};

}  // namespace

SpanComparison compare_with_inner_span(const Algebra& hv_ab, const DerivationSolveProblem& P,
                                       const DerivationSolution& sol, unsigned fdeg) {
  // The grade-i part of the algebra is C[d]H_i except in grade 0, where it is
  // C[d]L + C[d]H_0; shift-0 derivations therefore also contain ad(g(d)L).
  std::vector<ConformalMapWindow> inner;
  for (unsigned k = 0; k <= fdeg; ++k) {
    Element x(gen_H(P.shift), Poly::var(kVarD, k));
    inner.push_back(inner_map(hv_ab, x, P.window));
    if (P.shift == 0)
      inner.push_back(inner_map(hv_ab, Element(gen_L(), Poly::var(kVarD, k)), P.window));
  }

  MapVectorizer vec;
  for (const auto& D : sol.basis) vec.collect(D);
  for (const auto& D : inner) vec.collect(D);

  SpanComparison cmp;
  RowReducer solver_span(vec.index.size());
  for (const auto& D : sol.basis) solver_span.add_row(vec.vectorize(D));
  RowReducer inner_span(vec.index.size());
  for (const auto& D : inner) inner_span.add_row(vec.vectorize(D));
  cmp.solver_dim = solver_span.rank();
  cmp.inner_dim = inner_span.rank();
  cmp.solver_inside_inner = true;
  for (const auto& D : sol.basis)
    if (!inner_span.contains(vec.vectorize(D))) cmp.solver_inside_inner = false;
  cmp.inner_inside_solver = true;
  for (const auto& D : inner)
    if (!solver_span.contains(vec.vectorize(D))) cmp.inner_inside_solver = false;
  return cmp;
}

InnerResult is_inner_on_window(const Algebra& A, const ConformalMapWindow& D,
                               unsigned degree_bound) {
  // Witness ansatz: x = sum over window generators h of f_h(d) h.
  UnknownSystem sys;
  std::vector<VarId> cols;
  std::map<VarId, std::size_t> col_index;
  Element x;
  for (const auto& h : A.window_gens(D.level)) {
    Poly f = sys.ansatz("w_" + gen_str(h), {kVarD}, degree_bound);
    for (const auto& [m, c] : f.terms())
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        VarId v = static_cast<VarId>(i);
        if (m.exps[i] > 0 && sys.is_unknown(v) && !col_index.count(v)) {
          col_index[v] = cols.size();
          cols.push_back(v);
        }
      }
    x += Element(h, f);
  }

  RatMat rows;
  RatVec rhs;
  for (const auto& [g, target] : D.images) {
    Element resid = A.bracket(x, Element(g), kVarL) - target;
    for (const auto& [h, poly] : resid.comps())
      for (const Poly& piece : coefficient_equations(poly, sys.unknowns())) {
        RatVec row(cols.size(), Rat(0));
        Rat constant(0);
        for (const auto& [m, c] : piece.terms()) {
          VarId u = 0;
          int found = 0;
          for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] > 0 && sys.is_unknown(static_cast<VarId>(i))) {
              u = static_cast<VarId>(i);
              found += static_cast<int>(m.exps[i]);
            }
          if (found == 0) {
            if (!m.exps.empty())
              throw std::logic_error("witness equation has non-constant known part");
            constant = c;
          } else if (found == 1) {
            row[col_index.at(u)] += c;
          } else {
            throw std::logic_error("witness equation is not linear");
          }
        }
        rows.push_back(std::move(row));
        rhs.push_back(-constant);
      }
  }

  auto xsol = solve(rows, rhs);
  if (!xsol) {
    return NotInner{"no finitely supported witness with coefficient degree <= " +
                    std::to_string(degree_bound) + ": the linear system ad x = D is inconsistent"};
  }
  std::map<VarId, Rat> assign;
  for (std::size_t i = 0; i < cols.size(); ++i) assign[cols[i]] = (*xsol)[i];
  Element witness = x.map_coeffs([&](const Poly& p) { return p.eval_params(assign); });
  return InnerWitness{witness};
}

ConformalMapWindow d_L_map(const Algebra& cur, int level) {
  ConformalMapWindow D;
  D.level = level;
  Poly dl = poly_d() + poly_l();
  for (const auto& g : cur.window_gens(level)) {
    if (g.fam == Family::L) {
      D.images[g] = Element();  // d^L acts on the current part only
      continue;
    }
    D.images[g] = Element(g, dl);
  }
  return D;
}

}  // namespace conforma
