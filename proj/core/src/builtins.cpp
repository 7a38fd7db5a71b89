#include "conforma/builtins.hpp"

#include <sstream>
#include <stdexcept>

namespace conforma {

bool StructureConstants::is_lie_algebra(std::string* why) const {
  std::size_t n = dim();
  auto bad = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (c.size() != n) return bad("structure constant table has wrong dimension");
  for (const auto& row : c) {
    if (row.size() != n) return bad("structure constant table has wrong dimension");
    for (const auto& entry : row)
      if (entry.size() != n) return bad("structure constant table has wrong dimension");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[i][j][k] != -c[j][i][k]) return bad("antisymmetry fails");
  // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l];
          if (s != 0) return bad("Jacobi identity fails on structure constants");
        }
  return true;
}

StructureConstants sl2_constants() {
  StructureConstants sc;
  sc.names = {"e", "h", "f"};
  sc.c.assign(3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
  auto set = [&](int i, int j, int k, long v) {
    sc.c[i][j][k] = Rat(v);
    sc.c[j][i][k] = Rat(-v);
  };
  // [e,f] = h, [h,e] = 2e, [h,f] = -2f
  set(0, 2, 1, 1);
  set(1, 0, 0, 2);
  set(1, 2, 2, -2);
  return sc;
}

namespace {

Poly ipoly(long v) { return Poly(Rat(v)); }

// alpha/beta as a polynomial: either the symbol or a rational value.
Poly param_poly(std::optional<Rat> value, VarId symbol) {
  return value ? Poly(*value) : Poly::var(symbol);
}

std::vector<GeneratorId> cur_basis(std::size_t dim, bool with_L) {
  std::vector<GeneratorId> out;
  if (with_L) out.push_back(gen_L());
  for (std::size_t i = 0; i < dim; ++i) out.push_back(gen_cur(static_cast<std::int32_t>(i)));
  return out;
}

Element cur_bracket(const StructureConstants& sc, std::int32_t i, std::int32_t j) {
  Element out;
  for (std::size_t k = 0; k < sc.dim(); ++k) {
    const Rat& v = sc.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][k];
    if (v != 0) out += Element(gen_cur(static_cast<std::int32_t>(k)), Poly(v));
  }
  return out;
}

}  // namespace

Algebra make_vir() {
  Algebra A;
  A.name = "vir";
  A.finite_basis = {gen_L()};
  A.valid = [](const GeneratorId& g) { return g.fam == Family::L; };
  A.grade = [](const GeneratorId&) { return 0; };
  A.window_gens = [](int) { return std::vector<GeneratorId>{gen_L()}; };
  A.rule = [](const GeneratorId&, const GeneratorId&, VarId slot) {
    return Element(gen_L(), poly_d() + Poly::var(slot) * Rat(2));
  };
  return A;
}

Algebra make_cur(const StructureConstants& sc) {
  std::string why;
  if (!sc.is_lie_algebra(&why))
    throw std::invalid_argument("make_cur: not a Lie algebra: " + why);
  Algebra A;
  A.name = "cur";
  A.finite_basis = cur_basis(sc.dim(), false);
  std::size_t dim = sc.dim();
  A.valid = [dim](const GeneratorId& g) {
    return g.fam == Family::Cur && g.a >= 0 && g.a < static_cast<std::int32_t>(dim);
  };
  A.grade = [](const GeneratorId&) { return 0; };
  auto basis = A.finite_basis;
  A.window_gens = [basis](int) { return basis; };
  A.rule = [sc](const GeneratorId& x, const GeneratorId& y, VarId) {
    return cur_bracket(sc, x.a, y.a);
  };
  return A;
}

Algebra make_semidirect_vir_cur(const StructureConstants& sc) {
  std::string why;
  if (!sc.is_lie_algebra(&why))
    throw std::invalid_argument("make_semidirect_vir_cur: not a Lie algebra: " + why);
  Algebra A;
  A.name = "vir_cur";
  A.finite_basis = cur_basis(sc.dim(), true);
  std::size_t dim = sc.dim();
  A.valid = [dim](const GeneratorId& g) {
    if (g.fam == Family::L) return true;
    return g.fam == Family::Cur && g.a >= 0 && g.a < static_cast<std::int32_t>(dim);
  };
  A.grade = [](const GeneratorId&) { return 0; };
  auto basis = A.finite_basis;
  A.window_gens = [basis](int) { return basis; };
  A.rule = [sc](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    Poly lam = Poly::var(slot);
    if (x.fam == Family::L && y.fam == Family::L)
      return Element(gen_L(), poly_d() + lam * Rat(2));
    if (x.fam == Family::L) return Element(y, poly_d() + lam);
    if (y.fam == Family::L) return Element(x, lam);  // skew of (d + l) a
    return cur_bracket(sc, x.a, y.a);
  };
  return A;
}

Algebra make_hv() {
  Algebra A;
  A.name = "hv";
  A.finite_basis = {gen_L(), gen_H(0)};
  A.valid = [](const GeneratorId& g) {
    return g.fam == Family::L || (g.fam == Family::H && g.a == 0);
  };
  A.grade = [](const GeneratorId&) { return 0; };
  auto basis = A.finite_basis;
  A.window_gens = [basis](int) { return basis; };
  A.rule = [](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    Poly lam = Poly::var(slot);
    if (x.fam == Family::L && y.fam == Family::L)
      return Element(gen_L(), poly_d() + lam * Rat(2));
    if (x.fam == Family::L) return Element(gen_H(0), poly_d() + lam);
    if (y.fam == Family::L) return Element(gen_H(0), lam);
    return Element();  // [H_l H] = 0
  };
  return A;
}

Algebra make_hv_ab(std::optional<Rat> alpha, std::optional<Rat> beta) {
  Algebra A;
  std::ostringstream name;
  name << "hv_ab";
  if (alpha && beta) name << "(" << rat_str(*alpha) << "," << rat_str(*beta) << ")";
  A.name = name.str();
  if (!alpha) A.parameters.push_back(kVarAlpha);
  if (!beta) A.parameters.push_back(kVarBeta);
  Poly pa = param_poly(alpha, kVarAlpha);
  Poly pb = param_poly(beta, kVarBeta);
  A.valid = [](const GeneratorId& g) {
    return g.fam == Family::L || (g.fam == Family::H && g.a >= -1);
  };
  A.grade = [](const GeneratorId& g) { return g.fam == Family::L ? 0 : g.a; };
  A.window_gens = [](int level) {
    std::vector<GeneratorId> out{gen_L()};
    for (int i = -1; i <= level; ++i) out.push_back(gen_H(i));
    return out;
  };
  A.rule = [pa, pb](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    Poly lam = Poly::var(slot);
    if (x.fam == Family::L && y.fam == Family::L)
      return Element(gen_L(), poly_d() + lam * Rat(2));
    if (x.fam == Family::L) {
      long i = y.a;
      // (d + (i alpha - i + 1) l + i beta) H_i
      Poly coeff = poly_d() + (pa * Rat(i) - Rat(i) + Rat(1)) * lam + pb * Rat(i);
      return Element(y, coeff);
    }
    if (y.fam == Family::L) {
      long i = x.a;
      // skew image: ((i alpha - i) d + (i alpha - i + 1) l - i beta) H_i
      Poly ia = pa * Rat(i) - Rat(i);
      Poly coeff = ia * poly_d() + (ia + Rat(1)) * lam - pb * Rat(i);
      return Element(x, coeff);
    }
    return Element(gen_H(x.a + y.a), ipoly(y.a - x.a));
  };
  return A;
}

Algebra make_gc_n(int n_size) {
  if (n_size < 1) throw std::invalid_argument("make_gc_n: N must be positive");
  Algebra A;
  A.name = "gc_" + std::to_string(n_size);
  A.valid = [n_size](const GeneratorId& g) {
    return g.fam == Family::Gc && g.a >= 0 && g.b >= 0 && g.b < n_size * n_size;
  };
  A.grade = [](const GeneratorId& g) { return g.a; };
  A.window_gens = [n_size](int level) {
    std::vector<GeneratorId> out;
    for (int deg = 0; deg <= level; ++deg)
      for (int r = 0; r < n_size; ++r)
        for (int c = 0; c < n_size; ++c) out.push_back(gen_gc(deg, r, c, n_size));
    return out;
  };
  A.rule = [n_size](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    int m = x.a, n = y.a;
    int xr = x.b / n_size, xc = x.b % n_size;
    int yr = y.b / n_size, yc = y.b % n_size;
    Element out;
    Poly lam = Poly::var(slot);
    if (xc == yr) {  // AB = E_{xr,yc}
      Poly shift = lam + poly_d();
      for (int s = 0; s <= m; ++s)
        out += Element(gen_gc(m + n - s, xr, yc, n_size),
                       shift.pow(static_cast<std::uint32_t>(s)) * rat_binom(m, s));
    }
    if (yc == xr) {  // BA = E_{yr,xc}
      Poly neg = -lam;
      for (int s = 0; s <= n; ++s)
        out -= Element(gen_gc(m + n - s, yr, xc, n_size),
                       neg.pow(static_cast<std::uint32_t>(s)) * rat_binom(n, s));
    }
    return out;
  };
  return A;
}

}  // namespace conforma
