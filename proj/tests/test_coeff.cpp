#include <doctest.h>

#include "conforma/builtins.hpp"
#include "conforma/coeff.hpp"
#include "conforma/parser.hpp"
#include "test_support.hpp"

using namespace conforma;

namespace {

Poly P(const std::string& s) {
  ParseContext ctx;
  ctx.declare("alpha").declare("beta");
  return parse_poly(s, ctx);
}

Poly sym_alpha() { return Poly::var(kVarAlpha); }
Poly sym_beta() { return Poly::var(kVarBeta); }

ModeElement one(const GeneratorId& g, std::int64_t n) {
  return ModeElement({g, n}, Poly(Rat(1)));
}

}  // namespace

TEST_CASE("jth products") {
  Algebra vir = make_vir();
  auto prods = jth_products(vir, gen_L(), gen_L());
  REQUIRE(prods.size() == 2);
  CHECK(prods[0].first == 0);
  CHECK(prods[0].second == Element(gen_L(), poly_d()));
  CHECK(prods[1].first == 1);
  CHECK(prods[1].second == Element(gen_L(), P("2")));

  Algebra ab = make_hv_ab();
  auto ph = jth_products(ab, gen_L(), gen_H(3));
  REQUIRE(ph.size() == 2);
  CHECK(ph[0].second == Element(gen_H(3), P("d + 3*beta")));
  CHECK(ph[1].second == Element(gen_H(3), P("3*alpha - 2")));

  Algebra hv = make_hv();
  CHECK(jth_products(hv, gen_H(0), gen_H(0)).empty());
}

TEST_CASE("mode normalization eliminates d") {
  // (d L)_(3) = -3 L_(2); (d^2 L)_(3) = 6 L_(1)
  CHECK(mode_of(Element(gen_L(), poly_d()), 3) ==
        ModeElement({gen_L(), 2}, Poly(Rat(-3))));
  CHECK(mode_of(Element(gen_L(), poly_d() * poly_d()), 3) ==
        ModeElement({gen_L(), 1}, Poly(Rat(6))));
  CHECK(mode_of(Element(gen_L(), poly_d()), 0).is_zero());
}

TEST_CASE("mode bracket instances") {
  Algebra vir = make_vir();
  // [L_(m), L_(n)] = (m - n) L_(m+n-1); instance [L_(1), L_(2)] = -L_(2).
  CHECK(mode_bracket(vir, one(gen_L(), 1), one(gen_L(), 2)) ==
        ModeElement({gen_L(), 2}, Poly(Rat(-1))));
  for (long m = -2; m <= 3; ++m)
    for (long n = -2; n <= 3; ++n)
      CHECK(mode_bracket(vir, one(gen_L(), m), one(gen_L(), n)) ==
            ModeElement({gen_L(), m + n - 1}, Poly(Rat(m - n))));

  Algebra hv = make_hv();
  CHECK(mode_bracket(hv, one(gen_H(0), 2), one(gen_H(0), 5)).is_zero());

  Algebra ab = make_hv_ab();
  CHECK(mode_bracket(ab, one(gen_H(-1), 0), one(gen_H(1), 0)) ==
        ModeElement({gen_H(0), 0}, Poly(Rat(2))));
}

TEST_CASE("extended partial") {
  CHECK(extended_partial(one(gen_L(), 3)) == ModeElement({gen_L(), 2}, Poly(Rat(-3))));
  CHECK(extended_partial(one(gen_L(), 0)).is_zero());
  ModeElement x = ModeElement({gen_H(1), 2}, Poly(Rat(2))) + one(gen_H(2), 1);
  ModeElement expect =
      ModeElement({gen_H(1), 1}, Poly(Rat(-4))) + ModeElement({gen_H(2), 0}, Poly(Rat(-1)));
  CHECK(extended_partial(x) == expect);
}

TEST_CASE("extended partial is a derivation of the mode bracket") {
  Algebra ab = make_hv_ab();
  std::vector<ModeKey> basis;
  for (int m = 0; m <= 4; ++m) basis.push_back({gen_L(), m});
  for (int i = -1; i <= 3; ++i)
    for (int m = 0; m <= 3; ++m) basis.push_back({gen_H(i), m});
  for (const auto& x : basis)
    for (const auto& y : basis) {
      ModeElement xe = ModeElement(x, Poly(Rat(1))), ye = ModeElement(y, Poly(Rat(1)));
      ModeElement lhs = extended_partial(mode_bracket(ab, xe, ye));
      ModeElement rhs = mode_bracket(ab, extended_partial(xe), ye) +
                        mode_bracket(ab, xe, extended_partial(ye));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("mode bracket is antisymmetric and satisfies Jacobi on the window") {
  for (Algebra A : {make_vir(), make_hv(), make_hv_ab()}) {
    std::vector<ModeKey> basis;
    basis.push_back({gen_L(), 0});
    basis.push_back({gen_L(), 2});
    basis.push_back({gen_L(), 5});
    if (A.name != "vir") {
      int hi = A.name == "hv" ? 0 : 4;
      for (int i = A.name == "hv" ? 0 : -1; i <= hi; i += 2)
        for (int m : {0, 1, 3}) basis.push_back({gen_H(i), m});
    }
    for (const auto& x : basis)
      for (const auto& y : basis) {
        ModeElement xe(x, Poly(Rat(1))), ye(y, Poly(Rat(1)));
        CHECK((mode_bracket(A, xe, ye) + mode_bracket(A, ye, xe)).is_zero());
        for (const auto& z : basis) {
          ModeElement ze(z, Poly(Rat(1)));
          ModeElement r = mode_bracket(A, xe, mode_bracket(A, ye, ze)) -
                          mode_bracket(A, ye, mode_bracket(A, xe, ze)) -
                          mode_bracket(A, mode_bracket(A, xe, ye), ze);
          CHECK_MESSAGE(r.is_zero(), (A.name + " triple " + mode_str(x) + "," +
                                      mode_str(y) + "," + mode_str(z)));
        }
      }
  }
}

TEST_CASE("annihilation modes are closed under the bracket") {
  Algebra ab = make_hv_ab();
  std::vector<ModeKey> basis;
  for (int m = 0; m <= 4; ++m) basis.push_back({gen_L(), m});
  for (int i = -1; i <= 3; ++i)
    for (int m = 0; m <= 3; ++m) basis.push_back({gen_H(i), m});
  for (const auto& x : basis)
    for (const auto& y : basis) {
      ModeElement r = mode_bracket(ab, ModeElement(x, Poly(Rat(1))),
                                   ModeElement(y, Poly(Rat(1))));
      for (const auto& [k, c] : r.comps()) CHECK(k.mode >= 0);
    }
}

TEST_CASE("closed-form annihilation bracket instances") {
  Poly a = sym_alpha(), b = sym_beta();
  // [L_1, H_{2,0}] = (4 alpha - 4) H_{2,1} + 2 beta H_{2,2}
  ModeElement r = hv_ab_annihilation_bracket({gen_L(), 1}, {gen_H(2), 0}, a, b);
  ModeElement expect = ModeElement({gen_H(2), 1}, P("4*alpha - 4")) +
                       ModeElement({gen_H(2), 2}, P("2*beta"));
  CHECK(r == expect);

  CHECK(hv_ab_annihilation_bracket({gen_H(1), 2}, {gen_H(3), 0}, a, b) ==
        ModeElement({gen_H(4), 2}, Poly(Rat(2))));
  CHECK(hv_ab_annihilation_bracket({gen_L(), 0}, {gen_L(), 0}, a, b).is_zero());
  // Witt relabelling: [L_m, L_n] = (m - n) L_{m+n}
  CHECK(hv_ab_annihilation_bracket({gen_L(), 2}, {gen_L(), -1}, a, b) ==
        ModeElement({gen_L(), 1}, Poly(Rat(3))));
}

TEST_CASE("crosscheck against the mode construction (symbolic)") {
  Algebra ab = make_hv_ab();
  CrosscheckReport rep = crosscheck_annihilation(ab, sym_alpha(), sym_beta(), 5, 5);
  CHECK_MESSAGE(rep.match, (rep.mismatches.empty() ? std::string() : rep.mismatches.front()));
  CHECK(rep.pairs_checked > 0);
}

TEST_CASE("off-by-one relabelling is reported (negative control)") {
  Algebra ab = make_hv_ab();
  CrosscheckReport rep = crosscheck_annihilation(ab, sym_alpha(), sym_beta(), 3, 3, 1, 0);
  CHECK(!rep.match);
  CHECK(!rep.mismatches.empty());
}
