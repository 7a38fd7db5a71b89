#include <doctest.h>

#include "conforma/builtins.hpp"
#include "conforma/specfile.hpp"
#include "conforma/parser.hpp"
#include "test_support.hpp"

using namespace conforma;

namespace {

Poly P(const std::string& s) {
  ParseContext ctx;
  ctx.declare("alpha").declare("beta");
  return parse_poly(s, ctx);
}

}  // namespace

TEST_CASE("builtin tables match the defining relations") {
  Algebra vir = make_vir();
  CHECK(vir.table(gen_L(), gen_L(), kVarL) == Element(gen_L(), P("d + 2*l")));

  Algebra hv = make_hv();
  CHECK(hv.table(gen_L(), gen_H(0), kVarL) == Element(gen_H(0), P("d + l")));
  CHECK(hv.table(gen_H(0), gen_L(), kVarL) == Element(gen_H(0), P("l")));
  CHECK(hv.table(gen_H(0), gen_H(0), kVarL).is_zero());

  Algebra ab = make_hv_ab();
  CHECK(ab.table(gen_H(1), gen_H(3), kVarL) == Element(gen_H(4), P("2")));
  CHECK(ab.table(gen_L(), gen_H(2), kVarL) ==
        Element(gen_H(2), P("d + (2*alpha - 1)*l + 2*beta")));
  CHECK(ab.table(gen_H(-1), gen_H(-1), kVarL).is_zero());
}

TEST_CASE("sesquilinear extension") {
  Algebra vir = make_vir();
  // [(d L)_l L] = -l (d + 2l) L
  Element dL(gen_L(), poly_d());
  CHECK(vir.bracket(dL, Element(gen_L()), kVarL) ==
        Element(gen_L(), P("-l") * P("d + 2*l")));

  // [L_l d H_0] = (d + l)^2 H_0 in HV
  Algebra hv = make_hv();
  Element dH(gen_H(0), poly_d());
  CHECK(hv.bracket(Element(gen_L()), dH, kVarL) ==
        Element(gen_H(0), P("(d + l)*(d + l)")));

  // [H_-1 _l L] in HV(alpha, beta) = ((1 - alpha) d + (2 - alpha) l + beta) H_-1
  Algebra ab = make_hv_ab();
  CHECK(ab.bracket(Element(gen_H(-1)), Element(gen_L()), kVarL) ==
        Element(gen_H(-1), P("(1 - alpha)*d + (2 - alpha)*l + beta")));
}

TEST_CASE("bracket rejects slot capture on the left and bad generators") {
  Algebra vir = make_vir();
  Element xl(gen_L(), poly_l());
  CHECK_THROWS_AS(vir.bracket(xl, Element(gen_L()), kVarL), std::invalid_argument);
  CHECK_THROWS_AS(vir.table(gen_H(0), gen_L(), kVarL), std::out_of_range);
}

TEST_CASE("both sesquilinearity rules hold for random coefficients") {
  testing::PolyGen gen(11);
  Algebra ab = make_hv_ab();
  for (int it = 0; it < 20; ++it) {
    Poly f = gen.d_poly(3), p = gen.d_poly(3);
    Element x(gen_H(1)), y(gen_H(2));
    // [f(d) x _l y] = f(-l) [x_l y]
    CHECK(ab.bracket(Element(gen_H(1), f), y, kVarL) ==
          ab.bracket(x, y, kVarL) * f.substitute(kVarD, P("-l")));
    // [x_l p(d) y] = p(d + l) [x_l y]
    CHECK(ab.bracket(x, Element(gen_H(2), p), kVarL) ==
          ab.bracket(x, y, kVarL) * p.substitute(kVarD, P("d + l")));
    // bilinearity over Q
    Element sum = y + Element(gen_H(0), p);
    CHECK(ab.bracket(x, sum, kVarL) ==
          ab.bracket(x, y, kVarL) + ab.bracket(x, Element(gen_H(0), p), kVarL));
  }
}

TEST_CASE("skew-symmetry residuals vanish") {
  Algebra vir = make_vir();
  // Expanded by hand: (d + 2l) L + (d + 2(-l - d)) L = 0.
  Element r = vir.check_skew(Element(gen_L()), Element(gen_L()));
  CHECK(r.is_zero());

  Algebra hv = make_hv();
  CHECK(hv.check_skew(Element(gen_H(0)), Element(gen_H(0))).is_zero());

  Algebra ab = make_hv_ab();
  CHECK(ab.check_skew(Element(gen_L()), Element(gen_H(2))).is_zero());
}

TEST_CASE("Jacobi residuals vanish on selected triples") {
  Algebra ab = make_hv_ab();
  CHECK(ab.check_jacobi(Element(gen_H(0)), Element(gen_H(0)), Element(gen_H(0))).is_zero());
  CHECK(ab.check_jacobi(Element(gen_L()), Element(gen_H(1)), Element(gen_H(2))).is_zero());
  for (int i = -1; i <= 8; ++i)
    CHECK(ab.check_jacobi(Element(gen_L()), Element(gen_L()), Element(gen_H(i))).is_zero());
}

TEST_CASE("windowed axiom sweeps are exactly zero for every builtin") {
  for (Algebra A : {make_vir(), make_cur(sl2_constants()),
                    make_semidirect_vir_cur(sl2_constants()), make_hv(), make_hv_ab()}) {
    SweepReport rep = axiom_sweep(A, A.window_gens(5));
    CHECK_MESSAGE(rep.ok(), (A.name + ": " + (rep.ok() ? std::string() : rep.failures.front())));
  }
}

TEST_CASE("gc_N sweep (small window)") {
  Algebra gc1 = make_gc_n(1);
  SweepReport rep1 = axiom_sweep(gc1, gc1.window_gens(3));
  CHECK_MESSAGE(rep1.ok(), (rep1.ok() ? std::string() : rep1.failures.front()));

  Algebra gc2 = make_gc_n(2);
  SweepReport rep2 = axiom_sweep(gc2, gc2.window_gens(2));
  CHECK_MESSAGE(rep2.ok(), (rep2.ok() ? std::string() : rep2.failures.front()));
}

TEST_CASE("grade additivity for HV(alpha, beta)") {
  Algebra ab = make_hv_ab();
  for (int i = -1; i <= 6; ++i)
    for (int j = -1; j <= 6; ++j) {
      Element hh = ab.table(gen_H(i), gen_H(j), kVarL);
      for (const auto& [g, c] : hh.comps()) CHECK(ab.grade(g) == i + j);
      Element lh = ab.table(gen_L(), gen_H(j), kVarL);
      for (const auto& [g, c] : lh.comps()) CHECK(ab.grade(g) == j);
    }
}

TEST_CASE("make_cur validates structure constants") {
  StructureConstants bad = sl2_constants();
  bad.c[0][2][1] = Rat(2);  // breaks antisymmetry vs c[2][0][1] = -1
  CHECK_THROWS_AS(make_cur(bad), std::invalid_argument);

  StructureConstants bad2 = sl2_constants();
  bad2.c[1][0][0] = Rat(3);  // [h,e] = 3e breaks Jacobi against [e,f] = h
  bad2.c[0][1][0] = Rat(-3);
  CHECK_THROWS_AS(make_cur(bad2), std::invalid_argument);
}

TEST_CASE("iterated ad") {
  Algebra ab = make_hv_ab();
  // (ad H_-1)^2 H_0: first step H_-1, second step 0.
  Element step1 = ab.ad_power(Element(gen_H(-1)), Element(gen_H(0)), 1, kVarL);
  CHECK(step1 == Element(gen_H(-1), P("1")));
  CHECK(ab.ad_power(Element(gen_H(-1)), Element(gen_H(0)), 2, kVarL).is_zero());

  // (ad H_1)^3 H_2 = 1*2*3 H_5.
  CHECK(ab.ad_power(Element(gen_H(1)), Element(gen_H(2)), 3, kVarL) ==
        Element(gen_H(5), P("6")));

  // (ad H_-1)^2 L = 0: the first step lands in C[d, l] H_-1.
  CHECK(ab.ad_power(Element(gen_H(-1)), Element(gen_L()), 2, kVarL).is_zero());

  // Definitional consistency on random inputs.
  testing::PolyGen gen(5);
  for (int it = 0; it < 10; ++it) {
    Element x(gen_H(gen.small_int(-1, 2)), gen.d_poly(2));
    Element y(gen_H(gen.small_int(-1, 3)), gen.d_poly(2));
    unsigned k = static_cast<unsigned>(gen.small_int(1, 3));
    CHECK(ab.ad_power(x, y, k + 1, kVarL) ==
          ab.bracket(x, ab.ad_power(x, y, k, kVarL), kVarL));
  }
}

TEST_CASE("locally nilpotent window verdicts") {
  Algebra ab = make_hv_ab();
  Element x(gen_H(-1), P("3*d^2 + 1"));
  NilpotencyReport r1 = locally_nilpotent_window(ab, x, 6, 10);
  CHECK(r1.verdict == NilpotencyVerdict::Nilpotent);

  NilpotencyReport r2 = locally_nilpotent_window(ab, Element(gen_H(1)), 6, 10);
  CHECK(r2.verdict == NilpotencyVerdict::NotNilpotent);
  REQUIRE(r2.witness.has_value());
  CHECK(*r2.witness == gen_H(2));

  NilpotencyReport r3 = locally_nilpotent_window(ab, Element(gen_L()), 6, 10);
  CHECK(r3.verdict == NilpotencyVerdict::NotNilpotent);

  // Mixture with top H_0 and no L part.
  Element mix = Element(gen_H(0), P("d")) + Element(gen_H(-1), P("1"));
  NilpotencyReport r4 = locally_nilpotent_window(ab, mix, 6, 10);
  CHECK(r4.verdict == NilpotencyVerdict::NotNilpotent);
  REQUIRE(r4.witness.has_value());
  CHECK(*r4.witness == gen_H(1));
}

TEST_CASE("growth witnesses are sound: iterates stay nonzero up to the bound") {
  Algebra ab = make_hv_ab(Rat(2), Rat(1));
  for (Element x : {Element(gen_H(1)), Element(gen_L()),
                    Element(gen_H(0), P("d")) + Element(gen_H(-1), P("1"))}) {
    NilpotencyReport rep = locally_nilpotent_window(ab, x, 6, 10);
    REQUIRE(rep.verdict == NilpotencyVerdict::NotNilpotent);
    REQUIRE(rep.witness.has_value());
    Element acc(*rep.witness);
    for (int k = 0; k < 8; ++k) {
      acc = ab.bracket(x, acc, kVarL);
      CHECK(!acc.is_zero());
    }
  }
}

TEST_CASE("ideal window checks") {
  Algebra ab = make_hv_ab();
  auto h_family = [](const GeneratorId& g) { return g.fam == Family::H; };
  CHECK(is_ideal_window(ab, h_family, 8).is_ideal);

  Algebra hv = make_hv();
  CHECK(is_ideal_window(hv, h_family, 1).is_ideal);

  Algebra vir = make_vir();
  auto l_family = [](const GeneratorId& g) { return g.fam == Family::L; };
  CHECK(is_ideal_window(vir, l_family, 1).is_ideal);

  // L alone is not an ideal of HV: [L_l H] lands on H.
  IdealCheck bad = is_ideal_window(hv, l_family, 1);
  CHECK(!bad.is_ideal);
  CHECK(!bad.counterexample.empty());
}

TEST_CASE("derived products span check") {
  Algebra hv = make_hv();
  SpanCheck ok = derived_products_span_check(hv, {gen_H(0)});
  CHECK(ok.ok());

  Algebra vir = make_vir();
  SpanCheck notab = derived_products_span_check(vir, {gen_L()});
  CHECK(notab.is_ideal);
  CHECK(!notab.is_abelian);

  Algebra cur = make_cur(sl2_constants());
  SpanCheck note = derived_products_span_check(cur, {gen_cur(0)});  // span{e}
  CHECK(!note.ok());

  Algebra ab = make_hv_ab();
  CHECK_THROWS_AS(derived_products_span_check(ab, {gen_H(0)}), std::invalid_argument);
}

TEST_CASE("spec file round trip") {
  for (int pass = 0; pass < 2; ++pass) {
    Algebra A = pass == 0 ? make_hv() : make_hv_ab(Rat(2), Rat(1));
    nlohmann::json doc = emit_spec_json(A, 4);
    Algebra B = load_spec_json(doc);
    for (const auto& x : A.finite() ? A.finite_basis : A.window_gens(4))
      for (const auto& y : A.finite() ? A.finite_basis : A.window_gens(4)) {
        if (!A.finite()) {
          int s = (x.fam == Family::H ? x.a : 0) + (y.fam == Family::H ? y.a : 0);
          if (s > 4) continue;  // image leaves the emitted window
        }
        GeneratorId xb = x.fam == Family::H ? gen_H(x.a) : x;
        CHECK(A.table(x, y, kVarM) == B.table(xb, y, kVarM));
      }
  }
}

TEST_CASE("symbolic spec round trip keeps parameters") {
  Algebra A = make_hv_ab();
  nlohmann::json doc = emit_spec_json(A, 3);
  Algebra B = load_spec_json(doc);
  CHECK(B.table(gen_L(), gen_H(2), kVarL) ==
        Element(gen_H(2), P("d + (2*alpha - 1)*l + 2*beta")));
  // Skew-derived direction must also match.
  CHECK(B.table(gen_H(2), gen_L(), kVarL) == A.table(gen_H(2), gen_L(), kVarL));
}
