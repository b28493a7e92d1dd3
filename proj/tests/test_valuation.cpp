#include "doctest.h"
#include "oracles.hpp"
#include "primas/valuation.hpp"

using namespace primas;

namespace {

GroupElem v2(int a, int b) { return GroupElem{mpq_class(a), mpq_class(b)}; }
GroupElem v1(const mpq_class& a) { return GroupElem{a}; }

}  // namespace

TEST_CASE("cut membership") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  CutIdeal I = CutIdeal::closed_at(z2, v2(1, 0));

  CHECK(!I.member(v2(1, -1)));  // nu(pi1/pi2) = (1,-1) misses R·pi1
  CHECK(I.member(v2(1, 0)));
  CHECK(I.member(v2(2, -5)));

  ValueGroup Q = ValueGroup::Q();
  CutIdeal J = CutIdeal::closed_at(Q, v1(1));
  CHECK(!J.member(v1(mpq_class(1, 3))));
  CHECK(J.member(v1(1)));
  CHECK(CutIdeal::open_at(Q, v1(1)).member(v1(mpq_class(3, 2))));
  CHECK(!CutIdeal::open_at(Q, v1(1)).member(v1(1)));
}

TEST_CASE("normalization of degenerate cuts") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  CHECK(CutIdeal::closed_at(z2, v2(0, 0)).is_unit());
  CHECK(CutIdeal::closed_at(z2, v2(-1, 5)).is_unit());
  // open cuts in a discrete group close at the successor
  CHECK(CutIdeal::open_at(z2, v2(1, 0)) == CutIdeal::closed_at(z2, v2(1, 1)));
  CHECK(CutIdeal::maximal(z2) == CutIdeal::closed_at(z2, v2(0, 1)));

  ValueGroup Q = ValueGroup::Q();
  CHECK(CutIdeal::maximal(Q).kind() == CutIdeal::Kind::open);
  CHECK(CutIdeal::closed_at(Q, v1(0)).is_unit());
}

TEST_CASE("total order of the cut lattice") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  std::vector<CutIdeal> cuts{
      CutIdeal::zero(z2),
      CutIdeal::closed_at(z2, v2(2, 3)),
      CutIdeal::closed_at(z2, v2(1, 0)),
      CutIdeal::closed_at(z2, v2(1, -4)),
      CutIdeal::prefix_at(z2, {mpq_class(1)}),
      CutIdeal::closed_at(z2, v2(0, 1)),
      CutIdeal::unit(z2),
  };
  // listed in strictly increasing (inclusion) order
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      CHECK(cuts[i].subset_of(cuts[j]) == (i <= j));
      CutIdeal meet = cut_intersect(cuts[i], cuts[j]);
      CutIdeal join = cut_sum(cuts[i], cuts[j]);
      CHECK((meet == cuts[i] || meet == cuts[j]));
      CHECK((join == cuts[i] || join == cuts[j]));
      CHECK(meet.subset_of(join));
    }
}

TEST_CASE("cut quotient against the value-lattice oracle") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  CutIdeal I = CutIdeal::closed_at(z2, v2(1, 0));
  CutIdeal pi2 = principal_cut(z2, v2(0, 1));

  // frozen by the oracle: (R·pi1 : pi2) = { nu >= (1,-1) }
  CutIdeal Q = cut_quotient(I, pi2);
  CHECK(Q == CutIdeal::closed_at(z2, v2(1, -1)));
  CHECK(oracles::cut_matches_pointwise(Q, [&](const GroupElem& r) {
    // r·pi2 ∈ I, i.e. r + (0,1) >= (1,0)
    return lex_cmp(elem_add(r, v2(0, 1)), v2(1, 0)) >= 0;
  }));

  // I : I = (1)
  CHECK(cut_quotient(I, I).is_unit());

  // exhaustive small-grid check of the quotient rule for full cuts
  for (int a = 0; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (lex_cmp(v2(a, b), v2(0, 0)) <= 0) continue;
      for (int c = 0; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          if (lex_cmp(v2(c, d), v2(0, 0)) < 0) continue;
          CutIdeal A = CutIdeal::closed_at(z2, v2(a, b));
          CutIdeal B = CutIdeal::closed_at(z2, v2(c, d));
          if (B.is_unit()) continue;
          CutIdeal R = cut_quotient(A, B);
          CHECK(oracles::cut_matches_pointwise(
              R,
              [&](const GroupElem& r) {
                // pointwise: r + s ∈ A for every grid s ∈ B; with A, B
                // closed this reduces to r + threshold(B) ∈ A
                return A.member(elem_add(r, v2(c, d)));
              },
              -3, 3));
        }
    }

  // prefix-cut quotients
  CutIdeal P1 = CutIdeal::prefix_at(z2, {mpq_class(1)});
  CHECK(cut_quotient(P1, pi2) == P1);
  CHECK(cut_quotient(P1, P1).is_unit());
  CutIdeal QP = cut_quotient(I, P1);
  CHECK(QP == P1);  // { r : r_1 >= 1 } is exactly what clears the tail
  CHECK(oracles::cut_matches_pointwise(QP, [&](const GroupElem& r) {
    // r + every value with first coordinate >= 1 must reach (1,0): the
    // worst tails are unbounded below, so r_1 >= 1 is forced
    return r[0] >= 1;
  }));

  // quotient by zero and unit
  CHECK(cut_quotient(I, CutIdeal::zero(z2)).is_unit());
  CHECK(cut_quotient(I, CutIdeal::unit(z2)) == I);
  CHECK(cut_quotient(CutIdeal::zero(z2), I).is_zero());
}

TEST_CASE("cut product") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  CutIdeal a = CutIdeal::closed_at(z2, v2(1, 2));
  CutIdeal b = CutIdeal::closed_at(z2, v2(0, 3));
  CHECK(cut_product(a, b) == CutIdeal::closed_at(z2, v2(1, 5)));

  CutIdeal P1 = CutIdeal::prefix_at(z2, {mpq_class(1)});
  CHECK(cut_product(P1, P1) == CutIdeal::prefix_at(z2, {mpq_class(2)}));
  CHECK(cut_product(a, P1) == CutIdeal::prefix_at(z2, {mpq_class(2)}));

  ValueGroup Q = ValueGroup::Q();
  CutIdeal c = CutIdeal::closed_at(Q, v1(mpq_class(1, 2)));
  CutIdeal m = CutIdeal::maximal(Q);
  CHECK(cut_product(c, m) == CutIdeal::open_at(Q, v1(mpq_class(1, 2))));

  CHECK(cut_product(a, CutIdeal::zero(z2)).is_zero());
  CHECK(cut_product(a, CutIdeal::unit(z2)) == a);

  // intersect over Q: total order picks the larger threshold
  CHECK(cut_intersect(CutIdeal::closed_at(Q, v1(1)), CutIdeal::closed_at(Q, v1(2))) ==
        CutIdeal::closed_at(Q, v1(2)));
}

TEST_CASE("totality of random rational cuts") {
  ValueGroup Q = ValueGroup::Q();
  std::mt19937_64 rng(31415);
  std::vector<CutIdeal> cuts{CutIdeal::zero(Q), CutIdeal::unit(Q)};
  for (int i = 0; i < 20; ++i) {
    mpq_class t(static_cast<long>(rng() % 50), static_cast<long>(1 + rng() % 12));
    cuts.push_back(rng() % 2 ? CutIdeal::closed_at(Q, {t}) : CutIdeal::open_at(Q, {t}));
  }
  for (const CutIdeal& a : cuts)
    for (const CutIdeal& b : cuts) {
      // total order: one contains the other, and meet/join pick sides
      CHECK((a.subset_of(b) || b.subset_of(a)));
      CutIdeal meet = cut_intersect(a, b);
      CutIdeal join = cut_sum(a, b);
      CHECK((meet == a || meet == b));
      CHECK((join == a || join == b));
      CHECK(meet.subset_of(a));
      CHECK(meet.subset_of(b));
      CHECK(a.subset_of(join));
      CHECK(b.subset_of(join));
    }
}

TEST_CASE("colon-product adjunction on sampled cuts") {
  // (I : J) is the largest K with K·J ⊆ I: check both directions on a
  // family of representable cuts
  ValueGroup z2 = ValueGroup::Zlex(2);
  std::vector<CutIdeal> cuts{
      CutIdeal::zero(z2),
      CutIdeal::unit(z2),
      CutIdeal::closed_at(z2, {mpq_class(0), mpq_class(1)}),
      CutIdeal::closed_at(z2, {mpq_class(0), mpq_class(3)}),
      CutIdeal::closed_at(z2, {mpq_class(1), mpq_class(-2)}),
      CutIdeal::closed_at(z2, {mpq_class(1), mpq_class(0)}),
      CutIdeal::closed_at(z2, {mpq_class(2), mpq_class(1)}),
      CutIdeal::prefix_at(z2, {mpq_class(1)}),
      CutIdeal::prefix_at(z2, {mpq_class(2)}),
  };
  for (const CutIdeal& I : cuts)
    for (const CutIdeal& J : cuts) {
      CutIdeal Q = cut_quotient(I, J);
      CHECK(cut_product(Q, J).subset_of(I));
      for (const CutIdeal& K : cuts) {
        bool fits = cut_product(K, J).subset_of(I);
        CHECK(fits == K.subset_of(Q));
      }
    }

  ValueGroup Qg = ValueGroup::Q();
  std::vector<CutIdeal> qcuts{
      CutIdeal::zero(Qg),
      CutIdeal::unit(Qg),
      CutIdeal::maximal(Qg),
      CutIdeal::closed_at(Qg, {mpq_class(1, 2)}),
      CutIdeal::open_at(Qg, {mpq_class(1, 2)}),
      CutIdeal::closed_at(Qg, {mpq_class(2)}),
      CutIdeal::open_at(Qg, {mpq_class(3)}),
  };
  for (const CutIdeal& I : qcuts)
    for (const CutIdeal& J : qcuts) {
      CutIdeal Q = cut_quotient(I, J);
      CHECK(cut_product(Q, J).subset_of(I));
      for (const CutIdeal& K : qcuts) {
        bool fits = cut_product(K, J).subset_of(I);
        CHECK(fits == K.subset_of(Q));
      }
    }
}

TEST_CASE("membership is monotone along the inclusion order") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  std::vector<CutIdeal> cuts{
      CutIdeal::zero(z2),
      CutIdeal::closed_at(z2, {mpq_class(2), mpq_class(1)}),
      CutIdeal::closed_at(z2, {mpq_class(1), mpq_class(0)}),
      CutIdeal::prefix_at(z2, {mpq_class(1)}),
      CutIdeal::closed_at(z2, {mpq_class(0), mpq_class(2)}),
      CutIdeal::unit(z2),
  };
  for (const CutIdeal& A : cuts)
    for (const CutIdeal& B : cuts) {
      if (!A.subset_of(B)) continue;
      for (int a = 0; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
          GroupElem v{mpq_class(a), mpq_class(b)};
          if (lex_cmp(v, zero_elem(z2)) < 0) continue;
          if (A.member(v)) CHECK(B.member(v));
        }
    }
}

TEST_CASE("classification") {
  ValueGroup Q = ValueGroup::Q();
  CHECK(cut_classify(CutIdeal::maximal(Q)).kind == CutClass::Kind::prime);

  auto c1 = cut_classify(CutIdeal::closed_at(Q, v1(1)));
  CHECK(c1.kind == CutClass::Kind::primary);
  CHECK(*c1.prime == CutIdeal::maximal(Q));

  ValueGroup z2 = ValueGroup::Zlex(2);
  auto c2 = cut_classify(CutIdeal::closed_at(z2, v2(1, 0)));
  CHECK(c2.kind == CutClass::Kind::neither);

  CHECK(cut_classify(CutIdeal::prefix_at(z2, {mpq_class(1)})).kind ==
        CutClass::Kind::prime);
  CHECK(cut_classify(CutIdeal::maximal(z2)).kind == CutClass::Kind::prime);
  auto c3 = cut_classify(CutIdeal::closed_at(z2, v2(0, 4)));
  CHECK(c3.kind == CutClass::Kind::primary);
  CHECK(*c3.prime == CutIdeal::maximal(z2));
  auto c4 = cut_classify(CutIdeal::prefix_at(z2, {mpq_class(3)}));
  CHECK(c4.kind == CutClass::Kind::primary);
  CHECK(*c4.prime == CutIdeal::prefix_at(z2, {mpq_class(1)}));

  CHECK(cut_classify(CutIdeal::zero(z2)).kind == CutClass::Kind::zero);
  CHECK(cut_classify(CutIdeal::unit(z2)).kind == CutClass::Kind::unit);
  CHECK(cut_is_prime(CutIdeal::zero(z2)));

  // the three-prime chain (0) ⊂ P_1 ⊂ P_2
  CutIdeal P1 = CutIdeal::prefix_at(z2, {mpq_class(1)});
  CutIdeal P2 = CutIdeal::maximal(z2);
  CHECK(CutIdeal::zero(z2).subset_of(P1));
  CHECK(P1.subset_of(P2));
  CHECK(!P2.subset_of(P1));
}

TEST_CASE("indecomposability certificates") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  auto c1 = cut_indecomposable(CutIdeal::closed_at(z2, v2(1, 0)), 16, 7);
  CHECK(c1.indecomposable);
  CHECK(c1.samples.size() == 16);

  ValueGroup Q = ValueGroup::Q();
  CHECK(cut_indecomposable(CutIdeal::closed_at(Q, v1(1)), 8, 7).indecomposable);
  CHECK(cut_indecomposable(CutIdeal::maximal(Q), 8, 7).indecomposable);
}

TEST_CASE("valuation modules over Q: the Ass0 gap") {
  ValueGroup Q = ValueGroup::Q();
  CutIdeal a = CutIdeal::closed_at(Q, v1(1));
  ValModule M = ValModule::quotient(a);
  CutIdeal P = CutIdeal::maximal(Q);

  auto coprim = M.is_coprimary();
  REQUIRE(coprim.has_value());
  CHECK(*coprim == P);

  CHECK(!M.ass0_witness_exists(P).exists);

  // annihilators are closed cuts: Ann(class of v) = { r : r + v >= 1 }
  CHECK(M.annihilator_of(v1(mpq_class(1, 3))) ==
        CutIdeal::closed_at(Q, v1(mpq_class(2, 3))));
  CHECK(M.annihilator_of(v1(1)).is_unit());

  CHECK(M.is_zero_divisor(v1(mpq_class(1, 5))));
  CHECK(!M.is_zero_divisor(v1(0)));
  CHECK(M.is_nilpotent_for(v1(mpq_class(1, 7))));

  // over an *open* cut the shapes do match: Ann(class of value 1) = open(0)
  ValModule M2 = ValModule::quotient(CutIdeal::open_at(Q, v1(1)));
  CHECK(M2.ass0_witness_exists(P).exists);
}

TEST_CASE("rank-2 module: zero divisor but not nilpotent") {
  ValueGroup z2 = ValueGroup::Zlex(2);
  CutIdeal I = principal_cut(z2, v2(1, 0));
  ValModule M = ValModule::quotient(I);
  GroupElem pi2 = v2(0, 1);

  CHECK(M.is_zero_divisor(pi2));
  CHECK(!M.is_nilpotent_for(pi2));
  CHECK(!M.is_coprimary().has_value());
  for (int i = 1; i <= 64; ++i) CHECK(!I.member(elem_scale(pi2, i)));

  // the Ass0 shape route: Ann(pi1/pi2 class) is the maximal ideal
  CHECK(M.annihilator_of(v2(1, -1)) == CutIdeal::maximal(z2));
  CHECK(M.ass0_witness_exists(CutIdeal::maximal(z2)).exists);
}

TEST_CASE("Quot(R)/R over the rank-1 discrete ring") {
  ValueGroup g = ValueGroup::Zlex(1);
  ValModule M = ValModule::quot_field_mod_ring(g);
  CutIdeal p = CutIdeal::maximal(g);

  CHECK(M.annihilator_of_module().is_zero());
  auto coprim = M.is_coprimary();
  REQUIRE(coprim.has_value());
  CHECK(*coprim == p);
  CHECK(M.annihilator_of({mpq_class(-3)}) == CutIdeal::closed_at(g, {mpq_class(3)}));

  // annihilator duality, exhaustively for values -1..-6
  for (int n = 1; n <= 6; ++n) {
    GroupElem x{mpq_class(-n)};
    CutIdeal ann = M.annihilator_of(x);
    CHECK(ann == CutIdeal::closed_at(g, {mpq_class(n)}));
    // Ann(x)·x = 0: the smallest annihilator value kills x
    CHECK(M.elem_is_zero(elem_add({mpq_class(n)}, x)));
    // (Ann(x) : pi) is strictly larger and kills pi·x
    CutIdeal shifted = cut_quotient(ann, principal_cut(g, {mpq_class(1)}));
    CHECK(ann.subset_of(shifted));
    CHECK(!(shifted == ann));
    GroupElem pix = elem_add(x, {mpq_class(1)});
    if (!M.elem_is_zero(pix))
      CHECK(M.elem_is_zero(elem_add(pix, {mpq_class(n - 1)})));
  }

  auto w = M.ass0_witness_exists(p);
  CHECK(w.exists);
  CHECK(!M.ass0_witness_exists(CutIdeal::zero(g)).exists);
}

TEST_CASE("ass and essential primes on the valuation backends") {
  ValueGroup Q = ValueGroup::Q();
  CutIdeal a = CutIdeal::closed_at(Q, {mpq_class(1)});
  CHECK(ValModule::quotient(a).ass() == CutIdeal::maximal(Q));
  CHECK(essential_prime_of_cut(a) == CutIdeal::maximal(Q));

  ValueGroup z1 = ValueGroup::Zlex(1);
  CHECK(ValModule::quot_field_mod_ring(z1).ass() == CutIdeal::maximal(z1));

  // no primary decomposition of (0) in R/R·pi1: Ass is not computable there
  ValueGroup z2 = ValueGroup::Zlex(2);
  CutIdeal I = CutIdeal::closed_at(z2, {mpq_class(1), mpq_class(0)});
  CHECK_THROWS_AS(ValModule::quotient(I).ass(), UnsupportedInput);
}
