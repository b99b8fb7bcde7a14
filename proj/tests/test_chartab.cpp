#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fgct/chartab.hpp"
#include "fgct/error.hpp"

using namespace fgct;

namespace {

std::vector<int> class_sizes(const Subgroup& h) {
  const auto& cd = class_data(h);
  std::vector<int> s;
  for (int c = 0; c < cd.count(); ++c) s.push_back(cd.size(c));
  return s;
}

std::vector<long> sorted_degrees(const Subgroup& h) {
  auto d = character_table(h).degrees();
  std::sort(d.begin(), d.end());
  return d;
}

int first_of_order(const FiniteGroup& g, int o) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == o) return x;
  return -1;
}

// Faithful linear character of a cyclic group of order n, from the element orders alone.
ClassFunction faithful_linear(const Subgroup& c) {
  const FiniteGroup& g = c.group();
  int gen = -1;
  for (int x : c.elements())
    if (g.element_order(x) == c.order()) gen = x;
  return ClassFunction::from_elements(c, [&](int x) {
    int k = 0;
    for (int y = g.identity(); y != x; y = g.mul(y, gen)) ++k;
    return Cyclotomic::root_of_unity(c.order(), k);
  });
}

}  // namespace

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(catalog::sym(3)->whole()) == std::vector<int>{1, 2, 3});
  CHECK(class_sizes(catalog::cyclic(7)->whole()).size() == 7);
  CHECK(class_sizes(catalog::quaternion8()->whole()) == std::vector<int>{1, 1, 2, 2, 2});
  const auto& cd = class_data(catalog::sl2_3()->whole());
  for (int c = 0; c < cd.count(); ++c) CHECK(cd.size(c) * cd.centralizer_orders[c] == 24);
}

TEST_CASE("character tables") {
  CHECK(sorted_degrees(catalog::sym(3)->whole()) == std::vector<long>{1, 1, 2});
  auto c3 = catalog::cyclic(3)->whole();
  const auto& t3 = character_table(c3);
  REQUIRE(t3.size() == 3);
  for (const auto& chi : t3.irr()) CHECK(field_contains(cyclotomic_field(3), field_of_values(chi)));
  std::vector<long> e27(9, 1);
  e27.push_back(3);
  e27.push_back(3);
  CHECK(sorted_degrees(catalog::extraspecial(3, 3)->whole()) == e27);
  CHECK(sorted_degrees(catalog::extraspecial(3, 9)->whole()) == e27);
  CHECK(sorted_degrees(catalog::quaternion8()->whole()) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(sorted_degrees(catalog::sl2_3()->whole()) == std::vector<long>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sorted_degrees(catalog::sym(4)->whole()) == std::vector<long>{1, 1, 2, 3, 3});
  for (auto g : {catalog::sym(3), catalog::quaternion8(), catalog::alt(4), catalog::dihedral(14), catalog::cyclic(12),
                 catalog::extraspecial(5, 5)}) {
    INFO(g->name());
    CHECK(audit_table(character_table(g->whole())).empty());
    // number of linear characters equals |G : G'|, computed independently
    auto degs = character_table(g->whole()).degrees();
    long linear = std::count(degs.begin(), degs.end(), 1L);
    CHECK(linear == g->order() / derived_subgroup(g->whole()).order());
  }
  // the trivial character is first
  auto s4 = catalog::sym(4)->whole();
  CHECK(character_table(s4)[0] == ClassFunction::trivial(s4));
}

TEST_CASE("induction and restriction") {
  auto s3 = catalog::sym(3);
  auto g = s3->whole();
  auto c3 = closure(*s3, std::vector<int>{first_of_order(*s3, 3)});
  const auto& t = character_table(g);
  auto ind = induce(ClassFunction::trivial(c3), g);
  CHECK(ind == t[0] + t[1]);
  CHECK(t[1].degree() == Cyclotomic(1L));
  auto phi = faithful_linear(c3);
  CHECK(restrict_to(t[2], c3) == phi + phi.conj());
  CHECK(inner_product(t[2], t[2]) == Cyclotomic(1L));
  CHECK(irr_over(g, c3, phi) == std::vector<ClassFunction>{t[2]});
  CHECK(irr_over(g, s3->trivial(), ClassFunction::trivial(s3->trivial())).size() == 3);
  CHECK_THROWS_AS(irr_over(g, c3, phi * Cyclotomic(2L)), Error);

  auto q8 = catalog::quaternion8();
  auto z = center(q8->whole());
  auto sign = faithful_linear(z);
  auto over = irr_over(q8->whole(), z, sign);
  REQUIRE(over.size() == 1);
  CHECK(over[0].degree() == Cyclotomic(2L));
  CHECK(field_of_values(over[0]) == rationals_field());
}

TEST_CASE("Frobenius reciprocity on random class functions") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto g = catalog::sl2_3();
  auto G = g->whole();
  for (const auto& h : subgroups_between(G, g->trivial())) {
    if (h.order() > 12) continue;
    for (int trial = 0; trial < 3; ++trial) {
      auto alpha = ClassFunction::from_elements(h, [&](int) { return Cyclotomic(static_cast<long>(coef(rng))); });
      // make alpha a class function: values came from reps so it is one by construction
      for (const auto& chi : character_table(G).irr())
        CHECK(inner_product(induce(alpha, G), chi) == inner_product(alpha, restrict_to(chi, h)));
    }
  }
}

TEST_CASE("Galois conjugation permutes Irr") {
  for (auto g : {catalog::extraspecial(3, 3), catalog::cyclic(5), catalog::sl2_3()}) {
    const auto& t = character_table(g->whole());
    const int e = g->exponent();
    for (int k : nt::units(e)) {
      std::set<int> image;
      for (const auto& chi : t.irr()) image.insert(t.index_of(galois_conjugate_character(chi, k)));
      CHECK(image.size() == t.size());
      CHECK(!image.count(-1));
    }
  }
  auto c3 = catalog::cyclic(3)->whole();
  auto phi = faithful_linear(c3);
  CHECK(galois_conjugate_character(phi, 2) == phi * phi);
  CHECK_THROWS_AS(galois_conjugate_character(phi, 3), Error);
}

TEST_CASE("determinants") {
  auto s3 = catalog::sym(3);
  const auto& t = character_table(s3->whole());
  CHECK(determinant_character(t[2]) == t[1]);
  CHECK(determinantal_order(t[2]) == 2);
  CHECK(determinant_character(t[1]) == t[1]);
  auto c2 = catalog::cyclic(2)->whole();
  auto reg = induce(ClassFunction::trivial(c2.group().trivial()), c2);
  CHECK(determinant_character(reg) == character_table(c2)[1]);
  auto ev = eigenvalue_multiplicities(t[2], first_of_order(*s3, 2));
  CHECK(ev == std::vector<long>{1, 1});
  // det(chi * lambda) = det(chi) * lambda^deg
  auto sl = catalog::sl2_3()->whole();
  const auto& ts = character_table(sl);
  for (const auto& chi : ts.irr())
    for (const auto& lam : ts.irr()) {
      if (lam.degree() != Cyclotomic(1L)) continue;
      ClassFunction lp = ClassFunction::trivial(sl);
      for (long i = 0; i < chi.degree_int(); ++i) lp *= lam;
      CHECK(determinant_character(chi * lam) == determinant_character(chi) * lp);
    }
  CHECK_THROWS_AS(determinant_character(t[1] - t[0]), Error);
}

TEST_CASE("counting constituents two ways") {
  auto sl = catalog::sl2_3();
  auto G = sl->whole();
  for (const auto& l : normal_subgroups_between(G, G, sl->trivial())) {
    for (const auto& phi : character_table(l).irr()) {
      auto over = irr_over(G, l, phi);
      auto dec = decompose(induce(phi, G));
      long nonzero = std::count_if(dec.begin(), dec.end(), [](const Cyclotomic& c) { return !c.is_zero(); });
      CHECK(static_cast<long>(over.size()) == nonzero);
    }
  }
}

TEST_CASE("cyclic extensions") {
  auto c6 = catalog::cyclic(6)->whole();
  auto c3 = closure(c6.group(), std::vector<int>{2});
  auto phi = faithful_linear(c3);
  CHECK(extensions_cyclic(phi, c6).size() == 2);
  CHECK(extensions_cyclic(phi, c3) == std::vector<ClassFunction>{phi});
  auto q8 = catalog::quaternion8();
  auto z = center(q8->whole());
  auto c4 = closure(*q8, std::vector<int>{1});
  auto ext = extensions_cyclic(faithful_linear(z), c4);
  REQUIRE(ext.size() == 2);
  for (const auto& chi : ext) CHECK(field_of_values(chi) == cyclotomic_field(4));
  // non-invariant phi
  auto s3 = catalog::sym(3);
  auto c3s = closure(*s3, std::vector<int>{first_of_order(*s3, 3)});
  CHECK_THROWS_AS(extensions_cyclic(faithful_linear(c3s), s3->whole()), Error);
}

TEST_CASE("Frobenius-Schur indicators") {
  auto q8 = catalog::quaternion8()->whole();
  const auto& t = character_table(q8);
  CHECK(frobenius_schur(t[4]) == Cyclotomic(-1L));
  CHECK(frobenius_schur(t[0]) == Cyclotomic(1L));
  auto d8 = catalog::dihedral(8)->whole();
  CHECK(frobenius_schur(character_table(d8)[4]) == Cyclotomic(1L));
}
