#include "doctest.h"

#include <algorithm>

#include "fgct/error.hpp"
#include "fgct/ramified.hpp"

using namespace fgct;

namespace {

Cyclotomic element_inner(const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic s = 0;
  for (int x : b.group().elements()) s += a(x) * b(x).conj();
  return s * Cyclotomic(Rational(1, b.group().order()));
}

bool restricts_to(const ClassFunction& chi, const ClassFunction& phi) {
  for (int x : phi.group().elements())
    if (chi(x) != phi(x)) return false;
  return true;
}

// Every extension of phi to <L,x> from the full table, every nonvanishing point of
// the coset; all the resulting quotients must coincide.
std::optional<Cyclotomic> brute_pairing(int x, int y, const ClassFunction& phi) {
  const Subgroup& l = phi.group();
  const FiniteGroup& G = l.group();
  Subgroup h0 = closure(l, std::span<const int>(&x, 1));
  std::optional<Cyclotomic> value;
  for (const auto& chi : character_table(h0).irr()) {
    if (!restricts_to(chi, phi)) continue;
    for (int e : l.elements()) {
      int p = G.mul(e, x);
      if (chi(p).is_zero()) continue;
      Cyclotomic v = chi(G.conj(p, y)) / chi(p);
      if (value && *value != v) return std::nullopt;
      value = v;
    }
  }
  return value;
}

const ClassFunction& nonrational_linear(const Subgroup& h) {
  for (const auto& chi : character_table(h).irr())
    if (chi.degree() == Cyclotomic(1) && field_of_values(chi) != rationals_field()) return chi;
  throw std::logic_error("no such character");
}

const ClassFunction& nontrivial_linear(const Subgroup& h) {
  for (const auto& chi : character_table(h).irr())
    if (chi.degree() == Cyclotomic(1) && chi != ClassFunction::trivial(h)) return chi;
  throw std::logic_error("no such character");
}

struct Case {
  Subgroup g, k, l, h;
  ClassFunction phi;
};

// 3^{1+2} extended by an involution inverting K/L and centralizing L.
Case case54() {
  auto sd = semidirect_product(named_action(catalog::cyclic(2), catalog::extraspecial(3, 3), "inversion-mod-center"));
  Case c;
  c.g = sd.group->whole();
  c.k = sd.n;
  c.l = center(c.k);
  c.phi = nonrational_linear(c.l);
  c.h = join(c.l, sd.a);
  return c;
}

// 5^{1+2} extended by a fixed-point-free automorphism of order 3.
Case case375() {
  auto sd = semidirect_product(named_action(catalog::cyclic(3), catalog::extraspecial(5, 5), "symplectic3"));
  Case c;
  c.g = sd.group->whole();
  c.k = sd.n;
  c.l = center(c.k);
  c.phi = nonrational_linear(c.l);
  c.h = join(c.l, sd.a);
  return c;
}

int order_of_coset(const Subgroup& l, int x) {
  const FiniteGroup& G = l.group();
  int m = 1;
  for (int y = x; !l.contains(y); y = G.mul(y, x)) ++m;
  return m;
}

std::vector<GroupPtr> small_groups() {
  return {catalog::cyclic(6), catalog::dihedral(8), catalog::quaternion8(), catalog::sym(3), catalog::sym(4),
          catalog::alt(4),    catalog::sl2_3(),     catalog::extraspecial(3, 3), catalog::extraspecial(3, 9),
          catalog::dihedral(12)};
}

}  // namespace

TEST_CASE("pairing agrees with brute force") {
  auto e27 = catalog::extraspecial(3, 3);
  auto k = e27->whole();
  auto z = center(k);
  const FiniteGroup& G = *e27;
  ClassFunction phi;
  const int zc = G.comm(1, 3);
  REQUIRE(z.contains(zc));
  for (const auto& chi : character_table(z).irr())
    if (chi(zc) == Cyclotomic::root_of_unity(3, 1)) phi = chi;
  REQUIRE(phi.group().valid());
  CHECK(pairing(1, 3, phi) == Cyclotomic::root_of_unity(3, 1));
  for (int x : k.elements())
    for (int y : k.elements()) {
      auto b = brute_pairing(x, y, phi);
      REQUIRE(b);
      CHECK(pairing(x, y, phi) == *b);
      CHECK(*b == phi(G.comm(x, y)));
    }

  // a nonabelian extension point: Q8 over its center inside SL(2,3)
  auto sl = catalog::sl2_3()->whole();
  auto zz = center(sl);
  const auto& sign = nontrivial_linear(zz);
  FormTable form(sl, sign);
  for (int x : sl.elements())
    for (int y : sl.elements()) {
      if (!form.defined(x, y)) {
        CHECK_THROWS_AS(pairing(x, y, sign), Error);
        continue;
      }
      auto b = brute_pairing(x, y, sign);
      REQUIRE(b);
      CHECK(form(x, y) == *b);
      CHECK(pairing_unanimous(x, y, sign) == *b);
    }
}

TEST_CASE("form laws on small invariant sections") {
  for (auto g : small_groups()) {
    auto G = g->whole();
    for (const auto& l : normal_subgroups_between(G, G, g->trivial())) {
      for (const auto& phi : character_table(l).irr()) {
        if (!is_invariant(phi, G)) continue;
        auto r = form_law_audit(G, phi);
        INFO(g->name(), " |L|=", l.order());
        CHECK(r.pairs > 0);
        CHECK(r.bilinear);
        CHECK(r.alternating);
        CHECK(r.inverse);
        CHECK(r.coset);
        CHECK(r.conjugation);
        CHECK(r.galois);
      }
    }
  }
  auto c = case54();
  CHECK(form_law_audit(c.g, c.phi).all());
}

TEST_CASE("good classes and the Gallagher count") {
  auto q8 = catalog::quaternion8()->whole();
  auto z = center(q8);
  const auto& sign = nontrivial_linear(z);
  auto good = good_classes(q8, sign);
  REQUIRE(good.size() == 1);
  CHECK(good[0].rep == q8.group().identity());
  auto gc = gallagher_check(q8, sign);
  CHECK(gc.irr == 1);
  CHECK(gc.good == 1);

  auto c6 = catalog::cyclic(6)->whole();
  auto c3 = sylow(c6, 3);
  auto gc6 = gallagher_check(c6, nonrational_linear(c3));
  CHECK(gc6.irr == 2);
  CHECK(gc6.good == 2);

  for (auto g : small_groups()) {
    auto G = g->whole();
    for (const auto& l : normal_subgroups_between(G, G, g->trivial()))
      for (const auto& phi : character_table(l).irr()) {
        if (!is_invariant(phi, G)) continue;
        long brute = 0;
        for (const auto& chi : character_table(G).irr())
          if (!element_inner(restrict_to(chi, l), phi).is_zero()) ++brute;
        auto cnt = gallagher_check(G, phi);
        INFO(g->name(), " |L|=", l.order());
        CHECK(cnt.irr == brute);
        CHECK(cnt.equal());
      }
  }
}

TEST_CASE("fully ramified sections") {
  auto q8 = catalog::quaternion8()->whole();
  auto z = center(q8);
  auto fr = is_fully_ramified(q8, nontrivial_linear(z));
  REQUIRE(fr);
  CHECK(fr->n == 2);
  CHECK(fr->theta.degree_int() == 2);

  auto c3 = catalog::cyclic(3)->whole();
  CHECK_FALSE(is_fully_ramified(c3, ClassFunction::trivial(c3.group().trivial())));
  // K = L is always fully ramified with n = 1
  auto fk = is_fully_ramified(c3, nonrational_linear(c3));
  REQUIRE(fk);
  CHECK(fk->n == 1);

  for (auto g : small_groups()) {
    auto K = g->whole();
    for (const auto& l : normal_subgroups_between(K, K, g->trivial()))
      for (const auto& phi : character_table(l).irr()) {
        INFO(g->name(), " |L|=", l.order());
        std::optional<FullyRamified> r;
        REQUIRE_NOTHROW(r = is_fully_ramified(K, phi));
        long oracle = 0;
        for (const auto& theta : character_table(K).irr()) {
          const long d = theta.degree_int() / phi.degree_int();
          if (d * d * l.order() != K.order()) continue;
          if (element_inner(restrict_to(theta, l), phi) == Cyclotomic(d) && theta.degree_int() == d * phi.degree_int())
            ++oracle;
        }
        CHECK(oracle <= 1);
        CHECK(r.has_value() == (oracle == 1));
        if (r && l.contains(derived_subgroup(K))) {
          auto five = make_five(K, K, phi);
          CHECK(root_of_unity_check(five));
        }
      }
  }
}

TEST_CASE("character five over 3^{1+2} with an inverting involution") {
  auto c = case54();
  auto five = make_five(c.g, c.k, c.phi, c.g);
  CHECK(five.n == 3);
  CHECK(five.abelian_kl);
  CHECK(five.odd_kl);
  CHECK(five.coprime);
  CHECK(root_of_unity_check(five));
  const FiniteGroup& G = c.g.group();
  int tau = -1;
  for (int x : c.h.elements())
    if (G.element_order(x) == 2) tau = x;
  REQUIRE(tau >= 0);

  auto sols = magic_search(five, c.h);
  REQUIRE(sols.size() == 2);
  std::vector<Cyclotomic> at_tau;
  for (const auto& s : sols) {
    CHECK(s.psi.degree_int() == 3);
    CHECK(modulus_law(five, s.psi));
    at_tau.push_back(s.psi(tau));
  }
  std::sort(at_tau.begin(), at_tau.end());
  CHECK(at_tau == std::vector<Cyclotomic>{Cyclotomic(-1), Cyclotomic(1)});

  // oracle: psi = a + b*sign on H/L = C2 with a+b = 3, kept when chi_H = psi xi matches up
  const auto& quot = irr_of_quotient(c.h, c.l);
  REQUIRE(quot.size() == 2);
  const auto chis = irr_over(c.g, c.k, five.theta);
  const auto xis = irr_over(c.h, c.l, c.phi);
  std::vector<long> accepted;
  const ClassFunction one = ClassFunction::trivial(c.h);
  const ClassFunction& sign = quot[0] == one ? quot[1] : quot[0];
  for (long b = 0; b <= 3; ++b) {
    ClassFunction psi = one * Cyclotomic(3 - b);
    psi += sign * Cyclotomic(b);
    bool all = true;
    for (const auto& chi : chis) {
      bool hit = false;
      for (const auto& xi : xis) {
        bool eq = true;
        for (int x : c.h.elements()) eq = eq && chi(x) == psi(x) * xi(x);
        hit = hit || eq;
      }
      all = all && hit;
    }
    if (all) accepted.push_back(b);
  }
  CHECK(accepted == std::vector<long>{1, 2});

  auto canon = canonical_select(sols, five);
  CHECK(canon.psi(tau) == Cyclotomic(-1));
  CHECK(canon.rational);
  auto cop = coprime_select(sols, five);
  CHECK(cop.psi == canon.psi);

  // the conjugate five gives the conjugate canonical character
  auto five_bar = make_five(c.g, c.k, c.phi.conj(), c.g);
  auto canon_bar = canonical_select(magic_search(five_bar, c.h), five_bar);
  CHECK(canon_bar.psi == canon.psi.conj());

  auto h = find_complement(five, c.g);
  CHECK(canonical_conjugate(c.g, h) == canonical_conjugate(c.g, c.h));
  auto goods = good_complements(five, c.g);
  REQUIRE(goods.size() == 1);
  CHECK(goods[0] == canonical_conjugate(c.g, h));

  auto fc = five_correspondence(five, c.h, canon.psi, c.g);
  CHECK(fc.all_checks());
  CHECK(fc.pairs.size() == 2);
  for (const auto& [chi, xi] : fc.pairs) {
    CHECK(chi.degree_int() == 3 * xi.degree_int());
    CHECK(chi(tau) == -xi(tau));
  }
  auto fk = five_correspondence(five, c.h, canon.psi, c.k);
  REQUIRE(fk.pairs.size() == 1);
  CHECK(fk.pairs[0].first == five.theta);
  CHECK(fk.pairs[0].second == c.phi);
}

TEST_CASE("character five in SL(2,3) over Q8/Z") {
  auto sl = catalog::sl2_3()->whole();
  auto q8 = sylow(sl, 2);
  auto z = center(sl);
  auto five = make_five(sl, q8, nontrivial_linear(z), sl);
  CHECK(five.n == 2);
  CHECK_FALSE(five.odd_kl);
  auto h = find_complement(five, sl);
  CHECK(h.order() == 6);
  CHECK(is_cyclic(h));
  auto goods = good_complements(five, sl);
  REQUIRE(goods.size() == 1);
  CHECK(goods[0] == canonical_conjugate(sl, h));

  // 1 + lambda, 1 + lambda-bar and lambda + lambda-bar on H/L = C3 all work;
  // they differ by linear characters of G/K
  auto sols = magic_search(five, h);
  REQUIRE(sols.size() == 3);
  CHECK_THROWS_AS(canonical_select(sols, five), Error);
  auto cop = coprime_select(sols, five);
  CHECK(cop.rational);
  CHECK(cop.det_order == 1);
  const FiniteGroup& G = sl.group();
  for (int x : h.elements())
    if (G.element_order(x) == 3) CHECK(cop.psi(x) == Cyclotomic(-1));
  CHECK(five_correspondence(five, h, cop.psi, sl).all_checks());
}

TEST_CASE("coprime five over 5^{1+2}") {
  auto c = case375();
  auto five = make_five(c.g, c.k, c.phi, c.g);
  CHECK(five.n == 5);
  CHECK(five.coprime);
  auto sols = magic_search(five, c.h);
  REQUIRE_FALSE(sols.empty());
  auto cop = coprime_select(sols, five);
  const FiniteGroup& G = c.g.group();
  for (int x : c.h.elements())
    if (order_of_coset(c.l, x) == 3) CHECK(cop.psi(x) == Cyclotomic(-1));
  auto canon = canonical_select(sols, five);
  CHECK(canon.psi == cop.psi);
  CHECK(canonical_conjugate(c.g, find_complement(five, c.g)) == canonical_conjugate(c.g, c.h));

  auto fc = five_correspondence(five, c.h, canon.psi, c.g);
  CHECK(fc.all_checks());
  auto par = parity_correspondence(five, c.h, c.g);
  CHECK(par.all_checks());
  CHECK(par.pairs == fc.pairs);
  (void)G;
}

TEST_CASE("parity rule on a bare extraspecial group") {
  auto k = catalog::extraspecial(3, 3)->whole();
  auto z = center(k);
  const auto& phi = nonrational_linear(z);
  auto five = make_five(k, k, phi);
  auto par = parity_correspondence(five, z, k);
  REQUIRE(par.pairs.size() == 1);
  CHECK(par.pairs[0].first == five.theta);
  CHECK(par.pairs[0].second == phi);
  auto sols = magic_search(five, z);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].psi == ClassFunction::constant(z, 3));
}

TEST_CASE("five construction errors") {
  auto c3 = catalog::cyclic(3)->whole();
  try {
    make_five(c3, c3, ClassFunction::trivial(c3.group().trivial()));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisViolated);
  }
  auto c = case54();
  auto five = make_five(c.g, c.k, c.phi);
  CHECK_THROWS_AS(magic_search(five, c.k), Error);
  // without an odd index the parity rule is not available
  CHECK_THROWS_AS(parity_correspondence(five, c.h, c.g), Error);
}
