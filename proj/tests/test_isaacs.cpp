#include "doctest.h"

#include <algorithm>

#include "fgct/error.hpp"
#include "fgct/isaacs.hpp"

using namespace fgct;

namespace {

bool lies_over(const ClassFunction& chi, const ClassFunction& phi) {
  return inner_product_int(restrict_to(chi, phi.group()), phi) > 0;
}

CoprimeSetup setup(int a_order, GroupPtr n, const char* action, const char* name) {
  return make_setup(semidirect_product(named_action(catalog::cyclic(a_order), n, action)), name);
}

// Characters of N of degree > 1 paired with their central character, as the
// extraspecial oracle expects: theta_phi is the unique irreducible over phi.
void check_extraspecial(const CoprimeSetup& s, long p) {
  auto bij = isaacs_bijection(s);
  CHECK(bij.bijective);
  CHECK(bij.fields);
  CHECK(bij.galois);
  CHECK(bij.u_equivariant);
  CHECK(bij.degree_divides);
  CHECK(bij.trace_independent);
  REQUIRE(s.c == center(s.n));
  long wide = 0;
  for (const auto& [chi, star] : bij.pairs) {
    if (chi.degree_int() == 1) {
      CHECK(chi == ClassFunction::trivial(s.n));
      CHECK(star == ClassFunction::trivial(s.c));
      continue;
    }
    ++wide;
    CHECK(chi.degree_int() == p);
    // odd multiplicity cross-check: (theta_Z, phi) = p
    CHECK(inner_product_int(restrict_to(chi, s.c), star) == p);
  }
  CHECK(wide == p - 1);
}

}  // namespace

TEST_CASE("Isaacs correspondence on 3^{1+2} with an involution") {
  auto s = setup(2, catalog::extraspecial(3, 3), "inversion-mod-center", "e27-c2");
  CHECK(invariant_irr(s).size() == 3);
  check_extraspecial(s, 3);
  // the step structure: refinement through a line of N/Z, then induction and restriction
  for (const auto& chi : invariant_irr(s)) {
    if (chi.degree_int() == 1) continue;
    auto r = isaacs_correspondent(s, chi);
    REQUIRE(r.levels.size() == 1);
    CHECK(r.levels[0].k == s.n);
    CHECK(r.levels[0].l == s.c);
    CHECK(r.trace.ratio() == 3);
    std::vector<StepTag> tags;
    for (const auto& st : r.trace.steps) tags.push_back(st.tag);
    CHECK(tags == std::vector<StepTag>{StepTag::ChiefInduced, StepTag::ChiefRestriction});
  }
}

TEST_CASE("Isaacs correspondence on 3^{1+2} with C4") {
  auto s = setup(4, catalog::extraspecial(3, 3), "symplectic4", "e27-c4");
  check_extraspecial(s, 3);
  for (const auto& chi : invariant_irr(s)) {
    if (chi.degree_int() == 1) continue;
    auto r = isaacs_correspondent(s, chi);
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.steps[0].tag == StepTag::FullyRamifiedStep);
    CHECK(r.trace.steps[0].psi.has_value());
  }
}

TEST_CASE("Isaacs correspondence on 5^{1+2} with C3") {
  auto s = setup(3, catalog::extraspecial(5, 5), "symplectic3", "e125-c3");
  check_extraspecial(s, 5);
  for (const auto& chi : invariant_irr(s)) {
    if (chi.degree_int() == 1) continue;
    auto r = isaacs_correspondent(s, chi);
    REQUIRE(r.trace.steps.size() == 1);
    // |T:L| = 75 is odd, so the parity rule ran alongside and agreed
    REQUIRE(r.trace.steps[0].parity_agrees.has_value());
    CHECK(*r.trace.steps[0].parity_agrees);
  }
}

TEST_CASE("Isaacs correspondence: abelian and trivial cases") {
  auto d14 = setup(2, catalog::cyclic(7), "inversion", "c7-c2");
  auto irr = invariant_irr(d14);
  REQUIRE(irr.size() == 1);
  CHECK(irr[0] == ClassFunction::trivial(d14.n));
  auto bij = isaacs_bijection(d14);
  CHECK(bij.all());
  REQUIRE(bij.pairs.size() == 1);
  CHECK(bij.pairs[0].second == ClassFunction::trivial(d14.c));

  auto triv = make_setup(semidirect_product(GroupAction::trivial(catalog::cyclic(2), catalog::cyclic(9))), "c9-trivial");
  CHECK(triv.c == triv.n);
  auto tb = isaacs_bijection(triv);
  CHECK(tb.all());
  for (const auto& [chi, star] : tb.pairs) {
    CHECK(chi == star);
    CHECK(verify_trace_independence(triv, chi));
  }
  // S3 = C3 x| C2: only the trivial character is invariant
  auto s3 = setup(2, catalog::cyclic(3), "inversion", "c3-c2");
  CHECK(isaacs_bijection(s3).all());
}

TEST_CASE("strong correspondence") {
  auto s = setup(2, catalog::extraspecial(3, 3), "inversion-mod-center", "e27-c2");
  const Subgroup& g = s.g;
  const Subgroup& z = s.c;
  ClassFunction phi;
  for (const auto& x : character_table(z).irr())
    if (x != ClassFunction::trivial(z)) phi = x;
  ClassFunction theta = irr_over(s.n, z, phi).at(0);
  StrongSection sec{g, s.n, z, join(s.a, z), theta, phi};
  auto b = strong_correspondence(sec);
  CHECK(b.all());
  CHECK(b.n == 3);
  CHECK(b.h.order() == 6);
  CHECK(b.pairs.size() == 4);  // two characters over each of theta, theta-bar
  // K/Z is not a chief factor here; the composite through a chief series is
  // chi_H = psi' xi for one magic character psi' (the non-canonical one, 2 + sign)
  auto five = make_five(g, s.n, phi);
  auto magic = magic_search(five, b.h);
  auto canon = canonical_select(magic, five);
  for (const auto& [chi, xi] : b.pairs) {
    if (!lies_over(chi, phi)) continue;
    auto ratio = ClassFunction::from_elements(b.h, [&](int x) { return chi(x) / xi(x); });
    bool is_magic = std::any_of(magic.begin(), magic.end(), [&](const auto& m) { return m.psi == ratio; });
    CHECK(is_magic);
    CHECK(ratio != canon.psi);
  }
  auto rev = strong_correspondence(sec, EngineOptions{true, false, false});
  CHECK(rev.pairs == b.pairs);

  // K = L: identity with an empty trace
  StrongSection flat{g, s.n, s.n, g, theta, theta};
  for (const auto& chi : irr_over(g, s.n, theta)) {
    CorrespondenceTrace tr;
    CHECK(strong_correspondent(flat, chi, &tr) == chi);
    CHECK(tr.steps.empty());
  }

  // |K/L| = 4 is rejected
  auto sl = catalog::sl2_3()->whole();
  auto q8 = sylow(sl, 2);
  auto zz = center(sl);
  ClassFunction sign;
  for (const auto& x : character_table(zz).irr())
    if (x != ClassFunction::trivial(zz)) sign = x;
  ClassFunction th2 = irr_over(q8, zz, sign).at(0);
  try {
    strong_correspondence(StrongSection{sl, q8, zz, join(sylow(sl, 3), zz), th2, sign});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisViolated);
  }
}

TEST_CASE("correspondence above the Isaacs correspondence") {
  auto s = setup(2, catalog::extraspecial(3, 3), "inversion-mod-center", "e27-c2");
  CHECK(s.u.order() == 6);
  for (const auto& chi : invariant_irr(s)) {
    auto r = above_correspondence(s, chi);
    CHECK(r.all());
    CHECK(r.domain == r.codomain);
    CHECK(r.domain == 2);
  }

  // a proper overgroup: the C2 inside 3^{1+2} x| C4
  auto sd = semidirect_product(named_action(catalog::cyclic(4), catalog::extraspecial(3, 3), "symplectic4"));
  auto G = sd.group->whole();
  int a4 = sd.a.generators()[0];
  int a2 = G.group().mul(a4, a4);
  auto c2 = closure(G.group(), std::span<const int>(&a2, 1));
  auto over = make_setup(G, sd.n, c2, "e27-c2-in-c4");
  CHECK(over.an.order() == 54);
  CHECK(over.u.order() == 12);
  long total = 0;
  for (const auto& chi : invariant_irr(over)) {
    auto r = above_correspondence(over, chi);
    CHECK(r.all());
    CHECK(r.domain == r.codomain);
    total += r.domain;
    for (const auto& [beta, img] : r.pairs) CHECK(beta.degree_int() % img.degree_int() == 0);
  }
  CHECK(total == 4 + 4 + 4);
}

TEST_CASE("quaternion group with an automorphism of order 3") {
  auto s = setup(3, catalog::quaternion8(), "q8-order3", "q8-c3");
  ClassFunction theta;
  for (const auto& chi : character_table(s.n).irr())
    if (chi.degree_int() == 2) theta = chi;
  REQUIRE(is_invariant(theta, s.a));
  try {
    isaacs_correspondent(s, theta);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvenOrder);
    CHECK(error_class(e.code()) == ErrorClass::Hypothesis);
  }
  // Why the even case is excluded: the invariant character of degree 2 has
  // Frobenius-Schur indicator -1 (Schur index 2 over Q), while C = Z(Q8) has
  // only characters of indicator +1. No Schur-index-preserving bijection exists.
  CHECK(s.c.order() == 2);
  CHECK(frobenius_schur(theta) == Cyclotomic(-1));
  for (const auto& lam : character_table(s.c).irr()) CHECK(frobenius_schur(lam) == Cyclotomic(1));
}

TEST_CASE("setup errors") {
  auto s = setup(2, catalog::extraspecial(3, 3), "inversion-mod-center", "e27-c2");
  ClassFunction lin;
  for (const auto& chi : character_table(s.n).irr())
    if (chi.degree_int() == 1 && chi != ClassFunction::trivial(s.n)) lin = chi;
  try {
    isaacs_correspondent(s, lin);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvariant);
  }
  auto bad = make_setup(semidirect_product(GroupAction::trivial(catalog::cyclic(3), catalog::cyclic(3))), "c3-c3");
  try {
    isaacs_correspondent(bad, ClassFunction::trivial(bad.n));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCoprime);
  }
}
