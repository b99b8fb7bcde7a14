#include "doctest.h"

#include <algorithm>

#include "fgct/clifford.hpp"
#include "fgct/error.hpp"

using namespace fgct;

namespace {

// Conjugation stability read straight off the element values.
bool fixed_by(const ClassFunction& phi, int g) {
  const FiniteGroup& G = phi.group().group();
  for (int x : phi.group().elements())
    if (phi(G.mul(G.mul(G.inv(g), x), g)) != phi(x)) return false;
  return true;
}

// (a, b)_L by summing over elements rather than classes.
Cyclotomic element_inner(const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic s = 0;
  for (int x : b.group().elements()) s += a(x) * b(x).conj();
  return s * Cyclotomic(Rational(1, b.group().order()));
}

const ClassFunction& nonrational_linear(const Subgroup& h) {
  for (const auto& chi : character_table(h).irr())
    if (chi.degree() == 1 && field_of_values(chi) != rationals_field()) return chi;
  throw std::logic_error("no such character");
}

const ClassFunction& of_degree(const Subgroup& h, long d) {
  for (const auto& chi : character_table(h).irr())
    if (chi.degree_int() == d) return chi;
  throw std::logic_error("no such character");
}

}  // namespace

TEST_CASE("inertia groups") {
  auto s3 = catalog::sym(3)->whole();
  auto c3 = sylow(s3, 3);
  const auto& lam = nonrational_linear(c3);
  CHECK(inertia_group(s3, lam) == c3);
  CHECK(inertia_group(s3, ClassFunction::trivial(c3)) == s3);

  auto s4 = catalog::sym(4)->whole();
  auto v4 = derived_subgroup(derived_subgroup(s4));
  REQUIRE(v4.order() == 4);
  for (const auto& phi : character_table(v4).irr()) {
    auto t = inertia_group(s4, phi);
    long brute = std::count_if(s4.elements().begin(), s4.elements().end(), [&](int g) { return fixed_by(phi, g); });
    CHECK(t.order() == brute);
  }
}

TEST_CASE("Galois orbits and stabilizers") {
  auto s3 = catalog::sym(3)->whole();
  auto c3 = sylow(s3, 3);
  const auto& lam = nonrational_linear(c3);
  auto orb = galois_orbit(lam);
  CHECK(orb.members.size() == 2);
  CHECK(orb.contains(lam.conj()));
  // over Q(zeta_3) the orbit is a single character
  CHECK(galois_orbit(lam, cyclotomic_field(3)).members.size() == 1);
  CHECK(orbit_stabilizer(s3, orb) == s3);
  CHECK(orbit_stabilizer(s3, galois_orbit(lam, cyclotomic_field(3))) == c3);
  auto over = irr_over_orbit(s3, orb);
  REQUIRE(over.size() == 1);
  CHECK(over[0].degree_int() == 2);
}

TEST_CASE("semi-invariance certificates") {
  auto s3g = catalog::sym(3);
  auto s3 = s3g->whole();
  auto c3 = sylow(s3, 3);
  const auto& lam = nonrational_linear(c3);
  auto semi = semi_invariance(s3, lam);
  REQUIRE(semi.certificate);
  const auto& cert = *semi.certificate;
  CHECK(cert.modulus == 3);
  for (int x : s3.elements()) CHECK(cert.alpha[x] == (c3.contains(x) ? 1 : 2));
  CHECK(cert.kernel == c3);
  CHECK(audit_certificate(cert));

  // over Q(zeta_3) the transpositions have nowhere to go
  auto over3 = semi_invariance(s3, lam, cyclotomic_field(3));
  CHECK_FALSE(over3.certificate);
  CHECK_FALSE(c3.contains(over3.witness));

  auto a4 = catalog::alt(4)->whole();
  auto v4 = derived_subgroup(a4);
  for (const auto& phi : character_table(v4).irr()) {
    auto s = semi_invariance(a4, phi);
    if (phi.values() == ClassFunction::trivial(v4).values()) {
      CHECK(s.certificate);
    } else {
      REQUIRE_FALSE(s.certificate);
      CHECK(a4.group().element_order(s.witness) == 3);
    }
  }

  // an abelian group acting on a cyclic normal subgroup: every linear character is semi-invariant
  auto d14 = catalog::dihedral(14)->whole();
  auto c7 = sylow(d14, 7);
  for (const auto& phi : character_table(c7).irr()) {
    auto s = semi_invariance(d14, phi);
    REQUIRE(s.certificate);
    CHECK(audit_certificate(*s.certificate));
    CHECK(s.certificate->kernel == inertia_group(d14, phi));
  }
}

TEST_CASE("Clifford induction bijection") {
  auto s4 = catalog::sym(4)->whole();
  auto v4 = derived_subgroup(derived_subgroup(s4));
  ClassFunction lam;
  for (const auto& phi : character_table(v4).irr())
    if (phi.degree_int() == 1 && phi != ClassFunction::trivial(v4)) lam = phi;
  auto orb = galois_orbit(lam);
  REQUIRE(orb.members.size() == 1);
  auto t = orbit_stabilizer(s4, orb);
  CHECK(t.order() == 8);
  auto pairs = clifford_induction_bijection(s4, t, orb);
  // oracle: the irreducibles of S4 lying over lam, found by element sums
  long over = 0;
  for (const auto& chi : character_table(s4).irr())
    if (!element_inner(restrict_to(chi, v4), lam).is_zero()) ++over;
  CHECK(static_cast<long>(pairs.size()) == over);
  for (const auto& [tau, chi] : pairs) {
    CHECK(chi.degree_int() == tau.degree_int() * 3);
    CHECK(element_inner(chi, chi) == Cyclotomic(1));
  }
  CHECK_THROWS_AS(clifford_induction_bijection(s4, s4, orb), Error);
  try {
    clifford_induction_bijection(s4, s4, orb);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::StabilizerMismatch);
  }
}

TEST_CASE("going-down classification") {
  auto s3 = catalog::sym(3)->whole();
  auto c3 = sylow(s3, 3);
  auto one = s3.group().trivial();
  {
    auto r = going_down_classify(s3, s3, c3, of_degree(s3, 2));
    CHECK(r.kind == GoingDown::InducedGaloisShift);
    CHECK(r.e == 1);
    REQUIRE(r.galois_shift.size() == 2);
    CHECK(r.galois_shift[0].second == 1);
    CHECK(r.galois_shift[1].second == 2);
  }
  {
    auto r = going_down_classify(s3, s3, c3, of_degree(s3, 2), cyclotomic_field(3));
    CHECK(r.kind == GoingDown::InducedSameField);
  }
  {
    auto r = going_down_classify(s3, c3, one, nonrational_linear(c3));
    CHECK(r.kind == GoingDown::Restriction);
  }
  auto sl = catalog::sl2_3()->whole();
  auto q8 = sylow(sl, 2);
  auto z = center(sl);
  {
    const auto& theta = of_degree(q8, 2);
    auto r = going_down_classify(sl, q8, z, theta);
    CHECK(r.kind == GoingDown::FullyRamified);
    CHECK(r.e == 2);
    CHECK(element_inner(restrict_to(theta, z), r.phi) == Cyclotomic(2));
  }
  CHECK_THROWS_AS(going_down_classify(sl, q8, one, of_degree(q8, 2)), Error);

  // every irreducible over every chief factor of these groups falls into some case
  for (auto g : {catalog::sl2_3(), catalog::sym(4), catalog::extraspecial(3, 3), catalog::dihedral(10)}) {
    auto G = g->whole();
    for (const auto& k : normal_subgroups_between(G, G, G.group().trivial())) {
      for (const auto& l : normal_subgroups_between(G, k, G.group().trivial())) {
        if (!is_chief(G, k, l)) continue;
        for (const auto& theta : character_table(k).irr()) {
          auto s = semi_invariance(G, theta);
          if (!s.certificate) continue;
          INFO(g->name());
          CHECK_NOTHROW(going_down_classify(G, k, l, theta));
        }
      }
    }
  }
}

TEST_CASE("unique invariant constituents") {
  auto sl = catalog::sl2_3()->whole();
  auto q8 = sylow(sl, 2);
  auto z = center(sl);
  auto c3 = sylow(sl, 3);
  REQUIRE(c3.order() == 3);
  const auto& theta = of_degree(q8, 2);
  auto down = unique_invariant_constituent(Direction::Down, c3, q8, z, theta);
  CHECK(down.degree_int() == 1);
  CHECK(down != ClassFunction::trivial(z));
  auto up = unique_invariant_constituent(Direction::Up, c3, q8, z, down);
  CHECK(up == theta);
  auto up1 = unique_invariant_constituent(Direction::Up, c3, q8, z, ClassFunction::trivial(z));
  CHECK(up1 == ClassFunction::trivial(q8));
  try {
    unique_invariant_constituent(Direction::Down, sl.group().trivial(), q8, z, theta);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisViolated);
  }
}
