#include "fgct/clifford.hpp"

#include <algorithm>

#include "fgct/error.hpp"

namespace fgct {

bool is_invariant(const ClassFunction& phi, const Subgroup& m) {
  for (int x : m.generators())
    if (conjugate_character(phi, x) != phi) return false;
  return true;
}

Subgroup inertia_group(const Subgroup& g, const ClassFunction& phi) {
  require(is_normal(g, phi.group()), Errc::NotNormal, "inertia group of a character of a non-normal subgroup");
  std::vector<int> out;
  for (int x : g.elements())
    if (conjugate_character(phi, x) == phi) out.push_back(x);
  return g.group().intern(std::move(out));
}

bool GaloisOrbit::contains(const ClassFunction& chi) const {
  return std::binary_search(members.begin(), members.end(), chi);
}

GaloisOrbit galois_orbit(const ClassFunction& phi, const NumberFieldDescriptor& over) {
  GaloisOrbit orb{phi.group(), over, {}};
  const int m = static_cast<int>(nt::lcm(field_of_values(phi).conductor, over.conductor));
  for (int k : nt::units(m))
    if (galois_fixes(over, k)) orb.members.push_back(phi.galois(k));
  std::sort(orb.members.begin(), orb.members.end());
  orb.members.erase(std::unique(orb.members.begin(), orb.members.end()), orb.members.end());
  return orb;
}

Subgroup orbit_stabilizer(const Subgroup& g, const GaloisOrbit& orbit) {
  require(is_normal(g, orbit.base), Errc::NotNormal, "orbit base is not normal");
  std::vector<int> out;
  for (int x : g.elements())
    if (orbit.contains(conjugate_character(orbit.members[0], x))) out.push_back(x);
  return g.group().intern(std::move(out));
}

std::vector<ClassFunction> irr_over_orbit(const Subgroup& g, const GaloisOrbit& orbit) {
  std::vector<ClassFunction> out;
  for (const auto& phi : orbit.members)
    for (auto& chi : irr_over(g, orbit.base, phi))
      if (std::find(out.begin(), out.end(), chi) == out.end()) out.push_back(std::move(chi));
  std::sort(out.begin(), out.end());
  return out;
}

// --- semi-invariance ------------------------------------------------------

namespace {

int canonical_residue(int k, const NumberFieldDescriptor& f) {
  const int c = f.conductor;
  int best = c;
  for (int s : f.stabilizer) best = std::min(best, static_cast<int>(nt::mod(static_cast<long>(k) * s, c)));
  return best;
}

}  // namespace

SemiInvariance semi_invariance(const Subgroup& g, const ClassFunction& phi, const NumberFieldDescriptor& over) {
  require(is_normal(g, phi.group()), Errc::NotNormal, "semi-invariance needs a normal subgroup");
  const NumberFieldDescriptor fphi = compositum(over, field_of_values(phi));
  const int c = fphi.conductor;
  std::vector<int> gamma;
  for (int k : nt::units(c))
    if (galois_fixes(over, k)) gamma.push_back(k);
  SemiInvarianceCertificate cert;
  cert.group = g;
  cert.phi = phi;
  cert.field = over;
  cert.modulus = c;
  cert.alpha.assign(g.group().order(), -1);
  std::vector<int> kernel;
  for (int x : g.elements()) {
    ClassFunction conj = conjugate_character(phi, x);
    int found = -1;
    for (int k : gamma)
      if (conj.galois(k) == phi) {
        found = k;
        break;
      }
    if (found < 0) return SemiInvariance{std::nullopt, x};
    cert.alpha[x] = canonical_residue(found, fphi);
    if (cert.alpha[x] == 1 % c) kernel.push_back(x);
  }
  cert.kernel = g.group().intern(std::move(kernel));
  return SemiInvariance{std::move(cert), -1};
}

bool audit_certificate(const SemiInvarianceCertificate& cert) {
  const FiniteGroup& G = cert.group.group();
  const NumberFieldDescriptor fphi = compositum(cert.field, field_of_values(cert.phi));
  const int c = cert.modulus;
  for (int x : cert.group.elements()) {
    if (conjugate_character(cert.phi, x).galois(cert.alpha[x]) != cert.phi) return false;
    for (int y : cert.group.elements()) {
      int prod = static_cast<int>(nt::mod(static_cast<long>(cert.alpha[x]) * cert.alpha[y], c));
      if (canonical_residue(prod, fphi) != cert.alpha[G.mul(x, y)]) return false;
    }
  }
  return cert.kernel == inertia_group(cert.group, cert.phi);
}

// --- Clifford correspondence ----------------------------------------------

CharacterPairs clifford_induction_bijection(const Subgroup& g, const Subgroup& t, const GaloisOrbit& orbit) {
  require(orbit_stabilizer(g, orbit) == t, Errc::StabilizerMismatch, "T is not the stabilizer of the orbit");
  auto domain = irr_over_orbit(t, orbit);
  auto codomain = irr_over_orbit(g, orbit);
  const auto& table = character_table(g);
  CharacterPairs out;
  std::vector<int> hit(table.size(), 0);
  for (const auto& tau : domain) {
    ClassFunction chi = induce(tau, g);
    int idx = table.index_of(chi);
    if (idx < 0) fail(Errc::TheoremViolation, "induced character from the orbit stabilizer is reducible");
    if (hit[idx]++) fail(Errc::NotBijective, "two characters induce to the same irreducible");
    if (field_of_values(tau) != field_of_values(chi))
      fail(Errc::TheoremViolation, "Clifford induction changed the field of values");
    out.emplace_back(tau, std::move(chi));
  }
  if (out.size() != codomain.size()) fail(Errc::NotBijective, "Clifford induction is not onto Irr(G | orbit)");
  return out;
}

const char* going_down_name(GoingDown c) {
  switch (c) {
    case GoingDown::InducedSameField: return "InducedSameField";
    case GoingDown::InducedGaloisShift: return "InducedGaloisShift";
    case GoingDown::Restriction: return "Restriction";
    case GoingDown::FullyRamified: return "FullyRamified";
  }
  return "?";
}

std::vector<ClassFunction> constituents_of_restriction(const ClassFunction& chi, const Subgroup& l) {
  ClassFunction rest = restrict_to(chi, l);
  std::vector<ClassFunction> out;
  for (const auto& phi : character_table(l).irr())
    if (!inner_product(rest, phi).is_zero()) out.push_back(phi);
  std::sort(out.begin(), out.end());
  return out;
}

GoingDownResult going_down_classify(const Subgroup& g, const Subgroup& k, const Subgroup& l, const ClassFunction& theta,
                                    const NumberFieldDescriptor& over) {
  require(is_chief(g, k, l), Errc::NotChief, "K/L is not a chief factor of G");
  require(theta.group() == k && is_irreducible(theta), Errc::NotIrreducible, "theta is not in Irr(K)");
  auto semi = semi_invariance(g, theta, over);
  require(semi.certificate.has_value(), Errc::NotSemiInvariant,
          "theta is not semi-invariant; witness element " + std::to_string(semi.witness));
  auto cons = constituents_of_restriction(theta, l);
  GoingDownResult res{GoingDown::Restriction, cons.front(), 1, {}};
  res.e = static_cast<int>(inner_product_int(restrict_to(theta, l), res.phi));
  const long t = static_cast<long>(cons.size());
  const long idx = k.order() / l.order();
  const auto ftheta = compositum(over, field_of_values(theta));
  const auto fphi = compositum(over, field_of_values(res.phi));
  if (t == 1 && res.e == 1) {
    res.kind = GoingDown::Restriction;
  } else if (t == 1 && static_cast<long>(res.e) * res.e == idx) {
    res.kind = GoingDown::FullyRamified;
    if (ftheta != fphi) fail(Errc::TheoremViolation, "fully ramified pair with different fields");
  } else if (res.e == 1 && t == idx) {
    if (ftheta == fphi) {
      res.kind = GoingDown::InducedSameField;
    } else {
      res.kind = GoingDown::InducedGaloisShift;
      auto cert = semi_invariance(k, res.phi, ftheta);
      if (!cert.certificate) fail(Errc::TheoremViolation, "phi is not semi-invariant in K over F(theta)");
      std::vector<int> seen;
      for (int x : k.elements()) {
        if (l.coset_min(x) != x) continue;
        int a = cert.certificate->alpha[x];
        if (std::find(seen.begin(), seen.end(), a) != seen.end())
          fail(Errc::TheoremViolation, "K/L does not embed in the Galois group");
        seen.push_back(a);
        res.galois_shift.emplace_back(x, a);
      }
      if (static_cast<long>(fphi.degree()) != idx * ftheta.degree())
        fail(Errc::TheoremViolation, "K/L is not isomorphic to Gal(F(phi)/F(theta))");
    }
  } else {
    fail(Errc::TheoremViolation, "theta over a chief factor fits none of the going-down cases");
  }
  return res;
}

ClassFunction unique_invariant_constituent(Direction dir, const Subgroup& m, const Subgroup& k, const Subgroup& l,
                                           const ClassFunction& chi) {
  require(k.contains(l) && is_normal(k, l), Errc::NotNormal, "L must be normal in K");
  Subgroup ml = join(m, l);
  require(is_normal(ml, l) && is_normal(join(ml, k), k), Errc::NotNormal, "M must normalize K and L");
  const long acting = ml.order() / l.order();
  const long section = k.order() / l.order();
  require(nt::gcd(acting, section) == 1, Errc::HypothesisViolated, "action on K/L is not coprime");
  require(centralizer_mod(k, m, l) == l, Errc::HypothesisViolated, "M has nontrivial fixed points on K/L");
  require(is_invariant(chi, m), Errc::NotInvariant, "character is not M-invariant");
  std::vector<ClassFunction> cands =
      dir == Direction::Down ? constituents_of_restriction(chi, l) : irr_over(k, l, chi);
  std::vector<ClassFunction> inv;
  for (auto& c : cands)
    if (is_invariant(c, m)) inv.push_back(std::move(c));
  if (inv.size() != 1)
    fail(Errc::NonUnique, std::to_string(inv.size()) + " M-invariant constituents instead of exactly one");
  return inv[0];
}

}  // namespace fgct
