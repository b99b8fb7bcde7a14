#include "fgct/ramified.hpp"

#include <algorithm>
#include <functional>

#include "fgct/error.hpp"

namespace fgct {

namespace {

void require_form_defined(const ClassFunction& phi, int x, int y) {
  const Subgroup& l = phi.group();
  const FiniteGroup& G = l.group();
  require(l.contains(G.comm(x, y)), Errc::FormUndefined, "[x,y] is not in L");
  for (int g : {x, y}) {
    require(conjugate(l, g) == l, Errc::NotNormal, "element does not normalize L");
    require(conjugate_character(phi, g) == phi, Errc::NotInvariant, "phi is not fixed by the element");
  }
}

int nonvanishing_point(const ClassFunction& chi, const Subgroup& l, int x) {
  const FiniteGroup& G = l.group();
  for (int e : l.elements()) {
    int p = G.mul(e, x);
    if (!chi(p).is_zero()) return p;
  }
  fail(Errc::TheoremViolation, "extension vanishes on a whole coset of L");
}

Cyclotomic form_value(const ClassFunction& chi, int point, int y) {
  const FiniteGroup& G = chi.group().group();
  return chi(G.conj(point, y)) / chi(point);
}

// Finds an injective assignment row -> column with column in cand[row], in
// lexicographic order of choices; empty optional if none exists.
std::optional<std::vector<int>> find_matching(const std::vector<std::vector<int>>& cand, int columns) {
  std::vector<int> pick(cand.size(), -1);
  std::vector<char> used(columns, 0);
  std::function<bool(size_t)> go = [&](size_t i) {
    if (i == cand.size()) return true;
    for (int c : cand[i]) {
      if (used[c]) continue;
      used[c] = 1;
      pick[i] = c;
      if (go(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return pick;
}

bool is_pi_number(long x, const std::vector<int>& pi) {
  for (int p : nt::prime_divisors(x))
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) return false;
  return true;
}

// The trivial character of H occurs with odd multiplicity in psi_H, everything else with even.
bool trivial_unique_odd(const ClassFunction& psi, const Subgroup& h) {
  auto m = multiplicities(restrict_to(psi, h));
  if (m[0] % 2 == 0) return false;
  for (size_t i = 1; i < m.size(); ++i)
    if (m[i] % 2 != 0) return false;
  return true;
}

bool contained(const Subgroup& a, const Subgroup& b) {
  for (int x : a.generators())
    if (!b.contains(x)) return false;
  return true;
}

// Per-class data of H needed by the modulus law: K-goodness and |C_{K/L}(h)|.
struct ClassGoodness {
  std::vector<char> good;
  std::vector<long> cent;
};

ClassGoodness class_goodness(const CharacterFive& five, const Subgroup& h) {
  FormTable form(inertia_group(five.g, five.phi), five.phi);
  const ClassData& cd = class_data(h);
  ClassGoodness out;
  for (int r : cd.reps) {
    require(form.ambient().contains(r), Errc::HypothesisViolated, "H does not fix phi");
    out.good.push_back(is_good(form, r, five.k));
    out.cent.push_back(static_cast<long>(centralizer_mod_element(five.k, five.l, r).size()) / five.l.order());
  }
  return out;
}

bool modulus_law_with(const ClassGoodness& cg, const ClassFunction& psi) {
  for (int c = 0; c < psi.classes().count(); ++c) {
    const Cyclotomic& v = psi.at_class(c);
    Cyclotomic sq = v * v.conj();
    if (sq != Cyclotomic(cg.good[c] ? cg.cent[c] : 0L)) return false;
  }
  return true;
}

void check_control(const CharacterFive& five, const Subgroup& n) {
  const auto& [g, k, l] = std::tie(five.g, five.k, five.l);
  require(is_normal(g, n), Errc::NotNormal, "N is not normal in G");
  require(contained(k, n), Errc::HypothesisViolated, "K is not contained in N");
  require(contained(n, inertia_group(g, five.phi)), Errc::HypothesisViolated, "N does not fix phi");
  require(five.abelian_kl, Errc::HypothesisViolated, "K/L is not abelian");
  require(centralizer_mod(k, n, l) == l, Errc::HypothesisViolated, "N has fixed points on K/L");
  const long c = centralizer_mod(n, k, l).order();
  require(nt::gcd(n.order() / c, k.order() / l.order()) == 1, Errc::HypothesisViolated,
          "N does not act coprimely on K/L");
}

}  // namespace

// --- form ---------------------------------------------------------------------

Cyclotomic pairing(int x, int y, const ClassFunction& phi) {
  require_form_defined(phi, x, y);
  const Subgroup& l = phi.group();
  Subgroup h0 = closure(l, std::span<const int>(&x, 1));
  ClassFunction chi = extensions_cyclic(phi, h0).front();
  return form_value(chi, nonvanishing_point(chi, l, x), y);
}

Cyclotomic pairing_unanimous(int x, int y, const ClassFunction& phi) {
  require_form_defined(phi, x, y);
  const Subgroup& l = phi.group();
  const FiniteGroup& G = l.group();
  Subgroup h0 = closure(l, std::span<const int>(&x, 1));
  std::optional<Cyclotomic> value;
  for (const auto& chi : extensions_cyclic(phi, h0))
    for (int e : l.elements()) {
      int p = G.mul(e, x);
      if (chi(p).is_zero()) continue;
      Cyclotomic v = form_value(chi, p, y);
      if (value && *value != v) fail(Errc::TheoremViolation, "form value depends on the choice of extension");
      value = v;
    }
  return *value;
}

FormTable::FormTable(Subgroup s, ClassFunction phi) : s_(std::move(s)), phi_(std::move(phi)) {
  require(is_normal(s_, phi_.group()), Errc::NotNormal, "L is not normal in the ambient subgroup");
  require(is_invariant(phi_, s_), Errc::NotInvariant, "phi is not invariant in the ambient subgroup");
}

bool FormTable::defined(int x, int y) const { return base().contains(s_.group().comm(x, y)); }

const FormTable::Extension& FormTable::extension(int rep) const {
  auto it = ext_.find(rep);
  if (it != ext_.end()) return it->second;
  Subgroup h0 = closure(base(), std::span<const int>(&rep, 1));
  Extension e;
  e.chi = extensions_cyclic(phi_, h0).front();
  e.point = nonvanishing_point(e.chi, base(), rep);
  return ext_.emplace(rep, std::move(e)).first->second;
}

const Cyclotomic& FormTable::operator()(int x, int y) const {
  require(s_.contains(x) && s_.contains(y), Errc::NotSubgroup, "form arguments outside the ambient subgroup");
  require(defined(x, y), Errc::FormUndefined, "[x,y] is not in L");
  const int rx = base().coset_min(x), ry = base().coset_min(y);
  auto key = std::make_pair(rx, ry);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Extension& e = extension(rx);
  return memo_.emplace(key, form_value(e.chi, e.point, ry)).first->second;
}

FormLaws form_law_audit(const Subgroup& s, const ClassFunction& phi) {
  FormTable form(s, phi);
  const Subgroup& l = phi.group();
  const FiniteGroup& G = s.group();
  std::vector<int> reps;
  for (int x : s.elements())
    if (l.coset_min(x) == x) reps.push_back(x);
  FormLaws r;
  const Cyclotomic one(1L);
  for (int x : reps) {
    if (form(x, x) != one) r.alternating = false;
    for (int y : reps) {
      if (!form.defined(x, y)) continue;
      ++r.pairs;
      const Cyclotomic& v = form(x, y);
      if (form(y, x) * v != one) r.inverse = false;
      for (int x2 : reps)
        if (form.defined(x2, y) && form(G.mul(x, x2), y) != v * form(x2, y)) r.bilinear = false;
      for (int g : reps)
        if (form(G.conj(x, g), G.conj(y, g)) != v) r.conjugation = false;
      for (int e : l.generators())
        if (pairing(G.mul(x, e), y, phi) != v || pairing(x, G.mul(y, e), phi) != v) r.coset = false;
    }
  }
  const int c = field_of_values(phi).conductor;
  for (int k : nt::units(c)) {
    if (k == 1 % c) continue;
    FormTable conj_form(s, phi.galois(k));
    for (int x : reps)
      for (int y : reps)
        if (form.defined(x, y) && conj_form(x, y) != form(x, y).galois(k)) r.galois = false;
  }
  return r;
}

// --- good elements ----------------------------------------------------------------

bool is_good(const FormTable& form, int h, const Subgroup& context) {
  const Cyclotomic one(1L);
  for (int c : centralizer_mod_element(context, form.base(), h))
    if (form(c, h) != one) return false;
  return true;
}

std::vector<QuotientClass> quotient_classes(const Subgroup& g, const Subgroup& l) {
  Quotient q = quotient(g, l);
  const ClassData& cd = class_data(q.group->whole());
  std::vector<QuotientClass> out(cd.count());
  for (int c = 0; c < cd.count(); ++c) {
    out[c].cosets = cd.size(c);
    out[c].rep = -1;
  }
  for (int x : g.elements()) {
    auto& qc = out[cd.class_of[q.projection[x]]];
    if (qc.rep < 0) qc.rep = x;
    qc.elements.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.rep < b.rep; });
  return out;
}

std::vector<QuotientClass> good_classes(const Subgroup& g, const ClassFunction& phi) {
  FormTable form(g, phi);
  std::vector<QuotientClass> out;
  for (auto& qc : quotient_classes(g, phi.group()))
    if (is_good(form, qc.rep, g)) out.push_back(std::move(qc));
  return out;
}

GallagherCount gallagher_check(const Subgroup& g, const ClassFunction& phi) {
  GallagherCount c;
  c.irr = static_cast<long>(irr_over(g, phi.group(), phi).size());
  c.good = static_cast<long>(good_classes(g, phi).size());
  return c;
}

// --- fully ramified ------------------------------------------------------------------

RamificationConditions ramification_conditions(const Subgroup& k, const ClassFunction& phi,
                                               const ClassFunction& theta) {
  const Subgroup& l = phi.group();
  RamificationConditions r;
  const long index = k.order() / l.order();
  const long n = theta.degree_int() / phi.degree_int();
  r.restriction = theta.degree_int() % phi.degree_int() == 0 && n * n == index && restrict_to(theta, l) == phi * Cyclotomic(n);
  const bool invariant = is_invariant(phi, k);
  if (invariant) {
    const ClassData& cd = theta.classes();
    r.vanishing = true;
    for (int c = 0; c < cd.count(); ++c)
      if (!l.contains(cd.reps[c]) && !theta.at_class(c).is_zero()) r.vanishing = false;
    r.only_trivial_good = good_classes(k, phi).size() == 1;
  }
  return r;
}

std::optional<FullyRamified> is_fully_ramified(const Subgroup& k, const ClassFunction& phi) {
  const Subgroup& l = phi.group();
  require(contained(l, k) && is_normal(k, l), Errc::NotNormal, "L is not normal in K");
  std::optional<FullyRamified> out;
  for (const auto& theta : irr_over(k, l, phi)) {
    auto c = ramification_conditions(k, phi, theta);
    if (!c.agree()) fail(Errc::TheoremViolation, "fully ramified characterizations disagree");
    if (c.restriction) out = FullyRamified{theta, theta.degree_int() / phi.degree_int()};
  }
  return out;
}

int section_exponent(const Subgroup& k, const Subgroup& l) {
  const FiniteGroup& G = k.group();
  long e = 1;
  for (int x : k.elements()) {
    long m = 1;
    for (int y = x; !l.contains(y); y = G.mul(y, x)) ++m;
    e = nt::lcm(e, m);
  }
  return static_cast<int>(e);
}

// --- fives ------------------------------------------------------------------------------

CharacterFive make_five(const Subgroup& g, const Subgroup& k, const ClassFunction& phi, std::optional<Subgroup> control) {
  const Subgroup& l = phi.group();
  require(is_normal(g, k) && is_normal(g, l) && contained(l, k), Errc::NotNormal, "need L <= K normal in G");
  require(is_irreducible(phi), Errc::NotIrreducible, "phi is not irreducible");
  auto fr = is_fully_ramified(k, phi);
  require(fr.has_value(), Errc::HypothesisViolated, "phi is not fully ramified in K");
  CharacterFive f;
  f.g = g;
  f.k = k;
  f.l = l;
  f.theta = fr->theta;
  f.phi = phi;
  f.n = fr->n;
  if (is_invariant(phi, g)) {
    f.kind = FiveKind::Invariant;
  } else {
    require(semi_invariance(g, phi).certificate && semi_invariance(g, f.theta).certificate, Errc::NotSemiInvariant,
            "phi is neither invariant nor semi-invariant in G");
    f.kind = FiveKind::SemiInvariant;
  }
  const long kl = k.order() / l.order();
  f.abelian_kl = contained(derived_subgroup(k), l);
  f.odd_kl = kl % 2 == 1;
  f.coprime = nt::gcd(g.order() / k.order(), kl) == 1;
  if (control) {
    check_control(f, *control);
    f.strongly_controlled_with = control;
  }
  return f;
}

bool root_of_unity_check(const CharacterFive& five) {
  return contains_root_of_unity(field_of_values(five.phi), section_exponent(five.k, five.l));
}

Subgroup find_complement(const CharacterFive& five, const Subgroup& n) {
  check_control(five, n);
  const auto& [g, k, l] = std::tie(five.g, five.k, five.l);
  FormTable form(n, five.phi);
  Subgroup c = centralizer_mod(n, k, l);
  std::vector<int> kreps;
  for (int x : k.elements())
    if (l.coset_min(x) == x) kreps.push_back(x);
  std::vector<int> b;
  const Cyclotomic one(1L);
  for (int x : c.elements())
    if (std::all_of(kreps.begin(), kreps.end(), [&](int y) { return form(x, y) == one; })) b.push_back(x);
  Subgroup bs = g.group().intern(std::move(b));
  if (!is_normal(g, bs) || intersect(bs, k) != l || join(bs, k) != c)
    fail(Errc::TheoremViolation, "the radical of the form does not complement K/L in C");
  auto comps = complement_search(n, c, bs);
  if (comps.empty()) fail(Errc::TheoremViolation, "C/B has no complement in N/B");
  Subgroup h = normalizer(g, comps.front());
  if (join(h, k) != g || intersect(h, k) != l) fail(Errc::TheoremViolation, "N_G(M) is not a complement of K/L");
  for (int x : intersect(h, c).elements())
    if (!is_good(form, x, k)) fail(Errc::TheoremViolation, "element of H cap C is not good");
  return h;
}

std::vector<Subgroup> good_complements(const CharacterFive& five, const Subgroup& n) {
  check_control(five, n);
  FormTable form(n, five.phi);
  Subgroup c = centralizer_mod(n, five.k, five.l);
  std::vector<Subgroup> out;
  for (const auto& h : complement_search(five.g, five.k, five.l, false)) {
    auto hc = intersect(h, c);
    if (!std::all_of(hc.elements().begin(), hc.elements().end(), [&](int x) { return is_good(form, x, five.k); }))
      continue;
    Subgroup rep = canonical_conjugate(five.g, h);
    if (std::find(out.begin(), out.end(), rep) == out.end()) out.push_back(rep);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- magic characters ------------------------------------------------------------------

bool modulus_law(const CharacterFive& five, const ClassFunction& psi) {
  return modulus_law_with(class_goodness(five, psi.group()), psi);
}

std::vector<MagicCharacter> magic_search(const CharacterFive& five, const Subgroup& h) {
  require(five.kind == FiveKind::Invariant, Errc::HypothesisViolated, "magic search needs an invariant five");
  require(contained(five.l, h) && join(h, five.k) == five.g && intersect(h, five.k) == five.l,
          Errc::HypothesisViolated, "H is not a complement of K/L");
  const auto quot = irr_of_quotient(h, five.l);
  std::vector<long> deg;
  for (const auto& q : quot) deg.push_back(q.degree_int());
  const ClassGoodness cg = class_goodness(five, h);
  const auto chis = irr_over(five.g, five.k, five.theta);
  const auto xis = irr_over(h, five.l, five.phi);
  std::vector<ClassFunction> chi_h;
  for (const auto& chi : chis) chi_h.push_back(restrict_to(chi, h));

  std::vector<MagicCharacter> out;
  std::vector<long> mult(quot.size(), 0);
  auto consider = [&]() {
    ClassFunction psi = ClassFunction::constant(h, 0);
    for (size_t i = 0; i < quot.size(); ++i)
      if (mult[i]) psi += quot[i] * Cyclotomic(mult[i]);
    if (!modulus_law_with(cg, psi)) return;
    if (chis.size() != xis.size()) return;
    std::vector<std::vector<int>> cand(chis.size());
    for (size_t i = 0; i < chis.size(); ++i)
      for (size_t j = 0; j < xis.size(); ++j)
        if (psi * xis[j] == chi_h[i]) cand[i].push_back(static_cast<int>(j));
    if (!find_matching(cand, static_cast<int>(xis.size()))) return;
    MagicCharacter m;
    m.host = h;
    m.psi = psi;
    m.det_order = determinantal_order(psi);
    m.rational = field_of_values(psi) == rationals_field();
    m.canonical = five.odd_kl && is_canonical(five, psi);
    out.push_back(std::move(m));
  };
  std::function<void(size_t, long)> rec = [&](size_t i, long left) {
    if (i == quot.size()) {
      if (left == 0) consider();
      return;
    }
    for (long m = 0; m * deg[i] <= left; ++m) {
      mult[i] = m;
      rec(i + 1, left - m * deg[i]);
    }
    mult[i] = 0;
  };
  rec(0, five.n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.psi < b.psi; });
  return out;
}

bool is_canonical(const CharacterFive& five, const ClassFunction& psi) {
  require(five.odd_kl, Errc::HypothesisViolated, "canonical characters need |K:L| odd");
  const auto pi = nt::prime_divisors(five.k.order() / five.l.order());
  if (!is_pi_number(determinantal_order(psi), pi)) return false;
  for (int p : pi)
    if (!trivial_unique_odd(psi, sylow(psi.group(), p))) return false;
  return true;
}

MagicCharacter canonical_select(const std::vector<MagicCharacter>& solutions, const CharacterFive& five) {
  require(five.odd_kl, Errc::HypothesisViolated, "canonical characters need |K:L| odd");
  std::vector<const MagicCharacter*> hits;
  for (const auto& s : solutions)
    if (is_canonical(five, s.psi)) hits.push_back(&s);
  if (hits.empty()) fail(Errc::NoneCanonical, "no magic character is canonical");
  if (hits.size() > 1) fail(Errc::MultipleCanonical, std::to_string(hits.size()) + " canonical magic characters");
  MagicCharacter m = *hits[0];
  m.canonical = true;
  if (!field_contains(field_of_values(five.phi), field_of_values(m.psi)))
    fail(Errc::TheoremViolation, "canonical character has values outside Q(phi)");
  for (const auto& v : subgroups_between(m.host, five.l))
    if ((v.order() / five.l.order()) % 2 == 1 && !trivial_unique_odd(m.psi, v))
      fail(Errc::TheoremViolation, "canonical character fails the odd-subgroup parity property");
  return m;
}

MagicCharacter coprime_select(const std::vector<MagicCharacter>& solutions, const CharacterFive& five) {
  require(five.coprime, Errc::HypothesisViolated, "coprime selection needs gcd(|G:K|,|K:L|) = 1");
  std::vector<const MagicCharacter*> hits;
  for (const auto& s : solutions)
    if (determinant_character(s.psi) == ClassFunction::trivial(s.host)) hits.push_back(&s);
  if (hits.size() != 1)
    fail(Errc::TheoremViolation, std::to_string(hits.size()) + " magic characters of determinant 1 in a coprime five");
  MagicCharacter m = *hits[0];
  if (!m.rational) fail(Errc::TheoremViolation, "determinant-1 magic character is not rational");
  const ClassData& cd = m.psi.classes();
  const ClassGoodness cg = class_goodness(five, m.host);
  for (int c = 0; c < cd.count(); ++c) {
    const Cyclotomic& v = m.psi.at_class(c);
    if (v.is_zero()) fail(Errc::TheoremViolation, "determinant-1 magic character vanishes");
    auto primes = nt::prime_divisors(cd.rep_orders[c]);
    if (primes.size() != 1 || primes[0] == 2) continue;
    const long p = primes[0];
    const Rational& q = v.rational();
    if (q * q != Rational(cg.cent[c]) || q.get_den() != 1 || (mpz_class(q.get_num()) - five.n) % p != 0)
      fail(Errc::TheoremViolation, "congruence psi(x) = n mod p fails");
  }
  return m;
}

// --- correspondences ----------------------------------------------------------------------

bool FiveCorrespondence::all_checks() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

FiveCorrespondence five_correspondence(const CharacterFive& five, const Subgroup& h, const ClassFunction& psi,
                                       const Subgroup& u) {
  require(contained(five.k, u) && contained(u, five.g), Errc::HypothesisViolated, "need K <= U <= G");
  FiveCorrespondence fc;
  fc.u = u;
  fc.v = intersect(u, h);
  fc.psi = psi;
  const ClassFunction psi_v = restrict_to(psi, fc.v);
  const auto dom = irr_over(u, five.k, five.theta);
  const auto cod = irr_over(fc.v, five.l, five.phi);
  std::vector<std::vector<int>> cand(dom.size());
  for (size_t i = 0; i < dom.size(); ++i) {
    ClassFunction r = restrict_to(dom[i], fc.v);
    for (size_t j = 0; j < cod.size(); ++j)
      if (psi_v * cod[j] == r) cand[i].push_back(static_cast<int>(j));
  }
  auto match = dom.size() == cod.size() ? find_matching(cand, static_cast<int>(cod.size())) : std::nullopt;
  if (!match) fail(Errc::NotBijective, "chi_V = psi xi does not define a bijection");
  for (size_t i = 0; i < dom.size(); ++i) fc.pairs.emplace_back(dom[i], cod[(*match)[i]]);
  fc.checks["bijective"] = true;

  auto image = [&](const ClassFunction& chi) -> const ClassFunction* {
    for (const auto& [a, b] : fc.pairs)
      if (a == chi) return &b;
    return nullptr;
  };

  bool iso = true, ratio = true;
  for (const auto& [a, b] : fc.pairs) {
    ratio = ratio && a.degree_int() == five.n * b.degree_int();
    for (const auto& [c, d] : fc.pairs) iso = iso && inner_product(a, c) == inner_product(b, d);
  }
  fc.checks["isometry"] = iso;
  fc.checks["degree_ratio"] = ratio;

  // Galois automorphisms fixing Q(phi) and psi
  long m = nt::lcm(field_of_values(five.phi).conductor, field_of_values(psi).conductor);
  for (const auto& [a, b] : fc.pairs) m = nt::lcm(m, nt::lcm(field_of_values(a).conductor, field_of_values(b).conductor));
  const auto fphi = field_of_values(five.phi);
  bool gal = true;
  for (int k : nt::units(static_cast<int>(m))) {
    if (!galois_fixes(fphi, k) || psi.galois(k) != psi) continue;
    for (const auto& [a, b] : fc.pairs) {
      const ClassFunction* img = image(a.galois(k));
      gal = gal && img && *img == b.galois(k);
    }
  }
  fc.checks["galois"] = gal;

  bool lin = true;
  const auto& tab = character_table(u);
  for (const auto& beta : irr_of_quotient(u, five.k)) {
    ClassFunction beta_v = restrict_to(beta, fc.v);
    for (const auto& [a, b] : fc.pairs) {
      auto mult = multiplicities(beta * a);
      ClassFunction sum = ClassFunction::constant(fc.v, 0);
      for (size_t i = 0; i < mult.size(); ++i) {
        if (!mult[i]) continue;
        const ClassFunction* img = image(tab[i]);
        if (!img) {
          lin = false;
          continue;
        }
        sum += *img * Cyclotomic(mult[i]);
      }
      lin = lin && sum == beta_v * b;
    }
  }
  fc.checks["linear_multiplication"] = lin;
  return fc;
}

FiveCorrespondence parity_correspondence(const CharacterFive& five, const Subgroup& h, const Subgroup& u) {
  require(contained(five.k, u) && contained(u, five.g), Errc::HypothesisViolated, "need K <= U <= G");
  require((u.order() / five.l.order()) % 2 == 1, Errc::HypothesisViolated, "parity rule needs |U:L| odd");
  FiveCorrespondence fc;
  fc.u = u;
  fc.v = intersect(u, h);
  fc.parity = true;
  const auto dom = irr_over(u, five.k, five.theta);
  const auto cod = irr_over(fc.v, five.l, five.phi);
  std::vector<int> col_hits(cod.size(), 0);
  for (const auto& chi : dom) {
    ClassFunction r = restrict_to(chi, fc.v);
    int found = -1, count = 0;
    for (size_t j = 0; j < cod.size(); ++j)
      if (inner_product_int(r, cod[j]) % 2 != 0) {
        found = static_cast<int>(j);
        ++count;
      }
    if (count != 1) fail(Errc::NotAMatching, "a character has " + std::to_string(count) + " odd partners");
    ++col_hits[found];
    fc.pairs.emplace_back(chi, cod[found]);
  }
  for (int c : col_hits)
    if (c != 1) fail(Errc::NotAMatching, "odd-multiplicity relation is not a perfect matching");
  bool ratio = true;
  for (const auto& [a, b] : fc.pairs) ratio = ratio && a.degree_int() == five.n * b.degree_int();
  fc.checks["matching"] = true;
  fc.checks["degree_ratio"] = ratio;
  return fc;
}

}  // namespace fgct
