#include "fgct/isaacs.hpp"

#include <algorithm>
#include <map>

#include "fgct/error.hpp"

namespace fgct {

const char* step_tag_name(StepTag t) {
  switch (t) {
    case StepTag::InertiaReduction: return "InertiaReduction";
    case StepTag::ChiefRestriction: return "ChiefRestriction";
    case StepTag::ChiefInduced: return "ChiefInduced";
    case StepTag::FullyRamifiedStep: return "FullyRamifiedStep";
  }
  return "?";
}

long CorrespondenceTrace::ratio() const {
  long r = 1;
  for (const auto& s : steps) r *= s.factor;
  return r;
}

namespace {

bool lies_over(const ClassFunction& chi, const ClassFunction& phi) {
  return !inner_product(restrict_to(chi, phi.group()), phi).is_zero();
}

// The unique member of Irr(S | phi) inducing to chi.
ClassFunction induction_source(const Subgroup& s, const ClassFunction& phi, const ClassFunction& chi) {
  std::optional<ClassFunction> found;
  for (const auto& tau : irr_over(s, phi.group(), phi)) {
    if (induce(tau, chi.group()) != chi) continue;
    if (found) fail(Errc::TheoremViolation, "two characters over phi induce to the same irreducible");
    found = tau;
  }
  if (!found) fail(Errc::TheoremViolation, "no character over phi induces to chi");
  return *found;
}

ClassFunction induce_irreducible(const ClassFunction& xi, const Subgroup& h) {
  if (xi.group() == h) return xi;
  ClassFunction out = induce(xi, h);
  if (!is_irreducible(out)) fail(Errc::TheoremViolation, "induced character is reducible");
  return out;
}

class Engine {
 public:
  Engine(const EngineOptions& opt, CorrespondenceTrace* trace) : opt_(opt), trace_(trace) {}

  ClassFunction map(const StrongSection& s, const ClassFunction& chi, int depth) {
    const auto& [g, k, l, m, theta, phi] = std::tie(s.g, s.k, s.l, s.m, s.theta, s.phi);
    require(chi.group() == g && lies_over(chi, theta), Errc::HypothesisViolated, "chi does not lie over theta");
    Subgroup h = normalizer(g, m);
    if (k == l) {
      if (h != g) fail(Errc::TheoremViolation, "M is not normal although K = L");
      return chi;
    }

    Subgroup u = orbit_stabilizer(g, galois_orbit(theta));
    if (u != g) return reduce_inertia(s, chi, h, u, depth);

    auto mins = minimal_normal_between(g, k, l);
    if (mins.empty()) fail(Errc::TheoremViolation, "no minimal normal subgroup between L and K");
    if (mins.front() != k) {
      Subgroup np = opt_.reverse_chief ? mins.back() : mins.front();
      ClassFunction eta = unique_invariant_constituent(Direction::Up, m, np, l, phi);
      if (!lies_over(theta, eta)) fail(Errc::TheoremViolation, "the M-invariant character over phi is not under theta");
      Subgroup mn = join(m, np);
      ClassFunction mid = map(StrongSection{g, k, np, mn, theta, eta}, chi, depth);
      ClassFunction xi = map(StrongSection{mid.group(), np, l, m, eta, phi}, mid, depth);
      if (xi.group() != h) fail(Errc::TheoremViolation, "chief refinement did not end in N_G(M)");
      return xi;
    }

    auto gd = going_down_classify(g, k, l, theta);
    switch (gd.kind) {
      case GoingDown::InducedGaloisShift:
        fail(Errc::TheoremViolation, "phi is semi-invariant in K inside the strong correspondence");
      case GoingDown::InducedSameField: {
        if (orbit_stabilizer(g, galois_orbit(phi)) != h)
          fail(Errc::TheoremViolation, "N_G(M) is not the stabilizer of the orbit of phi");
        ClassFunction xi = induction_source(h, phi, chi);
        record(StepTag::ChiefInduced, depth, s, h, chi, xi, k.order() / l.order());
        return xi;
      }
      case GoingDown::Restriction: {
        if (field_of_values(theta) != field_of_values(phi))
          fail(Errc::TheoremViolation, "restriction step with different fields");
        ClassFunction xi = restrict_to(chi, h);
        if (!is_irreducible(xi) || !lies_over(xi, phi))
          fail(Errc::TheoremViolation, "restriction to N_G(M) is not irreducible over phi");
        record(StepTag::ChiefRestriction, depth, s, h, chi, xi, 1);
        return xi;
      }
      case GoingDown::FullyRamified:
        return fully_ramified(s, chi, h, depth);
    }
    fail(Errc::TheoremViolation, "unhandled going-down case");
  }

 private:
  size_t record(StepTag tag, int depth, const StrongSection& s, const Subgroup& h, const ClassFunction& in,
                const ClassFunction& out, long factor) {
    if (!trace_) return 0;
    CorrespondenceStep st{tag, depth, s.g, s.k, s.l, h, s.theta, s.phi, in, out, factor, std::nullopt, std::nullopt};
    trace_->steps.push_back(std::move(st));
    return trace_->steps.size() - 1;
  }

  ClassFunction reduce_inertia(const StrongSection& s, const ClassFunction& chi, const Subgroup& h, const Subgroup& u,
                               int depth) {
    Subgroup v = intersect(u, h);
    if (s.g.order() / u.order() != h.order() / v.order())
      fail(Errc::TheoremViolation, "orbit stabilizers have different indices in G and H");
    ClassFunction tau = induction_source(u, s.theta, chi);
    size_t at = record(StepTag::InertiaReduction, depth, s, h, chi, chi, 1);
    ClassFunction sub = map(StrongSection{u, s.k, s.l, s.m, s.theta, s.phi}, tau, depth + 1);
    if (sub.group() != v) fail(Errc::TheoremViolation, "inertia reduction did not land in U cap H");
    ClassFunction xi = induce_irreducible(sub, h);
    if (trace_) trace_->steps[at].output = xi;
    return xi;
  }

  ClassFunction fully_ramified(const StrongSection& s, const ClassFunction& chi, const Subgroup& h, int depth) {
    const Subgroup t = inertia_group(s.g, s.phi);
    const Subgroup ht = intersect(h, t);
    ClassFunction tau = t == s.g ? chi : induction_source(t, s.phi, chi);
    const Subgroup mk = join(s.m, s.k);
    CharacterFive five = make_five(t, s.k, s.phi, mk);
    Subgroup built = find_complement(five, mk);
    if (canonical_conjugate(t, built) != canonical_conjugate(t, ht))
      fail(Errc::TheoremViolation, "constructed complement is not conjugate to N_T(M)");
    MagicCharacter canon = canonical_select(magic_search(five, ht), five);
    ClassFunction tau_h = restrict_to(tau, ht);
    std::optional<ClassFunction> xi_t;
    for (const auto& xi : irr_over(ht, s.l, s.phi))
      if (canon.psi * xi == tau_h) {
        if (xi_t) fail(Errc::TheoremViolation, "two characters satisfy the magic factorization");
        xi_t = xi;
      }
    if (!xi_t) fail(Errc::TheoremViolation, "no character xi with tau_H = psi xi");
    std::optional<bool> agrees;
    if ((t.order() / s.l.order()) % 2 == 1) {
      auto par = parity_correspondence(five, ht, t);
      agrees = false;
      for (const auto& [a, b] : par.pairs)
        if (a == tau) agrees = b == *xi_t;
      if (!*agrees) fail(Errc::TheoremViolation, "parity rule disagrees with the canonical character");
    }
    ClassFunction xi = induce_irreducible(*xi_t, h);
    size_t at = record(StepTag::FullyRamifiedStep, depth, s, h, chi, xi, five.n);
    if (trace_) {
      trace_->steps[at].psi = canon.psi;
      trace_->steps[at].parity_agrees = agrees;
    }
    return xi;
  }

  EngineOptions opt_;
  CorrespondenceTrace* trace_;
};

bool contained(const Subgroup& a, const Subgroup& b) {
  for (int x : a.generators())
    if (!b.contains(x)) return false;
  return true;
}

long conductor_of(const std::vector<ClassFunction>& cs) {
  long m = 1;
  for (const auto& c : cs) m = nt::lcm(m, field_of_values(c).conductor);
  return m;
}

}  // namespace

// --- strong correspondence ------------------------------------------------------

void check_strong_section(const StrongSection& s) {
  const auto& [g, k, l, m, theta, phi] = std::tie(s.g, s.k, s.l, s.m, s.theta, s.phi);
  require(contained(l, k) && is_normal(g, k) && is_normal(g, l), Errc::NotNormal, "need L <= K normal in G");
  require(contained(l, m) && contained(m, g), Errc::HypothesisViolated, "need L <= M <= G");
  require(is_normal(g, join(m, k)), Errc::NotNormal, "MK is not normal in G");
  const long kl = k.order() / l.order();
  require(kl % 2 == 1, Errc::HypothesisViolated, "|K/L| is even; the correspondence fails for even |K/L|");
  require(nt::gcd(m.order() / l.order(), kl) == 1, Errc::HypothesisViolated, "|M/L| and |K/L| are not coprime");
  require(centralizer_mod(k, m, l) == l, Errc::HypothesisViolated, "M has fixed points on K/L");
  require(theta.group() == k && is_irreducible(theta), Errc::NotIrreducible, "theta is not in Irr(K)");
  require(phi.group() == l && is_irreducible(phi), Errc::NotIrreducible, "phi is not in Irr(L)");
  require(is_invariant(theta, m) && is_invariant(phi, m), Errc::NotInvariant, "theta or phi is not M-invariant");
  require(lies_over(theta, phi), Errc::HypothesisViolated, "theta does not lie over phi");
}

ClassFunction strong_correspondent(const StrongSection& s, const ClassFunction& chi, CorrespondenceTrace* trace,
                                   const EngineOptions& opt) {
  check_strong_section(s);
  if (trace) trace->initial = chi;
  ClassFunction xi = Engine(opt, trace).map(s, chi, 0);
  if (trace) trace->final = xi;
  return xi;
}

StrongBijection strong_correspondence(const StrongSection& s, const EngineOptions& opt) {
  check_strong_section(s);
  StrongBijection out;
  out.h = normalizer(s.g, s.m);
  out.n = s.theta.degree_int() / s.phi.degree_int();
  const long c = nt::lcm(field_of_values(s.theta).conductor, field_of_values(s.phi).conductor);
  std::map<ClassFunction, ClassFunction> image;
  std::vector<ClassFunction> seen_theta;
  for (int a : nt::units(static_cast<int>(c))) {
    ClassFunction th = s.theta.galois(a);
    if (std::find(seen_theta.begin(), seen_theta.end(), th) != seen_theta.end()) continue;
    seen_theta.push_back(th);
    StrongSection sa{s.g, s.k, s.l, s.m, th, s.phi.galois(a)};
    for (const auto& chi : irr_over(s.g, s.k, th)) {
      ClassFunction xi = Engine(opt, nullptr).map(sa, chi, 0);
      auto it = image.find(chi);
      if (it != image.end() && it->second != xi)
        fail(Errc::TheoremViolation, "the image depends on the member of the Galois orbit");
      image.emplace(chi, xi);
    }
  }
  for (const auto& [chi, xi] : image) out.pairs.emplace_back(chi, xi);

  auto codomain = irr_over_orbit(out.h, galois_orbit(s.phi));
  std::vector<ClassFunction> imgs;
  for (const auto& p : out.pairs) imgs.push_back(p.second);
  std::sort(imgs.begin(), imgs.end());
  out.bijective = imgs == codomain;
  out.degree_ratio = out.fields = out.galois = true;
  std::vector<ClassFunction> all;
  for (const auto& [chi, xi] : out.pairs) {
    out.degree_ratio = out.degree_ratio && chi.degree_int() == out.n * xi.degree_int();
    out.fields = out.fields && field_of_values(chi) == field_of_values(xi);
    all.push_back(chi);
    all.push_back(xi);
  }
  const long m = conductor_of(all);
  for (int a : nt::units(static_cast<int>(m)))
    for (const auto& [chi, xi] : out.pairs) {
      auto it = image.find(chi.galois(a));
      out.galois = out.galois && it != image.end() && it->second == xi.galois(a);
    }
  return out;
}

// --- Isaacs correspondence -----------------------------------------------------------

CoprimeSetup make_setup(const SemidirectProduct& sd, std::string name) {
  return make_setup(sd.group->whole(), sd.n, sd.a, std::move(name));
}

CoprimeSetup make_setup(const Subgroup& g, const Subgroup& n, const Subgroup& a, std::string name) {
  CoprimeSetup s;
  s.name = std::move(name);
  s.g = g;
  s.n = n;
  s.a = a;
  require(contained(n, g) && contained(a, g), Errc::NotSubgroup, "N and A must lie in G");
  s.an = join(a, n);
  require(is_normal(s.an, n), Errc::NotNormal, "A does not normalize N");
  require(is_normal(g, s.an), Errc::NotNormal, "AN is not normal in G");
  require(intersect(a, n).order() == 1, Errc::HypothesisViolated, "A and N intersect nontrivially");
  s.c = centralizer(n, a);
  s.u = normalizer(g, a);
  return s;
}

std::vector<ClassFunction> invariant_irr(const CoprimeSetup& s) {
  std::vector<ClassFunction> out;
  for (const auto& chi : character_table(s.n).irr())
    if (is_invariant(chi, s.a)) out.push_back(chi);
  std::sort(out.begin(), out.end());
  return out;
}

IsaacsResult isaacs_correspondent(const CoprimeSetup& s, const ClassFunction& chi, const EngineOptions& opt) {
  require(s.n.order() % 2 == 1, Errc::EvenOrder,
          "|N| is even; over the rationals the correspondence breaks down (Q8 with an automorphism of order 3 "
          "has a character of Schur index 2 whose only candidate partner has Schur index 1)");
  require(nt::gcd(s.n.order(), s.a.order()) == 1, Errc::NotCoprime, "|N| and |A| are not coprime");
  require(chi.group() == s.n && is_irreducible(chi), Errc::NotIrreducible, "chi is not in Irr(N)");
  require(is_invariant(chi, s.a), Errc::NotInvariant, "chi is not A-invariant");

  IsaacsResult res;
  res.chi = chi;
  res.trace.initial = chi;
  Subgroup n = s.n;
  ClassFunction cur = chi;
  const Subgroup one = s.g.group().trivial();
  for (;;) {
    Subgroup k = commutator(n, s.a);
    if (k == one) break;
    IsaacsLevel lev;
    lev.n = n;
    lev.chi = cur;
    lev.k = k;
    lev.l = derived_subgroup(k);
    std::vector<ClassFunction> thetas;
    for (auto& t : constituents_of_restriction(cur, k))
      if (is_invariant(t, s.a)) thetas.push_back(std::move(t));
    if (thetas.empty()) fail(Errc::TheoremViolation, "chi_K has no A-invariant constituent");
    lev.theta = opt.reverse_constituents ? thetas.back() : thetas.front();
    lev.phi = unique_invariant_constituent(Direction::Down, s.a, k, lev.l, lev.theta);

    const Subgroup an = join(s.a, n);
    const Subgroup m = join(s.a, lev.l);
    lev.h = normalizer(an, m);
    lev.lc = intersect(lev.h, n);
    if (lev.lc != join(lev.l, centralizer(n, s.a)))
      fail(Errc::TheoremViolation, "N_{AN}(AL) cap N differs from LC");
    std::vector<ClassFunction> ext;
    for (auto& e : irr_over(an, n, cur))
      if (e.degree_int() == cur.degree_int()) ext.push_back(std::move(e));
    if (ext.empty()) fail(Errc::TheoremViolation, "A-invariant character does not extend to AN");
    lev.extension = opt.reverse_extension ? ext.back() : ext.front();
    lev.image = Engine(opt, &res.trace).map(StrongSection{an, k, lev.l, m, lev.theta, lev.phi}, lev.extension, 0);
    lev.psi = restrict_to(lev.image, lev.lc);
    if (!is_irreducible(lev.psi) || !is_invariant(lev.psi, s.a))
      fail(Errc::TheoremViolation, "the image restricted to LC is not an A-invariant irreducible");
    if (lev.lc.order() >= n.order()) fail(Errc::TheoremViolation, "the recursion does not descend");
    n = lev.lc;
    cur = lev.psi;
    res.levels.push_back(std::move(lev));
  }
  if (n != s.c) fail(Errc::TheoremViolation, "the recursion did not end at C_N(A)");
  res.star = cur;
  res.trace.final = cur;
  return res;
}

bool verify_trace_independence(const CoprimeSetup& s, const ClassFunction& chi) {
  const ClassFunction base = isaacs_correspondent(s, chi).star;
  for (int mask = 1; mask < 8; ++mask) {
    EngineOptions opt{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    if (isaacs_correspondent(s, chi, opt).star != base) return false;
  }
  return true;
}

IsaacsBijection isaacs_bijection(const CoprimeSetup& s) {
  IsaacsBijection out;
  std::map<ClassFunction, ClassFunction> image;
  out.degree_divides = out.trace_independent = true;
  for (const auto& chi : invariant_irr(s)) {
    auto r = isaacs_correspondent(s, chi);
    const long d = chi.degree_int(), e = r.star.degree_int();
    out.degree_divides = out.degree_divides && d % e == 0 && r.trace.ratio() == d / e;
    out.trace_independent = out.trace_independent && verify_trace_independence(s, chi);
    image.emplace(chi, r.star);
    out.pairs.emplace_back(chi, r.star);
  }
  std::vector<ClassFunction> imgs;
  for (const auto& p : out.pairs) imgs.push_back(p.second);
  std::sort(imgs.begin(), imgs.end());
  auto irr_c = character_table(s.c).irr();
  std::sort(irr_c.begin(), irr_c.end());
  out.bijective = std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end() && imgs == irr_c;
  out.fields = out.galois = out.u_equivariant = true;
  std::vector<ClassFunction> all;
  for (const auto& [chi, star] : out.pairs) {
    out.fields = out.fields && field_of_values(chi) == field_of_values(star);
    all.push_back(chi);
    all.push_back(star);
  }
  for (int a : nt::units(static_cast<int>(conductor_of(all))))
    for (const auto& [chi, star] : out.pairs) {
      auto it = image.find(chi.galois(a));
      out.galois = out.galois && it != image.end() && it->second == star.galois(a);
    }
  for (int u : s.u.generators())
    for (const auto& [chi, star] : out.pairs) {
      auto it = image.find(conjugate_character(chi, u));
      out.u_equivariant = out.u_equivariant && it != image.end() && it->second == conjugate_character(star, u);
    }
  return out;
}

AboveCorrespondence above_correspondence(const CoprimeSetup& s, const ClassFunction& chi, const EngineOptions& opt) {
  IsaacsResult r = isaacs_correspondent(s, chi, opt);
  AboveCorrespondence out;
  out.chi = chi;
  out.star = r.star;
  const auto domain = irr_over(s.g, s.n, chi);
  auto codomain = irr_over(s.u, s.c, r.star);
  std::sort(codomain.begin(), codomain.end());
  out.domain = static_cast<long>(domain.size());
  out.codomain = static_cast<long>(codomain.size());
  for (const auto& beta : domain) {
    CorrespondenceTrace trace;
    trace.initial = beta;
    ClassFunction cur = beta;
    Engine engine(opt, &trace);
    for (const auto& lev : r.levels) {
      const Subgroup m = join(s.a, lev.l);
      cur = engine.map(StrongSection{cur.group(), lev.k, lev.l, m, lev.theta, lev.phi}, cur, 0);
      if (!lies_over(cur, lev.psi)) fail(Errc::TheoremViolation, "overgroup image does not lie over the LC image");
    }
    if (cur.group() != s.u) fail(Errc::TheoremViolation, "the overgroup recursion did not end at N_G(A)");
    if (!lies_over(cur, r.star)) fail(Errc::TheoremViolation, "overgroup image does not lie over chi*");
    trace.final = cur;
    out.pairs.emplace_back(beta, cur);
    out.traces.push_back(std::move(trace));
  }
  std::vector<ClassFunction> imgs;
  for (const auto& p : out.pairs) imgs.push_back(p.second);
  std::sort(imgs.begin(), imgs.end());
  out.bijective = std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end() && imgs == codomain;
  out.constant_ratio = out.fields = true;
  for (const auto& [beta, img] : out.pairs) {
    out.constant_ratio = out.constant_ratio && beta.degree_int() * out.pairs[0].second.degree_int() ==
                                                   img.degree_int() * out.pairs[0].first.degree_int();
    out.fields = out.fields && field_of_values(beta) == field_of_values(img);
  }
  return out;
}

}  // namespace fgct
