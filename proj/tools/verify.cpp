#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "fgct/error.hpp"

namespace fgct::tools {

namespace {

std::vector<ClassFunction> sorted_irr(const Subgroup& h) {
  auto irr = character_table(h).irr();
  std::sort(irr.begin(), irr.end());
  return irr;
}

ClassFunction nonrational_linear(const Subgroup& h) {
  for (const auto& chi : sorted_irr(h))
    if (chi.degree_int() == 1 && field_of_values(chi) != rationals_field()) return chi;
  fail(Errc::HypothesisViolated, "no nonrational linear character");
}

ClassFunction nontrivial_linear(const Subgroup& h) {
  for (const auto& chi : sorted_irr(h))
    if (chi.degree_int() == 1 && chi != ClassFunction::trivial(h)) return chi;
  fail(Errc::HypothesisViolated, "no nontrivial linear character");
}

struct Named {
  std::string name;
  std::function<GroupPtr()> make;
};

std::vector<Named> catalog_groups() {
  std::vector<Named> out;
  for (int n = 1; n <= 12; ++n) out.push_back({"C" + std::to_string(n), [n] { return catalog::cyclic(n); }});
  out.push_back({"D8", [] { return catalog::dihedral(8); }});
  out.push_back({"D14", [] { return catalog::dihedral(14); }});
  out.push_back({"Q8", [] { return catalog::quaternion8(); }});
  out.push_back({"S3", [] { return catalog::sym(3); }});
  out.push_back({"S4", [] { return catalog::sym(4); }});
  out.push_back({"A4", [] { return catalog::alt(4); }});
  out.push_back({"SL(2,3)", [] { return catalog::sl2_3(); }});
  out.push_back({"3^{1+2}+", [] { return catalog::extraspecial(3, 3); }});
  out.push_back({"3^{1+2}-", [] { return catalog::extraspecial(3, 9); }});
  out.push_back({"5^{1+2}+", [] { return catalog::extraspecial(5, 5); }});
  return out;
}

GroupPtr extension(int a, GroupPtr n, const char* action) {
  return semidirect_product(named_action(catalog::cyclic(a), std::move(n), action)).group;
}

// The corpus of groups of order at most 200: the catalog plus the extensions used by the fives.
std::vector<Named> small_corpus() {
  auto out = catalog_groups();
  out.push_back({"3^{1+2}:C2", [] { return extension(2, catalog::extraspecial(3, 3), "inversion-mod-center"); }});
  out.push_back({"3^{1+2}:C4", [] { return extension(4, catalog::extraspecial(3, 3), "symplectic4"); }});
  out.push_back({"C7:C2", [] { return extension(2, catalog::cyclic(7), "inversion"); }});
  out.push_back({"Q8:C3", [] { return extension(3, catalog::quaternion8(), "q8-order3"); }});
  return out;
}

// --- fives ------------------------------------------------------------------

struct FiveCase {
  std::string name;
  Subgroup g, k, l, h;
  ClassFunction phi;
};

FiveCase over_extraspecial(const char* name, int a, int p, const char* action) {
  auto sd = semidirect_product(named_action(catalog::cyclic(a), catalog::extraspecial(p, p), action));
  FiveCase c{name, sd.group->whole(), sd.n, center(sd.n), {}, {}};
  c.phi = nonrational_linear(c.l);
  c.h = join(c.l, sd.a);
  return c;
}

FiveCase five_case(const std::string& name) {
  if (name == "3^{1+2}:C2") return over_extraspecial("3^{1+2}:C2", 2, 3, "inversion-mod-center");
  if (name == "3^{1+2}:C4") return over_extraspecial("3^{1+2}:C4", 4, 3, "symplectic4");
  if (name == "5^{1+2}:C3") return over_extraspecial("5^{1+2}:C3", 3, 5, "symplectic3");
  if (name == "SL(2,3)") {
    auto g = catalog::sl2_3()->whole();
    FiveCase c{name, g, sylow(g, 2), center(g), {}, {}};
    c.phi = nontrivial_linear(c.l);
    c.h = find_complement(make_five(c.g, c.k, c.phi, c.g), c.g);
    return c;
  }
  if (name == "3^{1+2}") {
    auto k = catalog::extraspecial(3, 3)->whole();
    FiveCase c{name, k, k, center(k), {}, {}};
    c.phi = nonrational_linear(c.l);
    c.h = c.l;
    return c;
  }
  if (name == "Q8") {
    auto k = catalog::quaternion8()->whole();
    FiveCase c{name, k, k, center(k), {}, {}};
    c.phi = nontrivial_linear(c.l);
    c.h = c.l;
    return c;
  }
  fail(Errc::ParseError, "unknown five " + name);
}

const std::vector<std::string>& five_names() {
  static const std::vector<std::string> names{"3^{1+2}:C2", "3^{1+2}:C4", "5^{1+2}:C3", "SL(2,3)", "3^{1+2}", "Q8"};
  return names;
}

// h is K-good: <c,h> = 1 for every c in K with [c,h] in L.
bool good_by_pairing(const Subgroup& k, const ClassFunction& phi, int h) {
  const FiniteGroup& G = k.group();
  const Subgroup& l = phi.group();
  for (int c : k.elements())
    if (l.contains(G.comm(c, h)) && pairing(c, h, phi) != Cyclotomic(1)) return false;
  return true;
}

long centralizer_count(const Subgroup& k, const Subgroup& l, int h) {
  const FiniteGroup& G = k.group();
  long n = 0;
  for (int c : k.elements())
    if (l.contains(G.comm(c, h))) ++n;
  return n / l.order();
}

// |psi(h)|^2 against brute-force centralizer counts and pairing-based goodness.
bool modulus_oracle(const FiveCase& c, const ClassFunction& psi) {
  for (int h : c.h.elements()) {
    const Cyclotomic sq = psi(h) * psi(h).conj();
    const Cyclotomic want = good_by_pairing(c.k, c.phi, h) ? Cyclotomic(centralizer_count(c.k, c.l, h)) : Cyclotomic(0);
    if (sq != want) return false;
  }
  return true;
}

ClassFunction preferred_psi(const CharacterFive& five, const std::vector<MagicCharacter>& sols) {
  if (five.odd_kl) return canonical_select(sols, five).psi;
  return coprime_select(sols, five).psi;
}

json degrees_of(const std::vector<ClassFunction>& chars) {
  json d = json::array();
  for (const auto& c : chars) d.push_back(c.degree_int());
  return d;
}

// --- criterion items -----------------------------------------------------------

json item_table(const Named& g) {
  auto G = g.make()->whole();
  bool ok = true;
  json t = table_json(G, ok);
  long sum = 0;
  for (const auto& d : t["degrees"]) sum += d.get<long>() * d.get<long>();
  ok = ok && sum == G.order();
  return {{"pass", ok}, {"group", g.name}, {"order", G.order()}, {"classes", t["classes"].size()},
          {"degrees", t["degrees"]}, {"audit", t["audit"]}};
}

template <class F>
void for_invariant(const Subgroup& G, F&& f) {
  for (const auto& l : normal_subgroups_between(G, G, G.group().trivial()))
    for (const auto& phi : sorted_irr(l))
      if (is_invariant(phi, G)) f(l, phi);
}

json item_form_laws(const Named& g) {
  auto G = g.make()->whole();
  bool ok = true;
  long instances = 0, pairs = 0;
  json failures = json::array();
  for_invariant(G, [&](const Subgroup& l, const ClassFunction& phi) {
    auto r = form_law_audit(G, phi);
    ++instances;
    pairs += r.pairs;
    if (!r.all()) {
      ok = false;
      failures.push_back({{"L", to_json(l)}, {"phi", to_json(phi)},
                          {"laws", {{"bilinear", r.bilinear}, {"alternating", r.alternating}, {"inverse", r.inverse},
                                    {"coset", r.coset}, {"conjugation", r.conjugation}, {"galois", r.galois}}}});
    }
  });
  return {{"pass", ok}, {"group", g.name}, {"order", G.order()}, {"instances", instances}, {"pairs", pairs},
          {"failures", failures}};
}

json item_gallagher(const Named& g) {
  auto G = g.make()->whole();
  bool ok = true;
  long instances = 0;
  json counts = json::array();
  for_invariant(G, [&](const Subgroup& l, const ClassFunction& phi) {
    auto r = gallagher_check(G, phi);
    ++instances;
    ok = ok && r.equal();
    counts.push_back({{"L", l.order()}, {"irr", r.irr}, {"good", r.good}});
  });
  return {{"pass", ok}, {"group", g.name}, {"instances", instances}, {"counts", counts}};
}

json item_gallagher_named(const std::string& which) {
  Subgroup G, L;
  ClassFunction phi;
  long expect = 0;
  if (which == "Q8/Z") {
    G = catalog::quaternion8()->whole();
    L = center(G);
    phi = nontrivial_linear(L);
    expect = 1;
  } else {
    G = catalog::cyclic(6)->whole();
    L = sylow(G, 3);
    phi = nonrational_linear(L);
    expect = 2;
  }
  auto r = gallagher_check(G, phi);
  const bool ok = r.irr == expect && r.good == expect;
  return {{"pass", ok}, {"instances", 1}, {"irr", r.irr}, {"good", r.good}, {"expected", expect}};
}

json item_ramified(const Named& g) {
  auto G = g.make()->whole();
  bool ok = true;
  json scan = ramified_scan(G, ok);
  return {{"pass", ok}, {"group", g.name}, {"sections", scan["sections"]},
          {"fully_ramified", scan["fully_ramified"].size()}, {"instances", scan["fully_ramified"]}};
}

json item_magic54() {
  auto c = five_case("3^{1+2}:C2");
  auto five = make_five(c.g, c.k, c.phi, c.g);
  auto sols = magic_search(five, c.h);
  const FiniteGroup& G = c.g.group();
  int tau = -1;
  for (int x : c.h.elements())
    if (G.element_order(x) == 2) tau = x;

  // oracle: psi = (3-b) + b*sign on H/L = C2, kept when chi_H = psi xi matches Irr(G|theta) into Irr(H|phi)
  const auto quot = irr_of_quotient(c.h, c.l);
  const ClassFunction one = ClassFunction::trivial(c.h);
  const ClassFunction sign = quot[0] == one ? quot[1] : quot[0];
  const auto chis = irr_over(c.g, c.k, five.theta);
  const auto xis = irr_over(c.h, c.l, c.phi);
  std::set<ClassFunction> oracle;
  for (long b = 0; b <= 3; ++b) {
    ClassFunction psi = one * Cyclotomic(3 - b) + sign * Cyclotomic(b);
    std::set<ClassFunction> hit;
    for (const auto& chi : chis)
      for (const auto& xi : xis) {
        bool eq = true;
        for (int x : c.h.elements()) eq = eq && chi(x) == psi(x) * xi(x);
        if (eq) hit.insert(xi);
      }
    if (hit.size() == chis.size() && chis.size() == xis.size()) oracle.insert(psi);
  }
  std::set<ClassFunction> found;
  for (const auto& s : sols) found.insert(s.psi);

  auto check = [&](const ClassFunction& psi) {
    return psi.degree_int() == 3 && psi(tau) == Cyclotomic(-1) && field_of_values(psi) == rationals_field() &&
           determinantal_order(psi) == 1 && is_canonical(five, psi);
  };
  auto canon = canonical_select(sols, five);
  auto cop = coprime_select(sols, five);
  const bool ok = sols.size() == 2 && found == oracle && check(canon.psi) && check(cop.psi);
  json solutions = json::array();
  for (const auto& s : sols) solutions.push_back(to_json(s.psi));
  return {{"pass", ok}, {"solutions", solutions}, {"oracle_solutions", oracle.size()},
          {"canonical", to_json(canon.psi)}, {"coprime", to_json(cop.psi)}, {"psi_tau", canon.psi(tau).to_string()}};
}

json item_modulus(const std::string& name) {
  auto c = five_case(name);
  auto five = make_five(c.g, c.k, c.phi);
  auto sols = magic_search(five, c.h);
  bool ok = !sols.empty();
  json out = json::array();
  for (const auto& s : sols) {
    const bool lib = modulus_law(five, s.psi);
    const bool brute = modulus_oracle(c, s.psi);
    ok = ok && lib && brute;
    out.push_back({{"psi", to_json(s.psi)}, {"library", lib}, {"oracle", brute}});
  }
  return {{"pass", ok}, {"five", name}, {"n", five.n}, {"H", to_json(c.h)}, {"solutions", out}};
}

json item_correspondence(const std::string& name) {
  auto c = five_case(name);
  auto five = make_five(c.g, c.k, c.phi);
  auto psi = preferred_psi(five, magic_search(five, c.h));
  bool ok = true;
  json us = json::array();
  for (const auto& u : subgroups_between(c.g, c.k)) {
    auto fc = five_correspondence(five, c.h, psi, u);
    json e = {{"U", u.order()}, {"pairs", fc.pairs.size()}, {"checks", fc.checks}};
    ok = ok && fc.all_checks();
    if ((u.order() / c.l.order()) % 2 == 1) {
      auto par = parity_correspondence(five, c.h, u);
      const bool same = par.all_checks() && par.pairs == fc.pairs;
      e["parity_identical"] = same;
      ok = ok && same;
    }
    us.push_back(std::move(e));
  }
  return {{"pass", ok}, {"five", name}, {"psi", to_json(psi)}, {"intermediate", us}};
}

json item_complement(const std::string& name) {
  auto c = five_case(name);
  auto five = make_five(c.g, c.k, c.phi, c.g);
  auto h = find_complement(five, c.g);
  const bool product = join(h, c.k) == c.g;
  const bool meet = intersect(h, c.k) == c.l;
  auto cc = centralizer_mod(c.g, c.k, c.l);
  bool good = true;
  for (int x : intersect(h, cc).elements()) good = good && good_by_pairing(c.k, c.phi, x);
  // exhaustive: every complement, keep the good ones, compare classes
  std::set<Subgroup> classes;
  long all = 0;
  for (const auto& cand : complement_search(c.g, c.k, c.l, false)) {
    ++all;
    bool ok = true;
    for (int x : intersect(cand, cc).elements()) ok = ok && good_by_pairing(c.k, c.phi, x);
    if (ok) classes.insert(canonical_conjugate(c.g, cand));
  }
  auto lib = good_complements(five, c.g);
  const bool agree = classes == std::set<Subgroup>{canonical_conjugate(c.g, h)} &&
                     std::set<Subgroup>(lib.begin(), lib.end()) == classes;
  return {{"pass", product && meet && good && agree}, {"five", name}, {"H", to_json(h)},
          {"HK_is_G", product}, {"H_meet_K_is_L", meet}, {"good", good}, {"complements", all},
          {"good_classes", classes.size()}, {"agrees", agree}};
}

CoprimeSetup isaacs_setup(const std::string& name) {
  auto mk = [&](int a, GroupPtr n, const char* action) {
    return make_setup(semidirect_product(named_action(catalog::cyclic(a), std::move(n), action)), name);
  };
  if (name == "3^{1+2} with C2") return mk(2, catalog::extraspecial(3, 3), "inversion-mod-center");
  if (name == "3^{1+2} with C4") return mk(4, catalog::extraspecial(3, 3), "symplectic4");
  if (name == "5^{1+2} with C3") return mk(3, catalog::extraspecial(5, 5), "symplectic3");
  if (name == "C7 with C2") return mk(2, catalog::cyclic(7), "inversion");
  if (name == "Q8 with C3") return mk(3, catalog::quaternion8(), "q8-order3");
  fail(Errc::ParseError, "unknown setup " + name);
}

json item_isaacs(const std::string& name, int p) {
  auto s = isaacs_setup(name);
  auto b = isaacs_bijection(s);
  bool ok = b.all();
  json pairs = json::array();
  for (const auto& [chi, star] : b.pairs) {
    json e = {{"chi", to_json(chi)}, {"star", to_json(star)}};
    if (p > 0 && chi.degree_int() > 1) {
      // theta_phi -> phi, with (theta_Z, phi) = p
      const auto res = restrict_to(chi, s.c);
      const bool over = res == star * Cyclotomic(p) && inner_product_int(res, star) == p;
      e["theta_phi_to_phi"] = over;
      ok = ok && over && chi.degree_int() == p;
    }
    pairs.push_back(std::move(e));
  }
  if (p > 0) ok = ok && s.c == center(s.n) && static_cast<long>(b.pairs.size()) == p;
  return {{"pass", ok}, {"setup", name}, {"N", to_json(s.n)}, {"C", to_json(s.c)},
          {"checks", {{"bijective", b.bijective}, {"fields", b.fields}, {"galois", b.galois},
                      {"u_equivariant", b.u_equivariant}, {"degree_divides", b.degree_divides},
                      {"trace_independent", b.trace_independent}}},
          {"pairs", pairs}};
}

json item_even_order() {
  auto s = isaacs_setup("Q8 with C3");
  ClassFunction theta;
  for (const auto& chi : sorted_irr(s.n))
    if (chi.degree_int() == 2) theta = chi;
  std::string code = "none";
  bool hypothesis = false;
  try {
    isaacs_correspondent(s, theta);
  } catch (const Error& e) {
    code = std::string(errc_name(e.code()));
    hypothesis = error_class(e.code()) == ErrorClass::Hypothesis;
  }
  const Cyclotomic fs = frobenius_schur(theta);
  json fc = json::array();
  bool c_real = true;
  for (const auto& lam : sorted_irr(s.c)) {
    const Cyclotomic v = frobenius_schur(lam);
    fc.push_back(v.to_string());
    c_real = c_real && v == Cyclotomic(1);
  }
  const bool ok = code == "EvenOrder" && hypothesis && is_invariant(theta, s.a) && fs == Cyclotomic(-1) && c_real;
  return {{"pass", ok}, {"error", code}, {"frobenius_schur_theta", fs.to_string()}, {"frobenius_schur_C", fc},
          {"schur_index", "the invariant degree-2 character has Schur index 2 over Q; every character of C has index 1"}};
}

}  // namespace

json table_json(const Subgroup& h, bool& ok) {
  const ClassData& cd = class_data(h);
  json classes = json::array();
  for (int c = 0; c < cd.count(); ++c)
    classes.push_back({{"rep", cd.reps[c]}, {"size", cd.size(c)}, {"order", cd.rep_orders[c]}});
  json chars = json::array();
  auto irr = sorted_irr(h);
  for (const auto& chi : irr) chars.push_back(to_json(chi));
  const std::string audit = audit_table(character_table(h));
  ok = ok && audit.empty();
  return {{"order", h.order()}, {"classes", classes}, {"degrees", degrees_of(irr)}, {"characters", chars},
          {"audit", audit.empty() ? "ok" : audit}};
}

json ramified_scan(const Subgroup& g, bool& ok) {
  long sections = 0;
  json fr = json::array();
  const auto normals = normal_subgroups_between(g, g, g.group().trivial());
  for (const auto& k : normals)
    for (const auto& l : normals) {
      if (!k.contains(l)) continue;
      for (const auto& phi : sorted_irr(l)) {
        ++sections;
        for (const auto& theta : irr_over(k, l, phi))
          if (!ramification_conditions(k, phi, theta).agree()) ok = false;
        std::optional<FullyRamified> r;
        try {
          r = is_fully_ramified(k, phi);
        } catch (const Error&) {
          ok = false;
          continue;
        }
        if (!r || k == l) continue;
        const int e = section_exponent(k, l);
        const bool zeta = contains_root_of_unity(field_of_values(phi), e);
        ok = ok && zeta;
        fr.push_back({{"K", k.order()}, {"L", l.order()}, {"n", r->n}, {"phi", to_json(phi)},
                      {"abelian", l.contains(derived_subgroup(k))}, {"exponent", e}, {"zeta_in_field", zeta}});
      }
    }
  return {{"sections", sections}, {"fully_ramified", fr}};
}

const char* criterion_title(int c) {
  switch (c) {
    case 1: return "character-table exactness";
    case 2: return "form laws";
    case 3: return "Gallagher count";
    case 4: return "fully ramified equivalences";
    case 5: return "magic and canonical characters";
    case 6: return "five correspondence";
    case 7: return "complement construction";
    case 8: return "Isaacs correspondence";
    case 9: return "hypothesis discipline";
    case 10: return "determinism";
  }
  return "unknown";
}

std::vector<CorpusItem> corpus(const std::vector<int>& criteria) {
  std::vector<CorpusItem> items;
  const std::set<int> want(criteria.begin(), criteria.end());
  if (want.count(1))
    for (const auto& g : catalog_groups()) items.push_back({1, g.name, [g] { return item_table(g); }});
  if (want.count(2))
    for (const auto& g : small_corpus()) items.push_back({2, g.name, [g] { return item_form_laws(g); }});
  if (want.count(3)) {
    items.push_back({3, "Q8/Z", [] { return item_gallagher_named("Q8/Z"); }});
    items.push_back({3, "C6/C3", [] { return item_gallagher_named("C6/C3"); }});
    for (const auto& g : small_corpus()) items.push_back({3, g.name, [g] { return item_gallagher(g); }});
  }
  if (want.count(4))
    for (const auto& g : catalog_groups()) items.push_back({4, g.name, [g] { return item_ramified(g); }});
  if (want.count(5)) {
    items.push_back({5, "magic 3^{1+2}:C2", [] { return item_magic54(); }});
    for (const auto& f : five_names()) items.push_back({5, "modulus " + f, [f] { return item_modulus(f); }});
  }
  if (want.count(6))
    for (const auto& f : five_names()) items.push_back({6, f, [f] { return item_correspondence(f); }});
  if (want.count(7))
    for (const char* f : {"SL(2,3)", "3^{1+2}:C2"})
      items.push_back({7, f, [f = std::string(f)] { return item_complement(f); }});
  if (want.count(8)) {
    items.push_back({8, "3^{1+2} with C2", [] { return item_isaacs("3^{1+2} with C2", 3); }});
    items.push_back({8, "3^{1+2} with C4", [] { return item_isaacs("3^{1+2} with C4", 3); }});
    items.push_back({8, "5^{1+2} with C3", [] { return item_isaacs("5^{1+2} with C3", 5); }});
    items.push_back({8, "C7 with C2", [] { return item_isaacs("C7 with C2", 0); }});
  }
  if (want.count(9)) items.push_back({9, "Q8 with C3", [] { return item_even_order(); }});
  return items;
}

std::vector<ItemResult> run_items(const std::vector<CorpusItem>& items, int threads) {
  std::vector<ItemResult> out(items.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < items.size(); i = next++) {
      ItemResult& r = out[i];
      r.criterion = items[i].criterion;
      r.name = items[i].name;
      Stopwatch sw;
      try {
        r.detail = items[i].run();
        r.pass = r.detail.value("pass", false);
      } catch (const std::exception& e) {
        r.detail = {{"pass", false}, {"error", e.what()}};
        r.pass = false;
      }
      r.ms = sw.ms();
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

bool criterion_pass(int c, const std::vector<ItemResult>& results) {
  bool any = false, ok = true;
  long instances = 0;
  for (const auto& r : results) {
    if (r.criterion != c) continue;
    any = true;
    ok = ok && r.pass;
    if (r.detail.contains("instances") && r.detail["instances"].is_number()) instances += r.detail["instances"].get<long>();
  }
  if (c == 3) ok = ok && instances >= 10;
  return any && ok;
}

Report verify_report(const std::vector<ItemResult>& results, int threads, bool with_timing, double total_ms) {
  Report rep;
  rep.command = "verify";
  rep.args = {{"threads", threads}};
  json criteria = json::array();
  json timing_items = json::object();
  for (int c = 1; c <= kCriteria; ++c) {
    json items = json::array();
    bool any = false;
    for (const auto& r : results) {
      if (r.criterion != c) continue;
      any = true;
      items.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      timing_items[std::to_string(c) + ": " + r.name] = r.ms;
    }
    if (!any) continue;
    const bool pass = criterion_pass(c, results);
    criteria.push_back({{"id", c}, {"title", criterion_title(c)}, {"pass", pass}, {"items", items}});
    rep.verification["criterion_" + std::to_string(c)] = pass;
  }
  rep.result = {{"criteria", criteria}, {"items", results.size()}};
  rep.notes.push_back("Schur-index preservation is not machine-checked; field of values and Galois equivariance are.");
  if (with_timing) rep.timing = json{{"total_ms", total_ms}, {"items_ms", timing_items}};
  return rep;
}

}  // namespace fgct::tools
