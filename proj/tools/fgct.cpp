// fgct: command-line front end for the character-theory library.
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "fgct/error.hpp"
#include "job.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace fgct;
using namespace fgct::tools;

namespace {

struct Options {
  std::string group, sub = "whole", base, phi, k, h, control, chi;
  std::string n, a, action = "trivial";
  std::string format = "json";
  int acting_power = 1;
  int threads = 0;
  bool no_timing = false;
  bool pretty = false;
};

struct Ambient {
  Subgroup g;
  std::map<std::string, Subgroup> named;
};

Ambient ambient(const Options& o) {
  return {load_group_spec(o.group)->whole(), {}};
}

ClassFunction base_character(const Ambient& am, const Options& o, Subgroup& l) {
  l = select_subgroup(am.g, o.base, am.named);
  return select_character(l, o.phi.empty() ? "0" : o.phi);
}

void cmd_table(const Options& o, Report& rep) {
  auto am = ambient(o);
  Subgroup h = select_subgroup(am.g, o.sub, am.named);
  bool ok = true;
  rep.result = table_json(h, ok);
  rep.verification["orthogonality"] = ok;
}

void print_tsv(const json& table) {
  std::cout << "class";
  for (const auto& c : table["classes"]) std::cout << '\t' << c["rep"].get<int>();
  std::cout << "\nsize";
  for (const auto& c : table["classes"]) std::cout << '\t' << c["size"].get<int>();
  std::cout << "\norder";
  for (const auto& c : table["classes"]) std::cout << '\t' << c["order"].get<int>();
  std::cout << '\n';
  int i = 0;
  for (const auto& chi : table["characters"]) {
    std::cout << "X." << i++;
    for (const auto& v : chi["values"]) std::cout << '\t' << v.get<std::string>();
    std::cout << '\n';
  }
}

void cmd_form(const Options& o, Report& rep) {
  auto am = ambient(o);
  Subgroup l;
  ClassFunction phi = base_character(am, o, l);
  Subgroup s = select_subgroup(am.g, o.sub, am.named);
  require(is_invariant(phi, s), Errc::NotInvariant, "phi is not invariant in the ambient subgroup");
  FormTable form(s, phi);
  std::vector<int> reps;
  for (int x : s.elements())
    if (l.coset_min(x) == x) reps.push_back(x);
  json grid = json::array();
  for (int x : reps) {
    json row = json::array();
    for (int y : reps) row.push_back(form.defined(x, y) ? to_json(form(x, y)) : json(nullptr));
    grid.push_back(std::move(row));
  }
  auto laws = form_law_audit(s, phi);
  rep.result = {{"S", to_json(s)}, {"L", to_json(l)}, {"phi", to_json(phi)}, {"representatives", reps}, {"values", grid}};
  rep.verification = {{"bilinear", laws.bilinear},       {"alternating", laws.alternating},
                      {"inverse", laws.inverse},         {"coset", laws.coset},
                      {"conjugation", laws.conjugation}, {"galois", laws.galois}};
}

void cmd_good(const Options& o, Report& rep) {
  auto am = ambient(o);
  Subgroup l;
  ClassFunction phi = base_character(am, o, l);
  require(is_invariant(phi, am.g), Errc::NotInvariant, "phi is not invariant in G");
  json classes = json::array();
  for (const auto& c : good_classes(am.g, phi)) classes.push_back({{"rep", c.rep}, {"cosets", c.cosets}});
  auto cnt = gallagher_check(am.g, phi);
  rep.result = {{"L", to_json(l)}, {"phi", to_json(phi)}, {"good_classes", classes},
                {"irr_over_phi", cnt.irr}, {"good_count", cnt.good}};
  rep.verification["gallagher"] = cnt.equal();
}

void cmd_ramified(const Options& o, Report& rep) {
  auto am = ambient(o);
  bool ok = true;
  rep.result = ramified_scan(am.g, ok);
  rep.verification["characterizations_agree_and_roots_of_unity"] = ok;
}

void cmd_five(const Options& o, Report& rep) {
  auto am = ambient(o);
  Subgroup k = select_subgroup(am.g, o.k.empty() ? "whole" : o.k, am.named);
  Subgroup l;
  ClassFunction phi = base_character(am, o, l);
  std::optional<Subgroup> control;
  if (!o.control.empty()) control = select_subgroup(am.g, o.control, am.named);
  auto five = make_five(am.g, k, phi, control);
  Subgroup h = o.h.empty() ? find_complement(five, control ? *control : am.g) : select_subgroup(am.g, o.h, am.named);
  auto sols = magic_search(five, h);
  json magic = json::array();
  bool modulus = true;
  for (const auto& s : sols) {
    const bool law = modulus_law(five, s.psi);
    modulus = modulus && law;
    magic.push_back({{"psi", to_json(s.psi)}, {"det_order", s.det_order}, {"rational", s.rational},
                     {"canonical", s.canonical}, {"modulus_law", law}});
  }
  rep.result = {{"G", to_json(am.g)}, {"K", to_json(k)}, {"L", to_json(l)}, {"H", to_json(h)},
                {"theta", to_json(five.theta)}, {"phi", to_json(phi)}, {"n", five.n}, {"magic", magic}};
  rep.verification["modulus_law"] = modulus;
  rep.verification["magic_nonempty"] = !sols.empty();
  std::optional<ClassFunction> psi;
  if (five.odd_kl) {
    psi = canonical_select(sols, five).psi;
    rep.result["selected_by"] = "canonical";
  } else if (five.coprime) {
    psi = coprime_select(sols, five).psi;
    rep.result["selected_by"] = "coprime";
  }
  if (!psi) {
    rep.notes.push_back("no canonical or coprime selection applies; correspondences not computed");
    return;
  }
  rep.result["psi"] = to_json(*psi);
  json corr = json::array();
  bool ok = true;
  for (const auto& u : subgroups_between(am.g, k)) {
    auto fc = five_correspondence(five, h, *psi, u);
    ok = ok && fc.all_checks();
    json e = {{"U", to_json(u)}, {"pairs", to_json(fc.pairs)}, {"checks", fc.checks}};
    if ((u.order() / l.order()) % 2 == 1) {
      auto par = parity_correspondence(five, h, u);
      e["parity_identical"] = par.pairs == fc.pairs;
      ok = ok && par.all_checks() && par.pairs == fc.pairs;
    }
    corr.push_back(std::move(e));
  }
  rep.result["correspondences"] = corr;
  rep.verification["correspondences"] = ok;
}

CoprimeSetup setup_from(const Options& o) {
  GroupPtr n = load_group_spec(o.n);
  GroupPtr a = load_group_spec(o.a);
  auto sd = semidirect_product(load_action(a, n, o.action));
  if (o.acting_power == 1) return make_setup(sd, "cli");
  require(o.acting_power > 0, Errc::ParseError, "--acting-power must be positive");
  require(!sd.a.generators().empty(), Errc::ParseError, "--acting-power needs a nontrivial A");
  require(sd.a.generators().size() == 1, Errc::ParseError, "--acting-power needs a cyclic A");
  const int x = sd.group->power(sd.a.generators()[0], o.acting_power);
  return make_setup(sd.group->whole(), sd.n, closure(*sd.group, std::span<const int>(&x, 1)), "cli");
}

std::vector<ClassFunction> chosen(const CoprimeSetup& s, const Options& o) {
  if (o.chi.empty()) return invariant_irr(s);
  return {select_character(s.n, o.chi)};
}

void cmd_isaacs(const Options& o, Report& rep) {
  auto s = setup_from(o);
  json pairs = json::array();
  for (const auto& chi : chosen(s, o)) {
    auto r = isaacs_correspondent(s, chi);
    pairs.push_back({{"chi", to_json(chi)}, {"star", to_json(r.star)}, {"trace", to_json(r.trace)}});
  }
  rep.result = {{"N", to_json(s.n)}, {"A", to_json(s.a)}, {"C", to_json(s.c)}, {"pairs", pairs}};
  if (o.chi.empty()) {
    auto b = isaacs_bijection(s);
    rep.verification = {{"bijective", b.bijective},           {"fields", b.fields},
                        {"galois", b.galois},                 {"u_equivariant", b.u_equivariant},
                        {"degree_divides", b.degree_divides}, {"trace_independent", b.trace_independent}};
  } else {
    rep.verification["trace_independent"] = verify_trace_independence(s, chosen(s, o)[0]);
  }
  rep.notes.push_back("Schur-index preservation is not machine-checked; field of values and Galois equivariance are.");
}

void cmd_above(const Options& o, Report& rep) {
  auto s = setup_from(o);
  json out = json::array();
  bool ok = true;
  for (const auto& chi : chosen(s, o)) {
    auto r = above_correspondence(s, chi);
    ok = ok && r.all();
    out.push_back({{"chi", to_json(chi)}, {"star", to_json(r.star)}, {"domain", r.domain}, {"codomain", r.codomain},
                   {"pairs", to_json(r.pairs)}});
  }
  rep.result = {{"G", to_json(s.g)}, {"A", to_json(s.a)}, {"U", to_json(s.u)}, {"above", out}};
  rep.verification["bijective_constant_ratio_fields"] = ok;
}

int emit(const Report& rep, bool pretty) {
  std::cout << rep.to_json().dump(pretty ? 2 : -1) << '\n';
  return rep.verified() ? 0 : 3;
}

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Usage: return 1;
    case ErrorClass::Hypothesis: return 2;
    case ErrorClass::Theorem: return 3;
  }
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character theory of fully ramified sections and the Isaacs correspondence"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group,-g", o.group, "group spec (JSON or catalog shorthand)")->required();
  };
  auto add_phi = [&](CLI::App* c) {
    c->add_option("--base,-l", o.base, "subgroup L carrying phi")->required();
    c->add_option("--phi", o.phi, "character of L: index or degree=,conductor=,nth= filters");
  };

  auto* table = app.add_subcommand("table", "character table");
  add_group(table);
  table->add_option("--subgroup", o.sub, "subgroup selector");
  table->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* form = app.add_subcommand("form", "pairing values over a grid of coset representatives");
  add_group(form);
  add_phi(form);
  form->add_option("--ambient", o.sub, "subgroup S in which phi is invariant");

  auto* good = app.add_subcommand("good", "good classes and the Gallagher count");
  add_group(good);
  add_phi(good);

  auto* ram = app.add_subcommand("ramified", "fully ramified scan over normal sections");
  add_group(ram);

  auto* five = app.add_subcommand("five", "character five, magic characters and correspondences");
  add_group(five);
  add_phi(five);
  five->add_option("--k,-k", o.k, "normal subgroup K");
  five->add_option("--complement", o.h, "complement H (default: constructed)");
  five->add_option("--control", o.control, "normal subgroup N for strong control");

  auto add_setup = [&](CLI::App* c) {
    c->add_option("--n", o.n, "group N")->required();
    c->add_option("--a", o.a, "acting group A")->required();
    c->add_option("--action", o.action, "named action or {\"images\": [...]}");
    c->add_option("--chi", o.chi, "one character of N (default: all A-invariant ones)");
  };
  auto* isaacs = app.add_subcommand("isaacs", "Isaacs correspondence with traces");
  add_setup(isaacs);
  auto* above = app.add_subcommand("above", "correspondence between characters above chi and chi*");
  add_setup(above);
  above->add_option("--acting-power", o.acting_power, "act by the subgroup generated by a^k inside N x| A");

  auto* verify = app.add_subcommand("verify", "run the acceptance corpus");
  verify->add_option("--threads,-j", o.threads, "worker threads (default: hardware concurrency)");
  verify->add_flag("--no-timing", o.no_timing, "omit the timing block");

  app.add_flag("--pretty", o.pretty, "indent JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  Report rep;
  rep.command = app.get_subcommands().front()->get_name();
  rep.args = json::array();
  for (int i = 1; i < argc; ++i) rep.args.push_back(argv[i]);
  Stopwatch sw;
  try {
    if (rep.command == "table") cmd_table(o, rep);
    else if (rep.command == "form") cmd_form(o, rep);
    else if (rep.command == "good") cmd_good(o, rep);
    else if (rep.command == "ramified") cmd_ramified(o, rep);
    else if (rep.command == "five") cmd_five(o, rep);
    else if (rep.command == "isaacs") cmd_isaacs(o, rep);
    else if (rep.command == "above") cmd_above(o, rep);
    else if (rep.command == "verify") {
      const int threads = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
      std::vector<int> all;
      for (int c = 1; c <= kCriteria; ++c) all.push_back(c);
      auto results = run_items(corpus(all), threads);
      rep = verify_report(results, threads, !o.no_timing, sw.ms());
      rep.args = json::array();
      for (int i = 1; i < argc; ++i) rep.args.push_back(argv[i]);
      return emit(rep, o.pretty);
    }
  } catch (const Error& e) {
    std::cerr << "fgct: " << e.what() << '\n';
    if (error_class(e.code()) != ErrorClass::Usage) {
      json err = {{"schema", kSchema}, {"tool", "fgct"}, {"version", kVersion}, {"command", rep.command},
                  {"args", rep.args},  {"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
      std::cout << err.dump(o.pretty ? 2 : -1) << '\n';
    }
    return exit_code(error_class(e.code()));
  } catch (const std::exception& e) {
    std::cerr << "fgct: " << e.what() << '\n';
    return 3;
  }
  if (rep.command == "table" && o.format == "tsv") {
    print_tsv(rep.result);
    return rep.verified() ? 0 : 3;
  }
  if (!o.no_timing) rep.timing = json{{"total_ms", sw.ms()}};
  return emit(rep, o.pretty);
}
