#include "job.hpp"

#include <algorithm>
#include <charconv>

#include "fgct/error.hpp"

namespace fgct::tools {

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

int to_int(std::string_view s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) fail(Errc::ParseError, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

template <class T>
T field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    fail(Errc::ParseError, std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

GroupPtr load_group_spec(std::string_view text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '"')) return load_group_json(parse_json(text));
  return from_catalog(parse_catalog_name(text));
}

GroupPtr load_group_json(const json& spec) {
  if (spec.is_string()) return from_catalog(parse_catalog_name(spec.get<std::string>()));
  require(spec.is_object() && spec.size() == 1, Errc::ParseError,
          "group spec must be an object with one of catalog, permutations, cayley");
  try {
    if (spec.contains("catalog")) {
      const json& c = spec.at("catalog");
      if (c.is_string()) return from_catalog(parse_catalog_name(c.get<std::string>()));
      CatalogSpec cs;
      cs.name = field<std::string>(c, "name", "");
      cs.n = field<int>(c, "n", 0);
      cs.p = field<int>(c, "p", 0);
      cs.exp = field<int>(c, "exp", 0);
      if (cs.name != "extraspecial" && cs.name != "quaternion8" && cs.name != "sl2_3" && cs.n == 0)
        return from_catalog(parse_catalog_name(cs.name));
      return from_catalog(cs);
    }
    if (spec.contains("permutations")) {
      const json& p = spec.at("permutations");
      const int degree = field<int>(p, "degree", 0);
      require(degree > 0, Errc::ParseError, "permutation degree must be positive");
      std::vector<Perm> gens;
      for (const auto& g : p.at("generators")) {
        if (g.is_string()) {
          gens.push_back(parse_cycles(g.get<std::string>(), degree));
        } else {
          gens.push_back(g.get<Perm>());
        }
      }
      return from_permutations(gens, degree, field<std::string>(p, "name", ""));
    }
    if (spec.contains("cayley")) return from_cayley(spec.at("cayley").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad group spec: ") + e.what());
  }
  fail(Errc::ParseError, "group spec must be an object with one of catalog, permutations, cayley");
}

GroupAction load_action(GroupPtr a, GroupPtr n, std::string_view text) {
  if (text.empty() || text.front() != '{') return named_action(std::move(a), std::move(n), text);
  json spec = parse_json(text);
  std::vector<Perm> images;
  try {
    for (const auto& row : spec.at("images")) {
      auto im = row.get<std::vector<int>>();
      images.push_back(automorphism_from_images(*n, n->generators(), im));
    }
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("bad action spec: ") + e.what());
  }
  return GroupAction::from_generators(a, n, a->generators(), images);
}

Subgroup select_subgroup(const Subgroup& g, std::string_view text, const std::map<std::string, Subgroup>& named) {
  if (auto it = named.find(std::string(text)); it != named.end()) return it->second;
  if (text == "whole") return g;
  if (text == "trivial") return g.group().trivial();
  if (text == "center") return center(g);
  if (text == "derived") return derived_subgroup(g);
  if (text.starts_with("sylow")) return sylow(g, to_int(text.substr(5), "prime"));
  if (!text.empty() && text.front() == '[') {
    std::vector<int> seeds;
    try {
      seeds = parse_json(text).get<std::vector<int>>();
    } catch (const json::exception& e) {
      fail(Errc::ParseError, std::string("bad element list: ") + e.what());
    }
    for (int x : seeds) require(g.contains(x), Errc::NotSubgroup, "element " + std::to_string(x) + " is outside the group");
    return closure(g.group(), seeds);
  }
  fail(Errc::ParseError, "unknown subgroup selector '" + std::string(text) + "'");
}

ClassFunction select_character(const Subgroup& h, std::string_view text) {
  auto irr = character_table(h).irr();
  std::sort(irr.begin(), irr.end());
  if (!text.empty() && text.find('=') == std::string_view::npos) {
    const int i = to_int(text, "character index");
    require(i >= 0 && i < static_cast<int>(irr.size()), Errc::ParseError, "character index out of range");
    return irr[i];
  }
  int nth = -1;
  std::vector<ClassFunction> keep = irr;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    const size_t eq = item.find('=');
    require(eq != std::string_view::npos, Errc::ParseError, "bad character filter '" + std::string(item) + "'");
    std::string_view key = item.substr(0, eq);
    const int v = to_int(item.substr(eq + 1), "filter value");
    if (key == "degree") {
      std::erase_if(keep, [&](const ClassFunction& c) { return c.degree_int() != v; });
    } else if (key == "conductor") {
      std::erase_if(keep, [&](const ClassFunction& c) { return field_of_values(c).conductor != v; });
    } else if (key == "nth") {
      nth = v;
    } else {
      fail(Errc::ParseError, "unknown character filter '" + std::string(key) + "'");
    }
    pos = end + 1;
  }
  if (nth >= 0) {
    require(nth < static_cast<int>(keep.size()), Errc::ParseError, "nth is out of range for the filtered characters");
    return keep[nth];
  }
  require(keep.size() == 1, Errc::ParseError,
          "character selector matches " + std::to_string(keep.size()) + " characters; add nth=i");
  return keep[0];
}

}  // namespace fgct::tools
