#include "report.hpp"

namespace fgct::tools {

json to_json(const Cyclotomic& x) { return x.to_string(); }

json to_json(const NumberFieldDescriptor& f) {
  return {{"conductor", f.conductor}, {"degree", f.degree()}};
}

json to_json(const Subgroup& h) {
  return {{"order", h.order()}, {"generators", h.generators()}};
}

json to_json(const ClassFunction& chi) {
  json values = json::array();
  for (const auto& v : chi.values()) values.push_back(to_json(v));
  return {{"degree", chi.degree_int()}, {"field", to_json(field_of_values(chi))}, {"values", values}};
}

json to_json(const CharacterPairs& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({{"from", to_json(a)}, {"to", to_json(b)}});
  return out;
}

json to_json(const CorrespondenceTrace& trace) {
  json steps = json::array();
  for (const auto& st : trace.steps) {
    json s = {{"tag", step_tag_name(st.tag)},
              {"depth", st.depth},
              {"groups", {{"G", to_json(st.g)}, {"K", to_json(st.k)}, {"L", to_json(st.l)}, {"H", to_json(st.h)}}},
              {"theta", {{"degree", st.theta.degree_int()}, {"field", to_json(field_of_values(st.theta))}}},
              {"phi", {{"degree", st.phi.degree_int()}, {"field", to_json(field_of_values(st.phi))}}},
              {"input_degree", st.input.degree_int()},
              {"output_degree", st.output.degree_int()},
              {"factor", st.factor}};
    if (st.psi) s["psi"] = to_json(*st.psi);
    if (st.parity_agrees) s["parity_agrees"] = *st.parity_agrees;
    steps.push_back(std::move(s));
  }
  return {{"initial_degree", trace.initial.degree_int()},
          {"final_degree", trace.final.degree_int()},
          {"ratio", trace.ratio()},
          {"steps", steps}};
}

bool Report::verified() const {
  for (const auto& [k, v] : verification.items())
    if (!v.is_boolean() || !v.get<bool>()) return false;
  return true;
}

json Report::to_json() const {
  json out = {{"schema", kSchema},
              {"tool", "fgct"},
              {"version", kVersion},
              {"command", command},
              {"args", args},
              {"result", result},
              {"verification", verification}};
  if (!notes.empty()) out["notes"] = notes;
  if (timing) out["timing"] = *timing;
  return out;
}

}  // namespace fgct::tools
