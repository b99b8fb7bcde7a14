#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fgct/isaacs.hpp"

namespace fgct::tools {

using json = nlohmann::json;

/// A group from a JSON spec or a catalog shorthand:
///   {"catalog": {"name": "extraspecial", "p": 3, "exp": 3}}
///   {"permutations": {"degree": 3, "generators": ["(0 1 2)", "(0 1)"]}}
///   {"cayley": [[0, 1], [1, 0]]}
///   "cyclic6", "Q8", "sl2_3"
/// Malformed input is a ParseError.
GroupPtr load_group_spec(std::string_view text);
GroupPtr load_group_json(const json& spec);

/// A named action shortcut, or {"images": [[...], ...]}: for each generator of A,
/// the images of the generators of N.
GroupAction load_action(GroupPtr a, GroupPtr n, std::string_view text);

/// Subgroup selectors: "whole", "trivial", "center", "derived", "sylowP",
/// a name bound in `named`, or a JSON list of element indices (their closure).
Subgroup select_subgroup(const Subgroup& g, std::string_view text,
                         const std::map<std::string, Subgroup>& named = {});

/// Character selectors over the sorted table of H: a table index, or
/// comma-separated filters degree=d, conductor=c, nth=i. The filters must
/// leave exactly one character (after nth).
ClassFunction select_character(const Subgroup& h, std::string_view text);

}  // namespace fgct::tools
