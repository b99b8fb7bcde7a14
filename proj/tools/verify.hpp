#pragma once

#include <functional>
#include <string>
#include <vector>

#include "report.hpp"

namespace fgct::tools {

/// One unit of corpus work. `run` returns the item's details and must set
/// "pass"; exceptions count as failures.
struct CorpusItem {
  int criterion = 0;
  std::string name;
  std::function<json()> run;
};

struct ItemResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  json detail;
  double ms = 0;
};

inline constexpr int kCriteria = 9;  // the tenth, determinism, is a property of the report itself

const char* criterion_title(int c);

/// The shipped corpus for the given criteria (1..9), in a fixed order.
std::vector<CorpusItem> corpus(const std::vector<int>& criteria);

/// Runs items on a pool of `threads` workers; results come back in item order.
std::vector<ItemResult> run_items(const std::vector<CorpusItem>& items, int threads);

/// Whether criterion c holds given its items (some criteria also check totals).
bool criterion_pass(int c, const std::vector<ItemResult>& results);

Report verify_report(const std::vector<ItemResult>& results, int threads, bool with_timing, double total_ms);

}  // namespace fgct::tools

namespace fgct::tools {

/// Fully ramified scan over K, L normal in G and phi in Irr(L): the three
/// characterizations per theta over phi, and zeta_e in Q(phi) for each fully
/// ramified instance. Sets `ok` to false on any disagreement.
json ramified_scan(const Subgroup& g, bool& ok);

/// The table of H with classes, sorted characters and the orthogonality audit.
json table_json(const Subgroup& h, bool& ok);

}  // namespace fgct::tools
