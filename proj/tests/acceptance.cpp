// One line per acceptance criterion; exits nonzero if any fails.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>

#include "verify.hpp"

using namespace fgct::tools;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run spawn(const std::string& cmd) {
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

double limit_seconds(int c) {
  switch (c) {
    case 1: return 30;
    case 2:
    case 3:
    case 5: return 60;
    case 8: return 300;
  }
  return 0;
}

bool line(int c, bool pass, const std::string& detail) {
  std::cout << "criterion " << c << " " << (pass ? "PASS" : "FAIL") << " " << criterion_title(c) << ": " << detail
            << std::endl;
  return pass;
}

}  // namespace

int main() {
  const int threads = std::max(1u, std::thread::hardware_concurrency());
  const std::string cli = FGCT_CLI;
  bool all = true;

  for (int c = 1; c <= kCriteria; ++c) {
    Stopwatch sw;
    auto results = run_items(corpus({c}), threads);
    const double secs = sw.ms() / 1000.0;
    bool pass = criterion_pass(c, results);
    long failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::ostringstream d;
    d << results.size() << " items, " << failed << " failed, " << secs << " s";
    if (const double lim = limit_seconds(c); lim > 0) {
      d << " (limit " << lim << " s)";
      pass = pass && secs < lim;
    }
    if (c == 9) {
      auto r = spawn(cli + " isaacs --n " + quote(R"({"catalog":{"name":"quaternion8"}})") +
                     " --a cyclic3 --action q8-order3 2>/dev/null");
      d << "; CLI exit " << r.status << " (expected 2)";
      pass = pass && r.status == 2 && r.out.find("EvenOrder") != std::string::npos;
    }
    all = line(c, pass, d.str()) && all;
  }

  // determinism: two consecutive runs, timing block removed
  Stopwatch sw;
  auto first = spawn(cli + " verify");
  auto second = spawn(cli + " verify");
  bool same = false;
  std::string why;
  try {
    json a = json::parse(first.out), b = json::parse(second.out);
    const bool timed = a.contains("timing") && b.contains("timing");
    a.erase("timing");
    b.erase("timing");
    same = timed && first.status == 0 && second.status == 0 && a.dump() == b.dump();
    why = std::to_string(a.dump().size()) + " bytes each";
  } catch (const std::exception& e) {
    why = e.what();
  }
  std::ostringstream d;
  d << "two verify runs " << (same ? "identical" : "differ") << " without timing, " << why << ", exits "
    << first.status << "/" << second.status << ", " << sw.ms() / 1000.0 << " s";
  all = line(10, same, d.str()) && all;
  return all ? 0 : 1;
}
