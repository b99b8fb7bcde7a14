#include "fgct/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "fgct/cyclotomic.hpp"
#include "fgct/error.hpp"

namespace fgct {

int order_cap() {
  if (const char* env = std::getenv("FGCT_ORDER_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 2000;
}

static void check_cap(long order, const std::string& what) {
  if (order > order_cap())
    fail(Errc::OrderCapExceeded, what + " has order " + std::to_string(order) + " > cap " +
                                     std::to_string(order_cap()));
}

// --- permutations ---------------------------------------------------------

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

Perm parse_cycles(std::string_view text, int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<char> seen(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::ParseError, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) fail(Errc::ParseError, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) fail(Errc::ParseError, "bad point in cycle notation: " + std::string(text));
      int v = std::stoi(std::string(text.substr(i, j - i)));
      if (v >= degree) fail(Errc::ParseError, "point " + std::to_string(v) + " exceeds degree");
      if (seen[v]) fail(Errc::ParseError, "point " + std::to_string(v) + " repeated");
      seen[v] = 1;
      cycle.push_back(v);
      i = j;
    }
    for (size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

// --- FiniteGroup ----------------------------------------------------------

GroupPtr FiniteGroup::make(Init init) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  const int n = init.order;
  g->n_ = n;
  g->table_ = std::move(init.table);
  g->name_ = std::move(init.name);
  g->gens_ = std::move(init.generators);
  g->perms_ = std::move(init.perms);
  // identity: the x with x*x = x
  for (int x = 0; x < n; ++x)
    if (g->mul(x, x) == x) {
      g->e_ = x;
      break;
    }
  g->inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (g->inv_[x] >= 0) continue;
    for (int y = 0; y < n; ++y)
      if (g->mul(x, y) == g->e_) {
        g->inv_[x] = y;
        g->inv_[y] = x;
        break;
      }
  }
  g->ord_.assign(n, 0);
  g->exp_ = 1;
  for (int x = 0; x < n; ++x) {
    int k = 1;
    for (int y = x; y != g->e_; y = g->mul(y, x)) ++k;
    g->ord_[x] = (x == g->e_) ? 1 : k;
    g->exp_ = static_cast<int>(nt::lcm(g->exp_, g->ord_[x]));
  }
  if (g->gens_.empty() && n > 1) {
    // greedy generating set
    std::vector<char> in(n, 0);
    in[g->e_] = 1;
    std::vector<int> elems{g->e_};
    for (int x = 0; x < n; ++x) {
      if (in[x]) continue;
      g->gens_.push_back(x);
      elems.assign(1, g->e_);
      std::fill(in.begin(), in.end(), 0);
      in[g->e_] = 1;
      for (size_t i = 0; i < elems.size(); ++i)
        for (int s : g->gens_) {
          int y = g->mul(elems[i], s);
          if (!in[y]) {
            in[y] = 1;
            elems.push_back(y);
          }
        }
    }
  }
  return g;
}

int FiniteGroup::power(int a, long k) const {
  long o = ord_[a];
  k = nt::mod(k, o);
  int r = e_;
  int base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

Subgroup FiniteGroup::intern(std::vector<int> sorted) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = interned_.find(sorted);
  if (it != interned_.end()) return Subgroup(shared_from_this(), it->second);
  auto d = std::make_shared<SubgroupData>();
  d->mask.assign(n_, 0);
  for (int x : sorted) d->mask[x] = 1;
  d->elements = sorted;
  interned_.emplace(std::move(sorted), d);
  return Subgroup(shared_from_this(), d);
}

Subgroup FiniteGroup::whole() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return intern(std::move(all));
}

Subgroup FiniteGroup::trivial() const { return intern({e_}); }

// --- Subgroup -------------------------------------------------------------

bool Subgroup::contains(const Subgroup& s) const {
  if (s.order() > order()) return false;
  for (int x : s.elements())
    if (!contains(x)) return false;
  return true;
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() <=> b.order();
  const auto& x = a.elements();
  const auto& y = b.elements();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

static std::vector<int> bfs_closure(const FiniteGroup& g, const std::vector<int>& start, std::span<const int> seeds,
                                    std::vector<char>& in) {
  std::vector<int> elems = start;
  for (int x : elems) in[x] = 1;
  if (!in[g.identity()]) {
    in[g.identity()] = 1;
    elems.push_back(g.identity());
  }
  for (size_t i = 0; i < elems.size(); ++i)
    for (int s : seeds) {
      int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  return elems;
}

const std::vector<int>& Subgroup::generators() const {
  std::call_once(d_->gens_once, [this] {
    const FiniteGroup& g = *g_;
    std::vector<char> in(g.order(), 0);
    std::vector<int> gens;
    std::vector<int> cur{g.identity()};
    in[g.identity()] = 1;
    for (int x : d_->elements) {
      if (in[x]) continue;
      gens.push_back(x);
      cur = bfs_closure(g, cur, gens, in);
    }
    d_->gens = std::move(gens);
  });
  return d_->gens;
}

int Subgroup::coset_min(int x) const {
  std::call_once(d_->cosets_once, [this] {
    const FiniteGroup& g = *g_;
    std::vector<int> cm(g.order(), -1);
    for (int y = 0; y < g.order(); ++y) {
      if (cm[y] >= 0) continue;
      int m = y;
      for (int s : d_->elements) m = std::min(m, g.mul(s, y));
      for (int s : d_->elements) cm[g.mul(s, y)] = m;
    }
    d_->coset_min = std::move(cm);
  });
  return d_->coset_min[x];
}

// --- construction ---------------------------------------------------------

GroupPtr from_cayley(const std::vector<std::vector<int>>& rows, std::string name) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) fail(Errc::NoIdentity, "empty table");
  check_cap(n, "Cayley table");
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) fail(Errc::ParseError, "Cayley table is not square");
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n) fail(Errc::ParseError, "Cayley table entry out of range");
      t[static_cast<size_t>(a) * n + b] = v;
    }
  }
  auto mul = [&](int a, int b) { return t[static_cast<size_t>(a) * n + b]; };
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) ok = mul(x, y) == y && mul(y, x) == y;
    if (ok) e = x;
  }
  if (e < 0) fail(Errc::NoIdentity, "no two-sided identity");
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y) found = mul(x, y) == e && mul(y, x) == e;
    if (!found) fail(Errc::NoInverse, "element " + std::to_string(x) + " has no inverse");
  }
  // Light's test: checking (x g) y = x (g y) for g in a generating set suffices
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  std::vector<int> reached{e};
  in[e] = 1;
  for (int x = 0; x < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (size_t i = 0; i < reached.size(); ++i)
      for (int s : gens) {
        for (int y : {mul(reached[i], s), mul(s, reached[i])}) {
          if (!in[y]) {
            in[y] = 1;
            reached.push_back(y);
          }
        }
      }
  }
  for (int gmid : gens)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (mul(mul(x, gmid), y) != mul(x, mul(gmid, y)))
          fail(Errc::NonAssociative, "(" + std::to_string(x) + "," + std::to_string(gmid) + "," +
                                         std::to_string(y) + ")");
  FiniteGroup::Init init;
  init.order = n;
  init.table = std::move(t);
  init.name = std::move(name);
  return FiniteGroup::make(std::move(init));
}

namespace {

struct PermHash {
  size_t operator()(const Perm& p) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : p) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

GroupPtr from_permutations(const std::vector<Perm>& generators, int degree, std::string name) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) fail(Errc::ParseError, "permutation has wrong degree");
    std::vector<char> hit(degree, 0);
    for (int x : g) {
      if (x < 0 || x >= degree || hit[x]) fail(Errc::ParseError, "not a permutation");
      hit[x] = 1;
    }
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::unordered_map<Perm, int, PermHash> index{{id, 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      Perm q = perm_compose(elems[i], g);
      if (index.emplace(q, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(q));
        check_cap(static_cast<long>(elems.size()), "permutation group");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  FiniteGroup::Init init;
  init.order = n;
  init.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) init.table[static_cast<size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
  for (const auto& g : generators) {
    int gi = index.at(g);
    if (gi != 0 && std::find(init.generators.begin(), init.generators.end(), gi) == init.generators.end())
      init.generators.push_back(gi);
  }
  init.perms = std::move(elems);
  init.name = std::move(name);
  return FiniteGroup::make(std::move(init));
}

static GroupPtr from_rule(int n, const std::function<int(int, int)>& mul, std::string name,
                          std::vector<int> gens) {
  check_cap(n, name);
  FiniteGroup::Init init;
  init.order = n;
  init.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) init.table[static_cast<size_t>(a) * n + b] = mul(a, b);
  init.name = std::move(name);
  init.generators = std::move(gens);
  return FiniteGroup::make(std::move(init));
}

namespace catalog {

GroupPtr cyclic(int n) {
  require(n >= 1, Errc::UnknownCatalogEntry, "cyclic(n) needs n >= 1");
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  return from_rule(n, [n](int a, int b) { return (a + b) % n; }, "C" + std::to_string(n), gens);
}

GroupPtr dihedral(int order) {
  require(order >= 2 && order % 2 == 0, Errc::UnknownCatalogEntry, "dihedral group order must be even");
  const int m = order / 2;
  // r^i s^j -> i + m*j
  auto mul = [m](int a, int b) {
    int i = a % m, j = a / m, k = b % m, l = b / m;
    int r = nt::mod(i + (j ? -k : k), m);
    return r + m * ((j + l) % 2);
  };
  std::vector<int> gens;
  if (m > 1) gens.push_back(1);
  gens.push_back(m);
  return from_rule(order, mul, "D" + std::to_string(order), gens);
}

GroupPtr quaternion8() {
  // a^i b^j -> i + 4j, with b^2 = a^2 and a^b = a^-1
  auto mul = [](int x, int y) {
    int i = x % 4, j = x / 4, k = y % 4, l = y / 4;
    int r = i + (j ? -k : k);
    int s = j + l;
    if (s == 2) {
      r += 2;
      s = 0;
    }
    return static_cast<int>(nt::mod(r, 4)) + 4 * s;
  };
  return from_rule(8, mul, "Q8", {1, 4});
}

GroupPtr sym(int n) {
  require(n >= 1, Errc::UnknownCatalogEntry, "sym(n) needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm cyc(n), tr(n);
    std::iota(tr.begin(), tr.end(), 0);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    std::swap(tr[0], tr[1]);
    gens = {cyc, tr};
  }
  long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check_cap(fact, "S" + std::to_string(n));
  return from_permutations(gens, n, "S" + std::to_string(n));
}

GroupPtr alt(int n) {
  require(n >= 1, Errc::UnknownCatalogEntry, "alt(n) needs n >= 1");
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  long fact = 1;
  for (int i = 3; i <= n; ++i) fact *= i;
  check_cap(fact, "A" + std::to_string(n));
  return from_permutations(gens, n, "A" + std::to_string(n));
}

GroupPtr extraspecial(int p, int exponent) {
  require(p > 2 && nt::is_prime(p), Errc::UnknownCatalogEntry, "extraspecial groups need an odd prime");
  const std::string name = std::to_string(p) + "^{1+2}" + (exponent == p ? "+" : "-");
  if (exponent == p) {
    // Heisenberg group: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), index a + p b + p^2 c
    auto mul = [p](int x, int y) {
      int a = x % p, b = (x / p) % p, c = x / (p * p);
      int a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
    };
    return from_rule(p * p * p, mul, name, {1, p});
  }
  require(exponent == p * p, Errc::UnknownCatalogEntry, "extraspecial exponent must be p or p^2");
  // <x, y | x^{p^2}, y^p, x^y = x^{1+p}>, elements x^u y^v -> u + p^2 v
  const int q = p * p;
  std::vector<int> powers(p);  // (1+p)^v mod p^2
  powers[0] = 1;
  for (int v = 1; v < p; ++v) powers[v] = powers[v - 1] * (1 + p) % q;
  auto mul = [p, q, powers](int x, int y) {
    int u = x % q, v = x / q, u2 = y % q, v2 = y / q;
    // y^v x^{u2} = x^{u2 (1+p)^{-v}} y^v; (1+p)^{-v} = (1+p)^{p-v}
    int w = (u + u2 * powers[(p - v) % p]) % q;
    return w + q * ((v + v2) % p);
  };
  return from_rule(p * q, mul, name, {1, q});
}

GroupPtr sl2_3() {
  auto q8 = quaternion8();
  auto c3 = cyclic(3);
  auto sd = semidirect_product(named_action(c3, q8, "q8-order3"));
  FiniteGroup::Init init;
  const int n = sd.group->order();
  init.order = n;
  init.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) init.table[static_cast<size_t>(a) * n + b] = sd.group->mul(a, b);
  init.name = "SL(2,3)";
  init.generators = {sd.embed_n[1], sd.embed_n[4], sd.embed_a[1]};
  return FiniteGroup::make(std::move(init));
}

}  // namespace catalog

GroupPtr from_catalog(const CatalogSpec& s) {
  if (s.name == "cyclic") return catalog::cyclic(s.n);
  if (s.name == "dihedral") return catalog::dihedral(s.n);
  if (s.name == "quaternion8") return catalog::quaternion8();
  if (s.name == "sym") return catalog::sym(s.n);
  if (s.name == "alt") return catalog::alt(s.n);
  if (s.name == "extraspecial") return catalog::extraspecial(s.p, s.exp == 0 ? s.p : s.exp);
  if (s.name == "sl2_3") return catalog::sl2_3();
  fail(Errc::UnknownCatalogEntry, "unknown catalog group '" + s.name + "'");
}

CatalogSpec parse_catalog_name(std::string_view text) {
  CatalogSpec s;
  if (text == "quaternion8" || text == "Q8") {
    s.name = "quaternion8";
    return s;
  }
  if (text == "sl2_3") {
    s.name = "sl2_3";
    return s;
  }
  size_t i = text.size();
  while (i > 0 && text[i - 1] >= '0' && text[i - 1] <= '9') --i;
  std::string head(text.substr(0, i));
  if (i == text.size() || (head != "cyclic" && head != "dihedral" && head != "sym" && head != "alt"))
    fail(Errc::UnknownCatalogEntry, "unknown catalog group '" + std::string(text) + "'");
  s.name = head;
  s.n = std::stoi(std::string(text.substr(i)));
  return s;
}

// --- actions --------------------------------------------------------------

Perm automorphism_from_images(const FiniteGroup& n, std::span<const int> gens, std::span<const int> images) {
  require(gens.size() == images.size(), Errc::InvalidAction, "generator/image count mismatch");
  const int ord = n.order();
  Perm map(ord, -1);
  map[n.identity()] = n.identity();
  std::vector<int> queue{n.identity()};
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (size_t j = 0; j < gens.size(); ++j) {
      int y = n.mul(x, gens[j]);
      int img = n.mul(map[x], images[j]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        fail(Errc::InvalidAction, "generator images do not define a homomorphism");
      }
    }
  }
  if (static_cast<int>(queue.size()) != ord) fail(Errc::InvalidAction, "elements given do not generate N");
  std::vector<char> hit(ord, 0);
  for (int v : map) {
    if (hit[v]) fail(Errc::InvalidAction, "map is not injective");
    hit[v] = 1;
  }
  return map;
}

static void check_automorphism(const FiniteGroup& n, const Perm& p) {
  const int ord = n.order();
  if (static_cast<int>(p.size()) != ord) fail(Errc::InvalidAction, "action permutation has wrong degree");
  std::vector<char> hit(ord, 0);
  for (int v : p) {
    if (v < 0 || v >= ord || hit[v]) fail(Errc::InvalidAction, "action map is not a permutation");
    hit[v] = 1;
  }
  for (int a = 0; a < ord; ++a)
    for (int b = 0; b < ord; ++b)
      if (p[n.mul(a, b)] != n.mul(p[a], p[b])) fail(Errc::InvalidAction, "action map is not a homomorphism");
}

GroupAction GroupAction::trivial(GroupPtr a, GroupPtr n) {
  Perm id(n->order());
  std::iota(id.begin(), id.end(), 0);
  GroupAction act{a, n, std::vector<Perm>(a->order(), id)};
  return act;
}

GroupAction GroupAction::from_generators(GroupPtr a, GroupPtr n, const std::vector<int>& gens,
                                         const std::vector<Perm>& images) {
  require(gens.size() == images.size(), Errc::InvalidAction, "one image per actor generator required");
  for (const auto& p : images) check_automorphism(*n, p);
  Perm id(n->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> map(a->order());
  std::vector<char> set(a->order(), 0);
  map[a->identity()] = id;
  set[a->identity()] = 1;
  std::vector<int> queue{a->identity()};
  for (size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (size_t j = 0; j < gens.size(); ++j) {
      int y = a->mul(x, gens[j]);
      Perm cand = perm_compose(map[x], images[j]);
      if (!set[y]) {
        set[y] = 1;
        map[y] = std::move(cand);
        queue.push_back(y);
      } else if (map[y] != cand) {
        fail(Errc::InvalidAction, "generator images do not define a homomorphism A -> Aut(N)");
      }
    }
  }
  if (static_cast<int>(queue.size()) != a->order()) fail(Errc::InvalidAction, "actor generators do not generate A");
  return GroupAction{std::move(a), std::move(n), std::move(map)};
}

GroupAction named_action(GroupPtr a, GroupPtr n, std::string_view name) {
  if (name == "trivial") return GroupAction::trivial(std::move(a), std::move(n));
  require(a->generators().size() == 1, Errc::InvalidAction,
          "named action '" + std::string(name) + "' needs a cyclic acting group with one generator");
  const auto& ng = n->generators();
  Perm alpha;
  if (name == "inversion") {
    alpha.resize(n->order());
    for (int x = 0; x < n->order(); ++x) alpha[x] = n->inv(x);
    check_automorphism(*n, alpha);
  } else if (name == "inversion-mod-center") {
    require(ng.size() == 2, Errc::InvalidAction, "inversion-mod-center needs a two-generator group");
    std::vector<int> img{n->inv(ng[0]), n->inv(ng[1])};
    alpha = automorphism_from_images(*n, ng, img);
  } else if (name == "symplectic4") {
    require(ng.size() == 2, Errc::InvalidAction, "symplectic4 needs a two-generator group");
    std::vector<int> img{ng[1], n->inv(ng[0])};
    alpha = automorphism_from_images(*n, ng, img);
  } else if (name == "symplectic3") {
    require(ng.size() == 2, Errc::InvalidAction, "symplectic3 needs a two-generator group");
    std::vector<int> img{ng[1], n->mul(n->inv(ng[0]), n->inv(ng[1]))};
    alpha = automorphism_from_images(*n, ng, img);
  } else if (name == "q8-order3") {
    require(ng.size() == 2, Errc::InvalidAction, "q8-order3 needs the quaternion group");
    std::vector<int> img{ng[1], n->mul(ng[0], ng[1])};
    alpha = automorphism_from_images(*n, ng, img);
  } else {
    fail(Errc::InvalidAction, "unknown named action '" + std::string(name) + "'");
  }
  const int gen = a->generators()[0];
  return GroupAction::from_generators(a, n, {gen}, {alpha});
}

SemidirectProduct semidirect_product(const GroupAction& act) {
  const FiniteGroup& a = *act.actor;
  const FiniteGroup& n = *act.target;
  require(static_cast<int>(act.map.size()) == a.order(), Errc::InvalidAction, "action map size mismatch");
  for (const auto& p : act.map) check_automorphism(n, p);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (act.map[a.mul(x, y)] != perm_compose(act.map[x], act.map[y]))
        fail(Errc::InvalidAction, "action is not a homomorphism");
  const int na = a.order(), nn = n.order();
  check_cap(static_cast<long>(na) * nn, "semidirect product");
  // index a*|N| + x stands for the product a x
  auto mul = [&](int u, int v) {
    int a1 = u / nn, x1 = u % nn, a2 = v / nn, x2 = v % nn;
    return a.mul(a1, a2) * nn + n.mul(act.map[a2][x1], x2);
  };
  SemidirectProduct sd;
  for (int x = 0; x < nn; ++x) sd.embed_n.push_back(a.identity() * nn + x);
  for (int y = 0; y < na; ++y) sd.embed_a.push_back(y * nn + n.identity());
  std::vector<int> gens;
  for (int y : a.generators()) gens.push_back(sd.embed_a[y]);
  for (int x : n.generators()) gens.push_back(sd.embed_n[x]);
  std::string name = (a.name().empty() ? "A" : a.name()) + ":" + (n.name().empty() ? "N" : n.name());
  sd.group = from_rule(na * nn, mul, name, gens);
  std::vector<int> en = sd.embed_n, ea = sd.embed_a;
  std::sort(en.begin(), en.end());
  std::sort(ea.begin(), ea.end());
  sd.n = sd.group->intern(std::move(en));
  sd.a = sd.group->intern(std::move(ea));
  return sd;
}

Quotient quotient(const Subgroup& h, const Subgroup& n) {
  const FiniteGroup& g = h.group();
  require(is_normal(h, n), Errc::NotNormal, "quotient by a non-normal subgroup");
  std::vector<int> reps;
  for (int x : h.elements())
    if (n.coset_min(x) == x) reps.push_back(x);
  // identity coset first
  int id_rep = n.coset_min(g.identity());
  std::stable_partition(reps.begin(), reps.end(), [&](int r) { return r == id_rep; });
  std::unordered_map<int, int> idx;
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
  Quotient q;
  q.projection.assign(g.order(), -1);
  for (int x : h.elements()) q.projection[x] = idx.at(n.coset_min(x));
  const int m = static_cast<int>(reps.size());
  std::vector<int> gens;
  for (int x : h.generators()) {
    int c = q.projection[x];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  q.group = from_rule(m, [&](int a, int b) { return q.projection[g.mul(reps[a], reps[b])]; }, "quotient", gens);
  return q;
}

// --- subgroup calculus ----------------------------------------------------

Subgroup closure(const FiniteGroup& g, std::span<const int> seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems = bfs_closure(g, {g.identity()}, seeds, in);
  std::sort(elems.begin(), elems.end());
  return g.intern(std::move(elems));
}

Subgroup closure(const Subgroup& base, std::span<const int> extra) {
  bool inside = true;
  for (int x : extra) inside = inside && base.contains(x);
  if (inside) return base;
  std::vector<int> seeds = base.generators();
  seeds.insert(seeds.end(), extra.begin(), extra.end());
  return closure(base.group(), seeds);
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> in(g.order(), 0);
  for (int x : elements) {
    if (x < 0 || x >= g.order()) fail(Errc::NotSubgroup, "element index out of range");
    in[x] = 1;
  }
  if (!in[g.identity()]) fail(Errc::NotSubgroup, "identity missing");
  for (int x : elements)
    for (int y : elements)
      if (!in[g.mul(x, y)]) fail(Errc::NotSubgroup, "not closed under multiplication");
  return g.intern(std::move(elements));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  return closure(a, b.generators());
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  for (int x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return a.group().intern(std::move(out));
}

Subgroup conjugate(const Subgroup& s, int g) {
  const FiniteGroup& G = s.group();
  std::vector<int> out;
  out.reserve(s.order());
  for (int x : s.elements()) out.push_back(G.conj(x, g));
  std::sort(out.begin(), out.end());
  return G.intern(std::move(out));
}

Subgroup centralizer(const Subgroup& h, std::span<const int> s) {
  const FiniteGroup& G = h.group();
  std::vector<int> out;
  for (int x : h.elements()) {
    bool ok = true;
    for (int y : s)
      if (G.mul(x, y) != G.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return G.intern(std::move(out));
}

Subgroup centralizer(const Subgroup& h, const Subgroup& s) { return centralizer(h, s.generators()); }

Subgroup normalizer(const Subgroup& h, const Subgroup& s) {
  const FiniteGroup& G = h.group();
  const auto& sg = s.generators();
  std::vector<int> out;
  for (int x : h.elements()) {
    bool ok = true;
    for (int y : sg)
      if (!s.contains(G.conj(y, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return G.intern(std::move(out));
}

Subgroup center(const Subgroup& h) { return centralizer(h, h); }

Subgroup commutator(const Subgroup& x, const Subgroup& y) {
  const FiniteGroup& G = x.group();
  std::vector<char> seen(G.order(), 0);
  std::vector<int> comms;
  for (int a : x.elements())
    for (int b : y.elements()) {
      int c = G.comm(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return closure(G, comms);
}

Subgroup derived_subgroup(const Subgroup& h) { return commutator(h, h); }

Subgroup normal_closure(const Subgroup& h, const Subgroup& s) {
  const FiniteGroup& G = h.group();
  Subgroup cur = s;
  for (bool changed = true; changed;) {
    changed = false;
    for (int g : h.generators()) {
      for (int x : cur.generators()) {
        int y = G.conj(x, g);
        if (!cur.contains(y)) {
          cur = closure(cur, std::span<const int>(&y, 1));
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return cur;
}

bool is_normal(const Subgroup& h, const Subgroup& s) {
  if (!h.contains(s)) return false;
  const FiniteGroup& G = h.group();
  for (int g : h.generators())
    for (int x : s.generators())
      if (!s.contains(G.conj(x, g))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& G = h.group();
  const auto& gens = h.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_cyclic(const Subgroup& h) {
  for (int x : h.elements())
    if (h.group().element_order(x) == h.order()) return true;
  return false;
}

int subgroup_exponent(const Subgroup& h) {
  long e = 1;
  for (int x : h.elements()) e = nt::lcm(e, h.group().element_order(x));
  return static_cast<int>(e);
}

Subgroup centralizer_mod(const Subgroup& h, const Subgroup& k, const Subgroup& l) {
  const FiniteGroup& G = h.group();
  const auto& kg = k.generators();
  std::vector<int> out;
  for (int x : h.elements()) {
    bool ok = true;
    for (int y : kg)
      if (!l.contains(G.comm(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return G.intern(std::move(out));
}

std::vector<int> centralizer_mod_element(const Subgroup& k, const Subgroup& l, int h) {
  const FiniteGroup& G = k.group();
  std::vector<int> out;
  for (int x : k.elements())
    if (l.contains(G.comm(x, h))) out.push_back(x);
  return out;
}

Subgroup sylow(const Subgroup& h, int p) {
  require(nt::is_prime(p), Errc::NotCoprime, "sylow needs a prime");
  const FiniteGroup& G = h.group();
  int target = 1;
  for (int m = h.order(); m % p == 0; m /= p) target *= p;
  auto is_p_power = [p](int m) {
    while (m % p == 0) m /= p;
    return m == 1;
  };
  Subgroup P = G.trivial();
  while (P.order() < target) {
    Subgroup nP = normalizer(h, P);
    bool grown = false;
    for (int x : nP.elements()) {
      if (P.contains(x) || !is_p_power(G.element_order(x))) continue;
      Subgroup Q = closure(P, std::span<const int>(&x, 1));
      if (is_p_power(Q.order())) {
        P = Q;
        grown = true;
        break;
      }
    }
    if (!grown) fail(Errc::TheoremViolation, "Sylow subgroup search stalled");
  }
  return P;
}

Subgroup fixed_points(const GroupAction& act) {
  std::vector<int> out;
  for (int x = 0; x < act.target->order(); ++x) {
    bool fixed = true;
    for (const auto& p : act.map)
      if (p[x] != x) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(x);
  }
  return act.target->intern(std::move(out));
}

std::vector<Subgroup> minimal_normal_between(const Subgroup& g, const Subgroup& k, const Subgroup& l) {
  std::vector<Subgroup> cands;
  for (int x : k.elements()) {
    if (l.contains(x) || l.coset_min(x) != x) continue;
    Subgroup c = normal_closure(g, closure(l, std::span<const int>(&x, 1)));
    if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);
  }
  std::vector<Subgroup> out;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& d : cands)
      if (d != c && c.contains(d)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chief(const Subgroup& g, const Subgroup& k, const Subgroup& l) {
  if (k == l || !k.contains(l) || !is_normal(g, k) || !is_normal(g, l)) return false;
  auto mins = minimal_normal_between(g, k, l);
  return mins.size() == 1 && mins[0] == k;
}

std::vector<Subgroup> subgroups_between(const Subgroup& h, const Subgroup& l) {
  std::vector<Subgroup> found{l};
  std::set<Subgroup> seen{l};
  std::vector<int> reps;
  for (int x : h.elements())
    if (l.coset_min(x) == x && !l.contains(x)) reps.push_back(x);
  for (size_t i = 0; i < found.size(); ++i) {
    Subgroup v = found[i];
    for (int x : reps) {
      if (v.contains(x)) continue;
      Subgroup w = closure(v, std::span<const int>(&x, 1));
      if (seen.insert(w).second) found.push_back(w);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroup> normal_subgroups_between(const Subgroup& g, const Subgroup& k, const Subgroup& l) {
  std::vector<Subgroup> out;
  for (const auto& v : subgroups_between(k, l))
    if (is_normal(g, v)) out.push_back(v);
  return out;
}

Subgroup canonical_conjugate(const Subgroup& g, const Subgroup& s) {
  const FiniteGroup& G = g.group();
  std::vector<int> best = s.elements();
  std::vector<int> cur(s.order());
  for (int x : g.elements()) {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] = G.conj(s.elements()[i], x);
    std::sort(cur.begin(), cur.end());
    if (cur < best) best = cur;
  }
  return G.intern(std::move(best));
}

std::vector<Subgroup> complement_search(const Subgroup& g, const Subgroup& k, const Subgroup& l,
                                        bool up_to_conjugacy) {
  require(k.contains(l) && is_normal(g, k) && is_normal(g, l), Errc::NotNormal,
          "complement_search needs L <= K, both normal in G");
  const FiniteGroup& G = g.group();
  // generators of G modulo K
  std::vector<int> gens;
  Subgroup cur = k;
  for (int x : g.elements()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = closure(cur, std::span<const int>(&x, 1));
  }
  std::vector<int> kreps;
  for (int x : k.elements())
    if (l.coset_min(x) == x) kreps.push_back(x);
  double combos = 1;
  for (size_t i = 0; i < gens.size(); ++i) combos *= static_cast<double>(kreps.size());
  if (combos > 2e6) fail(Errc::OrderCapExceeded, "complement search space too large");
  const long target = static_cast<long>(g.order()) / k.order() * l.order();
  std::set<Subgroup> result;
  std::vector<int> choice(gens.size(), 0);
  for (;;) {
    std::vector<int> seeds;
    for (size_t i = 0; i < gens.size(); ++i) seeds.push_back(G.mul(gens[i], kreps[choice[i]]));
    Subgroup h = closure(l, seeds);
    if (h.order() == target && intersect(h, k) == l) result.insert(up_to_conjugacy ? canonical_conjugate(g, h) : h);
    size_t i = 0;
    while (i < choice.size() && ++choice[i] == static_cast<int>(kreps.size())) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return {result.begin(), result.end()};
}

std::string group_fingerprint(const Subgroup& h) {
  const FiniteGroup& G = h.group();
  std::vector<char> seen(G.order(), 0);
  std::vector<int> sizes;
  for (int x : h.elements()) {
    if (seen[x]) continue;
    int size = 0;
    for (int g : h.elements()) {
      int y = G.conj(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  std::map<int, int> hist;
  for (int x : h.elements()) ++hist[G.element_order(x)];
  std::ostringstream os;
  os << h.order() << "|";
  for (int s : sizes) os << s << ",";
  os << "|";
  for (auto [o, c] : hist) os << o << ":" << c << ",";
  return os.str();
}

bool isomorphic(const Subgroup& a, const Subgroup& b) {
  if (group_fingerprint(a) != group_fingerprint(b)) return false;
  const FiniteGroup& GA = a.group();
  const FiniteGroup& GB = b.group();
  const auto& gens = a.generators();
  std::vector<int> img(gens.size());
  // try all generator images of matching orders; extend and check
  std::function<bool(size_t)> search = [&](size_t i) -> bool {
    if (i == gens.size()) {
      std::unordered_map<int, int> map{{GA.identity(), GB.identity()}};
      std::vector<int> queue{GA.identity()};
      for (size_t q = 0; q < queue.size(); ++q)
        for (size_t j = 0; j < gens.size(); ++j) {
          int y = GA.mul(queue[q], gens[j]);
          int v = GB.mul(map[queue[q]], img[j]);
          auto it = map.find(y);
          if (it == map.end()) {
            map[y] = v;
            queue.push_back(y);
          } else if (it->second != v) {
            return false;
          }
        }
      std::set<int> image;
      for (auto& [x, v] : map) image.insert(v);
      return static_cast<int>(image.size()) == a.order();
    }
    for (int y : b.elements()) {
      if (GB.element_order(y) != GA.element_order(gens[i])) continue;
      img[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace fgct
