#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgct/error.hpp"
#include "fgct/group.hpp"

using namespace fgct;

namespace {

// Brute-force oracles working straight from the Cayley table.
bool brute_associative(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int c = 0; c < g.order(); ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

int brute_class_count(const FiniteGroup& g) {
  std::set<std::set<int>> classes;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> c;
    for (int y = 0; y < g.order(); ++y) c.insert(g.conj(x, y));
    classes.insert(c);
  }
  return static_cast<int>(classes.size());
}

std::vector<int> brute_center(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order(); ++y) central = central && g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> c6_table() {
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = (a + b) % 6;
  return t;
}

}  // namespace

TEST_CASE("from_cayley validation") {
  CHECK(from_cayley({{0}})->order() == 1);
  CHECK(from_cayley({{0, 1}, {1, 0}})->order() == 2);
  auto t = c6_table();
  t[2][3] = 4;  // 2+3 should be 5
  // oracle: a non-associative triple exists in the corrupted table
  bool bad = false;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) bad = bad || t[t[a][b]][c] != t[a][t[b][c]];
  REQUIRE(bad);
  try {
    from_cayley(t);
    FAIL("expected NonAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonAssociative);
  }
  try {
    from_cayley({{1, 1}, {1, 1}});
    FAIL("expected NoIdentity");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoIdentity);
  }
}

TEST_CASE("from_permutations") {
  auto s3 = from_permutations({parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)}, 3);
  CHECK(s3->order() == 6);
  CHECK(from_permutations({}, 4)->order() == 1);
  auto d8 = from_permutations({parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 2)", 4)}, 4);
  CHECK(d8->order() == 8);
  CHECK(brute_associative(*d8));
  CHECK_THROWS_AS(parse_cycles("(0 1", 3), Error);
}

TEST_CASE("catalog groups") {
  auto q8 = catalog::quaternion8();
  CHECK(q8->order() == 8);
  CHECK(brute_class_count(*q8) == 5);
  auto e27 = catalog::extraspecial(3, 3);
  CHECK(e27->order() == 27);
  CHECK(brute_center(*e27).size() == 3);
  CHECK(e27->exponent() == 3);
  auto e27m = catalog::extraspecial(3, 9);
  CHECK(e27m->order() == 27);
  CHECK(brute_center(*e27m).size() == 3);
  CHECK(e27m->exponent() == 9);
  auto e125 = catalog::extraspecial(5, 5);
  CHECK(brute_center(*e125).size() == 5);
  CHECK(catalog::cyclic(1)->order() == 1);
  CHECK(catalog::sl2_3()->order() == 24);
  CHECK(catalog::sym(4)->order() == 24);
  CHECK(catalog::alt(4)->order() == 12);
  CHECK(catalog::dihedral(14)->order() == 14);
  for (auto g : {q8, e27, e27m, catalog::sl2_3(), catalog::dihedral(8), catalog::alt(4)}) CHECK(brute_associative(*g));
  CHECK_THROWS_AS(from_catalog({"monster"}), Error);
  setenv("FGCT_ORDER_CAP", "100", 1);
  CHECK_THROWS_AS(catalog::sym(5), Error);
  unsetenv("FGCT_ORDER_CAP");
  CHECK(parse_catalog_name("cyclic12").n == 12);
}

TEST_CASE("semidirect products") {
  auto c2 = catalog::cyclic(2), c3 = catalog::cyclic(3), c7 = catalog::cyclic(7);
  auto direct = semidirect_product(GroupAction::trivial(c2, c3));
  CHECK(direct.group->order() == 6);
  CHECK(is_abelian(direct.group->whole()));
  CHECK(is_cyclic(direct.group->whole()));
  auto d14 = semidirect_product(named_action(c2, c7, "inversion"));
  CHECK(d14.group->order() == 14);
  CHECK(isomorphic(d14.group->whole(), catalog::dihedral(14)->whole()));
  CHECK(is_normal(d14.group->whole(), d14.n));
  auto e27 = catalog::extraspecial(3, 3);
  auto act = named_action(c2, e27, "inversion-mod-center");
  auto g54 = semidirect_product(act);
  CHECK(g54.group->order() == 54);
  CHECK(brute_associative(*g54.group));
  // conjugation by the A-image realizes the action
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 27; ++x) CHECK(g54.group->conj(g54.embed_n[x], g54.embed_a[a]) == g54.embed_n[act.map[a][x]]);
  CHECK(fixed_points(act).order() == 3);
  CHECK(fixed_points(act) == center(e27->whole()));
  CHECK(fixed_points(named_action(c2, c7, "inversion")).order() == 1);
  CHECK(fixed_points(GroupAction::trivial(c2, c7)).order() == 7);
  // trivial action and a hand-built direct product agree element-wise
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) {
      int a = (u / 3 + v / 3) % 2, x = (u % 3 + v % 3) % 3;
      CHECK(direct.group->mul(u, v) == a * 3 + x);
    }
  CHECK_THROWS_AS(named_action(c2, catalog::quaternion8(), "symplectic3"), Error);
  CHECK_THROWS_AS(named_action(c2, e27, "inversion"), Error);
  auto c4 = catalog::cyclic(4);
  CHECK(fixed_points(named_action(c4, e27, "symplectic4")).order() == 3);
  auto c3b = catalog::cyclic(3);
  CHECK(semidirect_product(named_action(c3b, catalog::extraspecial(5, 5), "symplectic3")).group->order() == 375);
}

TEST_CASE("quotients") {
  auto q8 = catalog::quaternion8();
  auto z = center(q8->whole());
  auto q = quotient(q8->whole(), z);
  CHECK(q.group->order() == 4);
  CHECK(q.group->exponent() == 2);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(q.projection[q8->mul(a, b)] == q.group->mul(q.projection[a], q.projection[b]));
  CHECK(quotient(q8->whole(), q8->whole()).group->order() == 1);
  CHECK(isomorphic(quotient(q8->whole(), q8->trivial()).group->whole(), q8->whole()));
  auto s3 = catalog::sym(3);
  auto c2 = closure(*s3, std::vector<int>{[&] {
    for (int x = 0; x < 6; ++x)
      if (s3->element_order(x) == 2) return x;
    return 0;
  }()});
  CHECK_THROWS_AS(quotient(s3->whole(), c2), Error);
}

TEST_CASE("subgroup calculus") {
  auto s3 = catalog::sym(3);
  int three = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) three = x;
  CHECK(centralizer(s3->whole(), std::vector<int>{three}).order() == 3);
  CHECK(normalizer(s3->whole(), s3->whole()) == s3->whole());
  CHECK(center(catalog::extraspecial(3, 3)->whole()).order() == 3);
  auto q8 = catalog::quaternion8();
  CHECK(derived_subgroup(q8->whole()) == center(q8->whole()));
  auto c7 = catalog::cyclic(7), c2 = catalog::cyclic(2);
  auto d14 = semidirect_product(named_action(c2, c7, "inversion"));
  CHECK(commutator(d14.n, d14.a) == d14.n);
  auto triv = semidirect_product(GroupAction::trivial(c2, c7));
  CHECK(commutator(triv.n, triv.a).order() == 1);
  CHECK(sylow(catalog::sym(4)->whole(), 2).order() == 8);
  CHECK(sylow(catalog::cyclic(6)->whole(), 5).order() == 1);
  auto sl = catalog::sl2_3();
  auto p2 = sylow(sl->whole(), 2);
  CHECK(p2.order() == 8);
  CHECK(isomorphic(p2, q8->whole()));
  CHECK(!isomorphic(catalog::dihedral(8)->whole(), q8->whole()));
}

TEST_CASE("complements") {
  auto sl = catalog::sl2_3();
  auto g = sl->whole();
  auto q = sylow(g, 2);
  auto z = center(g);
  auto comps = complement_search(g, q, z);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].order() == 6);
  CHECK(is_cyclic(comps[0]));
  for (const auto& h : complement_search(g, q, z, false)) {
    CHECK(static_cast<long>(h.order()) * q.order() == static_cast<long>(g.order()) * z.order());
    CHECK(intersect(h, q) == z);
  }
  CHECK(complement_search(g, q, q) == std::vector<Subgroup>{g});
  auto c4 = catalog::cyclic(4)->whole();
  auto c2 = closure(c4.group(), std::vector<int>{2});
  CHECK(complement_search(c4, c2, c4.group().trivial()).empty());
}

TEST_CASE("chief factors and intervals") {
  auto sl = catalog::sl2_3();
  auto g = sl->whole();
  auto q = sylow(g, 2);
  auto z = center(g);
  CHECK(is_chief(g, q, z));
  CHECK(is_chief(g, z, sl->trivial()));
  CHECK(!is_chief(g, q, sl->trivial()));
  CHECK(minimal_normal_between(g, q, sl->trivial()) == std::vector<Subgroup>{z});
  auto e27 = catalog::extraspecial(3, 3)->whole();
  // subgroups of 27 containing Z: Z, four of order 9, the whole group
  CHECK(subgroups_between(e27, center(e27)).size() == 6);
  CHECK(normal_subgroups_between(e27, e27, center(e27)).size() == 6);
}
