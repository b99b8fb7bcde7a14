#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgct {

/// Largest group order the library will materialize (env FGCT_ORDER_CAP, default 2000).
int order_cap();

/// A permutation of 0..n-1 as an image list; products act on the right, so
/// (p*q)[x] = q[p[x]].
using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
/// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
Perm parse_cycles(std::string_view text, int degree);

class FiniteGroup;
class Subgroup;
class CharacterTable;
struct ClassData;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Shared state of one interned subgroup. Derived data is computed on first
/// use and never changes afterwards.
struct SubgroupData {
  std::vector<int> elements;  // sorted
  std::vector<char> mask;     // membership over the ambient group

  std::once_flag gens_once;
  std::vector<int> gens;  // a small generating set

  std::once_flag cosets_once;
  std::vector<int> coset_min;  // ambient x -> min element of the right coset Sx

  std::once_flag classes_once;
  std::shared_ptr<const ClassData> classes;
  std::once_flag table_once;
  std::shared_ptr<const CharacterTable> table;
};

/// A finite group with elements 0..order-1 and a materialized Cayley table.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  struct Init {
    int order = 0;
    std::vector<int> table;  // row-major, order*order
    std::string name;
    std::vector<int> generators;
    std::vector<Perm> perms;  // optional faithful permutation realization
  };

  /// Trusts the table to be a group; callers that take outside input verify first.
  static GroupPtr make(Init init);

  int order() const noexcept { return n_; }
  int identity() const noexcept { return e_; }
  int mul(int a, int b) const noexcept { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const noexcept { return inv_[a]; }
  /// a^g = g^-1 a g
  int conj(int a, int g) const noexcept { return mul(inv_[g], mul(a, g)); }
  /// [a,b] = a^-1 b^-1 a b
  int comm(int a, int b) const noexcept { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  int power(int a, long k) const;
  int element_order(int a) const noexcept { return ord_[a]; }
  int exponent() const noexcept { return exp_; }

  const std::string& name() const noexcept { return name_; }
  const std::vector<int>& generators() const noexcept { return gens_; }
  const std::vector<Perm>& perms() const noexcept { return perms_; }

  Subgroup whole() const;
  Subgroup trivial() const;
  /// Canonical handle for a sorted, duplicate-free element set (not validated).
  Subgroup intern(std::vector<int> sorted) const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int e_ = 0;
  int exp_ = 1;
  std::vector<int> table_, inv_, ord_;
  std::string name_;
  std::vector<int> gens_;
  std::vector<Perm> perms_;

  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, std::shared_ptr<SubgroupData>> interned_;
};

/// A subgroup of an ambient FiniteGroup. Handles are interned, so equality is
/// identity of the element set.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr g, std::shared_ptr<SubgroupData> d) : g_(std::move(g)), d_(std::move(d)) {}

  const FiniteGroup& group() const noexcept { return *g_; }
  const GroupPtr& group_ptr() const noexcept { return g_; }
  const std::vector<int>& elements() const noexcept { return d_->elements; }
  int order() const noexcept { return static_cast<int>(d_->elements.size()); }
  bool contains(int x) const noexcept { return d_->mask[x] != 0; }
  bool contains(const Subgroup& s) const;
  bool valid() const noexcept { return d_ != nullptr; }
  SubgroupData& data() const noexcept { return *d_; }

  /// A small generating set, chosen greedily in index order.
  const std::vector<int>& generators() const;
  /// Min element of the right coset Sx.
  int coset_min(int x) const;
  int index_in(const Subgroup& over) const { return over.order() / order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.d_ == b.d_; }
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr g_;
  std::shared_ptr<SubgroupData> d_;
};

// --- construction ---------------------------------------------------------

/// Validates identity, inverses and associativity; throws NoIdentity, NoInverse, NonAssociative.
GroupPtr from_cayley(const std::vector<std::vector<int>>& table, std::string name = "");
GroupPtr from_permutations(const std::vector<Perm>& generators, int degree, std::string name = "");

struct CatalogSpec {
  std::string name;  // cyclic, dihedral, quaternion8, sym, alt, extraspecial, sl2_3
  int n = 0;         // cyclic/sym/alt: n; dihedral: the group order
  int p = 0;         // extraspecial prime
  int exp = 0;       // extraspecial exponent: p or p*p
};
GroupPtr from_catalog(const CatalogSpec& spec);
/// Parses short names such as "cyclic6", "dihedral8", "sym4", "quaternion8", "sl2_3".
CatalogSpec parse_catalog_name(std::string_view text);

namespace catalog {
GroupPtr cyclic(int n);
GroupPtr dihedral(int order);
GroupPtr quaternion8();
GroupPtr sym(int n);
GroupPtr alt(int n);
GroupPtr extraspecial(int p, int exponent);
GroupPtr sl2_3();
}  // namespace catalog

/// A homomorphism A -> Aut(N); map[a][x] = x^a.
struct GroupAction {
  GroupPtr actor;
  GroupPtr target;
  std::vector<Perm> map;

  static GroupAction trivial(GroupPtr a, GroupPtr n);
  /// Extends generator images to all of A, checking that each image is an
  /// automorphism and the extension is well defined. Throws InvalidAction.
  static GroupAction from_generators(GroupPtr a, GroupPtr n, const std::vector<int>& gens,
                                     const std::vector<Perm>& images);
};

/// The automorphism of N sending gens[i] to images[i]; throws InvalidAction.
Perm automorphism_from_images(const FiniteGroup& n, std::span<const int> gens, std::span<const int> images);

/// Named actions of a cyclic group A on N through its first generator: "trivial",
/// "inversion", "inversion-mod-center", "symplectic4", "symplectic3", "q8-order3".
GroupAction named_action(GroupPtr a, GroupPtr n, std::string_view name);

struct SemidirectProduct {
  GroupPtr group;              // elements (a, x) indexed a*|N| + x
  Subgroup n, a;               // images of N and A
  std::vector<int> embed_n, embed_a;
};
SemidirectProduct semidirect_product(const GroupAction& act);

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  // ambient element -> quotient element, -1 outside H
};
/// H/N for N normal in H; throws NotNormal.
Quotient quotient(const Subgroup& h, const Subgroup& n);

// --- subgroup calculus ----------------------------------------------------

Subgroup closure(const FiniteGroup& g, std::span<const int> seeds);
Subgroup closure(const Subgroup& base, std::span<const int> extra);
/// Validated subgroup from an arbitrary element list; throws NotSubgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& s, int g);
Subgroup centralizer(const Subgroup& h, std::span<const int> s);
Subgroup centralizer(const Subgroup& h, const Subgroup& s);
Subgroup normalizer(const Subgroup& h, const Subgroup& s);
Subgroup center(const Subgroup& h);
/// Subgroup generated by [x,y], x in X, y in Y.
Subgroup commutator(const Subgroup& x, const Subgroup& y);
Subgroup derived_subgroup(const Subgroup& h);
Subgroup normal_closure(const Subgroup& h, const Subgroup& s);
bool is_normal(const Subgroup& h, const Subgroup& s);
bool is_abelian(const Subgroup& h);
bool is_cyclic(const Subgroup& h);
int subgroup_exponent(const Subgroup& h);
/// Elements of H centralizing the section K/L modulo L: {h : [h,k] in L for all k in K}.
Subgroup centralizer_mod(const Subgroup& h, const Subgroup& k, const Subgroup& l);
/// Elements x of K with [x,h] in L for a single h.
std::vector<int> centralizer_mod_element(const Subgroup& k, const Subgroup& l, int h);
Subgroup sylow(const Subgroup& h, int p);
/// {x in N : x^a = x for all a}.
Subgroup fixed_points(const GroupAction& act);

/// Minimal normal subgroups of G strictly above L and inside K (normal in G).
std::vector<Subgroup> minimal_normal_between(const Subgroup& g, const Subgroup& k, const Subgroup& l);
/// Whether K/L is a chief factor of G.
bool is_chief(const Subgroup& g, const Subgroup& k, const Subgroup& l);
/// All subgroups V with L <= V <= H (L normal in H), sorted.
std::vector<Subgroup> subgroups_between(const Subgroup& h, const Subgroup& l);
/// Normal subgroups of G between L and K.
std::vector<Subgroup> normal_subgroups_between(const Subgroup& g, const Subgroup& k, const Subgroup& l);

/// Lexicographically minimal conjugate, used as a canonical representative.
Subgroup canonical_conjugate(const Subgroup& g, const Subgroup& s);

/// Subgroups H of G with HK = G and H cap K = L. With up_to_conjugacy, one
/// (canonical) representative per G-class is returned.
std::vector<Subgroup> complement_search(const Subgroup& g, const Subgroup& k, const Subgroup& l,
                                        bool up_to_conjugacy = true);

/// Fingerprint used for cheap isomorphism screening: order, sorted class sizes, element-order histogram.
std::string group_fingerprint(const Subgroup& h);
/// Exhaustive isomorphism test by generator-image backtracking (small groups).
bool isomorphic(const Subgroup& a, const Subgroup& b);

}  // namespace fgct
