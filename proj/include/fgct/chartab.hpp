#pragma once

#include <memory>
#include <span>
#include <vector>

#include "fgct/cyclotomic.hpp"
#include "fgct/group.hpp"

namespace fgct {

/// Conjugacy classes of a subgroup H under H-conjugation. Class 0 is the
/// identity; the rest are ordered by (size, smallest element).
struct ClassData {
  Subgroup group;
  std::vector<std::vector<int>> classes;  // sorted element lists
  std::vector<int> reps;                  // smallest element of each class
  std::vector<int> class_of;              // ambient element -> class, -1 outside H
  std::vector<int> centralizer_orders;
  std::vector<int> rep_orders;
  std::vector<int> inverse_class;

  int count() const noexcept { return static_cast<int>(classes.size()); }
  int size(int c) const noexcept { return static_cast<int>(classes[c].size()); }
  /// Class of rep(c)^k.
  int power_class(int c, long k) const;
};

const ClassData& class_data(const Subgroup& h);

/// A class function on a subgroup H, one value per class of H.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(Subgroup h, std::vector<Cyclotomic> values);
  /// Builds from a function of ambient elements, read at class representatives.
  template <class F>
  static ClassFunction from_elements(const Subgroup& h, F&& f) {
    const ClassData& cd = class_data(h);
    std::vector<Cyclotomic> v;
    v.reserve(cd.count());
    for (int r : cd.reps) v.push_back(f(r));
    return ClassFunction(h, std::move(v));
  }
  static ClassFunction constant(const Subgroup& h, const Cyclotomic& c);
  static ClassFunction trivial(const Subgroup& h) { return constant(h, 1); }

  const Subgroup& group() const noexcept { return h_; }
  const ClassData& classes() const noexcept { return *cd_; }
  const std::vector<Cyclotomic>& values() const noexcept { return v_; }
  const Cyclotomic& at_class(int c) const { return v_[c]; }
  /// Value at an ambient element of H.
  const Cyclotomic& operator()(int x) const;
  const Cyclotomic& degree() const { return v_[0]; }
  /// Degree as an integer; throws if it is not one.
  long degree_int() const;
  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& c) { return a *= c; }

  ClassFunction galois(long k) const;
  ClassFunction conj() const { return galois(-1); }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.h_ == b.h_ && a.v_ == b.v_;
  }
  /// Degree first, then value vector.
  friend std::strong_ordering operator<=>(const ClassFunction& a, const ClassFunction& b);

 private:
  Subgroup h_;
  std::shared_ptr<const ClassData> cd_;
  std::vector<Cyclotomic> v_;
};

class CharacterTable {
 public:
  CharacterTable(Subgroup h, std::vector<ClassFunction> irr) : h_(std::move(h)), irr_(std::move(irr)) {}
  const Subgroup& group() const noexcept { return h_; }
  const ClassData& classes() const { return class_data(h_); }
  const std::vector<ClassFunction>& irr() const noexcept { return irr_; }
  const ClassFunction& operator[](size_t i) const { return irr_[i]; }
  size_t size() const noexcept { return irr_.size(); }
  std::vector<long> degrees() const;
  /// Index of an irreducible character; -1 if absent.
  int index_of(const ClassFunction& chi) const;

 private:
  Subgroup h_;
  std::vector<ClassFunction> irr_;
};

/// Cached exact table (Dixon-Schneider over GF(p), lifted to cyclotomics).
const CharacterTable& character_table(const Subgroup& h);

/// Exact orthogonality and degree-sum audit; returns an empty string if all hold.
std::string audit_table(const CharacterTable& t);

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
/// Integer inner product; throws TheoremViolation if not a rational integer.
long inner_product_int(const ClassFunction& a, const ClassFunction& b);
ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h);
ClassFunction induce(const ClassFunction& alpha, const Subgroup& g);
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
/// Inflation of a class function of H that is constant on L-cosets is the function itself;
/// this checks the condition.
bool constant_on_cosets(const ClassFunction& chi, const Subgroup& l);

/// Multiplicities against Irr(H) (exact inner products).
std::vector<Cyclotomic> decompose(const ClassFunction& chi);
/// Integer multiplicities; throws NotGenuineCharacter unless all are nonnegative integers.
std::vector<long> multiplicities(const ClassFunction& chi);
bool is_genuine_character(const ClassFunction& chi);
bool is_irreducible(const ClassFunction& chi);

/// Irr(G | phi) for phi irreducible on L normal in G.
std::vector<ClassFunction> irr_over(const Subgroup& g, const Subgroup& l, const ClassFunction& phi);
/// Irreducible characters of H with L in the kernel (Irr(H/L) inflated).
std::vector<ClassFunction> irr_of_quotient(const Subgroup& h, const Subgroup& l);
Subgroup kernel(const ClassFunction& chi);

/// phi^g(x) = phi(g x g^-1), for g normalizing the domain of phi.
ClassFunction conjugate_character(const ClassFunction& phi, int g);
ClassFunction galois_conjugate_character(const ClassFunction& chi, long k);

/// Eigenvalue multiplicities of a representation affording chi at an element of order o:
/// entry k is the multiplicity of zeta_o^k.
std::vector<long> eigenvalue_multiplicities(const ClassFunction& chi, int element);
ClassFunction determinant_character(const ClassFunction& chi);
int determinantal_order(const ClassFunction& chi);
/// Order of a linear character.
int linear_order(const ClassFunction& lambda);

/// All extensions of an H-invariant phi to H, for H/L cyclic; equals Irr(H|phi).
std::vector<ClassFunction> extensions_cyclic(const ClassFunction& phi, const Subgroup& h);

/// (1/|G|) sum chi(g^2).
Cyclotomic frobenius_schur(const ClassFunction& chi);
NumberFieldDescriptor field_of_values(const ClassFunction& chi);

}  // namespace fgct
