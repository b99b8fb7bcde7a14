#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgct/clifford.hpp"

namespace fgct {

// --- the form <x,y>_phi ----------------------------------------------------

/// <x,y>_phi for ambient elements with [x,y] in L = phi.group(), x and y
/// normalizing L and fixing phi. Computed from an extension chi of phi to
/// <L,x> as chi((lx)^y)/chi(lx), with l the first element of L (index order)
/// making chi(lx) nonzero.
Cyclotomic pairing(int x, int y, const ClassFunction& phi);

/// The same value for every extension of phi to <L,x> and every l with
/// chi(lx) != 0; throws TheoremViolation if the choices disagree.
Cyclotomic pairing_unanimous(int x, int y, const ClassFunction& phi);

/// Memoized form for a phi invariant in S. Values are cached per pair of L-cosets.
class FormTable {
 public:
  FormTable(Subgroup s, ClassFunction phi);

  const Subgroup& ambient() const noexcept { return s_; }
  const ClassFunction& phi() const noexcept { return phi_; }
  const Subgroup& base() const noexcept { return phi_.group(); }
  /// Whether [x,y] lies in L.
  bool defined(int x, int y) const;
  /// Throws FormUndefined when [x,y] is not in L.
  const Cyclotomic& operator()(int x, int y) const;

 private:
  struct Extension {
    ClassFunction chi;
    int point = -1;  // element lx with chi(lx) != 0
  };
  const Extension& extension(int rep) const;

  Subgroup s_;
  ClassFunction phi_;
  mutable std::map<int, Extension> ext_;
  mutable std::map<std::pair<int, int>, Cyclotomic> memo_;
};

/// Exhaustive check of the form laws on (S, L, phi), phi invariant in S, over
/// all coset representatives: bilinearity, alternation, inversion symmetry,
/// coset invariance (against direct evaluation at shifted representatives),
/// conjugation invariance and the Galois law.
struct FormLaws {
  long pairs = 0;  // defined pairs of coset representatives
  bool bilinear = true;
  bool alternating = true;
  bool inverse = true;
  bool coset = true;
  bool conjugation = true;
  bool galois = true;
  bool all() const { return bilinear && alternating && inverse && coset && conjugation && galois; }
};
FormLaws form_law_audit(const Subgroup& s, const ClassFunction& phi);

// --- good elements -----------------------------------------------------------

/// h is H-phi-good: <c,h> = 1 for every c in H with [c,h] in L.
bool is_good(const FormTable& form, int h, const Subgroup& context);

struct QuotientClass {
  int rep;                  // smallest ambient element mapping to the class
  int cosets;               // number of L-cosets in the class
  std::vector<int> elements;  // all ambient elements of the class preimage, sorted
};

/// Conjugacy classes of G/L, as preimages in G, ordered by smallest element.
std::vector<QuotientClass> quotient_classes(const Subgroup& g, const Subgroup& l);
/// phi-good classes of G/L, for phi invariant in G.
std::vector<QuotientClass> good_classes(const Subgroup& g, const ClassFunction& phi);

struct GallagherCount {
  long irr = 0;
  long good = 0;
  bool equal() const { return irr == good; }
};
GallagherCount gallagher_check(const Subgroup& g, const ClassFunction& phi);

// --- fully ramified sections -------------------------------------------------

/// The three tested characterizations, evaluated independently for one theta in Irr(K|phi):
/// (i) theta_L = n phi with n^2 = |K:L|; (iv) phi K-invariant and theta zero off L;
/// (vi) phi K-invariant and L is the only good class of K/L.
struct RamificationConditions {
  bool restriction = false;
  bool vanishing = false;
  bool only_trivial_good = false;
  bool agree() const { return restriction == vanishing && vanishing == only_trivial_good; }
};
RamificationConditions ramification_conditions(const Subgroup& k, const ClassFunction& phi, const ClassFunction& theta);

struct FullyRamified {
  ClassFunction theta;
  long n = 1;
};
/// The unique theta over phi when phi is fully ramified in K. Throws
/// TheoremViolation if the characterizations disagree for some theta.
std::optional<FullyRamified> is_fully_ramified(const Subgroup& k, const ClassFunction& phi);

/// Exponent of K/L.
int section_exponent(const Subgroup& k, const Subgroup& l);

// --- character fives -------------------------------------------------------------

enum class FiveKind { Invariant, SemiInvariant };

struct CharacterFive {
  Subgroup g, k, l;
  ClassFunction theta, phi;
  long n = 1;
  FiveKind kind = FiveKind::Invariant;
  bool abelian_kl = false;
  bool odd_kl = false;
  bool coprime = false;  // gcd(|G:K|, |K:L|) = 1
  std::optional<Subgroup> strongly_controlled_with;
};

/// Validates and builds the five over phi. With `control`, the strong
/// control conditions are checked for that N.
CharacterFive make_five(const Subgroup& g, const Subgroup& k, const ClassFunction& phi,
                        std::optional<Subgroup> control = std::nullopt);

/// zeta_e in Q(phi), e = exp(K/L), for abelian K/L.
bool root_of_unity_check(const CharacterFive& five);

/// H with HK = G, H cap K = L and all of H cap C_N(K/L) K-good, built from the
/// form: B = {c in C_N(K/L) : <c,k> = 1 for all k in K}, M/B a complement of
/// C/B in N/B, H = N_G(M).
Subgroup find_complement(const CharacterFive& five, const Subgroup& n);

/// Complements H of K/L in G/L (containing L) with H cap C_N(K/L) good, one per conjugacy class.
std::vector<Subgroup> good_complements(const CharacterFive& five, const Subgroup& n);

// --- magic characters --------------------------------------------------------------

struct MagicCharacter {
  Subgroup host;
  ClassFunction psi;  // character of H, L in its kernel
  bool genuine = true;
  int det_order = 1;
  bool canonical = false;
  bool rational = false;
};

/// Every genuine character psi of H/L of degree n satisfying the modulus law on
/// good and non-good elements and making chi_H = psi xi a bijection
/// Irr(G|theta) -> Irr(H|phi). Exhaustive over multiplicity vectors; sorted.
std::vector<MagicCharacter> magic_search(const CharacterFive& five, const Subgroup& h);

/// Whether psi satisfies the canonical-character predicate for odd |K:L|.
bool is_canonical(const CharacterFive& five, const ClassFunction& psi);
MagicCharacter canonical_select(const std::vector<MagicCharacter>& solutions, const CharacterFive& five);
MagicCharacter coprime_select(const std::vector<MagicCharacter>& solutions, const CharacterFive& five);

/// |psi(h)|^2 = |C_{K/L}(h)| on K-good h and 0 elsewhere.
bool modulus_law(const CharacterFive& five, const ClassFunction& psi);

// --- correspondences ----------------------------------------------------------------

struct FiveCorrespondence {
  Subgroup u, v;  // K <= U <= G and V = U cap H
  std::optional<ClassFunction> psi;
  bool parity = false;
  CharacterPairs pairs;  // (chi in Irr(U|theta), xi in Irr(V|phi)), sorted by chi
  std::map<std::string, bool> checks;
  bool all_checks() const;
};

/// chi_V = psi_V xi for K <= U <= G; verifies bijectivity, isometry, degree
/// ratio n, Galois equivariance over Q(phi) and Irr(U/K)-multiplication.
FiveCorrespondence five_correspondence(const CharacterFive& five, const Subgroup& h, const ClassFunction& psi,
                                       const Subgroup& u);
/// chi and xi correspond iff (chi_V, xi) is odd; needs |U:L| odd.
FiveCorrespondence parity_correspondence(const CharacterFive& five, const Subgroup& h, const Subgroup& u);

}  // namespace fgct
