#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fgct/chartab.hpp"

namespace fgct {

/// G_phi = {g in G : phi^g = phi}, for phi on a normal subgroup of G.
Subgroup inertia_group(const Subgroup& g, const ClassFunction& phi);

/// Whether phi^m = phi for all m in M.
bool is_invariant(const ClassFunction& phi, const Subgroup& m);

/// The orbit of phi under Gal(F(phi)/F), stored sorted.
struct GaloisOrbit {
  Subgroup base;
  NumberFieldDescriptor over;
  std::vector<ClassFunction> members;

  bool contains(const ClassFunction& chi) const;
  bool operator==(const GaloisOrbit& o) const { return base == o.base && members == o.members; }
};

GaloisOrbit galois_orbit(const ClassFunction& phi, const NumberFieldDescriptor& over = rationals_field());
/// {g in G : the orbit is mapped to itself by conjugation}.
Subgroup orbit_stabilizer(const Subgroup& g, const GaloisOrbit& orbit);
/// Union of Irr(G | member) over the orbit, sorted.
std::vector<ClassFunction> irr_over_orbit(const Subgroup& g, const GaloisOrbit& orbit);

struct SemiInvarianceCertificate {
  Subgroup group;
  ClassFunction phi;
  NumberFieldDescriptor field;  // F
  int modulus = 1;              // conductor of F(phi)
  std::vector<int> alpha;       // ambient element -> smallest Galois residue, -1 outside G
  Subgroup kernel;              // equals the inertia group
};

struct SemiInvariance {
  std::optional<SemiInvarianceCertificate> certificate;
  int witness = -1;  // an element with no matching Galois automorphism
};

/// For each g, the unique alpha_g in Gal(F(phi)/F) with phi^{g alpha_g} = phi, if all exist.
SemiInvariance semi_invariance(const Subgroup& g, const ClassFunction& phi,
                               const NumberFieldDescriptor& over = rationals_field());
/// Exhaustive homomorphism and kernel audit of a certificate.
bool audit_certificate(const SemiInvarianceCertificate& cert);

using CharacterPairs = std::vector<std::pair<ClassFunction, ClassFunction>>;

/// tau -> tau^G from Irr(T | orbit) onto Irr(G | orbit); T must be the orbit stabilizer.
CharacterPairs clifford_induction_bijection(const Subgroup& g, const Subgroup& t, const GaloisOrbit& orbit);

enum class GoingDown { InducedSameField, InducedGaloisShift, Restriction, FullyRamified };
const char* going_down_name(GoingDown c);

struct GoingDownResult {
  GoingDown kind;
  ClassFunction phi;  // the lexicographically least constituent of theta_L
  int e = 1;          // (theta_L, phi)
  /// For InducedGaloisShift: coset representatives of K/L with their Galois residues.
  std::vector<std::pair<int, int>> galois_shift;
};

/// Classifies theta in Irr(K) over a chief factor K/L of G, theta semi-invariant over F.
GoingDownResult going_down_classify(const Subgroup& g, const Subgroup& k, const Subgroup& l, const ClassFunction& theta,
                                    const NumberFieldDescriptor& over = rationals_field());

enum class Direction { Down, Up };

/// The unique M-invariant constituent of theta_L (Down) or phi^K (Up), where M acts
/// coprimely on K/L without nontrivial fixed points.
ClassFunction unique_invariant_constituent(Direction dir, const Subgroup& m, const Subgroup& k, const Subgroup& l,
                                           const ClassFunction& chi);

/// Irreducible constituents of chi restricted to L, sorted.
std::vector<ClassFunction> constituents_of_restriction(const ClassFunction& chi, const Subgroup& l);

}  // namespace fgct
