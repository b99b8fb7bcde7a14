#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fgct/ramified.hpp"

namespace fgct {

// --- traces -----------------------------------------------------------------

enum class StepTag { InertiaReduction, ChiefRestriction, ChiefInduced, FullyRamifiedStep };
const char* step_tag_name(StepTag t);

/// One reduction performed by the engine. `factor` is the step's own
/// contribution to input(1)/output(1); the product over a trace is the
/// total degree ratio. Steps of nested calls follow with depth + 1.
struct CorrespondenceStep {
  StepTag tag;
  int depth = 0;
  Subgroup g, k, l, h;
  ClassFunction theta, phi;
  ClassFunction input, output;
  long factor = 1;
  std::optional<ClassFunction> psi;  // the canonical magic character, fully ramified steps only
  std::optional<bool> parity_agrees;  // set when the parity rule was also run
};

struct CorrespondenceTrace {
  ClassFunction initial, final;
  std::vector<CorrespondenceStep> steps;
  long ratio() const;
};

/// Alternative internal choices. The default picks the lexicographically least
/// candidate everywhere; each flag picks the greatest one instead.
struct EngineOptions {
  bool reverse_chief = false;         // minimal normal subgroup used for chief refinement
  bool reverse_constituents = false;  // A-invariant constituent theta of chi_K
  bool reverse_extension = false;     // extension of chi from N to AN
};

// --- the strong correspondence -----------------------------------------------

/// L <= K normal in G, M/L acting coprimely and fixed-point-freely on K/L of odd
/// order with MK normal in G; theta in Irr_M(K) lies over phi in Irr_M(L).
struct StrongSection {
  Subgroup g, k, l, m;
  ClassFunction theta, phi;
};

/// Validates the hypotheses; even |K/L| is HypothesisViolated.
void check_strong_section(const StrongSection& s);

/// The image in Irr(H | phi), H = N_G(M), of chi in Irr(G | theta).
ClassFunction strong_correspondent(const StrongSection& s, const ClassFunction& chi,
                                   CorrespondenceTrace* trace = nullptr, const EngineOptions& opt = {});

struct StrongBijection {
  Subgroup h;
  long n = 1;  // theta(1)/phi(1)
  CharacterPairs pairs;  // over the whole Galois orbit of theta, sorted
  bool bijective = false;
  bool degree_ratio = false;
  bool fields = false;
  bool galois = false;
  bool all() const { return bijective && degree_ratio && fields && galois; }
};
/// Irr(G | Galois orbit of theta) -> Irr(H | Galois orbit of phi), with exhaustive checks.
StrongBijection strong_correspondence(const StrongSection& s, const EngineOptions& opt = {});

// --- the Isaacs correspondence -----------------------------------------------------

/// A acting on N inside an ambient G with AN normal in G. C = C_N(A), U = N_G(A).
struct CoprimeSetup {
  std::string name;
  Subgroup g, n, a;
  Subgroup an, c, u;
};

CoprimeSetup make_setup(const SemidirectProduct& sd, std::string name);
CoprimeSetup make_setup(const Subgroup& g, const Subgroup& n, const Subgroup& a, std::string name);

/// Irr_A(N), sorted.
std::vector<ClassFunction> invariant_irr(const CoprimeSetup& s);

/// One pass of the recursion: K = [N,A], L = K', M = AL, H = N_{AN}(M).
struct IsaacsLevel {
  Subgroup n, k, l, lc, h;
  ClassFunction chi, theta, phi;
  ClassFunction extension;  // of chi to AN
  ClassFunction image;      // of the extension in Irr(H | phi)
  ClassFunction psi;        // image restricted to LC
};

struct IsaacsResult {
  ClassFunction chi, star;
  std::vector<IsaacsLevel> levels;
  CorrespondenceTrace trace;
};

/// Errors: EvenOrder for even |N|, NotCoprime, NotInvariant.
IsaacsResult isaacs_correspondent(const CoprimeSetup& s, const ClassFunction& chi, const EngineOptions& opt = {});

/// True iff chi* is the same under every combination of EngineOptions.
bool verify_trace_independence(const CoprimeSetup& s, const ClassFunction& chi);

struct IsaacsBijection {
  CharacterPairs pairs;  // (chi, chi*) sorted by chi
  bool bijective = false;
  bool fields = false;
  bool galois = false;
  bool u_equivariant = false;
  bool degree_divides = false;  // chi*(1) | chi(1) and the trace ratios multiply up
  bool trace_independent = false;
  bool all() const { return bijective && fields && galois && u_equivariant && degree_divides && trace_independent; }
};
IsaacsBijection isaacs_bijection(const CoprimeSetup& s);

struct AboveCorrespondence {
  ClassFunction chi, star;
  CharacterPairs pairs;  // (beta in Irr(G | chi), beta* in Irr(U | chi*)), sorted by beta
  std::vector<CorrespondenceTrace> traces;
  long domain = 0, codomain = 0;
  bool bijective = false;
  bool constant_ratio = false;
  bool fields = false;
  bool all() const { return bijective && constant_ratio && fields; }
};
AboveCorrespondence above_correspondence(const CoprimeSetup& s, const ClassFunction& chi,
                                         const EngineOptions& opt = {});

}  // namespace fgct
