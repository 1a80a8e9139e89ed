// Faithful abelian p'-subgroups of Aut(P) for an abelian p-group P:
// fixed points, commutators, invariant direct decompositions into
// indecomposable factors, Frattini-quotient actions and eigenvalue orbits.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklab/abelian.hpp"
#include "blocklab/fppoly.hpp"

namespace blocklab {

// An automorphism of P = prod C_{p^{n_i}} as an integer matrix acting on
// exponent vectors; row i is taken mod p^{n_i} and entry (i, j) must be
// divisible by p^{max(0, n_i - n_j)}.
using ActionMatrix = std::vector<std::vector<long>>;

ActionMatrix action_identity(const AbelianPGroup& P);
ActionMatrix action_reduce(const AbelianPGroup& P, ActionMatrix m);
ActionMatrix action_mul(const AbelianPGroup& P, const ActionMatrix& a, const ActionMatrix& b);
AbelianPGroup::Elem action_apply(const AbelianPGroup& P, const ActionMatrix& m,
                                 const AbelianPGroup::Elem& x);
bool action_well_defined(const AbelianPGroup& P, const ActionMatrix& m);
bool action_invertible(const AbelianPGroup& P, const ActionMatrix& m);

class PAction {
 public:
  PAction(AbelianPGroup P, std::vector<ActionMatrix> generators);

  const AbelianPGroup& group() const { return P_; }
  const std::vector<ActionMatrix>& generators() const { return gens_; }
  const std::vector<ActionMatrix>& elements() const { return elements_; }  // the full group H
  long order() const { return (long)elements_.size(); }
  bool is_trivial_action() const { return elements_.size() == 1; }

  PAction restricted_to(const Subgroup& S) const;  // induced action on an invariant subgroup

 private:
  AbelianPGroup P_;
  std::vector<ActionMatrix> gens_;
  std::vector<ActionMatrix> elements_;
};

// P = [P,H] x C_P(H) with a machine-checked internal direct product witness.
struct FixedCommutatorSplit {
  Subgroup fixed;        // C_P(H)
  Subgroup commutator;   // [P,H]
  // witness: decomposition x = c + k, indexed by element index of P
  std::vector<std::pair<long, long>> split;  // (index in P of c, of k)
};
FixedCommutatorSplit fixed_and_commutator(const PAction& act);

// One invariant factor of an invariant direct decomposition.
struct InvariantFactor {
  Subgroup sub;                 // the factor inside P
  AbelianPGroup abstract_group; // its abstract shape
  PAction induced;              // the action of H on the abstract factor
  bool nontrivial_action;
};

struct ActionDecomposition {
  std::vector<InvariantFactor> factors;  // nontrivially acted factors first
  int t;                                 // number of nontrivially acted factors
};

// Invariant direct decomposition of P into indecomposable factors; the
// decomposition is verified (direct, homocyclic nontrivial factors,
// Frattini-irreducible) before being returned.
ActionDecomposition decompose(const PAction& act);

// Induced action on P/Phi(P); when `expect_indecomposable`, checks that the
// quotient action is again indecomposable and throws otherwise.
PAction frattini_action(const PAction& act, bool expect_indecomposable = false);

struct EigenOrbitData {
  ActionMatrix generator;  // generator of the cyclic group H
  long h_order;
  int m;                   // rank of the homocyclic group
  FpPoly char_poly;        // irreducible of degree m over F_p; eigenvalue = x mod it
};

// For an indecomposable action: H is cyclic, the generator has m distinct
// Frobenius-conjugate eigenvalues on P/Phi(P), and every nonzero vector of
// P/Phi(P) has trivial stabiliser. All three facts are machine-checked.
EigenOrbitData eigen_orbit(const PAction& act);

// Dual action on Irr(P): lambda -> lambda o h^{-1}.
DualCharacter dual_action(const AbelianPGroup& P, const ActionMatrix& h_inverse,
                          const DualCharacter& lam);
ActionMatrix action_inverse(const AbelianPGroup& P, const ActionMatrix& m);

// Irr(P) has a nontrivial fixed point iff P does; the equivalence itself is
// machine-checked and a mismatch throws.
bool fixed_char_exists(const PAction& act);

// Test oracle: exhaustive invariant-factor search, |P| <= 256.
std::optional<ActionDecomposition> brute_force_decompose(const PAction& act);

}  // namespace blocklab
