// Perfect isometries between blocks: the bi-character integrality and
// p-regular separation tests, exhaustive enumeration of perfect
// self-isometries, and the structural checks they must pass.
#pragma once

#include "blocklab/char_theory.hpp"

namespace blocklab {

// I(chi_i) = sign[i] * chi'_{perm[i]}
struct SignedBijection {
  std::vector<long> perm;
  std::vector<int> sign;  // +1 / -1
};

SignedBijection identity_isometry(long n);
SignedBijection compose(const SignedBijection& f, const SignedBijection& g);  // f after g
SignedBijection invert(const SignedBijection& f);

struct PerfectCheck {
  bool perfect = false;
  // offending (class of source, class of target, reason) triples
  std::vector<std::string> failures;
};

// Bi-character test: mu(g, h) = sum_i sign_i chi_i(g) chi'_{perm(i)}(h^{-1})
// must vanish when exactly one argument is p-regular, and
// mu(g,h)/|C(g)|, mu(g,h)/|C(h)| must be P-integral at every class pair.
PerfectCheck is_perfect(const BlockData& source, const BlockData& target,
                        const SignedBijection& iso, const PrimeIdeal& prime);
PerfectCheck is_perfect_self(const BlockData& data, const SignedBijection& iso);

struct IsometryGroup {
  std::vector<SignedBijection> members;   // canonically sorted
  long candidates_considered = 0;
  bool degree_prune_used = true;
};

// All perfect self-isometries, by search over sign-permutation candidates.
// Throws SpecError when |Irr(B)| exceeds max_irr. The result is verified to
// be a group containing -identity.
IsometryGroup enumerate_self_isometries(const BlockData& data, int max_irr, int jobs = 1,
                                        bool degree_prune = true);

// For a sign-free permutation admitting sigma_br: the images of the inflated
// characters must share one common linear character theta on D2, with the
// complementary parts lying in Irr(D1 x| E, phi).
struct FixedPartTwist {
  bool ok = false;
  DualCharacter theta;                 // on the abstract D2
  std::vector<long> psi_indices;       // image in Irr(D1 x| E, phi) per Irr(E, phi)
  std::string violation;
};
FixedPartTwist check_d2_twist(const BlockData& data, const BlockData& d1_block,
                              const std::vector<long>& sigma);

// sigma maps { chi : lambda trivial on D1 } onto itself
bool check_d1_kernel(const BlockData& data, const std::vector<long>& sigma);

// tensor with a linear character of D2 (a known perfect self-isometry)
SignedBijection tensor_by_d2_character(const BlockData& data, const DualCharacter& theta_d2);

// chi induced from a normal subgroup N lands in [Stab_G(chi) : N] O at every
// class; the containment is checked by valuations and must hold.
bool induction_integrality(const FiniteGroup& g, const SubgroupView& n_view,
                           const ClassFunction& chi, const PrimeIdeal& prime);

}  // namespace blocklab
