// The q-commuting nilpotent model of the basic algebra of a block with one
// simple module: duality between L and its character group, the q-matrix
// from commutators and eigencharacters, the truncated q-polynomial algebra
// over a Galois ring, and automorphism scans for T-ideal invariance.
#pragma once

#include <map>
#include <memory>

#include "blocklab/char_theory.hpp"
#include "blocklab/galois_ring.hpp"

namespace blocklab {

// g -> phi([g~, h~]) as an exact character table of L; the map is verified
// to be an injective homomorphism L -> Hom(L, roots of unity).
struct DualityData {
  std::vector<std::vector<long>> table;  // table[g][h] = exponent of zeta_M
  long root_order;                       // M = exp(L)
  std::vector<long> l_reps;              // E-indices representing L
};
DualityData duality_iso(const InertialGroup& e, long phi_exponent);

struct QMatrixData {
  int n = 0;                       // number of factors
  int t = 0;                       // nontrivially acted prefix
  std::vector<int> m;              // m_i per factor
  std::vector<int> nexp;           // n_i per factor (caps p^{n_i})
  long root_order = 1;             // exponents live mod this M
  // exponent of zeta_M for each ordered generator pair, flattened
  std::vector<std::vector<long>> q_exp;
  std::vector<std::vector<long>> h_witness;  // E-index of h_{ij}
  int index_count() const;
  // flattened position of generator (i, j), 0-based factor i, 0 <= j < m_i
  int flat(int i, int j) const;
};

// q-matrix of a one-simple-module block; every entry is cross-checked
// against the eigencharacter formula and a mismatch throws.
QMatrixData compute_q_matrix(const BlockData& data);

struct QPropertyReport {
  bool intra_block_trivial = true;    // q_{(i,j1),(i,j2)} = 1
  bool antisymmetric = true;          // q_{a,b} q_{b,a} = 1
  bool frobenius_linked = true;       // q_{a,(i,j+1)} = q_{a,(i,j)}^p
  bool trivial_rows_match_t = true;   // row trivial iff factor beyond t
  bool columns_separate = true;       // separating column for j1 != j2, i <= t
  std::vector<std::string> violations;
  bool all() const {
    return intra_block_trivial && antisymmetric && frobenius_linked && trivial_rows_match_t &&
           columns_separate;
  }
};
QPropertyReport verify_q_properties(const QMatrixData& q, long p);

enum class QciMode { strict, p2 };  // X^{p^{n_i}} = 0  vs  X_{ij}^2 = 2 X_{i,j+1}

class QciAlgebra {
 public:
  // Builds the algebra over GR(p^m, d) with d minimal so that the q-values
  // embed; mode p2 requires p = 2 and n_i = 1 for i <= t.
  QciAlgebra(long p, int ring_m, const QMatrixData& q, QciMode mode);

  using Mono = std::vector<uint8_t>;  // exponent vector, l_{ij} < p^{n_i}
  struct Elem {
    std::map<Mono, GRElem> terms;
    bool operator==(const Elem& o) const { return terms == o.terms; }
  };

  const GaloisRing& ring() const { return *ring_; }
  const QMatrixData& qdata() const { return q_; }
  QciMode mode() const { return mode_; }
  int num_generators() const { return ngen_; }
  long cap(int flat_idx) const { return caps_[flat_idx]; }
  long basis_size() const;  // = |D|
  bool in_t_prefix(int flat_idx) const;

  Elem zero() const { return Elem{}; }
  Elem one() const;
  Elem generator(int flat_idx) const;
  Elem from_terms(std::map<Mono, GRElem> terms) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem scale(const GRElem& c, const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, long e) const;
  bool is_zero(const Elem& a) const { return a.terms.empty(); }

  // true iff every monomial involves some generator with factor index <= t
  bool t_ideal_member(const Elem& x) const;

  // enumerate all monomials (the basis)
  std::vector<Mono> basis() const;
  // augmentation-zero elements indexed for scans: coefficients on all
  // non-constant monomials, mixed radix over the ring size
  Elem element_from_scan_index(unsigned long long idx, const std::vector<Mono>& basis_monos) const;
  unsigned long long scan_space_per_generator() const;

  GRElem q_value(int a, int b) const;  // q_{a,b} mapped into the ring

 private:
  void reduce_monomial(Mono mono, GRElem coeff, Elem& out) const;
  long p_;
  QMatrixData q_;
  QciMode mode_;
  int ngen_;
  std::vector<long> caps_;
  std::vector<int> factor_of_;   // flat index -> factor
  std::vector<int> pos_of_;      // flat index -> j within factor
  std::shared_ptr<GaloisRing> ring_;
  GRElem q_root_;                // primitive root of order root_order in the ring
};

enum class EndoClass { not_homomorphism, not_invertible, automorphism };

// classify generator images (augmentation-zero) as an endomorphism
EndoClass check_endomorphism(const QciAlgebra& a, const std::vector<QciAlgebra::Elem>& images);

struct ScanReport {
  unsigned long long tuples_checked = 0;
  unsigned long long homomorphisms = 0;
  unsigned long long automorphisms = 0;
  unsigned long long t_violations = 0;   // automorphisms moving T (must stay 0)
  bool exhaustive = false;
  double coverage = 0.0;                 // fraction of the tuple space
  std::vector<std::string> counterexamples;
};

// Exhaustive when the tuple space fits the budget, otherwise seeded uniform
// sampling. Any automorphism moving a T-generator out of T is recorded (and
// would falsify the invariance statement).
ScanReport t_invariance_scan(const QciAlgebra& a, long budget, uint64_t seed, int jobs = 1);

}  // namespace blocklab
