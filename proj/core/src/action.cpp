#include "blocklab/action.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "blocklab/numutil.hpp"

namespace blocklab {

namespace {

std::string serialize_matrix(const ActionMatrix& m) {
  std::string s;
  for (const auto& row : m)
    for (long v : row) s += std::to_string(v) + ",";
  return s;
}

}  // namespace

ActionMatrix action_identity(const AbelianPGroup& P) {
  int r = P.rank();
  ActionMatrix m(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

ActionMatrix action_reduce(const AbelianPGroup& P, ActionMatrix m) {
  for (int i = 0; i < P.rank(); ++i)
    for (int j = 0; j < P.rank(); ++j)
      m[i][j] = ((m[i][j] % P.modulus(i)) + P.modulus(i)) % P.modulus(i);
  return m;
}

ActionMatrix action_mul(const AbelianPGroup& P, const ActionMatrix& a, const ActionMatrix& b) {
  int r = P.rank();
  ActionMatrix m(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < r; ++j)
        m[i][j] = (m[i][j] + a[i][k] * b[k][j]) % P.modulus(i);
    }
  return action_reduce(P, std::move(m));
}

AbelianPGroup::Elem action_apply(const AbelianPGroup& P, const ActionMatrix& m,
                                 const AbelianPGroup::Elem& x) {
  int r = P.rank();
  AbelianPGroup::Elem y(r, 0);
  for (int i = 0; i < r; ++i) {
    long s = 0;
    for (int j = 0; j < r; ++j) s = (s + m[i][j] % P.modulus(i) * (x[j] % P.modulus(i))) % P.modulus(i);
    y[i] = ((s % P.modulus(i)) + P.modulus(i)) % P.modulus(i);
  }
  return y;
}

bool action_well_defined(const AbelianPGroup& P, const ActionMatrix& m) {
  int r = P.rank();
  if ((int)m.size() != r) return false;
  for (int i = 0; i < r; ++i) {
    if ((int)m[i].size() != r) return false;
    for (int j = 0; j < r; ++j) {
      if (P.exponents()[i] > P.exponents()[j]) {
        long need = ipow(P.p(), P.exponents()[i] - P.exponents()[j]);
        if (m[i][j] % need != 0) return false;
      }
    }
  }
  return true;
}

bool action_invertible(const AbelianPGroup& P, const ActionMatrix& m) {
  int r = P.rank();
  FpMat mp(r, std::vector<long>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) mp[i][j] = ((m[i][j] % P.p()) + P.p()) % P.p();
  return fpmat::det(mp, P.p()) != 0;
}

PAction::PAction(AbelianPGroup P, std::vector<ActionMatrix> generators)
    : P_(std::move(P)), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    g = action_reduce(P_, std::move(g));
    if (!action_well_defined(P_, g))
      throw SpecError("action matrix violates the divisibility constraints");
    if (!action_invertible(P_, g))
      throw SpecError("action matrix is not invertible mod p");
  }
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (action_mul(P_, gens_[i], gens_[j]) != action_mul(P_, gens_[j], gens_[i]))
        throw SpecError("action generators do not commute");
  // closure
  std::map<std::string, int> seen;
  elements_.push_back(action_identity(P_));
  seen[serialize_matrix(elements_[0])] = 0;
  for (size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& g : gens_) {
      ActionMatrix m = action_mul(P_, elements_[head], g);
      std::string key = serialize_matrix(m);
      if (!seen.count(key)) {
        seen[key] = (int)elements_.size();
        elements_.push_back(std::move(m));
        if (elements_.size() > 1000000) throw SpecError("automorphism group too large");
      }
    }
  }
  if (P_.order() > 1 && (long)elements_.size() % P_.p() == 0)
    throw SpecError("automorphism group order is divisible by p");
}

PAction PAction::restricted_to(const Subgroup& S) const {
  AbelianPGroup A = S.abstract_group();
  int k = (int)S.basis.size();
  std::vector<ActionMatrix> gens;
  for (const auto& g : gens_) {
    ActionMatrix m(k, std::vector<long>(k, 0));
    for (int j = 0; j < k; ++j) {
      auto img = action_apply(P_, g, S.basis[j]);
      if (!S.contains(img)) throw SpecError("subgroup is not invariant under the action");
      auto c = subgroup_coordinates(S, img);
      for (int i = 0; i < k; ++i) m[i][j] = c[i];
    }
    gens.push_back(std::move(m));
  }
  return PAction(std::move(A), std::move(gens));
}

namespace {

// kernel of x -> F x (mod row moduli) as a subgroup of P; the map must be
// well defined on P, i.e. row_mods[i] | F[i][j] * p^{n_j} for all i, j
Subgroup congruence_kernel(const AbelianPGroup& P, const std::vector<std::vector<long>>& f_rows,
                           const std::vector<long>& row_mods) {
  int r = P.rank();
  size_t k = f_rows.size();
  for (size_t i = 0; i < k; ++i)
    for (int j = 0; j < r; ++j)
      if ((f_rows[i][j] % row_mods[i]) * P.modulus(j) % row_mods[i] != 0)
        throw SpecError("congruence_kernel: map not well defined on P");
  ZMat a(k, ZVec(r + k, 0));
  for (size_t i = 0; i < k; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = f_rows[i][j];
    a[i][r + i] = row_mods[i];
  }
  ZMat ker = integer_kernel(a);
  std::vector<AbelianPGroup::Elem> gens;
  for (const auto& row : ker) {
    AbelianPGroup::Elem e(r);
    for (int j = 0; j < r; ++j) {
      mpz_class red = row[j] % P.modulus(j);
      if (red < 0) red += P.modulus(j);
      e[j] = red.get_si();
    }
    gens.push_back(std::move(e));
  }
  for (int i = 0; i < r; ++i) gens.push_back(P.identity());  // moduli are implicit
  return subgroup_from_generators(P, gens);
}

}  // namespace

FixedCommutatorSplit fixed_and_commutator(const PAction& act) {
  const AbelianPGroup& P = act.group();
  int r = P.rank();
  // fixed points: kernel of stacked (M_g - I)
  std::vector<std::vector<long>> rows;
  std::vector<long> mods;
  for (const auto& g : act.generators()) {
    for (int i = 0; i < r; ++i) {
      std::vector<long> row(r);
      for (int j = 0; j < r; ++j) row[j] = g[i][j] - (i == j ? 1 : 0);
      rows.push_back(std::move(row));
      mods.push_back(P.modulus(i));
    }
  }
  Subgroup fixed = rows.empty() ? full_subgroup(P) : congruence_kernel(P, rows, mods);
  // commutator: generated by (M_g - I) e_j
  std::vector<AbelianPGroup::Elem> cgens;
  for (const auto& g : act.generators())
    for (int j = 0; j < r; ++j) {
      auto img = action_apply(P, g, P.generator(j));
      cgens.push_back(P.add(img, P.neg(P.generator(j))));
    }
  Subgroup comm = subgroup_from_generators(P, cgens);

  FixedCommutatorSplit out{std::move(fixed), std::move(comm), {}};
  if (out.fixed.size * out.commutator.size != P.order())
    throw VerificationError("fixed-point/commutator product has wrong order: " +
                            std::to_string(out.fixed.size) + " * " +
                            std::to_string(out.commutator.size) + " != " +
                            std::to_string(P.order()));
  if (P.order() <= 100000) {
    out.split.assign(P.order(), {-1, -1});
    AbelianPGroup FC = out.fixed.abstract_group();
    AbelianPGroup KC = out.commutator.abstract_group();
    for (long ci = 0; ci < FC.order(); ++ci) {
      AbelianPGroup::Elem c = P.identity();
      auto cc = FC.element_at(ci);
      for (size_t j = 0; j < cc.size(); ++j)
        c = P.add(c, P.scale(cc[j], out.fixed.basis[j]));
      for (long ki = 0; ki < KC.order(); ++ki) {
        AbelianPGroup::Elem k = P.identity();
        auto kc = KC.element_at(ki);
        for (size_t j = 0; j < kc.size(); ++j)
          k = P.add(k, P.scale(kc[j], out.commutator.basis[j]));
        long idx = P.index_of(P.add(c, k));
        if (out.split[idx].first != -1)
          throw VerificationError("fixed-point/commutator decomposition is not direct");
        out.split[idx] = {P.index_of(c), P.index_of(k)};
      }
    }
    for (const auto& [a, b] : out.split)
      if (a == -1) throw VerificationError("fixed-point/commutator decomposition misses elements");
  }
  return out;
}

namespace {

// ----- F_p side: isotypic refinement of the Frattini quotient -----

struct FpSubspace {
  FpMat basis;  // rows
};

// matrix of the restriction of m to the row span of basis
FpMat restrict_matrix(const FpMat& m, const FpMat& basis, long p) {
  size_t k = basis.size();
  size_t s = basis.empty() ? 0 : basis[0].size();
  // solve basis^T * S = m * basis^T columnwise
  FpMat bt(s, std::vector<long>(k));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < k; ++j) bt[i][j] = basis[j][i];
  FpMat S(k, std::vector<long>(k, 0));
  for (size_t i = 0; i < k; ++i) {
    std::vector<long> rhs = fpmat::apply(m, basis[i], p);
    std::vector<long> col;
    if (!fpmat::solve(bt, rhs, col, p))
      throw SpecError("restrict_matrix: subspace not invariant");
    for (size_t j = 0; j < k; ++j) S[j][i] = col[j];
  }
  return S;
}

FpMat subspace_mul(const FpMat& coeff_rows, const FpMat& basis, long p) {
  return fpmat::mul(coeff_rows, basis, p);
}

struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed ? seed : 0x2545F4914F6CDD1DULL) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

// Splits V into isotypic components of the commuting family `mats`
// (the full automorphism group on the Frattini quotient).
std::vector<FpMat> isotypic_components(const std::vector<FpMat>& mats, int dim, long p,
                                       uint64_t seed) {
  std::vector<FpMat> spaces{fpmat::identity(dim)};
  auto refine_by = [&](const FpMat& m) {
    std::vector<FpMat> next;
    for (const auto& W : spaces) {
      FpMat S = restrict_matrix(m, W, p);
      FpPoly mp = fpmat::min_poly(S, p);
      auto factors = fp::factor(mp, p, 0x5eed);
      if (factors.size() == 1 && factors[0].second == 1) {
        next.push_back(W);
        continue;
      }
      for (const auto& [f, mult] : factors) {
        FpPoly fm = f;
        for (int i = 1; i < mult; ++i) fm = fp::mul(fm, f, p);
        // evaluate fm at S
        FpMat val(S.size(), std::vector<long>(S.size(), 0));
        for (int i = fp::deg(fm); i >= 0; --i) {
          val = fpmat::mul(val, S, p);
          for (size_t d = 0; d < val.size(); ++d) val[d][d] = ((val[d][d] + fm[i]) % p + p) % p;
        }
        FpMat ker = fpmat::kernel(val, p);
        if (!ker.empty()) next.push_back(subspace_mul(ker, W, p));
      }
    }
    spaces = std::move(next);
  };
  for (const auto& m : mats) refine_by(m);

  // certify each space: the restricted algebra is a field; otherwise keep
  // splitting with deterministic pseudo-random algebra elements
  XorShift rng(seed);
  bool all_certified = false;
  int rounds = 0;
  while (!all_certified) {
    if (++rounds > 200) throw VerificationError("isotypic refinement did not stabilize");
    all_certified = true;
    for (size_t wi = 0; wi < spaces.size(); ++wi) {
      const FpMat& W = spaces[wi];
      // span of the restricted group matrices
      std::vector<FpMat> rest;
      for (const auto& m : mats) rest.push_back(restrict_matrix(m, W, p));
      size_t k = W.size();
      // dimension of the algebra they span
      FpMat span_rows;
      for (const auto& S : rest) {
        std::vector<long> flat;
        for (const auto& row : S) flat.insert(flat.end(), row.begin(), row.end());
        span_rows.push_back(std::move(flat));
      }
      // close under products (commutative, generated by group elements, so
      // group closure already spans the algebra)
      FpMat tmp = span_rows;
      size_t dim_alg = fpmat::rref(tmp, p).size();
      // find an element with irreducible min poly of degree = dim_alg
      bool certified = false;
      for (int attempt = 0; attempt < 60 && !certified; ++attempt) {
        FpMat cand(k, std::vector<long>(k, 0));
        if (attempt < (int)rest.size()) {
          cand = rest[attempt];
        } else {
          for (const auto& S : rest) {
            long c = (long)(rng.next() % (uint64_t)p);
            if (c == 0) continue;
            for (size_t i = 0; i < k; ++i)
              for (size_t j = 0; j < k; ++j) cand[i][j] = (cand[i][j] + c * S[i][j]) % p;
          }
        }
        FpPoly mp = fpmat::min_poly(cand, p);
        if ((size_t)fp::deg(mp) == dim_alg && fp::is_irreducible(mp, p)) certified = true;
        if (!certified && fp::deg(mp) > 0) {
          auto factors = fp::factor(mp, p, 0x5eed);
          if (factors.size() > 1 || factors[0].second > 1) {
            // genuine splitting found: refine this space and restart
            std::vector<FpMat> pieces;
            for (const auto& [f, mult] : factors) {
              FpPoly fm = f;
              for (int i = 1; i < mult; ++i) fm = fp::mul(fm, f, p);
              FpMat val(k, std::vector<long>(k, 0));
              for (int i = fp::deg(fm); i >= 0; --i) {
                val = fpmat::mul(val, cand, p);
                for (size_t d = 0; d < k; ++d) val[d][d] = ((val[d][d] + fm[i]) % p + p) % p;
              }
              FpMat kerm = fpmat::kernel(val, p);
              if (!kerm.empty()) pieces.push_back(subspace_mul(kerm, W, p));
            }
            if (pieces.size() > 1) {
              spaces.erase(spaces.begin() + wi);
              for (auto& pc : pieces) spaces.push_back(std::move(pc));
              certified = false;
              all_certified = false;
              break;
            }
          }
        }
      }
      if (!certified && all_certified) all_certified = false;
    }
  }
  return spaces;
}

// ----- group algebra coefficients over Z/p^N for idempotent lifting -----

struct HGroupTable {
  int n = 0;
  std::vector<std::vector<int>> mul;
};

HGroupTable h_table(const PAction& act) {
  HGroupTable t;
  t.n = (int)act.elements().size();
  std::map<std::string, int> idx;
  for (int i = 0; i < t.n; ++i) idx[serialize_matrix(act.elements()[i])] = i;
  t.mul.assign(t.n, std::vector<int>(t.n));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      t.mul[i][j] = idx.at(serialize_matrix(
          action_mul(act.group(), act.elements()[i], act.elements()[j])));
  return t;
}

using HCoeffs = std::vector<long>;  // indexed by H element

HCoeffs h_mul(const HGroupTable& t, const HCoeffs& a, const HCoeffs& b, long mod) {
  HCoeffs r(t.n, 0);
  for (int i = 0; i < t.n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < t.n; ++j) {
      if (b[j] == 0) continue;
      int k = t.mul[i][j];
      r[k] = (r[k] + a[i] * b[j]) % mod;
    }
  }
  return r;
}

HCoeffs h_scale(const HCoeffs& a, long c, long mod) {
  HCoeffs r = a;
  for (auto& x : r) x = (((x * c) % mod) + mod) % mod;
  return r;
}

HCoeffs h_add(const HCoeffs& a, const HCoeffs& b, long mod) {
  HCoeffs r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = ((r[i] + b[i]) % mod + mod) % mod;
  return r;
}

bool h_equal(const HCoeffs& a, const HCoeffs& b, long mod) {
  for (size_t i = 0; i < a.size(); ++i)
    if (((a[i] - b[i]) % mod + mod) % mod != 0) return false;
  return true;
}

// Hensel lift of an idempotent from mod p to mod p^N
HCoeffs lift_idempotent(const HGroupTable& t, HCoeffs e, long p, long pn) {
  long prec = p;
  while (prec < pn) {
    prec = std::min(pn, prec * prec);
    // e <- 3e^2 - 2e^3 mod pn (computing at full modulus is fine)
    HCoeffs e2 = h_mul(t, e, e, pn);
    HCoeffs e3 = h_mul(t, e2, e, pn);
    e = h_add(h_scale(e2, 3, pn), h_scale(e3, pn - 2, pn), pn);
  }
  HCoeffs e2 = h_mul(t, e, e, pn);
  if (!h_equal(e2, e, pn)) throw VerificationError("idempotent lift failed to converge");
  return e;
}

AbelianPGroup::Elem map_to_parent(const Subgroup& S, const AbelianPGroup::Elem& abstract_elem) {
  AbelianPGroup::Elem e = S.parent.identity();
  for (size_t j = 0; j < abstract_elem.size(); ++j)
    e = S.parent.add(e, S.parent.scale(abstract_elem[j], S.basis[j]));
  return e;
}

// Invariant complement of an invariant pure subgroup Q inside the ambient
// abstract group A with action matrices for every element of H.
Subgroup invariant_complement(const AbelianPGroup& A, const std::vector<ActionMatrix>& h_elems,
                              const Subgroup& q) {
  int r = A.rank();
  long p = A.p();
  // non-invariant complement first: lift quotient generators with matching order
  ZMat bq;  // lattice of Q
  bq = q.lattice_hnf;
  SmithResult snf = smith_normal_form(bq);
  // rows of W = V^{-1}: Z^r basis adapted to the quotient; coset order of w_i is d_i
  ZMat w(r, ZVec(r));
  {
    // W = V^{-1}
    for (int j = 0; j < r; ++j) {
      ZVec e(r, 0);
      e[j] = 1;
      auto sol = solve_integer(snf.v, e);
      if (!sol) throw SpecError("complement: SNF transform not invertible");
      for (int i = 0; i < r; ++i) w[i][j] = (*sol)[i];
    }
  }
  std::vector<AbelianPGroup::Elem> comp_gens;
  for (int i = 0; i < r; ++i) {
    mpz_class d = snf.d[i][i];
    if (d < 0) d = -d;
    if (d == 1) continue;  // coset trivial
    long di = d.get_si();
    AbelianPGroup::Elem wi(r);
    for (int j = 0; j < r; ++j) {
      mpz_class red = w[i][j] % A.modulus(j);
      if (red < 0) red += A.modulus(j);
      wi[j] = red.get_si();
    }
    long coset_order = di;  // order of w_i + Q in A/Q
    // adjust so that coset_order * y = 0 exactly: solve in Q
    AbelianPGroup::Elem target = A.scale(coset_order, wi);
    if (!q.contains(target)) throw SpecError("complement: quotient order bookkeeping failed");
    auto u = subgroup_coordinates(q, target);
    AbelianPGroup::Elem corr = A.identity();
    for (size_t j = 0; j < u.size(); ++j) {
      long mod_j = ipow(p, q.basis_exps[j]);
      long g = gcd_long(coset_order, mod_j);
      if (u[j] % g != 0)
        throw SpecError("complement: subgroup is not pure (unexpected)");
      long cj = (u[j] / g) % mod_j * mod_inverse(coset_order / g, mod_j) % mod_j;
      corr = A.add(corr, A.scale(cj, q.basis[j]));
    }
    comp_gens.push_back(A.add(wi, A.neg(corr)));
  }
  Subgroup c0 = subgroup_from_generators(A, comp_gens);
  if (c0.size * q.size != A.order())
    throw SpecError("complement: plain complement has wrong size");

  // projection onto Q along c0, as an integer matrix on A's coordinates
  int kq = (int)q.basis.size(), kc = (int)c0.basis.size();
  std::vector<std::vector<long>> proj(r, std::vector<long>(r, 0));
  {
    ZMat sys(r, ZVec(kq + kc + r, 0));
    for (int j = 0; j < kq; ++j)
      for (int i = 0; i < r; ++i) sys[i][j] = q.basis[j][i];
    for (int j = 0; j < kc; ++j)
      for (int i = 0; i < r; ++i) sys[i][kq + j] = c0.basis[j][i];
    for (int i = 0; i < r; ++i) sys[i][kq + kc + i] = A.modulus(i);
    for (int col = 0; col < r; ++col) {
      ZVec rhs(r, 0);
      rhs[col] = 1;
      auto sol = solve_integer(sys, rhs);
      if (!sol) throw SpecError("complement: coordinate solve failed");
      // Q-part of e_col
      AbelianPGroup::Elem img = A.identity();
      for (int j = 0; j < kq; ++j) {
        mpz_class cj = (*sol)[j];
        mpz_class red = cj % ipow(p, q.basis_exps[j]);
        if (red < 0) red += ipow(p, q.basis_exps[j]);
        img = A.add(img, A.scale(red.get_si(), q.basis[j]));
      }
      for (int i = 0; i < r; ++i) proj[i][col] = img[i];
    }
  }
  // average over H
  long hn = (long)h_elems.size();
  long nmax = A.exponent();
  long hinv = mod_inverse(hn % nmax, nmax);
  std::vector<std::vector<long>> avg(r, std::vector<long>(r, 0));
  for (const auto& h : h_elems) {
    // h * proj * h^{-1}
    // find h^{-1} within the element list
    ActionMatrix hi;
    for (const auto& cand : h_elems)
      if (action_mul(A, h, cand) == action_identity(A)) {
        hi = cand;
        break;
      }
    if (hi.empty() && r > 0) throw SpecError("complement: missing inverse element");
    if (r == 0) break;
    ActionMatrix t = action_mul(A, action_mul(A, h, proj), hi);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) avg[i][j] = (avg[i][j] + t[i][j]) % A.modulus(i);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      avg[i][j] = (avg[i][j] % A.modulus(i)) * (hinv % A.modulus(i)) % A.modulus(i);
  ActionMatrix pi = action_reduce(A, avg);
  // checks: idempotent, image in Q, identity on Q
  if (action_mul(A, pi, pi) != pi)
    throw SpecError("complement: averaged projection is not idempotent");
  for (int j = 0; j < r; ++j) {
    auto img = action_apply(A, pi, A.generator(j));
    if (!q.contains(img)) throw SpecError("complement: averaged image leaves the factor");
  }
  for (const auto& b : q.basis)
    if (action_apply(A, pi, b) != b)
      throw SpecError("complement: averaged projection does not fix the factor");

  // invariant complement = kernel of pi
  std::vector<std::vector<long>> rows;
  std::vector<long> mods;
  for (int i = 0; i < r; ++i) {
    rows.push_back(pi[i]);
    mods.push_back(A.modulus(i));
  }
  Subgroup comp = congruence_kernel(A, rows, mods);
  if (comp.size * q.size != A.order())
    throw SpecError("complement: invariant complement has wrong size");
  return comp;
}

struct PeelContext {
  const PAction* act;  // action on the top-level P
};

// Peels indecomposable invariant factors off an invariant subgroup S of P
// on which H acts with no nonzero fixed points within each isotypic piece.
void peel_factors(const PeelContext& ctx, const Subgroup& s,
                  std::vector<Subgroup>& out) {
  if (s.size == 1) return;
  const AbelianPGroup& P = ctx.act->group();
  AbelianPGroup A = s.abstract_group();
  int k = (int)s.basis.size();
  // matrices of every h on the abstract subgroup
  std::vector<ActionMatrix> h_elems;
  for (const auto& h : ctx.act->elements()) {
    ActionMatrix m(k, std::vector<long>(k, 0));
    for (int j = 0; j < k; ++j) {
      auto img = action_apply(P, h, s.basis[j]);
      if (!s.contains(img)) throw SpecError("peel: subgroup not invariant");
      auto c = subgroup_coordinates(s, img);
      for (int i = 0; i < k; ++i) m[i][j] = c[i];
    }
    h_elems.push_back(action_reduce(A, std::move(m)));
  }
  // cyclic R-module generated by a maximal-order element
  std::vector<AbelianPGroup::Elem> orbit;
  for (const auto& h : h_elems) orbit.push_back(action_apply(A, h, A.generator(0)));
  Subgroup q_abs = subgroup_from_generators(A, orbit);
  auto emit = [&](const Subgroup& abs_sub) {
    std::vector<AbelianPGroup::Elem> pgens;
    for (const auto& b : abs_sub.basis) pgens.push_back(map_to_parent(s, b));
    out.push_back(subgroup_from_generators(P, pgens));
  };
  if (q_abs.size == s.size) {
    out.push_back(s);
    return;
  }
  Subgroup comp = invariant_complement(A, h_elems, q_abs);
  emit(q_abs);
  // recurse on the complement, mapped back to P
  std::vector<AbelianPGroup::Elem> comp_gens;
  for (const auto& b : comp.basis) comp_gens.push_back(map_to_parent(s, b));
  Subgroup comp_in_p = subgroup_from_generators(P, comp_gens);
  peel_factors(ctx, comp_in_p, out);
}

InvariantFactor make_factor(const PAction& act, const Subgroup& sub) {
  InvariantFactor f{sub, sub.abstract_group(), act.restricted_to(sub), false};
  f.nontrivial_action = !f.induced.is_trivial_action();
  return f;
}

std::string factor_sort_key(const InvariantFactor& f) {
  std::string s;
  for (const auto& g : f.induced.generators()) s += serialize_matrix(g) + ";";
  return s;
}

ActionDecomposition finish_decomposition(const PAction& act, std::vector<Subgroup> parts) {
  ActionDecomposition dec;
  for (const auto& s : parts) dec.factors.push_back(make_factor(act, s));
  std::sort(dec.factors.begin(), dec.factors.end(),
            [](const InvariantFactor& a, const InvariantFactor& b) {
              if (a.nontrivial_action != b.nontrivial_action) return a.nontrivial_action;
              if (a.sub.size != b.sub.size) return a.sub.size > b.sub.size;
              return factor_sort_key(a) < factor_sort_key(b);
            });
  dec.t = 0;
  for (const auto& f : dec.factors)
    if (f.nontrivial_action) ++dec.t;
  return dec;
}

// full verification of a decomposition; throws on failure
void verify_decomposition(const PAction& act, const ActionDecomposition& dec) {
  const AbelianPGroup& P = act.group();
  long prod = 1;
  std::vector<AbelianPGroup::Elem> all_gens;
  for (const auto& f : dec.factors) {
    prod *= f.sub.size;
    for (const auto& b : f.sub.basis) all_gens.push_back(b);
  }
  if (prod != P.order())
    throw VerificationError("decomposition: factor sizes do not multiply to |P|");
  if (subgroup_from_generators(P, all_gens).size != P.order())
    throw VerificationError("decomposition: factors do not span P");
  for (int i = 0; i < (int)dec.factors.size(); ++i) {
    const auto& f = dec.factors[i];
    if ((i < dec.t) != f.nontrivial_action)
      throw VerificationError("decomposition: t-boundary ordering broken");
    if (f.nontrivial_action) {
      if (!f.abstract_group.is_homocyclic())
        throw VerificationError("decomposition: nontrivially acted factor is not homocyclic");
      try {
        eigen_orbit(f.induced);
      } catch (const SpecError& e) {
        throw VerificationError(std::string("decomposition: factor fails eigen checks: ") +
                                e.what());
      }
    } else {
      if (f.sub.basis.size() != 1)
        throw VerificationError("decomposition: trivially acted factor is not cyclic");
    }
  }
}

}  // namespace

namespace {

ActionDecomposition decompose_primary(const PAction& act) {
  const AbelianPGroup& P = act.group();
  std::vector<Subgroup> parts;
  FixedCommutatorSplit split = fixed_and_commutator(act);
  // fixed part: one cyclic factor per basis element
  for (const auto& b : split.fixed.basis)
    parts.push_back(subgroup_from_generators(P, {b}));

  if (split.commutator.size > 1) {
    // isotypic pieces of [P,H] via the Frattini quotient of it
    Subgroup k = split.commutator;
    AbelianPGroup A = k.abstract_group();
    int s = (int)k.basis.size();
    long p = P.p();
    std::vector<ActionMatrix> h_on_k;
    for (const auto& h : act.elements()) {
      ActionMatrix m(s, std::vector<long>(s, 0));
      for (int j = 0; j < s; ++j) {
        auto img = action_apply(P, h, k.basis[j]);
        auto c = subgroup_coordinates(k, img);
        for (int i = 0; i < s; ++i) m[i][j] = c[i];
      }
      h_on_k.push_back(action_reduce(A, std::move(m)));
    }
    std::vector<FpMat> mats_mod_p;
    for (const auto& m : h_on_k) {
      FpMat mm(s, std::vector<long>(s));
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) mm[i][j] = ((m[i][j] % p) + p) % p;
      mats_mod_p.push_back(std::move(mm));
    }
    std::vector<FpMat> components = isotypic_components(mats_mod_p, s, p, 0xb10cull);

    std::vector<Subgroup> pieces;
    if (components.size() == 1) {
      pieces.push_back(k);
    } else {
      // projectors onto each component as group-algebra coefficients
      HGroupTable tab = h_table(act);
      long pn = A.exponent();
      // stacked basis C of all components
      FpMat cmat;
      std::vector<size_t> offsets;
      for (const auto& W : components) {
        offsets.push_back(cmat.size());
        for (const auto& row : W) cmat.push_back(row);
      }
      offsets.push_back(cmat.size());
      FpMat ct(s, std::vector<long>(s));
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) ct[i][j] = cmat[j][i];
      // inverse of ct
      FpMat aug = ct;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) aug[i].push_back(i == j ? 1 : 0);
      fpmat::rref(aug, p);
      FpMat ctinv(s, std::vector<long>(s));
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) ctinv[i][j] = aug[i][s + j];
      std::vector<HCoeffs> lifted;
      for (size_t ci = 0; ci < components.size(); ++ci) {
        FpMat e(s, std::vector<long>(s, 0));
        for (size_t d = offsets[ci]; d < offsets[ci + 1]; ++d) e[d][d] = 1;
        FpMat proj = fpmat::mul(fpmat::mul(ct, e, p), ctinv, p);
        // solve sum_h c_h rho(h) = proj over F_p
        size_t hn = mats_mod_p.size();
        FpMat sys(s * s, std::vector<long>(hn));
        std::vector<long> rhs(s * s);
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) {
            for (size_t hidx = 0; hidx < hn; ++hidx) sys[i * s + j][hidx] = mats_mod_p[hidx][i][j];
            rhs[i * s + j] = proj[i][j];
          }
        std::vector<long> coeffs;
        if (!fpmat::solve(sys, rhs, coeffs, p))
          throw VerificationError("isotypic projector not in the group algebra image");
        HCoeffs e0(tab.n, 0);
        for (size_t hidx = 0; hidx < hn; ++hidx) e0[hidx] = coeffs[hidx];
        lifted.push_back(lift_idempotent(tab, e0, p, pn));
      }
      // orthogonalize sequentially
      for (size_t i = 0; i < lifted.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
          HCoeffs one_minus(tab.n, 0);
          one_minus[0] = 1;  // identity element has index 0
          one_minus = h_add(one_minus, h_scale(lifted[j], pn - 1, pn), pn);
          lifted[i] = h_mul(tab, lifted[i], one_minus, pn);
        }
      // images inside K, mapped through the abstract coordinates
      for (size_t ci = 0; ci < components.size(); ++ci) {
        std::vector<AbelianPGroup::Elem> gens;
        for (int j = 0; j < s; ++j) {
          // endo applied to abstract generator j
          AbelianPGroup::Elem acc = A.identity();
          for (int hidx = 0; hidx < tab.n; ++hidx) {
            if (lifted[ci][hidx] == 0) continue;
            acc = A.add(acc, A.scale(lifted[ci][hidx],
                                     action_apply(A, h_on_k[hidx], A.generator(j))));
          }
          gens.push_back(map_to_parent(k, acc));
        }
        pieces.push_back(subgroup_from_generators(P, gens));
      }
      long prod = 1;
      for (const auto& pc : pieces) prod *= pc.size;
      if (prod != k.size)
        throw VerificationError("isotypic piece sizes do not multiply to |[P,H]|");
    }
    PeelContext ctx{&act};
    for (const auto& piece : pieces) peel_factors(ctx, piece, parts);
  }

  ActionDecomposition dec = finish_decomposition(act, std::move(parts));
  verify_decomposition(act, dec);
  return dec;
}

}  // namespace

ActionDecomposition decompose(const PAction& act) {
  try {
    return decompose_primary(act);
  } catch (const std::runtime_error&) {
    auto fallback = brute_force_decompose(act);
    if (!fallback) throw;
    verify_decomposition(act, *fallback);
    return *fallback;
  }
}

PAction frattini_action(const PAction& act, bool expect_indecomposable) {
  const AbelianPGroup& P = act.group();
  AbelianPGroup quotient(P.p(), std::vector<int>(P.rank(), 1));
  std::vector<ActionMatrix> gens;
  for (const auto& g : act.generators()) gens.push_back(g);
  PAction out(quotient, gens);
  if (expect_indecomposable) {
    ActionDecomposition dec = decompose(out);
    if (dec.factors.size() != 1)
      throw VerificationError("Frattini quotient action decomposed; expected indecomposable");
  }
  return out;
}

EigenOrbitData eigen_orbit(const PAction& act) {
  const AbelianPGroup& P = act.group();
  if (!P.is_homocyclic()) throw SpecError("eigen_orbit: group is not homocyclic, action decomposable");
  int m = P.rank();
  long p = P.p();
  // H must be cyclic: search for an element of maximal order = |H|
  long horder = act.order();
  ActionMatrix gen;
  std::string best_key;
  for (const auto& h : act.elements()) {
    long o = 1;
    ActionMatrix x = h;
    while (x != action_identity(P)) {
      x = action_mul(P, x, h);
      ++o;
    }
    if (o == horder) {
      std::string key = serialize_matrix(h);
      if (gen.empty() || key < best_key) {
        gen = h;
        best_key = key;
      }
    }
  }
  if (gen.empty()) throw SpecError("eigen_orbit: automorphism group is not cyclic");

  FpMat gp(m, std::vector<long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gp[i][j] = ((gen[i][j] % p) + p) % p;
  FpPoly cp = fpmat::char_poly(gp, p);
  if (!fp::is_irreducible(cp, p))
    throw SpecError("eigen_orbit: characteristic polynomial reducible, action decomposable");
  if (horder > 1 && (ipow(p, m) - 1) % horder != 0)
    throw VerificationError("eigen_orbit: |H| does not divide p^m - 1");
  // free action on nonzero Frattini-quotient vectors
  AbelianPGroup V(p, std::vector<int>(m, 1));
  for (const auto& h : act.elements()) {
    if (h == action_identity(P)) continue;
    FpMat hm(m, std::vector<long>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) hm[i][j] = ((h[i][j] % p) + p) % p;
    for (int i = 0; i < m; ++i) hm[i][i] = ((hm[i][i] - 1) % p + p) % p;
    if (!fpmat::kernel(hm, p).empty())
      throw VerificationError("eigen_orbit: nonzero vector with nontrivial stabiliser");
  }
  return EigenOrbitData{gen, horder, m, cp};
}

ActionMatrix action_inverse(const AbelianPGroup& P, const ActionMatrix& m) {
  int r = P.rank();
  ActionMatrix inv(r, std::vector<long>(r, 0));
  ZMat sys(r, ZVec(2 * r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) sys[i][j] = m[i][j];
    sys[i][r + i] = P.modulus(i);
  }
  for (int col = 0; col < r; ++col) {
    ZVec rhs(r, 0);
    rhs[col] = 1;
    auto sol = solve_integer(sys, rhs);
    if (!sol) throw SpecError("action_inverse: matrix not invertible");
    for (int i = 0; i < r; ++i) {
      mpz_class red = (*sol)[i] % P.modulus(i);
      if (red < 0) red += P.modulus(i);
      inv[i][col] = red.get_si();
    }
  }
  ActionMatrix red = action_reduce(P, inv);
  if (action_mul(P, m, red) != action_identity(P))
    throw SpecError("action_inverse: verification failed");
  return red;
}

DualCharacter dual_action(const AbelianPGroup& P, const ActionMatrix& h_inverse,
                          const DualCharacter& lam) {
  long n = P.exponent();
  DualCharacter out{std::vector<long>(P.rank())};
  for (int j = 0; j < P.rank(); ++j) {
    long s = 0;
    for (int i = 0; i < P.rank(); ++i) {
      long w = n / P.modulus(i);
      s = (s + lam.a[i] * (h_inverse[i][j] % P.modulus(i)) % n * w) % n;
    }
    s = ((s % n) + n) % n;
    long step = n / P.modulus(j);
    if (s % step != 0)
      throw SpecError("dual_action: matrix violates divisibility (unreachable)");
    out.a[j] = (s / step) % P.modulus(j);
  }
  return out;
}

bool fixed_char_exists(const PAction& act) {
  const AbelianPGroup& P = act.group();
  std::vector<ActionMatrix> gen_invs;
  for (const auto& g : act.generators()) gen_invs.push_back(action_inverse(P, g));
  bool found = false;
  for (long idx = 1; idx < P.order(); ++idx) {
    DualCharacter lam = dual_at(P, idx);
    bool fixed = true;
    for (const auto& gi : gen_invs)
      if (dual_action(P, gi, lam).a != lam.a) {
        fixed = false;
        break;
      }
    if (fixed) {
      found = true;
      break;
    }
  }
  bool group_fixed = fixed_and_commutator(act).fixed.size > 1;
  if (found != group_fixed)
    throw VerificationError("fixed characters exist iff fixed points exist: equivalence failed");
  return found;
}

std::optional<ActionDecomposition> brute_force_decompose(const PAction& act) {
  const AbelianPGroup& P = act.group();
  if (P.order() > 256) return std::nullopt;
  long n = P.order();
  // enumerate all subgroups as element-index sets
  std::set<std::vector<long>> subgroups;
  auto closure = [&](std::vector<long> seeds) {
    std::set<long> elems{P.index_of(P.identity())};
    std::vector<long> queue(elems.begin(), elems.end());
    for (long s : seeds) {
      if (!elems.count(s)) {
        elems.insert(s);
        queue.push_back(s);
      }
    }
    for (size_t head = 0; head < queue.size(); ++head)
      for (long s : std::vector<long>(elems.begin(), elems.end())) {
        long sum = P.index_of(P.add(P.element_at(queue[head]), P.element_at(s)));
        if (!elems.count(sum)) {
          elems.insert(sum);
          queue.push_back(sum);
        }
      }
    return std::vector<long>(elems.begin(), elems.end());
  };
  subgroups.insert(closure({}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<long>> current(subgroups.begin(), subgroups.end());
    for (const auto& s : current) {
      for (long x = 0; x < n; ++x) {
        std::vector<long> seeds = s;
        seeds.push_back(x);
        auto bigger = closure(seeds);
        if (subgroups.insert(bigger).second) grew = true;
        if (subgroups.size() > 100000) return std::nullopt;
      }
    }
  }
  // invariant ones
  std::vector<std::vector<long>> inv;
  for (const auto& s : subgroups) {
    bool ok = true;
    for (const auto& g : act.generators()) {
      for (long e : s)
        if (!std::binary_search(s.begin(), s.end(),
                                P.index_of(action_apply(P, g, P.element_at(e))))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) inv.push_back(s);
  }
  // recursive splitting into indecomposables
  std::map<std::vector<long>, std::vector<std::vector<long>>> memo;
  std::function<std::vector<std::vector<long>>(const std::vector<long>&)> split =
      [&](const std::vector<long>& s) -> std::vector<std::vector<long>> {
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    for (const auto& q1 : inv) {
      if (q1.size() <= 1 || q1.size() >= s.size()) continue;
      if (!std::includes(s.begin(), s.end(), q1.begin(), q1.end())) continue;
      for (const auto& q2 : inv) {
        if (q2.size() <= 1 || q1.size() * q2.size() != s.size()) continue;
        if (!std::includes(s.begin(), s.end(), q2.begin(), q2.end())) continue;
        std::vector<long> inter;
        std::set_intersection(q1.begin(), q1.end(), q2.begin(), q2.end(),
                              std::back_inserter(inter));
        if (inter.size() != 1) continue;
        auto left = split(q1), right = split(q2);
        left.insert(left.end(), right.begin(), right.end());
        memo[s] = left;
        return left;
      }
    }
    memo[s] = {s};
    return {s};
  };
  std::vector<long> whole;
  for (long i = 0; i < n; ++i) whole.push_back(i);
  auto parts_idx = split(whole);
  std::vector<Subgroup> parts;
  for (const auto& s : parts_idx) {
    std::vector<AbelianPGroup::Elem> gens;
    for (long e : s) gens.push_back(P.element_at(e));
    parts.push_back(subgroup_from_generators(P, gens));
  }
  return finish_decomposition(act, std::move(parts));
}

}  // namespace blocklab
