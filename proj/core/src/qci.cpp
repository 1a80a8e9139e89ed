#include "blocklab/qci.hpp"

#include <algorithm>
#include <thread>

#include "blocklab/numutil.hpp"

namespace blocklab {

namespace {

// exponent s with value = zeta_M^s; the value must be a root of unity of
// order dividing M
long dlog_root(const Cyclotomic& value, long m) {
  for (long s = 0; s < m; ++s)
    if (value == Cyclotomic::root_of_unity(m, s)) return s;
  throw SpecError("value is not an M-th root of unity");
}

}  // namespace

DualityData duality_iso(const InertialGroup& e, long phi_exponent) {
  if (!e.one_simple_module())
    throw SpecError("duality map requires Z = Z(E) (one simple module)");
  const FiniteGroup& g = e.group();
  DualityData out;
  // representatives of L: words with zc = 0
  long lo = e.l_order();
  for (long idx = 0; idx < g.size(); ++idx) {
    auto w = e.word_at(idx);
    if (w.zc == 0) out.l_reps.push_back(idx);
  }
  if ((long)out.l_reps.size() != lo)
    throw SpecError("wrong number of L representatives (unreachable)");
  // exp(L) = lcm of the generator orders
  long m = 1;
  for (long o : e.presentation().gen_orders) m = lcm_long(m, o);
  out.root_order = m;
  long zo = e.z_order();
  out.table.assign(lo, std::vector<long>(lo, 0));
  for (long a = 0; a < lo; ++a)
    for (long b = 0; b < lo; ++b) {
      long ga = out.l_reps[a], hb = out.l_reps[b];
      long comm = g.mul(g.mul(g.inverse(ga), g.inverse(hb)), g.mul(ga, hb));
      auto w = e.word_at(comm);
      for (long ai : w.a)
        if (ai != 0)
          throw VerificationError("commutator of lifts is not central (presentation broken)");
      Cyclotomic val = Cyclotomic::root_of_unity(zo, phi_exponent * w.zc);
      out.table[a][b] = dlog_root(val, m);
    }
  // homomorphism in the first argument and injectivity
  for (long a1 = 0; a1 < lo; ++a1)
    for (long a2 = 0; a2 < lo; ++a2) {
      long prod = g.mul(out.l_reps[a1], out.l_reps[a2]);
      // find the L-representative of the product coset
      auto w = e.word_at(prod);
      w.zc = 0;
      long rep = e.index_of(w);
      long ridx = std::lower_bound(out.l_reps.begin(), out.l_reps.end(), rep) - out.l_reps.begin();
      if (ridx >= lo || out.l_reps[ridx] != rep)
        throw SpecError("L representative lookup failed (unreachable)");
      for (long b = 0; b < lo; ++b)
        if ((out.table[a1][b] + out.table[a2][b]) % m != out.table[ridx][b])
          throw VerificationError("duality map is not a homomorphism");
    }
  for (long a1 = 0; a1 < lo; ++a1)
    for (long a2 = a1 + 1; a2 < lo; ++a2)
      if (out.table[a1] == out.table[a2])
        throw VerificationError("duality map is not injective");
  return out;
}

int QMatrixData::index_count() const {
  int c = 0;
  for (int mi : m) c += mi;
  return c;
}

int QMatrixData::flat(int i, int j) const {
  int c = 0;
  for (int k = 0; k < i; ++k) c += m[k];
  return c + j;
}

QMatrixData compute_q_matrix(const BlockData& data) {
  const BlockSpec& spec = data.spec;
  const InertialGroup& E = *spec.inertial;
  if (!E.one_simple_module())
    throw SpecError("block has more than one simple module");
  DualityData dual = duality_iso(E, spec.phi_exponent);
  long M = dual.root_order;
  long p = spec.p;

  PAction l_act = spec.l_action();
  ActionDecomposition dec = decompose(l_act);

  QMatrixData q;
  q.n = (int)dec.factors.size();
  q.t = dec.t;
  q.root_order = M;
  for (const auto& f : dec.factors) {
    q.m.push_back(f.abstract_group.rank());
    q.nexp.push_back(f.abstract_group.exponents().empty() ? 1
                                                          : f.abstract_group.exponents()[0]);
  }

  // field large enough for the eigenvalues and the M-th roots
  int d = (M == 1) ? 1 : (int)multiplicative_order(p, M);
  GaloisRing field(p, 1, d);
  GRElem u = field.root_of_unity(M);

  // matrix of an L-representative on a factor
  auto matrix_on_factor = [&](const InvariantFactor& f, long e_idx) {
    auto w = E.word_at(e_idx);
    ActionMatrix mm = action_identity(f.abstract_group);
    for (size_t i = 0; i < w.a.size(); ++i)
      for (long k = 0; k < w.a[i]; ++k)
        mm = action_mul(f.abstract_group, mm, f.induced.generators()[i]);
    return mm;
  };

  // eigencharacter exponents: eps[i][l-index] with value u^{eps}
  std::vector<std::vector<long>> eps(q.n);
  std::vector<std::vector<long>> h_flat;  // per factor: E-index of h_{ij}
  long lo = (long)dual.l_reps.size();
  for (int i = 0; i < q.n; ++i) {
    const auto& f = dec.factors[i];
    if (i >= q.t) {
      eps[i].assign(lo, 0);
      h_flat.push_back({E.group().identity()});
      continue;
    }
    EigenOrbitData orbit = eigen_orbit(f.induced);
    // root of the characteristic polynomial in the common field
    GRElem lambda = field.zero();
    bool found = false;
    for (long idx = 0; idx < field.size() && !found; ++idx) {
      GRElem cand = field.from_index(idx);
      GRElem val = field.zero();
      for (int c = fp::deg(orbit.char_poly); c >= 0; --c)
        val = field.add(field.mul(val, cand), field.from_int(orbit.char_poly[c]));
      if (field.is_zero(val)) {
        lambda = cand;
        found = true;
      }
    }
    if (!found) throw VerificationError("eigenvalue not found in the chosen Galois field");
    long a_i = -1;  // lambda = u^{a_i}
    GRElem pow_u = field.one();
    for (long s = 0; s < M; ++s) {
      if (pow_u == lambda) {
        a_i = s;
        break;
      }
      pow_u = field.mul(pow_u, u);
    }
    if (a_i < 0) throw VerificationError("eigenvalue is not an exp(L)-th root of unity");
    // k_l: l acts as generator^{k_l} on the factor
    std::vector<long> korders(lo, -1);
    std::vector<ActionMatrix> gen_pows{action_identity(f.abstract_group)};
    for (long k = 1; k < orbit.h_order; ++k)
      gen_pows.push_back(action_mul(f.abstract_group, gen_pows.back(), orbit.generator));
    eps[i].assign(lo, 0);
    for (long l = 0; l < lo; ++l) {
      ActionMatrix ml = matrix_on_factor(f, dual.l_reps[l]);
      for (long k = 0; k < (long)gen_pows.size(); ++k)
        if (gen_pows[k] == ml) {
          korders[l] = k;
          break;
        }
      if (korders[l] < 0)
        throw VerificationError("factor action is not generated by the chosen cyclic generator");
      eps[i][l] = (a_i * korders[l]) % M;
    }
    // h_{i1}: the L element with phi o phi_h = eigencharacter
    long h1 = -1;
    for (long cand = 0; cand < lo; ++cand)
      if (dual.table[cand] == eps[i]) {
        h1 = cand;
        break;
      }
    if (h1 < 0)
      throw VerificationError("no group element realizes the eigencharacter (duality failed)");
    std::vector<long> hij;
    long h_elem = dual.l_reps[h1];
    for (int j = 0; j < q.m[i]; ++j) {
      hij.push_back(h_elem);
      h_elem = E.group().power(h_elem, p);
    }
    h_flat.push_back(std::move(hij));
  }
  q.h_witness = h_flat;

  // commutator formula, with the eigencharacter cross-check
  int total = q.index_count();
  q.q_exp.assign(total, std::vector<long>(total, 0));
  const FiniteGroup& eg = E.group();
  long zo = E.z_order();
  auto l_index_of = [&](long e_idx) {
    auto w = E.word_at(e_idx);
    w.zc = 0;
    long rep = E.index_of(w);
    long ridx = std::lower_bound(dual.l_reps.begin(), dual.l_reps.end(), rep) -
                dual.l_reps.begin();
    return ridx;
  };
  for (int i1 = 0; i1 < q.n; ++i1)
    for (int j1 = 0; j1 < q.m[i1]; ++j1)
      for (int i2 = 0; i2 < q.n; ++i2)
        for (int j2 = 0; j2 < q.m[i2]; ++j2) {
          long ha = h_flat[i2][j2], hb = h_flat[i1][j1];
          long comm = eg.mul(eg.mul(eg.inverse(ha), eg.inverse(hb)), eg.mul(ha, hb));
          auto w = E.word_at(comm);
          Cyclotomic val = Cyclotomic::root_of_unity(zo, spec.phi_exponent * w.zc);
          long qe = dlog_root(val, M);
          // cross-check: q = eigencharacter_{i2}^{p^{j2-1}} evaluated at h_{i1 j1}
          long expect = eps[i2][l_index_of(h_flat[i1][j1])] % M;
          expect = expect * mod_pow(p, j2, M ? M : 1) % M;
          // p^{j2} because eps stores the j = 1 character and h_{i,j+1} = h_{ij}^p
          if (qe != expect)
            throw VerificationError("q-matrix entry disagrees with the eigencharacter formula");
          q.q_exp[q.flat(i1, j1)][q.flat(i2, j2)] = qe;
        }
  return q;
}

QPropertyReport verify_q_properties(const QMatrixData& q, long p) {
  QPropertyReport r;
  long M = q.root_order;
  auto note = [&](const std::string& s) { r.violations.push_back(s); };
  for (int i = 0; i < q.n; ++i)
    for (int j1 = 0; j1 < q.m[i]; ++j1)
      for (int j2 = 0; j2 < q.m[i]; ++j2)
        if (q.q_exp[q.flat(i, j1)][q.flat(i, j2)] != 0) {
          r.intra_block_trivial = false;
          note("intra-block entry at factor " + std::to_string(i));
        }
  int total = q.index_count();
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b)
      if ((q.q_exp[a][b] + q.q_exp[b][a]) % M != 0) {
        r.antisymmetric = false;
        note("antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
  for (int a = 0; a < total; ++a)
    for (int i2 = 0; i2 < q.n; ++i2)
      for (int j2 = 0; j2 < q.m[i2]; ++j2) {
        int next = q.flat(i2, (j2 + 1) % q.m[i2]);
        if (q.q_exp[a][next] != q.q_exp[a][q.flat(i2, j2)] * p % M) {
          r.frobenius_linked = false;
          note("Frobenius link fails at column (" + std::to_string(i2) + "," +
               std::to_string(j2) + ")");
        }
      }
  for (int i1 = 0; i1 < q.n; ++i1)
    for (int j1 = 0; j1 < q.m[i1]; ++j1) {
      bool row_trivial = true;
      for (int b = 0; b < total; ++b)
        if (q.q_exp[q.flat(i1, j1)][b] != 0) row_trivial = false;
      if (row_trivial != (i1 >= q.t)) {
        r.trivial_rows_match_t = false;
        note("row (" + std::to_string(i1) + "," + std::to_string(j1) +
             ") triviality does not match the t boundary");
      }
    }
  for (int i1 = 0; i1 < q.t; ++i1)
    for (int j1 = 0; j1 < q.m[i1]; ++j1)
      for (int j2 = 0; j2 < q.m[i1]; ++j2) {
        if (j1 == j2) continue;
        bool separated = false;
        for (int i = 0; i < q.t && !separated; ++i)
          for (int j = 0; j < q.m[i]; ++j)
            if (q.q_exp[q.flat(i1, j1)][q.flat(i, j)] !=
                q.q_exp[q.flat(i1, j2)][q.flat(i, j)]) {
              separated = true;
              break;
            }
        if (!separated) {
          r.columns_separate = false;
          note("no separating column for (" + std::to_string(i1) + "," + std::to_string(j1) +
               ") vs j2=" + std::to_string(j2));
        }
      }
  return r;
}

QciAlgebra::QciAlgebra(long p, int ring_m, const QMatrixData& q, QciMode mode)
    : p_(p), q_(q), mode_(mode) {
  ngen_ = q.index_count();
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.m[i]; ++j) {
      caps_.push_back(ipow(p, q.nexp[i]));
      factor_of_.push_back(i);
      pos_of_.push_back(j);
    }
  if (mode == QciMode::p2) {
    if (p != 2) throw SpecError("the squared-generator model requires p = 2");
    for (int i = 0; i < q.t; ++i)
      if (q.nexp[i] != 1)
        throw SpecError("the squared-generator model requires elementary abelian acted factors");
  }
  int d = (q.root_order == 1) ? 1 : (int)multiplicative_order(p, q.root_order);
  ring_ = std::make_shared<GaloisRing>(p, ring_m, d);
  q_root_ = ring_->root_of_unity(q.root_order);
}

long QciAlgebra::basis_size() const {
  long b = 1;
  for (long c : caps_) b *= c;
  return b;
}

bool QciAlgebra::in_t_prefix(int flat_idx) const { return factor_of_[flat_idx] < q_.t; }

QciAlgebra::Elem QciAlgebra::one() const {
  Elem e;
  e.terms[Mono(ngen_, 0)] = ring_->one();
  return e;
}

QciAlgebra::Elem QciAlgebra::generator(int flat_idx) const {
  Elem e;
  Mono m(ngen_, 0);
  m[flat_idx] = 1;
  e.terms[m] = ring_->one();
  return e;
}

QciAlgebra::Elem QciAlgebra::from_terms(std::map<Mono, GRElem> terms) const {
  Elem e;
  for (auto& [m, c] : terms)
    if (!ring_->is_zero(c)) e.terms[m] = c;
  return e;
}

QciAlgebra::Elem QciAlgebra::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (const auto& [m, c] : b.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms[m] = c;
    } else {
      it->second = ring_->add(it->second, c);
      if (ring_->is_zero(it->second)) r.terms.erase(it);
    }
  }
  return r;
}

QciAlgebra::Elem QciAlgebra::sub(const Elem& a, const Elem& b) const {
  return add(a, scale(ring_->from_int(-1), b));
}

QciAlgebra::Elem QciAlgebra::scale(const GRElem& c, const Elem& a) const {
  Elem r;
  for (const auto& [m, co] : a.terms) {
    GRElem x = ring_->mul(c, co);
    if (!ring_->is_zero(x)) r.terms[m] = x;
  }
  return r;
}

GRElem QciAlgebra::q_value(int a, int b) const {
  return ring_->pow(q_root_, q_.q_exp[a][b]);
}

void QciAlgebra::reduce_monomial(Mono mono, GRElem coeff, Elem& out) const {
  while (true) {
    if (ring_->is_zero(coeff)) return;
    int over = -1;
    for (int i = 0; i < ngen_; ++i)
      if (mono[i] >= caps_[i]) {
        over = i;
        break;
      }
    if (over < 0) break;
    if (mode_ == QciMode::strict || !in_t_prefix(over)) return;  // X^cap = 0
    // p2 model: X_{ij}^2 = 2 X_{i,j+1}
    int i = factor_of_[over], j = pos_of_[over];
    mono[over] -= 2;
    int next = q_.flat(i, (j + 1) % q_.m[i]);
    mono[next] += 1;
    coeff = ring_->mul(coeff, ring_->from_int(2));
  }
  auto it = out.terms.find(mono);
  if (it == out.terms.end()) {
    out.terms[mono] = coeff;
  } else {
    it->second = ring_->add(it->second, coeff);
    if (ring_->is_zero(it->second)) out.terms.erase(it);
  }
}

QciAlgebra::Elem QciAlgebra::mul(const Elem& a, const Elem& b) const {
  Elem r;
  long M = q_.root_order;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      long e = 0;
      for (int delta = 0; delta < ngen_; ++delta) {
        if (ma[delta] == 0) continue;
        for (int gamma = 0; gamma < delta; ++gamma) {
          if (mb[gamma] == 0) continue;
          e = (e + q_.q_exp[delta][gamma] * (long)ma[delta] * (long)mb[gamma]) % M;
        }
      }
      GRElem coeff = ring_->mul(ring_->mul(ca, cb), ring_->pow(q_root_, e));
      Mono mono(ngen_);
      for (int i = 0; i < ngen_; ++i) mono[i] = (uint8_t)(ma[i] + mb[i]);
      reduce_monomial(std::move(mono), coeff, r);
    }
  return r;
}

QciAlgebra::Elem QciAlgebra::pow(const Elem& a, long e) const {
  Elem r = one(), b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool QciAlgebra::t_ideal_member(const Elem& x) const {
  for (const auto& [m, c] : x.terms) {
    bool has_t = false;
    for (int i = 0; i < ngen_ && !has_t; ++i)
      if (m[i] > 0 && in_t_prefix(i)) has_t = true;
    if (!has_t) return false;
  }
  return true;
}

std::vector<QciAlgebra::Mono> QciAlgebra::basis() const {
  std::vector<Mono> out;
  Mono m(ngen_, 0);
  while (true) {
    out.push_back(m);
    int i = 0;
    while (i < ngen_) {
      if (++m[i] < caps_[i]) break;
      m[i] = 0;
      ++i;
    }
    if (i == ngen_) break;
  }
  if (ngen_ == 0) out.assign(1, Mono{});
  return out;
}

unsigned long long QciAlgebra::scan_space_per_generator() const {
  unsigned long long space = 1;
  long rsize = ring_->size();
  long coords = basis_size() - 1;
  for (long i = 0; i < coords; ++i) {
    if (space > (~0ULL) / (unsigned long long)rsize) return ~0ULL;  // saturate
    space *= (unsigned long long)rsize;
  }
  return space;
}

QciAlgebra::Elem QciAlgebra::element_from_scan_index(unsigned long long idx,
                                                     const std::vector<Mono>& basis_monos) const {
  Elem e;
  long rsize = ring_->size();
  for (const auto& m : basis_monos) {
    bool constant = true;
    for (int i = 0; i < ngen_; ++i)
      if (m[i] != 0) constant = false;
    if (constant) continue;
    long c = (long)(idx % (unsigned long long)rsize);
    idx /= (unsigned long long)rsize;
    if (c != 0) e.terms[m] = ring_->from_index(c);
  }
  return e;
}

namespace {

// determinant over the (local) coefficient ring by cofactor expansion
GRElem gr_det(const GaloisRing& r, std::vector<std::vector<GRElem>> m) {
  size_t n = m.size();
  if (n == 0) return r.one();
  if (n == 1) return m[0][0];
  GRElem acc = r.zero();
  int sign = 1;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<GRElem>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<GRElem> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    GRElem term = r.mul(m[0][c], gr_det(r, std::move(minor)));
    acc = (sign > 0) ? r.add(acc, term) : r.sub(acc, term);
    sign = -sign;
  }
  return acc;
}

bool relations_hold(const QciAlgebra& a, const std::vector<QciAlgebra::Elem>& img) {
  int n = a.num_generators();
  // power relations
  for (int i = 0; i < n; ++i) {
    if (a.mode() == QciMode::p2 && a.in_t_prefix(i)) {
      int fac = -1, pos = -1, seen = 0;
      for (int f = 0; f < a.qdata().n && fac < 0; ++f) {
        if (i < seen + a.qdata().m[f]) {
          fac = f;
          pos = i - seen;
        }
        seen += a.qdata().m[f];
      }
      int next = a.qdata().flat(fac, (pos + 1) % a.qdata().m[fac]);
      QciAlgebra::Elem lhs = a.mul(img[i], img[i]);
      QciAlgebra::Elem rhs = a.scale(a.ring().from_int(2), img[next]);
      if (!(lhs == rhs)) return false;
    } else {
      if (!a.is_zero(a.pow(img[i], a.cap(i)))) return false;
    }
  }
  // q-commutation
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < x; ++y) {
      QciAlgebra::Elem lhs = a.mul(img[x], img[y]);
      QciAlgebra::Elem rhs = a.scale(a.q_value(x, y), a.mul(img[y], img[x]));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool invertible_on_generators(const QciAlgebra& a, const std::vector<QciAlgebra::Elem>& img) {
  int n = a.num_generators();
  const GaloisRing& r = a.ring();
  std::vector<std::vector<GRElem>> mat(n, std::vector<GRElem>(n, r.zero()));
  for (int col = 0; col < n; ++col) {
    for (const auto& [m, c] : img[col].terms) {
      int deg = 0, which = -1;
      for (int i = 0; i < n; ++i) {
        deg += m[i];
        if (m[i] == 1) which = i;
      }
      if (deg == 1) mat[which][col] = c;
    }
  }
  return r.is_unit(gr_det(r, std::move(mat)));
}

}  // namespace

EndoClass check_endomorphism(const QciAlgebra& a, const std::vector<QciAlgebra::Elem>& images) {
  if ((int)images.size() != a.num_generators())
    throw SpecError("need one image per generator");
  for (const auto& img : images)
    for (const auto& [m, c] : img.terms) {
      bool constant = true;
      for (int i = 0; i < a.num_generators(); ++i)
        if (m[i] != 0) constant = false;
      if (constant) throw SpecError("generator images must have zero constant term");
    }
  if (!relations_hold(a, images)) return EndoClass::not_homomorphism;
  if (!invertible_on_generators(a, images)) return EndoClass::not_invertible;
  return EndoClass::automorphism;
}

ScanReport t_invariance_scan(const QciAlgebra& a, long budget, uint64_t seed, int jobs) {
  ScanReport rep;
  int n = a.num_generators();
  if (n == 0) {  // only the identity endomorphism exists
    rep.tuples_checked = 1;
    rep.homomorphisms = 1;
    rep.automorphisms = 1;
    rep.exhaustive = true;
    rep.coverage = 1.0;
    return rep;
  }
  std::vector<QciAlgebra::Mono> basis_monos = a.basis();
  unsigned long long per_gen = a.scan_space_per_generator();
  unsigned long long space = 1;
  bool overflow = false;
  for (int i = 0; i < n; ++i) {
    if (per_gen != 0 && space > (~0ULL) / per_gen) {
      overflow = true;
      break;
    }
    space *= per_gen;
  }
  rep.exhaustive = !overflow && space <= (unsigned long long)budget;

  auto classify_and_count = [&](const std::vector<QciAlgebra::Elem>& tuple, ScanReport& local) {
    if (a.mode() == QciMode::strict) {
      // the strict model is graded, so the degree-one part of an image must
      // already satisfy the power relation; this kills most random tuples
      for (int g = 0; g < n; ++g) {
        QciAlgebra::Elem linear;
        for (const auto& [m, c] : tuple[g].terms) {
          int deg = 0;
          for (int i = 0; i < n; ++i) deg += m[i];
          if (deg == 1) linear.terms[m] = c;
        }
        if (!a.is_zero(a.pow(linear, a.cap(g)))) return;
      }
    }
    if (!relations_hold(a, tuple)) return;
    ++local.homomorphisms;
    if (!invertible_on_generators(a, tuple)) return;
    ++local.automorphisms;
    for (int i = 0; i < n; ++i) {
      if (!a.in_t_prefix(i)) continue;
      if (!a.t_ideal_member(tuple[i])) {
        ++local.t_violations;
        if (local.counterexamples.size() < 5)
          local.counterexamples.push_back("automorphism moves generator " + std::to_string(i) +
                                          " out of T");
      }
    }
  };

  long nthreads = std::max(1, jobs);
  std::vector<ScanReport> locals((size_t)nthreads);

  if (rep.exhaustive) {
    // phase 1: filter single-generator images by their own power relation
    std::vector<std::vector<unsigned long long>> singles(n);
    for (int g = 0; g < n; ++g) {
      for (unsigned long long idx = 0; idx < per_gen; ++idx) {
        QciAlgebra::Elem e = a.element_from_scan_index(idx, basis_monos);
        bool ok;
        if (a.mode() == QciMode::p2 && a.in_t_prefix(g)) {
          ok = true;  // the X^2 relation couples generators; defer to phase 2
        } else {
          ok = a.is_zero(a.pow(e, a.cap(g)));
        }
        if (ok) singles[g].push_back(idx);
      }
    }
    // phase 2: odometer over the filtered lists, parallel over the first slot
    auto worker = [&](long tid) {
      ScanReport& local = locals[tid];
      std::vector<size_t> pos(n, 0);
      for (size_t first = tid; first < singles[0].size(); first += nthreads) {
        std::vector<QciAlgebra::Elem> tuple(n);
        tuple[0] = a.element_from_scan_index(singles[0][first], basis_monos);
        std::function<void(int)> rec = [&](int g) {
          if (g == n) {
            classify_and_count(tuple, local);
            return;
          }
          for (unsigned long long idx : singles[g]) {
            tuple[g] = a.element_from_scan_index(idx, basis_monos);
            rec(g + 1);
          }
        };
        rec(1);
      }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
    rep.tuples_checked = space;
    rep.coverage = 1.0;
  } else {
    auto worker = [&](long tid) {
      ScanReport& local = locals[tid];
      uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (tid + 1);
      auto next = [&s]() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
      };
      long share = budget / nthreads + 1;
      for (long it = 0; it < share; ++it) {
        std::vector<QciAlgebra::Elem> tuple(n);
        for (int g = 0; g < n; ++g) {
          unsigned long long idx =
              (per_gen == 0) ? 0 : (unsigned long long)next() % per_gen;
          tuple[g] = a.element_from_scan_index(idx, basis_monos);
        }
        ++local.tuples_checked;
        classify_and_count(tuple, local);
      }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
    for (const auto& l : locals) rep.tuples_checked += l.tuples_checked;
    rep.coverage = (space == 0) ? 1.0 : (double)rep.tuples_checked / (double)space;
  }
  for (const auto& l : locals) {
    rep.homomorphisms += l.homomorphisms;
    rep.automorphisms += l.automorphisms;
    rep.t_violations += l.t_violations;
    for (const auto& c : l.counterexamples) rep.counterexamples.push_back(c);
  }
  return rep;
}

}  // namespace blocklab
