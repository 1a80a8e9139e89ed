#include "blocklab/isometry.hpp"

#include <algorithm>
#include <thread>

#include "blocklab/numutil.hpp"

namespace blocklab {

SignedBijection identity_isometry(long n) {
  SignedBijection f;
  f.perm.resize(n);
  f.sign.assign(n, 1);
  for (long i = 0; i < n; ++i) f.perm[i] = i;
  return f;
}

SignedBijection compose(const SignedBijection& f, const SignedBijection& g) {
  long n = (long)f.perm.size();
  SignedBijection h;
  h.perm.resize(n);
  h.sign.resize(n);
  for (long i = 0; i < n; ++i) {
    h.perm[i] = f.perm[g.perm[i]];
    h.sign[i] = g.sign[i] * f.sign[g.perm[i]];
  }
  return h;
}

SignedBijection invert(const SignedBijection& f) {
  long n = (long)f.perm.size();
  SignedBijection h;
  h.perm.resize(n);
  h.sign.resize(n);
  for (long i = 0; i < n; ++i) {
    h.perm[f.perm[i]] = i;
    h.sign[f.perm[i]] = f.sign[i];
  }
  return h;
}

namespace {

long p_valuation_of_long(long x, long p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

struct MuContext {
  const BlockData* src;
  const BlockData* dst;
  long n;                      // number of characters
  long ks, kt;                 // class counts
  long conductor;
  std::vector<Cyclotomic> prod;  // [i][k][cs][ct] flattened
  std::vector<bool> reg_s, reg_t;
  std::vector<long> val_centralizer_s, val_centralizer_t;  // e * v_p(|C|)

  const Cyclotomic& at(long i, long k, long cs, long ct) const {
    return prod[((i * n + k) * ks + cs) * kt + ct];
  }
};

MuContext make_mu_context(const BlockData& src, const BlockData& dst, const PrimeIdeal& prime) {
  MuContext mc;
  mc.src = &src;
  mc.dst = &dst;
  mc.n = (long)src.irr.size();
  mc.ks = src.group->g.class_count();
  mc.kt = dst.group->g.class_count();
  mc.conductor = lcm_long(src.exp_g(), dst.exp_g());
  mc.prod.reserve(mc.n * mc.n * mc.ks * mc.kt);
  for (long i = 0; i < mc.n; ++i)
    for (long k = 0; k < mc.n; ++k)
      for (long cs = 0; cs < mc.ks; ++cs) {
        Cyclotomic a = src.irr[i].induced.value(cs).to_conductor(mc.conductor);
        for (long ct = 0; ct < mc.kt; ++ct) {
          Cyclotomic b =
              dst.irr[k].induced.value(dst.group->g.inverse_class(ct)).to_conductor(mc.conductor);
          mc.prod.push_back(a * b);
        }
      }
  long p = src.p();
  for (long c = 0; c < mc.ks; ++c) {
    mc.reg_s.push_back(src.group->g.element_order(src.group->g.class_rep(c)) % p != 0);
    mc.val_centralizer_s.push_back(prime.ramification() *
                                   p_valuation_of_long(src.group->g.centralizer_order(c), p));
  }
  for (long c = 0; c < mc.kt; ++c) {
    mc.reg_t.push_back(dst.group->g.element_order(dst.group->g.class_rep(c)) % p != 0);
    mc.val_centralizer_t.push_back(prime.ramification() *
                                   p_valuation_of_long(dst.group->g.centralizer_order(c), p));
  }
  return mc;
}

Cyclotomic mu_value(const MuContext& mc, const SignedBijection& iso, long cs, long ct) {
  Cyclotomic s = Cyclotomic::zero(mc.conductor);
  for (long i = 0; i < mc.n; ++i) {
    const Cyclotomic& term = mc.at(i, iso.perm[i], cs, ct);
    s += (iso.sign[i] > 0) ? term : -term;
  }
  return s;
}

// separation has to hold before the (more expensive) valuation tests run
bool separation_holds(const MuContext& mc, const SignedBijection& iso,
                      std::vector<std::string>* failures) {
  bool ok = true;
  for (long cs = 0; cs < mc.ks; ++cs)
    for (long ct = 0; ct < mc.kt; ++ct) {
      if (mc.reg_s[cs] == mc.reg_t[ct]) continue;
      if (!mu_value(mc, iso, cs, ct).is_zero()) {
        ok = false;
        if (failures)
          failures->push_back("mu(" + std::to_string(cs) + "," + std::to_string(ct) +
                              ") nonzero across the p-regular boundary");
        else
          return false;
      }
    }
  return ok;
}

bool integrality_holds(const MuContext& mc, const SignedBijection& iso, const PrimeIdeal& prime,
                       std::vector<std::string>* failures) {
  bool ok = true;
  for (long cs = 0; cs < mc.ks; ++cs)
    for (long ct = 0; ct < mc.kt; ++ct) {
      Cyclotomic mu = mu_value(mc, iso, cs, ct);
      long v = prime.valuation(mu);
      long need = std::max(mc.val_centralizer_s[cs], mc.val_centralizer_t[ct]);
      if (v < need) {
        ok = false;
        if (failures)
          failures->push_back("mu(" + std::to_string(cs) + "," + std::to_string(ct) +
                              ")/|centralizer| not integral: valuation " + std::to_string(v) +
                              " < " + std::to_string(need));
        else
          return false;
      }
    }
  return ok;
}

}  // namespace

PerfectCheck is_perfect(const BlockData& source, const BlockData& target,
                        const SignedBijection& iso, const PrimeIdeal& prime) {
  if (source.irr.size() != target.irr.size() || iso.perm.size() != source.irr.size())
    throw SpecError("not an isometry candidate: character counts differ");
  MuContext mc = make_mu_context(source, target, prime);
  PerfectCheck out;
  bool sep = separation_holds(mc, iso, &out.failures);
  bool intg = integrality_holds(mc, iso, prime, &out.failures);
  out.perfect = sep && intg;
  return out;
}

PerfectCheck is_perfect_self(const BlockData& data, const SignedBijection& iso) {
  PrimeIdeal prime(data.p(), data.exp_g());
  return is_perfect(data, data, iso, prime);
}

IsometryGroup enumerate_self_isometries(const BlockData& data, int max_irr, int jobs,
                                        bool degree_prune) {
  long n = (long)data.irr.size();
  long total = 1;
  for (long i = 2; i <= n; ++i) total *= i;
  total <<= n;  // n! * 2^n
  if (n > max_irr)
    throw SpecError("self-isometry enumeration refused: |Irr(B)| = " + std::to_string(n) +
                    " exceeds the bound " + std::to_string(max_irr) + " (candidate space " +
                    std::to_string(total) + ")");
  PrimeIdeal prime(data.p(), data.exp_g());
  MuContext mc = make_mu_context(data, data, prime);

  std::vector<long> degrees;
  for (const auto& bc : data.irr) degrees.push_back(bc.degree);

  // collect permutations, optionally only degree-preserving ones
  std::vector<std::vector<long>> perms;
  std::vector<long> idx(n);
  for (long i = 0; i < n; ++i) idx[i] = i;
  std::vector<long> sorted = idx;
  do {
    if (degree_prune) {
      bool ok = true;
      for (long i = 0; i < n; ++i)
        if (degrees[sorted[i]] != degrees[i]) ok = false;
      if (!ok) continue;
    }
    perms.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));

  long nthreads = std::max(1, jobs);
  std::vector<std::vector<SignedBijection>> found((size_t)nthreads);
  auto worker = [&](long tid) {
    for (size_t pi = tid; pi < perms.size(); pi += nthreads) {
      SignedBijection cand;
      cand.perm = perms[pi];
      cand.sign.assign(n, 1);
      for (long smask = 0; smask < (1L << n); ++smask) {
        for (long i = 0; i < n; ++i) cand.sign[i] = (smask >> i) & 1 ? -1 : 1;
        if (!separation_holds(mc, cand, nullptr)) continue;
        if (!integrality_holds(mc, cand, prime, nullptr)) continue;
        found[tid].push_back(cand);
      }
    }
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  IsometryGroup group;
  group.candidates_considered = total;
  group.degree_prune_used = degree_prune;
  for (auto& v : found)
    for (auto& f : v) group.members.push_back(std::move(f));
  std::sort(group.members.begin(), group.members.end(),
            [](const SignedBijection& a, const SignedBijection& b) {
              if (a.perm != b.perm) return a.perm < b.perm;
              return a.sign < b.sign;
            });

  // verify the group axioms on the result
  auto find_member = [&](const SignedBijection& f) {
    for (const auto& m : group.members)
      if (m.perm == f.perm && m.sign == f.sign) return true;
    return false;
  };
  SignedBijection id = identity_isometry(n);
  SignedBijection neg = id;
  for (auto& s : neg.sign) s = -1;
  if (!find_member(id) || !find_member(neg))
    throw VerificationError("perfect self-isometries miss identity or -identity");
  for (const auto& a : group.members) {
    if (!find_member(invert(a)))
      throw VerificationError("perfect self-isometries not closed under inverse");
    for (const auto& b : group.members)
      if (!find_member(compose(a, b)))
        throw VerificationError("perfect self-isometries not closed under composition");
  }
  return group;
}

FixedPartTwist check_d2_twist(const BlockData& data, const BlockData& d1_block,
                              const std::vector<long>& sigma) {
  FixedPartTwist out;
  auto br = sigma_br(data, sigma);
  if (!br) {
    out.violation = "sigma does not admit a Brauer permutation";
    return out;
  }
  const AbelianPGroup& D = data.spec.defect;
  long ne = (long)data.irr_e.size();
  bool theta_set = false;
  for (long j = 0; j < ne; ++j) {
    long dst = sigma[data.inflated_index(j)];
    const BlockCharacter& image = data.irr[dst];
    if (!theta_set) {
      out.theta = image.lambda_d2;
      theta_set = true;
    } else if (!(out.theta.a == image.lambda_d2.a)) {
      out.violation = "images of the inflated characters do not share one D2-character";
      return out;
    }
    // psi: the D1 x| E component, read off through the tensor factorization
    const FiniteGroup& H = d1_block.group->g;
    std::vector<Cyclotomic> psi_vals;
    for (long c = 0; c < H.class_count(); ++c) {
      long rep = H.class_rep(c);
      long d1_idx = d1_block.group->d_part(rep);
      long e_idx = d1_block.group->e_part(rep);
      // embed the abstract D1 element into D
      AbelianPGroup::Elem d_elem = D.identity();
      auto abs_elem = d1_block.spec.defect.element_at(d1_idx);
      for (size_t b = 0; b < abs_elem.size(); ++b)
        d_elem = D.add(d_elem, D.scale(abs_elem[b], data.d1.basis[b]));
      long g_idx = data.group->encode(D.index_of(d_elem), e_idx);
      psi_vals.push_back(image.induced.value_at_element(g_idx));
    }
    ClassFunction psi(H, std::move(psi_vals));
    long found = -1;
    for (size_t i = 0; i < d1_block.irr.size(); ++i)
      if (d1_block.irr[i].induced == psi) found = (long)i;
    if (found < 0) {
      out.violation = "image does not factor through Irr(D1 x| E, phi)";
      return out;
    }
    out.psi_indices.push_back(found);

    // full tensor factorization across all classes of G
    for (long c = 0; c < data.group->g.class_count(); ++c) {
      long rep = data.group->g.class_rep(c);
      long d_idx = data.group->d_part(rep), e_idx = data.group->e_part(rep);
      auto [fixed_idx, comm_idx] = data.d_split[d_idx];
      auto d1_coords = subgroup_coordinates(data.d1, D.element_at(comm_idx));
      AbelianPGroup::Elem d1_embedded = d1_block.spec.defect.reduce(d1_coords);
      long h_idx = d1_block.group->encode(d1_block.spec.defect.index_of(d1_embedded), e_idx);
      auto d2_coords = subgroup_coordinates(data.d2, D.element_at(fixed_idx));
      Cyclotomic expected = psi.value_at_element(h_idx) *
                            dual_pairing(data.d2_abs, out.theta, d2_coords);
      if (data.irr[dst].induced.value(c) != expected) {
        out.violation = "tensor factorization failed at a class of G";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

bool check_d1_kernel(const BlockData& data, const std::vector<long>& sigma) {
  std::vector<long> subset = irr_trivial_on_d1(data);
  std::vector<long> image;
  for (long i : subset) image.push_back(sigma[i]);
  std::sort(image.begin(), image.end());
  return image == subset;
}

SignedBijection tensor_by_d2_character(const BlockData& data, const DualCharacter& theta_d2) {
  const AbelianPGroup& D = data.spec.defect;
  long n = (long)data.irr.size();
  SignedBijection f;
  f.perm.assign(n, -1);
  f.sign.assign(n, 1);
  // linear character of G: (d, e) -> theta(d2-part of d)
  std::vector<Cyclotomic> lin;
  for (long c = 0; c < data.group->g.class_count(); ++c) {
    long rep = data.group->g.class_rep(c);
    long d_idx = data.group->d_part(rep);
    auto [fixed_idx, comm_idx] = data.d_split[d_idx];
    auto d2_coords = subgroup_coordinates(data.d2, D.element_at(fixed_idx));
    lin.push_back(dual_pairing(data.d2_abs, theta_d2, d2_coords));
  }
  ClassFunction linear(data.group->g, std::move(lin));
  for (long i = 0; i < n; ++i) {
    ClassFunction prod = data.irr[i].induced * linear;
    for (long j = 0; j < n; ++j)
      if (data.irr[j].induced == prod) {
        f.perm[i] = j;
        break;
      }
    if (f.perm[i] < 0)
      throw VerificationError("tensoring by a D2-character left the block character list");
  }
  return f;
}

bool induction_integrality(const FiniteGroup& g, const SubgroupView& n_view,
                           const ClassFunction& chi, const PrimeIdeal& prime) {
  // normality
  for (long x : n_view.to_parent)
    for (long a = 0; a < g.size(); ++a)
      if (n_view.from_parent[g.mul(g.mul(a, x), g.inverse(a))] < 0)
        throw SpecError("induction_integrality: subgroup is not normal");
  // stabilizer of chi under conjugation
  long stab = 0;
  const FiniteGroup& N = n_view.group;
  for (long a = 0; a < g.size(); ++a) {
    bool fixes = true;
    for (long c = 0; c < N.class_count() && fixes; ++c) {
      long rep_parent = n_view.to_parent[N.class_rep(c)];
      long conj = g.mul(g.mul(g.inverse(a), rep_parent), a);
      if (!(chi.value_at_element(n_view.from_parent[conj]) == chi.value(c))) fixes = false;
    }
    if (fixes) ++stab;
  }
  long index = stab / N.size();
  ClassFunction ind = induce(g, n_view, chi);
  long p = prime.p();
  long need = prime.ramification() * p_valuation_of_long(index, p);
  for (long c = 0; c < g.class_count(); ++c) {
    long v = prime.valuation(ind.value(c));
    if (v < need)
      throw VerificationError("induced value escapes [Stab:N] O at class " + std::to_string(c));
  }
  return true;
}

}  // namespace blocklab
