#include "blocklab/picard.hpp"

#include <algorithm>
#include <cmath>

#include "blocklab/fppoly.hpp"
#include "blocklab/numutil.hpp"

namespace blocklab {

long abelian_aut_order(const AbelianPGroup& p_group) {
  // closed-form order of Aut(prod C_{p^{e_i}}), exponents taken ascending
  std::vector<long> e(p_group.exponents().begin(), p_group.exponents().end());
  std::sort(e.begin(), e.end());
  long n = (long)e.size();
  long p = p_group.p();
  if (n == 0) return 1;
  long result = 1;
  for (long k = 0; k < n; ++k) {
    long dk = 0;
    for (long l = 0; l < n; ++l)
      if (e[l] == e[k]) dk = l + 1;  // max index with equal exponent (1-based)
    result *= ipow(p, (int)dk) - ipow(p, (int)k);
  }
  for (long j = 0; j < n; ++j) {
    long dj = 0;
    for (long l = 0; l < n; ++l)
      if (e[l] == e[j]) dj = l + 1;
    result *= ipow(p, (int)(e[j] * (n - dj)));
  }
  for (long i = 0; i < n; ++i) {
    long ci = n;
    for (long l = n - 1; l >= 0; --l)
      if (e[l] == e[i]) ci = l + 1;  // min index with equal exponent (1-based)
    result *= ipow(p, (int)((e[i] - 1) * (n - ci + 1)));
  }
  return result;
}

std::optional<long> abelian_aut_order_brute(const AbelianPGroup& p_group, long max_space) {
  long n = p_group.rank();
  long p = p_group.p();
  if (n == 0) return 1;
  // An endomorphism matrix (entry (i,j) mod p^{e_i}, divisible by
  // p^{max(0, e_i - e_j)}) is invertible iff its reduction mod p is. Entries
  // with e_i > e_j reduce to 0; entries with e_i <= e_j cover F_p evenly with
  // p^{e_i - 1} lifts apiece. So count invertible mod-p patterns and scale.
  std::vector<std::pair<long, long>> free_entries;  // (i, j) with e_i <= e_j
  long lift_factor = 1;
  double log_space = 0;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (p_group.exponents()[i] <= p_group.exponents()[j]) {
        free_entries.push_back({i, j});
        lift_factor *= ipow(p, p_group.exponents()[i] - 1);
        log_space += std::log2((double)p);
      } else {
        lift_factor *= ipow(p, p_group.exponents()[j]);
      }
    }
  if (log_space > std::log2((double)max_space)) return std::nullopt;
  long patterns = ipow(p, (int)free_entries.size());
  long count = 0;
  FpMat mat(n, std::vector<long>(n, 0));
  for (long code = 0; code < patterns; ++code) {
    long c = code;
    for (const auto& [i, j] : free_entries) {
      mat[i][j] = c % p;
      c /= p;
    }
    if (fpmat::det(mat, p) != 0) ++count;
  }
  return count * lift_factor;
}

LinearSourceFactor linear_source_factor(const AbelianPGroup& d2) {
  LinearSourceFactor f;
  f.hom_order = d2.order();
  f.aut_order = abelian_aut_order(d2);
  f.order = f.hom_order * f.aut_order;
  if (d2.rank() == 0) {
    f.description = "trivial";
  } else {
    std::string shape;
    for (int i = 0; i < d2.rank(); ++i) {
      if (i) shape += " x ";
      shape += "C" + std::to_string(d2.modulus(i));
    }
    f.description = "Hom(" + shape + ", O^x) x| Aut(" + shape + "), order " +
                    std::to_string(f.hom_order) + " * " + std::to_string(f.aut_order);
  }
  return f;
}

PicardReport picard_report(const BlockData& data, const BlockData& d1_block,
                           const IsometryGroup* isometries) {
  PicardReport r;
  r.block_name = data.spec.name;
  r.p = data.spec.p;
  r.d2_exponents = data.d2_abs.exponents();
  r.linear_factor = linear_source_factor(data.d2_abs);
  r.trivial_source_specialization = data.d2_abs.is_trivial();
  r.decomposition_claim =
      "Pic(B) = T(O(D1 x| E) e_phi) x (Hom(D2, O^x) x| Aut(D2)); the T factor is symbolic";
  if (r.trivial_source_specialization)
    r.decomposition_claim += "; D2 = 1 and [D, E] = D, so the claim specializes to Pic = T";
  r.irr_trivial_on_d1 = irr_trivial_on_d1(data);

  if (isometries) {
    r.perfect_self_isometries = (long)isometries->members.size();
    r.positive_sigma_br_members = 0;
    r.d2_twist_passes = 0;
    r.d1_kernel_passes = 0;
    for (const auto& iso : isometries->members) {
      bool all_positive = true;
      for (int s : iso.sign)
        if (s < 0) all_positive = false;
      if (!all_positive) continue;
      if (!sigma_br(data, iso.perm)) continue;
      ++r.positive_sigma_br_members;
      FixedPartTwist twist = check_d2_twist(data, d1_block, iso.perm);
      if (!twist.ok)
        throw VerificationError("a Brauer-compatible self-isometry fails the D2 twist check: " +
                                twist.violation);
      ++r.d2_twist_passes;
      if (!check_d1_kernel(data, iso.perm))
        throw VerificationError("a Brauer-compatible self-isometry moves the D1-kernel subset");
      ++r.d1_kernel_passes;
    }
  }
  return r;
}

}  // namespace blocklab
