#include "blocklab/char_table.hpp"

#include <algorithm>
#include <cmath>

#include "blocklab/fppoly.hpp"
#include "blocklab/numutil.hpp"

namespace blocklab {

long ClassFunction::degree_int() const {
  Cyclotomic d = degree();
  if (!d.is_rational()) throw SpecError("character degree is not rational");
  mpq_class q = d.rational_value();
  if (q.get_den() != 1) throw SpecError("character degree is not an integer");
  return q.get_num().get_si();
}

Cyclotomic ClassFunction::inner(const ClassFunction& other) const {
  Cyclotomic s = Cyclotomic::zero();
  for (long c = 0; c < g_->class_count(); ++c) {
    Cyclotomic term = vals_[c] * other.vals_[g_->inverse_class(c)];
    s += term.scaled(mpq_class(g_->class_size(c)));
  }
  return s.scaled(mpq_class(1, g_->size()));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  std::vector<Cyclotomic> v = vals_;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.vals_[i];
  return ClassFunction(*g_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  std::vector<Cyclotomic> v = vals_;
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.vals_[i];
  return ClassFunction(*g_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  std::vector<Cyclotomic> v = vals_;
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o.vals_[i];
  return ClassFunction(*g_, std::move(v));
}

ClassFunction ClassFunction::scaled(const mpq_class& c) const {
  std::vector<Cyclotomic> v = vals_;
  for (auto& x : v) x = x.scaled(c);
  return ClassFunction(*g_, std::move(v));
}

namespace {

long find_split_prime(long n, long e) {
  long l = std::max(e + 1, n + 1);
  // round up to 1 mod e
  while (l % e != 1 || !is_prime(l) || 4 * n >= l * l) ++l;
  return l;
}

struct ModTable {
  long l;                         // the prime
  std::vector<std::vector<long>> values;  // per character, per class, mod l
  std::vector<long> degrees;
};

// common eigenvectors of the class-sum matrices over F_l
ModTable modular_table(const FiniteGroup& g, long l) {
  long k = g.class_count();
  // structure constants: mats[i][j][m] = #{x in C_i : x^{-1} g_m in C_j}
  std::vector<FpMat> mats(k, FpMat(k, std::vector<long>(k, 0)));
  for (long m = 0; m < k; ++m) {
    long gm = g.class_rep(m);
    for (long x = 0; x < g.size(); ++x) {
      long i = g.class_of(x);
      long j = g.class_of(g.mul(g.inverse(x), gm));
      mats[i][j][m] = (mats[i][j][m] + 1) % l;
    }
  }
  // split the coordinate space into common eigenspaces
  std::vector<FpMat> spaces;  // each: list of basis columns
  {
    FpMat full;
    for (long i = 0; i < k; ++i) {
      std::vector<long> e(k, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));  // columns stored as rows of this list
  }
  for (long i = 1; i < k; ++i) {
    std::vector<FpMat> next;
    for (const auto& basis : spaces) {
      size_t dim = basis.size();
      if (dim == 1) {
        next.push_back(basis);
        continue;
      }
      // restriction S: mats[i] * b_c = sum S[r][c] b_r
      FpMat sys(k, std::vector<long>(dim));
      for (long row = 0; row < k; ++row)
        for (size_t c = 0; c < dim; ++c) sys[row][c] = basis[c][row];
      FpMat S(dim, std::vector<long>(dim));
      bool invariant = true;
      for (size_t c = 0; c < dim && invariant; ++c) {
        std::vector<long> rhs = fpmat::apply(mats[i], basis[c], l);
        std::vector<long> sol;
        if (!fpmat::solve(sys, rhs, sol, l)) invariant = false;
        else
          for (size_t r = 0; r < dim; ++r) S[r][c] = sol[r];
      }
      if (!invariant)
        throw VerificationError("class-sum matrix does not preserve eigenspace");
      FpPoly cp = fpmat::char_poly(S, l);
      // roots by exhaustive evaluation
      std::vector<long> roots;
      for (long lam = 0; lam < l; ++lam)
        if (fp::eval(cp, lam, l) == 0) roots.push_back(lam);
      if (roots.size() <= 1) {
        next.push_back(basis);
        continue;
      }
      for (long lam : roots) {
        FpMat shifted = S;
        for (size_t d = 0; d < dim; ++d) shifted[d][d] = ((shifted[d][d] - lam) % l + l) % l;
        FpMat ker = fpmat::kernel(shifted, l);
        if (ker.empty()) continue;
        FpMat sub;
        for (const auto& coeff : ker) {
          std::vector<long> col(k, 0);
          for (size_t c = 0; c < dim; ++c)
            for (long row = 0; row < k; ++row)
              col[row] = (col[row] + coeff[c] * basis[c][row]) % l;
          sub.push_back(std::move(col));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
    bool all_one = true;
    for (const auto& b : spaces)
      if (b.size() > 1) all_one = false;
    if (all_one) break;
  }
  for (const auto& b : spaces)
    if (b.size() != 1)
      throw VerificationError("class-sum eigenspaces did not separate the characters");
  if ((long)spaces.size() != k)
    throw VerificationError("wrong number of common eigenvectors");

  long id_class = g.class_of(g.identity());
  ModTable t;
  t.l = l;
  for (auto& b : spaces) {
    std::vector<long> w = b[0];
    if (w[id_class] % l == 0)
      throw VerificationError("central character vanishes on the identity class");
    long norm = mod_inverse(w[id_class], l);
    for (auto& x : w) x = (((x * norm) % l) + l) % l;
    // degree^2 = |G| / sum_j w_j w_{j'} / |C_j|
    long denom = 0;
    for (long j = 0; j < k; ++j) {
      long term = w[j] * w[g.inverse_class(j)] % l;
      term = term * mod_inverse(g.class_size(j) % l, l) % l;
      denom = (denom + term) % l;
    }
    long d2 = (g.size() % l) * mod_inverse(denom, l) % l;
    long d = -1;
    for (long r = 1; r < l; ++r)
      if (r * r % l == d2) {
        long cand = std::min(r, l - r);
        if ((long)(cand * cand) <= g.size()) d = cand;
        break;
      }
    if (d <= 0) throw VerificationError("character degree could not be recovered mod l");
    std::vector<long> chi(k);
    for (long j = 0; j < k; ++j)
      chi[j] = d * w[j] % l * mod_inverse(g.class_size(j) % l, l) % l;
    t.values.push_back(std::move(chi));
    t.degrees.push_back(d);
  }
  return t;
}

}  // namespace

std::vector<ClassFunction> character_table(const FiniteGroup& g) {
  long k = g.class_count();
  long e = g.exponent();
  long n_conductor = e;
  if (k == 1) {
    return {ClassFunction(g, {Cyclotomic::one(1)})};
  }
  long l = find_split_prime(g.size(), e);
  ModTable t = modular_table(g, l);

  // fixed primitive e-th root of unity in F_l
  long w = 2;
  std::vector<long> lfacs = prime_factors(l - 1);
  for (;; ++w) {
    bool prim = true;
    for (long q : lfacs)
      if (mod_pow(w, (l - 1) / q, l) == 1) prim = false;
    if (prim) break;
  }
  long re = mod_pow(w, (l - 1) / e, l);

  std::vector<ClassFunction> table;
  for (long ci = 0; ci < k; ++ci) {
    std::vector<Cyclotomic> vals(k, Cyclotomic::zero(n_conductor));
    for (long j = 0; j < k; ++j) {
      long rep = g.class_rep(j);
      long o = g.element_order(rep);
      long ro = mod_pow(re, e / o, l);  // fixed primitive o-th root mod l
      long oinv = mod_inverse(o % l, l);
      Cyclotomic v = Cyclotomic::zero(n_conductor);
      for (long tt = 0; tt < o; ++tt) {
        long m = 0;
        for (long s = 0; s < o; ++s) {
          long cls = g.class_of(g.power(rep, s));
          long rot = mod_pow(ro, ((o - tt) * s) % o, l);
          m = (m + t.values[ci][cls] * rot) % l;
        }
        m = m * oinv % l;
        if (m > t.degrees[ci])
          throw VerificationError("character value lift produced multiplicity > degree");
        if (m != 0)
          v += Cyclotomic::root_of_unity(o, tt).scaled(mpq_class(m)).to_conductor(n_conductor);
      }
      vals[j] = std::move(v);
    }
    table.emplace_back(g, std::move(vals));
  }

  // exact orthonormality check
  for (long i = 0; i < k; ++i)
    for (long j = i; j < k; ++j) {
      Cyclotomic ip = table[i].inner(table[j]);
      bool ok = (i == j) ? (ip.is_rational() && ip.rational_value() == 1)
                         : (ip.is_zero());
      if (!ok)
        throw VerificationError("character table failed exact orthogonality at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    }
  long sum_sq = 0;
  for (const auto& chi : table) sum_sq += chi.degree_int() * chi.degree_int();
  if (sum_sq != g.size())
    throw VerificationError("sum of squared degrees does not match the group order");

  std::sort(table.begin(), table.end(), [](const ClassFunction& a, const ClassFunction& b) {
    long da = a.degree_int(), db = b.degree_int();
    if (da != db) return da < db;
    for (size_t c = 0; c < a.values().size(); ++c) {
      std::string sa = a.value(c).to_string(), sb = b.value(c).to_string();
      if (sa != sb) return sa < sb;
    }
    return false;
  });
  return table;
}

ClassFunction induce(const FiniteGroup& g, const SubgroupView& sub, const ClassFunction& chi) {
  long hsize = sub.group.size();
  std::vector<Cyclotomic> vals;
  for (long c = 0; c < g.class_count(); ++c) {
    long rep = g.class_rep(c);
    Cyclotomic s = Cyclotomic::zero();
    for (long x = 0; x < g.size(); ++x) {
      long conj = g.mul(g.mul(x, rep), g.inverse(x));
      long sidx = sub.from_parent[conj];
      if (sidx >= 0) s += chi.value_at_element(sidx);
    }
    vals.push_back(s.scaled(mpq_class(1, hsize)));
  }
  return ClassFunction(g, std::move(vals));
}

ClassFunction restrict_to(const SubgroupView& sub, const ClassFunction& chi) {
  std::vector<Cyclotomic> vals;
  for (long c = 0; c < sub.group.class_count(); ++c) {
    long rep = sub.to_parent[sub.group.class_rep(c)];
    vals.push_back(chi.value_at_element(rep));
  }
  return ClassFunction(sub.group, std::move(vals));
}

ClassFunction inflate(const FiniteGroup& g, const QuotientView& q, const ClassFunction& chi) {
  std::vector<Cyclotomic> vals;
  for (long c = 0; c < g.class_count(); ++c) {
    long rep = g.class_rep(c);
    vals.push_back(chi.value_at_element(q.projection[rep]));
  }
  return ClassFunction(g, std::move(vals));
}

}  // namespace blocklab
