#include "blocklab/intmat.hpp"

#include "blocklab/numutil.hpp"

namespace blocklab {

ZMat zmat_identity(int n) {
  ZMat m(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  ZMat r(n, ZVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

ZMat hermite_normal_form(ZMat rows) {
  if (rows.empty()) return rows;
  size_t ncols = rows[0].size();
  size_t pr = 0;  // next pivot row slot
  for (size_t c = 0; c < ncols && pr < rows.size(); ++c) {
    // Euclidean elimination in column c among rows pr..end.
    while (true) {
      size_t best = rows.size();
      for (size_t r = pr; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || cmp(abs(rows[r][c]), abs(rows[best][c])) < 0))
          best = r;
      }
      if (best == rows.size()) break;  // column all zero below pr
      std::swap(rows[pr], rows[best]);
      bool others = false;
      for (size_t r = pr + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pr][c].get_mpz_t());
        for (size_t j = 0; j < ncols; ++j) rows[r][j] -= q * rows[pr][j];
        if (rows[r][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[pr][c] == 0) continue;
    if (rows[pr][c] < 0)
      for (size_t j = 0; j < ncols; ++j) rows[pr][j] = -rows[pr][j];
    // reduce entries above the pivot into [0, pivot)
    for (size_t r = 0; r < pr; ++r) {
      if (rows[r][c] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pr][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < ncols; ++j) rows[r][j] -= q * rows[pr][j];
    }
    ++pr;
  }
  rows.resize(pr);
  return rows;
}

bool hnf_contains(const ZMat& hnf, ZVec x) {
  size_t ncols = x.size();
  size_t row = 0;
  for (size_t c = 0; c < ncols; ++c) {
    if (row < hnf.size() && hnf[row][c] != 0) {
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x[c].get_mpz_t(), hnf[row][c].get_mpz_t());
      if (r != 0) return false;
      if (q != 0)
        for (size_t j = c; j < ncols; ++j) x[j] -= q * hnf[row][j];
      ++row;
    }
    if (x[c] != 0) return false;
  }
  return true;
}

namespace {

bool snf_find_pivot(const ZMat& a, size_t t, size_t& pi, size_t& pj) {
  bool found = false;
  for (size_t i = t; i < a.size(); ++i)
    for (size_t j = t; j < a[0].size(); ++j)
      if (a[i][j] != 0 && (!found || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
        pi = i;
        pj = j;
        found = true;
      }
  return found;
}

}  // namespace

SmithResult smith_normal_form(ZMat a) {
  size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  ZMat u = zmat_identity((int)m), v = zmat_identity((int)n);
  auto row_sub = [&](size_t dst, size_t src, const mpz_class& q) {
    for (size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
    for (size_t j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
  };
  auto col_sub = [&](size_t dst, size_t src, const mpz_class& q) {
    for (size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
    for (size_t i = 0; i < n; ++i) v[i][dst] -= q * v[i][src];
  };

  for (size_t t = 0; t < std::min(m, n); ++t) {
    size_t pi = t, pj = t;
    if (!snf_find_pivot(a, t, pi, pj)) break;
    std::swap(a[t], a[pi]);
    std::swap(u[t], u[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
    for (size_t i = 0; i < n; ++i) std::swap(v[i][t], v[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_sub(i, t, q);
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up, retry
          std::swap(a[t], a[i]);
          std::swap(u[t], u[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_sub(j, t, q);
        if (a[t][j] != 0) {
          for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
          for (size_t i = 0; i < n; ++i) std::swap(v[i][t], v[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: a[t][t] must divide every remaining entry
      for (size_t i = t + 1; i < m && clean; ++i)
        for (size_t j = t + 1; j < n && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_sub(t, i, mpz_class(-1));  // a[t] += a[i]
            clean = false;
          }
    }
    if (a[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) a[t][j] = -a[t][j];
      for (size_t j = 0; j < m; ++j) u[t][j] = -u[t][j];
    }
  }
  return SmithResult{u, v, a};
}

ZMat integer_kernel(const ZMat& a) {
  size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  if (n == 0) return {};
  if (m == 0) return zmat_identity((int)n);
  SmithResult s = smith_normal_form(a);
  ZMat basis;
  for (size_t j = 0; j < n; ++j) {
    bool zero_col = j >= m || s.d[j][j] == 0;
    if (!zero_col) continue;
    ZVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = s.v[i][j];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  SmithResult s = smith_normal_form(a);
  ZVec ub(m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) ub[i] += s.u[i][j] * b[j];
  ZVec w(n, 0);
  for (size_t i = 0; i < m; ++i) {
    mpz_class d = (i < n) ? s.d[i][i] : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      w[i] = ub[i] / d;
    }
  }
  ZVec x(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) x[i] += s.v[i][j] * w[j];
  return x;
}

}  // namespace blocklab
