// Exact integer matrix normal forms (Hermite, Smith) over GMP integers.
// Lattices are row lattices: the span of the rows of a matrix.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace blocklab {

using ZMat = std::vector<std::vector<mpz_class>>;
using ZVec = std::vector<mpz_class>;

ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);

// Row-style Hermite normal form of the lattice spanned by the rows.
// Returns the nonzero rows, pivots positive, entries above a pivot reduced
// into [0, pivot). Row order: increasing pivot column.
ZMat hermite_normal_form(ZMat rows);

// Membership of x in the row lattice of an HNF basis.
bool hnf_contains(const ZMat& hnf, ZVec x);

// Smith normal form: U*A*V = D with U, V unimodular and D diagonal,
// d_i | d_{i+1}, d_i >= 0. A is any rectangular matrix.
struct SmithResult {
  ZMat u, v, d;
};
SmithResult smith_normal_form(ZMat a);

// Basis of {x : A x = 0} as rows.
ZMat integer_kernel(const ZMat& a);

// One integer solution of A u = b, if any.
std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b);

}  // namespace blocklab
