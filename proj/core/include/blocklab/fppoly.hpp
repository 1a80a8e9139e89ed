// Polynomial arithmetic, factorization and small dense linear algebra over F_p.
// Polynomials are coefficient vectors, index = degree, no trailing zeros.
#pragma once

#include <cstdint>
#include <vector>

namespace blocklab {

using FpPoly = std::vector<long>;
using FpMat = std::vector<std::vector<long>>;

namespace fp {

FpPoly trim(FpPoly f);
int deg(const FpPoly& f);  // -1 for zero
FpPoly add(const FpPoly& a, const FpPoly& b, long p);
FpPoly sub(const FpPoly& a, const FpPoly& b, long p);
FpPoly mul(const FpPoly& a, const FpPoly& b, long p);
// division by nonzero g; returns {quotient, remainder}
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& g, long p);
FpPoly mod(const FpPoly& a, const FpPoly& g, long p);
FpPoly gcd(FpPoly a, FpPoly b, long p);  // monic
FpPoly monic(FpPoly f, long p);
FpPoly powmod(const FpPoly& base, long e, const FpPoly& f, long p);
// x^(p^k) mod f
FpPoly frobenius_power(const FpPoly& f, long p, int k);
long eval(const FpPoly& f, long x, long p);
bool is_irreducible(const FpPoly& f, long p);

// Complete factorization into monic irreducibles with multiplicity,
// deterministic for a fixed seed. Pairs (factor, multiplicity).
std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f, long p, uint64_t seed = 0x5eed);

// Lexicographically first monic irreducible of degree d over F_p
// (order: constant coefficient varies fastest).
FpPoly first_irreducible(long p, int d);

}  // namespace fp

namespace fpmat {

FpMat identity(int n);
FpMat mul(const FpMat& a, const FpMat& b, long p);
FpMat add(const FpMat& a, const FpMat& b, long p);
FpMat scalar(int n, long c);
FpMat pow(FpMat a, long e, long p);
long det(FpMat a, long p);
// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(FpMat& a, long p);
// basis of the right kernel {x : A x = 0}, as rows
FpMat kernel(const FpMat& a, long p);
// solve A x = b; empty optional if inconsistent
bool solve(const FpMat& a, const std::vector<long>& b, std::vector<long>& x, long p);
// minimal polynomial of a (square) matrix
FpPoly min_poly(const FpMat& a, long p);
// characteristic polynomial (via Hessenberg reduction)
FpPoly char_poly(FpMat a, long p);
std::vector<long> apply(const FpMat& a, const std::vector<long>& x, long p);

}  // namespace fpmat

}  // namespace blocklab
