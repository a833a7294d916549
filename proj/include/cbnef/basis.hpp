#ifndef CBNEF_BASIS_HPP
#define CBNEF_BASIS_HPP

#include <vector>

#include "cbnef/intersection.hpp"
#include "cbnef/matrix.hpp"
#include "cbnef/moduli.hpp"

namespace cbnef {

/// A symmetric curve class written on the basis {F_{j,1,1}}_{j=1..g}:
/// gammas[j-1] is the coefficient on F_{j,1,1}.  The expansion
/// coefficients of an F-curve are always integers.
struct SymCurveClass {
  ModuliContext ctx;
  std::vector<long> gammas;
};

/// The g x g matrix of intersection numbers (F_{i,1,1} . B_{q+1}),
/// rows indexed by the curve index i, columns by the basis divisor.
/// Built directly from km_intersect, so it serves as an independent
/// route against the closed-form inverse below.
RatMatrix intersection_matrix(const ModuliContext& ctx);

/// Closed form for the inverse of intersection_matrix.  For odd n the
/// (r,s) entry is r(r+1)/(2(g+1)) plus (s-r) below the diagonal; for even
/// n the denominator is 2g+1 and the last column is halved.
RatMatrix intersection_matrix_inverse(const ModuliContext& ctx);

/// Transpose of intersection_matrix_inverse; multiplying it onto the
/// vector (B_{r+1} . F) expands an F-curve in the {F_{j,1,1}} basis.
RatMatrix dual_expansion_matrix(const ModuliContext& ctx);

/// The j-independent offset of the piecewise expansion below: one of
/// 0, 2a, n-2d, 2b, n-2a picked by where the sorted parts sit relative
/// to g+1.  Even whenever n is even, which keeps the expansion integral.
long expansion_offset(const ModuliContext& ctx, const FCurveShape& s);

/// The folded linear correction at basis position j: clipped folded part
/// sizes minus clipped folded pair sums.
long expansion_correction(const ModuliContext& ctx, const FCurveShape& s, int j);

/// Expansion of the F-curve of a shape in the {F_{j,1,1}} basis by the
/// piecewise closed form: offset plus per-position correction (the
/// offset halved at j = g when n is even).  This is the production path.
SymCurveClass expand_fcurve(const ModuliContext& ctx, const FCurveShape& s);

/// Same expansion computed as a linear solve against the intersection
/// matrix; independent oracle for expand_fcurve.
SymCurveClass expand_fcurve_via_solve(const ModuliContext& ctx, const FCurveShape& s);

/// Specialized closed forms for curves F_{i,k,k}.  Only defined on the
/// parameter ranges of the two specializations (deep case
/// i + 2k <= g+1 with 4k < g+1, and boundary case i+k <= g+1 < i+2k with
/// 2k <= i <= n-i-2k <= i+k; for even n the values i = g+1-2k resp.
/// g+1-k are excluded).  Throws std::domain_error outside those ranges;
/// callers should fall back to expand_fcurve.
SymCurveClass expand_ikk_special(const ModuliContext& ctx, int i, int k);

}  // namespace cbnef

#endif
