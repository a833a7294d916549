#ifndef CBNEF_DIVISORS_HPP
#define CBNEF_DIVISORS_HPP

#include <vector>

#include "cbnef/basis.hpp"
#include "cbnef/intersection.hpp"
#include "cbnef/moduli.hpp"

namespace cbnef {

/// The symmetric level-one divisor D^n_{1,j} with all weight indices
/// equal to j.  k = floor(n/j) and r = n - jk drive the curve-family
/// constructions in the extremality module.
struct CbDivisorSpec {
  ModuliContext ctx;
  int j;

  int k() const { return ctx.n / j; }
  int r() const { return ctx.n % j; }
};

CbDivisorSpec make_divisor_spec(int n, int j);

/// Intersection numbers a_l = D^n_{1,j} . F_{1,1,l}, l = 1..g.  These
/// determine the divisor class.  All entries are nonnegative; j = 1
/// gives the zero vector (the divisor is trivial).
std::vector<long> a_vector(const CbDivisorSpec& spec);

/// The class of D^n_{1,j} on the boundary basis, computed as
/// intersection_matrix_inverse times the a-vector.
SymDivisorClass divisor_class(const CbDivisorSpec& spec);

struct FConeReport {
  bool is_in_cone;
  std::vector<FCurveShape> violations;  // shapes with negative intersection
};

/// Membership of a symmetric divisor class in the symmetric F-cone:
/// evaluates km_intersect against every shape of n.
FConeReport f_cone_check(const SymDivisorClass& d);

/// All shapes with fakh_sym_intersect = 0, in lexicographic order; these
/// feed the brute-force extremality oracle.
std::vector<FCurveShape> zero_intersection_shapes(const CbDivisorSpec& spec);

}  // namespace cbnef

#endif
