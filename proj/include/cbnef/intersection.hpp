#ifndef CBNEF_INTERSECTION_HPP
#define CBNEF_INTERSECTION_HPP

#include <array>
#include <vector>

#include "cbnef/moduli.hpp"
#include "cbnef/rational.hpp"

namespace cbnef {

/// A symmetric divisor class written on the boundary basis B_2..B_{g+1}:
/// coeffs[r] is the coefficient on B_{r+2}, r = 0..g-1.
struct SymDivisorClass {
  ModuliContext ctx;
  std::vector<Rat> coeffs;

  bool is_zero() const;
};

SymDivisorClass zero_class(const ModuliContext& ctx);

/// Intersection of a symmetric divisor with the F-curve of a given shape:
///   D . F_{a,b,c,d} = -a_a - a_b - a_c - a_d + a_{a+b} + a_{a+c} + a_{a+d},
/// indices folded through n - t and with a_0 = a_1 = 0.
Rat km_intersect(const SymDivisorClass& d, const FCurveShape& s);

/// Residues mod n of j * (part sizes), each in {0,...,n-1}.
struct NuProfile {
  std::array<int, 4> values;
  int sum;
  int max;
  int min;
};

NuProfile nu_profile_symmetric(int n, int j, const FCurveShape& s);

/// Intersection number of the symmetric level-one divisor D^n_{1,j} with a
/// symmetric F-curve: nu_min when the residues sum to 2n and
/// nu_max + nu_min <= n, n - nu_max when they sum to 2n and
/// nu_max + nu_min >= n, and 0 otherwise.
long fakh_sym_intersect(int n, int j, const FCurveShape& s);

/// kappa(n,j,i) = n - (i*j mod n), in [1, n].
long kappa(int n, int j, long i);

/// Closed form for D^n_{1,j} . F_{1,1,i,n-i-2} via the kappa gate:
/// nonzero only when floor(ij/n) + floor((n-i-2)j/n) = j-2, in which case
/// the value is kappa if kappa <= j and 2j - kappa otherwise.
long f11_intersect(int n, int j, int i);

/// True iff D^n_{1,j} . F_{1,1,i} = 0, decided by whether some integer p
/// lies strictly between ij/n and (i+2)j/n.  Pure integer arithmetic:
/// an endpoint that is itself an integer does not count.
bool f11_vanishes(int n, int j, int i);

/// One-sided vanishing certificate for a divisor with per-point weight
/// indices w (general, not necessarily symmetric; each in [0, n), wider
/// than the weighted-space module allows) against the F-curve of a set
/// partition: certified zero when the block residues nu_k do not sum to
/// 2n or some nu_k = 0.  Returns false when no certificate applies; that
/// does not assert the intersection is nonzero.
bool general_weight_vanishing(int n, const std::vector<int>& weight_indices,
                              const SetPartition4& p);

}  // namespace cbnef

#endif
