#include "cbnef/divisors.hpp"

#include <stdexcept>
#include <string>

namespace cbnef {

CbDivisorSpec make_divisor_spec(int n, int j) {
  ModuliContext ctx = make_context(n);
  if (j < 1 || j > ctx.g + 1)
    throw std::invalid_argument("make_divisor_spec: need 1 <= j <= " +
                                std::to_string(ctx.g + 1) + " for n=" + std::to_string(n));
  return CbDivisorSpec{ctx, j};
}

std::vector<long> a_vector(const CbDivisorSpec& spec) {
  const int g = spec.ctx.g;
  std::vector<long> a(g, 0);
  if (spec.j == 1) return a;
  for (int i = 1; i <= g; ++i) a[i - 1] = f11_intersect(spec.ctx.n, spec.j, i);
  return a;
}

SymDivisorClass divisor_class(const CbDivisorSpec& spec) {
  if (spec.j == 1) return zero_class(spec.ctx);
  const int g = spec.ctx.g;
  RatMatrix inv = intersection_matrix_inverse(spec.ctx);
  std::vector<long> a = a_vector(spec);
  SymDivisorClass d = zero_class(spec.ctx);
  for (int r = 0; r < g; ++r) {
    Rat acc(0);
    for (int l = 0; l < g; ++l)
      if (a[l] != 0) acc += inv.at(r, l) * Rat(a[l]);
    d.coeffs[r] = acc;
  }
  return d;
}

FConeReport f_cone_check(const SymDivisorClass& d) {
  FConeReport report{true, {}};
  for (const FCurveShape& s : enumerate_shapes(d.ctx)) {
    if (km_intersect(d, s).sign() < 0) {
      report.is_in_cone = false;
      report.violations.push_back(s);
    }
  }
  return report;
}

std::vector<FCurveShape> zero_intersection_shapes(const CbDivisorSpec& spec) {
  std::vector<FCurveShape> out;
  for (const FCurveShape& s : enumerate_shapes(spec.ctx)) {
    bool zero = spec.j == 1 || fakh_sym_intersect(spec.ctx.n, spec.j, s) == 0;
    if (zero) out.push_back(s);
  }
  return out;
}

}  // namespace cbnef
