#include "cbnef/intersection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cbnef {

bool SymDivisorClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& c) { return c.is_zero(); });
}

SymDivisorClass zero_class(const ModuliContext& ctx) {
  return SymDivisorClass{ctx, std::vector<Rat>(ctx.g)};
}

namespace {

// Coefficient lookup with the folding convention; indices 0 and 1 carry
// no boundary class and contribute 0.
Rat alpha(const SymDivisorClass& d, int t) {
  t = fold(t, d.ctx);
  if (t <= 1) return Rat(0);
  return d.coeffs[static_cast<std::size_t>(t) - 2];
}

}  // namespace

Rat km_intersect(const SymDivisorClass& d, const FCurveShape& s) {
  if (s.sum() != d.ctx.n)
    throw std::invalid_argument("km_intersect: shape " + s.str() + " does not partition n=" +
                                std::to_string(d.ctx.n));
  if (d.coeffs.size() != static_cast<std::size_t>(d.ctx.g))
    throw std::invalid_argument("km_intersect: class has wrong length");
  const auto [a, b, c, dd] = s.parts;
  return -alpha(d, a) - alpha(d, b) - alpha(d, c) - alpha(d, dd) +
         alpha(d, a + b) + alpha(d, a + c) + alpha(d, a + dd);
}

NuProfile nu_profile_symmetric(int n, int j, const FCurveShape& s) {
  if (j < 1 || j > n / 2)
    throw std::invalid_argument("nu_profile_symmetric: need 1 <= j <= n/2");
  NuProfile p{};
  for (int i = 0; i < 4; ++i)
    p.values[i] = static_cast<int>((static_cast<long>(j) * s.parts[i]) % n);
  p.sum = p.values[0] + p.values[1] + p.values[2] + p.values[3];
  p.max = *std::max_element(p.values.begin(), p.values.end());
  p.min = *std::min_element(p.values.begin(), p.values.end());
  return p;
}

long fakh_sym_intersect(int n, int j, const FCurveShape& s) {
  if (s.sum() != n)
    throw std::invalid_argument("fakh_sym_intersect: shape does not partition n");
  NuProfile p = nu_profile_symmetric(n, j, s);
  if (p.sum != 2 * n) return 0;
  if (p.max + p.min <= n) return p.min;
  return n - p.max;
}

long kappa(int n, int j, long i) {
  return n - (i * j) % n;
}

long f11_intersect(int n, int j, int i) {
  if (j < 2 || j > n / 2)
    throw std::invalid_argument("f11_intersect: need 2 <= j <= n/2");
  if (i < 1 || i > n / 2 - 1)
    throw std::invalid_argument("f11_intersect: need 1 <= i <= g");
  long ij = static_cast<long>(i) * j;
  long rest = static_cast<long>(n - i - 2) * j;
  if (ij / n + rest / n != j - 2) return 0;
  long k = kappa(n, j, i);
  if (1 <= k && k <= j) return k;
  if (j <= k && k <= 2 * j - 1) return 2 * j - k;
  return 0;
}

bool f11_vanishes(int n, int j, int i) {
  // Smallest candidate p with p > ij/n is floor(ij/n) + 1; the test is
  // ij < p*n < (i+2)j in integers, so an integral endpoint never counts.
  long lo = static_cast<long>(i) * j;
  long hi = static_cast<long>(i + 2) * j;
  long p = lo / n + 1;
  return !(lo < p * n && p * n < hi);
}

bool general_weight_vanishing(int n, const std::vector<int>& weight_indices,
                              const SetPartition4& p) {
  if (weight_indices.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("general_weight_vanishing: weight vector length != n");
  for (int w : weight_indices)
    if (w < 0 || w >= n)
      throw std::invalid_argument("general_weight_vanishing: weight index " +
                                  std::to_string(w) + " outside [0, n)");
  long sum = 0;
  bool any_zero = false;
  for (const auto& block : p.blocks) {
    long w = 0;
    for (int idx : block) w += weight_indices[static_cast<std::size_t>(idx) - 1];
    long nu = w % n;
    if (nu == 0) any_zero = true;
    sum += nu;
  }
  return sum != 2 * n || any_zero;
}

}  // namespace cbnef
