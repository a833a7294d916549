#include "cbnef/basis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cbnef {

namespace {

RatMatrix build_intersection_matrix(const ModuliContext& ctx) {
  const int g = ctx.g;
  RatMatrix m(g, g);
  for (int i = 1; i <= g; ++i) {
    FCurveShape s = make_shape(1, 1, i, ctx.n - i - 2);
    for (int q = 1; q <= g; ++q) {
      SymDivisorClass basis = zero_class(ctx);
      basis.coeffs[q - 1] = Rat(1);
      m.at(i - 1, q - 1) = km_intersect(basis, s);
    }
  }
  return m;
}

RatMatrix build_inverse(const ModuliContext& ctx) {
  const int g = ctx.g;
  RatMatrix m(g, g);
  if (ctx.n % 2 == 1) {
    for (int r = 1; r <= g; ++r)
      for (int s = 1; s <= g; ++s) {
        Rat v(static_cast<long>(r) * (r + 1), 2L * (g + 1));
        if (s < r) v += Rat(s - r);
        m.at(r - 1, s - 1) = v;
      }
  } else {
    for (int r = 1; r <= g; ++r)
      for (int s = 1; s <= g; ++s) {
        Rat v = s == g ? Rat(static_cast<long>(r) * (r + 1), 2L * (2 * g + 1))
                       : Rat(static_cast<long>(r) * (r + 1), 2L * g + 1);
        if (s < g && s < r) v += Rat(s - r);
        m.at(r - 1, s - 1) = v;
      }
  }
  return m;
}

// Per-n memo for the three basis matrices; they get rebuilt constantly in
// sweeps, and concurrent readers must be safe.
class MatrixCache {
 public:
  RatMatrix get(int n, int which, RatMatrix (*build)(const ModuliContext&)) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = store_.find({n, which});
      if (it != store_.end()) return it->second;
    }
    RatMatrix m = build(make_context(n));
    std::lock_guard<std::mutex> lock(mu_);
    return store_.try_emplace({n, which}, std::move(m)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, RatMatrix> store_;
};

MatrixCache& cache() {
  static MatrixCache c;
  return c;
}

void require_basis_range(const ModuliContext& ctx, const char* who) {
  if (ctx.n < 4)
    throw std::invalid_argument(std::string(who) + ": need n >= 4");
}

}  // namespace

RatMatrix intersection_matrix(const ModuliContext& ctx) {
  require_basis_range(ctx, "intersection_matrix");
  return cache().get(ctx.n, 0, &build_intersection_matrix);
}

RatMatrix intersection_matrix_inverse(const ModuliContext& ctx) {
  require_basis_range(ctx, "intersection_matrix_inverse");
  return cache().get(ctx.n, 1, &build_inverse);
}

RatMatrix dual_expansion_matrix(const ModuliContext& ctx) {
  require_basis_range(ctx, "dual_expansion_matrix");
  return intersection_matrix_inverse(ctx).transpose();
}

namespace {

void require_expandable(const ModuliContext& ctx, const FCurveShape& s, const char* who) {
  if (s.sum() != ctx.n)
    throw std::invalid_argument(std::string(who) + ": shape does not partition n");
  if (!std::is_sorted(s.parts.begin(), s.parts.end()))
    throw std::invalid_argument(std::string(who) + ": shape must be sorted ascending");
}

}  // namespace

long expansion_offset(const ModuliContext& ctx, const FCurveShape& s) {
  require_expandable(ctx, s, "expansion_offset");
  const int n = ctx.n, g = ctx.g;
  const auto [a, b, c, d] = s.parts;
  if (d > g + 1) return 0;
  if (a + d <= g + 1) return 2L * a;
  if (a + c <= g + 1) return n - 2L * d;  // and a + d > g + 1
  if (a + b <= g + 1) return 2L * b;      // and a + c > g + 1
  return n - 2L * a;
}

long expansion_correction(const ModuliContext& ctx, const FCurveShape& s, int j) {
  require_expandable(ctx, s, "expansion_correction");
  const auto [a, b, c, d] = s.parts;
  long out = 0;
  for (int t : {a, b, c, d}) out += std::max(fold(t, ctx) - 1 - j, 0);
  for (int u : {b, c, d}) out -= std::max(fold(a + u, ctx) - 1 - j, 0);
  return out;
}

SymCurveClass expand_fcurve(const ModuliContext& ctx, const FCurveShape& s) {
  require_expandable(ctx, s, "expand_fcurve");
  const int n = ctx.n, g = ctx.g;
  const long offset = expansion_offset(ctx, s);
  SymCurveClass out{ctx, std::vector<long>(g)};
  for (int j = 1; j <= g; ++j) {
    long corr = expansion_correction(ctx, s, j);
    if (n % 2 == 0 && j == g)
      out.gammas[j - 1] = offset / 2 + corr;  // offset is even whenever n is
    else
      out.gammas[j - 1] = offset + corr;
  }
  return out;
}

SymCurveClass expand_fcurve_via_solve(const ModuliContext& ctx, const FCurveShape& s) {
  if (s.sum() != ctx.n)
    throw std::invalid_argument("expand_fcurve_via_solve: shape does not partition n");
  const int g = ctx.g;
  std::vector<Rat> rhs(g);
  for (int r = 1; r <= g; ++r) {
    SymDivisorClass basis = zero_class(ctx);
    basis.coeffs[r - 1] = Rat(1);
    rhs[r - 1] = km_intersect(basis, s);
  }
  // gamma solves M^t gamma = (B.F): pairing the expansion against each
  // basis divisor row by row.
  std::vector<Rat> x = solve(intersection_matrix(ctx).transpose(), rhs);
  SymCurveClass out{ctx, std::vector<long>(g)};
  for (int j = 0; j < g; ++j) out.gammas[j] = x[j].to_long();
  return out;
}

SymCurveClass expand_ikk_special(const ModuliContext& ctx, int i, int k) {
  const int n = ctx.n, g = ctx.g;
  if (k < 1 || i < 1 || n - i - 2 * k < 1)
    throw std::invalid_argument("expand_ikk_special: not a valid curve");
  SymCurveClass out{ctx, std::vector<long>(g)};

  const bool deep = 4 * k < g + 1 && i + 2 * k <= g + 1 &&
                    !(n % 2 == 0 && i == g + 1 - 2 * k);
  const bool boundary = i + k <= g + 1 && g + 1 < i + 2 * k && 2 * k <= i &&
                        i <= n - i - 2 * k && n - i - 2 * k <= i + k &&
                        !(n % 2 == 0 && i == g + 1 - k);
  if (deep) {
    for (int j = 1; j <= g; ++j) {
      long v;
      if (i < k) {
        if (j < i) v = -j - 1;
        else if (j < k) v = -i;
        else if (j < i + k) v = 2L * j + 2 - i - 2 * k;
        else if (j < 2 * k) v = i;
        else if (j < i + 2 * k) v = i + 2L * k - j - 1;
        else v = 0;
      } else if (i < 2 * k) {
        if (j < k) v = -j - 1;
        else if (j < i) v = j + 1 - 2L * k;
        else if (j < 2 * k) v = 2L * j + 2 - i - 2 * k;
        else if (j < i + k) v = j + 1L - i;
        else if (j < i + 2 * k) v = i + 2L * k - j - 1;
        else v = 0;
      } else {
        if (j < k) v = -j - 1;
        else if (j < 2 * k) v = j + 1 - 2L * k;
        else if (j < i) v = 0;
        else if (j < i + k) v = j + 1L - i;
        else if (j < i + 2 * k) v = i + 2L * k - j - 1;
        else v = 0;
      }
      out.gammas[j - 1] = v;
    }
    return out;
  }
  if (boundary) {
    for (int j = 1; j <= g; ++j) {
      long v;
      if (j < k) v = -j - 1;
      else if (j < 2 * k) v = j + 1 - 2L * k;
      else if (j < i) v = 0;
      else if (j < n - i - 2 * k) v = j + 1L - i;
      else if (j < i + k) v = 2L * k + 2 * j - n + 2;
      else if (j <= g - 1 || n % 2 == 1) v = 2L * i + 4 * k - n;
      else v = i + 2L * k - g - 1;  // even n, j = g
      out.gammas[j - 1] = v;
    }
    return out;
  }
  throw std::domain_error(
      "expand_ikk_special: (i=" + std::to_string(i) + ", k=" + std::to_string(k) +
      ") is outside both specialized ranges; use expand_fcurve");
}

}  // namespace cbnef
