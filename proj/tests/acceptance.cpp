// Acceptance suite: end-to-end checks against the reference data and the
// global consistency sweeps, one PASS/FAIL line per criterion.  Exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "cbnef/basis.hpp"
#include "cbnef/divisors.hpp"
#include "cbnef/extremality.hpp"
#include "cbnef/hassett.hpp"

using namespace cbnef;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::ostream&)> run;
  double budget_secs = 0;  // 0 = no runtime bound
};

RatMatrix scaled(std::initializer_list<std::initializer_list<long>> rows, long den) {
  RatMatrix m = RatMatrix::from_rows(rows);
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j) / Rat(den);
  return out;
}

template <typename T>
std::string vec_str(const std::vector<T>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  out << ')';
  return out.str();
}

bool criterion_golden_matrices(std::ostream& log) {
  bool ok = true;
  RatMatrix m13 = RatMatrix::from_rows({{3, -1, 0, 0, 0},
                                        {0, 2, -1, 0, 0},
                                        {1, -1, 2, -1, 0},
                                        {1, 0, -1, 2, -1},
                                        {1, 0, 0, -1, 1}});
  RatMatrix n13 = scaled({{1, 1, 1, 1, 1},
                          {-3, 3, 3, 3, 3},
                          {-6, 0, 6, 6, 6},
                          {-8, -2, 4, 10, 10},
                          {-9, -3, 3, 9, 15}},
                         6);
  RatMatrix m12 = RatMatrix::from_rows({{3, -1, 0, 0, 0},
                                        {0, 2, -1, 0, 0},
                                        {1, -1, 2, -1, 0},
                                        {1, 0, -1, 2, -1},
                                        {1, 0, 0, -2, 2}});
  RatMatrix n12 = scaled({{2, 2, 2, 2, 1},
                          {-5, 6, 6, 6, 3},
                          {-10, 1, 12, 12, 6},
                          {-13, -2, 9, 20, 10},
                          {-14, -3, 8, 19, 15}},
                         11);
  if (intersection_matrix(make_context(13)) != m13) { log << "  M(13) mismatch\n"; ok = false; }
  if (intersection_matrix_inverse(make_context(13)) != n13) { log << "  N(13) mismatch\n"; ok = false; }
  if (intersection_matrix(make_context(12)) != m12) { log << "  M(12) mismatch\n"; ok = false; }
  if (intersection_matrix_inverse(make_context(12)) != n12) { log << "  N(12) mismatch\n"; ok = false; }
  return ok;
}

bool criterion_gamma_vectors(std::ostream& log) {
  bool ok = true;
  std::vector<long> got = expand_fcurve(make_context(12), make_shape(1, 2, 2, 7)).gammas;
  if (got != std::vector<long>{-1, 1, 1, 0, 0}) {
    log << "  (12,(1,2,2,7)): got " << vec_str(got) << "\n";
    ok = false;
  }
  std::vector<long> deep{-2, -3, -4, -5, -6, -7, -6, -5, -4, -3, -2, -1, 0, 0, 0,
                         1,  2,  3,  4,  5,  6,  7,  6,  5,  4,  3,  2,  1, 0, 0};
  std::vector<long> boundary{-2, -3, -4, -5, -6, -7, -8, -9, -8, -7, -6, -5, -4, -3, -2,
                             -1, 0,  0,  1,  2,  3,  4,  5,  6,  8,  10, 12, 12, 12, 6};
  ModuliContext c62 = make_context(62);
  if (expand_fcurve(c62, make_shape(16, 7, 7, 32)).gammas != deep) {
    log << "  (62, F_{16,7,7}) mismatch\n";
    ok = false;
  }
  if (expand_fcurve(c62, make_shape(19, 9, 9, 25)).gammas != boundary) {
    log << "  (62, F_{19,9,9}) mismatch\n";
    ok = false;
  }
  return ok;
}

bool criterion_intersection_tables(std::ostream& log) {
  bool ok = true;
  // reference transcripts
  std::vector<long> table20{0, 4, 2, 0, 4, 2, 0, 0, 6};
  std::vector<long> table28{5, 6, 0, 10, 1, 4, 7, 0, 9, 2, 3, 8, 0};

  std::vector<long> got20 = a_vector(make_divisor_spec(20, 6));
  if (got20 != table20) {
    ok = false;
    log << "  a(20,6): computed " << vec_str(got20) << ", transcript " << vec_str(table20)
        << "\n"
        << "    entries i=5,6 differ; the computed values follow the residue-profile\n"
        << "    formula (nu=(10,6,6,18) -> 20-18=2 at i=5; nu=(16,6,6,12) -> 20-16=4\n"
        << "    at i=6) and the kappa-gate closed form, which agree with each other\n"
        << "    here and on every other table entry; the transcript is inconsistent\n"
        << "    with both formulas at exactly these two entries\n";
  }
  std::vector<long> got28 = a_vector(make_divisor_spec(28, 11));
  if (got28 != table28) {
    ok = false;
    log << "  a(28,11): computed " << vec_str(got28) << "\n";
  }
  if (fakh_sym_intersect(20, 6, make_shape(2, 3, 3, 12)) != 0) {
    ok = false;
    log << "  F_{2,3,3}.D_6 != 0\n";
  }
  if (fakh_sym_intersect(28, 11, make_shape(1, 3, 3, 21)) != 0) {
    ok = false;
    log << "  F_{1,3,3}.D_11 != 0\n";
  }
  return ok;
}

bool criterion_example_matrices(std::ostream& log) {
  bool ok = true;
  CurveFamily f = build_family(make_divisor_spec(25, 7));
  RatMatrix c = coefficient_matrix(f);
  RatMatrix c_expect = RatMatrix::from_rows({
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {-2, -2, 0, 2, 2, 1, 0, 0, 0, 0, 0},
      {-2, -3, -1, 1, 3, 2, 1, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {-2, -3, -2, -1, 0, 1, 2, 3, 2, 1, 0},
      {-2, -3, -2, -1, 0, 0, 1, 2, 3, 2, 1},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {-2, -3, -2, -1, 0, 0, 0, 0, 1, 3, 5},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
  });
  if (c != c_expect) { log << "  C(25,7) mismatch\n"; ok = false; }
  RatMatrix chat = drop_to_chat(f, c);
  RatMatrix chat_expect = RatMatrix::from_rows({
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {-2, -2, 0, 2, 2, 1, 0, 0, 0, 0},
      {-2, -3, -1, 1, 3, 2, 1, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
      {-2, -3, -2, -1, 0, 1, 2, 3, 2, 0},
      {-2, -3, -2, -1, 0, 0, 1, 2, 3, 1},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {-2, -3, -2, -1, 0, 0, 0, 0, 1, 5},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
  });
  if (chat != chat_expect) { log << "  Chat(25,7) mismatch\n"; ok = false; }
  RatMatrix minor = nonunit_minor(f, chat);
  RatMatrix minor_expect = RatMatrix::from_rows({{-2, 0, 1, 0, 0},
                                                 {-3, -1, 2, 1, 0},
                                                 {-3, -2, 1, 2, 2},
                                                 {-3, -2, 0, 1, 3},
                                                 {-3, -2, 0, 0, 1}});
  if (minor != minor_expect) { log << "  minor(25,7) mismatch\n"; ok = false; }
  if (det(minor).abs() != Rat(5)) { log << "  |det| != 5 = j - r/2\n"; ok = false; }
  return ok;
}

bool criterion_48_17(std::ostream& log) {
  bool ok = true;
  CurveFamily f = build_family(make_divisor_spec(48, 17));
  RatMatrix minor = nonunit_minor(f, drop_to_chat(f, coefficient_matrix(f)));
  if (minor.rows() != 15 || minor.cols() != 15) {
    log << "  minor is " << minor.rows() << "x" << minor.cols() << ", want 15x15\n";
    ok = false;
  }
  if (det(minor).abs() != Rat(10)) {
    log << "  |det| = " << det(minor).abs().str() << ", want 10\n";
    ok = false;
  }
  DetFormulaReport rep = det_formula_check(make_divisor_spec(48, 17));
  if (!rep.pass || rep.expected != Rat(10)) {
    log << "  closed-form value mismatch\n";
    ok = false;
  }
  PairSequence seq = pair_sequence(f);
  if (seq.values != std::vector<int>{321, 321, 321, 321, 22, 321, 321} ||
      seq.final_group != "321") {
    log << "  pair sequence " << vec_str(seq.values) << " + final '" << seq.final_group
        << "', want (321,321,321,321,22,321,321) + final 321\n";
    ok = false;
  }
  return ok;
}

bool criterion_det_sweep(std::ostream& log) {
  bool ok = true;
  for (int n = 6; n <= 60; ++n)
    for (int j = 2; j <= n / 2; ++j) {
      CbDivisorSpec spec = make_divisor_spec(n, j);
      if (spec.r() == 0) continue;
      if (spec.k() == 2 && j <= 4) continue;  // no structured family
      DetFormulaReport rep = det_formula_check(spec);
      if (!rep.pass) {
        log << "  (n=" << n << ", j=" << j << "): |det| = " << rep.actual.str()
            << ", formula " << rep.expected.str() << "\n";
        ok = false;
      }
    }
  return ok;
}

bool criterion_class_consistency(std::ostream& log) {
  bool ok = true;
  for (int n = 6; n <= 30; ++n) {
    ModuliContext ctx = make_context(n);
    std::vector<FCurveShape> shapes = enumerate_shapes(ctx);
    for (int j = 2; j <= ctx.g + 1; ++j) {
      SymDivisorClass d = divisor_class(make_divisor_spec(n, j));
      for (const FCurveShape& s : shapes) {
        if (km_intersect(d, s) != Rat(fakh_sym_intersect(n, j, s))) {
          log << "  (n=" << n << ", j=" << j << ", shape " << s.str() << ")\n";
          ok = false;
        }
      }
    }
  }
  return ok;
}

bool criterion_extremality_sweep(std::ostream& log) {
  bool ok = true;
  auto expect_extremal = [&](int n, int j, CertMethod m, const char* label) {
    ExtremalityCertificate cert = certify(make_divisor_spec(n, j), m);
    if (cert.verdict != Verdict::Extremal || !cert.nef_ok) {
      log << "  (n=" << n << ", j=" << j << ") " << label << ": verdict "
          << (cert.verdict == Verdict::Extremal ? "Extremal" : "NotCertified")
          << ", nef=" << cert.nef_ok << "\n";
      ok = false;
    }
  };
  for (int n = 6; n <= 11; ++n)
    for (int j = 2; j <= n / 2; ++j) expect_extremal(n, j, CertMethod::BruteForce, "bruteforce");
  for (int n = 12; n <= 30; ++n)
    for (int j = 2; j <= n / 2; ++j) {
      expect_extremal(n, j, CertMethod::Structured, "structured");
      expect_extremal(n, j, CertMethod::BruteForce, "bruteforce");
    }
  return ok;
}

bool criterion_contraction_compat(std::ostream& log) {
  bool ok = true;
  auto run = [&](int n, const WeightVector& w, const std::string& label) {
    CompatibilityReport rep = contraction_compatibility_check(n, w, SamplePlan{});
    if (!rep.violations.empty()) {
      log << "  " << label << ": " << rep.violations.size() << " violations, first "
          << rep.violations.front().str() << "\n";
      ok = false;
    }
    if (rep.checked != count_set_partitions(n)) {
      log << "  " << label << ": checked " << rep.checked << " of "
          << count_set_partitions(n) << " partitions\n";
      ok = false;
    }
  };
  for (int n = 8; n <= 10; ++n)
    for (int j = 2; j <= n / 2; ++j)
      run(n, make_weight_vector(n, std::vector<int>(n, j)),
          "symmetric n=" + std::to_string(n) + " j=" + std::to_string(j));
  run(10, parse_weight_vector(10, "3,3,3,3,2,2,2,2,2,2"), "mixed (10; 3^4 2^6)");
  run(8, parse_weight_vector(8, "3,2,2,2,2,2,2,2"), "mixed (8; 3 2^7)");
  run(9, parse_weight_vector(9, "4,4,3,3,2,2,2,2,2"), "mixed (9; 4^2 3^2 2^5)");
  run(10, parse_weight_vector(10, "5,4,3,2,2,2,2,2,2,2"), "mixed (10; 5 4 3 2^7)");
  return ok;
}

bool criterion_oracles(std::ostream& log) {
  bool ok = true;
  for (int n = 6; n <= 100; ++n) {
    ModuliContext ctx = make_context(n);
    if (mat_mul(intersection_matrix(ctx), intersection_matrix_inverse(ctx)) !=
        RatMatrix::identity(ctx.g)) {
      log << "  M*N != I at n=" << n << "\n";
      ok = false;
    }
  }
  for (int n = 6; n <= 40; ++n) {
    ModuliContext ctx = make_context(n);
    for (const FCurveShape& s : enumerate_shapes(ctx)) {
      if (expand_fcurve(ctx, s).gammas != expand_fcurve_via_solve(ctx, s).gammas) {
        log << "  expansion routes differ at n=" << n << " shape " << s.str() << "\n";
        ok = false;
      }
    }
    for (int j = 2; j <= n / 2; ++j)
      for (int i = 1; i <= ctx.g; ++i) {
        if (f11_intersect(n, j, i) !=
            fakh_sym_intersect(n, j, make_shape(1, 1, i, n - i - 2))) {
          log << "  one-one routes differ at (n=" << n << ", j=" << j << ", i=" << i
              << ")\n";
          ok = false;
        }
      }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"golden intersection matrices M/N at n=13 and n=12 (exact, < 1 s)",
       criterion_golden_matrices, 1.0},
      {"curve expansions: (12,(1,2,2,7)) and both n=62 reference vectors",
       criterion_gamma_vectors},
      {"intersection tables (20,6) and (28,11) plus boxed replacement values",
       criterion_intersection_tables},
      {"(25,7): printed C, Chat, minor reproduced; |det| = 5 = j - r/2",
       criterion_example_matrices},
      {"(48,17): 15x15 minor, |det| = 10, pair sequence 321^4,22,321^2 + final",
       criterion_48_17},
      {"determinant formula sweep, 6 <= n <= 60, r != 0 (< 5 min)",
       criterion_det_sweep, 300.0},
      {"class consistency: km(class(n,j), s) = symmetric value, 6 <= n <= 30",
       criterion_class_consistency},
      {"extremality sweep: both methods Extremal + nef, n <= 30",
       criterion_extremality_sweep},
      {"contraction compatibility, exhaustive n <= 10 + mixed weights (< 2 min)",
       criterion_contraction_compat, 120.0},
      {"oracle identities: M*N = I to n=100; expansion and one-one routes to n=40",
       criterion_oracles},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = criteria[i].run(log);
    } catch (const std::exception& e) {
      log << "  exception: " << e.what() << "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (pass && criteria[i].budget_secs > 0 && secs > criteria[i].budget_secs) {
      log << "  over time budget: " << secs << "s > " << criteria[i].budget_secs << "s\n";
      pass = false;
    }
    std::printf("%s  criterion %2zu: %s (%.2fs)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), secs);
    if (!pass) {
      std::cout << log.str();
      ++failures;
    }
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
