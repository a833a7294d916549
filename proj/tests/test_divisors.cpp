#include <doctest.h>

#include <algorithm>

#include "cbnef/divisors.hpp"

using namespace cbnef;

TEST_CASE("a-vector for (20,6) follows the intersection formulas") {
  // the two routes (kappa gate and residue profile) agree entrywise
  CbDivisorSpec spec = make_divisor_spec(20, 6);
  std::vector<long> a = a_vector(spec);
  CHECK(a == std::vector<long>{0, 4, 2, 0, 2, 4, 0, 0, 6});
  for (int i = 1; i <= 9; ++i)
    CHECK(a[i - 1] == fakh_sym_intersect(20, 6, make_shape(1, 1, i, 18 - i)));
}

TEST_CASE("a-vector for (28,11)") {
  CHECK(a_vector(make_divisor_spec(28, 11)) ==
        std::vector<long>{5, 6, 0, 10, 1, 4, 7, 0, 9, 2, 3, 8, 0});
}

TEST_CASE("a-vector for j=1 is zero") {
  for (int n : {8, 13, 20}) {
    std::vector<long> a = a_vector(make_divisor_spec(n, 1));
    CHECK(std::all_of(a.begin(), a.end(), [](long v) { return v == 0; }));
    CHECK(divisor_class(make_divisor_spec(n, 1)).is_zero());
  }
}

TEST_CASE("a-vector entries lie in [0, n/2]") {
  for (int n = 6; n <= 30; ++n)
    for (int j = 2; j <= n / 2; ++j)
      for (long v : a_vector(make_divisor_spec(n, j))) {
        CHECK(v >= 0);
        CHECK(v <= n / 2);
      }
}

TEST_CASE("divisor class for (8,2)") {
  SymDivisorClass d = divisor_class(make_divisor_spec(8, 2));
  CHECK(d.coeffs == std::vector<Rat>{Rat(2, 7), Rat(6, 7), Rat(12, 7)});
}

TEST_CASE("divisor class round-trips its defining intersections") {
  CbDivisorSpec spec = make_divisor_spec(13, 2);
  SymDivisorClass d = divisor_class(spec);
  std::vector<long> a = a_vector(spec);
  for (int l = 1; l <= spec.ctx.g; ++l)
    CHECK(km_intersect(d, make_shape(1, 1, l, 13 - l - 2)) == Rat(a[l - 1]));
}

TEST_CASE("divisor class reproduces every symmetric intersection, n <= 30") {
  for (int n = 6; n <= 30; ++n)
    for (int j = 2; j <= n / 2; ++j) {
      CbDivisorSpec spec = make_divisor_spec(n, j);
      SymDivisorClass d = divisor_class(spec);
      for (const FCurveShape& s : enumerate_shapes(spec.ctx))
        CHECK(km_intersect(d, s) == Rat(fakh_sym_intersect(n, j, s)));
    }
}

TEST_CASE("F-cone membership") {
  CHECK(f_cone_check(divisor_class(make_divisor_spec(20, 6))).is_in_cone);
  CHECK(f_cone_check(zero_class(make_context(9))).is_in_cone);

  // -B_2 on n=8 fails, first violation at shape (1,1,1,5) with value -3
  SymDivisorClass neg = zero_class(make_context(8));
  neg.coeffs[0] = Rat(-1);
  FConeReport rep = f_cone_check(neg);
  CHECK_FALSE(rep.is_in_cone);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations.front() == make_shape(1, 1, 1, 5));
  CHECK(km_intersect(neg, make_shape(1, 1, 1, 5)) == Rat(-3));
}

TEST_CASE("level-one divisor classes are in the F-cone, n <= 30") {
  for (int n = 6; n <= 30; ++n)
    for (int j = 1; j <= n / 2; ++j)
      CHECK(f_cone_check(divisor_class(make_divisor_spec(n, j))).is_in_cone);
}

TEST_CASE("zero intersection shapes") {
  std::vector<FCurveShape> z20 = zero_intersection_shapes(make_divisor_spec(20, 6));
  auto contains = [](const std::vector<FCurveShape>& v, const FCurveShape& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  CHECK(contains(z20, make_shape(1, 1, 1, 17)));
  CHECK(contains(z20, make_shape(3, 3, 9, 5)));
  CHECK_FALSE(contains(z20, make_shape(1, 1, 2, 16)));

  std::vector<FCurveShape> z28 = zero_intersection_shapes(make_divisor_spec(28, 11));
  CHECK(contains(z28, make_shape(2, 2, 2, 22)));
  CHECK_FALSE(contains(z28, make_shape(1, 2, 2, 23)));

  // trivial divisor: every shape intersects in zero
  CHECK(zero_intersection_shapes(make_divisor_spec(16, 1)).size() ==
        enumerate_shapes(make_context(16)).size());

  // lexicographic order, so the brute-force greedy scan is deterministic
  CHECK(std::is_sorted(z20.begin(), z20.end()));
  CHECK(std::is_sorted(z28.begin(), z28.end()));
}

TEST_CASE("divisor spec validation") {
  CHECK_THROWS_AS(make_divisor_spec(20, 11), std::invalid_argument);
  CHECK_THROWS_AS(make_divisor_spec(20, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_divisor_spec(3, 1), std::invalid_argument);
}
