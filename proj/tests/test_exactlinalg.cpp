#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cbnef/matrix.hpp"
#include "cbnef/rational.hpp"

using namespace cbnef;

namespace {

// splitmix64, for reproducible random matrices
std::uint64_t next_u64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RatMatrix random_int_matrix(std::size_t n, std::uint64_t& s, long lo = -9, long hi = 9) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Rat(lo + static_cast<long>(next_u64(s) % (hi - lo + 1)));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  Rat a(2, 6);
  CHECK(a == Rat(1, 3));
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 3);
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(-4, 8)).str() == "-1/2");
  CHECK(Rat(-7, -14) == Rat(1, 2));  // denominator kept positive
  CHECK(Rat(5).str() == "5");
  CHECK(Rat::from_string("12/30") == Rat(2, 5));
  CHECK(Rat::from_string("-3") == Rat(-3));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(1, 2).to_long(), std::domain_error);
  CHECK(Rat(-10, 4).abs() == Rat(5, 2));
}

TEST_CASE("mat_mul: identity and dimension checks") {
  RatMatrix a = RatMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  CHECK(mat_mul(RatMatrix::identity(3), a) == a);
  CHECK(mat_mul(a, RatMatrix::identity(2)) == a);
  CHECK_THROWS_AS(mat_mul(a, a), std::invalid_argument);
}

TEST_CASE("rank: zero matrix and hand cases") {
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(rank(RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
}

TEST_CASE("det: identity, empty, singular, non-square") {
  CHECK(det(RatMatrix::identity(4)) == Rat(1));
  CHECK(det(RatMatrix(0, 0)) == Rat(1));
  CHECK(det(RatMatrix::from_rows({{1, 2}, {2, 4}})) == Rat(0));
  CHECK(det(RatMatrix::from_rows({{0, 1}, {-1, 0}})) == Rat(1));
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("invert: identity, singular rejection") {
  CHECK(invert(RatMatrix::identity(5)) == RatMatrix::identity(5));
  RatMatrix a = RatMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(mat_mul(a, invert(a)) == RatMatrix::identity(2));
  CHECK_THROWS_AS(invert(RatMatrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("solve: identity and singular rejection") {
  std::vector<Rat> v{Rat(3), Rat(-1, 2), Rat(7)};
  CHECK(solve(RatMatrix::identity(3), v) == v);
  CHECK_THROWS_AS(solve(RatMatrix::from_rows({{1, 1}, {1, 1}}), {Rat(1), Rat(2)}),
                  std::domain_error);
}

TEST_CASE("random nonsingular systems: a * solve(a, v) == v") {
  std::uint64_t seed = 20240911;
  int solved = 0;
  while (solved < 25) {
    RatMatrix a = random_int_matrix(4, seed);
    if (det(a).is_zero()) continue;
    std::vector<Rat> v;
    for (int i = 0; i < 4; ++i)
      v.emplace_back(static_cast<long>(next_u64(seed) % 19) - 9);
    std::vector<Rat> x = solve(a, v);
    for (std::size_t i = 0; i < 4; ++i) {
      Rat acc(0);
      for (std::size_t jj = 0; jj < 4; ++jj) acc += a.at(i, jj) * x[jj];
      CHECK(acc == v[i]);
    }
    CHECK(mat_mul(a, invert(a)) == RatMatrix::identity(4));
    ++solved;
  }
}

TEST_CASE("det and rank agree on singularity; det respects row operations") {
  std::uint64_t seed = 7;
  for (int trial = 0; trial < 40; ++trial) {
    RatMatrix a = random_int_matrix(4, seed, -4, 4);
    CHECK((det(a).is_zero()) == (rank(a) < 4));

    // adding a multiple of one row to another preserves det
    RatMatrix b = a;
    Rat factor(static_cast<long>(next_u64(seed) % 7) - 3);
    for (std::size_t c = 0; c < 4; ++c) b.at(2, c) += factor * b.at(0, c);
    CHECK(det(b) == det(a));

    // permuting rows preserves |det|
    RatMatrix p = a;
    for (std::size_t c = 0; c < 4; ++c) std::swap(p.at(1, c), p.at(3, c));
    CHECK(det(p).abs() == det(a).abs());
  }
}

TEST_CASE("results are reproducible value types") {
  RatMatrix a = RatMatrix::from_rows({{3, -1, 0}, {0, 2, -1}, {1, -1, 2}});
  RatMatrix inv1 = invert(a);
  RatMatrix inv2 = invert(a);
  CHECK(inv1 == inv2);
  CHECK(det(a) == det(a));
  // operations leave their arguments untouched
  CHECK(a == RatMatrix::from_rows({{3, -1, 0}, {0, 2, -1}, {1, -1, 2}}));
}
