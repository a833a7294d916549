#ifndef CBNEF_MODULI_HPP
#define CBNEF_MODULI_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cbnef {

/// Ambient data for the moduli space of stable n-pointed rational curves.
/// g = floor(n/2) - 1 is the dimension of the space of symmetric divisor
/// classes (equivalently of symmetric curve classes), so n = 2g+2 or 2g+3.
struct ModuliContext {
  int n;
  int g;
};

/// Throws std::invalid_argument unless n >= 4.
ModuliContext make_context(int n);

/// Index folding for symmetric boundary coefficients: x for x <= g+1,
/// n - x otherwise.  The value g+1 folds to itself.
int fold(int x, const ModuliContext& ctx);

/// Shape of an F-curve: a partition of n into four positive parts, kept
/// sorted ascending.  Symmetric divisor classes see only the shape of the
/// underlying set partition, so this is the right key for all symmetric
/// intersection formulas.
struct FCurveShape {
  std::array<int, 4> parts;

  int sum() const { return parts[0] + parts[1] + parts[2] + parts[3]; }
  std::string str() const;

  friend bool operator==(const FCurveShape& a, const FCurveShape& b) {
    return a.parts == b.parts;
  }
  friend bool operator<(const FCurveShape& a, const FCurveShape& b) {
    return a.parts < b.parts;
  }
};

/// Canonicalizes (sorts ascending) and validates positivity.
FCurveShape make_shape(int a, int b, int c, int d);

/// Parses "a,b,c,d".
FCurveShape parse_shape(const std::string& text);

/// All 4-part partitions of n, each once, in lexicographic order.
std::vector<FCurveShape> enumerate_shapes(const ModuliContext& ctx);

/// A partition of {1,...,n} into four nonempty blocks (unordered as a
/// partition; blocks are stored sorted by their smallest element).
struct SetPartition4 {
  std::array<std::vector<int>, 4> blocks;

  FCurveShape shape() const;
  std::string str() const;
};

/// Parses "1,2|3|4|5,6" against ground set {1..n}; validates coverage.
SetPartition4 parse_set_partition(const std::string& text, int n);

inline constexpr int kDefaultSetPartitionCap = 12;

/// Streams every partition of {1..n} into 4 nonempty unordered blocks,
/// exactly once, to the visitor.  Counts grow like Stirling numbers
/// S(n,4), so n is capped (default 12) unless the caller overrides.
void for_each_set_partition(const ModuliContext& ctx,
                            const std::function<void(const SetPartition4&)>& visit,
                            int cap = kDefaultSetPartitionCap);

/// Number of partitions of {1..n} into 4 nonempty blocks, S(n,4).
std::uint64_t count_set_partitions(int n);

}  // namespace cbnef

#endif
