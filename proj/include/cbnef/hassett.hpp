#ifndef CBNEF_HASSETT_HPP
#define CBNEF_HASSETT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cbnef/moduli.hpp"
#include "cbnef/rational.hpp"

namespace cbnef {

/// Fundamental-weight indices (j_1,...,j_n), each in {1..floor(n/2)} and
/// summing to at least 2n so the induced weights define a moduli space of
/// weighted pointed curves.
struct WeightVector {
  int n;
  std::vector<int> indices;
};

/// Validates and wraps a weight-index tuple; throws std::invalid_argument
/// naming the violated condition.
WeightVector make_weight_vector(int n, std::vector<int> indices);

/// Parses a comma-separated index list.
WeightVector parse_weight_vector(int n, const std::string& text);

/// Hassett weights a_i = j_i / n of the minimal weighted space attached
/// to the divisor with those weight indices.
struct HassettWeights {
  int n;
  std::vector<Rat> a;
};

HassettWeights minimal_hassett(int n, const WeightVector& w);

/// Whether the reduction morphism of the weighted space contracts the
/// F-curve of the given set partition: true iff the total weight on the
/// three smallest blocks is <= 1.  Blocks are ordered by cardinality
/// (ties broken by smaller weight sum).
bool is_contracted(const HassettWeights& a, const SetPartition4& p);

/// Variant ordering blocks by weight sum instead of cardinality.  With
/// non-symmetric weights the two orderings can disagree; this one is the
/// strict "three lightest blocks" reading and is exposed for
/// experimentation only.
bool is_contracted_by_weight(const HassettWeights& a, const SetPartition4& p);

/// Sampling plan for contraction_compatibility_check.
struct SamplePlan {
  enum class Kind { Exhaustive, Random } kind = Kind::Exhaustive;
  int cap = kDefaultSetPartitionCap;  // exhaustive: refuse n above this
  std::uint64_t count = 0;            // random: number of samples
  std::uint64_t seed = 0;
};

struct CompatibilityReport {
  std::uint64_t checked = 0;
  std::uint64_t contracted = 0;
  std::vector<SetPartition4> violations;
};

/// Compatibility check between the contraction and the divisor: every
/// contracted F-curve must carry a vanishing certificate
/// (general_weight_vanishing).  Violations should always be empty; a
/// nonempty list would falsify the factorization statement this library
/// is built around.
CompatibilityReport contraction_compatibility_check(int n, const WeightVector& w, const SamplePlan& plan);

}  // namespace cbnef

#endif
