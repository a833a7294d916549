#ifndef CBNEF_EXTREMALITY_HPP
#define CBNEF_EXTREMALITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cbnef/divisors.hpp"
#include "cbnef/matrix.hpp"

namespace cbnef {

/// One member of the curve family: F_{index,1,1} when pair == 1, and the
/// replacement curve F_{index,pair,pair} otherwise (pair is k for the
/// k >= 3 regimes and 2 or 3 in the k = 2 regime).
struct FamilyEntry {
  int index;
  int pair;

  bool is_one_one() const { return pair == 1; }
  FCurveShape shape(const ModuliContext& ctx) const;
  std::string str() const;
};

/// The family of g curves intersecting D^n_{1,j} in degree zero, plus the
/// index of the curve dropped to reach g-1 members.  For j = 2 the family
/// has only g-1 one-one curves and no dropped member; the dropped *column*
/// is still g.
struct CurveFamily {
  ModuliContext ctx;
  int j;
  int k;
  int r;
  std::vector<FamilyEntry> entries;
  int dropped;              // index p of the removed column
  bool dropped_in_entries;  // false only for j = 2

  /// Entries minus the dropped curve, in increasing index order.
  std::vector<FamilyEntry> surviving() const;
};

/// Indices i in {1..g} with i*j divisible by n, where the one-one curve
/// must be replaced even though its intersection vanishes: multiples of
/// n/gcd(j,r) when r >= 2, empty when r = 1.  Only defined for r >= 1.
std::set<int> forced_replacement_indices(int n, int j);

/// Builds the curve family for D^n_{1,j}.  Regimes:
///  - j = 2: the one-one curves F_{1,1,1}..F_{g-1,1,1}, nothing replaced;
///  - r = 0, j >= 3: replace at i = -1 mod k, drop the last replacement;
///  - k >= 3, r > 0, j >= 3: replace at forced indices and wherever the
///    one-one intersection is nonzero, drop the last replacement;
///  - k = 2, r > 0, j >= 5: replacements escalate F_{i,2,2} -> F_{i,3,3},
///    with a forced 3,3 when (i+2)j = 0 mod n, drop the last replacement.
/// Throws std::domain_error for k = 2 with j <= 4 (n <= 11), where no
/// structured family exists and certification falls back to brute force.
CurveFamily build_family(const CbDivisorSpec& spec);

/// True iff every member of the family intersects D^n_{1,j} in degree zero.
bool family_zero_check(const CurveFamily& f);

/// Coefficient matrix of the surviving family: one row per surviving
/// curve (increasing index), written in the {F_{q,1,1}} basis.
/// (g-1) x g.
RatMatrix coefficient_matrix(const CurveFamily& f);

/// Removes the dropped curve's row (when still present) and the dropped
/// column, yielding the square (g-1) x (g-1) matrix whose rank certifies
/// independence.
RatMatrix drop_to_chat(const CurveFamily& f, const RatMatrix& c);

/// Minor of the reduced matrix on the rows of the replacement curves and
/// their own columns.  The one-one rows are standard basis rows, so full
/// rank is equivalent to this minor being nonsingular.  Empty (0x0, with
/// determinant 1) when the family has no replacements.
RatMatrix nonunit_minor(const CurveFamily& f, const RatMatrix& chat);

enum class CertMethod { Structured, BruteForce };
enum class Verdict { Extremal, NotCertified };

struct ExtremalityCertificate {
  CbDivisorSpec spec{};
  CertMethod method = CertMethod::Structured;  // method actually used
  Verdict verdict = Verdict::NotCertified;
  std::string note;            // nonempty for degenerate/trivial/rerouted cases
  std::optional<CurveFamily> family;
  RatMatrix c;                 // coefficient rows actually used
  RatMatrix chat;              // square reduced matrix (structured only)
  std::optional<Rat> minor_det;
  std::size_t rank = 0;
  bool zeros_ok = false;
  bool distinct_ok = false;
  bool nef_ok = false;
  std::vector<FCurveShape> bruteforce_rows;
};

/// Certifies that D^n_{1,j} spans an extremal ray of the symmetric nef
/// cone.  Structured: builds the family, verifies zero intersections,
/// distinctness, rank g-1 of the reduced matrix, and F-cone membership.
/// BruteForce: greedily assembles g-1 independent expansion rows over all
/// zero-intersection shapes in lexicographic order.  Requests for a
/// structured certificate where no structured family exists (k = 2 with
/// j <= 4) are rerouted to brute force, with a note.
ExtremalityCertificate certify(const CbDivisorSpec& spec, CertMethod method);

struct DetFormulaReport {
  Rat expected;
  Rat actual;  // |det| of the replacement minor
  bool pass;
};

/// Checks |det(nonunit_minor)| against the closed form j/2 (j even),
/// j - r/2 (j odd, r even), (j-r)/2 (j odd, r odd).  Only defined for
/// r >= 1; throws for r = 0.
DetFormulaReport det_formula_check(const CbDivisorSpec& spec);

/// Grouping structure of the family.  For k >= 3 the replacement curves
/// come in adjacent-index pairs separated by runs of k-1 or k-2 one-one
/// curves; values records those run lengths for each pair before the
/// terminal group.  For k = 2 the family tiles into 22 and 321 groups;
/// values holds the literal codes 22 / 321 for the complete groups before
/// the terminal one.  betas[i] counts 321 groups among values[0..i-1]
/// (and betas.back() is the total).
struct PairSequence {
  bool k2_groups;            // true: values are 22/321 codes
  std::vector<int> values;
  std::string final_group;   // terminal group as placed in the full family
  std::vector<int> betas;
};

/// Reads the grouping labels off the family; throws std::domain_error if
/// the family violates the grouping grammar (this is itself a structural
/// check).  Defined for k >= 3 with r > 0 and for k = 2 with r > 0.
PairSequence pair_sequence(const CurveFamily& f);

}  // namespace cbnef

#endif
