#include "cbnef/extremality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cbnef {

FCurveShape FamilyEntry::shape(const ModuliContext& ctx) const {
  if (pair == 1) return make_shape(1, 1, index, ctx.n - index - 2);
  return make_shape(index, pair, pair, ctx.n - index - 2 * pair);
}

std::string FamilyEntry::str() const {
  return "F_{" + std::to_string(index) + "," + std::to_string(pair) + "," +
         std::to_string(pair) + "}";
}

std::vector<FamilyEntry> CurveFamily::surviving() const {
  std::vector<FamilyEntry> out;
  for (const FamilyEntry& e : entries)
    if (!(dropped_in_entries && e.index == dropped)) out.push_back(e);
  return out;
}

std::set<int> forced_replacement_indices(int n, int j) {
  int r = n % j;
  if (r < 1) throw std::invalid_argument("forced_replacement_indices: needs r >= 1");
  std::set<int> out;
  if (r == 1) return out;
  int gg = std::gcd(j, r);
  int g = n / 2 - 1;
  for (int t = 1; t <= gg / 2; ++t) {
    long v = static_cast<long>(t) * (n / gg);
    if (1 <= v && v <= g) out.insert(static_cast<int>(v));
  }
  return out;
}

CurveFamily build_family(const CbDivisorSpec& spec) {
  const int n = spec.ctx.n, g = spec.ctx.g, j = spec.j;
  const int k = spec.k(), r = spec.r();
  if (n < 6)
    throw std::domain_error("build_family: degenerate for n < 6 (g - 1 < 1)");
  if (j < 2 || j > g + 1)
    throw std::invalid_argument("build_family: need 2 <= j <= g+1");

  CurveFamily fam{spec.ctx, j, k, r, {}, 0, true};

  if (j == 2) {
    for (int i = 1; i <= g - 1; ++i) fam.entries.push_back({i, 1});
    fam.dropped = g;
    fam.dropped_in_entries = false;
    return fam;
  }

  if (k == 2 && j <= 4)
    throw std::domain_error(
        "build_family: no structured family for k = 2 with j <= 4 (n <= 11); "
        "certify by brute force instead");

  if (r == 0) {
    for (int i = 1; i <= g; ++i)
      fam.entries.push_back({i, i % k == k - 1 ? k : 1});
  } else if (k >= 3) {
    std::set<int> forced = forced_replacement_indices(n, j);
    for (int i = 1; i <= g; ++i) {
      bool replace = forced.count(i) > 0 || f11_intersect(n, j, i) != 0;
      fam.entries.push_back({i, replace ? k : 1});
    }
  } else {
    for (int i = 1; i <= g; ++i) {
      if ((static_cast<long>(i + 2) * j) % n == 0) {
        fam.entries.push_back({i, 3});
      } else if (f11_intersect(n, j, i) == 0) {
        fam.entries.push_back({i, 1});
      } else if (fakh_sym_intersect(n, j, make_shape(i, 2, 2, n - i - 4)) == 0) {
        fam.entries.push_back({i, 2});
      } else {
        fam.entries.push_back({i, 3});
      }
    }
  }

  fam.dropped = 0;
  for (const FamilyEntry& e : fam.entries)
    if (!e.is_one_one()) fam.dropped = std::max(fam.dropped, e.index);
  if (fam.dropped == 0)
    throw std::domain_error("build_family: family has no replacement curve to drop");
  return fam;
}

bool family_zero_check(const CurveFamily& f) {
  for (const FamilyEntry& e : f.entries)
    if (fakh_sym_intersect(f.ctx.n, f.j, e.shape(f.ctx)) != 0) return false;
  return true;
}

RatMatrix coefficient_matrix(const CurveFamily& f) {
  const int g = f.ctx.g;
  std::vector<FamilyEntry> rows = f.surviving();
  RatMatrix c(rows.size(), g);
  for (std::size_t rix = 0; rix < rows.size(); ++rix) {
    const FamilyEntry& e = rows[rix];
    if (e.is_one_one()) {
      c.at(rix, e.index - 1) = Rat(1);
    } else {
      SymCurveClass gamma = expand_fcurve(f.ctx, e.shape(f.ctx));
      for (int q = 0; q < g; ++q) c.at(rix, q) = Rat(gamma.gammas[q]);
    }
  }
  return c;
}

RatMatrix drop_to_chat(const CurveFamily& f, const RatMatrix& c) {
  RatMatrix m = c;
  if (m.rows() == static_cast<std::size_t>(f.ctx.g) && f.dropped_in_entries) {
    // caller supplied rows for the whole family; remove the dropped one
    std::size_t row = 0;
    for (std::size_t i = 0; i < f.entries.size(); ++i)
      if (f.entries[i].index == f.dropped) row = i;
    m = m.without_row(row);
  }
  m = m.without_col(static_cast<std::size_t>(f.dropped) - 1);
  if (!m.is_square())
    throw std::logic_error("drop_to_chat: reduced matrix is not square");
  return m;
}

RatMatrix nonunit_minor(const CurveFamily& f, const RatMatrix& chat) {
  std::vector<FamilyEntry> rows = f.surviving();
  if (rows.size() != chat.rows())
    throw std::invalid_argument("nonunit_minor: matrix does not match family");
  // columns of chat are F_{q,1,1} for q in {1..g} minus the dropped one
  std::vector<std::size_t> row_idx, col_idx;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].is_one_one()) continue;
    row_idx.push_back(i);
    std::size_t col = static_cast<std::size_t>(rows[i].index) - 1;
    if (rows[i].index > f.dropped) --col;
    col_idx.push_back(col);
  }
  return chat.submatrix(row_idx, col_idx);
}

namespace {

bool all_distinct_shapes(const CurveFamily& f) {
  std::vector<FCurveShape> shapes;
  for (const FamilyEntry& e : f.surviving()) shapes.push_back(e.shape(f.ctx));
  std::sort(shapes.begin(), shapes.end());
  return std::adjacent_find(shapes.begin(), shapes.end()) == shapes.end();
}

ExtremalityCertificate brute_force(const CbDivisorSpec& spec) {
  ExtremalityCertificate cert;
  cert.spec = spec;
  cert.method = CertMethod::BruteForce;
  cert.verdict = Verdict::NotCertified;
  const int g = spec.ctx.g;
  std::vector<std::vector<long>> rows;
  auto current_rank = [&](const std::vector<std::vector<long>>& rs) {
    RatMatrix m(rs.size(), g);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (int q = 0; q < g; ++q) m.at(i, q) = Rat(rs[i][q]);
    return rank(m);
  };
  for (const FCurveShape& s : zero_intersection_shapes(spec)) {
    if (rows.size() == static_cast<std::size_t>(g - 1)) break;
    SymCurveClass gamma = expand_fcurve(spec.ctx, s);
    rows.push_back(gamma.gammas);
    if (current_rank(rows) == rows.size()) {
      cert.bruteforce_rows.push_back(s);
    } else {
      rows.pop_back();
    }
  }
  cert.rank = rows.size();
  RatMatrix c(rows.size(), g);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int q = 0; q < g; ++q) c.at(i, q) = Rat(rows[i][q]);
  cert.c = c;
  cert.zeros_ok = true;  // rows are drawn from the zero-intersection set
  cert.distinct_ok = true;
  cert.nef_ok = f_cone_check(divisor_class(spec)).is_in_cone;
  if (cert.rank == static_cast<std::size_t>(g - 1) && cert.nef_ok)
    cert.verdict = Verdict::Extremal;
  return cert;
}

}  // namespace

ExtremalityCertificate certify(const CbDivisorSpec& spec, CertMethod method) {
  ExtremalityCertificate cert;
  cert.spec = spec;
  cert.method = method;
  cert.verdict = Verdict::NotCertified;
  if (spec.ctx.n < 6) {
    cert.note = "degenerate: n < 6 leaves no curves to exhibit (g - 1 < 1)";
    return cert;
  }
  if (spec.j == 1) {
    cert.note = "trivial divisor";
    return cert;
  }
  if (method == CertMethod::BruteForce) return brute_force(spec);

  if (spec.k() == 2 && spec.j <= 4) {
    ExtremalityCertificate bf = brute_force(spec);
    bf.note = "structured family undefined for k = 2, j <= 4; used brute force";
    return bf;
  }

  cert.family = build_family(spec);
  cert.zeros_ok = family_zero_check(*cert.family);
  cert.distinct_ok = all_distinct_shapes(*cert.family);
  cert.c = coefficient_matrix(*cert.family);
  cert.chat = drop_to_chat(*cert.family, cert.c);
  cert.rank = rank(cert.chat);
  cert.minor_det = det(nonunit_minor(*cert.family, cert.chat));
  cert.nef_ok = f_cone_check(divisor_class(spec)).is_in_cone;
  if (cert.rank == static_cast<std::size_t>(spec.ctx.g - 1) && cert.zeros_ok &&
      cert.distinct_ok && cert.nef_ok)
    cert.verdict = Verdict::Extremal;
  return cert;
}

DetFormulaReport det_formula_check(const CbDivisorSpec& spec) {
  const int j = spec.j, r = spec.r();
  if (r == 0)
    throw std::domain_error("det_formula_check: formula only applies when r != 0");
  CurveFamily fam = build_family(spec);
  RatMatrix chat = drop_to_chat(fam, coefficient_matrix(fam));
  Rat actual = det(nonunit_minor(fam, chat)).abs();
  Rat expected = j % 2 == 0 ? Rat(j, 2) : (r % 2 == 0 ? Rat(j) - Rat(r, 2) : Rat(j - r, 2));
  return DetFormulaReport{expected, actual, expected == actual};
}

namespace {

PairSequence k_ge_3_sequence(const CurveFamily& f) {
  PairSequence seq{false, {}, "", {}};
  const int k = f.k;
  std::vector<int> kkpos;
  for (const FamilyEntry& e : f.entries)
    if (!e.is_one_one()) kkpos.push_back(e.index);
  // replacement curves come in adjacent-index pairs, possibly with a
  // terminal singleton (the drop target when j is even)
  std::vector<std::pair<int, int>> groups;  // [first, last] indices
  for (std::size_t i = 0; i < kkpos.size();) {
    if (i + 1 < kkpos.size() && kkpos[i + 1] == kkpos[i] + 1) {
      groups.emplace_back(kkpos[i], kkpos[i] + 1);
      i += 2;
    } else {
      groups.emplace_back(kkpos[i], kkpos[i]);
      i += 1;
    }
  }
  if (groups.empty()) throw std::domain_error("pair_sequence: no replacement curves");
  for (std::size_t a = 0; a + 1 < groups.size(); ++a) {
    if (groups[a].second == groups[a].first)
      throw std::domain_error("pair_sequence: interior singleton replacement");
    int gap = groups[a + 1].first - groups[a].second - 1;
    if (gap != k - 1 && gap != k - 2)
      throw std::domain_error("pair_sequence: run of " + std::to_string(gap) +
                              " one-one curves between pairs (want k-1 or k-2)");
    seq.values.push_back(gap);
  }
  const auto& last = groups.back();
  seq.final_group = last.first == last.second ? "singleton" : "pair";
  if (f.dropped < last.first || f.dropped > last.second)
    throw std::domain_error("pair_sequence: dropped curve not in the terminal group");
  seq.betas.assign(seq.values.size() + 1, 0);  // no 321 groups in this regime
  return seq;
}

PairSequence k2_sequence(const CurveFamily& f) {
  PairSequence seq{true, {}, "", {}};
  const int g = f.ctx.g;
  std::vector<int> pair_of(g + 1, 0);
  for (const FamilyEntry& e : f.entries) pair_of[e.index] = e.pair;

  struct Tile {
    std::string label;
    int first, last;
  };
  std::vector<Tile> tiles;
  int i = 1;
  while (i <= g) {
    std::vector<int> want;
    if (pair_of[i] == 3)
      want = {3, 2, 1};
    else if (pair_of[i] == 2)
      want = {2, 2};
    else
      throw std::domain_error("pair_sequence: stray one-one curve at index " +
                              std::to_string(i));
    std::string got;
    int pos = i;
    for (int w : want) {
      if (pos > g || pair_of[pos] != w) break;
      got += static_cast<char>('0' + w);
      ++pos;
    }
    bool complete = got.size() == want.size();
    if (!complete && pos <= g)
      throw std::domain_error("pair_sequence: family breaks the 22/321 grammar at index " +
                              std::to_string(i));
    tiles.push_back({got, i, pos - 1});
    i = pos;
  }
  if (tiles.empty()) throw std::domain_error("pair_sequence: empty family");
  for (std::size_t a = 0; a + 1 < tiles.size(); ++a) {
    const std::string& l = tiles[a].label;
    if (l != "22" && l != "321")
      throw std::domain_error("pair_sequence: truncated interior group " + l);
    seq.values.push_back(l == "22" ? 22 : 321);
  }
  seq.final_group = tiles.back().label;
  if (f.dropped < tiles.back().first || f.dropped > tiles.back().last)
    throw std::domain_error("pair_sequence: dropped curve not in the terminal group");
  seq.betas.assign(seq.values.size() + 1, 0);
  for (std::size_t a = 0; a < seq.values.size(); ++a)
    seq.betas[a + 1] = seq.betas[a] + (seq.values[a] == 321 ? 1 : 0);
  return seq;
}

}  // namespace

PairSequence pair_sequence(const CurveFamily& f) {
  if (f.r == 0 || f.j == 2)
    throw std::domain_error("pair_sequence: defined for r > 0 families with replacements");
  return f.k >= 3 ? k_ge_3_sequence(f) : k2_sequence(f);
}

}  // namespace cbnef
