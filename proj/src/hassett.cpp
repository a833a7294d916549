#include "cbnef/hassett.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cbnef/intersection.hpp"

namespace cbnef {

WeightVector make_weight_vector(int n, std::vector<int> indices) {
  if (static_cast<int>(indices.size()) != n)
    throw std::invalid_argument("weight vector: expected " + std::to_string(n) +
                                " indices, got " + std::to_string(indices.size()));
  long sum = 0;
  for (int ji : indices) {
    if (ji < 1 || ji > n / 2)
      throw std::invalid_argument("weight vector: index " + std::to_string(ji) +
                                  " outside {1.." + std::to_string(n / 2) + "}");
    sum += ji;
  }
  if (sum < 2L * n)
    throw std::invalid_argument("weight vector: index sum " + std::to_string(sum) +
                                " < 2n = " + std::to_string(2 * n));
  return WeightVector{n, std::move(indices)};
}

WeightVector parse_weight_vector(int n, const std::string& text) {
  std::vector<int> idx;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) idx.push_back(std::stoi(item));
  return make_weight_vector(n, std::move(idx));
}

HassettWeights minimal_hassett(int n, const WeightVector& w) {
  if (w.n != n) throw std::invalid_argument("minimal_hassett: n mismatch");
  HassettWeights h{n, {}};
  h.a.reserve(w.indices.size());
  for (int ji : w.indices) h.a.emplace_back(static_cast<long>(ji), static_cast<long>(n));
  return h;
}

namespace {

struct BlockInfo {
  std::size_t size;
  Rat weight;
};

bool three_smallest_le_one(std::array<BlockInfo, 4> blocks, bool by_weight) {
  std::sort(blocks.begin(), blocks.end(), [&](const BlockInfo& x, const BlockInfo& y) {
    if (by_weight) return x.weight < y.weight;
    if (x.size != y.size) return x.size < y.size;
    return x.weight < y.weight;
  });
  Rat total = blocks[0].weight + blocks[1].weight + blocks[2].weight;
  return total <= Rat(1);
}

std::array<BlockInfo, 4> block_infos(const HassettWeights& a, const SetPartition4& p) {
  std::array<BlockInfo, 4> out;
  for (int b = 0; b < 4; ++b) {
    Rat w(0);
    for (int idx : p.blocks[b]) w += a.a[static_cast<std::size_t>(idx) - 1];
    out[b] = BlockInfo{p.blocks[b].size(), w};
  }
  return out;
}

}  // namespace

bool is_contracted(const HassettWeights& a, const SetPartition4& p) {
  return three_smallest_le_one(block_infos(a, p), /*by_weight=*/false);
}

bool is_contracted_by_weight(const HassettWeights& a, const SetPartition4& p) {
  return three_smallest_le_one(block_infos(a, p), /*by_weight=*/true);
}

namespace {

// splitmix64; stable across platforms, unlike <random> distributions
std::uint64_t next_u64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SetPartition4 random_partition(int n, std::uint64_t& state) {
  while (true) {
    SetPartition4 p;
    for (int v = 1; v <= n; ++v)
      p.blocks[next_u64(state) % 4].push_back(v);
    bool ok = true;
    for (const auto& b : p.blocks)
      if (b.empty()) ok = false;
    if (ok) return p;
  }
}

}  // namespace

CompatibilityReport contraction_compatibility_check(int n, const WeightVector& w, const SamplePlan& plan) {
  HassettWeights a = minimal_hassett(n, w);
  CompatibilityReport report;
  auto examine = [&](const SetPartition4& p) {
    ++report.checked;
    if (!is_contracted(a, p)) return;
    ++report.contracted;
    if (!general_weight_vanishing(n, w.indices, p)) report.violations.push_back(p);
  };
  if (plan.kind == SamplePlan::Kind::Exhaustive) {
    for_each_set_partition(make_context(n), examine, plan.cap);
  } else {
    std::uint64_t state = plan.seed;
    for (std::uint64_t s = 0; s < plan.count; ++s) examine(random_partition(n, state));
  }
  return report;
}

}  // namespace cbnef
