#include "cbnef/moduli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cbnef {

ModuliContext make_context(int n) {
  if (n < 4)
    throw std::invalid_argument("make_context: need n >= 4, got n=" + std::to_string(n));
  return ModuliContext{n, n / 2 - 1};
}

int fold(int x, const ModuliContext& ctx) {
  if (x < 0 || x > ctx.n)
    throw std::invalid_argument("fold: index " + std::to_string(x) + " out of [0, n]");
  return x <= ctx.g + 1 ? x : ctx.n - x;
}

std::string FCurveShape::str() const {
  std::ostringstream out;
  out << parts[0] << ',' << parts[1] << ',' << parts[2] << ',' << parts[3];
  return out.str();
}

FCurveShape make_shape(int a, int b, int c, int d) {
  FCurveShape s{{a, b, c, d}};
  std::sort(s.parts.begin(), s.parts.end());
  if (s.parts[0] < 1)
    throw std::invalid_argument("make_shape: parts must be positive");
  return s;
}

FCurveShape parse_shape(const std::string& text) {
  std::array<int, 4> v{};
  std::istringstream in(text);
  for (int i = 0; i < 4; ++i) {
    char sep = ',';
    if (!(in >> v[i]) || (i < 3 && !(in >> sep && sep == ',')))
      throw std::invalid_argument("parse_shape: want \"a,b,c,d\", got '" + text + "'");
  }
  char trailing;
  if (in >> trailing)
    throw std::invalid_argument("parse_shape: trailing input in '" + text + "'");
  return make_shape(v[0], v[1], v[2], v[3]);
}

std::vector<FCurveShape> enumerate_shapes(const ModuliContext& ctx) {
  const int n = ctx.n;
  std::vector<FCurveShape> out;
  for (int a = 1; a <= n / 4; ++a)
    for (int b = a; b <= (n - a) / 3; ++b)
      for (int c = b; c <= (n - a - b) / 2; ++c) {
        int d = n - a - b - c;
        if (d >= c) out.push_back(FCurveShape{{a, b, c, d}});
      }
  return out;
}

FCurveShape SetPartition4::shape() const {
  return make_shape(static_cast<int>(blocks[0].size()), static_cast<int>(blocks[1].size()),
                    static_cast<int>(blocks[2].size()), static_cast<int>(blocks[3].size()));
}

std::string SetPartition4::str() const {
  std::ostringstream out;
  for (int b = 0; b < 4; ++b) {
    if (b) out << '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out << ',';
      out << blocks[b][i];
    }
  }
  return out.str();
}

SetPartition4 parse_set_partition(const std::string& text, int n) {
  SetPartition4 p;
  std::vector<bool> seen(n + 1, false);
  std::istringstream in(text);
  std::string blocktext;
  int b = 0;
  while (std::getline(in, blocktext, '|')) {
    if (b == 4) throw std::invalid_argument("parse_set_partition: more than 4 blocks");
    std::istringstream bin(blocktext);
    std::string item;
    while (std::getline(bin, item, ',')) {
      int v = std::stoi(item);
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("parse_set_partition: bad or repeated index " + item);
      seen[v] = true;
      p.blocks[b].push_back(v);
    }
    if (p.blocks[b].empty())
      throw std::invalid_argument("parse_set_partition: empty block");
    std::sort(p.blocks[b].begin(), p.blocks[b].end());
    ++b;
  }
  if (b != 4) throw std::invalid_argument("parse_set_partition: need exactly 4 blocks");
  for (int v = 1; v <= n; ++v)
    if (!seen[v])
      throw std::invalid_argument("parse_set_partition: index " + std::to_string(v) +
                                  " missing from blocks");
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
  return p;
}

namespace {

// Restricted-growth strings: element i gets a label <= 1 + max(previous
// labels), which enumerates each unordered partition exactly once.
void visit_partitions(int n, int pos, int maxlabel, std::vector<int>& label,
                      const std::function<void(const SetPartition4&)>& visit) {
  if (pos == n) {
    if (maxlabel != 4) return;
    SetPartition4 p;
    for (int i = 0; i < n; ++i) p.blocks[label[i]].push_back(i + 1);
    visit(p);
    return;
  }
  int remaining = n - pos;
  if (maxlabel + remaining < 4) return;  // cannot still fill 4 blocks
  int top = std::min(maxlabel + 1, 4);
  for (int l = 0; l < top; ++l) {
    label[pos] = l;
    visit_partitions(n, pos + 1, std::max(maxlabel, l + 1), label, visit);
  }
}

}  // namespace

void for_each_set_partition(const ModuliContext& ctx,
                            const std::function<void(const SetPartition4&)>& visit,
                            int cap) {
  if (ctx.n > cap)
    throw std::invalid_argument(
        "for_each_set_partition: n=" + std::to_string(ctx.n) + " exceeds cap " +
        std::to_string(cap) + " (raise the cap to override)");
  std::vector<int> label(ctx.n, 0);
  visit_partitions(ctx.n, 0, 0, label, visit);
}

std::uint64_t count_set_partitions(int n) {
  if (n < 4) return 0;
  // S(n,k) for k = 1..4 by the standard recurrence.
  std::array<std::uint64_t, 5> s{0, 1, 0, 0, 0};  // row for n=1
  for (int m = 2; m <= n; ++m) {
    std::array<std::uint64_t, 5> next{};
    for (int k = 1; k <= 4; ++k) next[k] = s[k - 1] + static_cast<std::uint64_t>(k) * s[k];
    s = next;
  }
  return s[4];
}

}  // namespace cbnef
