#include "operadlab/maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace operadlab {

BinaryTree loday_ronco(const Permutation& pi) {
  if (pi.empty()) return BinaryTree::leaf();
  const auto& v = pi.word().letters();
  const int n = static_cast<int>(v.size());
  const auto max_it = std::find(v.begin(), v.end(), n);
  Word left(std::vector<int>(v.begin(), max_it));
  Word right(std::vector<int>(max_it + 1, v.end()));
  return graft_root(loday_ronco(standardize(left)),
                    loday_ronco(standardize(right)));
}

BinaryTree phihat(const Permutation& pi) {
  if (pi.empty()) return BinaryTree::leaf();
  if (pi.size() == 1) return corolla();
  const auto& v = pi.word().letters();
  Word tail(std::vector<int>(v.begin() + 1, v.end()));
  return graft_at(phihat(standardize(tail)), v.front(), corolla());
}

BinaryTree varphi(const Permutation& pi) {
  if (pi.empty()) return BinaryTree::leaf();
  auto [below, above] = split_below_above(pi.word(), pi.word().letters().back());
  return graft_root(varphi(standardize(below)), varphi(standardize(above)));
}

BinaryTree tonks_map(const Permutation& pi) {
  if (pi.empty()) return BinaryTree::leaf();
  return g_map(pi.word());
}

bool tonks_independent(const Permutation& pi, int pos) {
  const auto& v = pi.word().letters();
  if (pos < 1 || static_cast<std::size_t>(pos) + 1 > v.size()) {
    throw position_error("adjacent pair position " + std::to_string(pos) +
                         " out of range 1.." +
                         std::to_string(v.empty() ? 0 : v.size() - 1));
  }
  const auto [lo, hi] =
      std::minmax(v[static_cast<std::size_t>(pos) - 1], v[static_cast<std::size_t>(pos)]);
  for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < v.size(); ++j) {
    if (lo < v[j] && v[j] < hi) return true;
  }
  return false;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::size_t TonksClassPartition::class_index(const Permutation& pi) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].members.begin(),
                           classes[c].members.end(), pi)) {
      return c;
    }
  }
  throw domain_error("permutation " + pi.str() + " is not in S_" +
                     std::to_string(n));
}

TonksClassPartition tonks_classes(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw resource_limit_error("tonks_classes(" + std::to_string(n) +
                               ") exceeds maximum " + std::to_string(max_n));
  }
  const std::vector<Permutation> perms = enumerate_permutations(n);
  std::map<Permutation, std::size_t> rank;
  for (std::size_t i = 0; i < perms.size(); ++i) rank.emplace(perms[i], i);

  UnionFind uf(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto& v = perms[i].word().letters();
    for (int pos = 1; pos + 1 <= static_cast<int>(v.size()); ++pos) {
      if (tonks_independent(perms[i], pos)) {
        std::vector<int> swapped = v;
        std::swap(swapped[pos - 1], swapped[pos]);
        uf.unite(i, rank.at(Permutation(std::move(swapped))));
      }
    }
  }

  std::map<std::size_t, std::vector<Permutation>> groups;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    groups[uf.find(i)].push_back(perms[i]);
  }

  TonksClassPartition partition;
  partition.n = n;
  for (auto& [root, members] : groups) {
    // Members arrive in lexicographic order; the first is the least.
    TonksClass cls{members.front(), std::move(members),
                   tonks_map(perms[root])};
    partition.classes.push_back(std::move(cls));
  }
  std::sort(partition.classes.begin(), partition.classes.end(),
            [](const TonksClass& a, const TonksClass& b) {
              return a.representative < b.representative;
            });
  return partition;
}

}  // namespace operadlab
