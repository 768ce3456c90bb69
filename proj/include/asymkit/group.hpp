// Copyright 2026 The asymkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Finite groups as validated multiplication tables.
//
// Element 0 is always the identity. Tables are immutable once built and
// carry eagerly computed inverses and conjugacy classes, so a GroupTable can
// be shared freely (usually through GroupPtr) between reps, states and
// channels.

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "asymkit/error.hpp"

namespace asymkit {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

class GroupTable {
 public:
  static constexpr int kMaxOrder = 720;
  static constexpr int kExhaustiveAssociativityOrder = 64;

  /// Validates every table invariant; throws invalid-group / size-limit.
  explicit GroupTable(std::vector<std::vector<int>> mul,
                      std::vector<std::string> labels = {})
      : mul_(std::move(mul)), labels_(std::move(labels)) {
    validate();
    compute_inverses();
    compute_classes();
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int g) const { return inv_[g]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }

  const std::vector<std::vector<int>>& table() const { return mul_; }
  const std::vector<int>& inverses() const { return inv_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::string label(int g) const {
    return labels_.empty() ? std::to_string(g) : labels_[g];
  }

  /// Conjugacy classes, ordered by smallest member; members sorted.
  const std::vector<std::vector<int>>& conjugacy_classes() const {
    return classes_;
  }
  int class_of(int g) const { return class_of_[g]; }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

 private:
  void validate() const {
    const int n = order();
    require(n >= 1, ErrorKind::InvalidGroup, "order >= 1");
    require(n <= kMaxOrder, ErrorKind::SizeLimit,
            "order <= " + std::to_string(kMaxOrder));
    require(labels_.empty() || static_cast<int>(labels_.size()) == n,
            ErrorKind::InvalidGroup, "one label per element");
    for (const auto& row : mul_) {
      require(static_cast<int>(row.size()) == n, ErrorKind::InvalidGroup,
              "mul is |G|x|G|");
      for (int v : row)
        require(v >= 0 && v < n, ErrorKind::InvalidGroup,
                "mul entries are element indices");
    }
    for (int g = 0; g < n; ++g)
      require(mul_[0][g] == g && mul_[g][0] == g, ErrorKind::InvalidGroup,
              "mul[0][g] = mul[g][0] = g for all g");
    std::vector<char> seen(n);
    for (int r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = 0; c < n; ++c) seen[mul_[r][c]] = 1;
      require(std::all_of(seen.begin(), seen.end(), [](char s) { return s; }),
              ErrorKind::InvalidGroup,
              "every row of mul is a permutation of 0..|G|-1");
    }
    for (int c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 0; r < n; ++r) seen[mul_[r][c]] = 1;
      require(std::all_of(seen.begin(), seen.end(), [](char s) { return s; }),
              ErrorKind::InvalidGroup,
              "every column of mul is a permutation of 0..|G|-1");
    }
    const std::string assoc = "mul[mul[a][b]][c] = mul[a][mul[b][c]]";
    if (n <= kExhaustiveAssociativityOrder) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            require(mul_[mul_[a][b]][c] == mul_[a][mul_[b][c]],
                    ErrorKind::InvalidGroup, assoc);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const long samples = 10L * n * n;
      for (long s = 0; s < samples; ++s) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        require(mul_[mul_[a][b]][c] == mul_[a][mul_[b][c]],
                ErrorKind::InvalidGroup, assoc);
      }
    }
  }

  void compute_inverses() {
    const int n = order();
    inv_.assign(n, -1);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (mul_[g][h] == 0) {
          inv_[g] = h;
          break;
        }
  }

  void compute_classes() {
    const int n = order();
    class_of_.assign(n, -1);
    for (int h = 0; h < n; ++h) {
      if (class_of_[h] >= 0) continue;
      std::vector<int> cls;
      const int id = static_cast<int>(classes_.size());
      for (int g = 0; g < n; ++g) {
        const int c = conj(g, h);
        if (class_of_[c] < 0) {
          class_of_[c] = id;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  }

  std::vector<std::vector<int>> mul_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// A validated subgroup: sorted element indices closed under mul and inv.
class SubgroupRef {
 public:
  SubgroupRef(const GroupTable& g, std::vector<int> elements)
      : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    std::vector<char> in(g.order());
    for (int e : elements_) {
      require(e >= 0 && e < g.order(), ErrorKind::InvalidSubgroup,
              "elements are element indices");
      in[e] = 1;
    }
    require(!elements_.empty() && elements_.front() == 0,
            ErrorKind::InvalidSubgroup, "subgroup contains 0");
    for (int a : elements_) {
      require(in[g.inv(a)], ErrorKind::InvalidSubgroup,
              "subgroup closed under inv");
      for (int b : elements_)
        require(in[g.mul(a, b)], ErrorKind::InvalidSubgroup,
                "subgroup closed under mul");
    }
  }

  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
  }

  friend bool operator==(const SubgroupRef&, const SubgroupRef&) = default;

 private:
  std::vector<int> elements_;
};

/// Subgroup generated by the given elements (closure under mul).
inline SubgroupRef generated_subgroup(const GroupTable& g,
                                      const std::vector<int>& gens) {
  std::vector<char> in(g.order());
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      const int p = g.mul(elems[i], s);
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  }
  return SubgroupRef(g, std::move(elems));
}

inline bool is_subset(const SubgroupRef& a, const SubgroupRef& b) {
  return std::includes(b.elements().begin(), b.elements().end(),
                       a.elements().begin(), a.elements().end());
}

// ---------------------------------------------------------------------------
// constructors

inline GroupTable make_cyclic(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "cyclic group needs n >= 1");
  require(n <= GroupTable::kMaxOrder, ErrorKind::SizeLimit,
          "order <= " + std::to_string(GroupTable::kMaxOrder));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return GroupTable(std::move(mul), std::move(labels));
}

/// D_n of order 2n. Element f*n + k is r^k s^f (rotation r, reflection s).
inline GroupTable make_dihedral(int n) {
  require(n >= 2, ErrorKind::InvalidParameter, "dihedral group needs n >= 2");
  require(2 * n <= GroupTable::kMaxOrder, ErrorKind::SizeLimit,
          "order <= " + std::to_string(GroupTable::kMaxOrder));
  const int order = 2 * n;
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    const int fa = x / n, ka = x % n;
    labels[x] = (fa ? "sr" : "r") + std::to_string(ka);
    for (int y = 0; y < order; ++y) {
      const int fb = y / n, kb = y % n;
      // r^a s^f r^b s^h = r^(a + (-1)^f b) s^(f+h)
      const int k = ((ka + (fa ? -kb : kb)) % n + n) % n;
      mul[x][y] = ((fa + fb) % 2) * n + k;
    }
  }
  return GroupTable(std::move(mul), std::move(labels));
}

/// S_n as permutations of 0..n-1 in lexicographic order (identity first);
/// mul[a][b] is the composition a after b.
inline GroupTable make_symmetric(int n) {
  require(n >= 1, ErrorKind::InvalidParameter, "symmetric group needs n >= 1");
  require(n <= 6, ErrorKind::SizeLimit, "symmetric group needs n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<std::string> labels(order);
  std::vector<int> comp(n);
  for (int a = 0; a < order; ++a) {
    std::string lab = "[";
    for (int i = 0; i < n; ++i) lab += std::to_string(perms[a][i]);
    labels[a] = lab + "]";
    for (int b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      mul[a][b] = index_of(comp);
    }
  }
  return GroupTable(std::move(mul), std::move(labels));
}

/// Element (i_a, i_b) has index i_a * |b| + i_b.
inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = a.order(), nb = b.order();
  require(static_cast<long>(na) * nb <= GroupTable::kMaxOrder,
          ErrorKind::SizeLimit,
          "order <= " + std::to_string(GroupTable::kMaxOrder));
  const int n = na * nb;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
    for (int y = 0; y < n; ++y)
      mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return GroupTable(std::move(mul), std::move(labels));
}

inline const std::vector<std::vector<int>>& conjugacy_classes(
    const GroupTable& g) {
  return g.conjugacy_classes();
}

inline bool is_normal(const GroupTable& g, const SubgroupRef& k) {
  for (int x = 0; x < g.order(); ++x)
    for (int h : k.elements())
      if (!k.contains(g.conj(x, h))) return false;
  return true;
}

/// Validates the element set as a subgroup first (invalid-subgroup).
inline bool is_normal(const GroupTable& g, const std::vector<int>& elements) {
  return is_normal(g, SubgroupRef(g, elements));
}

inline GroupPtr share(GroupTable g) {
  return std::make_shared<const GroupTable>(std::move(g));
}

}  // namespace asymkit
