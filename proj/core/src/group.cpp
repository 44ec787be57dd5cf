// Copyright 2026 The covch Authors
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

#include "covch/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "covch/error.hpp"

namespace covch {

FiniteGroup::FiniteGroup(std::string name,
                         std::vector<std::vector<Element>> cayley,
                         std::vector<std::string> labels)
    : name_(std::move(name)),
      cayley_(std::move(cayley)),
      labels_(std::move(labels)) {
  const std::size_t n = cayley_.size();
  if (n == 0) throw DomainError("group must have at least one element");
  if (labels_.size() != n) throw DomainError("label count != group order");
  for (const auto& row : cayley_) {
    if (row.size() != n) throw DomainError("Cayley table is not square");
    for (Element x : row)
      if (x >= n) throw DomainError("Cayley table entry out of range");
  }

  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool is_identity = true;
    for (Element g = 0; g < n && is_identity; ++g)
      is_identity = cayley_[e][g] == g && cayley_[g][e] == g;
    if (is_identity) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError("Cayley table has no identity");

  inverses_.assign(n, n);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (cayley_[g][h] == identity_ && cayley_[h][g] == identity_) {
        inverses_[g] = h;
        break;
      }
    }
    if (inverses_[g] == n)
      throw DomainError("element " + labels_[g] + " has no inverse");
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (cayley_[cayley_[a][b]][c] != cayley_[a][cayley_[b][c]])
          throw DomainError("Cayley table is not associative");

  classes_ = conjugacy_classes(*this);
  class_of_.assign(n, 0);
  for (std::size_t k = 0; k < classes_.size(); ++k)
    for (Element g : classes_[k]) class_of_[g] = k;
}

Element FiniteGroup::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw DomainError("no element labelled '" + label + "' in " + name_);
  return static_cast<Element>(it - labels_.begin());
}

std::uint64_t FiniteGroup::cayley_checksum() const {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const auto& row : cayley_) {
    for (Element x : row) {
      const auto v = static_cast<std::uint32_t>(x);
      for (int byte = 0; byte < 4; ++byte) {
        hash ^= (v >> (8 * byte)) & 0xffU;
        hash *= 0x100000001b3ULL;
      }
    }
  }
  return hash;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Element>> classes;
  // Scanning in index order yields classes sorted by minimal element; the
  // identity is then first only when it has index 0, so it is pulled forward.
  for (Element g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::vector<Element> cls;
    for (Element a = 0; a < n; ++a) {
      Element h = group.multiply(group.multiply(a, g), group.inverse(a));
      if (!seen[h]) {
        seen[h] = true;
        cls.push_back(h);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  auto id_class = std::find_if(classes.begin(), classes.end(), [&](auto& c) {
    return c.front() == group.identity();
  });
  std::rotate(classes.begin(), id_class, id_class + 1);
  return classes;
}

namespace {

std::string cycle_label(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += '(';
    for (std::size_t x = start; !done[x]; x = static_cast<std::size_t>(perm[x])) {
      done[x] = true;
      out += std::to_string(x + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<int> permutation_of(int n, Element g) {
  if (n < 2 || n > 5) throw DomainError("symmetric group degree out of range");
  auto perms = all_permutations(n);
  if (g >= perms.size()) throw DomainError("element index out of range");
  return perms[g];
}

GroupPtr make_symmetric_group(int n) {
  if (n < 2 || n > 5)
    throw DomainError("symmetric group degree must be in [2, 5], got " +
                      std::to_string(n));
  const auto perms = all_permutations(n);
  std::map<std::vector<int>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  std::vector<std::vector<Element>> cayley(perms.size(),
                                           std::vector<Element>(perms.size()));
  std::vector<int> composed(static_cast<std::size_t>(n));
  for (Element a = 0; a < perms.size(); ++a) {
    for (Element b = 0; b < perms.size(); ++b) {
      for (int x = 0; x < n; ++x)
        composed[static_cast<std::size_t>(x)] =
            perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      cayley[a][b] = index.at(composed);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& p : perms) labels.push_back(cycle_label(p));
  return std::make_shared<const FiniteGroup>("S(" + std::to_string(n) + ")",
                                             std::move(cayley),
                                             std::move(labels));
}

GroupPtr make_quaternion_group() {
  // Element = (sign, unit) with unit 0 = e, 1..3 = Q_1..Q_3.
  struct Signed {
    int sign;
    int unit;
  };
  const Signed elements[8] = {{+1, 0}, {-1, 0}, {+1, 1}, {+1, 2},
                              {+1, 3}, {-1, 1}, {-1, 2}, {-1, 3}};
  auto index_of = [&](Signed s) -> Element {
    for (Element i = 0; i < 8; ++i)
      if (elements[i].sign == s.sign && elements[i].unit == s.unit) return i;
    throw InternalError("quaternion product out of range");
  };
  // Q_1 Q_2 = Q_3, Q_2 Q_3 = Q_1, Q_3 Q_1 = Q_2, Q_k^2 = -Q_e.
  auto unit_product = [](int a, int b) -> Signed {
    if (a == 0) return {+1, b};
    if (b == 0) return {+1, a};
    if (a == b) return {-1, 0};
    const int c = 6 - a - b;
    const bool cyclic = (b - a + 3) % 3 == 1;
    return {cyclic ? +1 : -1, c};
  };
  std::vector<std::vector<Element>> cayley(8, std::vector<Element>(8));
  for (Element a = 0; a < 8; ++a) {
    for (Element b = 0; b < 8; ++b) {
      Signed p = unit_product(elements[a].unit, elements[b].unit);
      p.sign *= elements[a].sign * elements[b].sign;
      cayley[a][b] = index_of(p);
    }
  }
  std::vector<std::string> labels = {"Q_e",  "-Q_e", "Q_1",  "Q_2",
                                     "Q_3",  "-Q_1", "-Q_2", "-Q_3"};
  return std::make_shared<const FiniteGroup>("Q", std::move(cayley),
                                             std::move(labels));
}

}  // namespace covch
