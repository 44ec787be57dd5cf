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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace covch {

/// Dense index of a group element, valid as a row/column of the Cayley table.
using Element = std::size_t;

/// Finite group given by its multiplication table.
///
/// Elements are addressed by dense indices; labels are for display only. The
/// object is immutable once constructed and safe to share between threads.
class FiniteGroup {
 public:
  /// Validates the table (closure, identity, inverses, associativity) and
  /// computes the conjugacy classes. Throws DomainError on a malformed table.
  FiniteGroup(std::string name, std::vector<std::vector<Element>> cayley,
              std::vector<std::string> labels);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return cayley_.size(); }
  Element identity() const noexcept { return identity_; }

  Element multiply(Element a, Element b) const { return cayley_[a][b]; }
  Element inverse(Element g) const { return inverses_[g]; }
  const std::vector<std::vector<Element>>& cayley() const noexcept {
    return cayley_;
  }

  const std::string& label(Element g) const { return labels_[g]; }
  /// Index of the element with this label; throws DomainError if absent.
  Element find(const std::string& label) const;

  /// Conjugacy classes ordered by their minimal element; identity class first.
  const std::vector<std::vector<Element>>& classes() const noexcept {
    return classes_;
  }
  std::size_t class_of(Element g) const { return class_of_[g]; }

  /// FNV-1a (64 bit) over the row-major table, entries as little-endian u32.
  std::uint64_t cayley_checksum() const;

 private:
  std::string name_;
  std::vector<std::vector<Element>> cayley_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<std::vector<Element>> classes_;
  std::vector<std::size_t> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Exact conjugation-orbit partition of the group's elements.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& group);

/// S(n) for 2 <= n <= 5. Elements are permutations in lexicographic one-line
/// order (identity at index 0), composed as (s*t)(x) = s(t(x)). Labels are
/// cycle notation, e.g. "(12)(34)", with "e" for the identity.
GroupPtr make_symmetric_group(int n);

/// One-line images (0-based) of the permutation with index g in S(n).
std::vector<int> permutation_of(int n, Element g);

/// Quaternion group Q with elements ordered
/// Q_e, -Q_e, Q_1, Q_2, Q_3, -Q_1, -Q_2, -Q_3.
GroupPtr make_quaternion_group();

}  // namespace covch
