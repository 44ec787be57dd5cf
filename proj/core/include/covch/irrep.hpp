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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covch/group.hpp"
#include "covch/linalg.hpp"

namespace covch {

/// Unitary matrix representation g -> phi(g) of a finite group.
class Irrep {
 public:
  /// `matrices[g]` is the image of element g. Shapes are validated; the
  /// representation properties are not (see check_irrep).
  Irrep(GroupPtr group, std::string label, std::vector<Matrix> matrices);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(matrices_.front().rows());
  }

  const Matrix& matrix(Element g) const { return matrices_[g]; }
  const Matrix& operator()(Element g) const { return matrices_[g]; }

  /// Trace of phi(g), each part snapped to the nearest integer when within
  /// the equality tolerance.
  Complex character(Element g) const { return characters_[g]; }

 private:
  GroupPtr group_;
  std::string label_;
  std::vector<Matrix> matrices_;
  std::vector<Complex> characters_;
};

/// Residuals of the defining properties, each a max over group elements.
struct IrrepCheck {
  double homomorphism_residual = 0.0;  // max |phi(g)phi(h) - phi(gh)|
  double unitarity_residual = 0.0;     // max |phi(g)phi(g)^+ - 1|
  double character_norm = 0.0;         // (1/|G|) sum |chi(g)|^2
  bool homomorphism = false;
  bool unitary = false;
  bool irreducible = false;
};

IrrepCheck check_irrep(const Irrep& irrep);

/// Extends generator images to the whole group by breadth-first search over
/// left multiplication. Throws DomainError if the generators do not reach
/// every element.
Irrep irrep_from_generators(GroupPtr group, std::string label,
                            const std::vector<std::pair<Element, Matrix>>& gens);

using Partition = std::vector<int>;

/// Parses "3,1", "(3,1)" or "3 1" into a partition.
Partition parse_partition(std::string_view text);
std::string partition_label(const Partition& p);

/// Young's orthogonal (Young-Yamanouchi) form of the S(n) irrep for `shape`.
/// Standard tableaux are ordered by the row sequence of n, n-1, ..., 1,
/// largest first, which reproduces the usual last-letter ordering.
Irrep young_orthogonal_irrep(GroupPtr sn, const Partition& shape);

/// Two-dimensional irrep of S(3) generated by phi(12) = [[0,1],[1,0]] and
/// phi(23) = [[0,w^2],[w,0]], w = exp(2 pi i / 3).
Irrep s3_epsilon_irrep(GroupPtr s3);

/// Young-Yamanouchi irrep of S(4); partition must be a partition of 4.
Irrep s4_young_yamanouchi_irrep(GroupPtr s4, const Partition& shape);

/// Irreps of the quaternion group: "id", "t1", "t2", "t3" (1-dim) and the
/// defining 2-dim "t4".
Irrep quaternion_irrep(GroupPtr q, std::string_view label);

/// Character values for each registered irrep, one per conjugacy class.
struct CharacterTable {
  GroupPtr group;
  std::vector<std::string> labels;
  std::vector<std::vector<Complex>> rows;

  Complex value(std::size_t irrep, Element g) const {
    return rows[irrep][group->class_of(g)];
  }
};

/// Complete set of inequivalent irreps of a group in a fixed registry order
/// with the identity irrep first.
class IrrepCatalog {
 public:
  IrrepCatalog(GroupPtr group, std::vector<Irrep> irreps,
               std::vector<std::pair<std::string, std::string>> aliases = {});

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return irreps_.size(); }
  const Irrep& operator[](std::size_t i) const { return irreps_[i]; }
  const std::vector<Irrep>& irreps() const noexcept { return irreps_; }
  auto begin() const { return irreps_.begin(); }
  auto end() const { return irreps_.end(); }

  /// Registry index for a label or alias ("(2,1)", "2,1", "lambda", ...).
  /// Throws DomainError if unknown.
  std::size_t index_of(std::string_view label) const;
  const Irrep& at(std::string_view label) const {
    return irreps_[index_of(label)];
  }

  CharacterTable character_table() const;

 private:
  GroupPtr group_;
  std::vector<Irrep> irreps_;
  std::vector<std::pair<std::string, std::string>> aliases_;
};

/// Built-in catalogs: "s2", "s3", "s4", "s5", "q8". Orders: S(3) id, sgn,
/// (2,1); S(n>=4) partitions in decreasing lexicographic order with "id" and
/// "sgn" for (n) and (1^n); Q id, t1, t2, t3, t4.
IrrepCatalog builtin_catalog(std::string_view group_id);
std::vector<std::string> builtin_group_ids();

/// Irreps occurring in U (x) U^c, identity first, then registry order.
struct ThetaSet {
  std::vector<std::string> members;
  std::vector<std::size_t> catalog_index;
  std::vector<std::size_t> dims;
  std::vector<int> multiplicities;

  std::size_t size() const noexcept { return members.size(); }
  /// Position of a catalog index inside Theta, or size() if absent.
  std::size_t position(std::size_t catalog_idx) const;
};

/// m_alpha = (1/|G|) sum_g chi^alpha(g^-1) |chi^U(g)|^2. Throws InternalError
/// if the sum is not an integer within tolerance.
int multiplicity(const Irrep& alpha, const Irrep& u);

/// Multiplicity of every catalog irrep in U (x) U^c, in registry order.
std::vector<int> adjoint_multiplicities(const IrrepCatalog& catalog,
                                        const Irrep& u);

/// Throws NotSimplyReducible if any multiplicity exceeds one.
ThetaSet decompose_adjoint(const IrrepCatalog& catalog, const Irrep& u);

/// (1/|G|) sum_g |chi^U(g)|^4.
int commutant_dimension(const Irrep& u);

}  // namespace covch
