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

#include "covch/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch {
namespace {

double snap(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= equality_tolerance() ? r : x;
}

Complex snap(Complex z) { return {snap(z.real()), snap(z.imag())}; }

std::string strip_label(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '(' && c != ')' && c != ' ') out += c;
  return out;
}

}  // namespace

Irrep::Irrep(GroupPtr group, std::string label, std::vector<Matrix> matrices)
    : group_(std::move(group)),
      label_(std::move(label)),
      matrices_(std::move(matrices)) {
  if (!group_) throw DomainError("irrep needs a group");
  if (matrices_.size() != group_->order())
    throw DomainError("irrep " + label_ + ": need one matrix per element");
  const auto d = matrices_.front().rows();
  if (d == 0) throw DomainError("irrep " + label_ + ": zero dimension");
  for (const auto& m : matrices_)
    if (m.rows() != d || m.cols() != d)
      throw DomainError("irrep " + label_ + ": inconsistent matrix shapes");
  characters_.reserve(matrices_.size());
  for (const auto& m : matrices_) characters_.push_back(snap(m.trace()));
}

IrrepCheck check_irrep(const Irrep& irrep) {
  const FiniteGroup& g = irrep.group();
  const auto n = static_cast<Eigen::Index>(irrep.dim());
  const Matrix id = Matrix::Identity(n, n);
  IrrepCheck out;
  double norm = 0.0;
  for (Element a = 0; a < g.order(); ++a) {
    out.unitarity_residual =
        std::max(out.unitarity_residual,
                 max_abs(irrep(a) * irrep(a).adjoint() - id));
    for (Element b = 0; b < g.order(); ++b)
      out.homomorphism_residual =
          std::max(out.homomorphism_residual,
                   max_abs(irrep(a) * irrep(b) - irrep(g.multiply(a, b))));
    norm += std::norm(irrep.character(a));
  }
  out.character_norm = norm / static_cast<double>(g.order());
  const double tol = equality_tolerance();
  out.homomorphism = out.homomorphism_residual <= tol;
  out.unitary = out.unitarity_residual <= tol;
  out.irreducible = std::abs(out.character_norm - 1.0) <= tol;
  return out;
}

Irrep irrep_from_generators(
    GroupPtr group, std::string label,
    const std::vector<std::pair<Element, Matrix>>& gens) {
  if (gens.empty()) throw DomainError("need at least one generator");
  const std::size_t order = group->order();
  const auto d = gens.front().second.rows();
  std::vector<Matrix> images(order);
  std::vector<bool> known(order, false);
  images[group->identity()] = Matrix::Identity(d, d);
  known[group->identity()] = true;
  std::deque<Element> queue{group->identity()};
  while (!queue.empty()) {
    const Element g = queue.front();
    queue.pop_front();
    for (const auto& [s, m] : gens) {
      const Element h = group->multiply(s, g);
      if (!known[h]) {
        images[h] = m * images[g];
        known[h] = true;
        queue.push_back(h);
      }
    }
  }
  if (std::find(known.begin(), known.end(), false) != known.end())
    throw DomainError("generators of " + label + " do not generate the group");
  return Irrep(std::move(group), std::move(label), std::move(images));
}

Partition parse_partition(std::string_view text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' ? ' ' : c);
  for (char& c : cleaned)
    if (c == '(' || c == ')') c = ' ';
  std::istringstream in(cleaned);
  Partition p;
  int part = 0;
  while (in >> part) p.push_back(part);
  if (!in.eof() || p.empty())
    throw DomainError("cannot parse partition '" + std::string(text) + "'");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1]))
      throw DomainError("'" + std::string(text) +
                        "' is not a non-increasing positive partition");
  return p;
}

std::string partition_label(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

namespace {

// Standard Young tableau stored as (row, col) of each entry 1..n (index 0..n-1).
struct Tableau {
  std::vector<int> row;
  std::vector<int> col;
};

void fill_tableaux(const Partition& shape, std::vector<int>& lengths, int next,
                   int n, Tableau& current, std::vector<Tableau>& out) {
  if (next == n) {
    out.push_back(current);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (lengths[r] < shape[r] && (r == 0 || lengths[r - 1] > lengths[r])) {
      current.row[static_cast<std::size_t>(next)] = static_cast<int>(r);
      current.col[static_cast<std::size_t>(next)] = lengths[r];
      ++lengths[r];
      fill_tableaux(shape, lengths, next + 1, n, current, out);
      --lengths[r];
    }
  }
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  int n = 0;
  for (int part : shape) n += part;
  std::vector<Tableau> out;
  std::vector<int> lengths(shape.size(), 0);
  Tableau current{std::vector<int>(static_cast<std::size_t>(n)),
                  std::vector<int>(static_cast<std::size_t>(n))};
  fill_tableaux(shape, lengths, 0, n, current, out);
  // Row word read from the largest entry down, sorted in decreasing order.
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return std::lexicographical_compare(b.row.rbegin(), b.row.rend(),
                                        a.row.rbegin(), a.row.rend());
  });
  return out;
}

}  // namespace

Irrep young_orthogonal_irrep(GroupPtr sn, const Partition& shape) {
  int n = 0;
  for (int part : shape) n += part;
  if (sn->order() < 2 || std::tgamma(n + 1.0) != static_cast<double>(sn->order()))
    throw DomainError(partition_label(shape) + " is not a partition of the " +
                      "degree of " + sn->name());
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (shape[i] <= 0 || (i > 0 && shape[i] > shape[i - 1]))
      throw DomainError(partition_label(shape) + " is not a partition");

  const auto tableaux = standard_tableaux(shape);
  const auto d = static_cast<Eigen::Index>(tableaux.size());
  auto find_tableau = [&](const Tableau& t) -> Eigen::Index {
    for (std::size_t i = 0; i < tableaux.size(); ++i)
      if (tableaux[i].row == t.row && tableaux[i].col == t.col)
        return static_cast<Eigen::Index>(i);
    throw InternalError("swapped tableau not standard");
  };

  std::vector<std::pair<Element, Matrix>> gens;
  for (int k = 0; k + 1 < n; ++k) {
    Matrix m = Matrix::Zero(d, d);
    const auto a = static_cast<std::size_t>(k);
    for (Eigen::Index t = 0; t < d; ++t) {
      const Tableau& tab = tableaux[static_cast<std::size_t>(t)];
      if (tab.row[a] == tab.row[a + 1]) {
        m(t, t) = 1.0;
      } else if (tab.col[a] == tab.col[a + 1]) {
        m(t, t) = -1.0;
      } else {
        const double axial = (tab.col[a + 1] - tab.row[a + 1]) -
                             (tab.col[a] - tab.row[a]);
        Tableau swapped = tab;
        std::swap(swapped.row[a], swapped.row[a + 1]);
        std::swap(swapped.col[a], swapped.col[a + 1]);
        m(t, t) = 1.0 / axial;
        m(t, find_tableau(swapped)) = std::sqrt(1.0 - 1.0 / (axial * axial));
      }
    }
    const std::string label =
        "(" + std::to_string(k + 1) + std::to_string(k + 2) + ")";
    gens.emplace_back(sn->find(label), std::move(m));
  }

  std::string label = partition_label(shape);
  if (shape.size() == 1) label = "id";
  if (static_cast<int>(shape.size()) == n && n > 1) label = "sgn";
  if (gens.empty()) throw DomainError("S(1) is not supported");
  return irrep_from_generators(std::move(sn), std::move(label), gens);
}

Irrep s3_epsilon_irrep(GroupPtr s3) {
  if (s3->order() != 6 || s3->name() != "S(3)")
    throw DomainError("epsilon representation requires S(3)");
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  Matrix t12(2, 2), t23(2, 2);
  t12 << 0.0, 1.0, 1.0, 0.0;
  t23 << 0.0, w * w, w, 0.0;
  const Element g12 = s3->find("(12)");
  const Element g23 = s3->find("(23)");
  return irrep_from_generators(std::move(s3), "(2,1)",
                               {{g12, t12}, {g23, t23}});
}

Irrep s4_young_yamanouchi_irrep(GroupPtr s4, const Partition& shape) {
  if (s4->order() != 24) throw DomainError("S(4) required");
  int n = 0;
  for (int part : shape) n += part;
  if (n != 4)
    throw DomainError(partition_label(shape) + " is not a partition of 4");
  return young_orthogonal_irrep(std::move(s4), shape);
}

Irrep quaternion_irrep(GroupPtr q, std::string_view label) {
  if (q->order() != 8 || q->name() != "Q")
    throw DomainError("quaternion irreps require the quaternion group");
  // Unit part (0 = e, 1..3 = Q_k) and sign of each element, in index order.
  static constexpr int kUnit[8] = {0, 0, 1, 2, 3, 1, 2, 3};
  static constexpr int kSign[8] = {+1, -1, +1, +1, +1, -1, -1, -1};
  std::vector<Matrix> mats;
  mats.reserve(8);
  if (label == "t4") {
    const Complex i(0.0, 1.0);
    Matrix units[4] = {Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    units[0] << 1.0, 0.0, 0.0, 1.0;
    units[1] << i, 0.0, 0.0, -i;
    units[2] << 0.0, 1.0, -1.0, 0.0;
    units[3] << 0.0, i, i, 0.0;
    for (int g = 0; g < 8; ++g)
      mats.push_back(static_cast<double>(kSign[g]) * units[kUnit[g]]);
  } else {
    // Kernel of t_k contains Q_k: t1 is -1 on Q_1 and Q_3, and so on.
    int flipped_a = 0, flipped_b = 0;
    if (label == "id") {
    } else if (label == "t1") {
      flipped_a = 1, flipped_b = 3;
    } else if (label == "t2") {
      flipped_a = 2, flipped_b = 3;
    } else if (label == "t3") {
      flipped_a = 1, flipped_b = 2;
    } else {
      throw DomainError("unknown quaternion irrep '" + std::string(label) +
                        "'");
    }
    for (int g = 0; g < 8; ++g) {
      const bool flip = kUnit[g] != 0 &&
                        (kUnit[g] == flipped_a || kUnit[g] == flipped_b);
      mats.push_back(Matrix::Constant(1, 1, flip ? -1.0 : 1.0));
    }
  }
  return Irrep(std::move(q), std::string(label), std::move(mats));
}

IrrepCatalog::IrrepCatalog(
    GroupPtr group, std::vector<Irrep> irreps,
    std::vector<std::pair<std::string, std::string>> aliases)
    : group_(std::move(group)),
      irreps_(std::move(irreps)),
      aliases_(std::move(aliases)) {
  if (irreps_.empty()) throw DomainError("empty irrep catalog");
  for (const auto& irrep : irreps_)
    if (irrep.group_ptr() != group_)
      throw DomainError("irrep " + irrep.label() + " belongs to another group");
  if (irreps_.front().dim() != 1)
    throw DomainError("identity irrep must be registered first");
}

std::size_t IrrepCatalog::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i].label() == label) return i;
  const std::string stripped = strip_label(label);
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (strip_label(irreps_[i].label()) == stripped) return i;
  for (const auto& [alias, target] : aliases_)
    if (alias == label || strip_label(alias) == stripped)
      return index_of(target);
  throw DomainError("unknown irrep '" + std::string(label) + "' for " +
                    group_->name());
}

CharacterTable IrrepCatalog::character_table() const {
  CharacterTable table{group_, {}, {}};
  for (const auto& irrep : irreps_) {
    table.labels.push_back(irrep.label());
    std::vector<Complex> row;
    for (const auto& cls : group_->classes())
      row.push_back(irrep.character(cls.front()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

void partitions_of(int remaining, int max_part, Partition& current,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_of(remaining - part, part, current, out);
    current.pop_back();
  }
}

IrrepCatalog symmetric_catalog(int n) {
  GroupPtr sn = make_symmetric_group(n);
  std::vector<Partition> shapes;
  Partition scratch;
  partitions_of(n, n, scratch, shapes);
  std::vector<std::pair<std::string, std::string>> aliases = {
      {partition_label(shapes.front()), "id"},
      {partition_label(shapes.back()), "sgn"}};

  std::vector<Irrep> irreps;
  if (n == 3) {
    irreps.push_back(young_orthogonal_irrep(sn, {3}));
    irreps.push_back(young_orthogonal_irrep(sn, {1, 1, 1}));
    irreps.push_back(s3_epsilon_irrep(sn));
    aliases.emplace_back("lambda", "(2,1)");
    aliases.emplace_back("epsilon", "(2,1)");
  } else {
    for (const auto& shape : shapes)
      irreps.push_back(young_orthogonal_irrep(sn, shape));
    if (n == 4) {
      aliases.emplace_back("lambda1", "(3,1)");
      aliases.emplace_back("lambda2", "(2,2)");
      aliases.emplace_back("lambda3", "(2,1,1)");
    }
  }
  return IrrepCatalog(std::move(sn), std::move(irreps), std::move(aliases));
}

}  // namespace

IrrepCatalog builtin_catalog(std::string_view group_id) {
  if (group_id == "s2") return symmetric_catalog(2);
  if (group_id == "s3") return symmetric_catalog(3);
  if (group_id == "s4") return symmetric_catalog(4);
  if (group_id == "s5") return symmetric_catalog(5);
  if (group_id == "q8") {
    GroupPtr q = make_quaternion_group();
    std::vector<Irrep> irreps;
    for (const char* label : {"id", "t1", "t2", "t3", "t4"})
      irreps.push_back(quaternion_irrep(q, label));
    return IrrepCatalog(std::move(q), std::move(irreps));
  }
  throw DomainError("unknown group '" + std::string(group_id) +
                    "' (expected s2, s3, s4, s5 or q8)");
}

std::vector<std::string> builtin_group_ids() {
  return {"s2", "s3", "s4", "s5", "q8"};
}

std::size_t ThetaSet::position(std::size_t catalog_idx) const {
  auto it = std::find(catalog_index.begin(), catalog_index.end(), catalog_idx);
  return static_cast<std::size_t>(it - catalog_index.begin());
}

namespace {

int round_to_integer(double value, const std::string& what) {
  const double r = std::round(value);
  // Sums run over at most 120 terms of modulus <= 36^2.
  if (std::abs(value - r) > equality_tolerance())
    throw InternalError(what + " = " + std::to_string(value) +
                        " is not an integer");
  return static_cast<int>(r);
}

}  // namespace

int multiplicity(const Irrep& alpha, const Irrep& u) {
  if (alpha.group_ptr() != u.group_ptr())
    throw DomainError("multiplicity: irreps of different groups");
  const FiniteGroup& g = u.group();
  Complex sum = 0.0;
  for (Element x = 0; x < g.order(); ++x)
    sum += alpha.character(g.inverse(x)) * std::norm(u.character(x));
  sum /= static_cast<double>(g.order());
  if (std::abs(sum.imag()) > equality_tolerance())
    throw InternalError("multiplicity of " + alpha.label() + " is complex");
  return round_to_integer(sum.real(), "multiplicity of " + alpha.label());
}

std::vector<int> adjoint_multiplicities(const IrrepCatalog& catalog,
                                        const Irrep& u) {
  std::vector<int> out;
  out.reserve(catalog.size());
  for (const auto& alpha : catalog) out.push_back(multiplicity(alpha, u));
  return out;
}

ThetaSet decompose_adjoint(const IrrepCatalog& catalog, const Irrep& u) {
  if (u.group_ptr() != catalog.group_ptr())
    throw DomainError("irrep does not belong to the catalog's group");
  const auto mults = adjoint_multiplicities(catalog, u);
  ThetaSet theta;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (mults[i] > 1)
      throw NotSimplyReducible(catalog[i].label(), mults[i]);
    if (mults[i] == 1) {
      theta.members.push_back(catalog[i].label());
      theta.catalog_index.push_back(i);
      theta.dims.push_back(catalog[i].dim());
      theta.multiplicities.push_back(1);
    }
  }
  if (theta.catalog_index.empty() || theta.catalog_index.front() != 0)
    throw InternalError("identity irrep missing from U (x) U^c");
  if (commutant_dimension(u) != static_cast<int>(theta.size()))
    throw InternalError("commutant dimension disagrees with |Theta|");
  return theta;
}

int commutant_dimension(const Irrep& u) {
  const FiniteGroup& g = u.group();
  double sum = 0.0;
  for (Element x = 0; x < g.order(); ++x) {
    const double m = std::norm(u.character(x));
    sum += m * m;
  }
  return round_to_integer(sum / static_cast<double>(g.order()),
                          "commutant dimension of " + u.label());
}

}  // namespace covch
