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

#include "covch/commutant.hpp"

#include <cmath>

#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch {

Vector vectorize(const Matrix& x) {
  if (x.rows() != x.cols()) throw DomainError("vectorize: matrix not square");
  const Eigen::Index n = x.rows();
  Vector v(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = x(i, j);
  return v;
}

Matrix devectorize(const Vector& v) {
  const auto n = static_cast<Eigen::Index>(
      std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size() || n == 0)
    throw DomainError("devectorize: length " + std::to_string(v.size()) +
                      " is not a nonzero square");
  Matrix x(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) x(i, j) = v(i * n + j);
  return x;
}

Matrix adjoint_matrix(const Irrep& u, Element g) {
  return kron(u(g), u(g).conjugate());
}

namespace {

template <typename Weight>
Matrix group_average(const Irrep& u, const Irrep& alpha, Weight weight) {
  if (alpha.group_ptr() != u.group_ptr())
    throw DomainError("irreps belong to different groups");
  const FiniteGroup& g = u.group();
  const auto n2 = static_cast<Eigen::Index>(u.dim() * u.dim());
  Matrix out = Matrix::Zero(n2, n2);
  for (Element x = 0; x < g.order(); ++x) {
    const Complex w = weight(g.inverse(x));
    if (w != Complex(0.0)) out += w * adjoint_matrix(u, x);
  }
  return out * (static_cast<double>(alpha.dim()) /
                static_cast<double>(g.order()));
}

}  // namespace

Matrix projector_coarse(const Irrep& u, const Irrep& alpha) {
  return group_average(u, alpha,
                       [&](Element inv) { return alpha.character(inv); });
}

Matrix projector_fine(const Irrep& u, const Irrep& alpha, std::size_t i) {
  if (i >= alpha.dim()) throw DomainError("projector_fine: index out of range");
  const auto k = static_cast<Eigen::Index>(i);
  return group_average(u, alpha,
                       [&](Element inv) { return alpha(inv)(k, k); });
}

Matrix eigenmatrix_raw(const Irrep& u, const Irrep& alpha, std::size_t i,
                       std::size_t s, std::size_t t) {
  if (i >= alpha.dim() || s >= u.dim() || t >= u.dim())
    throw DomainError("eigenmatrix: index out of range");
  const FiniteGroup& g = u.group();
  const auto n = static_cast<Eigen::Index>(u.dim());
  const auto k = static_cast<Eigen::Index>(i);
  Matrix out = Matrix::Zero(n, n);
  for (Element x = 0; x < g.order(); ++x) {
    const Element inv = g.inverse(x);
    out += alpha(inv)(k, k) * (u(x).col(static_cast<Eigen::Index>(s)) *
                               u(inv).row(static_cast<Eigen::Index>(t)));
  }
  return out * (static_cast<double>(alpha.dim()) /
                static_cast<double>(g.order()));
}

namespace {

Eigenmatrix eigenmatrix_from_fine(const Irrep& u, const Irrep& alpha,
                                  std::size_t i, const Matrix& fine) {
  const std::size_t n = u.dim();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const auto d = static_cast<Eigen::Index>(s * n + t);
      const double weight = fine(d, d).real();
      if (weight > kZeroTolerance) {
        return {eigenmatrix_raw(u, alpha, i, s, t) / std::sqrt(weight), s, t};
      }
    }
  }
  throw InternalError("no admissible (s,t) for " + alpha.label() + ", i=" +
                      std::to_string(i + 1));
}

}  // namespace

Eigenmatrix eigenmatrix_v(const Irrep& u, const Irrep& alpha, std::size_t i) {
  return eigenmatrix_from_fine(u, alpha, i, projector_fine(u, alpha, i));
}

double covariance_residual(const Matrix& phi_mat, const Irrep& u) {
  const auto n2 = static_cast<Eigen::Index>(u.dim() * u.dim());
  if (phi_mat.rows() != n2 || phi_mat.cols() != n2)
    throw DomainError("covariance_residual: expected an n^2 x n^2 matrix");
  double worst = 0.0;
  for (Element g = 0; g < u.group().order(); ++g) {
    const Matrix ad = adjoint_matrix(u, g);
    worst = std::max(worst, operator_norm(phi_mat * ad - ad * phi_mat));
  }
  return worst;
}

CommutantBasis::CommutantBasis(const IrrepCatalog& catalog, const Irrep& u)
    : u_(u), theta_(decompose_adjoint(catalog, u)) {
  for (std::size_t pos = 0; pos < theta_.size(); ++pos) {
    const Irrep& alpha = catalog[theta_.catalog_index[pos]];
    theta_irreps_.push_back(alpha);
    proj_.push_back(projector_coarse(u_, alpha));
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
      Entry e;
      e.theta_pos = pos;
      e.label = alpha.label();
      e.i = i;
      e.proj_fine = projector_fine(u_, alpha, i);
      e.eigen = eigenmatrix_from_fine(u_, alpha, i, e.proj_fine);
      e.basis_vector = vectorize(e.eigen.v.transpose());
      entries_.push_back(std::move(e));
    }
  }
  if (entries_.size() != u_.dim() * u_.dim())
    throw InternalError("commutant basis does not have n^2 entries");
}

std::vector<Vector> basis_vectors(const CommutantBasis& basis) {
  std::vector<Vector> out;
  out.reserve(basis.entries().size());
  for (const auto& e : basis.entries()) out.push_back(e.basis_vector);
  return out;
}

}  // namespace covch
