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

#include "covch/spectral.hpp"

#include <cmath>

#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch {

double EigenvalueVector::at(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return values(static_cast<Eigen::Index>(k));
  throw DomainError("no eigenvalue for irrep '" + label + "'");
}

EigenvalueVector make_eigenvalues(const IrrepCatalog& catalog,
                                  const ThetaSet& theta,
                                  const std::map<std::string, double>& values) {
  EigenvalueVector l;
  l.labels = theta.members;
  l.values = RealVector::Constant(static_cast<Eigen::Index>(theta.size()),
                                  std::nan(""));
  l.values(0) = 1.0;
  for (const auto& [key, value] : values) {
    const std::size_t pos = theta.position(catalog.index_of(key));
    if (pos == theta.size())
      throw DomainError("irrep '" + key + "' does not occur in U (x) U^c");
    l.values(static_cast<Eigen::Index>(pos)) = value;
  }
  for (std::size_t k = 0; k < theta.size(); ++k)
    if (std::isnan(l.values(static_cast<Eigen::Index>(k))))
      throw DomainError("missing eigenvalue for irrep '" + theta.members[k] +
                        "'");
  return l;
}

double mu(const Irrep& u, const Irrep& alpha, const Matrix& v_beta_i) {
  const FiniteGroup& g = u.group();
  Complex sum = 0.0;
  for (Element x = 0; x < g.order(); ++x) {
    const Complex overlap = (v_beta_i * u(x).adjoint()).trace();
    sum += alpha.character(g.inverse(x)) * std::norm(overlap);
  }
  sum *= static_cast<double>(alpha.dim()) / static_cast<double>(g.order());
  return sum.real();
}

double mu_double_sum(const Irrep& u, const Irrep& alpha, const Irrep& beta,
                     std::size_t i, std::size_t s, std::size_t t) {
  const FiniteGroup& g = u.group();
  const std::size_t n = u.dim();
  const Matrix fine = projector_fine(u, beta, i);
  const auto d = static_cast<Eigen::Index>(s * n + t);
  const double weight = fine(d, d).real();
  if (weight <= kZeroTolerance)
    throw DomainError("(s,t) is not admissible for this (beta, i)");
  const auto k = static_cast<Eigen::Index>(i);
  const auto si = static_cast<Eigen::Index>(s);
  const auto ti = static_cast<Eigen::Index>(t);
  Complex sum = 0.0;
  for (Element x = 0; x < g.order(); ++x) {
    const Element xinv = g.inverse(x);
    const Complex outer = alpha.character(xinv) * u(xinv)(ti, si);
    for (Element h = 0; h < g.order(); ++h) {
      const Element hinv = g.inverse(h);
      const Element conj = g.multiply(g.multiply(h, x), hinv);
      sum += outer * beta(hinv)(k, k) * u(conj)(si, ti);
    }
  }
  const double order = static_cast<double>(g.order());
  sum *= static_cast<double>(alpha.dim() * beta.dim()) /
         (order * order * weight);
  return sum.real();
}

MuMatrix mu_matrix(const CommutantBasis& basis) {
  const auto& theta = basis.theta();
  const auto& entries = basis.entries();
  MuMatrix out;
  out.m.resize(static_cast<Eigen::Index>(entries.size()),
               static_cast<Eigen::Index>(theta.size()));
  for (std::size_t r = 0; r < entries.size(); ++r) {
    out.rows.push_back({entries[r].label, entries[r].i});
    for (std::size_t c = 0; c < theta.size(); ++c)
      out.m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          mu(basis.irrep(), basis.theta_irrep(c), entries[r].eigen.v);
  }
  out.cols = theta.members;
  out.gram = out.m.transpose() * out.m;
  Eigen::FullPivLU<RealMatrix> lu(out.gram);
  if (!lu.isInvertible()) throw InternalError("Gram matrix of M is singular");
  out.left_inv = lu.solve(out.m.transpose());
  const RealMatrix check = out.left_inv * out.m;
  const RealMatrix id = RealMatrix::Identity(check.rows(), check.cols());
  if ((check - id).cwiseAbs().maxCoeff() > equality_tolerance())
    throw InternalError("left inverse of M does not reproduce the identity");
  return out;
}

EpsilonVector epsilon_from_L(const MuMatrix& m, const EigenvalueVector& l) {
  if (l.values.size() != m.m.cols())
    throw DomainError("eigenvalue vector does not match M");
  return {m.rows, m.m * l.values};
}

EigenvalueVector L_from_epsilon(const MuMatrix& m, const EpsilonVector& e) {
  if (e.values.size() != m.m.rows())
    throw DomainError("epsilon vector does not match M");
  RealVector l = m.left_inv * e.values;
  const double residual = (m.m * l - e.values).cwiseAbs().maxCoeff();
  if (residual > equality_tolerance()) throw NotInSubspace(residual);
  return {m.cols, std::move(l)};
}

Matrix choi_from_superoperator(const Matrix& superop) {
  const auto n = static_cast<Eigen::Index>(
      std::llround(std::sqrt(static_cast<double>(superop.rows()))));
  if (n * n != superop.rows() || superop.rows() != superop.cols())
    throw DomainError("superoperator must be n^2 x n^2");
  // J_{(i,k),(j,l)} = Phi(E_ij)_{kl} = superop_{(k,l),(i,j)}.
  Matrix j(n * n, n * n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index d = 0; d < n; ++d)
          j(a * n + c, b * n + d) = superop(c * n + d, a * n + b);
  return j;
}

Matrix choi_image(const CommutantBasis& basis, const EigenvalueVector& l) {
  if (l.labels != basis.theta().members)
    throw DomainError("eigenvalues are not keyed by Theta");
  const auto n2 = static_cast<Eigen::Index>(basis.dim() * basis.dim());
  Matrix superop = Matrix::Zero(n2, n2);
  for (std::size_t pos = 0; pos < l.size(); ++pos)
    superop += l.values(static_cast<Eigen::Index>(pos)) * basis.projector(pos);
  return choi_from_superoperator(superop);
}

Matrix brute_force_choi(const IrrepCatalog& catalog, const Irrep& u,
                        const EigenvalueVector& l) {
  const FiniteGroup& g = u.group();
  const auto n = static_cast<Eigen::Index>(u.dim());
  // Per-element weight sum_alpha l_alpha |alpha| chi^alpha(g^-1) / |G|.
  std::vector<Complex> weight(g.order(), 0.0);
  for (std::size_t k = 0; k < l.size(); ++k) {
    const Irrep& alpha = catalog.at(l.labels[k]);
    for (Element x = 0; x < g.order(); ++x)
      weight[x] += l.values(static_cast<Eigen::Index>(k)) *
                   static_cast<double>(alpha.dim()) *
                   alpha.character(g.inverse(x));
  }
  Matrix j = Matrix::Zero(n * n, n * n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      Matrix e = Matrix::Zero(n, n);
      e(a, b) = 1.0;
      Matrix image = Matrix::Zero(n, n);
      for (Element x = 0; x < g.order(); ++x)
        image += weight[x] * (u(x) * e * u(x).adjoint());
      image /= static_cast<double>(g.order());
      j += kron(e, image);
    }
  }
  return j;
}

double epsilon_double_sum(const CommutantBasis& basis,
                          const EigenvalueVector& l, std::size_t entry,
                          std::size_t s, std::size_t t) {
  const auto& e = basis.entries().at(entry);
  const Irrep& u = basis.irrep();
  const Irrep& beta = basis.theta_irrep(e.theta_pos);
  const FiniteGroup& g = u.group();
  const std::size_t n = u.dim();
  const auto d = static_cast<Eigen::Index>(s * n + t);
  const double weight = e.proj_fine(d, d).real();
  if (weight <= kZeroTolerance)
    throw DomainError("(s,t) is not admissible for this (beta, i)");

  std::vector<Complex> bracket(g.order(), 0.0);
  for (std::size_t pos = 0; pos < l.size(); ++pos) {
    const Irrep& alpha = basis.theta_irrep(pos);
    for (Element x = 0; x < g.order(); ++x)
      bracket[x] += l.values(static_cast<Eigen::Index>(pos)) *
                    static_cast<double>(alpha.dim()) *
                    alpha.character(g.inverse(x));
  }
  const auto k = static_cast<Eigen::Index>(e.i);
  const auto si = static_cast<Eigen::Index>(s);
  const auto ti = static_cast<Eigen::Index>(t);
  Complex sum = 0.0;
  for (Element x = 0; x < g.order(); ++x) {
    const Element xinv = g.inverse(x);
    const Complex outer = bracket[x] * u(xinv)(ti, si);
    for (Element h = 0; h < g.order(); ++h) {
      const Element hinv = g.inverse(h);
      sum += outer * beta(hinv)(k, k) *
             u(g.multiply(g.multiply(h, x), hinv))(si, ti);
    }
  }
  const double order = static_cast<double>(g.order());
  return (sum * static_cast<double>(beta.dim()) / (order * order * weight))
      .real();
}

SimplexVerdict simplex_feasibility(const EpsilonVector& e, std::size_t dim_u) {
  SimplexVerdict verdict;
  for (Eigen::Index k = 0; k < e.values.size(); ++k) {
    if (e.values(k) < -kZeroTolerance) {
      verdict.negative_entry = static_cast<std::size_t>(k);
      break;
    }
  }
  const double mismatch = e.sum() - static_cast<double>(dim_u);
  if (std::abs(mismatch) > equality_tolerance())
    verdict.sum_mismatch = mismatch;
  verdict.feasible = !verdict.negative_entry && !verdict.sum_mismatch;
  return verdict;
}

}  // namespace covch
