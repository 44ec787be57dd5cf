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

#include <gtest/gtest.h>

#include <cmath>

#include "covch/cli/fixtures.hpp"
#include "covch/cli/sampling.hpp"
#include "covch/commutant.hpp"
#include "covch/error.hpp"
#include "covch/irrep.hpp"

namespace covch {
namespace {

using cli::builtin_cases;
using cli::Sampler;

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix e = Matrix::Zero(ni, ni);
  e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return e;
}

// Matrix representation of a linear map on n x n matrices, column by
// column from the images of the matrix units.
template <typename F>
Matrix representation(std::size_t n, F&& f) {
  const auto n2 = static_cast<Eigen::Index>(n * n);
  Matrix out(n2, n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.col(static_cast<Eigen::Index>(i * n + j)) = vectorize(f(unit(n, i, j)));
  return out;
}

struct Case {
  IrrepCatalog catalog;
  const Irrep* u;
  CommutantBasis basis;

  explicit Case(const cli::BuiltinCase& c)
      : catalog(builtin_catalog(c.group)),
        u(&catalog.at(c.irrep)),
        basis(catalog, *u) {}
};

TEST(Vectorize, Examples) {
  Matrix x(2, 2);
  x << 1.0, 2.0, 3.0, 4.0;
  Vector expected(4);
  expected << 1.0, 2.0, 3.0, 4.0;
  EXPECT_EQ(vectorize(x), expected);
  Vector e12 = Vector::Zero(4);
  e12(1) = 1.0;
  EXPECT_EQ(vectorize(unit(2, 0, 1)), e12);
  EXPECT_THROW(devectorize(Vector::Zero(5)), DomainError);
}

TEST(Vectorize, RoundTrip) {
  Sampler rng(1);
  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix x = rng.complex_matrix(n);
    EXPECT_EQ(devectorize(vectorize(x)), x);
  }
}

TEST(AdjointMatrix, IdentityTraceAndAction) {
  Sampler rng(2);
  for (const auto& c : builtin_cases()) {
    const IrrepCatalog cat = builtin_catalog(c.group);
    const Irrep& u = cat.at(c.irrep);
    const std::size_t n2 = u.dim() * u.dim();
    const auto n2i = static_cast<Eigen::Index>(n2);
    EXPECT_LT(max_abs(adjoint_matrix(u, cat.group().identity()) -
                      Matrix::Identity(n2i, n2i)),
              1e-15);
    for (Element g = 0; g < cat.group().order(); ++g) {
      const Matrix a = adjoint_matrix(u, g);
      EXPECT_LT(std::abs(a.trace() - std::norm(u.character(g))), 1e-12);
      const Matrix x = rng.complex_matrix(u.dim());
      EXPECT_LT(max_abs(a * vectorize(x) - vectorize(u(g) * x * u(g).adjoint())),
                1e-12);
    }
  }
}

TEST(ProjectorCoarse, Examples) {
  const IrrepCatalog s3 = builtin_catalog("s3");
  const Irrep& u = s3.at("(2,1)");
  const Matrix pid = projector_coarse(u, s3.at("id"));
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t) {
          const double expected = (p == q && s == t) ? 0.5 : 0.0;
          EXPECT_LT(std::abs(pid(static_cast<Eigen::Index>(p * 2 + q),
                                 static_cast<Eigen::Index>(s * 2 + t)) -
                             expected),
                    1e-15);
        }
  EXPECT_LT(std::abs(projector_coarse(u, s3.at("(2,1)")).trace() - 2.0), 1e-12);

  const IrrepCatalog s4 = builtin_catalog("s4");
  EXPECT_LT(max_abs(projector_coarse(s4.at("(3,1)"), s4.at("sgn"))), 1e-14);
}

TEST(ProjectorCoarse, CompleteOrthogonalFamily) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const auto n2 = static_cast<Eigen::Index>(k.u->dim() * k.u->dim());
    Matrix sum = Matrix::Zero(n2, n2);
    for (std::size_t a = 0; a < k.basis.theta().size(); ++a) {
      const Matrix& pa = k.basis.projector(a);
      sum += pa;
      EXPECT_LT(max_abs(pa - pa.adjoint()), 1e-12);
      EXPECT_LT(std::abs(pa.trace() -
                         static_cast<double>(k.basis.theta().dims[a])),
                1e-12);
      for (std::size_t b = 0; b < k.basis.theta().size(); ++b) {
        const Matrix expected = a == b ? pa : Matrix::Zero(n2, n2);
        EXPECT_LT(max_abs(pa * k.basis.projector(b) - expected), 1e-12)
            << c.group << " " << c.irrep;
      }
    }
    EXPECT_LT(max_abs(sum - Matrix::Identity(n2, n2)), 1e-12);
  }
}

TEST(ProjectorFine, Examples) {
  const IrrepCatalog s3 = builtin_catalog("s3");
  const Irrep& u = s3.at("(2,1)");
  const Irrep& lambda = s3.at("lambda");
  const Matrix p1 = projector_fine(u, lambda, 0);
  const Matrix p2 = projector_fine(u, lambda, 1);
  EXPECT_LT(max_abs(p1 * p2), 1e-12);
  EXPECT_LT(std::abs(p1.trace() - 1.0), 1e-12);
  EXPECT_LT(max_abs(p1 + p2 - projector_coarse(u, lambda)), 1e-12);
}

TEST(ProjectorFine, RankOneFamily) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const auto& entries = k.basis.entries();
    EXPECT_EQ(entries.size(), k.u->dim() * k.u->dim());
    for (std::size_t a = 0; a < entries.size(); ++a) {
      const Matrix& pa = entries[a].proj_fine;
      EXPECT_LT(std::abs(pa.trace() - 1.0), 1e-12);
      const Eigen::JacobiSVD<Matrix> svd(pa);
      EXPECT_LT(svd.singularValues()(1), 1e-10) << "rank one";
      for (std::size_t b = 0; b < entries.size(); ++b) {
        const Matrix prod = pa * entries[b].proj_fine;
        const Matrix expected = a == b ? pa : Matrix::Zero(pa.rows(), pa.cols());
        EXPECT_LT(max_abs(prod - expected), 1e-12);
      }
    }
    for (std::size_t pos = 0; pos < k.basis.theta().size(); ++pos) {
      Matrix sum = Matrix::Zero(k.basis.projector(pos).rows(),
                                k.basis.projector(pos).cols());
      for (const auto& e : entries)
        if (e.theta_pos == pos) sum += e.proj_fine;
      EXPECT_LT(max_abs(sum - k.basis.projector(pos)), 1e-12);
    }
  }
}

TEST(Eigenmatrix, IdentityComponent) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const auto& e = k.basis.entries().front();
    const auto n = static_cast<Eigen::Index>(k.u->dim());
    EXPECT_EQ(e.label, "id");
    EXPECT_EQ(e.eigen.s, e.eigen.t);
    EXPECT_LT(max_abs(e.eigen.v - Matrix::Identity(n, n) /
                                      std::sqrt(static_cast<double>(n))),
              1e-12);
  }
}

TEST(Eigenmatrix, NormsTracesAndFixedPoints) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    for (const auto& e : k.basis.entries()) {
      const std::size_t n = k.u->dim();
      const Matrix raw = eigenmatrix_raw(*k.u, k.basis.theta_irrep(e.theta_pos),
                                         e.i, e.eigen.s, e.eigen.t);
      const auto st = static_cast<Eigen::Index>(e.eigen.s * n + e.eigen.t);
      EXPECT_LT(std::abs(raw.squaredNorm() - e.proj_fine(st, st).real()), 1e-12);
      EXPECT_GT(e.proj_fine(st, st).real(), 1e-10);
      // Lexicographically first admissible pair.
      for (Eigen::Index p = 0; p < st; ++p)
        EXPECT_LE(e.proj_fine(p, p).real(), 1e-10);
      EXPECT_NEAR(e.eigen.v.norm(), 1.0, 1e-12);
      EXPECT_LT(max_abs(e.proj_fine * vectorize(e.eigen.v) - vectorize(e.eigen.v)),
                1e-12);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const Complex tr = eigenmatrix_raw(*k.u, k.basis.theta_irrep(e.theta_pos),
                                             e.i, s, t)
                                 .trace();
          const double expected = (e.label == "id" && s == t) ? 1.0 : 0.0;
          EXPECT_LT(std::abs(tr - expected), 1e-12);
        }
    }
  }
}

TEST(Eigenmatrix, SummationRules) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const std::size_t n = k.u->dim();
    const auto ni = static_cast<Eigen::Index>(n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        Matrix sum = Matrix::Zero(ni, ni);
        for (const auto& e : k.basis.entries())
          sum += eigenmatrix_raw(*k.u, k.basis.theta_irrep(e.theta_pos), e.i, s, t);
        EXPECT_LT(max_abs(sum - unit(n, s, t)), 1e-12);
      }
    for (const auto& e : k.basis.entries()) {
      const Irrep& alpha = k.basis.theta_irrep(e.theta_pos);
      Matrix diag = Matrix::Zero(ni, ni);
      double norms = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        diag += eigenmatrix_raw(*k.u, alpha, e.i, s, s);
        for (std::size_t t = 0; t < n; ++t)
          norms += eigenmatrix_raw(*k.u, alpha, e.i, s, t).squaredNorm();
      }
      const Matrix expected =
          e.label == "id" ? Matrix(Matrix::Identity(ni, ni)) : Matrix(Matrix::Zero(ni, ni));
      EXPECT_LT(max_abs(diag - expected), 1e-12);
      EXPECT_NEAR(norms, 1.0, 1e-12);
    }
  }
}

TEST(Eigenmatrix, VanishesOutsideTheta) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const std::size_t n = k.u->dim();
    for (std::size_t idx = 0; idx < k.catalog.size(); ++idx) {
      if (k.basis.theta().position(idx) < k.basis.theta().size()) continue;
      const Irrep& gamma = k.catalog[idx];
      for (std::size_t i = 0; i < gamma.dim(); ++i)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t)
            EXPECT_LT(max_abs(eigenmatrix_raw(*k.u, gamma, i, s, t)), 1e-12);
    }
  }
}

// Different admissible pairs give the same eigenmatrix up to a unit phase.
TEST(Eigenmatrix, PhaseCoherence) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const std::size_t n = k.u->dim();
    for (const auto& e : k.basis.entries()) {
      const Irrep& alpha = k.basis.theta_irrep(e.theta_pos);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const auto pq = static_cast<Eigen::Index>(p * n + q);
          const double weight = e.proj_fine(pq, pq).real();
          if (weight <= 1e-10) continue;
          const Matrix other =
              eigenmatrix_raw(*k.u, alpha, e.i, p, q) / std::sqrt(weight);
          const Complex overlap =
              (e.eigen.v.adjoint() * other).trace();
          EXPECT_NEAR(std::abs(overlap), 1.0, 1e-10);
        }
    }
  }
}

TEST(BasisVectors, Orthonormal) {
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const std::vector<Vector> vs = basis_vectors(k.basis);
    ASSERT_EQ(vs.size(), k.u->dim() * k.u->dim());
    for (std::size_t a = 0; a < vs.size(); ++a) {
      EXPECT_LT(max_abs(vs[a] - vectorize(k.basis.entries()[a].eigen.v.transpose())),
                1e-15);
      for (std::size_t b = 0; b < vs.size(); ++b)
        EXPECT_LT(std::abs(vs[a].dot(vs[b]) - Complex(a == b ? 1.0 : 0.0)), 1e-12);
    }
  }
}

TEST(CovarianceResidual, Examples) {
  Sampler rng(3);
  for (const auto& c : builtin_cases()) {
    const Case k(c);
    const auto n2 = static_cast<Eigen::Index>(k.u->dim() * k.u->dim());
    for (std::size_t pos = 0; pos < k.basis.theta().size(); ++pos)
      EXPECT_LT(covariance_residual(k.basis.projector(pos), *k.u), 1e-12);
    EXPECT_EQ(covariance_residual(Matrix::Identity(n2, n2), *k.u), 0.0);
    EXPECT_GT(covariance_residual(rng.complex_matrix(k.u->dim() * k.u->dim()), *k.u),
              0.1);
  }
}

// Phi(X) = sum A X B^+ has dual Phi*(Y) = sum A^+ Y B and the matrix of the
// dual is the adjoint of the matrix of Phi.
TEST(Duality, AdjointOfRepresentation) {
  Sampler rng(4);
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Matrix> a, b;
    for (int nu = 0; nu < 3; ++nu) {
      a.push_back(rng.complex_matrix(n));
      b.push_back(rng.complex_matrix(n));
    }
    const Matrix phi = representation(n, [&](const Matrix& x) {
      Matrix out = Matrix::Zero(x.rows(), x.cols());
      for (std::size_t nu = 0; nu < a.size(); ++nu) out += a[nu] * x * b[nu].adjoint();
      return out;
    });
    const Matrix dual = representation(n, [&](const Matrix& y) {
      Matrix out = Matrix::Zero(y.rows(), y.cols());
      for (std::size_t nu = 0; nu < a.size(); ++nu) out += a[nu].adjoint() * y * b[nu];
      return out;
    });
    EXPECT_LT(max_abs(dual - phi.adjoint()), 1e-12);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix x = rng.complex_matrix(n), y = rng.complex_matrix(n);
      const Complex lhs = (y.adjoint() * devectorize(phi * vectorize(x))).trace();
      const Complex rhs = (devectorize(dual * vectorize(y)).adjoint() * x).trace();
      EXPECT_LT(std::abs(lhs - rhs), 1e-10);
    }
  }
}

TEST(CommutantBasis, RejectsMultiplicities) {
  const IrrepCatalog s5 = builtin_catalog("s5");
  EXPECT_THROW(CommutantBasis(s5, s5.at("(3,1,1)")), NotSimplyReducible);
}

}  // namespace
}  // namespace covch
