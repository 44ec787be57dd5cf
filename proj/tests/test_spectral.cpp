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

#include <algorithm>
#include <cmath>
#include <map>

#include "covch/cli/fixtures.hpp"
#include "covch/cli/sampling.hpp"
#include "covch/error.hpp"
#include "covch/spectral.hpp"

namespace covch {
namespace {

using cli::builtin_cases;
using cli::Sampler;

struct Case {
  IrrepCatalog catalog;
  const Irrep* u;
  CommutantBasis basis;
  MuMatrix m;

  Case(const std::string& group, const std::string& irrep)
      : catalog(builtin_catalog(group)),
        u(&catalog.at(irrep)),
        basis(catalog, *u),
        m(mu_matrix(basis)) {}

  EigenvalueVector l(const std::map<std::string, double>& values) const {
    return make_eigenvalues(catalog, basis.theta(), values);
  }
};

TEST(Mu, ColumnsAndRows) {
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    const double n = static_cast<double>(k.u->dim());
    for (Eigen::Index r = 0; r < k.m.m.rows(); ++r)
      EXPECT_NEAR(k.m.m(r, 0), 1.0 / n, 1e-12);
    for (std::size_t a = 0; a < k.basis.theta().size(); ++a)
      EXPECT_NEAR(k.m.m(0, static_cast<Eigen::Index>(a)),
                  static_cast<double>(k.basis.theta().dims[a]) / n, 1e-12);
    for (std::size_t idx = 0; idx < k.catalog.size(); ++idx) {
      if (k.basis.theta().position(idx) < k.basis.theta().size()) continue;
      for (const auto& e : k.basis.entries())
        EXPECT_NEAR(mu(*k.u, k.catalog[idx], e.eigen.v), 0.0, 1e-12);
    }
  }
}

TEST(Mu, DoubleSumIsPairIndependent) {
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    const std::size_t n = k.u->dim();
    for (std::size_t r = 0; r < k.basis.entries().size(); ++r) {
      const auto& e = k.basis.entries()[r];
      const Irrep& beta = k.basis.theta_irrep(e.theta_pos);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const auto st = static_cast<Eigen::Index>(s * n + t);
          if (e.proj_fine(st, st).real() <= 1e-10) {
            EXPECT_THROW(mu_double_sum(*k.u, beta, beta, e.i, s, t), DomainError);
            continue;
          }
          for (std::size_t a = 0; a < k.basis.theta().size(); ++a)
            EXPECT_NEAR(mu_double_sum(*k.u, k.basis.theta_irrep(a), beta, e.i, s, t),
                        k.m.m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(a)),
                        1e-10);
        }
    }
  }
}

TEST(MuMatrix, QuaternionReference) {
  const Case k("q8", "t4");
  EXPECT_LT((k.m.m - cli::q8_m_reference()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MuMatrix, S3ReferenceAndLeftInverse) {
  const Case k("s3", "(2,1)");
  EXPECT_LT((k.m.m - cli::s3_m_reference()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((k.m.left_inv * k.m.m - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(),
            1e-12);
  EXPECT_LT((k.m.gram - k.m.m.transpose() * k.m.m).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Epsilon, Examples) {
  const Case s3("s3", "(2,1)");
  const EpsilonVector e = epsilon_from_L(s3.m, s3.l({{"sgn", 1}, {"lambda", 1}}));
  const double expected_s3[] = {2, 0, 0, 0};
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e.keys[0].beta, "id");
  EXPECT_EQ(e.keys[1].beta, "sgn");
  for (Eigen::Index r = 0; r < 4; ++r) EXPECT_NEAR(e.values(r), expected_s3[r], 1e-12);

  const Case q8("q8", "t4");
  const EpsilonVector eq = epsilon_from_L(q8.m, q8.l({{"t1", 0}, {"t2", 0}, {"t3", 0}}));
  for (Eigen::Index r = 0; r < 4; ++r) EXPECT_NEAR(eq.values(r), 0.5, 1e-12);

  const Case s4("s4", "(3,1)");
  const EpsilonVector e4 =
      epsilon_from_L(s4.m, s4.l({{"(3,1)", 1}, {"(2,2)", 1}, {"(2,1,1)", 1}}));
  EXPECT_NEAR(e4.values(0), 3.0, 1e-12);
  for (Eigen::Index r = 1; r < 9; ++r) EXPECT_NEAR(e4.values(r), 0.0, 1e-12);
}

TEST(Epsilon, MatchesS4Formulas) {
  const Case k("s4", "(3,1)");
  Sampler rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const double l1 = rng.uniform(-1, 1), l2 = rng.uniform(-1, 1),
                 l3 = rng.uniform(-1, 1);
    const EpsilonVector e =
        epsilon_from_L(k.m, k.l({{"lambda1", l1}, {"lambda2", l2}, {"lambda3", l3}}));
    EXPECT_LT((e.values - cli::s4_epsilon_reference(l1, l2, l3)).cwiseAbs().maxCoeff(),
              1e-12);
  }
}

TEST(Epsilon, RoundTripAndSubspace) {
  Sampler rng(6);
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    for (int trial = 0; trial < 20; ++trial) {
      const EigenvalueVector l = rng.eigenvalues(k.basis.theta(), -1.5, 1.5);
      const EpsilonVector e = epsilon_from_L(k.m, l);
      EXPECT_NEAR(e.sum(), static_cast<double>(k.u->dim()), 1e-12);
      const EigenvalueVector back = L_from_epsilon(k.m, e);
      EXPECT_EQ(back.labels, l.labels);
      EXPECT_LT((back.values - l.values).cwiseAbs().maxCoeff(), 1e-10);
    }
    if (k.m.m.rows() > k.m.m.cols()) {
      EpsilonVector bad = epsilon_from_L(k.m, rng.eigenvalues(k.basis.theta(), 0, 1));
      // Splitting a degenerate pair leaves the column space of M.
      Eigen::Index first = -1, second = -1;
      for (std::size_t r = 1; r < bad.size() && second < 0; ++r)
        for (std::size_t q = 0; q < r; ++q)
          if (bad.keys[q].beta == bad.keys[r].beta) {
            first = static_cast<Eigen::Index>(q);
            second = static_cast<Eigen::Index>(r);
            break;
          }
      if (second >= 0) {
        bad.values(first) += 0.25;
        bad.values(second) -= 0.25;
        EXPECT_THROW(L_from_epsilon(k.m, bad), NotInSubspace) << c.group;
      }
    }
  }
}

TEST(Epsilon, DoubleSumAgreesForEveryPair) {
  Sampler rng(7);
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    const std::size_t n = k.u->dim();
    const EigenvalueVector l = rng.eigenvalues(k.basis.theta(), -1, 1);
    const EpsilonVector e = epsilon_from_L(k.m, l);
    for (std::size_t r = 0; r < k.basis.entries().size(); ++r) {
      const auto& entry = k.basis.entries()[r];
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
          const auto st = static_cast<Eigen::Index>(s * n + t);
          if (entry.proj_fine(st, st).real() <= 1e-10) continue;
          EXPECT_NEAR(epsilon_double_sum(k.basis, l, r, s, t),
                      e.values(static_cast<Eigen::Index>(r)), 1e-10);
        }
    }
  }
}

TEST(Choi, ReferenceMatrices) {
  const Case s3("s3", "(2,1)");
  const Case q8("q8", "t4");
  const Case s4("s4", "(3,1)");
  const double grid[] = {-1, -0.5, 0, 0.5, 1};
  for (double a : grid)
    for (double b : grid) {
      EXPECT_LT(max_abs(choi_image(s3.basis, s3.l({{"sgn", a}, {"lambda", b}})) -
                        cli::s3_choi_reference(a, b)),
                1e-12);
      for (double c : grid) {
        EXPECT_LT(max_abs(choi_image(q8.basis,
                                     q8.l({{"t1", a}, {"t2", b}, {"t3", c}})) -
                          cli::q8_choi_reference(a, b, c)),
                  1e-12);
        EXPECT_LT(max_abs(choi_image(s4.basis, s4.l({{"lambda1", a},
                                                     {"lambda2", b},
                                                     {"lambda3", c}})) -
                          choi_from_superoperator(
                              cli::s4_superoperator_reference(a, b, c))),
                  1e-12);
      }
    }
}

TEST(Choi, IdentityComponentAndTrace) {
  Sampler rng(8);
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    const auto n = static_cast<Eigen::Index>(k.u->dim());
    EigenvalueVector delta = rng.eigenvalues(k.basis.theta(), 0, 0);
    const Matrix j0 = choi_image(k.basis, delta);
    const Matrix expected =
        Matrix::Identity(n * n, n * n) / static_cast<double>(n);
    EXPECT_LT(max_abs(j0 - expected), 1e-12);
    EXPECT_LT(max_abs(brute_force_choi(k.catalog, *k.u, delta) - expected), 1e-12);
    const EigenvalueVector l = rng.eigenvalues(k.basis.theta(), -1, 1);
    const Matrix j = choi_image(k.basis, l);
    EXPECT_LT(std::abs(j.trace() - static_cast<double>(n)), 1e-12);
    EXPECT_LT(max_abs(j - j.adjoint()), 1e-12);
  }
}

TEST(Choi, BruteForceAndSpectrum) {
  Sampler rng(9);
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    for (int trial = 0; trial < 25; ++trial) {
      const EigenvalueVector l = rng.eigenvalues(k.basis.theta(), -2, 2);
      const Matrix j = choi_image(k.basis, l);
      EXPECT_LT(max_abs(j - brute_force_choi(k.catalog, *k.u, l)), 1e-10);
      const EpsilonVector e = epsilon_from_L(k.m, l);
      RealVector sorted = e.values;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_LT((hermitian_eigenvalues(j) - sorted).cwiseAbs().maxCoeff(), 1e-9);
      const std::vector<Vector> vs = basis_vectors(k.basis);
      for (std::size_t r = 0; r < vs.size(); ++r)
        EXPECT_LT(max_abs(j * vs[r] - e.values(static_cast<Eigen::Index>(r)) * vs[r]),
                  1e-10);
    }
  }
}

TEST(Choi, BlocksCommuteAndAreNormal) {
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    std::vector<Matrix> blocks;
    for (std::size_t pos = 0; pos < k.basis.theta().size(); ++pos)
      blocks.push_back(choi_from_superoperator(k.basis.projector(pos)));
    for (const Matrix& a : blocks) {
      EXPECT_LT(max_abs(a * a.adjoint() - a.adjoint() * a), 1e-12);
      for (const Matrix& b : blocks) EXPECT_LT(max_abs(a * b - b * a), 1e-12);
    }
  }
}

TEST(Simplex, Examples) {
  const Case s3("s3", "(2,1)");
  const SimplexVerdict bad =
      simplex_feasibility(epsilon_from_L(s3.m, s3.l({{"sgn", 0}, {"lambda", 0.6}})), 2);
  EXPECT_FALSE(bad.feasible);
  ASSERT_TRUE(bad.negative_entry.has_value());
  EXPECT_EQ(*bad.negative_entry, 1u);

  const EpsilonVector vertex = epsilon_from_L(s3.m, s3.l({{"sgn", -1}, {"lambda", 0}}));
  const double expected[] = {0, 0, 1, 1};
  for (Eigen::Index r = 0; r < 4; ++r) EXPECT_NEAR(vertex.values(r), expected[r], 1e-12);
  EXPECT_TRUE(simplex_feasibility(vertex, 2).feasible);

  const Case q8("q8", "t4");
  const EpsilonVector id = epsilon_from_L(q8.m, q8.l({{"t1", 1}, {"t2", 1}, {"t3", 1}}));
  EXPECT_NEAR(id.values(0), 2.0, 1e-12);
  EXPECT_TRUE(simplex_feasibility(id, 2).feasible);

  const SimplexVerdict off = simplex_feasibility(id, 3);
  EXPECT_FALSE(off.feasible);
  EXPECT_TRUE(off.sum_mismatch.has_value());
}

// Sum of epsilons equals |U| exactly when l_id = 1.
TEST(Simplex, TraceConditionPerCase) {
  Sampler rng(10);
  for (const auto& c : builtin_cases()) {
    const Case k(c.group, c.irrep);
    for (int trial = 0; trial < 20; ++trial) {
      EigenvalueVector l = rng.eigenvalues(k.basis.theta(), -1, 1);
      const double lid = rng.uniform(-2, 2);
      l.values(0) = lid;
      EXPECT_NEAR(epsilon_from_L(k.m, l).sum(), lid * static_cast<double>(k.u->dim()),
                  1e-12);
    }
  }
}

TEST(MakeEigenvalues, DefaultsAndErrors) {
  const Case k("s3", "(2,1)");
  const EigenvalueVector l = k.l({{"sgn", 0.25}, {"2,1", -0.5}});
  EXPECT_EQ(l.identity(), 1.0);
  EXPECT_EQ(l.at("sgn"), 0.25);
  EXPECT_EQ(l.at("(2,1)"), -0.5);
  EXPECT_THROW(k.l({{"sgn", 0.25}}), DomainError);
  EXPECT_THROW(k.l({{"sgn", 0.25}, {"lambda", 0}, {"t1", 0}}), DomainError);
}

}  // namespace
}  // namespace covch
