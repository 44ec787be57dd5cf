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
#include <complex>
#include <numbers>

#include "covch/error.hpp"
#include "covch/irrep.hpp"

namespace covch {
namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(EpsilonIrrep, Generators) {
  const IrrepCatalog cat = builtin_catalog("s3");
  const Irrep& u = cat.at("(2,1)");
  const FiniteGroup& g = cat.group();
  const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
  EXPECT_LT(max_abs(u(g.find("(12)")) - mat2(0, 1, 1, 0)), 1e-15);
  EXPECT_LT(max_abs(u(g.find("(23)")) - mat2(0, w * w, w, 0)), 1e-15);
  EXPECT_LT(max_abs(u(g.identity()) - Matrix::Identity(2, 2)), 1e-15);
  EXPECT_EQ(u.character(g.find("(123)")), Complex(-1.0));
  EXPECT_EQ(u.character(g.find("(132)")), Complex(-1.0));
}

TEST(YoungYamanouchi, StandardRepresentationGenerators) {
  const IrrepCatalog cat = builtin_catalog("s4");
  const Irrep& u = cat.at("(3,1)");
  const FiniteGroup& g = cat.group();
  const double r3 = std::sqrt(3.0) / 2, r8 = std::sqrt(8.0) / 3;
  RealMatrix p12(3, 3), p23(3, 3), p34(3, 3);
  p12 << 1, 0, 0, 0, 1, 0, 0, 0, -1;
  p23 << 1, 0, 0, 0, -0.5, r3, 0, r3, 0.5;
  p34 << -1.0 / 3, r8, 0, r8, 1.0 / 3, 0, 0, 0, 1;
  EXPECT_LT(max_abs(u(g.find("(12)")) - p12.cast<Complex>()), 1e-15);
  EXPECT_LT(max_abs(u(g.find("(23)")) - p23.cast<Complex>()), 1e-15);
  EXPECT_LT(max_abs(u(g.find("(34)")) - p34.cast<Complex>()), 1e-15);
}

TEST(YoungYamanouchi, DimensionsAndTrivialIrreps) {
  const IrrepCatalog cat = builtin_catalog("s4");
  const std::size_t dims[] = {1, 3, 2, 3, 1};
  for (std::size_t k = 0; k < cat.size(); ++k) EXPECT_EQ(cat[k].dim(), dims[k]);
  EXPECT_EQ(cat.at("(2,2)").character(cat.group().identity()), Complex(2.0));
  for (Element x = 0; x < 24; ++x) {
    EXPECT_EQ(cat.at("id")(x)(0, 0), Complex(1.0));
    EXPECT_EQ(cat.at("(4)")(x)(0, 0), Complex(1.0));
  }
  EXPECT_EQ(cat.at("(1,1,1,1)").label(), "sgn");
}

TEST(YoungYamanouchi, RejectsBadPartitions) {
  const GroupPtr s4 = make_symmetric_group(4);
  EXPECT_THROW(s4_young_yamanouchi_irrep(s4, {3, 2}), DomainError);
  EXPECT_THROW(s4_young_yamanouchi_irrep(s4, {1, 3}), DomainError);
  EXPECT_THROW(builtin_catalog("s4").index_of("(5)"), DomainError);
  EXPECT_THROW(parse_partition("3,x"), DomainError);
}

TEST(QuaternionIrreps, TableEntriesAndRelations) {
  const IrrepCatalog cat = builtin_catalog("q8");
  const FiniteGroup& g = cat.group();
  EXPECT_EQ(cat.at("t4").character(g.find("-Q_e")), Complex(-2.0));
  EXPECT_EQ(cat.at("t1").character(g.find("Q_1")), Complex(-1.0));
  const Matrix& q2 = cat.at("t4")(g.find("Q_2"));
  EXPECT_LT(max_abs(q2 * q2 + Matrix::Identity(2, 2)), 1e-15);
  const Complex i(0, 1);
  EXPECT_LT(max_abs(cat.at("t4")(g.find("Q_1")) - mat2(i, 0, 0, -i)), 1e-15);
  EXPECT_LT(max_abs(cat.at("t4")(g.find("Q_3")) - mat2(0, i, i, 0)), 1e-15);
  EXPECT_THROW(quaternion_irrep(cat.group_ptr(), "t5"), DomainError);
}

TEST(Catalog, RegistryOrderAndAliases) {
  EXPECT_EQ(builtin_catalog("s3").at("lambda").label(), "(2,1)");
  EXPECT_EQ(builtin_catalog("s3").at("2,1").label(), "(2,1)");
  EXPECT_EQ(builtin_catalog("s4").at("lambda3").label(), "(2,1,1)");
  EXPECT_EQ(builtin_catalog("s4").at("3,1").label(), "(3,1)");
  const char* s4_order[] = {"id", "(3,1)", "(2,2)", "(2,1,1)", "sgn"};
  const IrrepCatalog s4 = builtin_catalog("s4");
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(s4[k].label(), s4_order[k]);
  const char* q_order[] = {"id", "t1", "t2", "t3", "t4"};
  const IrrepCatalog q8 = builtin_catalog("q8");
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(q8[k].label(), q_order[k]);
  EXPECT_THROW(builtin_catalog("d4"), DomainError);
}

// Every built-in irrep passes the homomorphism, unitarity and
// irreducibility checks.
TEST(IrrepProperties, Validity) {
  for (const auto& id : builtin_group_ids()) {
    for (const Irrep& irrep : builtin_catalog(id)) {
      const IrrepCheck c = check_irrep(irrep);
      EXPECT_TRUE(c.homomorphism && c.unitary && c.irreducible)
          << id << " " << irrep.label();
      EXPECT_LT(c.homomorphism_residual, 1e-12);
      EXPECT_LT(c.unitarity_residual, 1e-12);
      EXPECT_NEAR(c.character_norm, 1.0, 1e-12);
    }
  }
}

TEST(IrrepProperties, SchurOrthogonality) {
  for (const auto& id : builtin_group_ids()) {
    if (id == "s5") continue;  // 7^2 pairs of up to 6x6 blocks; covered below
    const IrrepCatalog cat = builtin_catalog(id);
    const FiniteGroup& g = cat.group();
    const double order = static_cast<double>(g.order());
    for (std::size_t a = 0; a < cat.size(); ++a) {
      for (std::size_t b = 0; b < cat.size(); ++b) {
        const Irrep &pa = cat[a], &pb = cat[b];
        const auto da = static_cast<Eigen::Index>(pa.dim());
        const auto db = static_cast<Eigen::Index>(pb.dim());
        for (Eigen::Index i = 0; i < da; ++i)
          for (Eigen::Index j = 0; j < da; ++j)
            for (Eigen::Index k = 0; k < db; ++k)
              for (Eigen::Index l = 0; l < db; ++l) {
                Complex sum = 0.0;
                for (Element x = 0; x < g.order(); ++x)
                  sum += pa(g.inverse(x))(i, j) * pb(x)(k, l);
                const double expected =
                    (a == b && j == k && i == l) ? order / static_cast<double>(da)
                                                 : 0.0;
                ASSERT_LT(std::abs(sum - Complex(expected)), 1e-10)
                    << id << " " << pa.label() << " " << pb.label();
              }
      }
    }
  }
}

TEST(IrrepProperties, CharacterRelations) {
  for (const auto& id : builtin_group_ids()) {
    const IrrepCatalog cat = builtin_catalog(id);
    const FiniteGroup& g = cat.group();
    const double order = static_cast<double>(g.order());
    for (Element h = 0; h < g.order(); ++h) {
      for (Element x = 0; x < g.order(); ++x) {
        Complex sum = 0.0;
        for (const Irrep& a : cat) sum += a.character(h) * a.character(g.inverse(x));
        const double expected =
            g.class_of(h) == g.class_of(x)
                ? order / static_cast<double>(g.classes()[g.class_of(h)].size())
                : 0.0;
        ASSERT_LT(std::abs(sum - Complex(expected)), 1e-10);
      }
    }
    for (std::size_t k = 0; k < cat.size(); ++k) {
      Complex sum = 0.0;
      for (Element x = 0; x < g.order(); ++x)
        sum += cat[k].character(g.inverse(x));
      EXPECT_LT(std::abs(sum / order - Complex(k == 0 ? 1.0 : 0.0)), 1e-12);
    }
    for (const Irrep& a : cat)
      for (Element x = 0; x < g.order(); ++x)
        EXPECT_EQ(a.character(x).imag(), 0.0) << id << " characters are real";
  }
}

TEST(IrrepProperties, CharacterTableMatchesIrreps) {
  const IrrepCatalog cat = builtin_catalog("s4");
  const CharacterTable table = cat.character_table();
  for (std::size_t k = 0; k < cat.size(); ++k)
    for (Element x = 0; x < 24; ++x)
      EXPECT_EQ(table.value(k, x), cat[k].character(x));
}

TEST(IrrepProperties, AdjointCharacter) {
  for (const auto& id : builtin_group_ids()) {
    for (const Irrep& u : builtin_catalog(id)) {
      for (Element x = 0; x < u.group().order(); ++x) {
        const Complex tr = kron(u(x), u(x).conjugate()).trace();
        EXPECT_LT(std::abs(tr - std::norm(u.character(x))), 1e-12);
      }
    }
  }
}

TEST(Multiplicity, Examples) {
  const IrrepCatalog s3 = builtin_catalog("s3");
  for (const char* a : {"id", "sgn", "(2,1)"})
    EXPECT_EQ(multiplicity(s3.at(a), s3.at("(2,1)")), 1);
  const IrrepCatalog s4 = builtin_catalog("s4");
  EXPECT_EQ(multiplicity(s4.at("sgn"), s4.at("(3,1)")), 0);
  for (const auto& id : builtin_group_ids()) {
    const IrrepCatalog cat = builtin_catalog(id);
    for (const Irrep& u : cat) EXPECT_EQ(multiplicity(cat[0], u), 1);
  }
}

TEST(Decompose, Examples) {
  const IrrepCatalog q8 = builtin_catalog("q8");
  const ThetaSet tq = decompose_adjoint(q8, q8.at("t4"));
  EXPECT_EQ(tq.members, (std::vector<std::string>{"id", "t1", "t2", "t3"}));
  EXPECT_EQ(commutant_dimension(q8.at("t4")), 4);

  const IrrepCatalog s4 = builtin_catalog("s4");
  EXPECT_EQ(decompose_adjoint(s4, s4.at("(2,2)")).size(), 3u);
  EXPECT_EQ(decompose_adjoint(s4, s4.at("(3,1)")).members,
            (std::vector<std::string>{"id", "(3,1)", "(2,2)", "(2,1,1)"}));
  EXPECT_EQ(commutant_dimension(builtin_catalog("s3").at("(2,1)")), 3);
  for (const auto& id : builtin_group_ids()) {
    const IrrepCatalog cat = builtin_catalog(id);
    for (const Irrep& u : cat)
      if (u.dim() == 1) {
        EXPECT_EQ(commutant_dimension(u), 1);
      }
  }
}

// Theta always contains id first and its dimensions add up to |U|^2
// whenever the decomposition is multiplicity-free.
TEST(Decompose, DimensionSumAndGate) {
  int rejected = 0;
  for (const auto& id : builtin_group_ids()) {
    const IrrepCatalog cat = builtin_catalog(id);
    for (const Irrep& u : cat) {
      try {
        const ThetaSet theta = decompose_adjoint(cat, u);
        std::size_t sum = 0;
        for (std::size_t d : theta.dims) sum += d;
        EXPECT_EQ(sum, u.dim() * u.dim()) << id << " " << u.label();
        EXPECT_EQ(theta.members.front(), "id");
        EXPECT_EQ(static_cast<int>(theta.size()), commutant_dimension(u));
      } catch (const NotSimplyReducible& e) {
        ++rejected;
        EXPECT_EQ(id, "s5");
        EXPECT_GE(e.multiplicity(), 2);
        EXPECT_EQ(e.code(), "NOT_SIMPLY_REDUCIBLE");
      }
    }
  }
  EXPECT_GT(rejected, 0) << "S(5) has irreps with multiplicities";
}

TEST(Decompose, S5SimplyReducibleCases) {
  const IrrepCatalog s5 = builtin_catalog("s5");
  for (const char* ok : {"(4,1)", "(3,2)", "(2,2,1)", "(2,1,1,1)"})
    EXPECT_NO_THROW(decompose_adjoint(s5, s5.at(ok))) << ok;
  try {
    decompose_adjoint(s5, s5.at("(3,1,1)"));
    FAIL() << "expected NotSimplyReducible";
  } catch (const NotSimplyReducible& e) {
    EXPECT_NE(e.irrep(), "id");
    EXPECT_GE(e.multiplicity(), 2);
  }
}

}  // namespace
}  // namespace covch
