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

#include <array>
#include <string>
#include <vector>

#include "covch/linalg.hpp"

namespace covch::cli {

/// One (group, irrep) pair with a multiplicity-free adjoint square.
struct BuiltinCase {
  std::string group;
  std::string irrep;
};

/// Every built-in multiplicity-free case with |U| >= 2.
std::vector<BuiltinCase> builtin_cases();

/// Quaternion characters, rows id, t1..t4, columns in element order
/// Q_e, -Q_e, Q_1, Q_2, Q_3, -Q_1, -Q_2, -Q_3.
std::array<std::array<int, 8>, 5> quaternion_character_table();

RealMatrix q8_m_reference();
RealMatrix s3_m_reference();

Matrix s3_choi_reference(double l_sgn, double l_lambda);
Matrix q8_choi_reference(double l1, double l2, double l3);
/// 9 x 9 matrix representation for S(4), (3,1).
Matrix s4_superoperator_reference(double l1, double l2, double l3);
/// Choi eigenvalues for S(4), (3,1) in entry order id, (3,1)x3, (2,2)x2,
/// (2,1,1)x3.
RealVector s4_epsilon_reference(double l1, double l2, double l3);

struct LabeledMatrix {
  std::string beta;
  std::size_t i = 0;  // zero-based
  double epsilon = 0.0;
  Matrix k;           // including the sqrt(epsilon) prefactor
};

std::vector<LabeledMatrix> s3_kraus_reference(double l_sgn, double l_lambda);
std::vector<LabeledMatrix> q8_kraus_reference(double l1, double l2, double l3);
std::vector<LabeledMatrix> s4_kraus_reference(double l1, double l2,
                                              double l3);

/// CPTP and entanglement-breaking inequalities with slack `tau`.
bool s3_cptp_reference(double l_sgn, double l_lambda, double tau);
bool s3_eb_reference(double l_sgn, double l_lambda, double tau);
bool q8_cptp_reference(double l1, double l2, double l3, double tau);
bool q8_ppt_reference(double l1, double l2, double l3, double tau);

/// Max entrywise distance between two matrices after removing the best
/// global unit phase; infinity for mismatched shapes.
double phase_distance(const Matrix& a, const Matrix& b);

}  // namespace covch::cli
