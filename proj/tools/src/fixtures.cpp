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

#include "covch/cli/fixtures.hpp"

#include <cmath>
#include <limits>

namespace covch::cli {

std::vector<BuiltinCase> builtin_cases() {
  return {{"s3", "(2,1)"},
          {"q8", "t4"},
          {"s4", "(3,1)"},
          {"s4", "(2,2)"},
          {"s4", "(2,1,1)"}};
}

std::array<std::array<int, 8>, 5> quaternion_character_table() {
  return {{{1, 1, 1, 1, 1, 1, 1, 1},
           {1, 1, -1, 1, -1, -1, 1, -1},
           {1, 1, 1, -1, -1, 1, -1, -1},
           {1, 1, -1, -1, 1, -1, -1, 1},
           {2, -2, 0, 0, 0, 0, 0, 0}}};
}

RealMatrix q8_m_reference() {
  RealMatrix m(4, 4);
  m << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
  return m / 2.0;
}

RealMatrix s3_m_reference() {
  RealMatrix m(4, 3);
  m << 1, 1, 2, 1, 1, -2, 1, -1, 0, 1, -1, 0;
  return m / 2.0;
}

Matrix s3_choi_reference(double ls, double ll) {
  Matrix j = Matrix::Zero(4, 4);
  j(0, 0) = j(3, 3) = 0.5 * (1 + ls);
  j(1, 1) = j(2, 2) = 0.5 * (1 - ls);
  j(0, 3) = j(3, 0) = ll;
  return j;
}

Matrix q8_choi_reference(double l1, double l2, double l3) {
  Matrix j = Matrix::Zero(4, 4);
  j(0, 0) = j(3, 3) = 1 + l2;
  j(1, 1) = j(2, 2) = 1 - l2;
  j(0, 3) = j(3, 0) = l1 + l3;
  j(1, 2) = j(2, 1) = l3 - l1;
  return j / 2.0;
}

Matrix s4_superoperator_reference(double l1, double l2, double l3) {
  const double a1 = (1 + 2 * l1) / 3;
  const double a2 = (1 - l1) / 3;
  const double a3 = (l1 + 2 * l2 + 3 * l3) / 6;
  const double a4 = (l1 + 2 * l2 - 3 * l3) / 6;
  const double a5 = (l2 - l1) / (3 * std::sqrt(2.0));
  const double a6 = (2 + 3 * l1 + l2) / 6;
  const double a7 = (2 - l1 - l2) / 6;
  const double a8 = (2 * l1 + l2 + 3 * l3) / 6;
  const double a9 = (2 * l1 + l2 - 3 * l3) / 6;
  RealMatrix m(9, 9);
  // clang-format off
  m << a1,  0,   0,   0,  a2,   0,   0,   0,  a2,
        0, a3,   0,  a4,  a5,   0,   0,   0, -a5,
        0,  0,  a3,   0,   0, -a5,  a4, -a5,   0,
        0, a4,   0,  a3,  a5,   0,   0,   0, -a5,
       a2, a5,   0,  a5,  a6,   0,   0,   0,  a7,
        0,  0, -a5,   0,   0,  a8, -a5,  a9,   0,
        0,  0,  a4,   0,   0, -a5,  a3, -a5,   0,
        0,  0, -a5,   0,   0,  a9, -a5,  a8,   0,
       a2, -a5,  0, -a5,  a7,   0,   0,   0,  a6;
  // clang-format on
  return m.cast<Complex>();
}

RealVector s4_epsilon_reference(double l1, double l2, double l3) {
  RealVector e(9);
  const double e1 = (2 + 3 * l1 - 2 * l2 - 3 * l3) / 6;
  const double e2 = (2 - 3 * l1 + 4 * l2 - 3 * l3) / 6;
  const double e3 = (2 - 3 * l1 - 2 * l2 + 3 * l3) / 6;
  e << (1 + 3 * l1 + 2 * l2 + 3 * l3) / 3, e1, e1, e1, e2, e2, e3, e3, e3;
  return e;
}

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

LabeledMatrix labeled(std::string beta, std::size_t i, double eps,
                      const Matrix& shape) {
  return {std::move(beta), i, eps, std::sqrt(std::max(eps, 0.0)) * shape};
}

}  // namespace

std::vector<LabeledMatrix> s3_kraus_reference(double ls, double ll) {
  const double r = 1 / std::sqrt(2.0);
  const double e_lambda = 0.5 * (1 - ls);
  return {labeled("(2,1)", 0, e_lambda, from_rows({{0, 0}, {1, 0}})),
          labeled("(2,1)", 1, e_lambda, from_rows({{0, 1}, {0, 0}})),
          labeled("sgn", 0, 0.5 * (1 + ls - 2 * ll),
                  from_rows({{-r, 0}, {0, r}})),
          labeled("id", 0, 0.5 * (1 + ls + 2 * ll),
                  from_rows({{r, 0}, {0, r}}))};
}

std::vector<LabeledMatrix> q8_kraus_reference(double l1, double l2,
                                              double l3) {
  const double r = 1 / std::sqrt(2.0);
  return {labeled("t1", 0, 0.5 * (1 + l1 - l2 - l3),
                  from_rows({{0, r}, {-r, 0}})),
          labeled("t2", 0, 0.5 * (1 - l1 + l2 - l3),
                  from_rows({{-r, 0}, {0, r}})),
          labeled("t3", 0, 0.5 * (1 - l1 - l2 + l3),
                  from_rows({{0, r}, {r, 0}})),
          labeled("id", 0, 0.5 * (1 + l1 + l2 + l3),
                  from_rows({{r, 0}, {0, r}}))};
}

std::vector<LabeledMatrix> s4_kraus_reference(double l1, double l2,
                                              double l3) {
  const RealVector e = s4_epsilon_reference(l1, l2, l3);
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  return {
      labeled("(3,1)", 0, e(1),
              from_rows({{-2.0 / 3, 1 / (3 * s2), 0},
                         {1 / (3 * s2), 0, 0},
                         {0, 0, 2.0 / 3}})),
      labeled("(3,1)", 1, e(2),
              from_rows({{0, 0, 1 / s6}, {0, 0, 1 / s3}, {1 / s6, 1 / s3, 0}})),
      labeled("(3,1)", 2, e(3),
              from_rows({{-s2 / 3, -1.0 / 3, 0},
                         {-1.0 / 3, 1 / s2, 0},
                         {0, 0, -1 / (3 * s2)}})),
      labeled("(2,2)", 0, e(4),
              from_rows(
                  {{0, -1 / s3, 0}, {-1 / s3, -1 / s6, 0}, {0, 0, 1 / s6}})),
      labeled("(2,2)", 1, e(5),
              from_rows(
                  {{0, 0, -1 / s3}, {0, 0, 1 / s6}, {-1 / s3, 1 / s6, 0}})),
      labeled("(2,1,1)", 0, e(6),
              from_rows({{0, 0, 0}, {0, 0, -1 / s2}, {0, 1 / s2, 0}})),
      labeled("(2,1,1)", 1, e(7),
              from_rows({{0, 0, -1 / s2}, {0, 0, 0}, {1 / s2, 0, 0}})),
      labeled("(2,1,1)", 2, e(8),
              from_rows({{0, -1 / s2, 0}, {1 / s2, 0, 0}, {0, 0, 0}})),
      labeled("id", 0, e(0),
              from_rows({{1 / s3, 0, 0}, {0, 1 / s3, 0}, {0, 0, 1 / s3}})),
  };
}

bool s3_cptp_reference(double ls, double ll, double tau) {
  return ls <= 1 + tau && ls >= -1 - tau &&
         0.5 * (1 + ls) - std::abs(ll) >= -tau;
}

bool s3_eb_reference(double ls, double ll, double tau) {
  if (ls >= -1 - tau && ls <= 0) return std::abs(ll) <= 0.5 * (1 + ls) + tau;
  if (ls > 0 && ls <= 1 + tau) return std::abs(ll) <= 0.5 * (1 - ls) + tau;
  return false;
}

bool q8_cptp_reference(double l1, double l2, double l3, double tau) {
  return 0.5 * (1 + l1 - l2 - l3) >= -tau && 0.5 * (1 - l1 + l2 - l3) >= -tau &&
         0.5 * (1 - l1 - l2 + l3) >= -tau && 0.5 * (1 + l1 + l2 + l3) >= -tau;
}

bool q8_ppt_reference(double l1, double l2, double l3, double tau) {
  return 0.5 * (1 - l1 - l2 - l3) >= -tau && 0.5 * (1 + l1 + l2 - l3) >= -tau &&
         0.5 * (1 + l1 - l2 + l3) >= -tau && 0.5 * (1 - l1 + l2 + l3) >= -tau;
}

double phase_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return max_abs(a - phase * b);
}

}  // namespace covch::cli
