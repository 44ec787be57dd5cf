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

#include <stdexcept>
#include <string>

namespace covch {

/// Base class for every error raised by the library. `code()` is a stable
/// machine-readable identifier used by the CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Precondition violated by the caller (bad size, unknown label, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("DOMAIN_ERROR", message) {}
};

/// Some irrep occurs in U (x) U^c with multiplicity two or more.
class NotSimplyReducible : public Error {
 public:
  NotSimplyReducible(const std::string& irrep, int multiplicity)
      : Error("NOT_SIMPLY_REDUCIBLE",
              "irrep " + irrep + " occurs with multiplicity " +
                  std::to_string(multiplicity)),
        irrep_(irrep),
        multiplicity_(multiplicity) {}

  const std::string& irrep() const noexcept { return irrep_; }
  int multiplicity() const noexcept { return multiplicity_; }

 private:
  std::string irrep_;
  int multiplicity_;
};

class NotTracePreserving : public Error {
 public:
  explicit NotTracePreserving(double l_id)
      : Error("NOT_TP", "eigenvalue of the identity irrep is " +
                            std::to_string(l_id) + ", expected 1"),
        l_id_(l_id) {}

  double l_id() const noexcept { return l_id_; }

 private:
  double l_id_;
};

/// A Choi eigenvalue is negative. The witness names the offending (beta, i);
/// `index()` is zero-based, the message counts from one.
class NotCompletelyPositive : public Error {
 public:
  NotCompletelyPositive(std::string beta, int i, double value)
      : Error("NOT_CP", "Choi eigenvalue epsilon_" + std::to_string(i + 1) + "^" +
                            beta + " = " + std::to_string(value) +
                            " is negative"),
        beta_(std::move(beta)),
        i_(i),
        value_(value) {}

  const std::string& beta() const noexcept { return beta_; }
  int index() const noexcept { return i_; }
  double value() const noexcept { return value_; }

 private:
  std::string beta_;
  int i_;
  double value_;
};

/// An epsilon vector lies outside the column space of the mu-matrix.
class NotInSubspace : public Error {
 public:
  explicit NotInSubspace(double residual)
      : Error("NOT_IN_SUBSPACE", "epsilon vector has residual " +
                                     std::to_string(residual) +
                                     " against the column space of M"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class NormalizationError : public Error {
 public:
  explicit NormalizationError(const std::string& message)
      : Error("NORMALIZATION", message) {}
};

class ClassSumNegative : public Error {
 public:
  ClassSumNegative(int class_index, double sum)
      : Error("CLASS_SUM_NEGATIVE", "class " + std::to_string(class_index) +
                                        " has negative sum " +
                                        std::to_string(sum)),
        class_index_(class_index),
        sum_(sum) {}

  int class_index() const noexcept { return class_index_; }
  double sum() const noexcept { return sum_; }

 private:
  int class_index_;
  double sum_;
};

/// A numerical identity that must hold by construction failed.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error("INTERNAL", message) {}
};

}  // namespace covch
