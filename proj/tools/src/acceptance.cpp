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

#include "covch/cli/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "covch/channel.hpp"
#include "covch/cli/fixtures.hpp"
#include "covch/cli/region.hpp"
#include "covch/cli/sampling.hpp"
#include "covch/error.hpp"
#include "covch/tolerance.hpp"

namespace covch::cli {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

SpacePtr space_for(const BuiltinCase& c) {
  return ChannelSpace::create(builtin_catalog(c.group), c.irrep);
}

std::string case_name(const BuiltinCase& c) {
  return c.group + "/" + c.irrep;
}

EigenvalueVector eigenvalues_of(const ChannelSpace& space,
                                std::initializer_list<double> rest) {
  EigenvalueVector l;
  l.labels = space.theta().members;
  l.values.resize(static_cast<Eigen::Index>(l.labels.size()));
  l.values(0) = 1.0;
  Eigen::Index k = 1;
  for (double v : rest) l.values(k++) = v;
  return l;
}

/// Grid {0, +-1/2, +-1}^k.
std::vector<std::vector<double>> spot_points(std::size_t k) {
  const double vals[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  std::vector<std::vector<double>> out{{}};
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<std::vector<double>> next;
    for (const auto& p : out)
      for (double v : vals) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

CriterionResult character_table(std::uint64_t) {
  CriterionResult r{1, "quaternion character table", true, ""};
  const IrrepCatalog cat = builtin_catalog("q8");
  const auto table = quaternion_character_table();
  const char* rows[] = {"id", "t1", "t2", "t3", "t4"};
  int mismatches = 0;
  for (int a = 0; a < 5; ++a) {
    const Irrep& irrep = cat.at(rows[a]);
    for (Element g = 0; g < 8; ++g) {
      const Complex chi = irrep.character(g);
      if (chi.real() != static_cast<double>(table[a][g]) || chi.imag() != 0.0)
        ++mismatches;
    }
  }
  r.passed = mismatches == 0;
  r.detail = std::to_string(40 - mismatches) + "/40 entries exact";
  return r;
}

CriterionResult commutant_dimensions(std::uint64_t) {
  CriterionResult r{2, "commutant dimensions", true, ""};
  const std::vector<std::pair<BuiltinCase, int>> expected = {
      {{"s3", "(2,1)"}, 3},
      {{"s4", "(2,2)"}, 3},
      {{"s4", "(3,1)"}, 4},
      {{"q8", "t4"}, 4}};
  std::ostringstream d;
  for (const auto& [c, dim] : expected) {
    const IrrepCatalog cat = builtin_catalog(c.group);
    const Irrep& u = cat.at(c.irrep);
    const int moment = commutant_dimension(u);
    const int theta = static_cast<int>(decompose_adjoint(cat, u).size());
    if (moment != dim || theta != dim) r.passed = false;
    d << case_name(c) << "=" << moment << "/" << theta << " ";
  }
  r.detail = d.str();
  return r;
}

CriterionResult m_matrix(std::uint64_t) {
  CriterionResult r{3, "M matrix", true, ""};
  const auto q = ChannelSpace::create(builtin_catalog("q8"), "t4");
  const auto s = ChannelSpace::create(builtin_catalog("s3"), "(2,1)");
  const double eq = (q->mu().m - q8_m_reference()).cwiseAbs().maxCoeff();
  const double es = (s->mu().m - s3_m_reference()).cwiseAbs().maxCoeff();
  r.passed = eq <= 1e-12 && es <= 1e-12;
  r.detail = "q8 " + sci(eq) + ", s3 " + sci(es);
  return r;
}

CriterionResult choi_matrices(std::uint64_t seed) {
  CriterionResult r{4, "Choi matrices", true, ""};
  Sampler rng(seed);
  double brute = 0.0, spectrum = 0.0, trace = 0.0, spot = 0.0;
  for (const auto& c : builtin_cases()) {
    const SpacePtr space = space_for(c);
    const double n = static_cast<double>(space->dim());
    for (int trial = 0; trial < 100; ++trial) {
      const EigenvalueVector l =
          rng.eigenvalues(space->theta(), kGridLow, kGridHigh);
      const Matrix j = choi_image(space->basis(), l);
      brute = std::max(brute, max_abs(j - brute_force_choi(space->catalog(),
                                                           space->irrep(), l)));
      RealVector numeric = hermitian_eigenvalues(j);
      RealVector eps = epsilon_from_L(space->mu(), l).values;
      std::sort(numeric.begin(), numeric.end());
      std::sort(eps.begin(), eps.end());
      spectrum = std::max(spectrum, (numeric - eps).cwiseAbs().maxCoeff());
      trace = std::max(trace, std::abs(j.trace() - Complex(n)));
    }
  }
  const auto s3 = ChannelSpace::create(builtin_catalog("s3"), "(2,1)");
  for (const auto& p : spot_points(2)) {
    const Matrix j = choi_image(s3->basis(), eigenvalues_of(*s3, {p[0], p[1]}));
    spot = std::max(spot, max_abs(j - s3_choi_reference(p[0], p[1])));
  }
  const auto q8 = ChannelSpace::create(builtin_catalog("q8"), "t4");
  const auto s4 = ChannelSpace::create(builtin_catalog("s4"), "(3,1)");
  for (const auto& p : spot_points(3)) {
    const Matrix jq =
        choi_image(q8->basis(), eigenvalues_of(*q8, {p[0], p[1], p[2]}));
    spot = std::max(spot, max_abs(jq - q8_choi_reference(p[0], p[1], p[2])));
    const Matrix js =
        choi_image(s4->basis(), eigenvalues_of(*s4, {p[0], p[1], p[2]}));
    spot = std::max(
        spot, max_abs(js - choi_from_superoperator(
                               s4_superoperator_reference(p[0], p[1], p[2]))));
  }
  r.passed = brute <= 1e-10 && spectrum <= 1e-9 && trace <= 1e-12 &&
             spot <= 1e-10;
  r.detail = "brute " + sci(brute) + ", spectrum " + sci(spectrum) +
             ", trace " + sci(trace) + ", displays " + sci(spot);
  return r;
}

/// Labeled comparison up to a per-operator phase. Operators whose
/// reference epsilon vanishes must be absent.
double kraus_distance_labeled(const CovariantChannel& ch,
                              const std::vector<LabeledMatrix>& ref) {
  double worst = 0.0;
  std::size_t expected = 0;
  for (const auto& op : ref) {
    const auto it =
        std::find_if(ch.kraus().begin(), ch.kraus().end(), [&](const auto& k) {
          return k.key.beta == op.beta && k.key.i == op.i;
        });
    if (op.epsilon <= kZeroTolerance) {
      if (it != ch.kraus().end()) worst = std::max(worst, max_abs(it->k));
      continue;
    }
    ++expected;
    if (it == ch.kraus().end()) return INFINITY;
    worst = std::max(worst, phase_distance(it->k, op.k));
  }
  if (expected != ch.kraus().size()) return INFINITY;
  return worst;
}

CriterionResult kraus_fidelity(std::uint64_t seed) {
  CriterionResult r{5, "Kraus fidelity", true, ""};
  Sampler rng(seed);
  double action = 0.0, completeness = 0.0, s3_set = 0.0, q8_set = 0.0;
  for (const auto& c : builtin_cases()) {
    const SpacePtr space = space_for(c);
    const auto n = static_cast<Eigen::Index>(space->dim());
    std::vector<EigenvalueVector> samples;
    for (int trial = 0; trial < 50; ++trial)
      samples.push_back(rng.feasible_eigenvalues(*space));
    // Vertices and edges exercise the zero-epsilon omission.
    if (c.group == "s3") {
      for (auto [a, b] : {std::pair{-1.0, 0.0}, {1.0, 1.0}, {1.0, -1.0},
                          {0.0, 0.5}})
        samples.push_back(eigenvalues_of(*space, {a, b}));
    } else if (c.group == "q8") {
      for (auto [a, b, d] :
           {std::tuple{1.0, 1.0, 1.0}, {1.0, -1.0, -1.0}, {-1.0, 1.0, -1.0},
            {-1.0, -1.0, 1.0}, {0.0, 0.0, 0.0}})
        samples.push_back(eigenvalues_of(*space, {a, b, d}));
    }
    for (const auto& l : samples) {
      const CovariantChannel ch = build_channel(space, l);
      Matrix sum = Matrix::Zero(n, n);
      for (const auto& k : ch.kraus()) sum += k.k.adjoint() * k.k;
      completeness =
          std::max(completeness, max_abs(sum - Matrix::Identity(n, n)));
      for (int k = 0; k < 20; ++k) {
        const Matrix rho = rng.density_matrix(space->dim());
        action = std::max(action,
                          max_abs(ch.apply(rho) - ch.apply_superoperator(rho)));
      }
      const RealVector& v = l.values;
      if (c.group == "s3")
        s3_set = std::max(s3_set, kraus_distance_labeled(
                                      ch, s3_kraus_reference(v(1), v(2))));
      else if (c.group == "q8")
        q8_set = std::max(
            q8_set,
            kraus_distance_labeled(ch, q8_kraus_reference(v(1), v(2), v(3))));
    }
  }
  r.passed = action <= 1e-10 && completeness <= 1e-10 && s3_set <= 1e-10 &&
             q8_set <= 1e-10;
  r.detail = "action " + sci(action) + ", completeness " + sci(completeness) +
             ", s3 set " + sci(s3_set) + ", q8 set " + sci(q8_set);
  return r;
}

CriterionResult covariance(std::uint64_t seed) {
  CriterionResult r{6, "covariance", true, ""};
  Sampler rng(seed);
  double worst = 0.0;
  for (const auto& c : builtin_cases()) {
    const SpacePtr space = space_for(c);
    const Irrep& u = space->irrep();
    const FiniteGroup& g = space->group();
    for (int trial = 0; trial < 20; ++trial) {
      const CovariantChannel ch =
          build_channel(space, rng.feasible_eigenvalues(*space));
      worst = std::max(worst, covariance_residual(ch.superoperator(), u));
      for (int k = 0; k < 20; ++k) {
        const Matrix x = rng.complex_matrix(space->dim());
        const Matrix phi_x = ch.apply_kraus(x);
        for (Element h = 0; h < g.order(); ++h) {
          const Matrix lhs = ch.apply_kraus(u(h) * x * u(h).adjoint());
          worst = std::max(
              worst, operator_norm(lhs - u(h) * phi_x * u(h).adjoint()));
        }
      }
    }
  }
  r.passed = worst < 1e-10;
  r.detail = "max residual " + sci(worst);
  return r;
}

double commutant_properties(const CommutantBasis& b) {
  const Irrep& u = b.irrep();
  const auto n = static_cast<Eigen::Index>(u.dim());
  const Matrix id_n2 = Matrix::Identity(n * n, n * n);
  const auto& theta = b.theta();
  double worst = 0.0;
  auto track = [&](double v) { worst = std::max(worst, v); };

  Matrix total = Matrix::Zero(n * n, n * n);
  for (std::size_t a = 0; a < theta.size(); ++a) {
    const Matrix& pa = b.projector(a);
    total += pa;
    track(max_abs(pa - pa.adjoint()));
    track(std::abs(pa.trace() - Complex(static_cast<double>(theta.dims[a]))));
    for (std::size_t c = 0; c < theta.size(); ++c)
      track(max_abs(pa * b.projector(c) - (a == c ? pa : Matrix::Zero(n * n, n * n))));
  }
  track(max_abs(total - id_n2));

  const auto& entries = b.entries();
  std::vector<Matrix> fine_sum(theta.size(), Matrix::Zero(n * n, n * n));
  for (std::size_t p = 0; p < entries.size(); ++p) {
    const auto& e = entries[p];
    fine_sum[e.theta_pos] += e.proj_fine;
    track(std::abs(e.proj_fine.trace() - Complex(1.0)));
    track(std::abs(e.eigen.v.norm() - 1.0));
    track(max_abs(e.proj_fine * vectorize(e.eigen.v) - vectorize(e.eigen.v)));
    for (std::size_t q = 0; q < entries.size(); ++q) {
      const Matrix prod = e.proj_fine * entries[q].proj_fine;
      track(max_abs(prod - (p == q ? e.proj_fine : Matrix::Zero(n * n, n * n))));
      const Complex ip = entries[q].basis_vector.dot(e.basis_vector);
      track(std::abs(ip - Complex(p == q ? 1.0 : 0.0)));
    }
  }
  for (std::size_t a = 0; a < theta.size(); ++a)
    track(max_abs(fine_sum[a] - b.projector(a)));

  // Summation rules over the unnormalized eigenmatrices.
  for (Eigen::Index s = 0; s < n; ++s) {
    for (Eigen::Index t = 0; t < n; ++t) {
      Matrix sum = Matrix::Zero(n, n);
      for (const auto& e : entries) {
        const Matrix raw = eigenmatrix_raw(u, b.theta_irrep(e.theta_pos), e.i,
                                           static_cast<std::size_t>(s),
                                           static_cast<std::size_t>(t));
        sum += raw;
        const Complex expected_trace =
            (e.theta_pos == 0 && s == t) ? Complex(1.0) : Complex(0.0);
        track(std::abs(raw.trace() - expected_trace));
        track(std::abs(raw.squaredNorm() - e.proj_fine(s * n + t, s * n + t).real()));
      }
      Matrix est = Matrix::Zero(n, n);
      est(s, t) = 1.0;
      track(max_abs(sum - est));
    }
  }
  for (const auto& e : entries) {
    const Irrep& beta = b.theta_irrep(e.theta_pos);
    Matrix diag = Matrix::Zero(n, n);
    double norm_total = 0.0;
    for (Eigen::Index s = 0; s < n; ++s) {
      diag += eigenmatrix_raw(u, beta, e.i, static_cast<std::size_t>(s),
                              static_cast<std::size_t>(s));
      for (Eigen::Index t = 0; t < n; ++t)
        norm_total += eigenmatrix_raw(u, beta, e.i, static_cast<std::size_t>(s),
                                      static_cast<std::size_t>(t))
                          .squaredNorm();
    }
    const Matrix expected =
        e.theta_pos == 0 ? Matrix(Matrix::Identity(n, n)) : Matrix(Matrix::Zero(n, n));
    track(max_abs(diag - expected));
    track(std::abs(norm_total - 1.0));
  }

  return worst;
}

double vanishing_outside_theta(const IrrepCatalog& cat, const CommutantBasis& b) {
  const Irrep& u = b.irrep();
  const auto n = static_cast<std::size_t>(u.dim());
  double worst = 0.0;
  for (std::size_t k = 0; k < cat.size(); ++k) {
    if (b.theta().position(k) != b.theta().size()) continue;
    const Irrep& gamma = cat[k];
    worst = std::max(worst, max_abs(projector_coarse(u, gamma)));
    for (std::size_t i = 0; i < gamma.dim(); ++i)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          worst = std::max(worst, max_abs(eigenmatrix_raw(u, gamma, i, s, t)));
    for (const auto& e : b.entries())
      worst = std::max(worst, std::abs(mu(u, gamma, e.eigen.v)));
  }
  return worst;
}

double choi_block_properties(const ChannelSpace& space) {
  double worst = 0.0;
  const std::size_t m = space.theta().size();
  for (std::size_t a = 0; a < m; ++a) {
    const Matrix& ja = space.choi_block(a);
    worst = std::max(worst, max_abs(ja * ja.adjoint() - ja.adjoint() * ja));
    for (std::size_t c = 0; c < m; ++c) {
      const Matrix& jc = space.choi_block(c);
      worst = std::max(worst, max_abs(ja * jc - jc * ja));
    }
  }
  return worst;
}

double character_matrix_properties(const IrrepCatalog& cat) {
  const CharacterMatrices cm = character_matrices(cat);
  const FiniteGroup& g = cat.group();
  const double order = static_cast<double>(g.order());
  const auto k = static_cast<Eigen::Index>(cat.size());
  double worst = max_abs(cm.t.adjoint() * cm.t / order - Matrix::Identity(k, k));
  const Matrix tt = cm.t * cm.t.adjoint() / order;
  for (std::size_t r = 0; r < cm.order.size(); ++r) {
    for (std::size_t c = 0; c < cm.order.size(); ++c) {
      const std::size_t cls = g.class_of(cm.order[r]);
      const double expected =
          cls == g.class_of(cm.order[c])
              ? 1.0 / static_cast<double>(g.classes()[cls].size())
              : 0.0;
      worst = std::max(worst,
                       std::abs(tt(static_cast<Eigen::Index>(r),
                                   static_cast<Eigen::Index>(c)) -
                                Complex(expected)));
    }
  }
  return worst;
}

CriterionResult structural(std::uint64_t) {
  CriterionResult r{7, "structural properties", true, ""};
  double algebra = 0.0, outside = 0.0, blocks = 0.0, tmat = 0.0;
  for (const auto& c : builtin_cases()) {
    const SpacePtr space = space_for(c);
    algebra = std::max(algebra, commutant_properties(space->basis()));
    outside = std::max(outside,
                       vanishing_outside_theta(space->catalog(), space->basis()));
    blocks = std::max(blocks, choi_block_properties(*space));
  }
  for (const auto& id : builtin_group_ids())
    tmat = std::max(tmat, character_matrix_properties(builtin_catalog(id)));
  r.passed = algebra <= 1e-10 && outside <= 1e-10 && blocks <= 1e-10 &&
             tmat <= 1e-10;
  r.detail = "projectors/bases/sum rules " + sci(algebra) + ", outside Theta " +
             sci(outside) + ", J blocks " + sci(blocks) + ", T matrices " +
             sci(tmat);
  return r;
}

CriterionResult feasibility_regions(std::uint64_t) {
  CriterionResult r{8, "feasibility regions", true, ""};
  const double tau = kZeroTolerance;
  int s3_cptp = 0, s3_eb = 0, q8_cptp = 0, q8_eb = 0;
  std::size_t s3_count = 0, q8_count = 0;
  {
    const auto space = ChannelSpace::create(builtin_catalog("s3"), "(2,1)");
    const FeasibleRegion region = feasible_region(*space, 101);
    for (const auto& p : region.points) {
      const double ls = p.coords[0], ll = p.coords[1];
      if (p.cptp != s3_cptp_reference(ls, ll, tau)) ++s3_cptp;
      if (!p.eb || *p.eb != (s3_cptp_reference(ls, ll, tau) &&
                             s3_eb_reference(ls, ll, tau)))
        ++s3_eb;
    }
    s3_count = region.points.size();
  }
  {
    const auto space = ChannelSpace::create(builtin_catalog("q8"), "t4");
    const FeasibleRegion region = feasible_region(*space, 21);
    for (const auto& p : region.points) {
      const double a = p.coords[0], b = p.coords[1], c = p.coords[2];
      const bool cp = q8_cptp_reference(a, b, c, tau);
      if (p.cptp != cp) ++q8_cptp;
      if (!p.eb || *p.eb != (cp && q8_ppt_reference(a, b, c, tau))) ++q8_eb;
    }
    q8_count = region.points.size();
  }
  r.passed = s3_count == 101 * 101 && q8_count == 21 * 21 * 21 &&
             s3_cptp + s3_eb + q8_cptp + q8_eb == 0;
  r.detail = "disagreements s3 cptp " + std::to_string(s3_cptp) + ", s3 eb " +
             std::to_string(s3_eb) + ", q8 cptp " + std::to_string(q8_cptp) +
             ", q8 eb " + std::to_string(q8_eb);
  return r;
}

CriterionResult class_function_channels(std::uint64_t seed) {
  CriterionResult r{9, "class-function channels", true, ""};
  Sampler rng(seed);
  int failures = 0;
  bool uniform_exact = true;
  for (const auto& c : builtin_cases()) {
    const SpacePtr space = space_for(c);
    for (int trial = 0; trial < 1000; ++trial) {
      try {
        channel_from_class_function(space,
                                    rng.scaled_distribution(space->group()));
      } catch (const Error&) {
        ++failures;
      }
    }
    const ClassFunction ones{std::vector<double>(space->group().order(), 1.0)};
    const CovariantChannel ch = channel_from_class_function(space, ones);
    RealVector expected = RealVector::Zero(ch.eigenvalues().values.size());
    expected(0) = 1.0;
    if (ch.eigenvalues().values != expected ||
        max_abs(ch.superoperator() - space->basis().projector(0)) != 0.0)
      uniform_exact = false;
  }
  r.passed = failures == 0 && uniform_exact;
  r.detail = std::to_string(failures) + " failures in 5000, uniform f " +
             (uniform_exact ? "exact" : "inexact");
  return r;
}

CriterionResult geometry(std::uint64_t seed) {
  CriterionResult r{10, "simplex geometry", true, ""};
  Sampler rng(seed);
  double round_trip = 0.0, lid = 0.0;
  int infeasible = 0;
  for (const auto& c : builtin_cases()) {
    const SpacePtr space = space_for(c);
    const MuMatrix& m = space->mu();
    for (int trial = 0; trial < 100; ++trial) {
      const EpsilonVector e =
          epsilon_from_L(m, rng.feasible_eigenvalues(*space));
      if (!simplex_feasibility(e, space->dim()).feasible) ++infeasible;
      const EigenvalueVector l = L_from_epsilon(m, e);
      const EpsilonVector back = epsilon_from_L(m, l);
      round_trip =
          std::max(round_trip, (back.values - e.values).cwiseAbs().maxCoeff());
      lid = std::max(lid, std::abs(l.identity() - 1.0));
    }
  }
  r.passed = round_trip <= 1e-10 && lid <= 1e-12 && infeasible == 0;
  r.detail = "round trip " + sci(round_trip) + ", l_id " + sci(lid) +
             ", off-simplex samples " + std::to_string(infeasible);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  using Check = std::function<CriterionResult(std::uint64_t)>;
  static const Check checks[kCriterionCount] = {
      character_table, commutant_dimensions, m_matrix,
      choi_matrices,   kraus_fidelity,       covariance,
      structural,      feasibility_regions,  class_function_channels,
      geometry};
  static const char* names[kCriterionCount] = {
      "quaternion character table", "commutant dimensions",
      "M matrix",                   "Choi matrices",
      "Kraus fidelity",             "covariance",
      "structural properties",      "feasibility regions",
      "class-function channels",         "simplex geometry"};
  if (id < 1 || id > kCriterionCount)
    throw DomainError("no acceptance criterion " + std::to_string(id));
  try {
    return checks[id - 1](seed + static_cast<std::uint64_t>(id));
  } catch (const std::exception& e) {
    return {id, names[id - 1], false, std::string("exception: ") + e.what()};
  }
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  char head[16];
  std::snprintf(head, sizeof head, "[%2d]", r.id);
  return std::string(r.passed ? "PASS " : "FAIL ") + head + " " + r.name +
         ": " + r.detail;
}

}  // namespace covch::cli
