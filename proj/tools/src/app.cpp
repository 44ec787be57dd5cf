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

#include "covch/cli/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "covch/channel.hpp"
#include "covch/cli/acceptance.hpp"
#include "covch/cli/json_io.hpp"
#include "covch/cli/region.hpp"
#include "covch/tolerance.hpp"

namespace covch::cli {

namespace {

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid number '" + text + "' in " + what);
  }
  if (used != text.size() || !std::isfinite(v))
    throw UsageError("invalid number '" + text + "' in " + what);
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

void apply_environment_tolerance() {
  const char* env = std::getenv("COVCH_TOLERANCE");
  if (env == nullptr || *env == '\0') {
    set_equality_tolerance(kDefaultEqualityTolerance);
    return;
  }
  set_equality_tolerance(parse_double(env, "COVCH_TOLERANCE"));
}

struct Options {
  std::string group;
  std::string irrep;
  std::string alpha;
  std::string l;
  std::string f;
  bool probability = false;
  std::size_t grid = 21;
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  int criterion = 0;
  bool text = false;
};

Json theta_json(const ThetaSet& theta) {
  Json out = Json::array();
  for (const auto& m : theta.members) out.push_back(m);
  return out;
}

Json eigenvalues_json(const EigenvalueVector& l) {
  Json out = Json::object();
  for (std::size_t k = 0; k < l.size(); ++k)
    out[l.labels[k]] = number(l.values(static_cast<Eigen::Index>(k)));
  return out;
}

Json epsilon_json(const EpsilonVector& e) {
  Json out = Json::array();
  for (std::size_t k = 0; k < e.size(); ++k) {
    Json item;
    item["beta"] = e.keys[k].beta;
    item["i"] = e.keys[k].i + 1;
    item["value"] = number(e.values(static_cast<Eigen::Index>(k)));
    out.push_back(std::move(item));
  }
  return out;
}

Json channel_header(const ChannelSpace& space) {
  Json p;
  p["group"] = space.group().name();
  p["irrep"] = space.irrep().label();
  p["dim"] = space.dim();
  p["theta"] = theta_json(space.theta());
  return p;
}

Json group_info(const Options& o) {
  const IrrepCatalog cat = builtin_catalog(o.group);
  const FiniteGroup& g = cat.group();
  Json p;
  p["group"] = g.name();
  p["order"] = g.order();
  p["identity"] = g.identity();
  Json elements = Json::array();
  for (Element x = 0; x < g.order(); ++x) elements.push_back(g.label(x));
  p["elements"] = std::move(elements);
  Json sizes = Json::array(), classes = Json::array();
  for (const auto& cls : g.classes()) {
    sizes.push_back(cls.size());
    Json members = Json::array();
    for (Element x : cls) members.push_back(g.label(x));
    classes.push_back(std::move(members));
  }
  p["class_count"] = g.classes().size();
  p["class_sizes"] = std::move(sizes);
  p["classes"] = std::move(classes);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(g.cayley_checksum()));
  p["cayley_checksum"] = buf;
  return p;
}

Json irrep_check(const Options& o) {
  const IrrepCatalog cat = builtin_catalog(o.group);
  const Irrep& u = cat.at(o.irrep);
  const IrrepCheck c = check_irrep(u);
  const FiniteGroup& g = cat.group();
  Json p;
  p["group"] = g.name();
  p["irrep"] = u.label();
  p["dim"] = u.dim();
  p["homomorphism"] = {{"ok", c.homomorphism},
                       {"residual", number(c.homomorphism_residual)}};
  p["unitary"] = {{"ok", c.unitary},
                  {"residual", number(c.unitarity_residual)}};
  p["irreducible"] = {{"ok", c.irreducible},
                      {"character_norm", number(c.character_norm)}};
  Json reps = Json::array(), chars = Json::array();
  for (const auto& cls : g.classes()) {
    reps.push_back(g.label(cls.front()));
    chars.push_back(complex_json(u.character(cls.front())));
  }
  p["class_representatives"] = std::move(reps);
  p["characters"] = std::move(chars);
  return p;
}

Json irrep_decompose(const Options& o) {
  const IrrepCatalog cat = builtin_catalog(o.group);
  const Irrep& u = cat.at(o.irrep);
  Json p;
  p["group"] = cat.group().name();
  p["irrep"] = u.label();
  Json mult = Json::object();
  const std::vector<int> m = adjoint_multiplicities(cat, u);
  for (std::size_t k = 0; k < cat.size(); ++k) mult[cat[k].label()] = m[k];
  const ThetaSet theta = decompose_adjoint(cat, u);
  p["theta"] = theta_json(theta);
  p["multiplicities"] = std::move(mult);
  p["commutant_dimension"] = commutant_dimension(u);
  std::size_t dsum = 0;
  for (std::size_t d : theta.dims) dsum += d;
  p["dimension_sum"] = dsum;
  return p;
}

Json commutant_dump(const Options& o) {
  const IrrepCatalog cat = builtin_catalog(o.group);
  const CommutantBasis basis(cat, cat.at(o.irrep));
  const ThetaSet& theta = basis.theta();
  std::optional<std::size_t> only;
  if (!o.alpha.empty()) {
    only = theta.position(cat.index_of(o.alpha));
    if (*only == theta.size())
      throw DomainError("irrep '" + o.alpha + "' does not occur in U (x) U^c");
  }
  Json p;
  p["group"] = cat.group().name();
  p["irrep"] = basis.irrep().label();
  p["theta"] = theta_json(theta);
  Json projectors = Json::array();
  for (std::size_t pos = 0; pos < theta.size(); ++pos) {
    if (only && *only != pos) continue;
    projectors.push_back(
        {{"alpha", theta.members[pos]}, {"matrix", matrix_json(basis.projector(pos))}});
  }
  p["projectors"] = std::move(projectors);
  Json entries = Json::array();
  for (const auto& e : basis.entries()) {
    if (only && *only != e.theta_pos) continue;
    Json item;
    item["alpha"] = e.label;
    item["i"] = e.i + 1;
    item["s"] = e.eigen.s + 1;
    item["t"] = e.eigen.t + 1;
    item["proj_fine"] = matrix_json(e.proj_fine);
    item["V"] = matrix_json(e.eigen.v);
    item["v"] = matrix_json(e.basis_vector);
    entries.push_back(std::move(item));
  }
  p["entries"] = std::move(entries);
  return p;
}

SpacePtr space_from(const Options& o) {
  return ChannelSpace::create(builtin_catalog(o.group), o.irrep);
}

Json channel_payload(const CovariantChannel& ch) {
  Json p = channel_header(*ch.space());
  p["l"] = eigenvalues_json(ch.eigenvalues());
  p["epsilon"] = epsilon_json(ch.epsilons());
  p["epsilon_sum"] = number(ch.epsilons().sum());
  p["cptp"] = true;
  return p;
}

Json channel_build(const Options& o) {
  return channel_payload(build_channel(space_from(o), parse_assignments(o.l)));
}

Json channel_choi(const Options& o) {
  const CovariantChannel ch =
      build_channel(space_from(o), parse_assignments(o.l));
  Json p = channel_payload(ch);
  p["superoperator"] = matrix_json(ch.superoperator());
  p["choi"] = matrix_json(ch.choi());
  return p;
}

Json channel_kraus(const Options& o) {
  const CovariantChannel ch =
      build_channel(space_from(o), parse_assignments(o.l));
  Json p = channel_payload(ch);
  Json ops = Json::array();
  const auto n = static_cast<Eigen::Index>(ch.dim());
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& k : ch.kraus()) {
    sum += k.k.adjoint() * k.k;
    ops.push_back({{"beta", k.key.beta},
                   {"i", k.key.i + 1},
                   {"epsilon", number(k.epsilon)},
                   {"matrix", matrix_json(k.k)}});
  }
  p["kraus"] = std::move(ops);
  p["completeness_residual"] = number(max_abs(sum - Matrix::Identity(n, n)));
  return p;
}

Json channel_classify(const Options& o, Json& diagnostics) {
  const SpacePtr space = space_from(o);
  const EigenvalueVector l = space->eigenvalues(parse_assignments(o.l));
  Json p = channel_header(*space);
  p["l"] = eigenvalues_json(l);
  const double min_pt = min_partial_transpose_eigenvalue(*space, l);
  const bool ppt = min_pt >= -kZeroTolerance;
  bool cptp = true;
  try {
    build_channel(space, l);
  } catch (const NotTracePreserving& e) {
    cptp = false;
    p["reason"] = e.code();
  } catch (const NotCompletelyPositive& e) {
    cptp = false;
    p["reason"] = e.code();
  }
  p["cptp"] = cptp;
  p["ppt"] = ppt;
  p["min_pt_eigenvalue"] = number(min_pt);
  if (space->dim() == 2) {
    p["eb"] = cptp && ppt;
    p["certified"] = true;
  } else {
    p["eb"] = nullptr;
    p["certified"] = false;
    diagnostics.push_back(diagnostic(
        "info", "PPT_NECESSARY_ONLY",
        "for |U| > 2 a positive partial transpose is only necessary for "
        "entanglement breaking"));
  }
  return p;
}

Json channel_from_dist(const Options& o) {
  const SpacePtr space = space_from(o);
  ClassFunction f{parse_values(o.f)};
  if (o.probability)
    for (double& v : f.values) v *= static_cast<double>(space->group().order());
  validate_class_function(space->group(), f);
  const CovariantChannel ch = channel_from_class_function(space, f);
  Json p = channel_payload(ch);
  Json all = Json::object();
  const RealVector lall = class_function_eigenvalues(space->catalog(), f);
  for (std::size_t k = 0; k < space->catalog().size(); ++k)
    all[space->catalog()[k].label()] =
        number(lall(static_cast<Eigen::Index>(k)));
  p["l_all"] = std::move(all);
  Json x = Json::array();
  const RealVector xv = x_coefficients(space->catalog(), f);
  for (Eigen::Index k = 0; k < xv.size(); ++k) x.push_back(number(xv(k)));
  p["x"] = std::move(x);
  return p;
}

Json selftest(const Options& o, bool& all_passed, std::ostream& out) {
  std::vector<CriterionResult> results;
  if (o.criterion != 0)
    results.push_back(run_criterion(o.criterion, o.seed));
  else
    results = run_acceptance(o.seed);
  all_passed = true;
  Json list = Json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"passed", r.passed},
                    {"detail", r.detail}});
    if (o.text) out << format_result_line(r) << '\n';
  }
  Json p;
  p["seed"] = o.seed;
  p["criteria"] = std::move(list);
  p["passed"] = all_passed;
  return p;
}

std::string command_name(const CLI::App& app) {
  std::string name;
  const CLI::App* cur = &app;
  while (true) {
    const auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    if (!name.empty()) name += ' ';
    name += cur->get_name();
  }
  return name;
}

std::string guess_command(const std::vector<std::string>& args) {
  std::string name;
  for (std::size_t k = 0; k < args.size() && k < 2; ++k) {
    if (args[k].empty() || args[k][0] == '-') break;
    if (!name.empty()) name += ' ';
    name += args[k];
  }
  return name;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

std::map<std::string, double> parse_assignments(const std::string& text) {
  std::map<std::string, double> out;
  if (trim(text).empty()) return out;
  std::string pending;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    pending = pending.empty() ? piece : pending + "," + piece;
    const auto eq = pending.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(pending.substr(0, eq));
    const std::string value = trim(pending.substr(eq + 1));
    if (key.empty()) throw UsageError("empty key in '" + text + "'");
    if (!out.emplace(key, parse_double(value, "--l")).second)
      throw UsageError("duplicate key '" + key + "'");
    pending.clear();
  }
  if (!pending.empty())
    throw UsageError("dangling fragment '" + pending + "' in '" + text + "'");
  return out;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(parse_double(trim(piece), "--f"));
  if (out.empty()) throw UsageError("no values given");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Irreducibly covariant quantum channels of finite groups"};
  app.name("covch");
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> groups = builtin_group_ids();

  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", o.group, "Group id")
        ->required()
        ->check(CLI::IsMember(groups));
  };
  auto add_irrep = [&](CLI::App* cmd) {
    add_group(cmd);
    cmd->add_option("--irrep", o.irrep, "Irrep label, e.g. t4 or 3,1")
        ->required();
  };

  auto* group = app.add_subcommand("group", "Group structure");
  group->require_subcommand(1);
  auto* group_info_cmd = group->add_subcommand("info", "Order, classes, checksum");
  add_group(group_info_cmd);

  auto* irrep = app.add_subcommand("irrep", "Irreducible representations");
  irrep->require_subcommand(1);
  auto* irrep_check_cmd = irrep->add_subcommand("check", "Verify an irrep");
  add_irrep(irrep_check_cmd);
  auto* irrep_decompose_cmd =
      irrep->add_subcommand("decompose", "Decompose U (x) U^c");
  add_irrep(irrep_decompose_cmd);

  auto* commutant = app.add_subcommand("commutant", "Commutant projectors");
  commutant->require_subcommand(1);
  auto* dump_cmd = commutant->add_subcommand("dump", "Projectors and eigenmatrices");
  add_irrep(dump_cmd);
  dump_cmd->add_option("--alpha", o.alpha, "Restrict to one Theta member");

  auto* channel = app.add_subcommand("channel", "Covariant channels");
  channel->require_subcommand(1);
  auto add_l = [&](CLI::App* cmd) {
    add_irrep(cmd);
    cmd->add_option("--l", o.l, "Eigenvalues, e.g. sgn=0,lambda=0.4");
  };
  auto* build_cmd = channel->add_subcommand("build", "Validate a channel");
  add_l(build_cmd);
  auto* choi_cmd = channel->add_subcommand("choi", "Choi matrix");
  add_l(choi_cmd);
  auto* kraus_cmd = channel->add_subcommand("kraus", "Kraus operators");
  add_l(kraus_cmd);
  auto* classify_cmd =
      channel->add_subcommand("classify", "CPTP and entanglement breaking");
  add_l(classify_cmd);
  auto* dist_cmd =
      channel->add_subcommand("from-dist", "Channel from a class function");
  add_irrep(dist_cmd);
  dist_cmd->add_option("--f", o.f, "One value per group element")->required();
  dist_cmd->add_flag("--probability", o.probability,
                     "Scale the values by |G| first");
  auto* region_cmd =
      channel->add_subcommand("feasible-region", "CSV grid of CPTP/EB flags");
  add_irrep(region_cmd);
  region_cmd->add_option("--grid", o.grid, "Points per axis")
      ->check(CLI::Range(2, 1001));
  region_cmd->add_option("--output", o.output, "Write CSV to a file");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest_cmd->add_option("--seed", o.seed, "Random seed");
  selftest_cmd->add_option("--criterion", o.criterion, "Run one criterion")
      ->check(CLI::Range(1, kCriterionCount));
  selftest_cmd->add_flag("--text", o.text, "Also print one line per criterion");

  std::string command = guess_command(args);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    command = command_name(app);
    apply_environment_tolerance();

    Json diagnostics = Json::array();
    Json payload;
    if (*group_info_cmd) {
      payload = group_info(o);
    } else if (*irrep_check_cmd) {
      payload = irrep_check(o);
    } else if (*irrep_decompose_cmd) {
      payload = irrep_decompose(o);
    } else if (*dump_cmd) {
      payload = commutant_dump(o);
    } else if (*build_cmd) {
      payload = channel_build(o);
    } else if (*choi_cmd) {
      payload = channel_choi(o);
    } else if (*kraus_cmd) {
      payload = channel_kraus(o);
    } else if (*classify_cmd) {
      payload = channel_classify(o, diagnostics);
    } else if (*dist_cmd) {
      payload = channel_from_dist(o);
    } else if (*region_cmd) {
      const FeasibleRegion region = feasible_region(*space_from(o), o.grid);
      if (o.output.empty()) {
        write_region_csv(region, out);
      } else {
        std::ofstream file(o.output);
        if (!file) throw DomainError("cannot open '" + o.output + "'");
        write_region_csv(region, file);
        print(out, envelope(command,
                            {{"output", o.output},
                             {"rows", region.points.size()}},
                            diagnostics));
      }
      return 0;
    } else if (*selftest_cmd) {
      bool passed = false;
      payload = selftest(o, passed, out);
      if (!passed) {
        diagnostics.push_back(diagnostic("error", "SELFTEST_FAILED",
                                         "one or more criteria failed"));
        if (!o.text) print(out, envelope(command, payload, diagnostics));
        return 1;
      }
      if (o.text) return 0;
    }
    print(out, envelope(command, std::move(payload), std::move(diagnostics)));
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    print(out, error_envelope(command, Json::array({diagnostic(
                                           "error", "USAGE", e.what())})));
    return 2;
  } catch (const UsageError& e) {
    print(out, error_envelope(command, Json::array({diagnostic(
                                           "error", e.code(), e.what())})));
    return 2;
  } catch (const NotCompletelyPositive& e) {
    Json d = diagnostic("error", e.code(), e.what());
    d["witness"] = {{"beta", e.beta()},
                    {"i", e.index() + 1},
                    {"epsilon", number(e.value())}};
    print(out, error_envelope(command, Json::array({d})));
    return 1;
  } catch (const Error& e) {
    print(out, error_envelope(command, Json::array({diagnostic(
                                           "error", e.code(), e.what())})));
    return 1;
  } catch (const std::exception& e) {
    print(out, error_envelope(command, Json::array({diagnostic(
                                           "error", "INTERNAL", e.what())})));
    return 1;
  }
}

}  // namespace covch::cli
