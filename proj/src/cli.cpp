// Copyright 2026 The chanmetric Authors
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

#include "chanmetric/cli.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "chanmetric/closedforms.hpp"
#include "chanmetric/json_io.hpp"
#include "chanmetric/random.hpp"

namespace chanmetric::cli {

namespace {

using nlohmann::json;
namespace io = chanmetric::json;

struct Options {
  std::string a, b, fixture;
  std::string route = "purification";
  int restarts = 20;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool seed_given = false;
  double mu = 0, nu = 0, eps = 0;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InvalidInput, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

class Report {
 public:
  explicit Report(std::string command) {
    j_ = {{"schema_version", "1"},
          {"command", std::move(command)},
          {"inputs", json::object()},
          {"values", json::object()},
          {"diagnostics", json::object()}};
  }

  /// Reads and parses a JSON input file, recording its digest under `role`.
  json load(const std::string& path, const std::string& role) {
    if (path.empty()) throw Error(ErrorKind::InvalidInput, "--" + role + ": missing input file");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidInput, "--" + role + ": cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    j_["inputs"][role] = sha256_hex(bytes);
    try {
      return json::parse(bytes);
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::InvalidInput, "--" + role + ": " + e.what());
    }
  }

  void value(const std::string& name, double v) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "value " + name + " is not finite");
    j_["values"][name] = v;
  }
  void minimizer(const ComplexVector& u) { j_["minimizer"] = io::encode_vector(u); }
  json& diagnostics() { return j_["diagnostics"]; }

  void optimizer(const Diagnostics& d, const OptConfig& cfg, const std::string& key = "") {
    json t = {{"restarts", d.restarts},
              {"iterations", d.iterations},
              {"total_iterations", d.total_iterations},
              {"grad_norm", d.grad_norm},
              {"per_restart_values", d.per_restart_values},
              {"spread", d.spread},
              {"converged", d.converged},
              {"trace_preserving", d.trace_preserving},
              {"seed", cfg.seed},
              {"tol", cfg.tol}};
    if (key.empty()) {
      j_["diagnostics"].update(t);
    } else {
      j_["diagnostics"][key] = std::move(t);
    }
    converged_ = converged_ && d.converged;
  }

  bool converged() const { return converged_; }
  json finish() {
    json out = j_;
    io::round_numbers(out);
    return out;
  }

 private:
  json j_;
  bool converged_ = true;
};

OptConfig make_config(const Options& o) {
  OptConfig cfg;
  cfg.restarts = o.restarts;
  cfg.tol = o.tol;
  if (o.seed_given) {
    cfg.seed = o.seed;
  } else if (const char* env = std::getenv("CHANMETRIC_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    cfg.seed = std::strtoull(env, &end, 10);
    if (*end != '\0') throw Error(ErrorKind::InvalidInput, "CHANMETRIC_SEED: not an unsigned integer");
  }
  cfg.validate();
  return cfg;
}

json points_json(const std::vector<Point2>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back({p.x(), p.y()});
  return out;
}

void state_metrics(const Options& o, Report& r) {
  const auto rho = DensityOperator::from_matrix(io::decode_matrix(r.load(o.a, "a"), "a"));
  const auto sigma = DensityOperator::from_matrix(io::decode_matrix(r.load(o.b, "b"), "b"));
  const double f = state_fidelity(rho, sigma);
  const double d = trace_distance(rho, sigma);
  r.value("fidelity", f);
  r.value("trace_distance", d);
  r.value("bures_distance", bures_distance(f));
  r.value("fuchs_van_de_graaf_slack", std::min(d - (1 - f), std::sqrt(std::max(0.0, 1 - f * f)) - d));
}

std::pair<KrausChannel, KrausChannel> two_channels(const Options& o, Report& r) {
  return {io::decode_channel(r.load(o.a, "a"), "a"), io::decode_channel(r.load(o.b, "b"), "b")};
}

void channel_fidelity(const Options& o, Report& r) {
  const auto [phi, psi] = two_channels(o, r);
  r.value("entangled_fidelity", entangled_channel_fidelity(phi, psi));
}

void minimax(const Options& o, Report& r) {
  const auto [phi, psi] = two_channels(o, r);
  const Route route = parse_route(o.route);
  const OptConfig cfg = make_config(o);
  const auto res = minimax_fidelity(phi, psi, route, cfg);
  r.value("fidelity", res.value);
  r.value("hellinger_distance", hellinger_channel_distance(std::clamp(res.value, 0.0, 1.0)));
  r.minimizer(res.minimizer);
  r.diagnostics()["route"] = std::string(to_string(route));
  r.optimizer(res.diagnostics, cfg);
}

void cb(const Options& o, Report& r) {
  const auto [phi, psi] = two_channels(o, r);
  const OptConfig cfg = make_config(o);
  const auto res = cb_distance(phi, psi, cfg);
  r.value("cb_distance", res.value);
  r.minimizer(res.minimizer);
  r.optimizer(res.diagnostics, cfg);
}

void unitary(const Options& o, Report& r) {
  const ComplexMatrix u = io::decode_matrix(r.load(o.a, "u"), "u");
  const ComplexMatrix v = io::decode_matrix(r.load(o.b, "v"), "v");
  const auto res = unitary_minimax_fidelity(u, v);
  r.value("fidelity", res.value);
  r.value("cb_distance", std::sqrt(std::max(0.0, 1 - res.value * res.value)));
  json eig = json::array();
  for (const auto& z : res.hull.eigenvalues) eig.push_back({z.real(), z.imag()});
  r.diagnostics()["eigenvalues"] = std::move(eig);
  r.diagnostics()["hull_vertices"] = points_json(res.hull.hull_vertices);
}

void gaussian(const Options& o, Report& r) {
  r.value("fidelity", gaussian_noise_fidelity(o.mu, o.nu));
}

void povm(const Options& o, Report& r) {
  const Povm m = io::decode_povm(r.load(o.a, "a"), "a");
  const Povm n = io::decode_povm(r.load(o.b, "b"), "b");
  const OptConfig cfg = make_config(o);
  const auto res = qc_povm_fidelity(m, n, cfg);
  r.value("fidelity", res.value);
  r.minimizer(res.minimizer);
  r.optimizer(res.diagnostics, cfg);
}

void kernel(const Options& o, Report& r) {
  const FiniteKernel p = io::decode_kernel(r.load(o.a, "a"), "a");
  const FiniteKernel q = io::decode_kernel(r.load(o.b, "b"), "b");
  const auto res = kernel_minimax_fidelity(p, q);
  r.value("fidelity", res.value);
  r.value("argmin_input", static_cast<double>(res.argmin));
}

void qbc(const Options& o, Report& r) {
  std::optional<CommitmentProtocol> protocol;
  if (o.b.empty()) {
    protocol.emplace(io::decode_protocol(r.load(o.a, "a"), "a"));
  } else {
    auto [phi0, phi1] = two_channels(o, r);
    protocol.emplace(std::move(phi0), std::move(phi1));
  }
  const OptConfig cfg = make_config(o);
  const auto rep = impossibility_report(*protocol, cfg);
  r.value("alice_bound", rep.alice_bound);
  r.value("distance_bound", rep.distance_bound);
  r.value("bob_bound", rep.bob_bound);
  r.value("bob_probability", rep.bob_probability);
  r.value("cb_distance", rep.cb_distance);
  r.value("fidelity", rep.fidelity.value);
  r.value("slack", rep.slack);
  r.optimizer(rep.fidelity.diagnostics, cfg, "fidelity");
  r.optimizer(rep.distance.diagnostics, cfg, "cb_distance");
}

void lindblad(const Options& o, Report& r) {
  const ComplexMatrix x = io::decode_matrix(r.load(o.a, "a"), "a");
  const OptConfig cfg = make_config(o);
  const auto res = lindblad_infinitesimal_fidelity(x, o.eps, cfg);
  const auto actual =
      minimax_fidelity(res.channel, identity_channel(x.rows()), Route::purification, cfg);
  r.value("predicted", res.predicted);
  r.value("c", res.c);
  r.value("worst_variance", res.worst_variance);
  r.value("predicted_worst", res.predicted_worst);
  r.value("fidelity", actual.value);
  r.minimizer(actual.minimizer);
  r.optimizer(actual.diagnostics, cfg);
}

// ---- selfcheck ---------------------------------------------------------------

struct Check {
  std::string name;
  bool passed;
  double value;
};

void check_pair(const std::string& name, const KrausChannel& phi, const KrausChannel& psi,
                const OptConfig& cfg, std::vector<Check>& checks, Report& r) {
  double lo = 2, hi = -1, f = 0;
  for (Route route : {Route::density, Route::purification, Route::stinespring}) {
    const auto res = minimax_fidelity(phi, psi, route, cfg);
    lo = std::min(lo, res.value);
    hi = std::max(hi, res.value);
    if (route == Route::purification) {
      f = res.value;
      r.optimizer(res.diagnostics, cfg, name);
    }
  }
  checks.push_back({name + ": route agreement", hi - lo <= 1e-4, hi - lo});
  const double d = cb_distance(phi, psi, cfg).value;
  const double slack = std::min(f - (1 - d), std::sqrt(std::max(0.0, 1 - d * d)) - f);
  checks.push_back({name + ": 1 - D <= f <= sqrt(1 - D^2)", slack >= -1e-3, slack});
}

void selfcheck(const Options& o, Report& r, int& exit_code) {
  std::optional<KrausChannel> fixture;
  if (!o.fixture.empty()) {
    const json j = r.load(o.fixture, "fixture");
    if (!j.is_object() || !j.contains("weights") || !j.contains("parts")) {
      throw Error(ErrorKind::InvalidInput, "fixture: expected {\"weights\", \"parts\"}");
    }
    std::vector<double> weights;
    for (const auto& w : j["weights"]) {
      if (!w.is_number()) throw Error(ErrorKind::InvalidInput, "fixture.weights: expected numbers");
      weights.push_back(w.get<double>());
    }
    std::vector<KrausChannel> parts;
    for (std::size_t i = 0; i < j["parts"].size(); ++i) {
      parts.push_back(io::decode_channel(j["parts"][i], "fixture.parts[" + std::to_string(i) + "]"));
    }
    fixture = mixture_channel(weights, parts);
  }

  const OptConfig cfg = make_config(o);
  std::vector<Check> checks;

  check_pair("identity/dephasing", identity_channel(2), dephasing_channel(0.3), cfg, checks, r);
  Rng rng(20261019);
  const auto a = random_channel(2, 2, 2, rng);
  const auto b = random_channel(2, 2, 3, rng);
  check_pair("random qubit pair", a, b, cfg, checks, r);
  if (fixture) check_pair("fixture", identity_channel(fixture->dim_in()), *fixture, cfg, checks, r);

  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(1, 1) = Complex(0, 1);
  const double closed = unitary_minimax_fidelity(ComplexMatrix::Identity(2, 2), s).value;
  const double numeric = minimax_fidelity(identity_channel(2), unitary_channel(s),
                                          Route::purification, cfg).value;
  checks.push_back({"unitary closed form", std::abs(closed - numeric) <= 1e-4, closed - numeric});

  double worst = 1;
  for (int i = 0; i < 20; ++i) {
    const auto rho = DensityOperator::from_matrix(random_density(3, rng));
    const auto sigma = DensityOperator::from_matrix(random_density(3, rng));
    const double f = state_fidelity(rho, sigma);
    const double d = trace_distance(rho, sigma);
    worst = std::min({worst, d - (1 - f), std::sqrt(std::max(0.0, 1 - f * f)) - d});
  }
  checks.push_back({"state Fuchs-van de Graaf", worst >= -1e-9, worst});
  const double g = gaussian_noise_fidelity(1, 4);
  checks.push_back({"gaussian (1, 4)", std::abs(g - 0.8) <= 1e-12, g});

  json list = json::array();
  int failed = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}});
    if (!c.passed) ++failed;
  }
  r.diagnostics()["checks"] = std::move(list);
  r.value("checks_passed", static_cast<double>(checks.size() - failed));
  r.value("checks_failed", static_cast<double>(failed));
  if (failed > 0) exit_code = kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fidelity and distance measures for finite-dimensional quantum channels", "chanmetric"};
  app.require_subcommand(1);
  Options o;

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "First input file");
    sub->add_option("--b", o.b, "Second input file");
  };
  auto add_opt = [&](CLI::App* sub) {
    sub->add_option("--restarts", o.restarts, "Optimizer restarts");
    sub->add_option("--tol", o.tol, "Gradient-norm stopping tolerance");
    sub->add_option("--seed", o.seed, "Optimizer seed (default: $CHANMETRIC_SEED or 0)")
        ->each([&](const std::string&) { o.seed_given = true; });
  };

  auto* state = app.add_subcommand("state-metrics", "Fidelity and trace distance of two density matrices");
  add_pair(state);
  auto* chfid = app.add_subcommand("channel-fidelity", "Fidelity of the Choi states of two channels");
  add_pair(chfid);
  auto* mm = app.add_subcommand("minimax", "Minimax fidelity of two channels");
  add_pair(mm);
  add_opt(mm);
  mm->add_option("--route", o.route, "density | purification | stinespring");
  auto* cbd = app.add_subcommand("cb-distance", "Half the CB-norm distance of two channels");
  add_pair(cbd);
  add_opt(cbd);
  auto* uni = app.add_subcommand("unitary", "Closed-form minimax fidelity of two unitary channels");
  uni->add_option("--u,--a", o.a, "First unitary (matrix JSON)");
  uni->add_option("--v,--b", o.b, "Second unitary (matrix JSON)");
  auto* gauss = app.add_subcommand("gaussian", "Minimax fidelity of Gaussian noise channels");
  gauss->add_option("--mu", o.mu, "First variance")->required();
  gauss->add_option("--nu", o.nu, "Second variance")->required();
  auto* pv = app.add_subcommand("povm", "Minimax fidelity of two POVMs");
  add_pair(pv);
  add_opt(pv);
  auto* ker = app.add_subcommand("kernel", "Minimax fidelity of two classical kernels");
  add_pair(ker);
  auto* qb = app.add_subcommand("qbc", "Bit-commitment cheating bounds (--a protocol, or --a/--b channels)");
  add_pair(qb);
  add_opt(qb);
  auto* lind = app.add_subcommand("lindblad", "Short-time fidelity of a one-operator Lindblad evolution");
  lind->add_option("--a", o.a, "Lindblad operator X (matrix JSON)");
  lind->add_option("--eps", o.eps, "Time step")->required();
  add_opt(lind);
  auto* self = app.add_subcommand("selfcheck", "Run the built-in invariant checks");
  self->add_option("--fixture", o.fixture, "Extra mixture fixture {\"weights\", \"parts\"}");
  add_opt(self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report report(sub->get_name());
  int exit_code = kOk;
  try {
    if (sub == state) state_metrics(o, report);
    else if (sub == chfid) channel_fidelity(o, report);
    else if (sub == mm) minimax(o, report);
    else if (sub == cbd) cb(o, report);
    else if (sub == uni) unitary(o, report);
    else if (sub == gauss) gaussian(o, report);
    else if (sub == pv) povm(o, report);
    else if (sub == ker) kernel(o, report);
    else if (sub == qb) qbc(o, report);
    else if (sub == lind) lindblad(o, report);
    else if (sub == self) selfcheck(o, report, exit_code);
  } catch (const Error& e) {
    err << "chanmetric " << sub->get_name() << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::NoConvergence) return kNoConvergence;
    if (e.kind() == ErrorKind::ChainViolation) return kCheckFailed;
    return kValidationError;
  } catch (const json::exception& e) {
    err << "chanmetric " << sub->get_name() << ": " << e.what() << '\n';
    return kValidationError;
  }

  out << report.finish().dump(2) << '\n';
  if (!report.converged()) {
    err << "chanmetric " << sub->get_name() << ": optimizer did not converge\n";
    if (exit_code == kOk) exit_code = kNoConvergence;
  }
  return exit_code;
}

}  // namespace chanmetric::cli
