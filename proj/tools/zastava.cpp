#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zastava/checks.hpp"
#include "zastava/partition.hpp"
#include "zastava/relations.hpp"
#include "zastava/virasoro.hpp"

namespace {

using namespace zastava;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_pi(const std::string& s, Composition& pi) {
  std::vector<int> parts;
  for (const auto& tok : split_csv(s)) {
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      std::cerr << "error: cannot parse pi entry '" << tok << "'\n";
      return 2;
    }
  }
  try {
    pi = Composition(parts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int parse_rat_arg(const std::string& s, const char* name, Rat& out) {
  try {
    out = rat_from_string(s);
  } catch (const std::invalid_argument&) {
    std::cerr << "error: cannot parse --" << name << " value '" << s << "'\n";
    return 2;
  }
  return 0;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

struct ComputeArgs {
  std::string pi_str = "1,1";
  int cap = 3;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string sign_rule = "sum";
  bool dump_whittaker = false;
};

int run_compute(const ComputeArgs& args) {
  Composition pi;
  if (int rc = parse_pi(args.pi_str, pi)) return rc;
  if (args.cap < 0) {
    std::cerr << "error: cap must be >= 0\n";
    return 2;
  }
  const SignRule rule = args.sign_rule == "rho" ? SignRule::rho_pairing : SignRule::total_degree;

  const SpecEnv env = make_spec_env(pi.N(), args.cap + 4, args.seed);
  GTModule mod(pi, env);
  PartitionEngine engine(mod);

  ZSeries z;
  z.pi = pi;
  z.cap = args.cap;
  z.env = env;
  for (const auto& d : degree_vectors_up_to(pi.n() - 1, args.cap))
    z.terms[d] = engine.z_coefficient(d, rule);

  if (args.format == "csv") {
    std::cout << zseries_to_csv(z);
    return 0;
  }
  nlohmann::json j = zseries_to_json(z);
  if (args.dump_whittaker) {
    nlohmann::json dumps = nlohmann::json::array();
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, args.cap))
      dumps.push_back(whittaker_to_json({d, engine.whittaker(d)}));
    j["whittaker"] = dumps;
  }
  emit(j);
  return 0;
}

struct VerifyArgs {
  std::string pi_str = "1,1";
  int cap = 3;
  std::uint64_t seed = 42;
  int trials = 3;
  std::string checks = "relations,gt,interp,shapovalov,whittaker,sl2,wl,virasoro,dict";
  std::string normalization = "geometric";
  std::string format = "json";
  std::string mutate;
};

int run_verify(const VerifyArgs& args) {
  CheckConfig cfg;
  if (int rc = parse_pi(args.pi_str, cfg.pi)) return rc;
  if (args.cap < 0) {
    std::cerr << "error: cap must be >= 0\n";
    return 2;
  }
  if (args.trials < 1) {
    std::cerr << "error: trials must be >= 1\n";
    return 2;
  }
  cfg.cap = args.cap;
  cfg.seed = args.seed;
  cfg.trials = args.trials;
  cfg.mutate = args.mutate;
  if (args.normalization == "fmo")
    cfg.norm = Normalization::fmo;
  else if (args.normalization != "geometric") {
    std::cerr << "error: unknown normalization '" << args.normalization << "'\n";
    return 2;
  }

  std::vector<CheckOutcome> outcomes;
  for (const auto& name : split_csv(args.checks)) {
    try {
      outcomes.push_back(run_check(name, cfg));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const std::runtime_error& e) {
      CheckOutcome failed;
      failed.name = name;
      failed.ok = false;
      failed.report = {{"error", e.what()}};
      outcomes.push_back(failed);
    }
  }

  bool all_ok = true;
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& o : outcomes) {
    all_ok = all_ok && o.ok;
    checks_json.push_back({{"name", o.name}, {"ok", o.ok}, {"report", o.report}});
  }

  if (args.format == "json") {
    emit(nlohmann::json{{"command", "verify"},
                        {"pi", cfg.pi.parts},
                        {"cap", cfg.cap},
                        {"seed", cfg.seed},
                        {"trials", cfg.trials},
                        {"ok", all_ok},
                        {"checks", checks_json}});
  } else {
    for (const auto& o : outcomes)
      std::cout << "check " << o.name << ": " << (o.ok ? "PASS" : "FAIL") << "\n";
    for (const auto& o : outcomes)
      if (!o.ok && o.report.contains("witness")) {
        std::cout << o.report["witness"].dump(2) << "\n";
        break;
      }
  }
  return all_ok ? 0 : 1;
}

struct VirasoroArgs {
  std::string delta_str, c_str, a_str, eps1_str, eps2_str;
  int cap = 4;
  std::uint64_t seed = 42;
  std::string format = "json";
};

int run_virasoro(const VirasoroArgs& args) {
  const bool have_dc = !args.delta_str.empty() && !args.c_str.empty();
  const bool have_a = !args.a_str.empty() && !args.eps1_str.empty() && !args.eps2_str.empty();
  if (have_dc == have_a) {
    std::cerr << "error: provide either --delta/--c or --a/--eps1/--eps2\n";
    return 2;
  }
  if (args.cap < 0) {
    std::cerr << "error: cap must be >= 0\n";
    return 2;
  }

  VirParams params;
  Rat a, e1, e2;
  if (have_dc) {
    if (int rc = parse_rat_arg(args.delta_str, "delta", params.delta)) return rc;
    if (int rc = parse_rat_arg(args.c_str, "c", params.c)) return rc;
  } else {
    if (int rc = parse_rat_arg(args.a_str, "a", a)) return rc;
    if (int rc = parse_rat_arg(args.eps1_str, "eps1", e1)) return rc;
    if (int rc = parse_rat_arg(args.eps2_str, "eps2", e2)) return rc;
    try {
      params = agt_params(a, e1, e2);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }

  std::vector<Rat> norms;
  try {
    norms = nekrasov_series(params, args.cap);
  } catch (const DegenerateLevelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  if (args.format == "csv") {
    std::cout << "d,norm\n";
    for (std::size_t d = 0; d < norms.size(); ++d)
      std::cout << d << "," << to_string(norms[d]) << "\n";
    return 0;
  }
  nlohmann::json j = virasoro_to_json(params, norms);
  if (have_a) {
    const auto [chi, k] = chic_map(a, e1, e2);
    const VirParams via_ff = ff_params(chi, k);
    j["dictionary"] = {{"a", to_string(a)},
                       {"eps1", to_string(e1)},
                       {"eps2", to_string(e2)},
                       {"chi", to_string(chi)},
                       {"k", to_string(k)},
                       {"ff_delta", to_string(via_ff.delta)},
                       {"ff_c", to_string(via_ff.c)},
                       {"match", via_ff.delta == params.delta && via_ff.c == params.c},
                       {"dictionary_check", dictionary_check(20, args.seed)}};
  }
  emit(j);
  return 0;
}

struct DictArgs {
  int trials = 20;
  std::uint64_t seed = 42;
  std::string a_str, eps1_str, eps2_str;
};

int run_dict(const DictArgs& args) {
  nlohmann::json j{{"command", "agt-dict"}, {"trials", args.trials}, {"seed", args.seed}};
  const bool ok = dictionary_check(args.trials, args.seed);
  j["ok"] = ok;
  if (!args.a_str.empty() && !args.eps1_str.empty() && !args.eps2_str.empty()) {
    Rat a, e1, e2;
    if (int rc = parse_rat_arg(args.a_str, "a", a)) return rc;
    if (int rc = parse_rat_arg(args.eps1_str, "eps1", e1)) return rc;
    if (int rc = parse_rat_arg(args.eps2_str, "eps2", e2)) return rc;
    try {
      const auto [chi, k] = chic_map(a, e1, e2);
      const VirParams via_ff = ff_params(chi, k);
      const VirParams direct = agt_params(a, e1, e2);
      j["example"] = {{"chi", to_string(chi)},
                      {"k", to_string(k)},
                      {"delta", to_string(direct.delta)},
                      {"c", to_string(direct.c)},
                      {"match", via_ff.delta == direct.delta && via_ff.c == direct.c}};
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 3;
    }
  }
  emit(j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zastava: exact quasimap partition series, shifted-algebra verification, "
               "and the Virasoro side of the instanton dictionary"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "compute the partition series Z for a composition");
  compute->add_option("--pi", compute_args.pi_str, "composition, comma separated (weakly increasing)")->capture_default_str();
  compute->add_option("--cap", compute_args.cap, "total degree cap")->capture_default_str();
  compute->add_option("--seed", compute_args.seed, "specialization seed")->capture_default_str();
  compute->add_option("--format", compute_args.format, "json or csv")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--sign-rule", compute_args.sign_rule, "sum or rho degree-sign rule")->capture_default_str()
      ->check(CLI::IsMember({"sum", "rho"}));
  compute->add_flag("--whittaker", compute_args.dump_whittaker, "include Whittaker component dumps");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--pi", verify_args.pi_str, "composition, comma separated")->capture_default_str();
  verify->add_option("--cap", verify_args.cap, "total degree cap")->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "specialization seed")->capture_default_str();
  verify->add_option("--trials", verify_args.trials, "independent specializations per relation")->capture_default_str();
  verify->add_option("--checks", verify_args.checks, "comma separated check names")->capture_default_str();
  verify->add_option("--normalization", verify_args.normalization, "geometric or fmo")->capture_default_str()
      ->check(CLI::IsMember({"geometric", "fmo"}));
  verify->add_option("--format", verify_args.format, "json or text")->capture_default_str()
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--mutate", verify_args.mutate)->group("");  // test hook

  VirasoroArgs vir_args;
  auto* vir = app.add_subcommand("virasoro", "Whittaker norms of a Virasoro Verma module");
  vir->add_option("--delta", vir_args.delta_str, "highest L0 eigenvalue (rational)");
  vir->add_option("--c", vir_args.c_str, "central charge (rational)");
  vir->add_option("--a", vir_args.a_str, "equivariant parameter a (rational)");
  vir->add_option("--eps1", vir_args.eps1_str, "equivariant parameter eps1 (rational)");
  vir->add_option("--eps2", vir_args.eps2_str, "equivariant parameter eps2 (rational)");
  vir->add_option("--cap", vir_args.cap, "highest level")->capture_default_str();
  vir->add_option("--seed", vir_args.seed, "seed for the dictionary spot check")->capture_default_str();
  vir->add_option("--format", vir_args.format, "json or csv")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  DictArgs dict_args;
  auto* dict = app.add_subcommand("agt-dict", "check the parameter dictionary identity");
  dict->add_option("--trials", dict_args.trials, "random parameter triples")->capture_default_str();
  dict->add_option("--seed", dict_args.seed, "seed")->capture_default_str();
  dict->add_option("--a", dict_args.a_str, "optional a for a printed example");
  dict->add_option("--eps1", dict_args.eps1_str, "optional eps1");
  dict->add_option("--eps2", dict_args.eps2_str, "optional eps2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (vir->parsed()) return run_virasoro(vir_args);
    if (dict->parsed()) return run_dict(dict_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
