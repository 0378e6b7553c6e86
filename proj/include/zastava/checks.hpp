#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "zastava/composition.hpp"
#include "zastava/yangian.hpp"

namespace zastava {

// One verification front end shared by the CLI and the acceptance suite.
// `mutate` is a test hook: when it names the check (or a relation id for the
// relation suite), a controlled perturbation is injected so the check must
// fail; it guards against vacuously green suites.
struct CheckConfig {
  Composition pi{std::vector<int>{1, 1}};
  int cap = 3;
  std::uint64_t seed = 42;
  int trials = 3;
  Normalization norm = Normalization::geometric;
  std::string mutate;
};

struct CheckOutcome {
  std::string name;
  bool ok = false;
  nlohmann::json report;
};

CheckOutcome check_relations(const CheckConfig& cfg);      // families (a)..(l) + truncation
CheckOutcome check_gt(const CheckConfig& cfg);             // highest weight + A-eigenvalue shape
CheckOutcome check_interpolation(const CheckConfig& cfg);  // series-built B/C vs Lagrange
CheckOutcome check_shapovalov(const CheckConfig& cfg);     // path independence + adjointness
CheckOutcome check_whittaker(const CheckConfig& cfg);      // solvability + unit-class dressing
CheckOutcome check_sl2(const CheckConfig& cfg);            // rank-1 oracle (always pi = (1,1))
CheckOutcome check_wl(const CheckConfig& cfg);             // block-permutation invariance
CheckOutcome check_virasoro(const CheckConfig& cfg);       // defining relations + dual-route norms
CheckOutcome check_dict(const CheckConfig& cfg);           // parameter dictionary identity

// Dispatch by name; throws std::invalid_argument on an unknown check name.
CheckOutcome run_check(const std::string& name, const CheckConfig& cfg);

// All check names in canonical order.
const std::vector<std::string>& all_check_names();

}  // namespace zastava
