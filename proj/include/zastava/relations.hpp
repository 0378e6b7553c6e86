#pragma once

#include <string>

#include "json.hpp"
#include "zastava/yangian.hpp"

namespace zastava {

// The defining relation families of the shifted algebra, plus the truncation
// relation d_1^{(r)} = 0 for r > p_1.
enum class RelId { a, b, c, d, e, f, g, h, i, j, k, l, truncation };

std::string rel_name(RelId rel);
RelId rel_from_name(const std::string& name);  // throws on unknown name

struct VerifyOptions {
  Normalization norm = Normalization::geometric;
  // test hook: perturbs the right side of the first instance so the verifier
  // must report a failure
  bool mutate = false;
  // superscripts range up to this bound; <= 0 selects the default
  // cap * max(p_i) + max(p_{i+1} - p_i) + 2
  int superscript_bound = 0;
};

struct RelationResult {
  bool ok = true;
  long instances = 0;        // relation instances checked (all trials)
  nlohmann::json witness;    // first failure: relation, pi, degree, instance, lhs, rhs
};

// Checks one relation family as exact operator identities on every weight
// space with total degree <= degree_cap, for all admissible index/superscript
// tuples up to the bound.  Trial 0 uses env; later trials redraw a fresh
// generic point from env.seed.  Failure is a value, not an error.
RelationResult verify_relation(RelId rel, const Composition& pi, int degree_cap,
                               const SpecEnv& env, int trials, const VerifyOptions& opts = {});

int default_superscript_bound(const Composition& pi, int degree_cap);

}  // namespace zastava
