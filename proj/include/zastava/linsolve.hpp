#pragma once

#include <vector>

#include "zastava/rational.hpp"

namespace zastava {

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status;
  std::vector<Rat> solution;  // populated only when status == unique
};

// Exact Gauss elimination over Q for a (possibly overdetermined) system
// A x = b, rows = A.size().  Reports whether the solution is unique,
// non-unique, or nonexistent.
SolveResult solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

}  // namespace zastava
