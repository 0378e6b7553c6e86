#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "zastava/gt_pattern.hpp"

using namespace zastava;

namespace {

// brute-force oracle: filter the full product space of cell values
std::vector<GTPattern> brute_force_patterns(const Composition& pi, const DegreeVector& d) {
  std::vector<GTPattern> out;
  GTPattern cur(pi);
  const std::size_t cells = cur.cells.size();
  const int cap = total_degree(d);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells) {
      if (is_valid_pattern(cur) && degree_of(cur) == d) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur.cells[idx] = v;
      rec(idx + 1);
    }
    cur.cells[idx] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("composition validation") {
  CHECK_THROWS(Composition({2, 1}));
  CHECK_THROWS(Composition({0, 1}));
  CHECK_THROWS(Composition({}));
  const Composition pi({1, 2, 2});
  CHECK(pi.N() == 5);
  CHECK(pi.offset(2) == 3);
  CHECK(pi.e_min(1) == 2);
  CHECK(pi.e_min(2) == 1);
}

TEST_CASE("enumerate_patterns: single cell") {
  const Composition pi({1, 1});
  const auto pats = enumerate_patterns(pi, {3});
  REQUIRE(pats.size() == 1);
  CHECK(pats[0].at(1, 1, 1) == 3);
}

TEST_CASE("enumerate_patterns: monotonicity for pi=(1,1,1)") {
  const Composition pi({1, 1, 1});
  const auto pats = enumerate_patterns(pi, {1, 1});
  REQUIRE(pats.size() == 2);
  // {d11=1, d21=1, d22=0} and {d11=1, d21=0, d22=1}; d21 <= d11 throughout
  std::set<std::vector<int>> found;
  for (const auto& p : pats) {
    CHECK(p.at(1, 1, 1) == 1);
    CHECK(p.at(2, 1, 1) <= p.at(1, 1, 1));
    found.insert({p.at(2, 1, 1), p.at(2, 2, 1)});
  }
  CHECK(found == std::set<std::vector<int>>{{1, 0}, {0, 1}});
}

TEST_CASE("enumerate_patterns: pi=(2,2) degree 2 has three points") {
  const Composition pi({2, 2});
  const auto pats = enumerate_patterns(pi, {2});
  REQUIRE(pats.size() == 3);
  std::set<std::pair<int, int>> found;
  for (const auto& p : pats) found.insert({p.at(1, 1, 1), p.at(1, 1, 2)});
  CHECK(found == std::set<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("enumeration matches the brute-force filter") {
  for (const Composition& pi :
       {Composition({1, 1}), Composition({1, 2}), Composition({2, 2}), Composition({1, 1, 1}),
        Composition({1, 1, 2})}) {
    for (const auto& d : degree_vectors_up_to(pi.n() - 1, 3)) {
      const auto fast = enumerate_patterns(pi, d);
      const auto slow = brute_force_patterns(pi, d);
      CHECK(fast == slow);
      for (const auto& p : fast) {
        CHECK(is_valid_pattern(p));
        CHECK(degree_of(p) == d);
      }
    }
  }
  CHECK_THROWS(enumerate_patterns(Composition({1, 1}), {1, 1}));
}

TEST_CASE("ordinary flag case pi=(1,...,1) counts") {
  // no constraint beyond column monotonicity: counts must match brute force
  const Composition pi({1, 1, 1, 1});
  long total = 0;
  for (const auto& d : degree_vectors_up_to(3, 3))
    total += static_cast<long>(enumerate_patterns(pi, d).size());
  long brute = 0;
  for (const auto& d : degree_vectors_up_to(3, 3))
    brute += static_cast<long>(brute_force_patterns(pi, d).size());
  CHECK(total == brute);
}

TEST_CASE("p_value conventions") {
  const Composition pi({1, 1});
  const SpecEnv env = make_spec_env(2, 4, 42);

  GTPattern pat(pi);
  pat.at(1, 1, 1) = 1;
  CHECK(p_value(pat, 1, 1, 1, env) == env.hbar - env.x_at(1));

  const GTPattern zero(pi);
  CHECK(p_value(zero, 1, 1, 1, env) == -env.x_at(1));
  CHECK(p_value(zero, 2, 2, 1, env) == -env.x_at(2));  // top row
  CHECK_THROWS(p_value(zero, 3, 1, 1, env));
}

TEST_CASE("degree_of row sums") {
  const Composition pi({1, 1, 1});
  GTPattern pat(pi);
  CHECK(degree_of(pat) == DegreeVector{0, 0});
  pat.at(1, 1, 1) = 1;
  pat.at(2, 1, 1) = 1;
  CHECK(degree_of(pat) == DegreeVector{1, 1});

  const Composition pi2({2, 2});
  GTPattern pat2(pi2);
  pat2.at(1, 1, 1) = 1;
  pat2.at(1, 1, 2) = 1;
  CHECK(degree_of(pat2) == DegreeVector{2});
}

TEST_CASE("quasiflag dimensions") {
  const Composition pi({1, 1});
  CHECK(quasiflag_dimension(pi, {1}, true) == 2);
  CHECK(quasiflag_dimension(pi, {1}, false) == 3);
  CHECK(quasiflag_dimension(Composition({2, 3}), {0}, true) == 0);
  CHECK(quasiflag_dimension(Composition({1, 2, 2}), {2, 1}, true) == 2 * 3 + 1 * 4);
}

TEST_CASE("pattern json form") {
  const Composition pi({1, 2});
  GTPattern pat(pi);
  pat.at(1, 1, 1) = 2;
  const auto j = pattern_to_json(pat);
  CHECK(j["pi"] == nlohmann::json({1, 2}));
  CHECK(j["rows"]["1,1"] == nlohmann::json({2}));
  CHECK(pattern_key(pat) == "1,1:2");
}
