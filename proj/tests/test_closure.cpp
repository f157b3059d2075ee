/*
 *   Copyright 2026 the operadica authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "operadica/closure.hpp"
#include "operadica/monoid.hpp"
#include "operadica/word.hpp"

namespace operadica {
namespace {

//! Reference closure by brute fixpoint: keep grafting every pair of known
//! words (and, in symmetric mode, permuting every known word) until nothing
//! new of arity <= max_arity appears.  Quadratic and slow, but independent
//! of the grade-by-grade strategy used by generate().
std::set<std::vector<Element>> naive_closure(const OperadFamily& f,
                                             int max_arity) {
  std::set<Letters> known;
  if (f.include_unit) known.insert({f.monoid.identity()});
  for (const Word& g : f.generators) {
    if (g.arity() <= max_arity) known.insert(g.letters());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Letters> snapshot(known.begin(), known.end());
    for (const Letters& xs : snapshot) {
      const Word x(f.monoid, xs);
      for (const Letters& ys : snapshot) {
        if (static_cast<int>(xs.size() + ys.size()) - 1 > max_arity) continue;
        const Word y(f.monoid, ys);
        for (int i = 1; i <= x.arity(); ++i) {
          changed |= known.insert(graft(x, i, y).letters()).second;
        }
      }
      if (f.mode == ClosureMode::Symmetric) {
        for (const Permutation& s : all_permutations(x.arity())) {
          changed |= known.insert(act(x, s).letters()).second;
        }
      }
    }
  }
  return known;
}

void check_against_naive(const OperadFamily& f, int max_arity) {
  const GradedSet fast = generate(f, max_arity);
  const std::set<Letters> slow = naive_closure(f, max_arity);
  std::set<Letters> collected;
  for (int n = 1; n <= max_arity; ++n) {
    for (const Letters& xs : fast.grade(n)) collected.insert(xs);
  }
  CHECK(collected == slow);
}

OperadFamily two_gen_nat(const std::string& name) {
  const Monoid nat = Monoid::nat_add();
  return OperadFamily(name, nat,
                      {Word(nat, {0, 0}), Word(nat, {0, 1})});
}

TEST_CASE("graded closures match a brute-force fixpoint") {
  const Monoid nat = Monoid::nat_add();
  const Monoid m2 = Monoid::mod(2);
  const Monoid m3 = Monoid::mod(3);
  const Monoid b = Monoid::bool_mult();

  // increasing-step words: 00, 01
  check_against_naive(two_gen_nat("up"), 5);
  // flat/step/down mix
  check_against_naive(OperadFamily("mix", nat,
                                   {Word(nat, {0, 0}), Word(nat, {0, 1}),
                                    Word(nat, {1, 0})}),
                      5);
  // a binary and a ternary generator
  check_against_naive(OperadFamily("tern", nat,
                                   {Word(nat, {0, 0}), Word(nat, {0, 1, 0})}),
                      5);
  // residue letters
  check_against_naive(OperadFamily("res2", m2,
                                   {Word(m2, {0, 0}), Word(m2, {0, 1})}),
                      6);
  check_against_naive(OperadFamily("res3", m3,
                                   {Word(m3, {0, 0}), Word(m3, {0, 1})}),
                      5);
  // boolean letters, one 1 per generator
  check_against_naive(OperadFamily("pick", b,
                                   {Word(b, {1, 0}), Word(b, {0, 1})}),
                      6);
  // symmetric closure of {00, 01}
  check_against_naive(OperadFamily("sym", nat,
                                   {Word(nat, {0, 0}), Word(nat, {0, 1})},
                                   ClosureMode::Symmetric),
                      4);
}

TEST_CASE("small slices are knowable by hand") {
  const GradedSet g = generate(two_gen_nat("up"), 4);
  CHECK(g.grade(1) == std::vector<Letters>{{0}});
  CHECK(g.grade(2) == std::vector<Letters>{{0, 0}, {0, 1}});
  // grafting 00/01 into 00/01 in all ways gives five arity-3 words
  CHECK(g.grade(3) ==
        std::vector<Letters>{
            {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK(g.counts() == std::vector<long long>{1, 2, 5, 14});
}

TEST_CASE("slices arrive sorted and deduplicated") {
  const Monoid nat = Monoid::nat_add();
  const GradedSet g = generate(
      OperadFamily("mix", nat,
                   {Word(nat, {0, 0}), Word(nat, {0, 1}), Word(nat, {1, 0})}),
      6);
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Letters>& slice = g.grade(n);
    CHECK(std::is_sorted(slice.begin(), slice.end()));
    CHECK(std::adjacent_find(slice.begin(), slice.end()) == slice.end());
  }
  CHECK(g.size() > 0);
  CHECK(g.max_arity() == 6);
}

TEST_CASE("the unit can be excluded") {
  const Monoid nat = Monoid::nat_add();
  const OperadFamily without("nounit", nat, {Word(nat, {0, 0})},
                             ClosureMode::NonSymmetric,
                             /*include_unit=*/false);
  const GradedSet g = generate(without, 3);
  CHECK(g.grade(1).empty());
  CHECK(g.grade(2) == std::vector<Letters>{{0, 0}});
  CHECK(g.grade(3) == std::vector<Letters>{{0, 0, 0}});
}

TEST_CASE("membership queries answer per word") {
  const Monoid nat = Monoid::nat_add();
  const OperadFamily up = two_gen_nat("up");
  CHECK(contains(up, Word(nat, {0, 1, 2})));
  CHECK(contains(up, Word(nat, {0})));
  CHECK_FALSE(contains(up, Word(nat, {1})));
  CHECK_FALSE(contains(up, Word(nat, {1, 0})));
  CHECK_FALSE(contains(up, Word(nat, {0, 2})));
  CHECK_THROWS_AS(contains(up, Word(Monoid::mod(5), {0, 1})), DomainError);
}

TEST_CASE("graded sets answer containment without regenerating") {
  const GradedSet g = generate(two_gen_nat("up"), 4);
  CHECK(g.contains(3, {0, 1, 2}));
  CHECK_FALSE(g.contains(3, {0, 2, 1}));
  CHECK(g.contains(Word(Monoid::nat_add(), {0, 1})));
  CHECK_THROWS_AS(g.grade(0), IndexError);
  CHECK_THROWS_AS(g.grade(5), IndexError);
  CHECK_FALSE(g.contains(9, {0}));
}

TEST_CASE("family construction validates its generators") {
  const Monoid nat = Monoid::nat_add();
  // arity-1 generators are rejected: only proper operations generate
  CHECK_THROWS_AS(OperadFamily("bad", nat, {Word(nat, {0})}), DomainError);
  // generators must live in the family's monoid
  CHECK_THROWS_AS(
      OperadFamily("bad", nat, {Word(Monoid::mod(2), {0, 1})}), DomainError);
}

TEST_CASE("the guard stops oversized slices with the arity reached") {
  const Monoid m3 = Monoid::mod(3);
  const OperadFamily all3("all3", m3,
                          {Word(m3, {0, 0}), Word(m3, {0, 1}),
                           Word(m3, {0, 2})});
  ResourceGuard tiny;
  tiny.max_elements = 10;
  try {
    generate(all3, 6, tiny);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.arity_reached() >= 2);
    CHECK(e.arity_reached() <= 6);
  }
}

TEST_CASE("symmetric closures stay within the supported arity range") {
  const Monoid nat = Monoid::nat_add();
  const OperadFamily sym("sym", nat,
                         {Word(nat, {0, 0}), Word(nat, {0, 1})},
                         ClosureMode::Symmetric);
  CHECK_THROWS_AS(generate(sym, 9), DomainError);
  const GradedSet g = generate(sym, 5);
  // interval words: every value between 0 and the maximum occurs
  CHECK(g.counts() == std::vector<long long>{1, 3, 13, 75, 541});
}

TEST_CASE("images collapse letters through the morphism") {
  const Monoid nat = Monoid::nat_add();
  const OperadFamily up = two_gen_nat("up");
  const MonoidMorphism theta = MonoidMorphism::mod_reduction(nat, 2);
  const GradedSet image = image_under(theta, up, 5);
  CHECK(image.monoid() == Monoid::mod(2));
  // (0,1,2) and (0,1,0) both land on (0,1,0)
  CHECK(image.contains(3, {0, 1, 0}));
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Letters>& slice = image.grade(n);
    CHECK(std::is_sorted(slice.begin(), slice.end()));
    CHECK(std::adjacent_find(slice.begin(), slice.end()) == slice.end());
  }
  CHECK_THROWS_AS(
      image_under(MonoidMorphism::identity(Monoid::mod(2)), up, 4),
      DomainError);
}

TEST_CASE("frozen slices for the named families") {
  const Monoid nat = Monoid::nat_add();
  const Monoid m2 = Monoid::mod(2);

  const OperadFamily ape("ape", nat, {Word(nat, {0, 1})});
  CHECK(generate(ape, 3).grade(3) ==
        std::vector<Letters>{{0, 1, 1}, {0, 1, 2}});

  const OperadFamily comp("comp", m2, {Word(m2, {0, 0}), Word(m2, {0, 1})});
  CHECK(generate(comp, 3).grade(3) ==
        std::vector<Letters>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}});

  const OperadFamily motz("motz", nat,
                          {Word(nat, {0, 0}), Word(nat, {0, 1, 0})});
  CHECK(generate(motz, 2).grade(2) == std::vector<Letters>{{0, 0}});
  CHECK(generate(motz, 3).grade(3) ==
        std::vector<Letters>{{0, 0, 0}, {0, 1, 0}});

  const OperadFamily schr("schr", nat,
                          {Word(nat, {0, 0}), Word(nat, {0, 1}),
                           Word(nat, {1, 0})});
  CHECK(generate(schr, 2).grade(2) ==
        std::vector<Letters>{{0, 0}, {0, 1}, {1, 0}});

  const Monoid b = Monoid::bool_mult();
  const OperadFamily dias("dias", b, {Word(b, {1, 0}), Word(b, {0, 1})});
  CHECK(generate(dias, 4).counts() == std::vector<long long>{1, 2, 3, 4});
}

}  // namespace
}  // namespace operadica
