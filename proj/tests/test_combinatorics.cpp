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

#include <set>
#include <string>
#include <vector>

#include "operadica/combinatorics.hpp"
#include "operadica/monoid.hpp"

namespace operadica {
namespace {

TEST_CASE("catalan numbers") {
  const std::vector<long long> expected = {1,  1,   2,   5,    14,  42,
                                           132, 429, 1430, 4862};
  for (int m = 0; m < static_cast<int>(expected.size()); ++m) {
    CHECK(catalan(m) == expected[static_cast<std::size_t>(m)]);
  }
  CHECK_THROWS_AS(catalan(-1), DomainError);
}

TEST_CASE("fuss numbers generalize the catalan sequence") {
  for (int m = 0; m <= 8; ++m) {
    CHECK(fuss_catalan(1, m) == catalan(m));
  }
  // k = 0: a single chain shape at every size
  for (int m = 0; m <= 8; ++m) {
    CHECK(fuss_catalan(0, m) == 1);
  }
  // ternary trees: 1, 1, 3, 12, 55, 273
  CHECK(fuss_catalan(2, 2) == 3);
  CHECK(fuss_catalan(2, 3) == 12);
  CHECK(fuss_catalan(2, 4) == 55);
  CHECK(fuss_catalan(2, 5) == 273);
  // quaternary trees: 1, 1, 4, 22, 140
  CHECK(fuss_catalan(3, 2) == 4);
  CHECK(fuss_catalan(3, 3) == 22);
  CHECK(fuss_catalan(3, 4) == 140);
  CHECK_THROWS_AS(fuss_catalan(-1, 2), DomainError);
}

TEST_CASE("motzkin numbers") {
  const std::vector<long long> expected = {1, 1, 2, 4, 9, 21, 51, 127, 323};
  for (int m = 0; m < static_cast<int>(expected.size()); ++m) {
    CHECK(motzkin(m) == expected[static_cast<std::size_t>(m)]);
  }
}

TEST_CASE("trees with no unary nodes follow the super-catalan sequence") {
  const std::vector<long long> expected = {1, 1, 3, 11, 45, 197, 903, 4279};
  for (int m = 1; m <= static_cast<int>(expected.size()); ++m) {
    CHECK(super_catalan(m) == expected[static_cast<std::size_t>(m - 1)]);
  }
  CHECK_THROWS_AS(super_catalan(0), DomainError);
}

TEST_CASE("ordered bell numbers") {
  const std::vector<long long> expected = {1, 1, 3, 13, 75, 541, 4683};
  for (int m = 0; m < static_cast<int>(expected.size()); ++m) {
    CHECK(ordered_bell(m) == expected[static_cast<std::size_t>(m)]);
  }
}

TEST_CASE("both animal-counting routes agree") {
  const std::vector<long long> expected = {1, 2, 5, 13, 35, 96, 267, 750};
  for (int m = 1; m <= 8; ++m) {
    CHECK(directed_animal_count(m) == expected[static_cast<std::size_t>(m - 1)]);
    CHECK(directed_animal_recurrence(m) ==
          expected[static_cast<std::size_t>(m - 1)]);
  }
  // the dynamic programming route continues past the backtracking limit
  CHECK(directed_animal_recurrence(9) == 2123);
  CHECK(directed_animal_recurrence(10) == 6046);
  CHECK_THROWS_AS(directed_animal_count(9), DomainError);
  CHECK_THROWS_AS(directed_animal_count(0), DomainError);
}

TEST_CASE("integer powers are exact") {
  CHECK(power(2, 0) == 1);
  CHECK(power(2, 10) == 1024);
  CHECK(power(3, 7) == 2187);
  CHECK(power(10, 0) == 1);
  CHECK_THROWS_AS(power(2, 63), DomainError);
}

TEST_CASE("oracle counts use each family's size convention") {
  // staircase words of arity n match bracketings with n - 1 pairs
  CHECK(oracle_count(FamilyId::APE, 0, 7) == 132);
  // k-step staircases match (k+1)-ary trees with n internal nodes
  CHECK(oracle_count(FamilyId::FCat, 1, 6) == 132);
  CHECK(oracle_count(FamilyId::FCat, 2, 5) == 273);
  CHECK(oracle_count(FamilyId::FCat, 0, 8) == 1);
  // mountain words of arity n match paths with n - 1 steps
  CHECK(oracle_count(FamilyId::Motz, 0, 8) == 127);
  // branching words of arity n match trees with n + 1 leaves
  CHECK(oracle_count(FamilyId::Schr, 0, 5) == 197);
  CHECK(oracle_count(FamilyId::Comp, 0, 10) == 512);
  CHECK(oracle_count(FamilyId::SComp, 0, 7) == 729);
  CHECK(oracle_count(FamilyId::AnD, 0, 6) == 96);
  CHECK(oracle_count(FamilyId::Dias, 0, 9) == 9);
  CHECK(oracle_count(FamilyId::End, 0, 4) == 256);
  CHECK(oracle_count(FamilyId::FP, 0, 4) == 125);
  CHECK(oracle_count(FamilyId::MT, 0, 5) == 541);
  CHECK(oracle_count(FamilyId::TN2, 0, 4) == 16);
  CHECK(oracle_count(FamilyId::TN3, 0, 3) == 27);
  CHECK_THROWS_AS(oracle_count(FamilyId::TN, 0, 3), DomainError);
}

TEST_CASE("renderings are canonical per object") {
  CHECK(render(MotzkinPath{"UFD"}) == "UFD");
  CHECK(render(MotzkinPath{""}) == "-");
  CHECK(render(Composition{{3, 1, 2}}) == "3+1+2");
  CHECK(render(SegmentedComposition{{{2, 1}, {3}}}) == "2+1|3");
  PlaneTree leafy;
  leafy.children.resize(2);
  CHECK(render(CombObject{leafy}) == "(()())");
  SchroederTree tip;
  SchroederTree pair_node;
  pair_node.leaf = false;
  pair_node.children = {tip, tip};
  CHECK(render(CombObject{pair_node}) == "(..)");
}

Word nat_word(std::initializer_list<Element> letters) {
  return Word(Monoid::nat_add(), letters);
}

TEST_CASE("mountain words read off their step sequences") {
  const CombObject path = word_to_object(FamilyId::Motz, 0, nat_word({0, 1, 1, 0}));
  CHECK(render(path) == "UFD");
  CHECK(render(word_to_object(FamilyId::Motz, 0, nat_word({0}))) == "-");
}

TEST_CASE("runs of a first-letter-zero word become composition parts") {
  const Monoid m2 = Monoid::mod(2);
  const CombObject c =
      word_to_object(FamilyId::Comp, 0, Word(m2, {0, 1, 1, 0, 1}));
  CHECK(render(c) == "3+2");
  const Monoid m3 = Monoid::mod(3);
  const CombObject s =
      word_to_object(FamilyId::SComp, 0, Word(m3, {0, 1, 2, 0, 1}));
  CHECK(render(s) == "2+1|2");
}

TEST_CASE("object construction rejects words outside the family") {
  CHECK_THROWS_AS(word_to_object(FamilyId::Motz, 0, nat_word({0, 2, 0})),
                  DomainError);
  CHECK_THROWS_AS(word_to_object(FamilyId::APE, 0, nat_word({1, 1})),
                  DomainError);
  CHECK_THROWS_AS(
      word_to_object(FamilyId::Comp, 0, nat_word({0, 1})), DomainError);
  // no object encoding for the free families
  CHECK_THROWS_AS(word_to_object(FamilyId::End, 0, nat_word({0, 0})),
                  DomainError);
}

TEST_CASE("distinct staircase words give distinct trees") {
  std::set<std::string> seen;
  const std::vector<Letters> arity4 = {{0, 1, 1, 1}, {0, 1, 1, 2},
                                       {0, 1, 2, 1}, {0, 1, 2, 2},
                                       {0, 1, 2, 3}};
  for (const Letters& xs : arity4) {
    const Word x(Monoid::nat_add(), xs);
    seen.insert(render(word_to_object(FamilyId::APE, 0, x)));
  }
  CHECK(seen.size() == arity4.size());
}

OperadFamily family_of(const char* name, const Monoid& m,
                       std::vector<Letters> gens) {
  std::vector<Word> words;
  for (Letters& g : gens) words.emplace_back(m, std::move(g));
  return OperadFamily(name, m, std::move(words));
}

TEST_CASE("bijectivity reports confirm the small encodings") {
  const Monoid nat = Monoid::nat_add();
  const Monoid m2 = Monoid::mod(2);

  const BijectivityReport motz = bijectivity_report(
      FamilyId::Motz, 0, family_of("motz", nat, {{0, 0}, {0, 1, 0}}), 5);
  CHECK(motz.passed());
  CHECK(motz.members == 9);
  CHECK(motz.distinct_objects == 9);
  CHECK(motz.oracle == 9);
  CHECK(motz.collision_witness.empty());

  const BijectivityReport comp = bijectivity_report(
      FamilyId::Comp, 0, family_of("comp", m2, {{0, 0}, {0, 1}}), 6);
  CHECK(comp.passed());
  CHECK(comp.members == 32);

  const BijectivityReport ape = bijectivity_report(
      FamilyId::APE, 0, family_of("ape", nat, {{0, 1}}), 5);
  CHECK(ape.passed());
  CHECK(ape.members == 14);
  CHECK(ape.to_text().find("injective") != std::string::npos);
}

}  // namespace
}  // namespace operadica
