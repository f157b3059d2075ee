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
#include <string>
#include <vector>

#include "operadica/characterize.hpp"
#include "operadica/closure.hpp"
#include "operadica/monoid.hpp"

namespace operadica {
namespace {

Word nat_word(std::initializer_list<Element> letters) {
  return Word(Monoid::nat_add(), letters);
}

TEST_CASE("every predicate accepts its own generators") {
  const Monoid nat = Monoid::nat_add();
  CHECK(FamilyPredicate(FamilyId::APE).contains(nat_word({0, 1})));
  CHECK(FamilyPredicate(FamilyId::FCat, 2).contains(nat_word({0, 2})));
  CHECK(FamilyPredicate(FamilyId::Schr).contains(nat_word({1, 0})));
  CHECK(FamilyPredicate(FamilyId::Motz).contains(nat_word({0, 1, 0})));
  CHECK(FamilyPredicate(FamilyId::Comp)
            .contains(Word(Monoid::mod(2), {0, 1})));
  CHECK(FamilyPredicate(FamilyId::SComp)
            .contains(Word(Monoid::mod(3), {0, 2})));
  CHECK(FamilyPredicate(FamilyId::Dias)
            .contains(Word(Monoid::bool_mult(), {0, 1})));
}

TEST_CASE("failures name the clause and position") {
  const FamilyPredicate ape(FamilyId::APE);
  MembershipResult r = ape.membership(nat_word({0, 1, 0}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "1 <= x_{i+1}");
  CHECK(r.position == 3);

  r = ape.membership(nat_word({1, 1}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_1 = 0");
  CHECK(r.position == 1);

  r = ape.membership(nat_word({0, 1, 3}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_{i+1} <= x_i + 1");
  CHECK(r.position == 3);

  const FamilyPredicate fcat2(FamilyId::FCat, 2);
  r = fcat2.membership(nat_word({0, 3}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_{i+1} <= x_i + 2");
  CHECK(r.position == 2);
  CHECK(fcat2.contains(nat_word({0, 2, 0})));

  const FamilyPredicate motz(FamilyId::Motz);
  r = motz.membership(nat_word({0, 1}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_n = 0");
  CHECK(r.position == 2);
  r = motz.membership(nat_word({0, 2, 0}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "|x_{i+1} - x_i| <= 1");
  CHECK(r.position == 2);

  const FamilyPredicate schr(FamilyId::Schr);
  r = schr.membership(nat_word({1, 1}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "letter 0 occurs");
  r = schr.membership(nat_word({0, 2}));
  CHECK_FALSE(r.member);
  CHECK(r.clause ==
        "a nearest smaller neighbour of x_i equals x_i - 1");
  CHECK(r.position == 2);

  const FamilyPredicate comp(FamilyId::Comp);
  r = comp.membership(Word(Monoid::mod(2), {1, 0}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_1 = 0");

  const FamilyPredicate dias(FamilyId::Dias);
  r = dias.membership(Word(Monoid::bool_mult(), {1, 1}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "exactly one letter equals 1");

  const FamilyPredicate end(FamilyId::End);
  r = end.membership(nat_word({0, 3, 1}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_i <= n - 1");
  CHECK(r.position == 2);

  const FamilyPredicate fp(FamilyId::FP);
  r = fp.membership(nat_word({2, 2, 0}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "x_(i) <= i - 1 after sorting");

  const FamilyPredicate mt(FamilyId::MT);
  r = mt.membership(nat_word({0, 2}));
  CHECK_FALSE(r.member);
  CHECK(r.clause == "value 1 in 0..max(x) does not occur");
}

TEST_CASE("predicates reject words over the wrong monoid") {
  CHECK_THROWS_AS(
      FamilyPredicate(FamilyId::APE).membership(Word(Monoid::mod(2), {0, 1})),
      DomainError);
  CHECK_THROWS_AS(
      FamilyPredicate(FamilyId::Comp).membership(nat_word({0, 1})),
      DomainError);
}

TEST_CASE("closure-only and free families have no predicate") {
  CHECK_THROWS_AS(FamilyPredicate(FamilyId::AnD), DomainError);
  CHECK_THROWS_AS(FamilyPredicate(FamilyId::TN), DomainError);
  CHECK_THROWS_AS(FamilyPredicate(FamilyId::TN2), DomainError);
}

TEST_CASE("slices are sorted and sized consistently") {
  const FamilyPredicate fcat1(FamilyId::FCat, 1);
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Letters> slice = fcat1.slice(n);
    CHECK(std::is_sorted(slice.begin(), slice.end()));
    CHECK(static_cast<long long>(slice.size()) == fcat1.slice_size(n));
    for (const Letters& xs : slice) {
      CHECK(fcat1.contains(Word(fcat1.monoid(), xs)));
    }
  }
  CHECK(fcat1.slice_size(1) == 1);
  CHECK(fcat1.slice_size(4) == 14);
}

TEST_CASE("parking-function counts follow the classic sequence") {
  const FamilyPredicate fp(FamilyId::FP);
  CHECK(fp.slice_size(1) == 1);
  CHECK(fp.slice_size(2) == 3);
  CHECK(fp.slice_size(3) == 16);
  CHECK(fp.slice_size(4) == 125);

  const FamilyPredicate end(FamilyId::End);
  for (int n = 1; n <= 5; ++n) {
    long long expected = 1;
    for (int i = 0; i < n; ++i) expected *= n;
    CHECK(end.slice_size(n) == expected);
  }
}

OperadFamily closure_family(const char* name, const Monoid& m,
                            std::vector<Letters> gens,
                            ClosureMode mode = ClosureMode::NonSymmetric) {
  std::vector<Word> words;
  words.reserve(gens.size());
  for (Letters& g : gens) words.emplace_back(m, std::move(g));
  return OperadFamily(name, m, std::move(words), mode);
}

TEST_CASE("characterizations agree with generator closures") {
  const Monoid nat = Monoid::nat_add();
  const Monoid m2 = Monoid::mod(2);
  const Monoid m3 = Monoid::mod(3);

  struct Row {
    FamilyPredicate predicate;
    OperadFamily family;
    int max_arity;
  };
  const std::vector<Row> rows = {
      {FamilyPredicate(FamilyId::APE),
       closure_family("ape", nat, {{0, 1}}), 6},
      {FamilyPredicate(FamilyId::FCat, 0),
       closure_family("fcat:0", nat, {{0, 0}}), 6},
      {FamilyPredicate(FamilyId::FCat, 1),
       closure_family("fcat:1", nat, {{0, 0}, {0, 1}}), 6},
      {FamilyPredicate(FamilyId::FCat, 2),
       closure_family("fcat:2", nat, {{0, 0}, {0, 1}, {0, 2}}), 5},
      {FamilyPredicate(FamilyId::Schr),
       closure_family("schr", nat, {{0, 0}, {0, 1}, {1, 0}}), 5},
      {FamilyPredicate(FamilyId::Motz),
       closure_family("motz", nat, {{0, 0}, {0, 1, 0}}), 6},
      {FamilyPredicate(FamilyId::Comp),
       closure_family("comp", m2, {{0, 0}, {0, 1}}), 7},
      {FamilyPredicate(FamilyId::SComp),
       closure_family("scomp", m3, {{0, 0}, {0, 1}, {0, 2}}), 6},
      {FamilyPredicate(FamilyId::MT),
       closure_family("mt", nat, {{0, 0}, {0, 1}}, ClosureMode::Symmetric),
       5},
      {FamilyPredicate(FamilyId::Dias),
       closure_family("dias", Monoid::bool_mult(), {{1, 0}, {0, 1}}), 6},
  };
  for (const Row& row : rows) {
    const CrossValidation cv =
        cross_validate(row.predicate, row.family, row.max_arity);
    INFO(cv.to_text());
    CHECK(cv.agree);
    CHECK(cv.witness.empty());
    CHECK(cv.predicate_counts == cv.closure_counts);
    CHECK(cv.max_arity == row.max_arity);
  }
}

TEST_CASE("a genuine mismatch is reported with a witness") {
  // The staircase predicate is strictly smaller than the closure of
  // {00, 01}: the closure contains (0,0) but steps in the predicate must
  // start at 1.
  const CrossValidation cv = cross_validate(
      FamilyPredicate(FamilyId::APE),
      closure_family("fcat:1", Monoid::nat_add(), {{0, 0}, {0, 1}}), 4);
  CHECK_FALSE(cv.agree);
  CHECK_FALSE(cv.witness.empty());
  CHECK(cv.witness.find("0,0") != std::string::npos);
  CHECK(cv.to_text().find("disagree") != std::string::npos);
}

TEST_CASE("interval words sit inside parking functions inside endomorphisms") {
  const FamilyPredicate mt(FamilyId::MT);
  const FamilyPredicate fp(FamilyId::FP);
  const FamilyPredicate end(FamilyId::End);
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Letters> mts = mt.slice(n);
    const std::vector<Letters> fps = fp.slice(n);
    const std::vector<Letters> ends = end.slice(n);
    CHECK(std::includes(fps.begin(), fps.end(), mts.begin(), mts.end()));
    CHECK(std::includes(ends.begin(), ends.end(), fps.begin(), fps.end()));
    if (n >= 3) {
      // the chain is strict once the slices grow apart
      CHECK(mts.size() < fps.size());
      CHECK(fps.size() < ends.size());
    }
  }
}

TEST_CASE("parking functions are closed under grafting") {
  const FamilyPredicate fp(FamilyId::FP);
  const Monoid nat = Monoid::nat_add();
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (const Letters& xs : fp.slice(a)) {
        const Word x(nat, xs);
        for (const Letters& ys : fp.slice(b)) {
          const Word y(nat, ys);
          for (int i = 1; i <= a; ++i) {
            CHECK(fp.contains(graft(x, i, y)));
          }
        }
      }
    }
  }
}

TEST_CASE("the stable families are closed under the positional action") {
  for (FamilyId id : {FamilyId::MT, FamilyId::FP, FamilyId::End}) {
    const FamilyPredicate pred(id);
    for (int n = 1; n <= 4; ++n) {
      for (const Letters& xs : pred.slice(n)) {
        const Word x(pred.monoid(), xs);
        for (const Permutation& s : all_permutations(n)) {
          CHECK(pred.contains(act(x, s)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace operadica
