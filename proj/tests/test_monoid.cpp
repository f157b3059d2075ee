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
#include "operadica/monoid.hpp"

namespace operadica {
namespace {

TEST_CASE("additive monoids combine by addition") {
  const Monoid nat = Monoid::nat_add();
  CHECK(nat.identity() == 0);
  CHECK(nat.combine(3, 4) == 7);
  CHECK_FALSE(nat.finite());
  CHECK(nat.contains(0));
  CHECK_FALSE(nat.contains(-1));

  const Monoid integers = Monoid::int_add();
  CHECK(integers.combine(-3, 4) == 1);
  CHECK(integers.contains(-100));
  CHECK_FALSE(integers.finite());
}

TEST_CASE("mod-k reduces products to canonical residues") {
  const Monoid m3 = Monoid::mod(3);
  CHECK(m3.identity() == 0);
  CHECK(m3.combine(2, 2) == 1);
  CHECK(m3.finite());
  CHECK(m3.carrier() == std::vector<Element>{0, 1, 2});
  CHECK(m3.modulus() == 3);
  CHECK_FALSE(m3.contains(3));
  CHECK_THROWS_AS(m3.combine(3, 0), DomainError);
  CHECK_THROWS_AS(Monoid::mod(0), DomainError);
}

TEST_CASE("boolean multiplication has identity one") {
  const Monoid b = Monoid::bool_mult();
  CHECK(b.identity() == 1);
  CHECK(b.combine(1, 1) == 1);
  CHECK(b.combine(1, 0) == 0);
  CHECK(b.combine(0, 0) == 0);
  CHECK(b.carrier() == std::vector<Element>{0, 1});
}

TEST_CASE("associativity and unit laws hold on small windows") {
  for (const Monoid& m : {Monoid::nat_add(), Monoid::mod(2), Monoid::mod(5),
                          Monoid::bool_mult()}) {
    const std::vector<Element> window =
        m.finite() ? m.carrier() : std::vector<Element>{0, 1, 2, 3, 4};
    for (Element a : window) {
      CHECK(m.combine(m.identity(), a) == a);
      CHECK(m.combine(a, m.identity()) == a);
      for (Element b : window) {
        for (Element c : window) {
          CHECK(m.combine(m.combine(a, b), c) ==
                m.combine(a, m.combine(b, c)));
        }
      }
    }
  }
}

TEST_CASE("spec strings parse to the matching monoid") {
  CHECK(Monoid::parse("nat-add") == Monoid::nat_add());
  CHECK(Monoid::parse("int-add") == Monoid::int_add());
  CHECK(Monoid::parse("mod:4") == Monoid::mod(4));
  CHECK(Monoid::parse("bool-mult") == Monoid::bool_mult());
  CHECK_THROWS_AS(Monoid::parse("ring:3"), UsageError);
  CHECK_THROWS_AS(Monoid::parse("mod:x"), UsageError);
  CHECK_THROWS_AS(Monoid::parse("mod:0"), UsageError);
}

TEST_CASE("equality distinguishes kinds and moduli") {
  CHECK(Monoid::mod(2) == Monoid::mod(2));
  CHECK(Monoid::mod(2) != Monoid::mod(3));
  CHECK(Monoid::nat_add() != Monoid::int_add());
  CHECK(Monoid::nat_add() != Monoid::mod(2));
}

TEST_CASE("custom monoids run the supplied product") {
  const Monoid maxm = Monoid::custom(
      "max", 0, [](Element a, Element b) { return a > b ? a : b; },
      [](Element v) { return v >= 0; });
  CHECK(maxm.combine(3, 5) == 5);
  CHECK(maxm.identity() == 0);
  CHECK_FALSE(maxm.finite());
  CHECK_THROWS_AS(maxm.carrier(), DomainError);
}

TEST_CASE("identity morphism fixes every element") {
  const MonoidMorphism id = MonoidMorphism::identity(Monoid::mod(3));
  CHECK(id.apply(2) == 2);
  CHECK(id.source() == id.target());
}

TEST_CASE("mod reduction wraps the additive monoids") {
  const MonoidMorphism theta =
      MonoidMorphism::mod_reduction(Monoid::nat_add(), 2);
  CHECK(theta.target() == Monoid::mod(2));
  CHECK(theta.apply(7) == 1);
  CHECK(theta.apply(4) == 0);

  const MonoidMorphism from_int =
      MonoidMorphism::mod_reduction(Monoid::int_add(), 3);
  CHECK(from_int.apply(-1) == 2);
  CHECK(from_int.apply(-6) == 0);
}

TEST_CASE("mod reduction between residues requires divisibility") {
  const MonoidMorphism theta =
      MonoidMorphism::mod_reduction(Monoid::mod(6), 3);
  CHECK(theta.apply(5) == 2);
  CHECK_THROWS_AS(MonoidMorphism::mod_reduction(Monoid::mod(6), 4),
                  DomainError);
  CHECK_THROWS_AS(MonoidMorphism::mod_reduction(Monoid::nat_add(), 0),
                  DomainError);
}

TEST_CASE("morphisms respect products on a window") {
  const MonoidMorphism theta =
      MonoidMorphism::mod_reduction(Monoid::nat_add(), 3);
  for (Element a = 0; a < 10; ++a) {
    for (Element b = 0; b < 10; ++b) {
      CHECK(theta.apply(a + b) ==
            theta.target().combine(theta.apply(a), theta.apply(b)));
    }
  }
}

TEST_CASE("table morphisms are validated exhaustively") {
  const Monoid b = Monoid::bool_mult();
  const Monoid trivial = Monoid::mod(1);
  const MonoidMorphism collapse =
      MonoidMorphism::table(b, trivial, {{0, 0}, {1, 0}});
  CHECK(collapse.apply(0) == 0);
  CHECK(collapse.apply(1) == 0);

  // missing an element of the carrier
  CHECK_THROWS_AS(MonoidMorphism::table(b, trivial, {{1, 0}}), DomainError);
  // sends the identity somewhere other than the identity
  CHECK_THROWS_AS(
      MonoidMorphism::table(b, Monoid::mod(2), {{0, 0}, {1, 1}}),
      DomainError);
  // preserves the identity but breaks the product law on 0*0
  CHECK_THROWS_AS(
      MonoidMorphism::table(b, Monoid::mod(2), {{0, 1}, {1, 0}}),
      DomainError);
  // infinite source has no checkable table
  CHECK_THROWS_AS(MonoidMorphism::table(Monoid::nat_add(), trivial, {}),
                  DomainError);
}

TEST_CASE("morphism application validates the source carrier") {
  const MonoidMorphism theta =
      MonoidMorphism::mod_reduction(Monoid::mod(4), 2);
  CHECK_THROWS_AS(theta.apply(4), DomainError);
  CHECK(apply_morphism(theta, 3) == 1);
}

}  // namespace
}  // namespace operadica
